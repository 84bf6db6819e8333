#include "ifnas/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ifnas {

ComplexityReport count_space(int span, const std::vector<int>& stage_node_counts,
                             CountFormula formula, int significant_digits) {
  if (span < 1) throw ValidationError("count_space: L must be >= 1");
  if (span > 16) throw ValidationError("count_space: L > 16 not supported");
  if (stage_node_counts.empty()) throw ValidationError("count_space: need at least one stage");
  ComplexityReport report;
  report.exact_count = BigUint(1);
  for (int n : stage_node_counts) {
    if (n < span)
      throw ValidationError("count_space: stage node count " + std::to_string(n) +
                            " is below L=" + std::to_string(span));
    BigUint stage(1);
    // Head factors: nodes with fewer than L precursors.
    for (int l = 1; l <= span - 1; ++l) stage.mul_small((1ull << (2 * l)) - 1);
    const std::uint64_t full = (1ull << (2 * span)) - 1;
    const int tail = (formula == CountFormula::Literal) ? (n - span) : (n - span + 1);
    stage = stage * BigUint::pow(full, tail);
    report.per_stage.push_back(stage);
    report.exact_count = report.exact_count * stage;
  }
  report.sci = to_scientific(report.exact_count, significant_digits);
  return report;
}

TrajectorySummary summarize_trajectories(const TrajectoryLog& log,
                                         const std::vector<int>& candidate_connections,
                                         const std::vector<std::string>& candidate_names) {
  if (candidate_names.size() != candidate_connections.size())
    throw ValidationError("summarize_trajectories: names/connections size mismatch");
  const std::size_t k = candidate_connections.size();
  if (k == 0) throw ValidationError("summarize_trajectories: no candidates given");

  // iteration -> gate per candidate
  std::map<long long, std::vector<double>> series;
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[candidate_connections[i]] = i;
  for (const TrajectoryPoint& p : log) {
    auto it = index.find(p.connection);
    if (it == index.end()) continue;
    auto& row = series[p.iteration];
    if (row.empty()) row.assign(k, std::nan(""));
    row[it->second] = p.gate;
  }
  if (series.empty()) throw ValidationError("summarize_trajectories: log has no candidate data");
  for (const auto& [iter, row] : series)
    for (std::size_t i = 0; i < k; ++i)
      if (std::isnan(row[i]))
        throw ValidationError("summarize_trajectories: candidate " + candidate_names[i] +
                              " missing at iteration " + std::to_string(iter));

  TrajectorySummary out;
  out.iterations = static_cast<long long>(series.size());
  out.candidates.resize(k);

  // rank per step: 1 + number of strictly larger gates; ties broken by
  // candidate order (earlier candidate ranks higher)
  auto ranks_at = [&](const std::vector<double>& row) {
    std::vector<int> rank(k, 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        if (row[j] > row[i] || (row[j] == row[i] && j < i)) rank[i]++;
      }
    return rank;
  };

  std::vector<std::optional<long long>> last_not_rank1(k);
  std::vector<bool> ever_not_rank1(k, false);
  std::vector<int> final_rank(k, 0);
  double final_gate = 0.0;
  (void)final_gate;
  for (const auto& [iter, row] : series) {
    const std::vector<int> rank = ranks_at(row);
    for (std::size_t i = 0; i < k; ++i) {
      if (rank[i] != 1) {
        last_not_rank1[i] = iter;
        ever_not_rank1[i] = true;
      }
      final_rank[i] = rank[i];
      out.candidates[i].final_gate = row[i];
    }
  }
  const long long first_iter = series.begin()->first;
  for (std::size_t i = 0; i < k; ++i) {
    CandidateSummary& c = out.candidates[i];
    c.connection = candidate_connections[i];
    c.name = candidate_names[i];
    c.final_rank = final_rank[i];
    if (c.final_rank == 1) {
      if (!ever_not_rank1[i]) {
        c.dominance_onset = first_iter;  // rank 1 from the start
      } else {
        // first recorded iteration after the last time it was not rank 1
        auto it = series.upper_bound(*last_not_rank1[i]);
        c.dominance_onset = it->first;
      }
    }
  }
  return out;
}

std::string trajectories_to_csv(const TrajectoryLog& log,
                                const std::map<int, std::string>& connection_names) {
  std::ostringstream os;
  os << "iteration,connection,gate\n";
  os.precision(17);
  for (const TrajectoryPoint& p : log) {
    auto it = connection_names.find(p.connection);
    os << p.iteration << ',' << (it != connection_names.end() ? it->second : std::to_string(p.connection))
       << ',' << p.gate << '\n';
  }
  return os.str();
}

DepthStats depth_stats(const std::vector<DiscreteArchitecture>& archs) {
  if (archs.empty()) throw ValidationError("depth_stats: empty architecture set");
  DepthStats out;
  for (const DiscreteArchitecture& a : archs) out.values.push_back(depth(a));
  double sum = 0.0;
  for (int v : out.values) sum += v;
  out.mean = sum / static_cast<double>(out.values.size());
  if (out.values.size() > 1) {
    double ss = 0.0;
    for (int v : out.values) ss += (v - out.mean) * (v - out.mean);
    out.spread = std::sqrt(ss / static_cast<double>(out.values.size() - 1));
  }
  return out;
}

}  // namespace ifnas
