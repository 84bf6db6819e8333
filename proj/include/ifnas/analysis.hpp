#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifnas/bigint.hpp"
#include "ifnas/space.hpp"

namespace ifnas {

// Which cardinality formula to evaluate. `Literal` is the canonical one
// (it reproduces the published complexity table):
//   (2^2-1) * (2^4-1) * ... * (2^(2(L-1))-1) * (2^(2L)-1)^(N-L)  per stage.
// `Prose` counts node by node instead, which yields one extra full factor
// per stage (exponent N-L+1).
enum class CountFormula { Literal, Prose };

struct ComplexityReport {
  BigUint exact_count;
  SciNotation sci;  // 2+ significant digits
  std::vector<BigUint> per_stage;
};

// Size of the search space. Requires N >= L for every stage.
ComplexityReport count_space(int span, const std::vector<int>& stage_node_counts,
                             CountFormula formula = CountFormula::Literal,
                             int significant_digits = 2);

// --- trajectory analytics ------------------------------------------------

struct TrajectoryPoint {
  long long iteration;
  int connection;  // connection id in the run's supernet
  double gate;
};

using TrajectoryLog = std::vector<TrajectoryPoint>;

struct CandidateSummary {
  int connection = -1;
  std::string name;
  double final_gate = 0.0;
  int final_rank = 0;                        // 1 = strongest
  std::optional<long long> dominance_onset;  // first iteration after which it stays rank 1
};

struct TrajectorySummary {
  std::vector<CandidateSummary> candidates;
  long long iterations = 0;
};

// Ranks the tracked candidates at every recorded iteration; requires every
// candidate to have a value at every iteration present in the log.
TrajectorySummary summarize_trajectories(const TrajectoryLog& log,
                                         const std::vector<int>& candidate_connections,
                                         const std::vector<std::string>& candidate_names);

std::string trajectories_to_csv(const TrajectoryLog& log,
                                const std::map<int, std::string>& connection_names);

struct DepthStats {
  double mean = 0.0;
  double spread = 0.0;  // sample standard deviation, 0 for a single element
  std::vector<int> values;
};

DepthStats depth_stats(const std::vector<DiscreteArchitecture>& archs);

}  // namespace ifnas
