#include "ifnas/space.hpp"

#include <algorithm>
#include <map>

#include "ifnas/cost.hpp"

namespace ifnas {

const char* op_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::SepConv3x3: return "sep_conv_3x3";
    case OperatorKind::Skip: return "skip";
    case OperatorKind::ToyLinear: return "toy_linear";
  }
  return "?";
}

std::optional<OperatorKind> op_from_name(const std::string& name) {
  if (name == "sep_conv_3x3") return OperatorKind::SepConv3x3;
  if (name == "skip") return OperatorKind::Skip;
  if (name == "toy_linear") return OperatorKind::ToyLinear;
  return std::nullopt;
}

void validate_spec(const SupernetSpec& spec) {
  if (spec.span < 1) throw ValidationError("spec.span: must be >= 1, got " + std::to_string(spec.span));
  if (spec.stages.empty()) throw ValidationError("spec.stages: must not be empty");
  for (std::size_t s = 0; s < spec.stages.size(); ++s) {
    const StageSpec& st = spec.stages[s];
    const std::string p = "spec.stages[" + std::to_string(s) + "].";
    if (st.node_count < 1) throw ValidationError(p + "node_count: must be >= 1, got " + std::to_string(st.node_count));
    if (st.channels < 1) throw ValidationError(p + "channels: must be >= 1, got " + std::to_string(st.channels));
    if (st.spatial < 1) throw ValidationError(p + "spatial: must be >= 1, got " + std::to_string(st.spatial));
  }
  if (spec.operator_set.empty()) throw ValidationError("spec.operator_set: must not be empty");
  for (std::size_t i = 0; i < spec.operator_set.size(); ++i)
    for (std::size_t j = i + 1; j < spec.operator_set.size(); ++j)
      if (spec.operator_set[i] == spec.operator_set[j])
        throw ValidationError(std::string("spec.operator_set: duplicate entry ") + op_name(spec.operator_set[i]));
}

std::string to_string(const Connection& c) {
  return "s" + std::to_string(c.stage) + ":(" + std::to_string(c.source) + "," +
         std::to_string(c.target) + ")";
}

Supernet::Supernet(SupernetSpec spec) : spec_(std::move(spec)) {
  validate_spec(spec_);
  for (int s = 0; s < static_cast<int>(spec_.stages.size()); ++s) {
    const int first = static_cast<int>(connections_.size());
    const int n = spec_.stages[static_cast<std::size_t>(s)].node_count;
    // (stage, target, source) ascending
    for (int j = 1; j <= n; ++j)
      for (int i = std::max(0, j - spec_.span); i < j; ++i)
        connections_.push_back(Connection{s, i, j});
    stage_ranges_.emplace_back(first, static_cast<int>(connections_.size()));
    id_index_.emplace_back(static_cast<std::size_t>(n + 1) * (n + 1), -1);
    for (int id = first; id < static_cast<int>(connections_.size()); ++id) {
      const Connection& c = connections_[static_cast<std::size_t>(id)];
      id_index_.back()[static_cast<std::size_t>(c.target) * (n + 1) + c.source] = id;
    }
  }
}

int Supernet::connection_id(int stage, int source, int target) const {
  if (stage < 0 || stage >= num_stages()) return -1;
  const int n = spec_.stages[static_cast<std::size_t>(stage)].node_count;
  if (source < 0 || target < 1 || source >= target || target > n) return -1;
  return id_index_[static_cast<std::size_t>(stage)][static_cast<std::size_t>(target) * (n + 1) + source];
}

Supernet build_supernet(SupernetSpec spec) { return Supernet(std::move(spec)); }

namespace {

// Per-stage incoming/outgoing pair counts and edge sets.
struct StageView {
  int stage;
  int nodes;  // searched node count; node indices run 0..nodes
  std::vector<std::vector<int>> in_sources;   // per node: alive edge sources (deduped)
  std::vector<int> in_pairs;                  // alive incoming pair count per node
  std::vector<bool> has_out;
};

std::vector<StageView> stage_views(const DiscreteArchitecture& arch) {
  std::vector<StageView> views;
  for (int s = 0; s < static_cast<int>(arch.spec.stages.size()); ++s) {
    StageView v;
    v.stage = s;
    v.nodes = arch.spec.stages[static_cast<std::size_t>(s)].node_count;
    v.in_sources.assign(static_cast<std::size_t>(v.nodes) + 1, {});
    v.in_pairs.assign(static_cast<std::size_t>(v.nodes) + 1, 0);
    v.has_out.assign(static_cast<std::size_t>(v.nodes) + 1, false);
    views.push_back(std::move(v));
  }
  for (const AlivePair& p : arch.alive) {
    StageView& v = views[static_cast<std::size_t>(p.conn.stage)];
    auto& src = v.in_sources[static_cast<std::size_t>(p.conn.target)];
    if (src.empty() || src.back() != p.conn.source) src.push_back(p.conn.source);
    v.in_pairs[static_cast<std::size_t>(p.conn.target)]++;
    v.has_out[static_cast<std::size_t>(p.conn.source)] = true;
  }
  return views;
}

std::vector<bool> reachable_from_input(const StageView& v) {
  std::vector<bool> reach(static_cast<std::size_t>(v.nodes) + 1, false);
  reach[0] = true;
  for (int j = 1; j <= v.nodes; ++j)
    for (int i : v.in_sources[static_cast<std::size_t>(j)])
      if (reach[static_cast<std::size_t>(i)]) {
        reach[static_cast<std::size_t>(j)] = true;
        break;
      }
  return reach;
}

}  // namespace

std::vector<Violation> validate(const DiscreteArchitecture& arch) {
  validate_spec(arch.spec);
  std::vector<Violation> out;
  const int max_pairs = 2 * arch.spec.span;
  for (const AlivePair& p : arch.alive) {
    if (p.conn.stage < 0 || p.conn.stage >= static_cast<int>(arch.spec.stages.size())) {
      out.push_back({"pair references stage out of range: " + to_string(p.conn), p.conn.stage, -1});
      return out;
    }
    const int n = arch.spec.stages[static_cast<std::size_t>(p.conn.stage)].node_count;
    if (p.conn.source < 0 || p.conn.target < 1 || p.conn.target > n ||
        p.conn.length() < 1 || p.conn.length() > arch.spec.span) {
      out.push_back({"pair references invalid connection: " + to_string(p.conn), p.conn.stage, p.conn.target});
      return out;
    }
  }
  for (const StageView& v : stage_views(arch)) {
    for (int j = 1; j <= v.nodes; ++j) {
      if (v.has_out[static_cast<std::size_t>(j)] && v.in_pairs[static_cast<std::size_t>(j)] == 0)
        out.push_back({"node feeds an alive pair but has no alive input", v.stage, j});
      if (v.in_pairs[static_cast<std::size_t>(j)] > max_pairs)
        out.push_back({"node exceeds " + std::to_string(max_pairs) + " alive incoming pairs", v.stage, j});
    }
    if (v.in_pairs[static_cast<std::size_t>(v.nodes)] == 0) {
      out.push_back({"stage output disconnected: no alive incoming pair", v.stage, v.nodes});
    } else if (!reachable_from_input(v)[static_cast<std::size_t>(v.nodes)]) {
      out.push_back({"stage output unreachable from stage input", v.stage, v.nodes});
    }
  }
  return out;
}

bool is_valid(const DiscreteArchitecture& arch) { return validate(arch).empty(); }

void dead_node_cleanup(DiscreteArchitecture& arch) {
  // Keep only pairs whose source is reachable from node 0. Dropping a pair
  // can only remove reachability, never add it, so one pass per stage with
  // forward node order settles it.
  auto views = stage_views(arch);
  std::set<AlivePair> kept;
  std::vector<std::vector<bool>> reach;
  reach.reserve(views.size());
  for (const StageView& v : views) reach.push_back(reachable_from_input(v));
  for (const AlivePair& p : arch.alive)
    if (reach[static_cast<std::size_t>(p.conn.stage)][static_cast<std::size_t>(p.conn.source)])
      kept.insert(p);
  arch.alive = std::move(kept);
}

DiscreteArchitecture random_architecture(const SupernetSpec& spec, std::uint64_t seed,
                                         const RandomArchOptions& opts) {
  Supernet net(spec);
  if (opts.one_input_per_node && opts.madds_budget)
    throw ValidationError("random_architecture: one_input_per_node and madds_budget are mutually exclusive");
  Rng rng(seed);
  DiscreteArchitecture arch{net.spec(), {}};
  const auto& ops = net.spec().operator_set;

  if (opts.one_input_per_node) {
    for (int s = 0; s < net.num_stages(); ++s) {
      const int n = net.spec().stages[static_cast<std::size_t>(s)].node_count;
      for (int j = 1; j <= n; ++j) {
        const int lo = std::max(0, j - net.spec().span);
        const int src = rng.range(lo, j - 1);
        const OperatorKind op = ops[rng.below(ops.size())];
        arch.alive.insert({Connection{s, src, j}, op});
      }
    }
    return arch;  // chained to node 0 by construction
  }

  for (const Connection& c : net.connections())
    for (OperatorKind op : ops)
      if (rng.coin()) arch.alive.insert({c, op});
  dead_node_cleanup(arch);

  // Backbone repair: walk back from each disconnected stage output along
  // pre-1 edges until an already-reachable node (or node 0) is hit.
  for (int s = 0; s < net.num_stages(); ++s) {
    auto views = stage_views(arch);
    const StageView& v = views[static_cast<std::size_t>(s)];
    auto reach = reachable_from_input(v);
    int j = v.nodes;
    while (j > 0 && !reach[static_cast<std::size_t>(j)]) {
      arch.alive.insert({Connection{s, j - 1, j}, ops[rng.below(ops.size())]});
      --j;
    }
  }

  if (opts.madds_budget) prune_to_budget(arch, *opts.madds_budget, opts.num_classes, rng);
  return arch;
}

int depth(const DiscreteArchitecture& arch) {
  auto violations = validate(arch);
  if (!violations.empty())
    throw ValidationError("depth: invalid architecture: " + violations.front().what);
  int total = 0;
  for (const StageView& v : stage_views(arch)) {
    std::vector<int> dist(static_cast<std::size_t>(v.nodes) + 1, -1);
    dist[0] = 0;
    for (int j = 1; j <= v.nodes; ++j)
      for (int i : v.in_sources[static_cast<std::size_t>(j)])
        if (dist[static_cast<std::size_t>(i)] >= 0)
          dist[static_cast<std::size_t>(j)] =
              std::max(dist[static_cast<std::size_t>(j)], dist[static_cast<std::size_t>(i)] + 1);
    total += dist[static_cast<std::size_t>(v.nodes)];
  }
  return total;
}

}  // namespace ifnas
