#include "ifnas/interleave.hpp"

#include <json.hpp>

#include <algorithm>

namespace ifnas {

using nlohmann::json;

bool interleaves(const Connection& a, const Connection& b) {
  if (a.stage != b.stage)
    throw ValidationError("interleaves: connections in different stages: " + to_string(a) + " vs " +
                          to_string(b));
  if (a.is_backbone() || b.is_backbone()) return false;
  if (a.target == b.target) return false;
  // Open intervals (source, target) intersect, i.e. some d + 1/2 lies in both.
  return std::max(a.source, b.source) < std::min(a.target, b.target);
}

namespace {

InterleavePair make_pair_sorted(const Connection& a, const Connection& b) {
  return a < b ? InterleavePair{a, b} : InterleavePair{b, a};
}

std::vector<InterleavePair> sweep(const std::vector<Connection>& conns, bool same_target_exempt) {
  // Sort the non-backbone connections of each stage by source; for a pair
  // sorted that way the intervals intersect exactly when the later source
  // precedes the earlier target, so each inner scan stops at the first
  // non-overlap and only visits actual output pairs (plus same-target skips,
  // at most L per connection).
  std::vector<Connection> c;
  c.reserve(conns.size());
  for (const Connection& x : conns)
    if (!x.is_backbone()) c.push_back(x);
  std::sort(c.begin(), c.end(), [](const Connection& a, const Connection& b) {
    return std::tie(a.stage, a.source, a.target) < std::tie(b.stage, b.source, b.target);
  });
  std::vector<InterleavePair> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t k = i + 1; k < c.size(); ++k) {
      if (c[k].stage != c[i].stage || c[k].source >= c[i].target) break;
      if (same_target_exempt && c[k].target == c[i].target) continue;
      out.push_back(make_pair_sorted(c[i], c[k]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<InterleavePair> find_interleaved_pairs(const std::vector<Connection>& conns) {
  return sweep(conns, /*same_target_exempt=*/true);
}

std::vector<InterleavePair> find_interleaved_pairs_strict(const std::vector<Connection>& conns) {
  return sweep(conns, /*same_target_exempt=*/false);
}

int group_of(const Connection& c, int span) {
  if (c.is_backbone())
    throw ValidationError("group_of: backbone connection " + to_string(c) +
                          " belongs to every mask and has no group");
  if (span < 1) throw ValidationError("group_of: span must be >= 1");
  return (c.target - 1) % span + 1;
}

std::string PhaseLabel::str() const {
  switch (kind) {
    case PhaseKind::WarmUp: return "warmup";
    case PhaseKind::Group: return "group" + std::to_string(group);
    case PhaseKind::Probe: return "probe";
  }
  return "?";
}

bool SampleMask::contains(const Connection& c) const {
  return std::binary_search(active.begin(), active.end(), c);
}

SampleMask extract_subsupernet(const Supernet& net, int group) {
  if (group < 1 || group > net.spec().span)
    throw ValidationError("extract_subsupernet: group " + std::to_string(group) +
                          " outside 1.." + std::to_string(net.spec().span));
  SampleMask mask;
  mask.label = {PhaseKind::Group, group};
  for (const Connection& c : net.connections())
    if (c.is_backbone() || group_of(c, net.spec().span) == group) mask.active.push_back(c);
  std::sort(mask.active.begin(), mask.active.end());
  return mask;
}

SampleMask full_mask(const Supernet& net, PhaseLabel label) {
  SampleMask mask;
  mask.label = label;
  mask.active = net.connections();
  std::sort(mask.active.begin(), mask.active.end());
  return mask;
}

bool is_interleaving_free(const SampleMask& mask) {
  return find_interleaved_pairs(mask.active).empty();
}

Schedule make_schedule(int span, int iterations_per_step, int total_loops) {
  if (span < 1) throw ValidationError("make_schedule: span must be >= 1");
  if (iterations_per_step < 1) throw ValidationError("make_schedule: iterations_per_step must be >= 1");
  if (total_loops < 1) throw ValidationError("make_schedule: total_loops must be >= 1");
  Schedule sched;
  sched.span = span;
  for (int loop = 0; loop < total_loops; ++loop) {
    sched.phases.push_back({{PhaseKind::WarmUp, 0}, iterations_per_step});
    for (int g = 1; g <= span; ++g)
      sched.phases.push_back({{PhaseKind::Group, g}, iterations_per_step});
  }
  return sched;
}

SampleMask inject_interleaves(const Supernet& net, const SampleMask& mask, int count,
                              const std::vector<Connection>& candidates,
                              const std::vector<Connection>& preferred) {
  if (count < 0) throw ValidationError("inject_interleaves: count must be >= 0");
  SampleMask out = mask;
  if (count == 0) return out;

  auto interferes = [&](const Connection& c) {
    for (const Connection& cand : candidates)
      if (c.stage == cand.stage && interleaves(c, cand)) return true;
    return false;
  };

  std::vector<Connection> pool;
  for (const Connection& p : preferred) {
    if (net.connection_id(p.stage, p.source, p.target) < 0)
      throw ValidationError("inject_interleaves: preferred edge " + to_string(p) +
                            " is not in the supernet");
    pool.push_back(p);
  }
  for (const Connection& c : net.connections())
    if (interferes(c) && !out.contains(c) &&
        std::find(pool.begin(), pool.end(), c) == pool.end())
      pool.push_back(c);

  int added = 0;
  for (const Connection& c : pool) {
    if (added == count) break;
    if (out.contains(c) || !interferes(c)) continue;
    out.active.push_back(c);
    ++added;
  }
  if (added < count)
    throw InfeasibleInjectionError("inject_interleaves: only " + std::to_string(added) + " of " +
                                   std::to_string(count) +
                                   " feasible interfering connections exist");
  std::sort(out.active.begin(), out.active.end());
  out.label = {PhaseKind::Probe, 0};
  return out;
}

std::string mask_to_json(const SupernetSpec& spec, const SampleMask& mask) {
  json active = json::array();
  for (const Connection& c : mask.active) active.push_back({c.stage, c.source, c.target});
  json j = {{"format", "ifnas-mask"},
            {"version", 1},
            {"label", mask.label.str()},
            {"spec", json::parse(spec_to_json(spec))},
            {"active", active}};
  return j.dump(2) + "\n";
}

SampleMask mask_from_json(const std::string& text, SupernetSpec* spec_out) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("mask json: ") + e.what());
  }
  SampleMask mask;
  try {
    if (j.value("format", "") != "ifnas-mask")
      throw ParseError("mask json: missing or wrong \"format\" tag (want \"ifnas-mask\")");
    SupernetSpec spec = spec_from_json_text(j.at("spec").dump());
    const Supernet net(spec);
    const std::string label = j.value("label", "warmup");
    if (label == "warmup")
      mask.label = {PhaseKind::WarmUp, 0};
    else if (label == "probe")
      mask.label = {PhaseKind::Probe, 0};
    else if (label.rfind("group", 0) == 0)
      mask.label = {PhaseKind::Group, std::stoi(label.substr(5))};
    else
      throw ParseError("mask json: unknown label \"" + label + "\"");
    std::size_t idx = 0;
    for (const json& e : j.at("active")) {
      const std::string loc = "active[" + std::to_string(idx) + "]";
      if (!e.is_array() || e.size() != 3) throw ParseError(loc + ": expected [stage, source, target]");
      const int stage = e[0].get<int>(), src = e[1].get<int>(), tgt = e[2].get<int>();
      if (net.connection_id(stage, src, tgt) < 0)
        throw ParseError(loc + ": connection (" + std::to_string(src) + "," + std::to_string(tgt) +
                         ") out of range for stage " + std::to_string(stage));
      mask.active.push_back(Connection{stage, src, tgt});
      ++idx;
    }
    std::sort(mask.active.begin(), mask.active.end());
    if (spec_out) *spec_out = spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("mask json: ") + e.what());
  }
  return mask;
}

}  // namespace ifnas
