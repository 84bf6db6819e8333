#pragma once

#include <string>
#include <vector>

#include "ifnas/space.hpp"

namespace ifnas {

// Two non-backbone connections in the same stage interleave when their open
// node-index intervals intersect. Pairs sharing a target node are exempt:
// without that rule every multi-input node would interleave with itself and
// no sampled mask could ever be interleaving-free.
bool interleaves(const Connection& a, const Connection& b);

struct InterleavePair {
  Connection first, second;  // first < second canonically
  friend auto operator<=>(const InterleavePair&, const InterleavePair&) = default;
};

// All interleaving pairs of a connection set, canonically sorted.
// Output-sensitive sweep over source-sorted connections; must match the
// quadratic scan exactly (tested against it).
std::vector<InterleavePair> find_interleaved_pairs(const std::vector<Connection>& conns);

// Variant without the same-target exemption, for the audit tool's stricter
// count.
std::vector<InterleavePair> find_interleaved_pairs_strict(const std::vector<Connection>& conns);

// Group of a non-backbone connection: 1-based target index modulo L.
// Backbone connections belong to every mask and have no group.
int group_of(const Connection& c, int span);

enum class PhaseKind { WarmUp, Group, Probe };

struct PhaseLabel {
  PhaseKind kind = PhaseKind::WarmUp;
  int group = 0;  // 1..L when kind == Group

  std::string str() const;
  friend auto operator<=>(const PhaseLabel&, const PhaseLabel&) = default;
};

// The set of connections active for one step of the schedule.
struct SampleMask {
  std::vector<Connection> active;  // canonically sorted
  PhaseLabel label;

  bool contains(const Connection& c) const;
};

// Backbone plus every non-backbone connection whose group is `group`.
// The result is always interleaving-free.
SampleMask extract_subsupernet(const Supernet& net, int group);

// All connections, used for warm-up steps and the no-IF baseline.
SampleMask full_mask(const Supernet& net, PhaseLabel label = {PhaseKind::WarmUp, 0});

bool is_interleaving_free(const SampleMask& mask);

struct Phase {
  PhaseLabel label;
  int iterations = 0;
};

// Periodic sampling plan: each loop is [WarmUp, Group(1), ..., Group(L)].
struct Schedule {
  int span = 0;
  std::vector<Phase> phases;
  int loop_length() const { return span + 1; }
};

Schedule make_schedule(int span, int iterations_per_step, int total_loops);

// Adds `count` connections, each interleaving with at least one candidate.
// `preferred` edges are tried first (in order); the remaining feasible
// connections of the candidates' stage follow in canonical order.
SampleMask inject_interleaves(const Supernet& net, const SampleMask& mask, int count,
                              const std::vector<Connection>& candidates,
                              const std::vector<Connection>& preferred = {});

std::string mask_to_json(const SupernetSpec& spec, const SampleMask& mask);
SampleMask mask_from_json(const std::string& text, SupernetSpec* spec_out = nullptr);

}  // namespace ifnas
