#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ifnas/errors.hpp"
#include "ifnas/rng.hpp"

namespace ifnas {

// Candidate operators on an edge. Skip preserves the input exactly;
// SepConv3x3 and ToyLinear preserve (channels, spatial) within a stage.
enum class OperatorKind { SepConv3x3, Skip, ToyLinear };

const char* op_name(OperatorKind k);
std::optional<OperatorKind> op_from_name(const std::string& name);

struct StageSpec {
  int node_count = 0;    // searched nodes; node 0 is the stage input and not counted
  int channels = 0;
  int spatial = 1;       // square feature maps
  bool reduction_after = false;  // stride-2 transition into the next stage
};

// Static description of the macro search space: every layer may connect to
// its `span` nearest precursors within a stage.
struct SupernetSpec {
  int span = 4;  // L, the maximum connection length
  std::vector<StageSpec> stages;
  std::vector<OperatorKind> operator_set{OperatorKind::SepConv3x3, OperatorKind::Skip};
};

// Throws ValidationError naming the violated field.
void validate_spec(const SupernetSpec& spec);

// Directed edge inside a stage. Node indices are per stage: node 0 is the
// stage input, nodes 1..node_count are searched, node_count is the output.
struct Connection {
  int stage = 0;
  int source = 0;
  int target = 0;

  int length() const { return target - source; }
  bool is_backbone() const { return length() == 1; }

  // Canonical order (stage, target, source): fixes every downstream
  // iteration order and tie-break.
  friend auto operator<=>(const Connection&, const Connection&) = default;
};

std::string to_string(const Connection& c);

// Full connection inventory of a spec, canonically ordered, with id lookup.
class Supernet {
 public:
  explicit Supernet(SupernetSpec spec);

  const SupernetSpec& spec() const { return spec_; }
  const std::vector<Connection>& connections() const { return connections_; }
  int num_connections() const { return static_cast<int>(connections_.size()); }
  int num_operators() const { return static_cast<int>(spec_.operator_set.size()); }
  int num_pairs() const { return num_connections() * num_operators(); }

  const Connection& connection(int id) const { return connections_[static_cast<std::size_t>(id)]; }
  // -1 when no such connection exists.
  int connection_id(int stage, int source, int target) const;

  int pair_id(int conn_id, int op_index) const { return conn_id * num_operators() + op_index; }
  int pair_conn(int pair_id) const { return pair_id / num_operators(); }
  int pair_op(int pair_id) const { return pair_id % num_operators(); }

  // [first, last) range of connection ids belonging to a stage.
  std::pair<int, int> stage_range(int stage) const { return stage_ranges_[static_cast<std::size_t>(stage)]; }
  int num_stages() const { return static_cast<int>(spec_.stages.size()); }
  int output_node(int stage) const { return spec_.stages[static_cast<std::size_t>(stage)].node_count; }

 private:
  SupernetSpec spec_;
  std::vector<Connection> connections_;
  std::vector<std::pair<int, int>> stage_ranges_;
  std::vector<std::vector<int>> id_index_;  // per stage: (target * (N+1) + source) -> id
};

Supernet build_supernet(SupernetSpec spec);

struct AlivePair {
  Connection conn;
  OperatorKind op;
  friend auto operator<=>(const AlivePair&, const AlivePair&) = default;
};

// A fully discrete network: the surviving (connection, operator) pairs.
struct DiscreteArchitecture {
  SupernetSpec spec;
  std::set<AlivePair> alive;
};

struct Violation {
  std::string what;
  int stage = -1;
  int node = -1;
};

// Violations are data, not faults: an invalid architecture is a legal value.
std::vector<Violation> validate(const DiscreteArchitecture& arch);
bool is_valid(const DiscreteArchitecture& arch);

// Drops every pair whose source node is unreachable from the stage input.
// Removal cascades: a node with no remaining alive input loses its outgoing
// pairs as well.
void dead_node_cleanup(DiscreteArchitecture& arch);

struct RandomArchOptions {
  std::optional<long long> madds_budget;  // prune random pairs until met
  bool one_input_per_node = false;        // exactly one alive incoming pair per node
  int num_classes = 10;                   // head size for the madds accounting
};

DiscreteArchitecture random_architecture(const SupernetSpec& spec, std::uint64_t seed,
                                         const RandomArchOptions& opts = {});

// Sum over stages of the longest directed input->output path, in edges.
// Rejects invalid architectures.
int depth(const DiscreteArchitecture& arch);

// --- import/export -----------------------------------------------------

std::string arch_to_json(const DiscreteArchitecture& arch);
DiscreteArchitecture arch_from_json(const std::string& text);

std::string arch_to_dot(const DiscreteArchitecture& arch);
std::string supernet_to_dot(const Supernet& net);
std::string spec_to_json(const SupernetSpec& spec);
SupernetSpec spec_from_json_text(const std::string& text);

}  // namespace ifnas
