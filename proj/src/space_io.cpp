#include <json.hpp>
#include <sstream>

#include "ifnas/space.hpp"

namespace ifnas {

using nlohmann::json;

namespace {

json spec_to_json_obj(const SupernetSpec& spec) {
  json stages = json::array();
  for (const StageSpec& st : spec.stages)
    stages.push_back({{"nodes", st.node_count},
                      {"channels", st.channels},
                      {"spatial", st.spatial},
                      {"reduction_after", st.reduction_after}});
  json ops = json::array();
  for (OperatorKind k : spec.operator_set) ops.push_back(op_name(k));
  // node_convention records that node 0 is the stage input and is not
  // counted among the `nodes` searched nodes.
  return {{"L", spec.span},
          {"node_convention", "node0=stage_input"},
          {"stages", stages},
          {"operators", ops}};
}

SupernetSpec spec_from_json_obj(const json& j) {
  SupernetSpec spec;
  try {
    spec.span = j.at("L").get<int>();
    spec.stages.clear();
    int idx = 0;
    for (const json& st : j.at("stages")) {
      StageSpec s;
      s.node_count = st.at("nodes").get<int>();
      s.channels = st.at("channels").get<int>();
      s.spatial = st.at("spatial").get<int>();
      s.reduction_after = st.value("reduction_after", false);
      spec.stages.push_back(s);
      ++idx;
    }
    spec.operator_set.clear();
    for (const json& o : j.at("operators")) {
      auto kind = op_from_name(o.get<std::string>());
      if (!kind) throw ParseError("spec.operators: unknown operator \"" + o.get<std::string>() + "\"");
      spec.operator_set.push_back(*kind);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("spec: ") + e.what());
  }
  validate_spec(spec);
  return spec;
}

}  // namespace

std::string spec_to_json(const SupernetSpec& spec) { return spec_to_json_obj(spec).dump(2); }

SupernetSpec spec_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec json: ") + e.what());
  }
  return spec_from_json_obj(j);
}

std::string arch_to_json(const DiscreteArchitecture& arch) {
  json alive = json::array();
  for (const AlivePair& p : arch.alive)  // std::set: canonical order
    alive.push_back({p.conn.stage, p.conn.source, p.conn.target, op_name(p.op)});
  json j = {{"format", "ifnas-arch"},
            {"version", 1},
            {"spec", spec_to_json_obj(arch.spec)},
            {"alive", alive}};
  return j.dump(2) + "\n";
}

DiscreteArchitecture arch_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("arch json: ") + e.what());
  }
  DiscreteArchitecture arch;
  try {
    if (j.value("format", "") != "ifnas-arch")
      throw ParseError("arch json: missing or wrong \"format\" tag (want \"ifnas-arch\")");
    if (j.value("version", 0) != 1)
      throw ParseError("arch json: unsupported version " + std::to_string(j.value("version", 0)));
    arch.spec = spec_from_json_obj(j.at("spec"));
    const Supernet net(arch.spec);
    std::size_t idx = 0;
    for (const json& e : j.at("alive")) {
      const std::string loc = "alive[" + std::to_string(idx) + "]";
      if (!e.is_array() || e.size() != 4)
        throw ParseError(loc + ": expected [stage, source, target, op]");
      const int stage = e[0].get<int>();
      const int src = e[1].get<int>();
      const int tgt = e[2].get<int>();
      const std::string opn = e[3].get<std::string>();
      auto kind = op_from_name(opn);
      if (!kind) throw ParseError(loc + ": unknown operator \"" + opn + "\"");
      bool listed = false;
      for (OperatorKind k : arch.spec.operator_set) listed |= (k == *kind);
      if (!listed) throw ParseError(loc + ": operator \"" + opn + "\" not in the spec operator set");
      if (net.connection_id(stage, src, tgt) < 0)
        throw ParseError(loc + ": connection (" + std::to_string(src) + "," + std::to_string(tgt) +
                         ") out of range for stage " + std::to_string(stage));
      arch.alive.insert({Connection{stage, src, tgt}, *kind});
      ++idx;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("arch json: ") + e.what());
  }
  return arch;
}

namespace {

void dot_header(std::ostringstream& os) {
  os << "digraph ifnas {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
}

void dot_stage_nodes(std::ostringstream& os, int stage, int nodes) {
  os << "  subgraph cluster_stage" << stage << " {\n    label=\"stage " << stage << "\";\n";
  for (int j = 0; j <= nodes; ++j) {
    os << "    s" << stage << "n" << j << " [label=\"" << j << "\"";
    if (j == 0) os << ", style=filled, fillcolor=lightgrey";
    os << "];\n";
  }
  os << "  }\n";
}

}  // namespace

std::string arch_to_dot(const DiscreteArchitecture& arch) {
  std::ostringstream os;
  dot_header(os);
  for (int s = 0; s < static_cast<int>(arch.spec.stages.size()); ++s)
    dot_stage_nodes(os, s, arch.spec.stages[static_cast<std::size_t>(s)].node_count);
  for (const AlivePair& p : arch.alive)
    os << "  s" << p.conn.stage << "n" << p.conn.source << " -> s" << p.conn.stage << "n"
       << p.conn.target << " [label=\"" << op_name(p.op) << "\"];\n";
  for (int s = 0; s + 1 < static_cast<int>(arch.spec.stages.size()); ++s)
    os << "  s" << s << "n" << arch.spec.stages[static_cast<std::size_t>(s)].node_count << " -> s"
       << (s + 1) << "n0 [style=dashed, label=\"transition\"];\n";
  os << "}\n";
  return os.str();
}

std::string supernet_to_dot(const Supernet& net) {
  std::ostringstream os;
  dot_header(os);
  for (int s = 0; s < net.num_stages(); ++s)
    dot_stage_nodes(os, s, net.spec().stages[static_cast<std::size_t>(s)].node_count);
  for (const Connection& c : net.connections())
    os << "  s" << c.stage << "n" << c.source << " -> s" << c.stage << "n" << c.target << ";\n";
  for (int s = 0; s + 1 < net.num_stages(); ++s)
    os << "  s" << s << "n" << net.spec().stages[static_cast<std::size_t>(s)].node_count << " -> s"
       << (s + 1) << "n0 [style=dashed, label=\"transition\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ifnas
