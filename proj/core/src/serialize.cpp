#include "happy/serialize.hpp"

#include <json.hpp>

#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

namespace happy {
namespace {

using Json = nlohmann::ordered_json;

Json big_to_json(const BigInt& n) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
  return n.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t at = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (at == s.size()) throw std::invalid_argument("integer field: '" + s + "'");
    for (; at < s.size(); ++at)
      if (!std::isdigit(static_cast<unsigned char>(s[at])))
        throw std::invalid_argument("integer field: '" + s + "'");
    return BigInt(s);
  }
  throw std::invalid_argument("integer field: expected a number or decimal string");
}

const Json& require(const Json& doc, const char* key) {
  const auto at = doc.find(key);
  if (at == doc.end())
    throw std::invalid_argument(std::string("missing field: ") + key);
  return *at;
}

Json node_to_json(const TreeNode& node) {
  Json jn;
  jn["n"] = node.value;
  jn["level"] = node.level;
  if (node.parent >= 0) {
    jn["parent"] = node.parent;
    jn["edge_label"] = node.edge_label;
  } else {
    jn["parent"] = nullptr;
    jn["edge_label"] = nullptr;
  }
  return jn;
}

// Reads one node and hooks it into the children list of its (earlier) parent.
template <typename Graphish>
void read_node(const Json& jn, Graphish& out) {
  TreeNode node{require(jn, "n").template get<std::int64_t>(),
                require(jn, "level").template get<int>(), -1, 0, {}};
  const Json& parent = require(jn, "parent");
  const Json& label = require(jn, "edge_label");
  if (!parent.is_null()) {
    node.parent = parent.template get<std::int64_t>();
    node.edge_label = label.template get<int>();
    const auto at = out.index.find(node.parent);
    if (at == out.index.end())
      throw std::invalid_argument("node list: child precedes its parent");
    out.nodes[at->second].children.push_back(node.value);
  } else if (!label.is_null()) {
    throw std::invalid_argument("node list: parentless node cannot carry an edge label");
  }
  if (!out.index.emplace(node.value, out.nodes.size()).second)
    throw std::invalid_argument("node list: duplicate vertex");
  out.nodes.push_back(std::move(node));
}

std::string vertex_name(std::int64_t value) { return std::to_string(value); }

void write_vertices(std::ostringstream& os, const std::vector<TreeNode>& nodes, int base,
                    const DotOptions& options) {
  for (const TreeNode& node : nodes) {
    os << "  " << vertex_name(node.value);
    if (options.tuple_labels)
      os << " [label=\"" << tuple_notation(BigInt(node.value), base, options.hex_digits)
         << "\"]";
    os << ";\n";
  }
}

}  // namespace

std::string orbit_to_json(const OrbitReport& report) {
  Json doc;
  doc["start"] = big_to_json(report.start);
  doc["e"] = report.params.exponent;
  doc["b"] = report.params.base;
  Json iterates = Json::array();
  for (const BigInt& x : report.iterates) iterates.push_back(big_to_json(x));
  doc["iterates"] = std::move(iterates);
  doc["classification"] =
      report.classification == Classification::Happy ? "happy" : "unhappy";
  doc["height"] = report.height;
  if (report.cycle) {
    Json members = Json::array();
    for (const BigInt& x : report.cycle->members) members.push_back(big_to_json(x));
    doc["cycle"] = std::move(members);
  }
  return doc.dump(2) + "\n";
}

OrbitReport orbit_from_json(const std::string& text) {
  try {
    const Json doc = Json::parse(text);
    const Params params(require(doc, "e").get<int>(), require(doc, "b").get<int>());
    OrbitReport report{params, big_from_json(require(doc, "start")), {},
                       Classification::Happy, std::nullopt, 0};
    for (const Json& j : require(doc, "iterates"))
      report.iterates.push_back(big_from_json(j));
    const std::string classification =
        require(doc, "classification").get<std::string>();
    if (classification == "unhappy")
      report.classification = Classification::Unhappy;
    else if (classification != "happy")
      throw std::invalid_argument("classification: '" + classification + "'");
    report.height = require(doc, "height").get<std::size_t>();
    if (doc.contains("cycle")) {
      Cycle cycle;
      for (const Json& j : doc["cycle"]) cycle.members.push_back(big_from_json(j));
      report.cycle = std::move(cycle);
    }
    if ((report.classification == Classification::Unhappy) != report.cycle.has_value())
      throw std::invalid_argument("cycle field must accompany exactly the unhappy case");
    return report;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("orbit document: ") + e.what());
  }
}

std::string tree_to_json(const HappyTree& tree) {
  Json doc;
  doc["e"] = tree.params.exponent;
  doc["b"] = tree.params.base;
  doc["k"] = tree.max_digits;
  Json nodes = Json::array();
  for (const TreeNode& node : tree.nodes) nodes.push_back(node_to_json(node));
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

HappyTree tree_from_json(const std::string& text) {
  try {
    const Json doc = Json::parse(text);
    HappyTree tree{Params(require(doc, "e").get<int>(), require(doc, "b").get<int>()),
                   require(doc, "k").get<int>(), {}, {}};
    for (const Json& jn : require(doc, "nodes")) read_node(jn, tree);
    if (tree.nodes.empty() || tree.nodes.front().value != 1 ||
        tree.nodes.front().parent != -1)
      throw std::invalid_argument("tree document: first node must be the root 1");
    return tree;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("tree document: ") + e.what());
  }
}

std::string cycles_to_json(const std::vector<Cycle>& cycles) {
  Json doc = Json::array();
  for (const Cycle& cycle : cycles) {
    Json members = Json::array();
    for (const BigInt& m : cycle.members) members.push_back(big_to_json(m));
    Json entry;
    entry["members"] = std::move(members);
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::vector<Cycle> cycles_from_json(const std::string& text) {
  try {
    const Json doc = Json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("cycle list: expected an array");
    std::vector<Cycle> cycles;
    for (const Json& entry : doc) {
      Cycle cycle;
      for (const Json& j : require(entry, "members"))
        cycle.members.push_back(big_from_json(j));
      if (cycle.members.empty()) throw std::invalid_argument("cycle list: empty cycle");
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("cycle list: ") + e.what());
  }
}

std::string cycle_graph_to_json(const CycleGraph& graph) {
  Json doc;
  doc["e"] = graph.params.exponent;
  doc["b"] = graph.params.base;
  doc["k"] = graph.max_digits;
  Json members = Json::array();
  for (const BigInt& m : graph.cycle.members) members.push_back(big_to_json(m));
  doc["cycle"] = std::move(members);
  Json nodes = Json::array();
  for (const TreeNode& node : graph.nodes) nodes.push_back(node_to_json(node));
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

CycleGraph cycle_graph_from_json(const std::string& text) {
  try {
    const Json doc = Json::parse(text);
    CycleGraph graph{Params(require(doc, "e").get<int>(), require(doc, "b").get<int>()),
                     require(doc, "k").get<int>(),
                     {},
                     {},
                     {}};
    for (const Json& j : require(doc, "cycle"))
      graph.cycle.members.push_back(big_from_json(j));
    if (graph.cycle.members.empty())
      throw std::invalid_argument("cycle graph document: empty cycle");
    for (const Json& jn : require(doc, "nodes")) read_node(jn, graph);
    if (graph.nodes.size() < graph.cycle.members.size())
      throw std::invalid_argument("cycle graph document: fewer nodes than cycle members");
    for (std::size_t i = 0; i < graph.cycle.members.size(); ++i)
      if (graph.cycle.members[i] != graph.nodes[i].value || graph.nodes[i].parent != -1)
        throw std::invalid_argument("cycle graph document: nodes must open with the cycle");
    return graph;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("cycle graph document: ") + e.what());
  }
}

std::string tree_to_dot(const HappyTree& tree, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph happy_tree {\n";
  write_vertices(os, tree.nodes, tree.params.base, options);
  for (const TreeNode& node : tree.nodes)
    if (node.parent >= 0)
      os << "  " << vertex_name(node.value) << " -> " << vertex_name(node.parent)
         << " [label=" << node.edge_label << "];\n";
  os << "}\n";
  return os.str();
}

std::string cycle_graph_to_dot(const CycleGraph& graph, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph cycle_graph {\n";
  write_vertices(os, graph.nodes, graph.params.base, options);
  const std::size_t length = graph.cycle.members.size();
  for (std::size_t i = 0; i < length; ++i)
    os << "  " << graph.cycle.members[i].str() << " -> "
       << graph.cycle.members[(i + 1) % length].str() << " [style=bold, color=red];\n";
  for (const TreeNode& node : graph.nodes)
    if (node.parent >= 0)
      os << "  " << vertex_name(node.value) << " -> " << vertex_name(node.parent)
         << " [label=" << node.edge_label << "];\n";
  os << "}\n";
  return os.str();
}

std::string tuple_notation(const BigInt& n, int base, bool hex_digits) {
  const Numeral numeral = to_digits(n, base);
  std::ostringstream os;
  os << '(';
  if (hex_digits && base == 16) {
    for (int d : numeral.digits) os << "0123456789ABCDEF"[d];
  } else {
    for (std::size_t i = 0; i < numeral.digits.size(); ++i) {
      if (i) os << ',';
      os << numeral.digits[i];
    }
  }
  os << ")_" << base;
  return os.str();
}

std::string run_notation(const BigInt& n, int base) {
  const Numeral numeral = to_digits(n, base);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < numeral.digits.size();) {
    std::size_t j = i;
    while (j < numeral.digits.size() && numeral.digits[j] == numeral.digits[i]) ++j;
    if (i) os << ',';
    os << numeral.digits[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ")_" << base;
  return os.str();
}

}  // namespace happy
