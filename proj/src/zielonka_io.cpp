#include "acdkit/zielonka_io.hpp"

#include <sstream>
#include <unordered_map>

#include "acdkit/error.hpp"

namespace acdkit {

using nlohmann::json;

namespace {

json node_list_json(const ColourAlphabet& g, std::size_t n,
                    const std::function<ColourSet(std::size_t)>& label,
                    const std::function<Polarity(std::size_t)>& polarity,
                    const std::function<const std::vector<std::size_t>&(std::size_t)>& children) {
  json nodes = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back({{"id", i},
                     {"label", g.names_of(label(i))},
                     {"polarity", to_string(polarity(i))},
                     {"children", children(i)}});
  }
  return nodes;
}

struct RawNode {
  ColourSet label;
  Polarity polarity;
  std::vector<std::size_t> children;
};

/// Reads the common node list, remapping ids so that the root comes first.
std::pair<ColourAlphabet, std::vector<RawNode>> read_nodes(const json& j, const char* kind) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  if (j.contains("kind") && j.at("kind") != kind) {
    throw DomainError(std::string("expected kind '") + kind + "'");
  }
  if (!j.contains("alphabet") || !j.at("alphabet").is_array()) {
    throw DomainError("missing 'alphabet' array");
  }
  std::vector<std::string> names;
  for (const auto& n : j.at("alphabet")) {
    if (!n.is_string()) throw DomainError("alphabet entries must be strings");
    names.push_back(n.get<std::string>());
  }
  ColourAlphabet g(std::move(names));
  if (!j.contains("nodes") || !j.at("nodes").is_array() || j.at("nodes").empty()) {
    throw DomainError("missing or empty 'nodes' array");
  }
  const json& list = j.at("nodes");
  std::vector<long long> ids;
  std::unordered_map<long long, std::size_t> position;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& n = list[i];
    long long id = static_cast<long long>(i);
    if (n.contains("id")) {
      if (!n.at("id").is_number_integer()) throw DomainError("node ids must be integers");
      id = n.at("id").get<long long>();
    }
    if (!position.emplace(id, i).second) throw DomainError("duplicate node id " + std::to_string(id));
    ids.push_back(id);
  }
  long long root = ids.front();
  if (j.contains("root")) {
    if (!j.at("root").is_number_integer()) throw DomainError("'root' must be an integer");
    root = j.at("root").get<long long>();
    if (!position.count(root)) throw DomainError("'root' names no node");
  }
  // Position of the root is swapped with position 0.
  const std::size_t root_pos = position.at(root);
  auto remap = [&](std::size_t pos) {
    if (pos == root_pos) return std::size_t{0};
    if (pos == 0) return root_pos;
    return pos;
  };
  std::vector<RawNode> out(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& n = list[i];
    RawNode r;
    if (!n.contains("label") || !n.at("label").is_array()) throw DomainError("node without 'label'");
    std::vector<std::string> lab;
    for (const auto& c : n.at("label")) {
      if (!c.is_string()) throw DomainError("label entries must be strings");
      lab.push_back(c.get<std::string>());
    }
    r.label = g.parse_set(lab);
    const json pol = n.value("polarity", json());
    if (pol == "round") {
      r.polarity = Polarity::round;
    } else if (pol == "square") {
      r.polarity = Polarity::square;
    } else {
      throw DomainError("node polarity must be 'round' or 'square'");
    }
    if (n.contains("children")) {
      for (const auto& c : n.at("children")) {
        if (!c.is_number_integer() || !position.count(c.get<long long>())) {
          throw DomainError("child reference names no node");
        }
        r.children.push_back(remap(position.at(c.get<long long>())));
      }
    }
    out[remap(i)] = std::move(r);
  }
  return {std::move(g), std::move(out)};
}

}  // namespace

json ztree_to_json(const ZTree& tree) {
  return {{"kind", "ztree"},
          {"alphabet", tree.alphabet().names()},
          {"root", 0},
          {"nodes", node_list_json(
                        tree.alphabet(), tree.size(), [&](std::size_t i) { return tree.node(i).label; },
                        [&](std::size_t i) { return tree.node(i).polarity; },
                        [&](std::size_t i) -> const std::vector<std::size_t>& {
                          return tree.node(i).children;
                        })}};
}

ZTree ztree_from_json(const json& j) {
  auto [g, raw] = read_nodes(j, "ztree");
  std::vector<ZNode> nodes;
  for (auto& r : raw) {
    ZNode n;
    n.label = r.label;
    n.polarity = r.polarity;
    n.children = std::move(r.children);
    nodes.push_back(std::move(n));
  }
  return ZTree(std::move(g), std::move(nodes));
}

json zdag_to_json(const ZDag& dag) {
  return {{"kind", "zdag"},
          {"alphabet", dag.alphabet().names()},
          {"root", 0},
          {"nodes", node_list_json(
                        dag.alphabet(), dag.size(), [&](std::size_t i) { return dag.node(i).label; },
                        [&](std::size_t i) { return dag.node(i).polarity; },
                        [&](std::size_t i) -> const std::vector<std::size_t>& {
                          return dag.node(i).children;
                        })}};
}

ZDag zdag_from_json(const json& j) {
  auto [g, raw] = read_nodes(j, "zdag");
  std::vector<ZDagNode> nodes;
  for (auto& r : raw) {
    ZDagNode n;
    n.label = r.label;
    n.polarity = r.polarity;
    n.children = std::move(r.children);
    nodes.push_back(std::move(n));
  }
  return ZDag(std::move(g), std::move(nodes));
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <typename Nodes>
std::string to_dot(const char* name, const ColourAlphabet& g, const Nodes& nodes) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(g.format(nodes[i].label)) << "\", shape="
        << (nodes[i].polarity == Polarity::round ? "ellipse" : "box") << "];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t c : nodes[i].children) out << "  n" << i << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string ztree_to_dot(const ZTree& tree) { return to_dot("ztree", tree.alphabet(), tree.nodes()); }

std::string zdag_to_dot(const ZDag& dag) { return to_dot("zdag", dag.alphabet(), dag.nodes()); }

}  // namespace acdkit
