#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "acdkit/zielonka.hpp"

namespace acdkit {

/// JSON form of Zielonka trees and DAGs (schemas in docs/schemas/):
///
///   {"kind": "ztree" | "zdag",
///    "alphabet": ["a", "b", ...],
///    "root": 0,
///    "nodes": [{"id": 0, "label": ["a", "b"], "polarity": "round" | "square",
///               "children": [1, 2]}, ...]}
///
/// Written files number nodes 0..n-1 in the library's order with the root
/// first. When reading, `id` defaults to the position in `nodes` and `root`
/// to the first node; ids only need to be distinct.
nlohmann::json ztree_to_json(const ZTree& tree);
ZTree ztree_from_json(const nlohmann::json& j);

nlohmann::json zdag_to_json(const ZDag& dag);
ZDag zdag_from_json(const nlohmann::json& j);

/// Graphviz rendering: round nodes are ellipses, square nodes boxes.
std::string ztree_to_dot(const ZTree& tree);
std::string zdag_to_dot(const ZDag& dag);

}  // namespace acdkit
