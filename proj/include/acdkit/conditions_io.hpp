#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "acdkit/conditions.hpp"

namespace acdkit {

/// JSON forms of conditions.
///
/// Family sidecar:
///   {"alphabet": ["a", "b", ...], "sets": [["a"], ["a", "b"], ...]}
/// `alphabet` lists the colour names in index order; each member of `sets`
/// lists colour names (any order, no duplicates). Written files list sets in
/// canonical family order and members in index order. An optional
/// `"kind": "family"` entry is accepted and written.
///
/// Rabin/Streett conditions:
///   {"kind": "rabin" | "streett", "alphabet": [...],
///    "pairs": [{"green": [...], "red": [...]}, ...]}
///
/// Parity conditions:
///   {"kind": "parity", "min": 0, "max": 2}
nlohmann::json family_to_json(const MullerFamily& family);
MullerFamily family_from_json(const nlohmann::json& j);

nlohmann::json rabin_to_json(const RabinCondition& cond);
RabinCondition rabin_from_json(const nlohmann::json& j);

nlohmann::json parity_to_json(const ParityCondition& cond);
ParityCondition parity_from_json(const nlohmann::json& j);

/// Parses JSON text, translating syntax errors into ParseError with line and
/// column.
nlohmann::json parse_json_text(const std::string& text);

/// Reads a whole file; throws DomainError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace acdkit
