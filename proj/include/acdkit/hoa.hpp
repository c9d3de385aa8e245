#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "acdkit/automaton.hpp"

namespace acdkit {

/// Reading and writing the supported subset of the HOA v1 format.
///
/// Accepted input:
///   * headers `HOA: v1`, `States:`, `Start:` (one state), `AP:`,
///     `Acceptance:`, `acc-name:`, and the ignorable headers `name:`,
///     `tool:`, `properties:` and any other header starting with a lowercase
///     letter; `Alias:` and other uppercase headers are rejected;
///   * explicit edge labels `[...]` built from AP numbers, `t`, `f`, `!`,
///     `&`, `|` and parentheses; every valuation satisfying a label yields one
///     edge; implicit labels, state labels and universal branching are
///     rejected;
///   * transition-based marks `{0 1}`; marks on a `State:` line are copied to
///     all outgoing edges of that state;
///   * acc-name `Buchi` (parity [0,1]), `co-Buchi` (parity [1,2]),
///     `parity min|max even|odd k` (min-even parity, priorities translated),
///     `Rabin n`, `Streett n`, `all` (parity [0,0]), `none` (parity [1,1]).
///     Parity-like formulas are checked semantically against the acc-name.
///     Rabin terms have the shape Fin(r1) & ... & (Inf(g1) | ...) and Streett
///     terms (Fin(g1) & ...) | Inf(r1) | ...; a conjunct `f` (Rabin) or a
///     disjunct `t` (Streett) stands for an empty green set;
///   * custom headers `acdkit-letters: "a" "b" ...` (letter names; letter i
///     is the valuation with binary value i), `acdkit-colours: ...` (names of
///     the acceptance sets) and `acdkit-priorities: pmin pmax`.
///
/// Unmarked edges receive an extra colour: the priority after the least
/// significant one for parity conditions, a fresh colour for Rabin and
/// Streett conditions. Muller conditions need a sidecar (family, Zielonka
/// tree or Zielonka DAG JSON, see conditions_io.hpp and zielonka_io.hpp); the
/// sidecar overrides any acc-name, and every edge must then be marked.
/// Without acdkit-letters the letters are the 2^|AP| valuations, named like
/// `p&!q` (`t` when there are no APs).
///
/// Syntax errors raise ParseError (line, column); valid but unsupported
/// constructs raise UnsupportedFeature with the offending token.
Automaton parse_hoa(const std::string& text,
                    const std::optional<nlohmann::json>& sidecar = std::nullopt);

/// Writes A in the subset above; parse_hoa(write_hoa(A), hoa_sidecar(A))
/// equals A. Muller conditions are written with an Emerson-Lei formula and
/// no acc-name.
std::string write_hoa(const Automaton& a);

/// The sidecar JSON a Muller automaton needs, or nullopt for other conditions.
std::optional<nlohmann::json> hoa_sidecar(const Automaton& a);

/// Acceptance from a sidecar document (family, ztree or zdag).
Acceptance acceptance_from_sidecar(const nlohmann::json& j);

}  // namespace acdkit
