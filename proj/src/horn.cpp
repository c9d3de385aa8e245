#include "acdkit/horn.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "acdkit/cycles.hpp"
#include "acdkit/error.hpp"
#include "acdkit/minimise.hpp"

namespace acdkit {

GHClause GHClause::implication(ColourSet premises, ColourSet conclusions) {
  if (conclusions.empty()) throw DomainError("a positive GH clause needs at least one conclusion");
  return GHClause{premises, conclusions, false};
}

GHClause GHClause::bottom(ColourSet premises) { return GHClause{premises, ColourSet(), true}; }

GHFormula::GHFormula(ColourAlphabet variables, std::vector<GHClause> clauses)
    : variables_(std::move(variables)), clauses_(std::move(clauses)) {
  for (auto& c : clauses_) {
    require_in_alphabet(variables_, c.premises, "GH clause premises");
    if (c.negative) {
      c.conclusions = ColourSet();
    } else {
      if (c.conclusions.empty()) throw DomainError("a positive GH clause needs at least one conclusion");
      require_in_alphabet(variables_, c.conclusions, "GH clause conclusions");
    }
  }
}

bool GHFormula::is_simple() const {
  return std::none_of(clauses_.begin(), clauses_.end(), [](const GHClause& c) { return c.negative; });
}

bool gh_eval(const GHFormula& phi, ColourSet nu) {
  require_in_alphabet(phi.variables(), nu, "valuation");
  for (const auto& c : phi.clauses()) {
    if (!c.premises.subset_of(nu)) continue;
    if (c.negative || !c.conclusions.subset_of(nu)) return false;
  }
  return true;
}

RabinCondition gh_to_streett(const GHFormula& phi) {
  std::vector<RabinPair> pairs;
  pairs.reserve(phi.size());
  for (const auto& c : phi.clauses()) {
    if (c.negative) throw DomainError("gh_to_streett needs a simple GH formula (no clause ⟹ ⊥)");
    pairs.push_back(RabinPair{c.conclusions, c.premises});
  }
  return RabinCondition(phi.variables(), std::move(pairs), PairSemantics::streett);
}

GHFormula streett_to_gh(const RabinCondition& cond) {
  std::vector<GHClause> clauses;
  for (const auto& p : cond.pairs()) {
    if (p.green.empty()) continue;
    clauses.push_back(GHClause::implication(p.red, p.green));
  }
  return GHFormula(cond.alphabet(), std::move(clauses));
}

GHFormula normalise_gh(const GHFormula& phi) {
  std::vector<GHClause> clauses;
  for (const auto& c : phi.clauses()) {
    if (c.negative) {
      clauses.push_back(c);
      continue;
    }
    ColourSet rest = c.conclusions - c.premises;
    if (rest.empty()) continue;
    clauses.push_back(GHClause::implication(c.premises, rest));
  }
  return GHFormula(phi.variables(), std::move(clauses));
}

namespace {

GHFormula minimise_simple(const GHFormula& phi) {
  return normalise_gh(streett_to_gh(minimise_streett_pairs(gh_to_streett(phi))));
}

std::string fresh_name(const ColourAlphabet& vars) {
  std::string name = "x_bot";
  while (vars.has(name)) name += "'";
  return name;
}

}  // namespace

GHFormula minimise_gh_clauses(const GHFormula& phi) {
  if (phi.is_simple()) return minimise_simple(phi);

  const ColourAlphabet& vars = phi.variables();
  if (vars.size() + 1 > kMaxColours) {
    throw DomainError("minimise_gh_clauses needs a spare variable for ⊥ (at most 63 variables)");
  }
  std::vector<std::string> names = vars.names();
  names.push_back(fresh_name(vars));
  ColourAlphabet extended(names);
  const auto bot = static_cast<ColourIndex>(vars.size());
  const ColourSet bot_set = ColourSet::singleton(bot);

  std::vector<GHClause> clauses;
  for (const auto& c : phi.clauses()) {
    clauses.push_back(c.negative ? GHClause::implication(c.premises, bot_set) : c);
  }
  clauses.push_back(GHClause::implication(bot_set, vars.full()));
  GHFormula tilde = minimise_simple(GHFormula(extended, std::move(clauses)));

  std::vector<GHClause> back;
  for (const auto& c : tilde.clauses()) {
    if (c.premises.contains(bot)) continue;
    if (c.conclusions.contains(bot)) {
      back.push_back(GHClause::bottom(c.premises));
    } else {
      back.push_back(c);
    }
  }
  return GHFormula(vars, std::move(back));
}

std::vector<bool> gh_truth_table(const GHFormula& phi) {
  enforce_cap("gh_truth_table_variables", phi.variables().size(), 16);
  const std::uint64_t n = std::uint64_t{1} << phi.variables().size();
  std::vector<bool> table(n);
  for (std::uint64_t nu = 0; nu < n; ++nu) table[nu] = gh_eval(phi, ColourSet(nu));
  return table;
}

bool gh_automaton_empty_bruteforce(const GhAutomaton& a, const Caps& caps) {
  if (!(a.formula.variables() == a.graph.colours())) {
    throw DomainError("the GH formula must be over the colours of the automaton");
  }
  for (const auto& cycle : enumerate_reachable_cycles(a.graph, caps)) {
    if (gh_eval(a.formula, a.graph.colours_of(cycle))) return false;
  }
  return true;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool valid_name(const std::string& s) {
  if (s.empty() || s == "_|_") return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'' || ch == '.';
  });
}

struct RawClause {
  std::vector<std::string> premises;
  std::vector<std::string> conclusions;
  bool negative = false;
  std::size_t line = 0;
};

std::vector<std::string> conjunction(const std::string& side, std::size_t line, std::size_t col) {
  std::vector<std::string> out;
  if (trim(side).empty()) return out;
  std::stringstream ss(side);
  std::string part;
  while (std::getline(ss, part, '&')) {
    std::string name = trim(part);
    if (!valid_name(name)) throw ParseError("invalid variable name '" + name + "'", line, col);
    out.push_back(name);
  }
  return out;
}

}  // namespace

GHFormula parse_gh(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::vector<std::string>> declared;
  std::vector<std::string> seen;
  std::vector<RawClause> raw_clauses;
  auto note = [&seen](const std::string& name) {
    if (std::find(seen.begin(), seen.end(), name) == seen.end()) seen.push_back(name);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("vars:", 0) == 0) {
      if (declared || !raw_clauses.empty()) {
        throw ParseError("the vars: line must come first and only once", line_no, 1);
      }
      std::istringstream names(line.substr(5));
      std::vector<std::string> vars;
      std::string name;
      while (names >> name) {
        if (!valid_name(name)) throw ParseError("invalid variable name '" + name + "'", line_no, 1);
        if (std::find(vars.begin(), vars.end(), name) != vars.end()) {
          throw ParseError("variable '" + name + "' declared twice", line_no, 1);
        }
        vars.push_back(name);
      }
      declared = std::move(vars);
      continue;
    }
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("expected '->' in clause", line_no, 1);
    RawClause c;
    c.line = line_no;
    c.premises = conjunction(line.substr(0, arrow), line_no, 1);
    std::string rhs = trim(line.substr(arrow + 2));
    if (rhs == "_|_") {
      c.negative = true;
    } else {
      if (rhs.empty()) throw ParseError("missing conclusion (use _|_ for a negative clause)", line_no, arrow + 3);
      c.conclusions = conjunction(rhs, line_no, arrow + 3);
    }
    for (const auto& n : c.premises) note(n);
    for (const auto& n : c.conclusions) note(n);
    raw_clauses.push_back(std::move(c));
  }

  std::vector<std::string> universe = declared ? *declared : seen;
  if (universe.empty()) throw ParseError("a GH formula needs at least one variable (add a vars: line)", line_no, 1);
  ColourAlphabet vars(universe);
  std::vector<GHClause> clauses;
  for (const auto& c : raw_clauses) {
    auto to_set = [&](const std::vector<std::string>& names) {
      ColourSet s;
      for (const auto& n : names) {
        if (!vars.has(n)) throw ParseError("undeclared variable '" + n + "'", c.line, 1);
        s.insert(vars.index(n));
      }
      return s;
    };
    ColourSet premises = to_set(c.premises);
    clauses.push_back(c.negative ? GHClause::bottom(premises)
                                 : GHClause::implication(premises, to_set(c.conclusions)));
  }
  return GHFormula(std::move(vars), std::move(clauses));
}

std::string format_gh_clause(const GHFormula& phi, const GHClause& clause) {
  auto join = [&](ColourSet s) {
    std::string out;
    for (ColourIndex v : s) {
      if (!out.empty()) out += " & ";
      out += phi.variables().name(v);
    }
    return out;
  };
  std::string lhs = join(clause.premises);
  std::string out = lhs.empty() ? "->" : lhs + " ->";
  out += " ";
  out += clause.negative ? "_|_" : join(clause.conclusions);
  return out;
}

std::string write_gh(const GHFormula& phi) {
  std::string out = "vars:";
  for (const auto& n : phi.variables().names()) out += " " + n;
  out += "\n";
  for (const auto& c : phi.clauses()) out += format_gh_clause(phi, c) + "\n";
  return out;
}

}  // namespace acdkit
