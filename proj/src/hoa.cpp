#include "acdkit/hoa.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "acdkit/conditions_io.hpp"
#include "acdkit/error.hpp"
#include "acdkit/zielonka_io.hpp"

namespace acdkit {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { header, ident, integer, string, punct, alias, body, end, abort, eof };

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  std::size_t line = 0;
  std::size_t column = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < s.size(); ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto fail = [&](const std::string& msg) { throw ParseError(msg, line, col); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
      const std::size_t close = s.find("*/", i + 2);
      if (close == std::string::npos) fail("unterminated comment");
      advance(close + 2 - i);
      continue;
    }
    Token t{Tok::eof, "", 0, line, col};
    if (s.compare(i, 8, "--BODY--") == 0) {
      t.kind = Tok::body;
      t.text = "--BODY--";
      advance(8);
    } else if (s.compare(i, 7, "--END--") == 0) {
      t.kind = Tok::end;
      t.text = "--END--";
      advance(7);
    } else if (s.compare(i, 9, "--ABORT--") == 0) {
      t.kind = Tok::abort;
      t.text = "--ABORT--";
      advance(9);
    } else if (c == '"') {
      std::string v;
      advance(1);
      for (;;) {
        if (i >= s.size()) fail("unterminated string");
        if (s[i] == '"') break;
        if (s[i] == '\\' && i + 1 < s.size()) advance(1);
        v += s[i];
        advance(1);
      }
      advance(1);
      t.kind = Tok::string;
      t.text = v;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::integer;
      t.text = s.substr(i, j - i);
      if (t.text.size() > 9) fail("integer too large");
      t.value = std::stoll(t.text);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                              s[j] == '-')) {
        ++j;
      }
      t.text = s.substr(i, j - i);
      if (c == '@') {
        t.kind = Tok::alias;
      } else if (j < s.size() && s[j] == ':') {
        t.kind = Tok::header;
        ++j;
      } else {
        t.kind = Tok::ident;
      }
      advance(j - i);
    } else if (std::string("[](){}!&|").find(c) != std::string::npos) {
      t.kind = Tok::punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::eof, "<end of input>", 0, line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Acceptance formulas

struct AccNode {
  enum Kind { t, f, inf, fin, conj, disj } kind = t;
  unsigned set = 0;
  bool parenthesised = false;
  std::vector<AccNode> kids;
};

bool eval(const AccNode& n, std::uint64_t seen) {
  switch (n.kind) {
    case AccNode::t: return true;
    case AccNode::f: return false;
    case AccNode::inf: return ((seen >> n.set) & 1U) != 0;
    case AccNode::fin: return ((seen >> n.set) & 1U) == 0;
    case AccNode::conj:
      return std::all_of(n.kids.begin(), n.kids.end(), [&](const AccNode& k) { return eval(k, seen); });
    case AccNode::disj:
      return std::any_of(n.kids.begin(), n.kids.end(), [&](const AccNode& k) { return eval(k, seen); });
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(msg + " near '" + t.text + "'", t.line, t.column);
  }
  bool at_punct(char c) const { return peek().kind == Tok::punct && peek().text[0] == c; }
  void expect_punct(char c) {
    if (!at_punct(c)) fail(peek(), std::string("expected '") + c + "'");
    next();
  }
  long long expect_int() {
    if (peek().kind != Tok::integer) fail(peek(), "expected an integer");
    return next().value;
  }

  AccNode parse_acc_or() {
    AccNode first = parse_acc_and();
    if (!at_punct('|')) return first;
    AccNode n;
    n.kind = AccNode::disj;
    n.kids.push_back(std::move(first));
    while (at_punct('|')) {
      next();
      n.kids.push_back(parse_acc_and());
    }
    return n;
  }

  AccNode parse_acc_and() {
    AccNode first = parse_acc_atom();
    if (!at_punct('&')) return first;
    AccNode n;
    n.kind = AccNode::conj;
    n.kids.push_back(std::move(first));
    while (at_punct('&')) {
      next();
      n.kids.push_back(parse_acc_atom());
    }
    return n;
  }

  AccNode parse_acc_atom() {
    const Token& t = peek();
    if (at_punct('(')) {
      next();
      AccNode inner = parse_acc_or();
      expect_punct(')');
      inner.parenthesised = true;
      return inner;
    }
    if (t.kind == Tok::ident && (t.text == "t" || t.text == "f")) {
      AccNode n;
      n.kind = t.text == "t" ? AccNode::t : AccNode::f;
      next();
      return n;
    }
    if (t.kind == Tok::ident && (t.text == "Inf" || t.text == "Fin")) {
      AccNode n;
      n.kind = t.text == "Inf" ? AccNode::inf : AccNode::fin;
      next();
      expect_punct('(');
      if (at_punct('!')) throw UnsupportedFeature("negated acceptance sets are not supported", "!");
      const long long set = expect_int();
      if (set >= static_cast<long long>(kMaxColours)) fail(t, "acceptance set number too large");
      n.set = static_cast<unsigned>(set);
      expect_punct(')');
      return n;
    }
    fail(t, "malformed acceptance formula");
  }

  /// Label expression, evaluated to the set of satisfying valuations.
  std::vector<bool> parse_label_or(std::size_t num_aps) {
    std::vector<bool> v = parse_label_and(num_aps);
    while (at_punct('|')) {
      next();
      std::vector<bool> w = parse_label_and(num_aps);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] || w[i];
    }
    return v;
  }

  std::vector<bool> parse_label_and(std::size_t num_aps) {
    std::vector<bool> v = parse_label_atom(num_aps);
    while (at_punct('&')) {
      next();
      std::vector<bool> w = parse_label_atom(num_aps);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] && w[i];
    }
    return v;
  }

  std::vector<bool> parse_label_atom(std::size_t num_aps) {
    const std::size_t n = std::size_t{1} << num_aps;
    const Token& t = peek();
    if (at_punct('!')) {
      next();
      std::vector<bool> v = parse_label_atom(num_aps);
      v.flip();
      return v;
    }
    if (at_punct('(')) {
      next();
      std::vector<bool> v = parse_label_or(num_aps);
      expect_punct(')');
      return v;
    }
    if (t.kind == Tok::ident && (t.text == "t" || t.text == "f")) {
      next();
      return std::vector<bool>(n, t.text == "t");
    }
    if (t.kind == Tok::integer) {
      const long long ap = t.value;
      if (ap < 0 || static_cast<std::size_t>(ap) >= num_aps) fail(t, "undeclared atomic proposition");
      next();
      std::vector<bool> v(n);
      for (std::size_t val = 0; val < n; ++val) v[val] = ((val >> ap) & 1U) != 0;
      return v;
    }
    if (t.kind == Tok::alias) throw UnsupportedFeature("aliases are not supported", t.text);
    fail(t, "malformed label");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Interpreting acceptance

std::vector<const AccNode*> flatten(const AccNode& n, AccNode::Kind kind, bool through_parens) {
  std::vector<const AccNode*> out;
  std::function<void(const AccNode&, bool)> walk = [&](const AccNode& x, bool top) {
    if (x.kind == kind && (top || through_parens || !x.parenthesised)) {
      for (const AccNode& k : x.kids) walk(k, false);
    } else {
      out.push_back(&x);
    }
  };
  walk(n, true);
  return out;
}

/// Set of acceptance sets used by a disjunction of Inf atoms (or a
/// conjunction of Fin atoms), or nullopt when the node has another shape.
std::optional<ColourSet> atom_group(const AccNode& n, AccNode::Kind atom, AccNode::Kind joiner) {
  ColourSet s;
  for (const AccNode* k : flatten(n, joiner, true)) {
    if (k->kind != atom) return std::nullopt;
    s.insert(k->set);
  }
  return s;
}

RabinPair rabin_term(const AccNode& term, ColourSet all, const Token& where) {
  RabinPair p;
  bool green_given = false;
  bool green_empty = false;
  for (const AccNode* k : flatten(term, AccNode::conj, true)) {
    if (k->kind == AccNode::fin) {
      p.red.insert(k->set);
    } else if (k->kind == AccNode::t) {
    } else if (k->kind == AccNode::f) {
      green_empty = true;
    } else if (auto g = atom_group(*k, AccNode::inf, AccNode::disj)) {
      if (green_given) {
        throw UnsupportedFeature("generalised Rabin pairs are not supported", where.text);
      }
      green_given = true;
      p.green = *g;
    } else {
      throw UnsupportedFeature("acceptance formula is not a Rabin condition", where.text);
    }
  }
  if (green_empty) {
    p.green = ColourSet();
  } else if (!green_given) {
    p.green = all;
  }
  return p;
}

RabinPair streett_term(const AccNode& term, ColourSet all, const Token& where) {
  RabinPair p;
  bool green_given = false;
  bool green_empty = false;
  for (const AccNode* k : flatten(term, AccNode::disj, true)) {
    if (k->kind == AccNode::inf) {
      p.red.insert(k->set);
    } else if (k->kind == AccNode::f) {
    } else if (k->kind == AccNode::t) {
      green_empty = true;
    } else if (auto g = atom_group(*k, AccNode::fin, AccNode::conj)) {
      if (green_given) {
        throw UnsupportedFeature("generalised Streett pairs are not supported", where.text);
      }
      green_given = true;
      p.green = *g;
    } else {
      throw UnsupportedFeature("acceptance formula is not a Streett condition", where.text);
    }
  }
  if (green_empty) {
    p.green = ColourSet();
  } else if (!green_given) {
    p.green = all;
  }
  return p;
}

struct RawEdge {
  StateId src;
  LetterId letter;
  StateId dst;
  std::vector<unsigned> marks;
};

bool is_ignorable_header(const std::string& name) {
  return !name.empty() && std::islower(static_cast<unsigned char>(name[0]));
}

std::string default_letter_name(std::size_t valuation, const std::vector<std::string>& aps) {
  if (aps.empty()) return "t";
  std::string out;
  for (std::size_t i = 0; i < aps.size(); ++i) {
    if (i) out += '&';
    if (!((valuation >> i) & 1U)) out += '!';
    out += aps[i];
  }
  return out;
}

}  // namespace

Acceptance acceptance_from_sidecar(const json& j) {
  if (!j.is_object()) throw DomainError("a sidecar must be a JSON object");
  const std::string kind = j.value("kind", std::string("family"));
  if (kind == "family") return family_from_json(j);
  if (kind == "ztree") return ztree_from_json(j);
  if (kind == "zdag") return zdag_from_json(j);
  throw DomainError("unknown sidecar kind '" + kind + "'");
}

Automaton parse_hoa(const std::string& text, const std::optional<json>& sidecar) {
  Parser p(text);
  const Token& first = p.peek();
  if (first.kind != Tok::header || first.text != "HOA") p.fail(first, "expected 'HOA:' header");
  p.next();
  if (p.peek().kind != Tok::ident || p.peek().text != "v1") p.fail(p.peek(), "expected version v1");
  p.next();

  std::optional<long long> num_states;
  std::optional<StateId> start;
  std::vector<std::string> aps;
  bool have_aps = false;
  std::optional<long long> num_sets;
  std::optional<AccNode> formula;
  Token formula_tok;
  std::vector<Token> acc_name;
  std::optional<std::vector<std::string>> letter_names;
  std::optional<std::vector<std::string>> colour_names;
  std::optional<std::pair<int, int>> priorities;

  while (p.peek().kind != Tok::body) {
    const Token h = p.peek();
    if (h.kind == Tok::eof) p.fail(h, "missing --BODY--");
    if (h.kind != Tok::header) p.fail(h, "expected a header");
    p.next();
    const std::string& name = h.text;
    if (name == "States") {
      num_states = p.expect_int();
    } else if (name == "Start") {
      if (start) throw UnsupportedFeature("multiple initial states are not supported", "Start:");
      start = static_cast<StateId>(p.expect_int());
      if (p.at_punct('&')) throw UnsupportedFeature("universal initial states are not supported", "&");
    } else if (name == "AP") {
      const long long n = p.expect_int();
      for (long long k = 0; k < n; ++k) {
        if (p.peek().kind != Tok::string) p.fail(p.peek(), "expected an AP name");
        aps.push_back(p.next().text);
      }
      if (aps.size() > 16) throw UnsupportedFeature("more than 16 atomic propositions", "AP:");
      have_aps = true;
    } else if (name == "Acceptance") {
      num_sets = p.expect_int();
      formula_tok = p.peek();
      formula = p.parse_acc_or();
    } else if (name == "acc-name") {
      while (p.peek().kind == Tok::ident || p.peek().kind == Tok::integer) acc_name.push_back(p.next());
    } else if (name == "acdkit-letters" || name == "acdkit-colours") {
      std::vector<std::string> names;
      while (p.peek().kind == Tok::string) names.push_back(p.next().text);
      (name == "acdkit-letters" ? letter_names : colour_names) = std::move(names);
    } else if (name == "acdkit-priorities") {
      const long long lo = p.expect_int();
      const long long hi = p.expect_int();
      priorities = {static_cast<int>(lo), static_cast<int>(hi)};
    } else if (name == "Alias") {
      throw UnsupportedFeature("aliases are not supported", "Alias:");
    } else if (is_ignorable_header(name) || name == "HOA") {
      while (p.peek().kind != Tok::header && p.peek().kind != Tok::body && p.peek().kind != Tok::eof) {
        p.next();
      }
    } else {
      throw UnsupportedFeature("unsupported header", name + ":");
    }
  }
  p.next();  // --BODY--
  if (!start) p.fail(p.peek(), "missing 'Start:' header");
  if (!formula) p.fail(p.peek(), "missing 'Acceptance:' header");
  if (!have_aps) aps.clear();

  // Body.
  const std::size_t valuations = std::size_t{1} << aps.size();
  std::vector<std::string> letters;
  if (letter_names) {
    letters = *letter_names;
    if (letters.empty() || letters.size() > valuations) {
      throw ParseError("acdkit-letters lists " + std::to_string(letters.size()) +
                           " letters for " + std::to_string(aps.size()) + " APs",
                       0, 0);
    }
  } else {
    for (std::size_t v = 0; v < valuations; ++v) letters.push_back(default_letter_name(v, aps));
  }
  std::vector<RawEdge> raw;
  std::vector<std::pair<StateId, std::string>> names;
  StateId max_state = *start;
  while (p.peek().kind != Tok::end) {
    const Token st = p.peek();
    if (st.kind == Tok::abort) p.fail(st, "automaton aborted");
    if (st.kind != Tok::header || st.text != "State") p.fail(st, "expected 'State:'");
    p.next();
    if (p.at_punct('[')) throw UnsupportedFeature("state labels are not supported", "[");
    const StateId q = static_cast<StateId>(p.expect_int());
    max_state = std::max(max_state, q);
    if (p.peek().kind == Tok::string) names.emplace_back(q, p.next().text);
    std::vector<unsigned> state_marks;
    if (p.at_punct('{')) {
      p.next();
      while (p.peek().kind == Tok::integer) state_marks.push_back(static_cast<unsigned>(p.next().value));
      p.expect_punct('}');
    }
    while (p.peek().kind != Tok::header && p.peek().kind != Tok::end) {
      if (p.peek().kind == Tok::integer) {
        throw UnsupportedFeature("implicit edge labels are not supported", p.peek().text);
      }
      if (!p.at_punct('[')) p.fail(p.peek(), "expected an edge");
      const Token label_tok = p.next();
      std::vector<bool> sat = p.parse_label_or(aps.size());
      p.expect_punct(']');
      const StateId dst = static_cast<StateId>(p.expect_int());
      if (p.at_punct('&')) throw UnsupportedFeature("universal branching is not supported", "&");
      max_state = std::max(max_state, dst);
      std::vector<unsigned> marks = state_marks;
      if (p.at_punct('{')) {
        p.next();
        while (p.peek().kind == Tok::integer) marks.push_back(static_cast<unsigned>(p.next().value));
        p.expect_punct('}');
      }
      for (std::size_t v = 0; v < sat.size(); ++v) {
        if (!sat[v]) continue;
        if (v >= letters.size()) {
          throw ParseError("label admits a valuation with no letter in acdkit-letters",
                           label_tok.line, label_tok.column);
        }
        raw.push_back({q, static_cast<LetterId>(v), dst, marks});
      }
    }
  }
  const std::size_t n = num_states ? static_cast<std::size_t>(*num_states) : max_state + std::size_t{1};
  if (max_state >= n) throw ParseError("state number exceeds the 'States:' count", 0, 0);
  const std::size_t k = static_cast<std::size_t>(*num_sets);
  for (const RawEdge& e : raw) {
    for (unsigned m : e.marks) {
      if (m >= k) throw ParseError("acceptance mark " + std::to_string(m) + " is not declared", 0, 0);
    }
  }
  std::vector<std::string> state_names;
  if (!names.empty()) {
    state_names.assign(n, "");
    for (auto& [q, s] : names) state_names[q] = s;
  }
  const bool any_unmarked =
      std::any_of(raw.begin(), raw.end(), [](const RawEdge& e) { return e.marks.empty(); });

  auto marks_to_set = [](const RawEdge& e) {
    ColourSet s;
    for (unsigned m : e.marks) s.insert(m);
    return s;
  };
  auto build = [&](ColourAlphabet colours, const std::function<ColourSet(const RawEdge&)>& colour,
                   Acceptance acc) {
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const RawEdge& e : raw) edges.push_back({e.src, e.letter, e.dst, colour(e)});
    return Automaton(TransitionGraph(n, *start, letters, std::move(colours), std::move(edges),
                                     state_names),
                     std::move(acc));
  };
  auto set_names = [&](std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (colour_names && i < colour_names->size()) {
        out.push_back((*colour_names)[i]);
      } else {
        out.push_back(std::to_string(i));
      }
    }
    return out;
  };

  if (sidecar) {
    Acceptance acc = acceptance_from_sidecar(*sidecar);
    const ColourAlphabet& g = acceptance_alphabet(acc);
    if (g.size() != k) {
      throw DomainError("the sidecar alphabet has " + std::to_string(g.size()) +
                        " colours but the HOA file declares " + std::to_string(k) + " sets");
    }
    if (any_unmarked) throw DomainError("Muller automata need a mark on every edge");
    if (k <= 12) {
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
        if (eval(*formula, s) != acceptance_accepts(acc, ColourSet(s))) {
          throw DomainError("the Acceptance formula disagrees with the sidecar on " +
                            g.format(ColourSet(s)));
        }
      }
    }
    ColourAlphabet colours = g;
    return build(std::move(colours), marks_to_set, std::move(acc));
  }

  if (acc_name.empty()) {
    throw UnsupportedFeature("acceptance without a recognised acc-name needs a Muller sidecar",
                             formula_tok.text);
  }
  const std::string kind = acc_name.front().text;
  auto param_int = [&](std::size_t i) -> long long {
    if (acc_name.size() <= i || acc_name[i].kind != Tok::integer) {
      throw ParseError("malformed acc-name parameters", acc_name.front().line, acc_name.front().column);
    }
    return acc_name[i].value;
  };

  if (kind == "Rabin" || kind == "Streett") {
    const bool rabin = kind == "Rabin";
    const std::size_t pairs_declared = static_cast<std::size_t>(param_int(1));
    const std::size_t colours = k + (any_unmarked ? 1 : 0);
    if (colours == 0) {
      throw DomainError("a Rabin or Streett automaton needs at least one colour");
    }
    const ColourSet all = ColourSet::full(colours);
    std::vector<const AccNode*> terms;
    if (pairs_declared == 1) {
      terms.push_back(&*formula);
    } else if (pairs_declared > 1) {
      terms = flatten(*formula, rabin ? AccNode::disj : AccNode::conj, false);
    }
    if (terms.size() != pairs_declared) {
      if (pairs_declared == 0 && formula->kind == (rabin ? AccNode::f : AccNode::t)) {
      } else {
        throw UnsupportedFeature("acceptance formula does not have the declared number of pairs",
                                 formula_tok.text);
      }
    }
    std::vector<RabinPair> pairs;
    for (const AccNode* t : terms) {
      pairs.push_back(rabin ? rabin_term(*t, all, formula_tok) : streett_term(*t, all, formula_tok));
    }
    std::vector<std::string> cnames = set_names(k);
    if (any_unmarked) cnames.push_back(std::to_string(k));
    ColourAlphabet g(cnames);
    const ColourIndex neutral = static_cast<ColourIndex>(k);
    RabinCondition cond(g, std::move(pairs), rabin ? PairSemantics::rabin : PairSemantics::streett);
    return build(
        g,
        [&](const RawEdge& e) {
          return e.marks.empty() ? ColourSet::singleton(neutral) : marks_to_set(e);
        },
        std::move(cond));
  }

  // Parity-like conditions: priority[set] plus the priority of unmarked edges.
  std::vector<int> priority(k);
  int unmarked = 0;
  std::function<bool(std::uint64_t)> expected;
  if (kind == "Buchi" || kind == "co-Buchi" || kind == "all" || kind == "none") {
    const std::size_t need = (kind == "Buchi" || kind == "co-Buchi") ? 1 : 0;
    if (k != need) throw ParseError(kind + " needs " + std::to_string(need) + " acceptance sets", 0, 0);
    if (kind == "Buchi") {
      priority = {0};
      unmarked = 1;
    } else if (kind == "co-Buchi") {
      priority = {1};
      unmarked = 2;
    } else {
      unmarked = kind == "all" ? 0 : 1;
    }
  } else if (kind == "parity") {
    if (acc_name.size() != 4 || acc_name[1].kind != Tok::ident || acc_name[2].kind != Tok::ident) {
      throw ParseError("malformed parity acc-name", acc_name.front().line, acc_name.front().column);
    }
    const std::string order = acc_name[1].text;
    const std::string par = acc_name[2].text;
    if ((order != "min" && order != "max") || (par != "even" && par != "odd")) {
      throw UnsupportedFeature("unknown parity variant", order + " " + par);
    }
    if (static_cast<std::size_t>(param_int(3)) != k) {
      throw ParseError("parity acc-name and Acceptance disagree on the number of sets", 0, 0);
    }
    const int kk = static_cast<int>(k);
    if (order == "min") {
      const int shift = par == "even" ? 0 : 1;
      for (int s = 0; s < kk; ++s) priority[s] = s + shift;
      unmarked = kk + shift;
    } else {
      // max parity: reverse the order, keeping the winning parity.
      int top = kk - 1;
      if ((top % 2 == 0) != (par == "even")) ++top;
      for (int s = 0; s < kk; ++s) priority[s] = top - s;
      unmarked = top + 1;
    }
  } else {
    throw UnsupportedFeature("unsupported acc-name", kind);
  }
  // The formula must agree with the acc-name.
  if (k <= 16) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
      int least = unmarked;
      for (ColourIndex c : ColourSet(s)) least = std::min(least, priority[c]);
      if (eval(*formula, s) != (least % 2 == 0)) {
        throw UnsupportedFeature("Acceptance formula does not match acc-name " + kind,
                                 formula_tok.text);
      }
    }
  }
  int lo = unmarked;
  int hi = unmarked;
  if (kind == "parity") {
    if (!any_unmarked && k > 0) lo = hi = priority.front();
    for (int pr : priority) {
      lo = std::min(lo, pr);
      hi = std::max(hi, pr);
    }
  } else if (kind == "Buchi" || kind == "co-Buchi") {
    lo = unmarked - 1;
  }
  if (priorities && !any_unmarked) {
    lo = priorities->first;
    hi = priorities->second;
  }
  ParityCondition cond(lo, hi);
  for (const RawEdge& e : raw) {
    for (unsigned m : e.marks) cond.colour_of(priority[m]);
  }
  return build(
      cond.alphabet(),
      [&](const RawEdge& e) {
        ColourSet s;
        if (e.marks.empty()) s.insert(cond.colour_of(unmarked));
        for (unsigned m : e.marks) s.insert(cond.colour_of(priority[m]));
        return s;
      },
      cond);
}

// ---------------------------------------------------------------------------
// Writer

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string group(const std::vector<std::string>& parts, const char* sep) {
  if (parts.size() == 1) return parts.front();
  return "(" + join(parts, sep) + ")";
}

std::string atoms(const char* fn, ColourSet s, ColourIndex offset = 0) {
  std::vector<std::string> parts;
  for (ColourIndex c : s) parts.push_back(std::string(fn) + "(" + std::to_string(c + offset) + ")");
  return join(parts, fn[0] == 'I' ? "|" : "&");
}

std::string rabin_formula(const RabinCondition& cond) {
  std::vector<std::string> terms;
  for (const RabinPair& p : cond.pairs()) {
    std::vector<std::string> parts;
    if (cond.is_streett()) {
      if (p.green.empty()) {
        parts.push_back("t");
      } else {
        std::vector<std::string> fins;
        for (ColourIndex c : p.green) fins.push_back("Fin(" + std::to_string(c) + ")");
        parts.push_back(group(fins, "&"));
      }
      for (ColourIndex c : p.red) parts.push_back("Inf(" + std::to_string(c) + ")");
      terms.push_back(group(parts, " | "));
    } else {
      for (ColourIndex c : p.red) parts.push_back("Fin(" + std::to_string(c) + ")");
      if (p.green.empty()) {
        parts.push_back("f");
      } else {
        std::vector<std::string> infs;
        for (ColourIndex c : p.green) infs.push_back("Inf(" + std::to_string(c) + ")");
        parts.push_back(group(infs, "|"));
      }
      terms.push_back(group(parts, " & "));
    }
  }
  if (terms.empty()) return cond.is_streett() ? "t" : "f";
  return join(terms, cond.is_streett() ? " & " : " | ");
}

std::string parity_formula(int k) {
  // min even over sets 0..k-1.
  std::string f = (k % 2 == 0) ? "t" : "f";
  for (int s = k - 1; s >= 0; --s) {
    const std::string a = (s % 2 == 0 ? "Inf(" : "Fin(") + std::to_string(s) + ")";
    if (s % 2 == 0) {
      f = (f == "f") ? a : a + " | " + (f.find(' ') != std::string::npos ? "(" + f + ")" : f);
    } else {
      f = (f == "t") ? a : a + " & " + (f.find(' ') != std::string::npos ? "(" + f + ")" : f);
    }
  }
  return f;
}

std::string family_formula(const MullerFamily& fam) {
  std::vector<std::string> terms;
  const std::size_t k = fam.alphabet().size();
  for (ColourSet c : fam.sets()) {
    std::vector<std::string> lits;
    for (ColourIndex i = 0; i < k; ++i) {
      lits.push_back((c.contains(i) ? "Inf(" : "Fin(") + std::to_string(i) + ")");
    }
    terms.push_back(group(lits, "&"));
  }
  if (terms.empty()) return "f";
  return join(terms, " | ");
}

/// Recursive membership formula following the descent of the tree/DAG.
template <typename Nodes>
std::string tree_formula(const Nodes& nodes, std::size_t n, ColourSet gamma) {
  const auto& node = nodes[n];
  if (node.children.empty()) return node.polarity == Polarity::round ? "t" : "f";
  std::vector<std::string> alts;
  std::vector<std::string> outside;
  for (std::size_t ch : node.children) {
    const ColourSet out = gamma - nodes[ch].label;
    const std::string sub = out.empty() ? "t" : atoms("Fin", out);
    const std::string rest = tree_formula(nodes, ch, gamma);
    if (rest == "f") {
    } else if (rest == "t") {
      alts.push_back(group({sub}, "&"));
    } else {
      alts.push_back("(" + (out.empty() ? std::string() : sub + " & ") + "(" + rest + "))");
    }
    if (node.polarity == Polarity::round) outside.push_back(out.empty() ? "f" : "(" + atoms("Inf", out) + ")");
  }
  if (node.polarity == Polarity::round) {
    alts.insert(alts.begin(), "(" + join(outside, " & ") + ")");
  }
  if (alts.empty()) return "f";
  return join(alts, " | ");
}

std::string letter_label(std::size_t letter, std::size_t num_aps) {
  if (num_aps == 0) return "t";
  std::vector<std::string> lits;
  for (std::size_t i = 0; i < num_aps; ++i) {
    lits.push_back(((letter >> i) & 1U) ? std::to_string(i) : "!" + std::to_string(i));
  }
  return join(lits, "&");
}

}  // namespace

std::optional<json> hoa_sidecar(const Automaton& a) {
  const Acceptance& acc = a.acceptance();
  switch (acc.index()) {
    case 0: return family_to_json(std::get<MullerFamily>(acc));
    case 1: return ztree_to_json(std::get<ZTree>(acc));
    case 2: return zdag_to_json(std::get<ZDag>(acc));
    default: return std::nullopt;
  }
}

std::string write_hoa(const Automaton& a) {
  const TransitionGraph& g = a.graph();
  std::size_t num_aps = 0;
  while ((std::size_t{1} << num_aps) < g.num_letters()) ++num_aps;
  std::ostringstream out;
  out << "HOA: v1\n";
  out << "States: " << g.num_states() << "\n";
  out << "Start: " << g.initial() << "\n";
  out << "AP: " << num_aps;
  for (std::size_t i = 0; i < num_aps; ++i) out << " " << quoted("p" + std::to_string(i));
  out << "\n";
  out << "acdkit-letters:";
  for (const auto& l : g.letters()) out << " " << quoted(l);
  out << "\n";

  const Acceptance& acc = a.acceptance();
  std::function<std::vector<unsigned>(ColourSet)> marks = [](ColourSet s) {
    std::vector<unsigned> m;
    for (ColourIndex c : s) m.push_back(c);
    return m;
  };
  if (acc.index() == 4) {
    const auto& par = std::get<ParityCondition>(acc);
    const int k = par.max_priority() + 1;
    out << "acdkit-priorities: " << par.min_priority() << " " << par.max_priority() << "\n";
    out << "acc-name: parity min even " << k << "\n";
    out << "Acceptance: " << k << " " << parity_formula(k) << "\n";
    marks = [&par](ColourSet s) {
      std::vector<unsigned> m;
      for (ColourIndex c : s) m.push_back(static_cast<unsigned>(par.priority_of(c)));
      return m;
    };
  } else {
    out << "acdkit-colours:";
    for (const auto& c : g.colours().names()) out << " " << quoted(c);
    out << "\n";
    const std::size_t k = g.colours().size();
    if (acc.index() == 3) {
      const auto& cond = std::get<RabinCondition>(acc);
      out << "acc-name: " << (cond.is_streett() ? "Streett " : "Rabin ") << cond.pairs().size() << "\n";
      out << "Acceptance: " << k << " " << rabin_formula(cond) << "\n";
    } else if (acc.index() == 0) {
      out << "Acceptance: " << k << " " << family_formula(std::get<MullerFamily>(acc)) << "\n";
    } else if (acc.index() == 1) {
      const auto& t = std::get<ZTree>(acc);
      out << "Acceptance: " << k << " " << tree_formula(t.nodes(), 0, t.alphabet().full()) << "\n";
    } else {
      const auto& d = std::get<ZDag>(acc);
      out << "Acceptance: " << k << " " << tree_formula(d.nodes(), 0, d.alphabet().full()) << "\n";
    }
  }
  out << "--BODY--\n";
  for (StateId q = 0; q < g.num_states(); ++q) {
    out << "State: " << q;
    if (!g.state_names().empty()) out << " " << quoted(g.state_names()[q]);
    out << "\n";
    for (EdgeId e : g.out_edges(q)) {
      const Edge& edge = g.edge(e);
      out << "[" << letter_label(edge.letter, num_aps) << "] " << edge.dst << " {";
      const auto m = marks(edge.colours);
      for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i];
      out << "}\n";
    }
  }
  out << "--END--\n";
  return out.str();
}

}  // namespace acdkit
