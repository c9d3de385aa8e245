#include "acdkit/conditions_io.hpp"

#include <fstream>
#include <sstream>

#include "acdkit/error.hpp"

namespace acdkit {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw DomainError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

ColourSet set_from_json(const ColourAlphabet& alphabet, const json& j, const char* what) {
  std::vector<std::string> names = string_list(j, what);
  ColourSet s;
  for (const auto& n : names) {
    ColourIndex c = alphabet.index(n);
    if (s.contains(c)) throw DomainError(std::string(what) + " lists '" + n + "' twice");
    s.insert(c);
  }
  return s;
}

void check_kind(const json& j, const char* expected) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != expected) {
    throw DomainError(std::string("expected kind '") + expected + "'");
  }
}

}  // namespace

json family_to_json(const MullerFamily& family) {
  json sets = json::array();
  for (ColourSet s : family.sets()) sets.push_back(family.alphabet().names_of(s));
  return {{"kind", "family"}, {"alphabet", family.alphabet().names()}, {"sets", sets}};
}

MullerFamily family_from_json(const json& j) {
  check_kind(j, "family");
  ColourAlphabet alphabet(string_list(member(j, "alphabet"), "alphabet"));
  const json& sets = member(j, "sets");
  if (!sets.is_array()) throw DomainError("'sets' must be an array");
  std::vector<ColourSet> members;
  for (const auto& s : sets) members.push_back(set_from_json(alphabet, s, "family member"));
  return MullerFamily(std::move(alphabet), std::move(members));
}

json rabin_to_json(const RabinCondition& cond) {
  json pairs = json::array();
  for (const RabinPair& p : cond.pairs()) {
    pairs.push_back({{"green", cond.alphabet().names_of(p.green)},
                     {"red", cond.alphabet().names_of(p.red)}});
  }
  return {{"kind", cond.is_streett() ? "streett" : "rabin"},
          {"alphabet", cond.alphabet().names()},
          {"pairs", pairs}};
}

RabinCondition rabin_from_json(const json& j) {
  PairSemantics semantics = PairSemantics::rabin;
  if (j.is_object() && j.contains("kind")) {
    if (j.at("kind") == "streett") {
      semantics = PairSemantics::streett;
    } else if (j.at("kind") != "rabin") {
      throw DomainError("expected kind 'rabin' or 'streett'");
    }
  }
  ColourAlphabet alphabet(string_list(member(j, "alphabet"), "alphabet"));
  const json& pairs = member(j, "pairs");
  if (!pairs.is_array()) throw DomainError("'pairs' must be an array");
  std::vector<RabinPair> out;
  for (const auto& p : pairs) {
    out.push_back({set_from_json(alphabet, member(p, "green"), "green set"),
                   set_from_json(alphabet, member(p, "red"), "red set")});
  }
  return RabinCondition(std::move(alphabet), std::move(out), semantics);
}

json parity_to_json(const ParityCondition& cond) {
  return {{"kind", "parity"}, {"min", cond.min_priority()}, {"max", cond.max_priority()}};
}

ParityCondition parity_from_json(const json& j) {
  check_kind(j, "parity");
  const json& lo = member(j, "min");
  const json& hi = member(j, "max");
  if (!lo.is_number_integer() || !hi.is_number_integer()) {
    throw DomainError("parity bounds must be integers");
  }
  return ParityCondition(lo.get<int>(), hi.get<int>());
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace acdkit
