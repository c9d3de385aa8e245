#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "acdkit/acd.hpp"
#include "acdkit/conditions_io.hpp"
#include "acdkit/cycles.hpp"
#include "acdkit/error.hpp"
#include "acdkit/gen.hpp"
#include "acdkit/hoa.hpp"
#include "acdkit/horn.hpp"
#include "acdkit/minimise.hpp"
#include "acdkit/streett.hpp"
#include "acdkit/zielonka.hpp"
#include "acdkit/zielonka_io.hpp"

using nlohmann::json;
using namespace acdkit;

namespace {

/// Options shared by every command.
struct Output {
  std::string out;
  bool pretty = false;
};

/// 64-bit FNV-1a digest of an input file, as 16 hex digits.
std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json input_entry(const std::string& path, const std::string& text) {
  return {{"file", path}, {"fnv1a64", digest(text)}};
}

void write_text(const Output& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw DomainError("cannot write '" + o.out + "'");
  f << text;
}

/// Scalars of `j` as `key: value` lines; nested objects are indented, arrays
/// of scalars are joined.
void pretty_lines(const json& j, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      pretty_lines(value, indent + "  ", os);
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_primitive(); })) {
      os << indent << key << ": ";
      for (std::size_t i = 0; i < value.size(); ++i) os << (i ? " " : "") << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
      os << "\n";
    } else if (value.is_array()) {
      os << indent << key << ": [" << value.size() << " entries]\n";
    } else if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos) {
      os << indent << key << ": |\n";
      std::istringstream lines(value.get<std::string>());
      for (std::string line; std::getline(lines, line);) os << indent << "  " << line << "\n";
    } else {
      os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

void emit_report(const Output& o, const std::string& command, json input, json results,
                 std::chrono::steady_clock::time_point start) {
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json report = {{"command", command}, {"input", std::move(input)}, {"results", std::move(results)},
                 {"timing", {{"seconds", seconds}}}};
  if (o.pretty) {
    std::ostringstream os;
    pretty_lines(report, "", os);
    write_text(o, os.str());
  } else {
    write_text(o, report.dump(2) + "\n");
  }
}

/// The sidecar given with --family, else `<stem>.family.json` next to the
/// HOA file when it exists.
std::optional<json> find_sidecar(const std::string& hoa_path, const std::string& family) {
  std::string path = family;
  if (path.empty()) {
    std::filesystem::path p(hoa_path);
    std::filesystem::path candidate = p.parent_path() / (p.stem().string() + ".family.json");
    if (std::filesystem::exists(candidate)) path = candidate.string();
  }
  if (path.empty()) return std::nullopt;
  return parse_json_text(read_text_file(path));
}

struct LoadedAutomaton {
  Automaton automaton;
  json input;
};

LoadedAutomaton load_automaton(const std::string& path, const std::string& family) {
  const std::string text = read_text_file(path);
  return {parse_hoa(text, find_sidecar(path, family)), input_entry(path, text)};
}

/// A condition file: family (default kind), ztree, zdag, rabin, streett or parity.
struct LoadedCondition {
  Acceptance acceptance;
  json input;
};

LoadedCondition load_condition(const std::string& path) {
  const std::string text = read_text_file(path);
  json j = parse_json_text(text);
  const std::string kind = j.is_object() && j.contains("kind") ? j.at("kind").get<std::string>() : "family";
  Acceptance acc = [&]() -> Acceptance {
    if (kind == "rabin" || kind == "streett") return rabin_from_json(j);
    if (kind == "parity") return parity_from_json(j);
    return acceptance_from_sidecar(j);
  }();
  return {std::move(acc), input_entry(path, text)};
}

MullerFamily family_of(const Acceptance& acc) {
  if (const auto* f = std::get_if<MullerFamily>(&acc)) return *f;
  if (const auto* r = std::get_if<RabinCondition>(&acc)) return condition_to_family(*r);
  if (const auto* p = std::get_if<ParityCondition>(&acc)) return condition_to_family(*p);
  if (const auto* t = std::get_if<ZTree>(&acc)) return validate_ztree(*t);
  return validate_ztree(unfold_zdag(std::get<ZDag>(acc)));
}

json typeness_json(const Typeness& t) { return {{"rabin", t.rabin}, {"streett", t.streett}, {"parity", t.parity}}; }

json sets_json(const std::vector<EdgeSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(to_indices(s));
  return out;
}

json ztree_summary(const ZTree& t) {
  return {{"size", t.size()}, {"leaves", t.leaf_count()}, {"height", t.height()}};
}

json zdag_summary(const ZDag& d) {
  return {{"size", d.size()}, {"edges", d.edge_count()}, {"height", d.height()}};
}

/// Writes `hoa` to `path` and the sidecar of `a` next to it.
void write_hoa_files(const Automaton& a, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << write_hoa(a);
  if (auto sidecar = hoa_sidecar(a)) {
    std::filesystem::path p(path);
    const std::string side = (p.parent_path() / (p.stem().string() + ".family.json")).string();
    std::ofstream s(side);
    if (!s) throw DomainError("cannot write '" + side + "'");
    s << sidecar->dump(2) << "\n";
  }
}

json error_json(const std::exception& e) {
  json j = {{"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    j["error"] = "parse";
    j["line"] = p->line();
    j["column"] = p->column();
  } else if (dynamic_cast<const UnsupportedFeature*>(&e) != nullptr) {
    j["error"] = "unsupported";
  } else if (const auto* t = dynamic_cast<const TreeValidationError*>(&e)) {
    j["error"] = "tree-validation";
    j["violation"] = to_string(t->kind());
    j["nodes"] = {t->node_a(), t->node_b()};
  } else if (const auto* n = dynamic_cast<const NotRabinType*>(&e)) {
    j["error"] = "not-rabin-type";
    j["node"] = n->node();
  } else if (dynamic_cast<const CapExceeded*>(&e) != nullptr) {
    j["error"] = "cap-exceeded";
  } else {
    j["error"] = "domain";
  }
  return j;
}

/// Oracle cross-validation of one automaton.
json check_automaton(const Automaton& a) {
  json checks = json::array();
  auto record = [&](const std::string& name, const std::function<json()>& run) {
    try {
      json r = run();
      r["check"] = name;
      checks.push_back(std::move(r));
    } catch (const CapExceeded& e) {
      checks.push_back({{"check", name}, {"skipped", e.what()}});
    }
  };
  const AcdDag dag = compute_acd_dag(a);
  const AcdForest forest = unfold_acd(dag);
  record("fold_unfold", [&] { return json{{"agree", fold_acd(forest) == dag}}; });
  record("acd_oracle", [&] { return json{{"agree", naive_acd(a) == forest}}; });
  if (a.graph().is_deterministic()) {
    record("paritization", [&] {
      Paritization p = paritize(a, forest);
      return json{{"agree", equivalent_deterministic(a, p.parity).equivalent},
                  {"parity_states", p.parity.graph().num_states()}};
    });
  }
  if (is_muller(a.acceptance())) {
    record("ztree_oracle", [&] {
      MullerFamily f = family_of(a.acceptance());
      return json{{"agree", naive_ztree(f) == build_ztree(f)}};
    });
  }
  bool all = true;
  for (const auto& c : checks) {
    if (c.contains("agree") && !c.at("agree").get<bool>()) all = false;
  }
  return {{"checks", std::move(checks)}, {"all_agree", all}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zielonka trees, alternating cycle decompositions and minimisation of acceptance conditions"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("-o,--out", out.out, "Write the report (or generated artefact) to FILE")->expected(1);
  app.add_flag("--pretty", out.pretty, "Human-readable report instead of JSON");

  std::string file, family, gen_file;
  std::size_t number = 0;
  bool dag_mode = false, tree_mode = false, multi = false, dot = false, language = false, automaton = false;
  std::optional<std::size_t> pairs_k;
  std::vector<std::string> vars;
  std::function<void()> action;
  const auto start = std::chrono::steady_clock::now();

  auto hoa_input = [&](CLI::App* sub) {
    sub->add_option("file", file, "HOA automaton")->required()->check(CLI::ExistingFile);
    sub->add_option("--family", family, "Muller sidecar (default: <stem>.family.json)")->check(CLI::ExistingFile);
  };

  // zt build | validate
  CLI::App* zt = app.add_subcommand("zt", "Zielonka trees")->require_subcommand(1);
  CLI::App* zt_build = zt->add_subcommand("build", "Zielonka tree of a condition file");
  zt_build->add_option("file", file, "Condition JSON (family, rabin, streett, parity, ztree or zdag)")
      ->required()
      ->check(CLI::ExistingFile);
  zt_build->add_flag("--dot", dot, "Write the tree as Graphviz instead of a report");
  zt_build->callback([&] {
    action = [&] {
      LoadedCondition c = load_condition(file);
      ZTree t = build_ztree(family_of(c.acceptance));
      if (dot) return write_text(out, ztree_to_dot(t));
      json r = ztree_summary(t);
      r["tree"] = ztree_to_json(t);
      emit_report(out, "zt build", c.input, r, start);
    };
  });
  CLI::App* zt_validate = zt->add_subcommand("validate", "Check that a tree is the Zielonka tree of some family");
  zt_validate->add_option("file", file, "Tree JSON")->required()->check(CLI::ExistingFile);
  zt_validate->callback([&] {
    action = [&] {
      const std::string text = read_text_file(file);
      ZTree t = ztree_from_json(parse_json_text(text));
      MullerFamily f = validate_ztree(t);
      emit_report(out, "zt validate", input_entry(file, text), {{"valid", true}, {"family", family_to_json(f)}},
                  start);
    };
  });

  // zdag build
  CLI::App* zdag = app.add_subcommand("zdag", "Zielonka DAGs")->require_subcommand(1);
  CLI::App* zdag_build = zdag->add_subcommand("build", "Zielonka DAG of a condition file");
  zdag_build->add_option("file", file, "Condition JSON")->required()->check(CLI::ExistingFile);
  zdag_build->add_flag("--dot", dot, "Write the DAG as Graphviz instead of a report");
  zdag_build->callback([&] {
    action = [&] {
      LoadedCondition c = load_condition(file);
      ZDag d = acceptance_zdag(c.acceptance);
      if (dot) return write_text(out, zdag_to_dot(d));
      json r = zdag_summary(d);
      r["typeness"] = typeness_json(language_typeness(d));
      r["dag"] = zdag_to_json(d);
      emit_report(out, "zdag build", c.input, r, start);
    };
  });

  // acd build
  CLI::App* acd = app.add_subcommand("acd", "Alternating cycle decomposition")->require_subcommand(1);
  CLI::App* acd_build = acd->add_subcommand("build", "ACD (tree form) or ACD-DAG of an automaton");
  hoa_input(acd_build);
  auto* dag_flag = acd_build->add_flag("--dag", dag_mode, "ACD-DAG");
  acd_build->add_flag("--tree", tree_mode, "ACD forest (default)")->excludes(dag_flag);
  acd_build->add_flag("--dot", dot, "Write Graphviz instead of a report");
  acd_build->callback([&] {
    action = [&] {
      LoadedAutomaton l = load_automaton(file, family);
      const TransitionGraph& g = l.automaton.graph();
      if (dag_mode) {
        AcdDag d = compute_acd_dag(l.automaton);
        if (dot) return write_text(out, acd_dag_to_dot(d, g));
        emit_report(out, "acd build --dag", l.input, acd_dag_to_json(d, g), start);
      } else {
        AcdForest f = compute_acd(l.automaton);
        if (dot) return write_text(out, acd_to_dot(f, g));
        emit_report(out, "acd build --tree", l.input, acd_to_json(f, g), start);
      }
    };
  });

  // paritize
  std::string hoa_out;
  CLI::App* par = app.add_subcommand("paritize", "ACD-parity-transform of a deterministic automaton");
  hoa_input(par);
  par->add_option("--hoa", hoa_out, "Write the parity automaton to FILE");
  par->callback([&] {
    action = [&] {
      LoadedAutomaton l = load_automaton(file, family);
      Paritization p = paritize(l.automaton);
      const auto& cond = std::get<ParityCondition>(p.parity.acceptance());
      json r = {{"states", p.parity.graph().num_states()},
                {"edges", p.parity.graph().num_edges()},
                {"priorities", {cond.min_priority(), cond.max_priority()}},
                {"state_of", p.state_of}};
      if (hoa_out.empty()) {
        r["hoa"] = write_hoa(p.parity);
      } else {
        write_hoa_files(p.parity, hoa_out);
        r["hoa_file"] = hoa_out;
      }
      emit_report(out, "paritize", l.input, r, start);
    };
  });

  // typeness, parity-index
  CLI::App* typ = app.add_subcommand("typeness", "Rabin, Streett and parity typeness of an automaton");
  hoa_input(typ);
  typ->callback([&] {
    action = [&] {
      LoadedAutomaton l = load_automaton(file, family);
      emit_report(out, "typeness", l.input, typeness_json(typeness(l.automaton)), start);
    };
  });
  CLI::App* pidx = app.add_subcommand("parity-index", "Parity index (maximal ACD height)");
  hoa_input(pidx);
  pidx->callback([&] {
    action = [&] {
      LoadedAutomaton l = load_automaton(file, family);
      ParityIndexReport p = parity_index(l.automaton);
      emit_report(out, "parity-index", l.input,
                  {{"index", p.index}, {"empty_forest", p.empty_forest}, {"nondeterministic", p.nondeterministic},
                   {"notes", p.notes}},
                  start);
    };
  });

  // min-colours
  CLI::App* minc = app.add_subcommand("min-colours", "Least number of colours");
  minc->add_option("file", file, "Condition JSON (--language) or HOA automaton (--automaton)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* minc_lang = minc->add_flag("--language", language, "Minimise the condition on its own (polynomial)");
  minc->add_flag("--automaton", automaton, "Minimise on the automaton (exact search)")->excludes(minc_lang);
  minc->add_flag("--multi", multi, "Allow several colours per edge (with --automaton)");
  minc->add_option("--family", family, "Muller sidecar for the automaton")->check(CLI::ExistingFile);
  minc->callback([&] {
    action = [&] {
      if (!automaton) {
        LoadedCondition c = load_condition(file);
        ColourMinimisation m = minimise_colours(acceptance_zdag(c.acceptance));
        const ColourAlphabet& g = acceptance_alphabet(c.acceptance);
        json mapping = json::object();
        for (std::size_t i = 0; i < m.map.size(); ++i) mapping[g.name(static_cast<ColourIndex>(i))] = m.target.name(m.map[i]);
        json r = {{"k", m.k()}, {"mapping", mapping}};
        if (m.quotient) r["family"] = family_to_json(*m.quotient);
        r["dag"] = zdag_to_json(m.quotient_dag);
        return emit_report(out, "min-colours --language", c.input, r, start);
      }
      LoadedAutomaton l = load_automaton(file, family);
      ColourSearchResult s = min_colours_on_automaton(l.automaton, multi);
      json colouring = json::array();
      for (ColourSet c : s.candidate.colours) {
        json e = json::array();
        for (ColourIndex i : c) e.push_back(i + 1);
        colouring.push_back(e);
      }
      emit_report(out, multi ? "min-colours --automaton --multi" : "min-colours --automaton", l.input,
                  {{"k", s.k}, {"edge_colours", colouring}, {"family", family_to_json(s.family)}, {"checks", s.checks}},
                  start);
    };
  });

  // min-rabin
  CLI::App* minr = app.add_subcommand("min-rabin", "Least number of Rabin pairs");
  minr->add_option("file", file, "Condition JSON (--language) or HOA automaton (--automaton)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* minr_lang = minr->add_flag("--language", language, "Minimise the condition on its own (polynomial)");
  minr->add_option("--automaton", pairs_k, "Decide whether k pairs suffice on the automaton")->excludes(minr_lang);
  minr->add_option("--family", family, "Muller sidecar for the automaton")->check(CLI::ExistingFile);
  minr->callback([&] {
    action = [&] {
      if (!pairs_k) {
        LoadedCondition c = load_condition(file);
        RabinCondition in = [&] {
          if (const auto* r = std::get_if<RabinCondition>(&c.acceptance)) return *r;
          if (const auto* p = std::get_if<ParityCondition>(&c.acceptance)) return parity_to_rabin(*p);
          return zdag_to_rabin_pairs(acceptance_zdag(c.acceptance));
        }();
        RabinCondition m = in.is_streett() ? minimise_streett_pairs(in) : minimise_rabin_pairs(in);
        return emit_report(out, "min-rabin --language", c.input,
                           {{"input_pairs", in.pairs().size()}, {"pairs", m.pairs().size()}, {"condition", rabin_to_json(m)}},
                           start);
      }
      LoadedAutomaton l = load_automaton(file, family);
      RabinPairSearchResult s = min_rabin_pairs_on_automaton(l.automaton, *pairs_k);
      json r = {{"k", *pairs_k}, {"found", s.found}, {"classes", sets_json(s.classes)}};
      if (s.certificate) r["certificate"] = rabin_to_json(std::get<RabinCondition>(s.certificate->acceptance()));
      emit_report(out, "min-rabin --automaton", l.input, r, start);
    };
  });

  // gh min | eval
  CLI::App* gh = app.add_subcommand("gh", "Generalised Horn formulas")->require_subcommand(1);
  CLI::App* gh_min = gh->add_subcommand("min", "Equivalent formula with the least number of clauses");
  gh_min->add_option("file", file, "GH formula text file")->required()->check(CLI::ExistingFile);
  gh_min->callback([&] {
    action = [&] {
      const std::string text = read_text_file(file);
      GHFormula phi = parse_gh(text);
      GHFormula m = minimise_gh_clauses(phi);
      emit_report(out, "gh min", input_entry(file, text),
                  {{"input_clauses", phi.size()}, {"clauses", m.size()}, {"formula", write_gh(m)}}, start);
    };
  });
  CLI::App* gh_eval_cmd = gh->add_subcommand("eval", "Truth of a formula under a valuation");
  gh_eval_cmd->add_option("file", file, "GH formula text file")->required()->check(CLI::ExistingFile);
  gh_eval_cmd->add_option("true_vars", vars, "Variables set to true (all others false)");
  gh_eval_cmd->callback([&] {
    action = [&] {
      const std::string text = read_text_file(file);
      GHFormula phi = parse_gh(text);
      ColourSet nu = phi.variables().parse_set(vars);
      emit_report(out, "gh eval", input_entry(file, text), {{"true_vars", vars}, {"value", gh_eval(phi, nu)}}, start);
    };
  });

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Generators of worst-case families and reductions")->require_subcommand(1);
  auto numbered_gen = [&](const char* name, const char* what, std::function<json(std::size_t)> make) {
    CLI::App* sub = gen->add_subcommand(name, what);
    sub->add_option("n", number, "Size parameter")->required();
    sub->callback([&, make] { action = [&, make] { write_text(out, make(number).dump(2) + "\n"); }; });
  };
  numbered_gen("even-letters", "Even-size subsets of {1..m}", [](std::size_t m) { return family_to_json(even_letters(m)); });
  numbered_gen("chain", "Chain family {1,2} ⊂ {1..4} ⊂ … of n sets", [](std::size_t n) { return family_to_json(chain_family(n)); });
  numbered_gen("small-dag", "Family with a linear Zielonka DAG and an exponential tree",
               [](std::size_t n) { return family_to_json(small_dag_family(n)); });
  numbered_gen("rabin-worst", "Rabin condition with m pairs ({g_i},{r_i})", [](std::size_t m) { return rabin_to_json(rabin_worst(m)); });

  auto graph_gen = [&](const char* name, const char* what, bool with_k) {
    CLI::App* sub = gen->add_subcommand(name, what);
    sub->add_option("graph", gen_file, "Undirected graph, one edge `u v` per line")->required()->check(CLI::ExistingFile);
    if (with_k) sub->add_option("k", number, "Clique size")->required();
    sub->callback([&, with_k] {
      action = [&, with_k] {
        UndirectedGraph g = UndirectedGraph::parse(read_text_file(gen_file));
        Automaton a = with_k ? aut_clique(g, number) : aut_chrom(g);
        if (out.out.empty()) {
          std::cout << json{{"hoa", write_hoa(a)}, {"sidecar", *hoa_sidecar(a)}}.dump(2) << "\n";
        } else {
          write_hoa_files(a, out.out);
        }
      };
    });
  };
  graph_gen("aut-chrom", "Pseudo-path automaton of a connected graph", false);
  graph_gen("aut-clique", "Two-state clique automaton of a graph", true);

  CLI::App* one_state = gen->add_subcommand("one-state", "One-state automaton with one self-loop per colour");
  one_state->add_option("condition", gen_file, "Condition JSON")->required()->check(CLI::ExistingFile);
  one_state->callback([&] {
    action = [&] {
      Automaton a = one_state_automaton(load_condition(gen_file).acceptance);
      if (out.out.empty()) {
        json j = {{"hoa", write_hoa(a)}};
        if (auto side = hoa_sidecar(a)) j["sidecar"] = *side;
        std::cout << j.dump(2) << "\n";
      } else {
        write_hoa_files(a, out.out);
      }
    };
  });

  // bench
  std::vector<std::size_t> bench_states{50, 100, 200};
  std::size_t bench_colours = 8, bench_letters = 3, bench_instances = 3, bench_jobs = 0;
  std::uint64_t bench_seed = 1;
  CLI::App* bench = app.add_subcommand("bench", "Time ACD-DAG construction on random automata");
  bench->add_option("--states", bench_states, "State counts")->delimiter(',');
  bench->add_option("--colours", bench_colours, "Number of colours");
  bench->add_option("--letters", bench_letters, "Number of letters");
  bench->add_option("--instances", bench_instances, "Instances per size");
  bench->add_option("--seed", bench_seed, "First seed");
  bench->add_option("--jobs", bench_jobs, "Parallel workers (default: hardware threads)");
  bench->callback([&] {
    action = [&] {
      struct Job {
        std::size_t states;
        std::uint64_t seed;
      };
      std::vector<Job> jobs;
      for (std::size_t s : bench_states) {
        for (std::size_t i = 0; i < bench_instances; ++i) jobs.push_back({s, bench_seed + jobs.size()});
      }
      auto run = [&](const Job& j) {
        RandomAutomatonSizes sz;
        sz.states = j.states;
        sz.colours = bench_colours;
        sz.letters = bench_letters;
        Automaton a = random_automaton(sz, j.seed);
        const auto t0 = std::chrono::steady_clock::now();
        AcdDag d = compute_acd_dag(a);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return json{{"states", j.states}, {"seed", j.seed}, {"edges", a.graph().num_edges()},
                    {"dag_nodes", d.size()}, {"height", d.max_height()}, {"seconds", secs}};
      };
      const std::size_t workers =
          std::max<std::size_t>(1, bench_jobs != 0 ? bench_jobs : std::thread::hardware_concurrency());
      std::vector<json> rows(jobs.size());
      for (std::size_t b = 0; b < jobs.size(); b += workers) {
        std::vector<std::future<json>> batch;
        for (std::size_t i = b; i < std::min(jobs.size(), b + workers); ++i) {
          batch.push_back(std::async(std::launch::async, run, jobs[i]));
        }
        for (std::size_t i = 0; i < batch.size(); ++i) rows[b + i] = batch[i].get();
      }
      emit_report(out, "bench", json::object(),
                  {{"colours", bench_colours}, {"letters", bench_letters}, {"runs", rows}}, start);
    };
  });

  // check
  CLI::App* check = app.add_subcommand("check", "Cross-validate the library against its oracles on an automaton");
  hoa_input(check);
  check->callback([&] {
    action = [&] {
      LoadedAutomaton l = load_automaton(file, family);
      emit_report(out, "check", l.input, check_automaton(l.automaton), start);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
    return 0;
  } catch (const ParseError& e) {
    std::cerr << error_json(e).dump() << "\n";
    return 2;
  } catch (const UnsupportedFeature& e) {
    std::cerr << error_json(e).dump() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return 1;
  }
}
