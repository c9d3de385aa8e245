#include "acdkit/cycles.hpp"

#include <algorithm>
#include <unordered_map>

#include "acdkit/error.hpp"

namespace acdkit {

SccDecomposition scc_decompose(const TransitionGraph& g, const EdgeSet& edges) {
  const std::size_t n = g.num_states();
  constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<StateId> stack;
  std::vector<int> comp(n, -1);
  int next_comp = 0;
  std::uint32_t counter = 0;

  struct Frame {
    StateId q;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (StateId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& out = g.out_edges(f.q);
      if (f.next < out.size()) {
        const EdgeId e = out[f.next++];
        if (!edges.test(e)) continue;
        const StateId d = g.edge(e).dst;
        if (index[d] == kUnvisited) {
          index[d] = low[d] = counter++;
          stack.push_back(d);
          on_stack[d] = 1;
          call.push_back({d, 0});
        } else if (on_stack[d]) {
          low[f.q] = std::min(low[f.q], index[d]);
        }
        continue;
      }
      const StateId q = f.q;
      call.pop_back();
      if (!call.empty()) low[call.back().q] = std::min(low[call.back().q], low[q]);
      if (low[q] == index[q]) {
        StateId x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = 0;
          comp[x] = next_comp;
        } while (x != q);
        ++next_comp;
      }
    }
  }

  // Keep only components with an internal edge, numbered by least edge.
  std::vector<int> renumber(static_cast<std::size_t>(next_comp), -1);
  SccDecomposition out;
  for (auto e = edges.find_first(); e != EdgeSet::npos; e = edges.find_next(e)) {
    const Edge& edge = g.edge(static_cast<EdgeId>(e));
    const int c = comp[edge.src];
    if (c != comp[edge.dst]) continue;
    if (renumber[c] < 0) {
      renumber[c] = static_cast<int>(out.components.size());
      out.components.emplace_back(g.num_edges());
    }
    out.components[renumber[c]].set(e);
  }
  out.component.assign(n, -1);
  for (StateId q = 0; q < n; ++q) {
    out.component[q] = renumber[comp[q]];
    (out.component[q] >= 0 ? out.recurrent : out.transient).push_back(q);
  }
  return out;
}

SccDecomposition scc_decompose(const TransitionGraph& g) { return scc_decompose(g, g.all_edges()); }

bool is_cycle(const TransitionGraph& g, const EdgeSet& edges) {
  if (edges.none()) return false;
  SccDecomposition d = scc_decompose(g, edges);
  return d.components.size() == 1 && d.components.front() == edges;
}

namespace {

std::vector<EdgeSet> cycles_within(const TransitionGraph& g, const EdgeSet& scope,
                                   const Caps& caps) {
  enforce_cap("cycle_edges", scope.count(), caps.cycle_edges);
  std::vector<EdgeSet> out;
  for (const EdgeSet& comp : scc_decompose(g, scope).components) {
    const std::vector<std::uint32_t> members = to_indices(comp);
    const std::uint64_t limit = std::uint64_t{1} << members.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      EdgeSet s(g.num_edges());
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((mask >> i) & 1U) s.set(members[i]);
      }
      if (is_cycle(g, s)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), cycle_order_less);
  return out;
}

}  // namespace

std::vector<EdgeSet> enumerate_cycles(const TransitionGraph& g, const Caps& caps) {
  enforce_cap("cycle_edges", g.num_edges(), caps.cycle_edges);
  return cycles_within(g, g.all_edges(), caps);
}

std::vector<EdgeSet> enumerate_reachable_cycles(const TransitionGraph& g, const Caps& caps) {
  return cycles_within(g, g.reachable_edges(), caps);
}

bool cycle_accepting(const Automaton& a, const EdgeSet& cycle) {
  if (cycle.none()) throw DomainError("a cycle must contain at least one edge");
  return a.accepts_colours(a.graph().colours_of(cycle));
}

const char* to_string(RunVerdict v) noexcept {
  switch (v) {
    case RunVerdict::accepted: return "accepted";
    case RunVerdict::rejected: return "rejected";
    case RunVerdict::no_run: return "no-run";
  }
  return "unknown";
}

LassoRun run_lasso(const Automaton& a, std::span<const LetterId> u, std::span<const LetterId> v) {
  const TransitionGraph& g = a.graph();
  require_deterministic(g, "run_ultimately_periodic");
  if (v.empty()) throw DomainError("the period of a lasso must be non-empty");
  LassoRun run;
  StateId q = g.initial();
  auto step = [&](LetterId letter, EdgeSet* collect) {
    if (letter >= g.num_letters()) throw DomainError("letter out of range");
    auto e = g.successor(q, letter);
    if (!e) return false;
    if (collect != nullptr) collect->set(*e);
    q = g.edge(*e).dst;
    return true;
  };
  for (LetterId letter : u) {
    if (!step(letter, nullptr)) return run;
  }
  std::unordered_map<StateId, std::size_t> first_seen;
  std::vector<EdgeSet> rounds;
  while (first_seen.find(q) == first_seen.end()) {
    first_seen.emplace(q, rounds.size());
    EdgeSet taken = g.no_edges();
    for (LetterId letter : v) {
      if (!step(letter, &taken)) return run;
    }
    rounds.push_back(std::move(taken));
  }
  run.inf_edges = g.no_edges();
  for (std::size_t i = first_seen.at(q); i < rounds.size(); ++i) run.inf_edges |= rounds[i];
  run.verdict = a.accepts_colours(g.colours_of(run.inf_edges)) ? RunVerdict::accepted
                                                               : RunVerdict::rejected;
  return run;
}

RunVerdict run_ultimately_periodic(const Automaton& a, std::span<const LetterId> u,
                                   std::span<const LetterId> v) {
  return run_lasso(a, u, v).verdict;
}

std::string format_lasso(const Lasso& lasso, const std::vector<std::string>& letters) {
  auto word = [&](const std::vector<LetterId>& w) {
    if (w.empty()) return std::string("ε");
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += letters.at(w[i]);
    }
    return out;
  };
  return word(lasso.prefix) + " | " + word(lasso.period);
}

}  // namespace acdkit
