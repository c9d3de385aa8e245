#include "acdkit/automaton.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "acdkit/error.hpp"

namespace acdkit {

TransitionGraph::TransitionGraph(std::size_t num_states, StateId initial,
                                 std::vector<std::string> letters, ColourAlphabet colours,
                                 std::vector<Edge> edges, std::vector<std::string> state_names)
    : num_states_(num_states),
      initial_(initial),
      letters_(std::move(letters)),
      colours_(std::move(colours)),
      state_names_(std::move(state_names)) {
  if (num_states_ == 0) throw DomainError("an automaton needs at least one state");
  if (initial_ >= num_states_) throw DomainError("initial state out of range");
  if (letters_.empty()) throw DomainError("an automaton needs at least one letter");
  if (!state_names_.empty() && state_names_.size() != num_states_) {
    throw DomainError("state names must be given for every state or for none");
  }
  std::map<std::tuple<StateId, LetterId, StateId>, EdgeId> seen;
  for (const Edge& e : edges) {
    if (e.src >= num_states_ || e.dst >= num_states_) throw DomainError("edge endpoint out of range");
    if (e.letter >= letters_.size()) throw DomainError("edge letter out of range");
    if (e.colours.empty()) throw DomainError("every edge must carry at least one colour");
    require_in_alphabet(colours_, e.colours, "edge colour set");
    auto [it, inserted] = seen.emplace(std::make_tuple(e.src, e.letter, e.dst),
                                       static_cast<EdgeId>(edges_.size()));
    if (inserted) {
      edges_.push_back(e);
    } else {
      edges_[it->second].colours |= e.colours;
    }
  }
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const Edge& a, const Edge& b) { return a.src < b.src; });
  out_.assign(num_states_, {});
  in_.assign(num_states_, {});
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    out_[edges_[i].src].push_back(i);
    in_[edges_[i].dst].push_back(i);
  }
}

LetterId TransitionGraph::letter(const std::string& name) const {
  for (LetterId a = 0; a < letters_.size(); ++a) {
    if (letters_[a] == name) return a;
  }
  throw DomainError("unknown letter '" + name + "'");
}

std::string TransitionGraph::state_label(StateId q) const {
  if (!state_names_.empty() && !state_names_[q].empty()) return state_names_[q];
  return std::to_string(q);
}

bool TransitionGraph::is_deterministic() const {
  std::vector<char> used(letters_.size());
  for (StateId q = 0; q < num_states_; ++q) {
    std::fill(used.begin(), used.end(), 0);
    for (EdgeId e : out_[q]) {
      if (used[edges_[e].letter]) return false;
      used[edges_[e].letter] = 1;
    }
  }
  return true;
}

bool TransitionGraph::is_complete() const {
  std::vector<char> used(letters_.size());
  for (StateId q = 0; q < num_states_; ++q) {
    std::fill(used.begin(), used.end(), 0);
    for (EdgeId e : out_[q]) used[edges_[e].letter] = 1;
    for (char u : used) {
      if (!u) return false;
    }
  }
  return true;
}

std::optional<EdgeId> TransitionGraph::successor(StateId q, LetterId a) const {
  for (EdgeId e : out_.at(q)) {
    if (edges_[e].letter == a) return e;
  }
  return std::nullopt;
}

EdgeSet TransitionGraph::all_edges() const {
  EdgeSet s(edges_.size());
  s.set();
  return s;
}

ColourSet TransitionGraph::colours_of(const EdgeSet& edges) const {
  ColourSet c;
  for (auto i = edges.find_first(); i != EdgeSet::npos; i = edges.find_next(i)) {
    c |= edges_[i].colours;
  }
  return c;
}

StateSet TransitionGraph::states_of(const EdgeSet& edges) const {
  StateSet s(num_states_);
  for (auto i = edges.find_first(); i != EdgeSet::npos; i = edges.find_next(i)) {
    s.set(edges_[i].src);
    s.set(edges_[i].dst);
  }
  return s;
}

StateSet TransitionGraph::reachable_states() const {
  StateSet seen(num_states_);
  std::vector<StateId> stack{initial_};
  seen.set(initial_);
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (EdgeId e : out_[q]) {
      if (!seen.test(edges_[e].dst)) {
        seen.set(edges_[e].dst);
        stack.push_back(edges_[e].dst);
      }
    }
  }
  return seen;
}

EdgeSet TransitionGraph::reachable_edges() const {
  StateSet reach = reachable_states();
  EdgeSet s(edges_.size());
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (reach.test(edges_[i].src)) s.set(i);
  }
  return s;
}

TransitionGraph TransitionGraph::recoloured(ColourAlphabet colours,
                                            const std::vector<ColourSet>& edge_colours) const {
  if (edge_colours.size() != edges_.size()) {
    throw DomainError("a recolouring needs one colour set per edge");
  }
  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].colours = edge_colours[i];
  return TransitionGraph(num_states_, initial_, letters_, std::move(colours), std::move(edges),
                         state_names_);
}

bool TransitionGraph::operator==(const TransitionGraph& o) const {
  return num_states_ == o.num_states_ && initial_ == o.initial_ && letters_ == o.letters_ &&
         colours_ == o.colours_ && edges_ == o.edges_ && state_names_ == o.state_names_;
}

const ColourAlphabet& acceptance_alphabet(const Acceptance& acc) {
  return std::visit([](const auto& c) -> const ColourAlphabet& { return c.alphabet(); }, acc);
}

const char* acceptance_kind(const Acceptance& acc) {
  switch (acc.index()) {
    case 0: return "muller";
    case 1: return "ztree";
    case 2: return "zdag";
    case 3: return std::get<RabinCondition>(acc).is_streett() ? "streett" : "rabin";
    default: return "parity";
  }
}

bool is_muller(const Acceptance& acc) { return acc.index() <= 2; }

bool acceptance_accepts(const Acceptance& acc, ColourSet c) {
  switch (acc.index()) {
    case 0: return muller_accepts(std::get<MullerFamily>(acc), c);
    case 1: return ztree_membership(std::get<ZTree>(acc), c);
    case 2: return zdag_membership(std::get<ZDag>(acc), c);
    case 3: return rabin_accepts(std::get<RabinCondition>(acc), c);
    default: return parity_accepts(std::get<ParityCondition>(acc), c);
  }
}

ZDag acceptance_zdag(const Acceptance& acc) {
  switch (acc.index()) {
    case 0: return build_zdag(std::get<MullerFamily>(acc));
    case 1: return fold_to_zdag(std::get<ZTree>(acc));
    case 2: return std::get<ZDag>(acc);
    case 3: return zdag_of(std::get<RabinCondition>(acc));
    default: return zdag_of(std::get<ParityCondition>(acc));
  }
}

Automaton::Automaton(TransitionGraph graph, Acceptance acceptance)
    : graph_(std::move(graph)), acceptance_(std::move(acceptance)) {
  if (!(acceptance_alphabet(acceptance_) == graph_.colours())) {
    throw DomainError("the acceptance condition and the edges use different colour alphabets");
  }
}

bool Automaton::operator==(const Automaton& o) const {
  return graph_ == o.graph_ && acceptance_ == o.acceptance_;
}

void require_deterministic(const TransitionGraph& g, const char* operation) {
  if (!g.is_deterministic()) {
    throw DomainError(std::string(operation) + " requires a deterministic automaton");
  }
}

}  // namespace acdkit
