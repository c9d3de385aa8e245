#include "acdkit/minimise.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <unordered_map>

#include "acdkit/acd.hpp"
#include "acdkit/error.hpp"
#include "acdkit/streett.hpp"

namespace acdkit {

ColourSet rabin_max_rejected_subset(const RabinCondition& cond, ColourSet s) {
  ColourSet t = s;
  for (;;) {
    auto hit = std::find_if(cond.pairs().begin(), cond.pairs().end(), [t](const RabinPair& p) {
      return t.intersects(p.green) && !t.intersects(p.red);
    });
    if (hit == cond.pairs().end()) return t;
    t = t - hit->green;
  }
}

std::optional<ColourSet> rabin_difference_witness(const RabinCondition& r, const RabinCondition& r2) {
  if (r.alphabet() != r2.alphabet()) {
    throw DomainError("Rabin conditions over different alphabets");
  }
  const ColourSet all = r.alphabet().full();
  std::vector<ColourSet> candidates;
  for (const RabinPair& p : r.pairs()) {
    const ColourSet s = rabin_max_rejected_subset(r2, all - p.red);
    if (s.intersects(p.green)) candidates.push_back(s);
  }
  for (ColourSet c : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [c](ColourSet o) { return c.strict_subset_of(o); });
    if (!dominated) return c;
  }
  return std::nullopt;
}

RabinCondition minimise_rabin_pairs(const RabinCondition& cond) {
  const RabinCondition input = cond.with_semantics(PairSemantics::rabin);
  const ColourSet all = input.alphabet().full();
  RabinCondition current(input.alphabet(), {});
  while (auto s = rabin_difference_witness(input, current)) {
    const ColourSet t = rabin_max_rejected_subset(input, *s);
    std::vector<RabinPair> pairs = current.pairs();
    pairs.push_back({all - t, all - *s});
    current = RabinCondition(input.alphabet(), std::move(pairs));
  }
  return current;
}

RabinCondition minimise_streett_pairs(const RabinCondition& cond) {
  return minimise_rabin_pairs(cond).with_semantics(PairSemantics::streett);
}

RecolouringCandidate single_colour_candidate(std::size_t k, const std::vector<std::size_t>& colour) {
  RecolouringCandidate c;
  c.k = k;
  for (std::size_t x : colour) {
    if (x >= k) throw DomainError("colour " + std::to_string(x + 1) + " exceeds k = " + std::to_string(k));
    c.colours.push_back(ColourSet::singleton(static_cast<ColourIndex>(x)));
  }
  return c;
}

ColourAlphabet target_alphabet(std::size_t k) { return ColourAlphabet::numbered(k, 1); }

namespace {

void check_candidate(const TransitionGraph& g, const RecolouringCandidate& cand) {
  if (cand.k == 0 || cand.k > kMaxColours) {
    throw DomainError("a recolouring needs between 1 and 64 colours");
  }
  if (cand.colours.size() != g.num_edges()) {
    throw DomainError("a recolouring needs one colour set per edge (" + std::to_string(g.num_edges()) +
                      "), got " + std::to_string(cand.colours.size()));
  }
  const ColourSet allowed = ColourSet::full(cand.k);
  for (ColourSet c : cand.colours) {
    if (c.empty() || !c.subset_of(allowed)) {
      throw DomainError("recolouring sets must be non-empty subsets of 1.." + std::to_string(cand.k));
    }
  }
}

StreettTerm shifted(const StreettTerm& term, std::size_t offset) {
  StreettTerm out;
  for (const RabinPair& p : term) {
    out.push_back({ColourSet(p.green.bits() << offset), ColourSet(p.red.bits() << offset)});
  }
  return out;
}

EdgeSet reachable_recurrent_edges(const TransitionGraph& g) {
  EdgeSet out = g.no_edges();
  for (const EdgeSet& c : scc_decompose(g, g.reachable_edges()).components) out |= c;
  return out;
}

/// The graph carrying col ⊔ col′ (col′ shifted past the original colours).
TransitionGraph two_layer_graph(const TransitionGraph& g, const RecolouringCandidate& cand) {
  std::vector<std::string> names;
  for (const auto& n : g.colours().names()) names.push_back("c:" + n);
  for (std::size_t x = 1; x <= cand.k; ++x) names.push_back("t:" + std::to_string(x));
  if (names.size() > kMaxColours) {
    throw DomainError("family extraction needs |Γ| + k ≤ 64 colours");
  }
  const std::size_t shift = g.colours().size();
  std::vector<ColourSet> colours;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    colours.push_back(g.edge(e).colours | ColourSet(cand.colours[e].bits() << shift));
  }
  return g.recoloured(ColourAlphabet(std::move(names)), colours);
}

MullerFamily extract_family(const Automaton& a, const RecolouringCandidate& cand, const Caps& caps) {
  enforce_cap("target_colours", cand.k, caps.target_colours);
  const TransitionGraph& g = a.graph();
  const TransitionGraph h = two_layer_graph(g, cand);
  const std::size_t shift = g.colours().size();
  const EdgeSet rel = reachable_recurrent_edges(g);
  ColourSet used;
  for (auto e = rel.find_first(); e != EdgeSet::npos; e = rel.find_next(e)) used |= cand.colours[e];
  const auto acc = acceptance_terms(a.acceptance(), true);
  const ColourSet everything = h.colours().full();
  std::vector<ColourSet> sets;
  const std::uint64_t u = used.bits();
  for (std::uint64_t x = u; x != 0; x = (x - 1) & u) {
    StreettTerm exact;
    for (ColourIndex c : used) {
      const ColourSet lifted = ColourSet::singleton(static_cast<ColourIndex>(c + shift));
      if ((x >> c) & 1U) {
        exact.push_back({everything, lifted});
      } else {
        exact.push_back({lifted, ColourSet()});
      }
    }
    for (const StreettTerm& t : acc) {
      StreettTerm both = t;
      both.insert(both.end(), exact.begin(), exact.end());
      if (streett_lasso(h, both)) {
        sets.push_back(ColourSet(x));
        break;
      }
    }
  }
  return MullerFamily(target_alphabet(cand.k), std::move(sets));
}

RecolouringResult compatible_by_product(const Automaton& a, const RecolouringCandidate& cand) {
  const TransitionGraph& g = a.graph();
  ProductSide side{&g, {own_layer(g), ColourLayer{target_alphabet(cand.k), cand.colours}}, false};
  const Product prod = build_product(side, side, ProductMode::independent);
  StreettTerm same;
  for (ColourIndex x = 0; x < cand.k; ++x) {
    const ColourSet first = prod.lift(0, 1, ColourSet::singleton(x));
    const ColourSet second = prod.lift(1, 1, ColourSet::singleton(x));
    same.push_back({first, second});
    same.push_back({second, first});
  }
  const auto acc = acceptance_terms(a.acceptance(), true);
  const auto rej = acceptance_terms(a.acceptance(), false);
  for (const StreettTerm& ta : acc) {
    const StreettTerm la = prod.lift(0, 0, ta);
    for (const StreettTerm& tr : rej) {
      StreettTerm both = la;
      const StreettTerm lr = prod.lift(1, 0, tr);
      both.insert(both.end(), lr.begin(), lr.end());
      both.insert(both.end(), same.begin(), same.end());
      if (auto l = streett_lasso(prod.graph, both)) {
        RecolouringResult r;
        r.accepted_word = prod.project(l->word, 0);
        r.rejected_word = prod.project(l->word, 1);
        r.accepted_cycle = g.no_edges();
        r.rejected_cycle = g.no_edges();
        for (auto e = l->cycle.find_first(); e != EdgeSet::npos; e = l->cycle.find_next(e)) {
          r.accepted_cycle.set(prod.origin[e][0]);
          r.rejected_cycle.set(prod.origin[e][1]);
        }
        return r;
      }
    }
  }
  RecolouringResult r;
  r.compatible = true;
  return r;
}

RecolouringResult compatible_by_cycles(const Automaton& a, const RecolouringCandidate& cand,
                                       const Caps& caps) {
  const TransitionGraph& g = a.graph();
  // col′-set -> (an accepting cycle, a rejecting cycle)
  std::map<std::uint64_t, std::pair<std::optional<EdgeSet>, std::optional<EdgeSet>>> seen;
  for (const EdgeSet& c : enumerate_reachable_cycles(g, caps)) {
    ColourSet x;
    for (auto e = c.find_first(); e != EdgeSet::npos; e = c.find_next(e)) x |= cand.colours[e];
    auto& slot = seen[x.bits()];
    const bool accepting = cycle_accepting(a, c);
    if (accepting && !slot.first) slot.first = c;
    if (!accepting && !slot.second) slot.second = c;
    if (slot.first && slot.second) {
      RecolouringResult r;
      r.accepted_cycle = *slot.first;
      r.rejected_cycle = *slot.second;
      r.accepted_word = cycle_lasso(g, r.accepted_cycle).word;
      r.rejected_word = cycle_lasso(g, r.rejected_cycle).word;
      return r;
    }
  }
  RecolouringResult r;
  r.compatible = true;
  std::vector<ColourSet> sets;
  for (const auto& [bits, slot] : seen) {
    if (slot.first) sets.push_back(ColourSet(bits));
  }
  r.family = MullerFamily(target_alphabet(cand.k), std::move(sets));
  return r;
}

}  // namespace

RecolouringResult recolouring_compatible(const Automaton& a, const RecolouringCandidate& cand,
                                         RecolouringBackend backend, bool want_family,
                                         const Caps& caps) {
  require_deterministic(a.graph(), "recolouring_compatible");
  check_candidate(a.graph(), cand);
  RecolouringResult r = backend == RecolouringBackend::product ? compatible_by_product(a, cand)
                                                               : compatible_by_cycles(a, cand, caps);
  if (!r.compatible || !want_family) {
    if (!want_family) r.family.reset();
    return r;
  }
  if (!r.family) r.family = extract_family(a, cand, caps);
  return r;
}

Automaton apply_recolouring(const Automaton& a, const RecolouringCandidate& cand,
                            const MullerFamily& family) {
  check_candidate(a.graph(), cand);
  return Automaton(a.graph().recoloured(target_alphabet(cand.k), cand.colours), family);
}

namespace {

/// Backtracking over colour assignments of the edges on reachable cycles,
/// with pruning by pairs of sample cycles of opposite acceptance and
/// counterexample refinement from the product check.
class ColourSearch {
 public:
  ColourSearch(const Automaton& a, bool multi, const Caps& caps)
      : a_(a), g_(a.graph()), multi_(multi), caps_(caps) {
    require_deterministic(g_, "min_colours_on_automaton");
    const EdgeSet rel = reachable_recurrent_edges(g_);
    enforce_cap("search_edges", rel.count(), caps.search_edges);
    order_edges(rel);
    build_sample(rel);
  }

  std::size_t relevant() const { return order_.size(); }
  std::size_t distinct_edge_sets() const {
    std::vector<std::uint64_t> sets;
    for (EdgeId e : order_) sets.push_back(g_.edge(e).colours.bits());
    std::sort(sets.begin(), sets.end());
    return static_cast<std::size_t>(std::unique(sets.begin(), sets.end()) - sets.begin());
  }

  std::optional<ColourSearchResult> run(std::size_t k) {
    k_ = k;
    values_.clear();
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << k); ++v) {
      if (multi_ || std::has_single_bit(v)) values_.push_back(v);
    }
    std::stable_sort(values_.begin(), values_.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });
    assignment_.assign(order_.size(), 0);
    found_.reset();
    jump_ = kNoJump;
    if (order_.empty()) {
      accept_full();
    } else {
      descend(0, 0);
    }
    if (!found_) return std::nullopt;
    return found_;
  }

  std::size_t checks() const { return checks_; }

 private:
  struct Constraint {
    std::uint64_t small;  // positions of the smaller (or first) cycle
    std::uint64_t large;  // positions of the larger (or second) cycle
    bool nested;
  };

  void order_edges(const EdgeSet& rel) {
    const AcdForest forest = compute_acd(a_);
    std::vector<char> placed(g_.num_edges(), 0);
    auto place = [&](const EdgeSet& cycle) {
      for (auto e = cycle.find_first(); e != EdgeSet::npos; e = cycle.find_next(e)) {
        if (!rel.test(e) || placed[e]) continue;
        placed[e] = 1;
        pos_[static_cast<EdgeId>(e)] = order_.size();
        order_.push_back(static_cast<EdgeId>(e));
      }
    };
    for (const AcdNode& n : forest.nodes) {
      if (n.children.empty()) place(n.cycle);
    }
    for (const AcdNode& n : forest.nodes) place(n.cycle);
    acd_cycles_.clear();
    for (const AcdNode& n : forest.nodes) {
      if (n.cycle.is_subset_of(rel)) acd_cycles_.push_back(n.cycle);
    }
  }

  std::uint64_t mask_of(const EdgeSet& cycle) const {
    std::uint64_t m = 0;
    for (auto e = cycle.find_first(); e != EdgeSet::npos; e = cycle.find_next(e)) {
      m |= std::uint64_t{1} << pos_.at(static_cast<EdgeId>(e));
    }
    return m;
  }

  void build_sample(const EdgeSet& rel) {
    std::vector<EdgeSet> base = acd_cycles_;
    const auto sccs = scc_decompose(g_, rel).components;
    for (const EdgeSet& comp : sccs) {
      for (auto e = comp.find_first(); e != EdgeSet::npos; e = comp.find_next(e)) {
        base.push_back(shortest_cycle_through(static_cast<EdgeId>(e), comp));
      }
    }
    base = dedupe(std::move(base));
    std::vector<EdgeSet> sample = base;
    constexpr std::size_t kSampleLimit = 400;
    for (std::size_t i = 0; i < base.size() && sample.size() < kSampleLimit; ++i) {
      for (std::size_t j = i + 1; j < base.size() && sample.size() < kSampleLimit; ++j) {
        if (g_.states_of(base[i]).intersects(g_.states_of(base[j]))) sample.push_back(base[i] | base[j]);
      }
    }
    sample = dedupe(std::move(sample));
    std::vector<std::uint64_t> masks;
    std::vector<char> accepting;
    for (const EdgeSet& c : sample) {
      masks.push_back(mask_of(c));
      accepting.push_back(cycle_accepting(a_, c) ? 1 : 0);
    }
    by_position_.assign(order_.size(), {});
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = 0; j < masks.size(); ++j) {
        if (accepting[i] == accepting[j] || i == j) continue;
        if ((masks[i] & ~masks[j]) == 0 && masks[i] != masks[j]) add_constraint({masks[i], masks[j], true});
      }
    }
  }

  EdgeSet shortest_cycle_through(EdgeId e, const EdgeSet& comp) const {
    const StateId from = g_.edge(e).dst;
    const StateId to = g_.edge(e).src;
    EdgeSet out = g_.no_edges();
    out.set(e);
    if (from == to) return out;
    std::vector<EdgeId> via(g_.num_states(), kNoEdge);
    std::vector<char> seen(g_.num_states(), 0);
    std::vector<StateId> queue{from};
    seen[from] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[to]; ++head) {
      for (EdgeId x : g_.out_edges(queue[head])) {
        if (!comp.test(x) || seen[g_.edge(x).dst]) continue;
        seen[g_.edge(x).dst] = 1;
        via[g_.edge(x).dst] = x;
        queue.push_back(g_.edge(x).dst);
      }
    }
    for (StateId s = to; s != from; s = g_.edge(via[s]).src) out.set(via[s]);
    return out;
  }

  static std::vector<EdgeSet> dedupe(std::vector<EdgeSet> v) {
    std::sort(v.begin(), v.end(), cycle_order_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  void add_constraint(Constraint c) {
    const std::size_t id = constraints_.size();
    constraints_.push_back(c);
    const std::uint64_t trigger_set = c.nested ? (c.large & ~c.small) : (c.small | c.large);
    const std::size_t trigger = 63 - static_cast<std::size_t>(std::countl_zero(trigger_set));
    by_position_[trigger].push_back(id);
    if (!c.nested) return;
    for (std::uint64_t s = c.small; s != 0; s &= s - 1) {
      const auto p = static_cast<std::size_t>(std::countr_zero(s));
      if (p > trigger) by_position_[p].push_back(id);
    }
  }

  std::uint64_t colours_of(std::uint64_t positions, std::size_t upto) const {
    std::uint64_t c = 0;
    for (std::uint64_t s = positions; s != 0; s &= s - 1) {
      const auto p = static_cast<std::size_t>(std::countr_zero(s));
      if (p <= upto) c |= assignment_[p];
    }
    return c;
  }

  bool violated(std::size_t pos) const {
    for (std::size_t i = 0; i < by_position_[pos].size(); ++i) {
      const Constraint& c = constraints_[by_position_[pos][i]];
      if (c.nested) {
        const std::uint64_t diff = colours_of(c.large & ~c.small, pos);
        if ((diff & ~colours_of(c.small, pos)) == 0) return true;
      } else if (colours_of(c.small, pos) == colours_of(c.large, pos)) {
        return true;
      }
    }
    return false;
  }

  void descend(std::size_t pos, std::uint64_t used) {
    for (std::uint64_t v : values_) {
      if (found_) return;
      const std::uint64_t now = used | v;
      if ((now & (now + 1)) != 0) continue;  // colours must be introduced in order
      assignment_[pos] = v;
      if (violated(pos)) continue;
      if (pos + 1 == order_.size()) {
        accept_full();
      } else {
        descend(pos + 1, now);
      }
      if (jump_ != kNoJump) {
        if (jump_ < pos) return;
        jump_ = kNoJump;
      }
    }
  }

  /// First position at which the (violated) constraint `id` is detected.
  std::size_t detection_point(std::size_t id) const {
    for (std::size_t p = 0; p < by_position_.size(); ++p) {
      const auto& ids = by_position_[p];
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
      const Constraint& c = constraints_[id];
      if (c.nested) {
        const std::uint64_t diff = colours_of(c.large & ~c.small, p);
        if ((diff & ~colours_of(c.small, p)) == 0) return p;
      } else if (colours_of(c.small, p) == colours_of(c.large, p)) {
        return p;
      }
    }
    return by_position_.size() - 1;
  }

  RecolouringCandidate candidate() const {
    RecolouringCandidate cand;
    cand.k = k_;
    cand.colours.assign(g_.num_edges(), ColourSet::singleton(0));
    for (std::size_t p = 0; p < order_.size(); ++p) cand.colours[order_[p]] = ColourSet(assignment_[p]);
    return cand;
  }

  void accept_full() {
    ++checks_;
    RecolouringCandidate cand = candidate();
    RecolouringResult r = recolouring_compatible(a_, cand, RecolouringBackend::product, false, caps_);
    if (r.compatible) {
      ColourSearchResult out;
      out.k = k_;
      out.family = *recolouring_compatible(a_, cand, RecolouringBackend::product, true, caps_).family;
      out.candidate = std::move(cand);
      out.checks = checks_;
      found_ = std::move(out);
      return;
    }
    const std::uint64_t acc = mask_of(r.accepted_cycle);
    const std::uint64_t rej = mask_of(r.rejected_cycle);
    if ((acc & ~rej) == 0 && acc != rej) {
      add_constraint({acc, rej, true});
    } else if ((rej & ~acc) == 0 && acc != rej) {
      add_constraint({rej, acc, true});
    } else {
      add_constraint({acc, rej, false});
    }
    jump_ = detection_point(constraints_.size() - 1);
  }

  static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);
  std::size_t jump_ = kNoJump;

  const Automaton& a_;
  const TransitionGraph& g_;
  bool multi_;
  const Caps& caps_;
  std::vector<EdgeId> order_;
  std::unordered_map<EdgeId, std::size_t> pos_;
  std::vector<EdgeSet> acd_cycles_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> by_position_;
  std::size_t k_ = 1;
  std::vector<std::uint64_t> values_;
  std::vector<std::uint64_t> assignment_;
  std::optional<ColourSearchResult> found_;
  std::size_t checks_ = 0;
};

}  // namespace

std::optional<ColourSearchResult> colour_type_search(const Automaton& a, std::size_t k, bool multi,
                                                      const Caps& caps) {
  if (k == 0) throw DomainError("the number of colours must be positive");
  enforce_cap("target_colours", k, caps.target_colours);
  ColourSearch search(a, multi, caps);
  return search.run(k);
}

ColourSearchResult min_colours_on_automaton(const Automaton& a, bool multi, const Caps& caps) {
  ColourSearch search(a, multi, caps);
  const std::size_t bound = std::max<std::size_t>(1, search.distinct_edge_sets());
  for (std::size_t k = 1; k < bound; ++k) {
    enforce_cap("target_colours", k, caps.target_colours);
    if (auto r = search.run(k)) return *r;
  }
  // One colour per distinct edge colour set is always compatible.
  const TransitionGraph& g = a.graph();
  std::map<std::uint64_t, std::size_t> index;
  const EdgeSet rel = reachable_recurrent_edges(g);
  for (auto e = rel.find_first(); e != EdgeSet::npos; e = rel.find_next(e)) {
    index.emplace(g.edge(static_cast<EdgeId>(e)).colours.bits(), index.size());
  }
  std::vector<std::size_t> colour(g.num_edges(), 0);
  for (auto e = rel.find_first(); e != EdgeSet::npos; e = rel.find_next(e)) {
    colour[e] = index.at(g.edge(static_cast<EdgeId>(e)).colours.bits());
  }
  ColourSearchResult out;
  out.k = bound;
  out.candidate = single_colour_candidate(bound, colour);
  const RecolouringResult r = recolouring_compatible(a, out.candidate, RecolouringBackend::product, true, caps);
  if (!r.compatible) throw Error("internal error: the edge-set recolouring is not compatible");
  out.family = *r.family;
  out.checks = search.checks() + 1;
  return out;
}

std::vector<EdgeSet> acd_edge_classes(const Automaton& a) {
  const TransitionGraph& g = a.graph();
  const AcdForest forest = compute_acd(a);
  std::map<std::vector<std::size_t>, EdgeSet> classes;
  std::vector<std::vector<std::size_t>> key(g.num_edges());
  for (std::size_t n = 0; n < forest.nodes.size(); ++n) {
    const EdgeSet& c = forest.nodes[n].cycle;
    for (auto e = c.find_first(); e != EdgeSet::npos; e = c.find_next(e)) key[e].push_back(n);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [it, inserted] = classes.emplace(key[e], g.no_edges());
    it->second.set(e);
  }
  std::vector<EdgeSet> out;
  for (auto& [k, s] : classes) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(),
            [](const EdgeSet& x, const EdgeSet& y) { return x.find_first() < y.find_first(); });
  return out;
}

RabinPairSearchResult min_rabin_pairs_on_automaton(const Automaton& a, std::size_t k, bool per_edge) {
  const TransitionGraph& g = a.graph();
  require_deterministic(g, "min_rabin_pairs_on_automaton");
  RabinPairSearchResult out;
  if (per_edge) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EdgeSet s = g.no_edges();
      s.set(e);
      out.classes.push_back(std::move(s));
    }
  } else {
    out.classes = acd_edge_classes(a);
  }
  const std::size_t c = out.classes.size();
  enforce_cap("rabin_classes", c, 8);
  const std::size_t shift = g.colours().size();
  if (shift + c > kMaxColours) throw DomainError("too many colours for the pair search");

  std::vector<std::size_t> class_of(g.num_edges());
  for (std::size_t i = 0; i < c; ++i) {
    for (auto e = out.classes[i].find_first(); e != EdgeSet::npos; e = out.classes[i].find_next(e)) {
      class_of[e] = i;
    }
  }
  std::vector<std::string> names;
  for (const auto& n : g.colours().names()) names.push_back("c:" + n);
  for (std::size_t i = 0; i < c; ++i) names.push_back("k" + std::to_string(i + 1));
  std::vector<ColourSet> both;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    both.push_back(g.edge(e).colours | ColourSet::singleton(static_cast<ColourIndex>(shift + class_of[e])));
  }
  const TransitionGraph h = g.recoloured(ColourAlphabet(std::move(names)), both);
  const ColourSet everything = h.colours().full();
  const auto acc = acceptance_terms(a.acceptance(), true);
  const auto rej = acceptance_terms(a.acceptance(), false);
  auto lift = [&](ColourSet s) { return ColourSet(s.bits() << shift); };

  // Sound pairs: every reachable cycle they accept is accepting.
  std::vector<RabinPair> sound;
  const std::uint64_t limit = std::uint64_t{1} << c;
  for (std::uint64_t green = 1; green < limit; ++green) {
    for (std::uint64_t red = 0; red < limit; ++red) {
      if ((green & red) != 0) continue;
      const StreettTerm pair_term{{lift(ColourSet(red)), ColourSet()}, {everything, lift(ColourSet(green))}};
      bool ok = true;
      for (const StreettTerm& tr : rej) {
        StreettTerm t = shifted(tr, 0);
        t.insert(t.end(), pair_term.begin(), pair_term.end());
        if (streett_lasso(h, t)) {
          ok = false;
          break;
        }
      }
      if (ok) sound.push_back({ColourSet(green), ColourSet(red)});
    }
  }
  std::vector<RabinPair> maximal;
  for (const RabinPair& p : sound) {
    const bool dominated = std::any_of(sound.begin(), sound.end(), [&](const RabinPair& q) {
      return !(q == p) && p.green.subset_of(q.green) && q.red.subset_of(p.red);
    });
    if (!dominated) maximal.push_back(p);
  }

  auto covers = [&](const std::vector<RabinPair>& pairs) {
    for (const StreettTerm& ta : acc) {
      StreettTerm t = ta;
      for (const RabinPair& p : pairs) t.push_back({lift(p.green), lift(p.red)});
      if (streett_lasso(h, t)) return false;
    }
    return true;
  };

  std::optional<std::vector<RabinPair>> chosen;
  const std::size_t take = std::min(k, maximal.size());
  std::vector<std::size_t> idx(take);
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t depth, std::size_t from) {
    if (chosen) return;
    if (depth == take) {
      std::vector<RabinPair> pairs;
      for (std::size_t i : idx) pairs.push_back(maximal[i]);
      if (covers(pairs)) chosen = std::move(pairs);
      return;
    }
    for (std::size_t i = from; i + (take - depth) <= maximal.size() && !chosen; ++i) {
      idx[depth] = i;
      pick(depth + 1, i + 1);
    }
  };
  pick(0, 0);
  if (!chosen) return out;

  const ColourAlphabet class_alphabet = ColourAlphabet::numbered(c, 1);
  std::vector<ColourSet> class_colours;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    class_colours.push_back(ColourSet::singleton(static_cast<ColourIndex>(class_of[e])));
  }
  Automaton cert(g.recoloured(class_alphabet, class_colours), RabinCondition(class_alphabet, *chosen));
  if (!equivalent_deterministic(a, cert).equivalent) {
    throw Error("internal error: Rabin pair certificate is not equivalent");
  }
  out.found = true;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace acdkit
