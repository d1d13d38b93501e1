#include "dtc/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace dtc {

const char* to_string(AdmissibleKind k) {
  return k == AdmissibleKind::kFarber ? "farber" : "categorical";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::kExact: return "exact";
    case Status::kBounded: return "bounded";
    case Status::kBudgetExhausted: return "budget-exhausted";
    case Status::kNotCoverable: return "not-coverable";
  }
  return "?";
}

namespace {

SimplicialMap checked_inclusion(const ComplexPtr& sub, const ComplexPtr& ambient) {
  try {
    return inclusion_map(sub, ambient);
  } catch (const NotSimplicial& e) {
    throw InvalidInput(std::string("not a subcomplex: ") + e.what());
  }
}

BitSet facets_within(const Complex& ambient, const Complex& sub) {
  BitSet out;
  for (const auto& f : sub.facets()) {
    Simplex s;
    f.for_each([&](std::size_t v) { s.insert(*ambient.find(sub.label(static_cast<VertexId>(v)))); });
    if (auto i = ambient.facet_index(s)) out.insert(*i);
  }
  return out;
}

std::vector<VertexId> component_representatives(const Complex& k, VertexId preferred) {
  auto comp = k.components();
  std::vector<VertexId> reps{preferred};
  std::vector<bool> seen(k.num_vertices(), false);
  seen[comp[preferred]] = true;
  for (std::size_t v = 0; v < comp.size(); ++v) {
    if (seen[comp[v]]) continue;
    seen[comp[v]] = true;
    reps.push_back(static_cast<VertexId>(v));
  }
  return reps;
}

// Searches f ∼ constant for one constant per component of the codomain.
ClassResult to_some_constant(const SimplicialMap& f, const SearchOptions& options) {
  ClassResult combined;
  combined.verdict = Verdict::kNo;
  for (VertexId v : component_representatives(f.codomain(), f(0))) {
    ClassResult r = same_contiguity_class(f, constant_map(f.domain_ptr(), f.codomain_ptr(), v), options);
    combined.states += r.states;
    if (r.verdict == Verdict::kYes) {
      r.states = combined.states;
      return r;
    }
    if (r.verdict == Verdict::kUnknown) combined.verdict = Verdict::kUnknown;
  }
  return combined;
}

}  // namespace

// --- admissibility checks --------------------------------------------------

CheckResult is_farber(const ProductComplex& p, const Complex& omega, const SearchOptions& options) {
  ComplexPtr sub = share(omega);
  SimplicialMap incl = checked_inclusion(sub, p.product());
  SimplicialMap p1 = compose(projection(p, 1), incl);
  SimplicialMap p2 = compose(projection(p, 2), incl);

  ClassResult r = same_contiguity_class(p1, p2, options);
  CheckResult out;
  out.verdict = r.verdict;
  out.states = r.states;
  if (r.verdict != Verdict::kYes) return out;

  // h_i ↦ (π₁|Ω, h_i) turns π₁|Ω ∼ π₂|Ω into Δ∘σ ∼ ι_Ω with σ = π₁|Ω.
  std::vector<SimplicialMap> steps;
  for (const auto& h : r.witness->steps()) steps.push_back(pair_map(p1, h, p));
  AdmissibleSet set;
  set.facets = facets_within(*p.product(), *sub);
  set.kind = AdmissibleKind::kFarber;
  set.subcomplex = sub;
  set.witness.emplace(std::move(steps));
  set.section = p1;
  out.set = std::move(set);
  return out;
}

CheckResult is_farber(const ProductComplex& p, const BitSet& facet_subset,
                      const SearchOptions& options) {
  CheckResult r = is_farber(p, p.product()->subcomplex_by_facets(facet_subset), options);
  if (r.set) r.set->facets = facet_subset;
  return r;
}

CheckResult is_categorical(const ComplexPtr& k, const Complex& sub_complex,
                           const SearchOptions& options) {
  ComplexPtr sub = share(sub_complex);
  SimplicialMap incl = checked_inclusion(sub, k);
  ClassResult r = to_some_constant(incl, options);
  CheckResult out;
  out.verdict = r.verdict;
  out.states = r.states;
  if (r.verdict != Verdict::kYes) return out;
  AdmissibleSet set;
  set.facets = facets_within(*k, *sub);
  set.kind = AdmissibleKind::kCategorical;
  set.subcomplex = sub;
  set.witness = std::move(r.witness);
  out.set = std::move(set);
  return out;
}

CheckResult is_categorical(const ComplexPtr& k, const BitSet& facet_subset,
                           const SearchOptions& options) {
  CheckResult r = is_categorical(k, k->subcomplex_by_facets(facet_subset), options);
  if (r.set) r.set->facets = facet_subset;
  return r;
}

CheckResult is_categorical_in_square(const ProductComplex& p, const Complex& sub_complex,
                                     const SearchOptions& options) {
  ComplexPtr sub = share(sub_complex);
  SimplicialMap incl = checked_inclusion(sub, p.product());
  SimplicialMap q1 = compose(projection(p, 1), incl);
  SimplicialMap q2 = compose(projection(p, 2), incl);

  CheckResult out;
  ClassResult r1 = to_some_constant(q1, options);
  out.states = r1.states;
  if (r1.verdict != Verdict::kYes) {
    out.verdict = r1.verdict;
    return out;
  }
  ClassResult r2 = to_some_constant(q2, options);
  out.states += r2.states;
  if (r2.verdict != Verdict::kYes) {
    out.verdict = r2.verdict;
    return out;
  }

  // Move the first coordinate to its constant, then the second.
  std::vector<SimplicialMap> steps;
  for (const auto& h : r1.witness->steps()) steps.push_back(pair_map(h, q2, p));
  const SimplicialMap& c1 = r1.witness->back();
  for (std::size_t j = 1; j < r2.witness->size(); ++j)
    steps.push_back(pair_map(c1, r2.witness->steps()[j], p));

  out.verdict = Verdict::kYes;
  AdmissibleSet set;
  set.facets = facets_within(*p.product(), *sub);
  set.kind = AdmissibleKind::kCategorical;
  set.subcomplex = sub;
  set.witness.emplace(std::move(steps));
  out.set = std::move(set);
  return out;
}

// --- oracle ----------------------------------------------------------------

std::optional<bool> AdmissibilityOracle::infer(const BitSet& s, Mode mode) const {
  if (auto it = cache_.find(s); it != cache_.end()) {
    if (it->second.verdict == Verdict::kUnknown) return mode == Mode::kOptimistic;
    return it->second.verdict == Verdict::kYes;
  }
  for (const auto& p : passed_)
    if (s.is_subset_of(p)) return true;
  for (const auto& f : failed_)
    if (f.is_subset_of(s)) return false;
  if (mode == Mode::kOptimistic) {
    for (const auto& u : unknown_)
      if (s.is_subset_of(u)) return true;
  } else {
    for (const auto& u : unknown_)
      if (u.is_subset_of(s)) return false;
  }
  return std::nullopt;
}

CheckResult AdmissibilityOracle::result(const BitSet& s) {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(s); it != cache_.end()) return it->second;
  }
  CheckResult r = check_(s);
  std::lock_guard lock(mu_);
  auto [it, inserted] = cache_.try_emplace(s, r);
  if (inserted) {
    ++checks_;
    switch (r.verdict) {
      case Verdict::kYes: passed_.push_back(s); break;
      case Verdict::kNo: failed_.push_back(s); break;
      case Verdict::kUnknown: unknown_.push_back(s); break;
    }
  }
  return it->second;
}

bool AdmissibilityOracle::admissible(const BitSet& s, Mode mode) {
  if (s.empty()) return true;
  {
    std::lock_guard lock(mu_);
    if (auto known = infer(s, mode)) return *known;
  }
  CheckResult r = result(s);
  if (r.verdict == Verdict::kUnknown) return mode == Mode::kOptimistic;
  return r.verdict == Verdict::kYes;
}

bool AdmissibilityOracle::saw_unknown() const {
  std::lock_guard lock(mu_);
  return !unknown_.empty();
}

std::size_t AdmissibilityOracle::checks_run() const {
  std::lock_guard lock(mu_);
  return checks_;
}

// --- maximal sets ----------------------------------------------------------

namespace {

class MaximalSetSearch {
 public:
  MaximalSetSearch(AdmissibilityOracle& oracle, AdmissibilityOracle::Mode mode, unsigned threads)
      : oracle_(oracle), mode_(mode), threads_(std::max(1u, threads)) {}

  std::vector<BitSet> run(const std::vector<std::size_t>& items) {
    dfs(BitSet{}, items);
    std::vector<BitSet> maximal;
    for (const auto& c : found_) {
      bool dominated = std::any_of(found_.begin(), found_.end(), [&](const BitSet& o) {
        return o != c && c.is_subset_of(o);
      });
      if (!dominated && std::find(maximal.begin(), maximal.end(), c) == maximal.end())
        maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
  }

  /// Evaluates head ∪ {t} for every t, in parallel when threads > 1.
  std::vector<bool> compatible(const BitSet& head, const std::vector<std::size_t>& items) {
    std::vector<char> ok(items.size(), 0);
    auto work = [&](std::size_t i) {
      BitSet s = head;
      s.insert(items[i]);
      ok[i] = oracle_.admissible(s, mode_);
    };
    if (threads_ == 1 || items.size() < 2) {
      for (std::size_t i = 0; i < items.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      const unsigned n = std::min<unsigned>(threads_, static_cast<unsigned>(items.size()));
      for (unsigned t = 0; t < n; ++t)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < items.size();) work(i);
        });
      for (auto& th : pool) th.join();
    }
    return {ok.begin(), ok.end()};
  }

 private:
  bool subsumed(const BitSet& s) const {
    return std::any_of(found_.begin(), found_.end(), [&](const BitSet& f) { return s.is_subset_of(f); });
  }

  void dfs(const BitSet& head, const std::vector<std::size_t>& tail) {
    BitSet hut = head;
    for (auto t : tail) hut.insert(t);
    if (subsumed(hut)) return;
    if (oracle_.admissible(hut, mode_)) {
      found_.push_back(hut);
      return;
    }
    for (std::size_t i = 0; i < tail.size(); ++i) {
      BitSet next_head = head;
      next_head.insert(tail[i]);
      std::vector<std::size_t> rest(tail.begin() + static_cast<std::ptrdiff_t>(i) + 1, tail.end());
      auto ok = compatible(next_head, rest);
      std::vector<std::size_t> next_tail;
      for (std::size_t j = 0; j < rest.size(); ++j)
        if (ok[j]) next_tail.push_back(rest[j]);
      if (next_tail.empty()) {
        if (!subsumed(next_head)) found_.push_back(next_head);
      } else {
        dfs(next_head, next_tail);
      }
    }
  }

  AdmissibilityOracle& oracle_;
  AdmissibilityOracle::Mode mode_;
  unsigned threads_;
  std::vector<BitSet> found_;
};

}  // namespace

MaximalSets maximal_admissible_sets(const Complex& ambient, AdmissibilityOracle& oracle,
                                    AdmissibilityOracle::Mode mode, unsigned threads) {
  MaximalSetSearch search(oracle, mode, threads);
  std::vector<std::size_t> all(ambient.num_facets());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  MaximalSets out;
  auto single = search.compatible(BitSet{}, all);
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (single[i]) items.push_back(i);
    else out.uncoverable.push_back(i);
  }
  if (!items.empty()) {
    for (const auto& s : search.run(items)) {
      AdmissibleSet set;
      set.facets = s;
      if (CheckResult r = oracle.result(s); r.set) {
        set = *r.set;
      } else {
        set.subcomplex = share(ambient.subcomplex_by_facets(s));
      }
      out.sets.push_back(std::move(set));
    }
  }
  out.complete = !oracle.saw_unknown();
  return out;
}

// --- cover -----------------------------------------------------------------

CoverResult min_cover(const BitSet& universe, const std::vector<BitSet>& sets) {
  CoverResult out;
  BitSet reachable;
  for (const auto& s : sets) reachable |= s;
  if (!universe.is_subset_of(reachable)) return out;
  if (universe.empty()) {
    out.chosen.emplace();
    return out;
  }

  // Greedy incumbent.
  std::vector<std::size_t> best;
  {
    BitSet left = universe;
    while (!left.empty()) {
      std::size_t pick = 0, gain = 0;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        std::size_t g = (sets[i] & left).size();
        if (g > gain) gain = g, pick = i;
      }
      best.push_back(pick);
      left -= sets[pick];
    }
  }

  std::vector<std::size_t> chosen;
  auto recurse = [&](auto&& self, const BitSet& left) -> void {
    ++out.nodes;
    if (left.empty()) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    std::size_t widest = 0;
    for (const auto& s : sets) widest = std::max(widest, (s & left).size());
    const std::size_t bound = (left.size() + widest - 1) / widest;
    if (chosen.size() + bound >= best.size()) return;

    // Branch on the uncovered element with the fewest covering sets.
    std::size_t element = 0, fewest = sets.size() + 1;
    left.for_each([&](std::size_t e) {
      std::size_t c = 0;
      for (const auto& s : sets) c += s.contains(e);
      if (c < fewest) fewest = c, element = e;
    });
    std::vector<std::size_t> options;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i].contains(element)) options.push_back(i);
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return (sets[a] & left).size() > (sets[b] & left).size();
    });
    for (auto i : options) {
      chosen.push_back(i);
      self(self, left - sets[i]);
      chosen.pop_back();
    }
  };
  recurse(recurse, universe);
  std::sort(best.begin(), best.end());
  out.chosen = best;
  return out;
}

// --- invariants --------------------------------------------------------------

namespace {

InvariantResult cover_invariant(const Complex& ambient, const AdmissibilityCheck& check,
                                const InvariantOptions& options) {
  AdmissibilityOracle oracle(check);
  const BitSet universe = BitSet::range(ambient.num_facets());
  InvariantResult out;

  MaximalSets certain =
      maximal_admissible_sets(ambient, oracle, AdmissibilityOracle::Mode::kPessimistic, options.threads);
  std::vector<BitSet> family;
  for (const auto& s : certain.sets) family.push_back(s.facets);
  CoverResult upper = min_cover(universe, family);
  out.cover_nodes = upper.nodes;
  out.maximal_sets = certain.sets;
  if (upper.chosen) {
    out.upper_bound = static_cast<int>(upper.chosen->size()) - 1;
    for (auto i : *upper.chosen) out.cover.push_back(certain.sets[i]);
  }

  if (certain.complete) {
    out.admissibility_checks = oracle.checks_run();
    if (!upper.chosen) {
      out.status = Status::kNotCoverable;
      return out;
    }
    out.status = Status::kExact;
    out.value = out.lower_bound = *out.upper_bound;
    return out;
  }

  MaximalSets hopeful =
      maximal_admissible_sets(ambient, oracle, AdmissibilityOracle::Mode::kOptimistic, options.threads);
  std::vector<BitSet> loose;
  for (const auto& s : hopeful.sets) loose.push_back(s.facets);
  CoverResult lower = min_cover(universe, loose);
  out.cover_nodes += lower.nodes;
  out.admissibility_checks = oracle.checks_run();
  if (!lower.chosen) {
    out.status = Status::kNotCoverable;
    out.cover.clear();
    out.upper_bound.reset();
    return out;
  }
  out.lower_bound = static_cast<int>(lower.chosen->size()) - 1;
  if (out.upper_bound && *out.upper_bound == out.lower_bound) {
    out.status = Status::kExact;
    out.value = out.lower_bound;
  } else {
    out.status = out.upper_bound ? Status::kBounded : Status::kBudgetExhausted;
  }
  return out;
}

}  // namespace

InvariantResult tc(const ComplexPtr& k, const InvariantOptions& options) {
  ProductComplex p = categorical_square(k);
  return cover_invariant(
      *p.product(), [&](const BitSet& s) { return is_farber(p, s, options.search); }, options);
}

InvariantResult scat(const ComplexPtr& k, const InvariantOptions& options) {
  return cover_invariant(
      *k, [&](const BitSet& s) { return is_categorical(k, s, options.search); }, options);
}

InvariantResult scat_of_square(const ProductComplex& p, const InvariantOptions& options) {
  return cover_invariant(
      *p.product(),
      [&](const BitSet& s) {
        CheckResult r = is_categorical_in_square(p, p.product()->subcomplex_by_facets(s), options.search);
        if (r.set) r.set->facets = s;
        return r;
      },
      options);
}

// --- motion planning -------------------------------------------------------

const AdmissibleSet* covering_set(const ProductComplex& p, const std::vector<AdmissibleSet>& cover,
                                  VertexId x, VertexId y) {
  const std::string label = p.product()->label(p.pair(x, y));
  for (const auto& s : cover)
    if (s.kind == AdmissibleKind::kFarber && s.subcomplex->find(label)) return &s;
  return nullptr;
}

MotionPlan motion_plan(const ProductComplex& p, const AdmissibleSet& farber, VertexId x, VertexId y) {
  if (farber.kind != AdmissibleKind::kFarber || !farber.witness || !farber.section)
    throw InvalidInput("motion planning needs a certified Farber set");
  const auto omega = farber.subcomplex->find(p.product()->label(p.pair(x, y)));
  if (!omega) throw InvalidInput("(" + p.base()->label(x) + ", " + p.base()->label(y) +
                                 ") is not a vertex of the Farber subcomplex");
  MotionPlan plan;
  plan.from = x;
  plan.to = y;
  plan.midpoint = (*farber.section)(*omega);
  const auto& steps = farber.witness->steps();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) plan.pairs.push_back(p.unpair((*it)(*omega)));
  for (const auto& [xj, yj] : plan.pairs) plan.path.push_back(xj);
  for (auto it = plan.pairs.rbegin() + 1; it != plan.pairs.rend(); ++it) plan.path.push_back(it->second);
  return plan;
}

std::string check_motion_plan(const Complex& k, const MotionPlan& plan) {
  if (plan.pairs.empty()) return "plan has no steps";
  const std::size_t m = plan.pairs.size() - 1;
  if (plan.path.size() != 2 * m + 1) return "path length does not match the witness length";
  if (plan.path.front() != plan.from) return "path does not start at the source";
  if (plan.path.back() != plan.to) return "path does not end at the target";
  if (plan.path[m] != plan.midpoint) return "path does not pass through the midpoint";
  if (plan.pairs.front() != std::make_pair(plan.from, plan.to))
    return "last witness step is not the inclusion at (x, y)";
  if (plan.pairs.back() != std::make_pair(plan.midpoint, plan.midpoint))
    return "first witness step is not the diagonal of the section";
  for (std::size_t i = 0; i + 1 < plan.path.size(); ++i) {
    Simplex s{plan.path[i], plan.path[i + 1]};
    if (!k.is_simplex(s)) return "points " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                 " do not span a simplex";
  }
  return {};
}

}  // namespace dtc
