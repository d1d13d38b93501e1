#include "dtc/contiguity_search.hpp"

#include <deque>
#include <string>
#include <unordered_map>

#include "dtc/collapse.hpp"

namespace dtc {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

namespace {

// Codomain ids are < 256, so a map packs into one byte per domain vertex.
std::string pack(const std::vector<VertexId>& a) { return std::string(a.begin(), a.end()); }

std::vector<VertexId> unpack(const std::string& s) {
  std::vector<VertexId> a(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) a[i] = static_cast<unsigned char>(s[i]);
  return a;
}

// f, r1∘f, r2∘r1∘f, ... with repeated maps dropped.
std::vector<std::vector<VertexId>> retraction_chain(
    const std::vector<VertexId>& f, const std::vector<std::vector<VertexId>>& stages) {
  std::vector<std::vector<VertexId>> chain{f};
  for (const auto& stage : stages) {
    std::vector<VertexId> next(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) next[v] = stage[f[v]];
    if (next != chain.back()) chain.push_back(std::move(next));
  }
  return chain;
}

class ComponentSearch {
 public:
  ComponentSearch(const SimplicialMap& shape, BitSet allowed, const SearchOptions& options)
      : shape_(shape), dom_(shape.domain()), cod_(shape.codomain()),
        allowed_(allowed.elements()), options_(options) {}

  // Shortest move sequence from `from` to `to`, or nullopt with verdict set.
  std::optional<std::vector<std::vector<VertexId>>> run(const std::vector<VertexId>& from,
                                                        const std::vector<VertexId>& to) {
    const std::string start = pack(from), goal = pack(to);
    states_.push_back(start);
    parent_.push_back(kNone);
    index_.emplace(start, 0);
    if (start == goal) return path_to(0);

    std::deque<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
      const std::uint32_t cur = frontier.front();
      frontier.pop_front();
      std::optional<std::uint32_t> found;
      bool over_budget = false;
      expand(unpack(states_[cur]), [&](const std::vector<VertexId>& next) {
        std::string key = pack(next);
        auto [it, inserted] = index_.try_emplace(key, static_cast<std::uint32_t>(states_.size()));
        if (!inserted) return true;
        states_.push_back(std::move(key));
        parent_.push_back(cur);
        if (states_.back() == goal) {
          found = it->second;
          return false;
        }
        if (states_.size() > options_.budget) {
          over_budget = true;
          return false;
        }
        frontier.push_back(it->second);
        return true;
      });
      if (found) return path_to(*found);
      if (over_budget) {
        verdict_ = Verdict::kUnknown;
        return std::nullopt;
      }
    }
    verdict_ = Verdict::kNo;
    return std::nullopt;
  }

  Verdict verdict() const { return verdict_; }
  std::size_t states() const { return states_.size(); }

 private:
  static constexpr std::uint32_t kNone = ~0u;

  template <typename Visit>
  void expand(const std::vector<VertexId>& h, Visit&& visit) {
    if (options_.moves == MoveSet::kContiguous) {
      BitSet allowed;
      for (auto c : allowed_) allowed.insert(c);
      auto map = SimplicialMap::trusted(shape_.domain_ptr(), shape_.codomain_ptr(), h);
      for_each_neighbor(map, [&](const SimplicialMap& g) {
        for (auto w : g.assignment())
          if (!allowed.contains(w)) return true;
        return visit(g.assignment());
      });
      return;
    }
    std::vector<Simplex> image(dom_.num_facets());
    for (std::size_t i = 0; i < image.size(); ++i)
      dom_.facet(i).for_each([&](std::size_t v) { image[i].insert(h[v]); });
    std::vector<VertexId> next = h;
    for (std::size_t u = 0; u < h.size(); ++u) {
      const auto& star = dom_.star(static_cast<VertexId>(u));
      for (auto c : allowed_) {
        if (c == h[u]) continue;
        bool ok = true;
        for (auto fi : star) {
          Simplex s = image[fi];
          s.insert(c);
          if (!cod_.is_simplex(s)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        next[u] = static_cast<VertexId>(c);
        if (!visit(next)) return;
        next[u] = h[u];
      }
    }
  }

  std::vector<std::vector<VertexId>> path_to(std::uint32_t i) const {
    std::vector<std::vector<VertexId>> path;
    for (; i != kNone; i = parent_[i]) path.push_back(unpack(states_[i]));
    return {path.rbegin(), path.rend()};
  }

  const SimplicialMap& shape_;
  const Complex& dom_;
  const Complex& cod_;
  std::vector<std::size_t> allowed_;
  const SearchOptions& options_;
  std::vector<std::string> states_;
  std::vector<std::uint32_t> parent_;
  std::unordered_map<std::string, std::uint32_t> index_;
  Verdict verdict_ = Verdict::kYes;
};

}  // namespace

ContiguityWitness shorten_witness(const ContiguityWitness& w) {
  const auto& steps = w.steps();
  std::vector<SimplicialMap> out{steps.front()};
  std::size_t i = 0;
  while (i + 1 < steps.size()) {
    std::size_t j = steps.size() - 1;
    while (j > i + 1 && !are_contiguous(steps[i], steps[j])) --j;
    out.push_back(steps[j]);
    i = j;
  }
  return ContiguityWitness(std::move(out));
}

ClassResult same_contiguity_class(const SimplicialMap& f, const SimplicialMap& g,
                                  const SearchOptions& options) {
  if (!f.same_shape(g)) throw DomainMismatch("maps do not share domain and codomain");
  if (f.codomain().num_vertices() > 256)
    throw InvalidInput("codomain too large for contiguity search");

  ClassResult result;
  if (f == g) {
    result.verdict = Verdict::kYes;
    result.witness.emplace(std::vector<SimplicialMap>{f});
    result.states = 1;
    return result;
  }
  if (are_contiguous(f, g)) {
    result.verdict = Verdict::kYes;
    result.witness.emplace(std::vector<SimplicialMap>{f, g});
    result.states = 2;
    return result;
  }

  // Domain side: f ∼ f∘r through the retraction stages of the domain, and
  // f ∼ g iff their restrictions to the domain core are in one class.
  std::vector<std::vector<VertexId>> dhead{f.assignment()}, dtail{g.assignment()};
  ComplexPtr dcore = f.domain_ptr();
  std::vector<VertexId> to_core(f.domain().num_vertices());
  std::vector<VertexId> from_core(f.domain().num_vertices());
  for (std::size_t v = 0; v < to_core.size(); ++v) to_core[v] = from_core[v] = static_cast<VertexId>(v);
  if (options.reduce_to_core) {
    CollapseSequence seq = core(f.domain_ptr());
    if (!seq.steps.empty()) {
      auto stages = retraction_stages(seq);
      for (const auto& stage : stages) {
        std::vector<VertexId> a(stage.size()), b(stage.size());
        for (std::size_t v = 0; v < stage.size(); ++v) {
          a[v] = f(stage[v]);
          b[v] = g(stage[v]);
        }
        if (a != dhead.back()) dhead.push_back(std::move(a));
        if (b != dtail.back()) dtail.push_back(std::move(b));
      }
      dcore = share(seq.end);
      from_core.resize(dcore->num_vertices());
      for (std::size_t w = 0; w < from_core.size(); ++w)
        from_core[w] = f.domain().id_of(dcore->label(static_cast<VertexId>(w)));
      for (std::size_t v = 0; v < to_core.size(); ++v)
        to_core[v] = dcore->id_of(f.domain().label(stages.back()[v]));
    }
  }
  auto shrink = [&](const std::vector<VertexId>& a) {
    std::vector<VertexId> out(from_core.size());
    for (std::size_t w = 0; w < out.size(); ++w) out[w] = a[from_core[w]];
    return out;
  };
  auto lift = [&](const std::vector<VertexId>& a) {
    std::vector<VertexId> out(to_core.size());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = a[to_core[v]];
    return out;
  };

  // Codomain side: post-compose with the retraction stages of the codomain
  // and search among maps into its core.
  std::vector<std::vector<VertexId>> head{shrink(dhead.back())}, tail{shrink(dtail.back())};
  BitSet allowed = BitSet::range(f.codomain().num_vertices());
  if (options.reduce_to_core) {
    CollapseSequence seq = core(f.codomain_ptr());
    if (!seq.steps.empty()) {
      auto stages = retraction_stages(seq);
      head = retraction_chain(head.front(), stages);
      tail = retraction_chain(tail.front(), stages);
      allowed = seq.survivors();
    }
  }

  auto shape = SimplicialMap::trusted(dcore, f.codomain_ptr(), head.front());
  ComponentSearch search(shape, allowed, options);
  auto path = search.run(head.back(), tail.back());
  result.states = search.states();
  if (!path) {
    result.verdict = search.verdict();
    return result;
  }

  std::vector<std::vector<VertexId>> core_chain = head;
  core_chain.insert(core_chain.end(), path->begin() + 1, path->end());
  for (auto it = tail.rbegin() + 1; it != tail.rend(); ++it) core_chain.push_back(*it);

  std::vector<std::vector<VertexId>> chain = dhead;
  for (const auto& a : core_chain) chain.push_back(lift(a));
  for (auto it = dtail.rbegin(); it != dtail.rend(); ++it) chain.push_back(*it);

  std::vector<SimplicialMap> steps;
  for (auto& a : chain) {
    if (!steps.empty() && steps.back().assignment() == a) continue;
    steps.push_back(SimplicialMap::trusted(f.domain_ptr(), f.codomain_ptr(), std::move(a)));
  }
  ContiguityWitness witness(std::move(steps));
  result.verdict = Verdict::kYes;
  result.witness = options.shorten ? shorten_witness(witness) : witness;
  return result;
}

}  // namespace dtc
