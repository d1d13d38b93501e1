#include "dtc/simplicial_map.hpp"

namespace dtc {

namespace {

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
  return a == b || (a->labels() == b->labels() && a->facets() == b->facets());
}

void require_same_shape(const SimplicialMap& f, const SimplicialMap& g) {
  if (!same_complex(f.domain_ptr(), g.domain_ptr()) ||
      !same_complex(f.codomain_ptr(), g.codomain_ptr()))
    throw DomainMismatch("maps do not share domain and codomain");
}

}  // namespace

bool SimplicialMap::same_shape(const SimplicialMap& other) const {
  return same_complex(domain_, other.domain_) && same_complex(codomain_, other.codomain_);
}

std::optional<std::size_t> first_bad_facet(const Complex& domain, const Complex& codomain,
                                           const std::vector<VertexId>& assignment) {
  for (std::size_t i = 0; i < domain.num_facets(); ++i) {
    Simplex img;
    domain.facet(i).for_each([&](std::size_t v) { img.insert(assignment[v]); });
    if (!codomain.is_simplex(img)) return i;
  }
  return std::nullopt;
}

SimplicialMap::SimplicialMap(ComplexPtr domain, ComplexPtr codomain,
                             std::vector<VertexId> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      assignment_(std::move(assignment)) {
  if (assignment_.size() != domain_->num_vertices())
    throw InvalidInput("assignment must cover every domain vertex");
  for (auto w : assignment_)
    if (w >= codomain_->num_vertices()) throw InvalidInput("assignment leaves the codomain");
  if (auto bad = first_bad_facet(*domain_, *codomain_, assignment_)) {
    auto labels = domain_->labels_of(domain_->facet(*bad));
    std::string names;
    for (const auto& l : labels) names += (names.empty() ? "" : " ") + l;
    throw NotSimplicial("image of facet {" + names + "} is not a simplex");
  }
}

SimplicialMap SimplicialMap::trusted(ComplexPtr domain, ComplexPtr codomain,
                                     std::vector<VertexId> assignment) {
  SimplicialMap m;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  m.assignment_ = std::move(assignment);
  return m;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  s.for_each([&](std::size_t v) { out.insert(assignment_[v]); });
  return out;
}

SimplicialMap validate_map(ComplexPtr domain, ComplexPtr codomain,
                           std::vector<VertexId> assignment) {
  return SimplicialMap(std::move(domain), std::move(codomain), std::move(assignment));
}

SimplicialMap identity_map(const ComplexPtr& k) {
  std::vector<VertexId> a(k->num_vertices());
  for (std::size_t v = 0; v < a.size(); ++v) a[v] = static_cast<VertexId>(v);
  return SimplicialMap::trusted(k, k, std::move(a));
}

SimplicialMap constant_map(const ComplexPtr& domain, const ComplexPtr& codomain, VertexId v) {
  if (v >= codomain->num_vertices()) throw InvalidInput("constant value outside codomain");
  return SimplicialMap::trusted(domain, codomain,
                                std::vector<VertexId>(domain->num_vertices(), v));
}

SimplicialMap inclusion_map(const ComplexPtr& sub, const ComplexPtr& ambient) {
  std::vector<VertexId> a(sub->num_vertices());
  for (std::size_t v = 0; v < a.size(); ++v) {
    auto w = ambient->find(sub->label(static_cast<VertexId>(v)));
    if (!w) throw InvalidInput("vertex '" + sub->label(static_cast<VertexId>(v)) +
                               "' is not in the ambient complex");
    a[v] = *w;
  }
  return SimplicialMap(sub, ambient, std::move(a));
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (!same_complex(inner.codomain_ptr(), outer.domain_ptr()))
    throw DomainMismatch("compose: codomain of inner is not the domain of outer");
  std::vector<VertexId> a(inner.assignment().size());
  for (std::size_t v = 0; v < a.size(); ++v) a[v] = outer(inner(static_cast<VertexId>(v)));
  return SimplicialMap::trusted(inner.domain_ptr(), outer.codomain_ptr(), std::move(a));
}

SimplicialMap restrict(const SimplicialMap& f, const ComplexPtr& sub) {
  SimplicialMap incl = [&] {
    try {
      return inclusion_map(sub, f.domain_ptr());
    } catch (const Error& e) {
      throw DomainMismatch(std::string("restrict: not a subcomplex: ") + e.what());
    }
  }();
  return compose(f, incl);
}

bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  require_same_shape(f, g);
  const Complex& dom = f.domain();
  const Complex& cod = f.codomain();
  for (const auto& facet : dom.facets()) {
    Simplex u;
    facet.for_each([&](std::size_t v) {
      u.insert(f(static_cast<VertexId>(v)));
      u.insert(g(static_cast<VertexId>(v)));
    });
    if (!cod.is_simplex(u)) return false;
  }
  return true;
}

bool for_each_neighbor(const SimplicialMap& f,
                       const std::function<bool(const SimplicialMap&)>& visit) {
  const Complex& dom = f.domain();
  const Complex& cod = f.codomain();
  const std::size_t n = dom.num_vertices();
  const std::size_t m = cod.num_vertices();

  // acc[i] = f(F_i) ∪ g(assigned vertices of F_i); must stay a simplex.
  std::vector<Simplex> acc(dom.num_facets());
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = f.image(dom.facet(i));

  std::vector<std::vector<VertexId>> candidates(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t c = 0; c < m; ++c) {
      bool ok = true;
      for (auto fi : dom.star(static_cast<VertexId>(u))) {
        Simplex s = acc[fi];
        s.insert(c);
        if (!cod.is_simplex(s)) {
          ok = false;
          break;
        }
      }
      if (ok) candidates[u].push_back(static_cast<VertexId>(c));
    }
  }

  std::vector<VertexId> g(n);
  bool keep_going = true;
  auto recurse = [&](auto&& self, std::size_t u) -> void {
    if (!keep_going) return;
    if (u == n) {
      if (g != f.assignment())
        keep_going = visit(SimplicialMap::trusted(f.domain_ptr(), f.codomain_ptr(), g));
      return;
    }
    const auto& star = dom.star(static_cast<VertexId>(u));
    for (VertexId c : candidates[u]) {
      std::vector<Simplex> saved;
      saved.reserve(star.size());
      bool ok = true;
      for (auto fi : star) {
        saved.push_back(acc[fi]);
        if (acc[fi].contains(c)) continue;
        acc[fi].insert(c);
        if (!cod.is_simplex(acc[fi])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g[u] = c;
        self(self, u + 1);
      }
      for (std::size_t j = 0; j < saved.size(); ++j) acc[star[j]] = saved[j];
      if (!keep_going) return;
    }
  };
  recurse(recurse, 0);
  return keep_going;
}

std::vector<SimplicialMap> neighbors(const SimplicialMap& f) {
  std::vector<SimplicialMap> out;
  for_each_neighbor(f, [&](const SimplicialMap& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

// --- witnesses -------------------------------------------------------------

ContiguityWitness::ContiguityWitness(std::vector<SimplicialMap> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw InvalidInput("witness needs at least one map");
  for (const auto& s : steps_) require_same_shape(steps_.front(), s);
}

ContiguityWitness ContiguityWitness::reversed() const {
  return ContiguityWitness(std::vector<SimplicialMap>(steps_.rbegin(), steps_.rend()));
}

ContiguityWitness ContiguityWitness::then(const ContiguityWitness& other) const {
  if (!(back() == other.front())) throw InvalidInput("witnesses do not meet");
  std::vector<SimplicialMap> steps = steps_;
  steps.insert(steps.end(), other.steps_.begin() + 1, other.steps_.end());
  return ContiguityWitness(std::move(steps));
}

ContiguityWitness ContiguityWitness::restricted(const ComplexPtr& sub) const {
  std::vector<SimplicialMap> steps;
  steps.reserve(steps_.size());
  for (const auto& s : steps_) steps.push_back(restrict(s, sub));
  return ContiguityWitness(std::move(steps));
}

bool ContiguityWitness::valid() const { return check_witness(steps_, front(), back()).empty(); }

std::string check_witness(const std::vector<SimplicialMap>& steps, const SimplicialMap& from,
                          const SimplicialMap& to) {
  if (steps.empty()) return "empty witness";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (!same_complex(s.domain_ptr(), from.domain_ptr()) ||
        !same_complex(s.codomain_ptr(), from.codomain_ptr()))
      return "step " + std::to_string(i) + " has the wrong shape";
    if (first_bad_facet(s.domain(), s.codomain(), s.assignment()))
      return "step " + std::to_string(i) + " is not simplicial";
    if (i > 0 && !are_contiguous(steps[i - 1], s))
      return "steps " + std::to_string(i - 1) + " and " + std::to_string(i) +
             " are not contiguous";
  }
  if (steps.front().assignment() != from.assignment()) return "witness does not start at the source map";
  if (steps.back().assignment() != to.assignment()) return "witness does not end at the target map";
  return {};
}

}  // namespace dtc
