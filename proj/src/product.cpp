#include "dtc/product.hpp"

#include <algorithm>

namespace dtc {

ProductComplex::ProductComplex(ComplexPtr base) : base_(std::move(base)) {
  const std::size_t n = base_->num_vertices();
  if (n * n > kMaxVertices)
    throw InvalidInput("categorical square would exceed " + std::to_string(kMaxVertices) +
                       " vertices");
  std::vector<std::string> labels(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      labels[u * n + v] = base_->label(static_cast<VertexId>(u)) + "|" +
                          base_->label(static_cast<VertexId>(v));
  std::vector<Simplex> facets;
  for (const auto& f1 : base_->facets())
    for (const auto& f2 : base_->facets()) {
      Simplex s;
      f1.for_each([&](std::size_t u) { f2.for_each([&](std::size_t v) { s.insert(u * n + v); }); });
      facets.push_back(s);
    }
  product_ = share(Complex::from_ids(std::move(labels), facets));

  const std::size_t m = base_->num_facets();
  facet_index_.assign(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) facet_index_[i][j] = *product_->facet_index(facets[i * m + j]);
}

Simplex ProductComplex::project(const Simplex& s, int factor) const {
  Simplex out;
  s.for_each([&](std::size_t w) {
    auto [u, v] = unpair(static_cast<VertexId>(w));
    out.insert(factor == 1 ? u : v);
  });
  return out;
}

ProductComplex categorical_square(const ComplexPtr& k) { return ProductComplex(k); }

SimplicialMap projection(const ProductComplex& p, int factor) {
  if (factor != 1 && factor != 2) throw InvalidInput("projection factor must be 1 or 2");
  std::vector<VertexId> a(p.product()->num_vertices());
  for (std::size_t w = 0; w < a.size(); ++w) {
    auto [u, v] = p.unpair(static_cast<VertexId>(w));
    a[w] = factor == 1 ? u : v;
  }
  return SimplicialMap(p.product(), p.base(), std::move(a));
}

SimplicialMap diagonal(const ProductComplex& p) {
  std::vector<VertexId> a(p.base()->num_vertices());
  for (std::size_t v = 0; v < a.size(); ++v)
    a[v] = p.pair(static_cast<VertexId>(v), static_cast<VertexId>(v));
  return SimplicialMap(p.base(), p.product(), std::move(a));
}

SimplicialMap square_map(const SimplicialMap& phi, const ProductComplex& domain_square,
                         const ProductComplex& codomain_square) {
  if (!(domain_square.base()->labels() == phi.domain().labels()) ||
      !(codomain_square.base()->labels() == phi.codomain().labels()))
    throw DomainMismatch("square_map: squares do not match the map");
  std::vector<VertexId> a(domain_square.product()->num_vertices());
  for (std::size_t w = 0; w < a.size(); ++w) {
    auto [u, v] = domain_square.unpair(static_cast<VertexId>(w));
    a[w] = codomain_square.pair(phi(u), phi(v));
  }
  return SimplicialMap(domain_square.product(), codomain_square.product(), std::move(a));
}

SimplicialMap pair_map(const SimplicialMap& f, const SimplicialMap& g, const ProductComplex& p) {
  if (!f.same_shape(g)) throw DomainMismatch("pair_map: maps differ in shape");
  if (f.codomain().labels() != p.base()->labels())
    throw DomainMismatch("pair_map: maps must land in the base complex");
  std::vector<VertexId> a(f.assignment().size());
  for (std::size_t w = 0; w < a.size(); ++w)
    a[w] = p.pair(f(static_cast<VertexId>(w)), g(static_cast<VertexId>(w)));
  // Both projections of any image are simplices, so the pair is simplicial.
  return SimplicialMap::trusted(f.domain_ptr(), p.product(), std::move(a));
}

std::optional<Complex> preimage_subcomplex(const SimplicialMap& phi, const Complex& target) {
  const Complex& cod = phi.codomain();
  std::vector<int> to_target(cod.num_vertices(), -1);
  for (std::size_t w = 0; w < target.num_vertices(); ++w) {
    auto id = cod.find(target.label(static_cast<VertexId>(w)));
    if (!id) throw DomainMismatch("preimage: target is not a subcomplex of the codomain");
    to_target[*id] = static_cast<int>(w);
  }
  for (const auto& f : target.facets()) {
    Simplex s;
    f.for_each([&](std::size_t w) { s.insert(*cod.find(target.label(static_cast<VertexId>(w)))); });
    if (!cod.is_simplex(s)) throw DomainMismatch("preimage: target is not a subcomplex");
  }

  auto in_target = [&](const Simplex& image) {
    Simplex t;
    bool ok = true;
    image.for_each([&](std::size_t w) {
      if (to_target[w] < 0) ok = false;
      else t.insert(static_cast<std::size_t>(to_target[w]));
    });
    return ok && target.is_simplex(t);
  };

  const Complex& dom = phi.domain();
  std::vector<Simplex> found;
  for (const auto& facet : dom.facets()) {
    auto verts = facet.elements();
    if (verts.size() > 24) throw InvalidInput("facet too large for preimage enumeration");
    for (std::uint32_t mask = 1; mask < (1u << verts.size()); ++mask) {
      Simplex s;
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (mask >> j & 1u) s.insert(verts[j]);
      if (in_target(phi.image(s))) found.push_back(s);
    }
  }
  if (found.empty()) return std::nullopt;
  std::sort(found.begin(), found.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  std::vector<Simplex> maximal;
  for (const auto& s : found)
    if (std::none_of(maximal.begin(), maximal.end(), [&](const Simplex& m) { return s.is_subset_of(m); }))
      maximal.push_back(s);
  return dom.subcomplex(maximal);
}

}  // namespace dtc
