#pragma once

#include <utility>

#include "dtc/complex.hpp"
#include "dtc/simplicial_map.hpp"

namespace dtc {

/// Categorical square K Π K. Vertex (u, v) of the product has id u·n + v and
/// label "u|v"; its facets are exactly the products F₁ × F₂ of facets of K.
class ProductComplex {
 public:
  explicit ProductComplex(ComplexPtr base);

  const ComplexPtr& base() const { return base_; }
  const ComplexPtr& product() const { return product_; }

  VertexId pair(VertexId u, VertexId v) const {
    return static_cast<VertexId>(u * base_->num_vertices() + v);
  }
  std::pair<VertexId, VertexId> unpair(VertexId w) const {
    const auto n = static_cast<VertexId>(base_->num_vertices());
    return {static_cast<VertexId>(w / n), static_cast<VertexId>(w % n)};
  }

  /// Projection of a product vertex set onto factor 1 or 2.
  Simplex project(const Simplex& s, int factor) const;

  /// Index in product()->facets() of F₁ × F₂, given base facet indices.
  std::size_t facet_of(std::size_t f1, std::size_t f2) const { return facet_index_[f1][f2]; }

 private:
  ComplexPtr base_;
  ComplexPtr product_;
  std::vector<std::vector<std::size_t>> facet_index_;
};

ProductComplex categorical_square(const ComplexPtr& k);

/// πᵢ: K² → K, (u, v) ↦ u for i = 1 and v for i = 2.
SimplicialMap projection(const ProductComplex& p, int factor);

/// Δ: K → K², v ↦ (v, v).
SimplicialMap diagonal(const ProductComplex& p);

/// φ²(v, w) = (φ(v), φ(w)) between the squares of φ's domain and codomain.
SimplicialMap square_map(const SimplicialMap& phi, const ProductComplex& domain_square,
                         const ProductComplex& codomain_square);

/// (f, g)(ω) = (f(ω), g(ω)) for maps f, g: Ω → K into the base of `p`.
SimplicialMap pair_map(const SimplicialMap& f, const SimplicialMap& g, const ProductComplex& p);

/// Largest subcomplex of φ's domain whose simplices map into `target`,
/// a subcomplex of φ's codomain (matched by label). Returned facet-generated.
/// Empty optional when no vertex maps into `target`.
std::optional<Complex> preimage_subcomplex(const SimplicialMap& phi, const Complex& target);

}  // namespace dtc
