#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dtc/complex.hpp"

namespace dtc {

/// Vertex map between two complexes that sends every simplex to a simplex.
class SimplicialMap {
 public:
  /// Validates facet images; throws NotSimplicial naming the first bad facet.
  SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<VertexId> assignment);

  /// Skips validation. Callers guarantee the simplicial property.
  static SimplicialMap trusted(ComplexPtr domain, ComplexPtr codomain,
                               std::vector<VertexId> assignment);

  const Complex& domain() const { return *domain_; }
  const Complex& codomain() const { return *codomain_; }
  const ComplexPtr& domain_ptr() const { return domain_; }
  const ComplexPtr& codomain_ptr() const { return codomain_; }
  const std::vector<VertexId>& assignment() const { return assignment_; }
  VertexId operator()(VertexId v) const { return assignment_[v]; }

  Simplex image(const Simplex& s) const;

  /// Same domain and codomain (by identity or by identical structure).
  bool same_shape(const SimplicialMap& other) const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
    return a.same_shape(b) && a.assignment_ == b.assignment_;
  }

 private:
  SimplicialMap() = default;

  ComplexPtr domain_;
  ComplexPtr codomain_;
  std::vector<VertexId> assignment_;
};

/// The first domain facet whose image is not a simplex, if any.
std::optional<std::size_t> first_bad_facet(const Complex& domain, const Complex& codomain,
                                           const std::vector<VertexId>& assignment);

SimplicialMap validate_map(ComplexPtr domain, ComplexPtr codomain,
                           std::vector<VertexId> assignment);

SimplicialMap identity_map(const ComplexPtr& k);
SimplicialMap constant_map(const ComplexPtr& domain, const ComplexPtr& codomain, VertexId v);

/// Inclusion of sub into ambient, matching vertices by label.
SimplicialMap inclusion_map(const ComplexPtr& sub, const ComplexPtr& ambient);

/// outer ∘ inner.
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// f restricted to a subcomplex of its domain (vertices matched by label).
SimplicialMap restrict(const SimplicialMap& f, const ComplexPtr& sub);

/// For every domain facet F, f(F) ∪ g(F) is a simplex of the codomain.
bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g);

/// Calls visit(g) for every simplicial map g ≠ f contiguous to f, each once.
/// Stops early when visit returns false. Returns false iff stopped early.
bool for_each_neighbor(const SimplicialMap& f,
                       const std::function<bool(const SimplicialMap&)>& visit);

std::vector<SimplicialMap> neighbors(const SimplicialMap& f);

/// Chain of maps with a common domain and codomain, each step contiguous to
/// the next.
class ContiguityWitness {
 public:
  explicit ContiguityWitness(std::vector<SimplicialMap> steps);

  const std::vector<SimplicialMap>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  const SimplicialMap& front() const { return steps_.front(); }
  const SimplicialMap& back() const { return steps_.back(); }

  ContiguityWitness reversed() const;
  /// this followed by other; other.front() must equal back().
  ContiguityWitness then(const ContiguityWitness& other) const;
  ContiguityWitness restricted(const ComplexPtr& sub) const;

  /// Re-checks every step independently.
  bool valid() const;

 private:
  std::vector<SimplicialMap> steps_;
};

/// Returns an empty string when the witness is valid and joins from → to,
/// otherwise a description of the first failure.
std::string check_witness(const std::vector<SimplicialMap>& steps, const SimplicialMap& from,
                          const SimplicialMap& to);

}  // namespace dtc
