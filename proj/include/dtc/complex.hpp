#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dtc/bitset.hpp"
#include "dtc/error.hpp"

namespace dtc {

using VertexId = std::uint16_t;
using Simplex = BitSet;

inline constexpr std::size_t kMaxVertices = BitSet::kCapacity;

/// Finite abstract simplicial complex, stored by its facets over dense vertex
/// ids. Immutable once built.
///
/// Invariants: facets form an antichain, every vertex lies in some facet, and
/// labels are unique.
class Complex {
 public:
  /// Interns labels in order of first appearance and keeps only the
  /// inclusion-maximal input sets.
  /// Labels must be nonempty and free of whitespace and '#'; '|' is reserved
  /// for product pair labels unless allow_pair_labels is set.
  static Complex from_labels(const std::vector<std::vector<std::string>>& facets,
                             bool allow_pair_labels = false);

  /// Facets over ids 0..labels.size()-1; non-maximal members are dropped.
  static Complex from_ids(std::vector<std::string> labels, std::vector<Simplex> facets);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_facets() const { return facets_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<Simplex>& facets() const { return facets_; }
  const Simplex& facet(std::size_t i) const { return facets_[i]; }

  /// Indices of the facets containing vertex v.
  const std::vector<std::uint32_t>& star(VertexId v) const { return star_[v]; }

  std::optional<VertexId> find(std::string_view label) const;
  VertexId id_of(std::string_view label) const;  // throws InvalidInput

  Simplex simplex_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Simplex& s) const;

  bool is_simplex(const Simplex& s) const;

  /// Index of the facet equal to s, if s is a facet.
  std::optional<std::size_t> facet_index(const Simplex& s) const;

  bool is_edge_path_connected() const;
  /// Component index per vertex in the 1-skeleton, numbered by first vertex.
  std::vector<std::uint32_t> components() const;

  /// Full subcomplex generated by the given simplices of this complex.
  /// Labels are kept; ids are re-densified in ambient id order.
  Complex subcomplex(std::span<const Simplex> simplices) const;
  Complex subcomplex_by_facets(const BitSet& facet_subset) const;

  /// Every simplex (nonempty face), sorted. Exponential in facet size.
  std::vector<Simplex> all_simplices() const;

  /// Facet label tuples, each sorted, the list sorted lexicographically.
  std::vector<std::vector<std::string>> canonical_facets() const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.canonical_facets() == b.canonical_facets();
  }

 private:
  Complex() = default;
  void index();

  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;
  std::vector<std::vector<std::uint32_t>> star_;
  std::unordered_map<std::string, VertexId> by_label_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

inline ComplexPtr share(Complex k) { return std::make_shared<const Complex>(std::move(k)); }

/// Facet-per-line text ("a b c", '#' comments) or JSON {"facets": [[...]]},
/// chosen by the first non-blank character.
Complex parse_complex(std::string_view text, bool allow_pair_labels = false);
Complex parse_complex_text(std::string_view text, bool allow_pair_labels = false);
Complex parse_complex_json(std::string_view text, bool allow_pair_labels = false);
Complex load_complex(const std::string& path, bool allow_pair_labels = false);

std::string serialize_complex(const Complex& k);
std::string serialize_complex_json(const Complex& k);

}  // namespace dtc
