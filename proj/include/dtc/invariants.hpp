#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dtc/contiguity_search.hpp"
#include "dtc/product.hpp"

namespace dtc {

enum class AdmissibleKind { kFarber, kCategorical };

const char* to_string(AdmissibleKind k);

/// A facet-generated subcomplex that passed an admissibility check.
///
/// Farber sets over K² carry σ = π₁|Ω and a witness Δ∘σ ∼ ι_Ω (maps Ω → K²).
/// Categorical sets over K carry a witness ι_L ∼ constant (maps L → K).
/// Sets accepted only optimistically (unknown verdicts) carry no witness.
struct AdmissibleSet {
  BitSet facets;  // indices into the ambient complex's facets
  AdmissibleKind kind = AdmissibleKind::kFarber;
  ComplexPtr subcomplex;
  std::optional<ContiguityWitness> witness;
  std::optional<SimplicialMap> section;
};

struct CheckResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<AdmissibleSet> set;
  std::size_t states = 0;
};

struct InvariantOptions {
  SearchOptions search;
  /// Worker threads for independent admissibility checks.
  unsigned threads = 1;
};

/// Farber test through projection contiguity: π₁|Ω ∼ π₂|Ω. `omega` must be a
/// subcomplex of the square (labels "u|v").
CheckResult is_farber(const ProductComplex& p, const Complex& omega,
                      const SearchOptions& options = {});
CheckResult is_farber(const ProductComplex& p, const BitSet& facet_subset,
                      const SearchOptions& options = {});

/// ι_L ∼ constant, trying one constant per edge-path component of K.
CheckResult is_categorical(const ComplexPtr& k, const Complex& sub,
                           const SearchOptions& options = {});
CheckResult is_categorical(const ComplexPtr& k, const BitSet& facet_subset,
                           const SearchOptions& options = {});

/// Categorical test for L ⊆ K², split into one class query per factor: maps
/// into K² are contiguous exactly when both coordinate maps are.
CheckResult is_categorical_in_square(const ProductComplex& p, const Complex& sub,
                                     const SearchOptions& options = {});

using AdmissibilityCheck = std::function<CheckResult(const BitSet&)>;

/// Memoized, monotone admissibility oracle over facet subsets. Supersets of
/// failing sets fail and subsets of passing sets pass without a new check.
/// Thread-safe.
class AdmissibilityOracle {
 public:
  enum class Mode {
    kPessimistic,  // unknown counts as failing (sound upper bounds)
    kOptimistic,   // unknown counts as passing (sound lower bounds)
  };

  explicit AdmissibilityOracle(AdmissibilityCheck check) : check_(std::move(check)) {}

  bool admissible(const BitSet& s, Mode mode);

  /// Exact cached result for s, running the check if needed.
  CheckResult result(const BitSet& s);

  bool saw_unknown() const;
  std::size_t checks_run() const;

 private:
  std::optional<bool> infer(const BitSet& s, Mode mode) const;

  AdmissibilityCheck check_;
  mutable std::mutex mu_;
  std::unordered_map<BitSet, CheckResult, BitSetHash> cache_;
  std::vector<BitSet> passed_, failed_, unknown_;
  std::size_t checks_ = 0;
};

struct MaximalSets {
  std::vector<AdmissibleSet> sets;
  /// False when an unknown verdict influenced the enumeration.
  bool complete = true;
  /// Facets that pass no check on their own.
  std::vector<std::size_t> uncoverable;
};

/// All inclusion-maximal admissible facet subsets of `ambient`, found by
/// depth-first search with head-union-tail pruning.
MaximalSets maximal_admissible_sets(const Complex& ambient, AdmissibilityOracle& oracle,
                                    AdmissibilityOracle::Mode mode, unsigned threads = 1);

struct CoverResult {
  std::optional<std::vector<std::size_t>> chosen;  // indices into the set list
  std::size_t nodes = 0;                           // branch-and-bound nodes
};

/// Minimum-cardinality subfamily of `sets` covering `universe`: branch and
/// bound on the least-covered element with a greedy incumbent.
CoverResult min_cover(const BitSet& universe, const std::vector<BitSet>& sets);

enum class Status { kExact, kBounded, kBudgetExhausted, kNotCoverable };

const char* to_string(Status s);

struct InvariantResult {
  Status status = Status::kExact;
  std::optional<int> value;
  int lower_bound = 0;
  std::optional<int> upper_bound;
  /// Certified cover realizing upper_bound.
  std::vector<AdmissibleSet> cover;
  /// Maximal admissible sets the cover was drawn from.
  std::vector<AdmissibleSet> maximal_sets;
  std::size_t admissibility_checks = 0;
  std::size_t cover_nodes = 0;
};

/// Normalized discrete topological complexity: least n such that K² is
/// covered by n + 1 Farber subcomplexes.
InvariantResult tc(const ComplexPtr& k, const InvariantOptions& options = {});

/// Normalized simplicial LS-category of K.
InvariantResult scat(const ComplexPtr& k, const InvariantOptions& options = {});

/// scat of the categorical square, using factor-wise class queries.
InvariantResult scat_of_square(const ProductComplex& p, const InvariantOptions& options = {});

/// Edge path x = x_m, …, x_0 = σ(x,y) = y_0, …, y_m = y read off the
/// witness of a Farber set at the vertex (x, y).
struct MotionPlan {
  VertexId from = 0;
  VertexId to = 0;
  VertexId midpoint = 0;
  /// (x_j, y_j) for j = m down to 0.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<VertexId> path;
};

MotionPlan motion_plan(const ProductComplex& p, const AdmissibleSet& farber, VertexId x,
                       VertexId y);

/// First Farber set of the cover whose subcomplex contains (x, y).
const AdmissibleSet* covering_set(const ProductComplex& p, const std::vector<AdmissibleSet>& cover,
                                  VertexId x, VertexId y);

/// Empty when the plan is an edge path of K from `from` to `to` through its
/// midpoint; otherwise the first violation.
std::string check_motion_plan(const Complex& k, const MotionPlan& plan);

}  // namespace dtc
