#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dtc/complex.hpp"
#include "dtc/simplicial_map.hpp"

namespace dtc {

/// One elementary strong collapse: `removed` is dominated by `dominator` in
/// the complex left by the previous steps. Ids refer to the starting complex.
struct CollapseStep {
  VertexId removed;
  VertexId dominator;
  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

struct CollapseSequence {
  ComplexPtr start;
  std::vector<CollapseStep> steps;
  Complex end;

  /// Vertices of `start` that survive every step.
  BitSet survivors() const;
};

/// All pairs (v, w), v ≠ w, such that every facet containing v contains w.
std::vector<std::pair<VertexId, VertexId>> dominated_vertices(const Complex& k);

/// K minus the open star of v: the full subcomplex on the other vertices.
Complex delete_vertex(const Complex& k, VertexId v);

/// Strong collapse to a core, always deleting the lowest-id dominated vertex
/// (dominated by its lowest-id dominator).
CollapseSequence core(const ComplexPtr& k);

bool is_strongly_collapsible(const Complex& k);

/// Replays the steps, checking every domination. Returns an error string on
/// failure, empty on success; on success `out` holds the final complex.
std::string replay_collapse(const ComplexPtr& start, const std::vector<CollapseStep>& steps,
                            std::optional<Complex>& out);

/// Vertex maps K → K: stage i sends every vertex removed in steps 1..i along
/// its dominators. Each stage is contiguous to the previous one on any
/// simplicial map composed after it; the last stage retracts onto the core.
std::vector<std::vector<VertexId>> retraction_stages(const CollapseSequence& seq);

/// The final retraction K → K with image in the core's vertex set.
SimplicialMap core_retraction(const CollapseSequence& seq);

}  // namespace dtc
