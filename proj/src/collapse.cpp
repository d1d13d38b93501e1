#include "dtc/collapse.hpp"

#include <algorithm>

namespace dtc {

namespace {

// Maximal nonempty traces F ∩ alive, i.e. facets of the full subcomplex.
std::vector<Simplex> induced_facets(const Complex& k, const BitSet& alive) {
  std::vector<Simplex> traces;
  for (const auto& f : k.facets()) {
    Simplex t = f & alive;
    if (!t.empty()) traces.push_back(t);
  }
  std::sort(traces.begin(), traces.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  std::vector<Simplex> kept;
  for (const auto& t : traces)
    if (std::none_of(kept.begin(), kept.end(), [&](const Simplex& s) { return t.is_subset_of(s); }))
      kept.push_back(t);
  return kept;
}

// Dominators of v among the given facets: intersection of the facets holding v.
BitSet dominators(const std::vector<Simplex>& facets, VertexId v) {
  BitSet common;
  bool first = true;
  for (const auto& f : facets) {
    if (!f.contains(v)) continue;
    common = first ? f : (common & f);
    first = false;
  }
  common.erase(v);
  return common;
}

Complex induced_complex(const Complex& k, const BitSet& alive) {
  std::vector<Simplex> facets = induced_facets(k, alive);
  return k.subcomplex(facets);
}

}  // namespace

BitSet CollapseSequence::survivors() const {
  BitSet alive = BitSet::range(start->num_vertices());
  for (const auto& s : steps) alive.erase(s.removed);
  return alive;
}

std::vector<std::pair<VertexId, VertexId>> dominated_vertices(const Complex& k) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t v = 0; v < k.num_vertices(); ++v) {
    dominators(k.facets(), static_cast<VertexId>(v)).for_each([&](std::size_t w) {
      out.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
    });
  }
  return out;
}

Complex delete_vertex(const Complex& k, VertexId v) {
  if (k.num_vertices() <= 1) throw InvalidInput("cannot delete the only vertex");
  BitSet alive = BitSet::range(k.num_vertices());
  alive.erase(v);
  return induced_complex(k, alive);
}

CollapseSequence core(const ComplexPtr& k) {
  BitSet alive = BitSet::range(k->num_vertices());
  std::vector<CollapseStep> steps;
  std::vector<Simplex> facets = k->facets();
  for (;;) {
    bool removed = false;
    for (std::size_t v = 0; v < k->num_vertices() && !removed; ++v) {
      if (!alive.contains(v)) continue;
      BitSet dom = dominators(facets, static_cast<VertexId>(v));
      if (dom.empty()) continue;
      steps.push_back({static_cast<VertexId>(v), static_cast<VertexId>(dom.first())});
      alive.erase(v);
      facets = induced_facets(*k, alive);
      removed = true;
    }
    if (!removed) break;
  }
  return CollapseSequence{k, std::move(steps), induced_complex(*k, alive)};
}

bool is_strongly_collapsible(const Complex& k) {
  return core(std::make_shared<const Complex>(k)).end.num_vertices() == 1;
}

std::string replay_collapse(const ComplexPtr& start, const std::vector<CollapseStep>& steps,
                            std::optional<Complex>& out) {
  BitSet alive = BitSet::range(start->num_vertices());
  std::vector<Simplex> facets = start->facets();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (s.removed >= start->num_vertices() || s.dominator >= start->num_vertices())
      return where + "unknown vertex";
    if (!alive.contains(s.removed) || !alive.contains(s.dominator))
      return where + "vertex already removed";
    if (s.removed == s.dominator) return where + "a vertex cannot dominate itself";
    if (!dominators(facets, s.removed).contains(s.dominator))
      return where + start->label(s.removed) + " is not dominated by " +
             start->label(s.dominator);
    alive.erase(s.removed);
    facets = induced_facets(*start, alive);
  }
  out = induced_complex(*start, alive);
  return {};
}

std::vector<std::vector<VertexId>> retraction_stages(const CollapseSequence& seq) {
  std::vector<VertexId> current(seq.start->num_vertices());
  for (std::size_t v = 0; v < current.size(); ++v) current[v] = static_cast<VertexId>(v);
  std::vector<std::vector<VertexId>> stages;
  for (const auto& s : seq.steps) {
    for (auto& w : current)
      if (w == s.removed) w = s.dominator;
    stages.push_back(current);
  }
  return stages;
}

SimplicialMap core_retraction(const CollapseSequence& seq) {
  auto stages = retraction_stages(seq);
  if (stages.empty()) return identity_map(seq.start);
  return SimplicialMap(seq.start, seq.start, stages.back());
}

}  // namespace dtc
