#pragma once

// Brute-force reference implementations used only by tests. They work on
// plain sorted vectors and check every simplex, never just facets, so they
// share no code path with the library beyond reading a complex's facets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dtc/complex.hpp"

namespace oracle {

using Face = std::vector<int>;  // sorted vertex ids

struct Closure {
  int n = 0;
  std::set<Face> faces;  // every nonempty simplex
  bool has(Face s) const {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return faces.count(s) > 0;
  }
};

inline Closure closure(const dtc::Complex& k) {
  Closure c;
  c.n = static_cast<int>(k.num_vertices());
  for (const auto& f : k.facets()) {
    std::vector<int> verts;
    for (auto v : f.elements()) verts.push_back(static_cast<int>(v));
    const int m = static_cast<int>(verts.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      Face s;
      for (int j = 0; j < m; ++j)
        if (mask >> j & 1) s.push_back(verts[j]);
      c.faces.insert(s);
    }
  }
  return c;
}

using Assignment = std::vector<int>;

inline Face image(const Face& s, const Assignment& a) {
  Face out;
  for (int v : s) out.push_back(a[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool simplicial(const Closure& dom, const Closure& cod, const Assignment& a) {
  for (const auto& s : dom.faces)
    if (!cod.has(image(s, a))) return false;
  return true;
}

inline bool contiguous(const Closure& dom, const Closure& cod, const Assignment& f,
                       const Assignment& g) {
  for (const auto& s : dom.faces) {
    Face u = image(s, f);
    Face w = image(s, g);
    u.insert(u.end(), w.begin(), w.end());
    if (!cod.has(u)) return false;
  }
  return true;
}

/// Every simplicial map, by exhaustive enumeration of |cod|^|dom| vertex maps.
inline std::vector<Assignment> all_simplicial_maps(const Closure& dom, const Closure& cod) {
  std::vector<Assignment> out;
  Assignment a(dom.n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == dom.n) {
      if (simplicial(dom, cod, a)) out.push_back(a);
      return;
    }
    for (int c = 0; c < cod.n; ++c) {
      a[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Component label of every simplicial map in the full contiguity graph.
struct ClassTable {
  std::vector<Assignment> maps;
  std::vector<int> component;
  int of(const Assignment& a) const {
    auto it = std::find(maps.begin(), maps.end(), a);
    return it == maps.end() ? -1 : component[it - maps.begin()];
  }
  bool same(const Assignment& a, const Assignment& b) const {
    int x = of(a), y = of(b);
    return x >= 0 && x == y;
  }
};

inline ClassTable contiguity_classes(const Closure& dom, const Closure& cod) {
  ClassTable t;
  t.maps = all_simplicial_maps(dom, cod);
  const std::size_t n = t.maps.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (root(static_cast<int>(i)) != root(static_cast<int>(j)) &&
          contiguous(dom, cod, t.maps[i], t.maps[j]))
        parent[root(static_cast<int>(i))] = root(static_cast<int>(j));
  t.component.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.component[i] = root(static_cast<int>(i));
  return t;
}

/// Best-first search through single-vertex changes, checking every simplex.
/// Returns 1 if some reached map satisfies `goal`, 0 if the component of
/// `start` is exhausted without one, -1 if `limit` states were exceeded.
inline int search_component(const Closure& dom, const Closure& cod, const Assignment& start,
                            const std::function<bool(const Assignment&)>& goal,
                            const std::function<int(const Assignment&)>& distance,
                            std::size_t limit) {
  using Item = std::pair<int, Assignment>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  std::set<Assignment> seen{start};
  open.push({distance(start), start});
  while (!open.empty()) {
    Assignment cur = open.top().second;
    open.pop();
    if (goal(cur)) return 1;
    for (int u = 0; u < dom.n; ++u) {
      for (int c = 0; c < cod.n; ++c) {
        if (c == cur[u]) continue;
        Assignment next = cur;
        next[u] = c;
        if (seen.count(next)) continue;
        if (!simplicial(dom, cod, next) || !contiguous(dom, cod, cur, next)) continue;
        seen.insert(next);
        if (seen.size() > limit) return -1;
        open.push({distance(next), next});
      }
    }
  }
  return 0;
}

/// Closure of K Π K built from the projection rule alone: a set of pairs
/// (u, v), encoded u·n + v, is a simplex iff both coordinate sets are.
inline Closure square_closure(const Closure& base) {
  const int n = base.n;
  Closure c;
  c.n = n * n;
  std::vector<Face> faces(base.faces.begin(), base.faces.end());
  for (const auto& f1 : faces)
    for (const auto& f2 : faces) {
      // Subsets of f1 × f2 whose projections are exactly f1 and f2 are all
      // simplices; collecting every subset of f1 × f2 covers them.
      std::vector<int> cells;
      for (int u : f1)
        for (int v : f2) cells.push_back(u * n + v);
      const int m = static_cast<int>(cells.size());
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        Face s;
        for (int j = 0; j < m; ++j)
          if (mask >> j & 1u) s.push_back(cells[j]);
        c.faces.insert(s);
      }
    }
  return c;
}

/// Ω ⊆ K² as a closure over its own dense vertices, plus each vertex's pair.
struct SquareSub {
  Closure dom;
  std::vector<std::pair<int, int>> pair;
};

/// `facets` are lists of (u, v) base pairs.
inline SquareSub square_sub(const std::vector<std::vector<std::pair<int, int>>>& facets) {
  SquareSub out;
  std::map<std::pair<int, int>, int> id;
  for (const auto& f : facets)
    for (const auto& uv : f)
      if (!id.count(uv)) {
        id[uv] = static_cast<int>(out.pair.size());
        out.pair.push_back(uv);
      }
  out.dom.n = static_cast<int>(out.pair.size());
  for (const auto& f : facets) {
    std::vector<int> verts;
    for (const auto& uv : f) verts.push_back(id[uv]);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int m = static_cast<int>(verts.size());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      Face s;
      for (int j = 0; j < m; ++j)
        if (mask >> j & 1u) s.push_back(verts[j]);
      out.dom.faces.insert(s);
    }
  }
  return out;
}

/// Condition (1): some σ: Ω → K with Δ∘σ in the class of the inclusion
/// Ω → K². Searches the class of the inclusion for a map whose two
/// coordinates agree everywhere; such a map is Δ∘σ for σ its first
/// coordinate. Same return convention as search_component.
inline int farber_by_section(const Closure& base, const SquareSub& omega, std::size_t limit) {
  const int n = base.n;
  const Closure sq = square_closure(base);
  Assignment incl(omega.dom.n);
  for (int w = 0; w < omega.dom.n; ++w) incl[w] = omega.pair[w].first * n + omega.pair[w].second;
  auto off_diagonal = [n](const Assignment& a) {
    int d = 0;
    for (int x : a) d += x / n != x % n;
    return d;
  };
  return search_component(
      omega.dom, sq, incl, [&](const Assignment& a) { return off_diagonal(a) == 0; }, off_diagonal,
      limit);
}

/// Condition (2): π₁|Ω and π₂|Ω in one class of maps Ω → K.
inline int farber_by_projections(const Closure& base, const SquareSub& omega, std::size_t limit) {
  Assignment p1(omega.dom.n), p2(omega.dom.n);
  for (int w = 0; w < omega.dom.n; ++w) {
    p1[w] = omega.pair[w].first;
    p2[w] = omega.pair[w].second;
  }
  auto distance = [&](const Assignment& a) {
    int d = 0;
    for (int w = 0; w < omega.dom.n; ++w) d += a[w] != p2[w];
    return d;
  };
  return search_component(
      omega.dom, base, p1, [&](const Assignment& a) { return a == p2; }, distance, limit);
}

/// L ⊆ K (closure over K's ids, given by its facets) is categorical: the
/// inclusion reaches a constant map through single-vertex changes.
inline int categorical_by_search(const Closure& k, const std::vector<Face>& facets,
                                 std::size_t limit) {
  SquareSub sub;  // reuse the dense relabelling; second coordinate unused
  std::vector<std::vector<std::pair<int, int>>> as_pairs;
  for (const auto& f : facets) {
    std::vector<std::pair<int, int>> row;
    for (int v : f) row.emplace_back(v, 0);
    as_pairs.push_back(row);
  }
  sub = square_sub(as_pairs);
  Assignment incl(sub.dom.n);
  for (int w = 0; w < sub.dom.n; ++w) incl[w] = sub.pair[w].first;
  auto spread = [](const Assignment& a) {
    std::set<int> s(a.begin(), a.end());
    return static_cast<int>(s.size()) - 1;
  };
  return search_component(
      sub.dom, k, incl, [&](const Assignment& a) { return spread(a) == 0; }, spread, limit);
}

/// Random complex on n labelled vertices "v0".."v{n-1}" with the given number
/// of random facets of size in [lo, hi]; isolated vertices become facets.
inline dtc::Complex random_complex(std::mt19937& rng, int n, int facets, int lo, int hi) {
  std::vector<std::vector<std::string>> fs;
  std::vector<bool> used(n, false);
  std::uniform_int_distribution<int> size(lo, std::min(hi, n));
  for (int i = 0; i < facets; ++i) {
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(size(rng));
    std::vector<std::string> f;
    for (int v : verts) {
      f.push_back("v" + std::to_string(v));
      used[v] = true;
    }
    fs.push_back(f);
  }
  for (int v = 0; v < n; ++v)
    if (!used[v]) fs.push_back({"v" + std::to_string(v)});
  return dtc::Complex::from_labels(fs);
}

/// Isomorphism of two small complexes by trying every vertex bijection.
inline bool isomorphic(const dtc::Complex& a, const dtc::Complex& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets()) return false;
  const int n = static_cast<int>(a.num_vertices());
  std::set<Face> fb;
  for (const auto& f : b.facets()) {
    Face s;
    for (auto v : f.elements()) s.push_back(static_cast<int>(v));
    fb.insert(s);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& f : a.facets()) {
      Face s;
      for (auto v : f.elements()) s.push_back(perm[v]);
      std::sort(s.begin(), s.end());
      if (!fb.count(s)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Cone over k with a fresh apex labelled `apex`.
inline dtc::Complex cone(const dtc::Complex& k, const std::string& apex) {
  auto facets = k.canonical_facets();
  for (auto& f : facets) f.push_back(apex);
  return dtc::Complex::from_labels(facets);
}

/// k plus a new vertex dominated by an existing vertex w: the new vertex is
/// joined to a random nonempty subset of the facets containing w, so that
/// every facet containing it also contains w.
inline dtc::Complex add_dominated_vertex(std::mt19937& rng, const dtc::Complex& k,
                                         const std::string& label) {
  std::uniform_int_distribution<std::size_t> pick(0, k.num_vertices() - 1);
  const auto w = static_cast<dtc::VertexId>(pick(rng));
  auto facets = k.canonical_facets();
  std::vector<std::vector<std::string>> star;
  for (const auto& f : facets)
    if (std::find(f.begin(), f.end(), k.label(w)) != f.end()) star.push_back(f);
  std::shuffle(star.begin(), star.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, star.size());
  star.resize(count(rng));
  for (auto f : star) {
    // Join to a random face of the star facet that contains w.
    std::vector<std::string> face{k.label(w)};
    for (const auto& v : f)
      if (v != k.label(w) && std::bernoulli_distribution(0.6)(rng)) face.push_back(v);
    face.push_back(label);
    facets.push_back(face);
  }
  return dtc::Complex::from_labels(facets);
}

}  // namespace oracle
