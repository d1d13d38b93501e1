#include <doctest.h>

#include <random>

#include "dtc/contiguity_search.hpp"
#include "dtc/product.hpp"
#include "oracles.hpp"

using namespace dtc;

namespace {

ComplexPtr boundary_triangle() {
  return share(Complex::from_labels({{"a", "b"}, {"b", "c"}, {"a", "c"}}));
}

// Simplex rule checked directly on the closure of K.
bool rule(const oracle::Closure& base, int n, const std::vector<int>& pairs) {
  oracle::Face p1, p2;
  for (int w : pairs) {
    p1.push_back(w / n);
    p2.push_back(w % n);
  }
  return base.has(p1) && base.has(p2);
}

}  // namespace

TEST_CASE("square of the boundary triangle") {
  ProductComplex p = categorical_square(boundary_triangle());
  CHECK(p.product()->num_vertices() == 9);
  CHECK(p.product()->num_facets() == 9);
  CHECK(p.product()->label(p.pair(0, 1)) == "a|b");
}

TEST_CASE("square of a vertex and of an edge") {
  ProductComplex v = categorical_square(share(Complex::from_labels({{"x"}})));
  CHECK(v.product()->num_vertices() == 1);
  CHECK(v.product()->num_facets() == 1);

  auto edge = share(Complex::from_labels({{"a", "b"}}));
  ProductComplex e = categorical_square(edge);
  REQUIRE(e.product()->num_facets() == 1);
  CHECK(e.product()->facet(0).size() == 4);
  auto c = oracle::closure(*edge);
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    Simplex s;
    std::vector<int> ws;
    for (int w = 0; w < 4; ++w)
      if (mask >> w & 1u) {
        s.insert(static_cast<std::size_t>(w));
        ws.push_back(w);
      }
    CHECK(e.product()->is_simplex(s) == rule(c, 2, ws));
    CHECK(rule(c, 2, ws));
  }
}

TEST_CASE("property: product simplices obey the projection rule") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    auto k = share(oracle::random_complex(rng, n, 1 + static_cast<int>(rng() % 4), 1, 3));
    ProductComplex p = categorical_square(k);
    auto c = oracle::closure(*k);
    const int m = n * n;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      Simplex s;
      std::vector<int> ws;
      for (int w = 0; w < m; ++w)
        if (mask >> w & 1u) {
          s.insert(static_cast<std::size_t>(w));
          ws.push_back(w);
        }
      REQUIRE(p.product()->is_simplex(s) == rule(c, n, ws));
    }
  }
}

TEST_CASE("property: the square has |facets(K)|² facets") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    auto k = share(oracle::random_complex(rng, 1 + static_cast<int>(rng() % 10), 1 + static_cast<int>(rng() % 6), 1, 4));
    ProductComplex p = categorical_square(k);
    REQUIRE(p.product()->num_facets() == k->num_facets() * k->num_facets());
    for (std::size_t i = 0; i < k->num_facets(); ++i)
      for (std::size_t j = 0; j < k->num_facets(); ++j) {
        const Simplex& f = p.product()->facet(p.facet_of(i, j));
        REQUIRE(p.project(f, 1) == k->facet(i));
        REQUIRE(p.project(f, 2) == k->facet(j));
      }
  }
}

TEST_CASE("projections and the diagonal") {
  auto k = boundary_triangle();
  ProductComplex p = categorical_square(k);
  SimplicialMap p1 = projection(p, 1), p2 = projection(p, 2);
  const VertexId ab = p.product()->id_of("a|b");
  CHECK(k->label(p1(ab)) == "a");
  CHECK(k->label(p2(ab)) == "b");
  CHECK_NOTHROW(validate_map(p.product(), k, p1.assignment()));

  SimplicialMap d = diagonal(p);
  CHECK(p.product()->label(d(k->id_of("a"))) == "a|a");
  CHECK(p.product()->is_simplex(p.product()->simplex_of({"a|a", "b|b"})));
  CHECK(compose(p1, d) == identity_map(k));
  CHECK(compose(p2, d) == identity_map(k));
}

TEST_CASE("square_map of identity and constant") {
  auto k = boundary_triangle();
  ProductComplex p = categorical_square(k);
  CHECK(square_map(identity_map(k), p, p) == identity_map(p.product()));
  SimplicialMap c = constant_map(k, k, 1);
  CHECK(square_map(c, p, p) == constant_map(p.product(), p.product(), p.pair(1, 1)));
}

TEST_CASE("property: squaring carries contiguity witnesses to witnesses") {
  std::mt19937 rng(47);
  int checked = 0;
  for (int trial = 0; checked < 25 && trial < 300; ++trial) {
    auto k = share(oracle::random_complex(rng, 2 + static_cast<int>(rng() % 2), 2, 1, 3));
    auto l = share(oracle::random_complex(rng, 2 + static_cast<int>(rng() % 3), 3, 1, 3));
    auto maps = oracle::all_simplicial_maps(oracle::closure(*k), oracle::closure(*l));
    auto pick = [&] {
      const auto& a = maps[rng() % maps.size()];
      return SimplicialMap(k, l, std::vector<VertexId>(a.begin(), a.end()));
    };
    SimplicialMap f = pick(), g = pick();
    auto r = same_contiguity_class(f, g);
    if (r.verdict != Verdict::kYes) continue;
    ProductComplex pk = categorical_square(k), pl = categorical_square(l);
    std::vector<SimplicialMap> sq;
    for (const auto& h : r.witness->steps()) sq.push_back(square_map(h, pk, pl));
    REQUIRE(check_witness(sq, square_map(f, pk, pl), square_map(g, pk, pl)).empty());
    ++checked;
  }
  CHECK(checked == 25);
}

TEST_CASE("contiguous maps on the boundary triangle have contiguous squares") {
  auto k = boundary_triangle();
  ProductComplex p = categorical_square(k);
  auto maps = oracle::all_simplicial_maps(oracle::closure(*k), oracle::closure(*k));
  int pairs = 0;
  for (const auto& a : maps)
    for (const auto& b : maps) {
      SimplicialMap f(k, k, {a.begin(), a.end()}), g(k, k, {b.begin(), b.end()});
      if (!are_contiguous(f, g)) continue;
      ++pairs;
      REQUIRE(are_contiguous(square_map(f, p, p), square_map(g, p, p)));
    }
  CHECK(pairs > 27);
}

TEST_CASE("preimages") {
  auto k = boundary_triangle();
  ProductComplex p = categorical_square(k);
  auto full = preimage_subcomplex(projection(p, 1), *k);
  REQUIRE(full);
  CHECK(*full == *p.product());

  auto a_only = Complex::from_labels({{"a"}});
  auto column = preimage_subcomplex(projection(p, 1), a_only);
  REQUIRE(column);
  // {a} × ∂Δ²: the three edges {a|x, a|y} for edges {x,y} of K.
  CHECK(column->canonical_facets() ==
        std::vector<std::vector<std::string>>{{"a|a", "a|b"}, {"a|a", "a|c"}, {"a|b", "a|c"}});

  SimplicialMap c = constant_map(p.product(), k, k->id_of("b"));
  auto b_edge = Complex::from_labels({{"b", "c"}});
  auto whole = preimage_subcomplex(c, b_edge);
  REQUIRE(whole);
  CHECK(*whole == *p.product());

  auto none = preimage_subcomplex(constant_map(p.product(), k, 0), Complex::from_labels({{"b"}}));
  CHECK_FALSE(none);
}
