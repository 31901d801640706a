#include "doctest.h"
#include "stabkit/surface.hpp"

#include <set>

using namespace stabkit;
using namespace stabkit::surface;

namespace {

// independent Catalan oracle: C_{k+1} = sum C_i C_{k-i}
long long catalan(int n) {
  std::vector<long long> c{1};
  for (int k = 0; k < n; ++k) {
    long long s = 0;
    for (int i = 0; i <= k; ++i) s += c[i] * c[k - i];
    c.push_back(s);
  }
  return c[n];
}

}  // namespace

TEST_CASE("compatibility arithmetic") {
  CHECK(check_compatibility({0, {5}, {1, 1, 1}}));
  CHECK_FALSE(check_compatibility({0, {5}, {1, 1}}));
  CHECK(check_compatibility({1, {3, 3}, {5, 5}}));
  CHECK_THROWS_AS(check_compatibility({0, {}, {1}}), domain_error);
  CHECK_THROWS_AS(check_compatibility({0, {5}, {0}}), domain_error);
}

TEST_CASE("triangulation validation") {
  CHECK_NOTHROW(DiscTriangulation(5, {{0, 2}, {0, 3}}));
  CHECK_THROWS_AS(DiscTriangulation(5, {{0, 2}, {1, 3}}), domain_error);  // crossing
  CHECK_THROWS_AS(DiscTriangulation(5, {{0, 2}}), domain_error);          // not maximal
  CHECK_THROWS_AS(DiscTriangulation(5, {{0, 1}, {0, 3}}), domain_error);  // boundary edge
  CHECK_THROWS_AS(DiscTriangulation(2, {}), domain_error);
  CHECK_NOTHROW(DiscTriangulation(3, {}));
}

TEST_CASE("enumeration counts match the Catalan oracle") {
  CHECK(enumerate_triangulations(3).size() == 1);
  CHECK(enumerate_triangulations(4).size() == 2);
  CHECK(enumerate_triangulations(5).size() == 5);
  for (int m = 3; m <= 12; ++m)
    CHECK(enumerate_triangulations(m).size() == static_cast<size_t>(catalan(m - 2)));
  CHECK_THROWS_AS(enumerate_triangulations(13), domain_error);
}

TEST_CASE("flip") {
  DiscTriangulation pent(5, {{0, 2}, {0, 3}});
  auto flipped = flip(pent, {0, 3});
  CHECK(flipped.arcs() == std::vector<Arc>{{0, 2}, {2, 4}});

  DiscTriangulation square(4, {{0, 2}});
  CHECK(flip(square, {0, 2}).arcs() == std::vector<Arc>{{1, 3}});

  CHECK_THROWS_AS(flip(pent, {1, 3}), domain_error);
}

TEST_CASE("flip is a fixed-point-free involution preserving maximality") {
  for (int m = 4; m <= 7; ++m)
    for (const auto& t : enumerate_triangulations(m))
      for (const Arc& a : t.arcs()) {
        auto once = flip(t, a);
        CHECK(once.arcs() != t.arcs());
        CHECK(static_cast<int>(once.arcs().size()) == m - 3);
        // the new arc is the one not in t
        Arc fresh{-1, -1};
        for (const Arc& x : once.arcs())
          if (!t.has_arc(x)) fresh = x;
        CHECK(flip(once, fresh).arcs() == t.arcs());
      }
}

TEST_CASE("quiver from a pentagon triangulation is A2") {
  auto a2 = qp::QuiverWithPotential(qp::Quiver({1, 2}, {{"a", 1, 2}}), qp::Potential());
  for (const auto& t : enumerate_triangulations(5)) {
    auto q = quiver_from_angulation(t);
    CHECK(q.quiver().vertices().size() == 2);
    CHECK(q.quiver().arrows().size() == 1);
    CHECK(q.potential().is_zero());
    CHECK(qp::is_isomorphic(q, a2));
  }
}

TEST_CASE("quiver from the square and the hexagon fan") {
  auto sq = quiver_from_angulation(DiscTriangulation(4, {{0, 2}}));
  CHECK(sq.quiver().vertices().size() == 1);
  CHECK(sq.quiver().arrows().empty());

  auto hex = quiver_from_angulation(DiscTriangulation(6, {{0, 2}, {2, 4}, {0, 4}}));
  CHECK(hex.quiver().vertices().size() == 3);
  CHECK(hex.quiver().arrows().size() == 3);
  REQUIRE(hex.potential().terms().size() == 1);
  CHECK(hex.potential().terms()[0].cycle.size() == 3);
  // matches the 3-cycle with full potential up to isomorphism
  auto three = qp::QuiverWithPotential(
      qp::Quiver({1, 2, 3}, {{"x", 1, 2}, {"y", 2, 3}, {"z", 3, 1}}),
      qp::Potential({{Rat(1), {"x", "y", "z"}}}));
  CHECK(qp::is_isomorphic(hex, three));
}

TEST_CASE("quivers from convex-disc triangulations never need loops or 2-cycles") {
  for (int m = 4; m <= 8; ++m)
    for (const auto& t : enumerate_triangulations(m))
      CHECK_NOTHROW(quiver_from_angulation(t));  // the constructor enforces both
}

TEST_CASE("flip graphs") {
  auto g5 = flip_graph(5);
  CHECK(g5.vertices.size() == 5);
  CHECK(g5.edges.size() == 5);
  std::vector<int> deg(5, 0);
  for (auto& [a, b] : g5.edges) {
    ++deg[a];
    ++deg[b];
  }
  for (int d : deg) CHECK(d == 2);  // a single 5-cycle

  auto g4 = flip_graph(4);
  CHECK(g4.vertices.size() == 2);
  CHECK(g4.edges.size() == 1);

  auto g3 = flip_graph(3);
  CHECK(g3.vertices.size() == 1);
  CHECK(g3.edges.empty());

  CHECK_THROWS_AS(flip_graph(11), domain_error);
}

TEST_CASE("flip-mutation square") {
  for (const auto& t : enumerate_triangulations(5))
    for (const Arc& a : t.arcs()) CHECK(flip_mutation_square(t, a));
  for (const auto& t : enumerate_triangulations(6))
    for (const Arc& a : t.arcs()) CHECK(flip_mutation_square(t, a));
  DiscTriangulation square(4, {{0, 2}});
  CHECK(flip_mutation_square(square, {0, 2}));
}

TEST_CASE("exchange graph comparison") {
  auto r5 = compare_exchange_graphs(5);
  CHECK(r5.isomorphic);
  CHECK(r5.detail == "isomorphic: 5-cycle");
  CHECK(r5.flip_vertices == 5);
  CHECK(r5.heart_vertices == 5);

  auto r4 = compare_exchange_graphs(4);
  CHECK(r4.isomorphic);
  CHECK(r4.detail == "isomorphic: single edge");

  auto r3 = compare_exchange_graphs(3);
  CHECK(r3.isomorphic);
  CHECK(r3.detail == "isomorphic: single vertex");

  auto r6 = compare_exchange_graphs(6);
  CHECK(r6.isomorphic);
  CHECK(r6.flip_vertices == 14);
}

TEST_CASE("triangulation JSON and DOT") {
  DiscTriangulation pent(5, {{0, 2}, {0, 3}});
  auto text = to_json(pent);
  auto back = triangulation_from_json(text);
  CHECK(back.arcs() == pent.arcs());
  CHECK(to_json(back) == text);
  CHECK_THROWS_AS(triangulation_from_json("{\"m\":5,\"arcs\":[[0,2]]}"), domain_error);

  auto dot = to_dot(flip_graph(4));
  CHECK(dot.find("graph flips") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}
