#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "conesep/cones.hpp"
#include "support.hpp"

using namespace conesep;
using test_support::F;
using test_support::V;

namespace {

ConeUnion orthant2() { return ConeUnion::from_generators({{V({"1", "0"}), V({"0", "1"})}}, 2); }

std::vector<Vector> sorted(std::vector<Vector> v) {
  sort_unique(v);
  return v;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("piece representations agree", "[cones]") {
  auto p = ConvexConePiece::from_generators({V({"1", "0"}), V({"1", "1"}), V({"2", "1"})}, 2);
  CHECK(p.generators() == sorted({V({"1", "0"}), V({"1", "1"})}));
  CHECK(p.facets().size() == 2);
  CHECK(p.contains(V({"3", "1"})));
  CHECK_FALSE(p.contains(V({"0", "1"})));
  CHECK(p.is_pointed());
  auto half = ConvexConePiece::from_generators({V({"1", "0"}), V({"-1", "0"}), V({"0", "1"})}, 2);
  CHECK_FALSE(half.is_pointed());
  CHECK(half.facets() == std::vector<Functional>{F({"0", "1"})});
  CHECK(code_of([] { ConvexConePiece::from_generators({}, 9); }) == ErrorCode::DimensionTooLarge);
}

TEST_CASE("vertex enumeration of an orthant slab", "[cones]") {
  std::vector<HalfSpace> hs = {{F({"-1", "0"}), 0}, {F({"0", "-1"}), 0}, {F({"1", "1"}), 1}};
  CHECK(vertex_enumeration(hs, 2) == sorted({V({"0", "0"}), V({"1", "0"}), V({"0", "1"})}));
}

TEST_CASE("base polytopes", "[cones]") {
  CHECK(base_polytope(orthant2(), linf_norm(2), false).vertices ==
        sorted({V({"1", "0"}), V({"0", "1"}), V({"1", "1"})}));
  CHECK(base_polytope(orthant2(), l1_norm(2), false).vertices == sorted({V({"1", "0"}), V({"0", "1"})}));
  auto ray = ConeUnion::from_generators({{V({"1", "1"})}}, 2);
  auto b = base_polytope(ray, linf_norm(2), true);
  CHECK(b.vertices == sorted({V({"0", "0"}), V({"1", "1"})}));
  CHECK(b.includes_origin);
  CHECK(code_of([] { base_polytope(orthant2(), abs_functional_seminorm(F({"1", "0"})), false); }) ==
        ErrorCode::NotNormlike);
}

TEST_CASE("lineality of cones and unions", "[cones]") {
  auto l = lineality(orthant2());
  CHECK(l.pointed);
  auto half = ConeUnion::from_generators({{V({"1", "0"}), V({"-1", "0"}), V({"0", "1"})}}, 2);
  auto lh = lineality(half);
  CHECK_FALSE(lh.pointed);
  CHECK(lh.subspace);
  REQUIRE(lh.cone.pieces().size() == 1);
  CHECK(lh.cone.pieces()[0].generators() == sorted({V({"1", "0"}), V({"-1", "0"})}));

  auto bow = ConeUnion::from_generators({{V({"1", "0"}), V({"0", "1"})}, {V({"-1", "0"}), V({"0", "-1"})}}, 2);
  auto lb = lineality(bow);
  CHECK_FALSE(lb.pointed);
  CHECK_FALSE(lb.subspace);
  CHECK(lb.cone.contains(V({"1", "2"})));
  CHECK(lb.cone.contains(V({"-1", "-2"})));
  CHECK_FALSE(lb.cone.contains(V({"1", "-1"})));
}

TEST_CASE("interior membership with the union caveat", "[cones]") {
  CHECK(interior_membership(orthant2(), V({"1", "1"})).interior);
  CHECK_FALSE(interior_membership(orthant2(), V({"1", "0"})).interior);
  CHECK_FALSE(interior_membership(orthant2(), V({"1", "0"})).under_approximation);
  auto halves = ConeUnion::from_generators(
      {{V({"1", "0"}), V({"-1", "0"}), V({"0", "1"})}, {V({"1", "0"}), V({"-1", "0"}), V({"0", "-1"})}}, 2);
  auto v = interior_membership(halves, V({"1", "0"}));
  CHECK_FALSE(v.interior);
  CHECK(v.under_approximation);
  CHECK(is_whole_space(halves));
}

TEST_CASE("dual cones", "[cones]") {
  CHECK(dual_cone(orthant2()).generators() == sorted({V({"1", "0"}), V({"0", "1"})}));
  auto k = ConeUnion::from_generators({{V({"1", "0"}), V({"1", "1"})}}, 2);
  CHECK(dual_cone(k).generators() == sorted({V({"0", "1"}), V({"1", "-1"})}));
  auto bow = ConeUnion::from_generators({{V({"1", "0"}), V({"0", "1"})}, {V({"-1", "0"}), V({"0", "-1"})}}, 2);
  CHECK(dual_cone(bow).is_zero());
}

TEST_CASE("dual set membership", "[cones]") {
  auto k = orthant2();
  auto psi = linf_norm(2);
  CHECK(in_K_sharp(k, psi, F({"1", "1"})));
  CHECK(in_K_plus(k, F({"1", "0"})));
  CHECK_FALSE(in_K_sharp(k, psi, F({"1", "0"})));
  CHECK(in_K_plus(k, F({"0", "0"})));
  CHECK_FALSE(in_K_sharp(k, psi, F({"0", "0"})));
  CHECK_FALSE(in_K_amp(k, F({"1", "0"})));
  CHECK(in_K_amp(k, F({"1", "1"})));
  auto half = ConeUnion::from_generators({{V({"1", "0"}), V({"-1", "0"}), V({"0", "1"})}}, 2);
  CHECK(in_K_amp(half, F({"0", "1"})));
  CHECK_FALSE(in_K_sharp(half, psi, F({"0", "1"})));
}

TEST_CASE("base classification", "[cones]") {
  CHECK(classify_base(orthant2(), linf_norm(2)).kind == BaseKind::NormBase);
  auto c = classify_base(orthant2(), abs_functional_seminorm(F({"1", "0"})));
  CHECK(c.kind == BaseKind::SeminormBase);
  REQUIRE(c.degenerate_part.has_value());
  CHECK(c.degenerate_part->pieces()[0].generators() == std::vector<Vector>{V({"0", "1"})});
  auto diag = ConeUnion::from_generators({{V({"1", "1"})}}, 2);
  CHECK(classify_base(diag, abs_functional_seminorm(F({"1", "0"}))).kind == BaseKind::NormlikeBase);
  CHECK(classify_base(ConeUnion({}, 2), linf_norm(2)).kind == BaseKind::None);
}

TEST_CASE("boundary cones", "[cones]") {
  auto b = boundary_cone(orthant2());
  REQUIRE(b.pieces().size() == 2);
  CHECK(b.contains(V({"5", "0"})));
  CHECK(b.contains(V({"0", "5"})));
  CHECK_FALSE(b.contains(V({"1", "1"})));

  // Middle sector spanned by (3/5, 2/5) and (2/5, 3/5).
  auto omega2 = ConeUnion::from_generators({{V({"3/5", "2/5"}), V({"2/5", "3/5"})}}, 2);
  auto bo = boundary_cone(omega2);
  REQUIRE(bo.pieces().size() == 2);
  CHECK(bo.contains(V({"3", "2"})));
  CHECK(bo.contains(V({"2", "3"})));

  auto halves = ConeUnion::from_generators(
      {{V({"1", "0"}), V({"-1", "0"}), V({"0", "1"})}, {V({"1", "0"}), V({"-1", "0"}), V({"0", "-1"})}}, 2);
  CHECK(code_of([&] { boundary_cone(halves); }) == ErrorCode::NontrivialityViolated);

  // Two quadrants sharing the positive y-axis: the shared ray is interior.
  auto two = ConeUnion::from_generators({{V({"1", "0"}), V({"0", "1"})}, {V({"0", "1"}), V({"-1", "0"})}}, 2);
  auto bt = boundary_cone(two);
  CHECK(bt.contains(V({"1", "0"})));
  CHECK(bt.contains(V({"-1", "0"})));
  CHECK_FALSE(bt.contains(V({"0", "1"})));
}

TEST_CASE("boundary cones in three dimensions", "[cones]") {
  auto o3 = ConeUnion::from_generators({{V({"1", "0", "0"}), V({"0", "1", "0"}), V({"0", "0", "1"})}}, 3);
  auto b = boundary_cone(o3);
  CHECK(b.pieces().size() == 3);
  // Two orthants glued along the x3 = 0 ... x1 = 0 facet.
  auto glued = ConeUnion::from_generators({{V({"1", "0", "0"}), V({"0", "1", "0"}), V({"0", "0", "1"})},
                                           {V({"-1", "0", "0"}), V({"0", "1", "0"}), V({"0", "0", "1"})}},
                                          3);
  auto bg = boundary_cone(glued);
  CHECK(bg.pieces().size() == 4);
  CHECK_FALSE(bg.contains(V({"0", "1", "1"})));
  auto overlap = ConeUnion::from_generators({{V({"1", "0", "0"}), V({"0", "1", "0"}), V({"0", "0", "1"})},
                                             {V({"1", "1", "0"}), V({"0", "1", "0"}), V({"0", "0", "1"})}},
                                            3);
  CHECK(code_of([&] { boundary_cone(overlap); }) == ErrorCode::UnsupportedOverlap);
}

TEST_CASE("facet and generator representations agree on random cones", "[cones][property]") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 2 + rng() % 3, k = 1 + rng() % 6;
    std::vector<Vector> g;
    for (std::size_t i = 0; i < k; ++i) {
      Vector v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = Scalar(static_cast<long>(rng() % 7) - 3);
      g.push_back(v);
    }
    auto p = ConvexConePiece::from_generators(g, d);
    for (const auto& v : g) CHECK(p.contains(v));
    auto q = ConvexConePiece::from_facets(p.facets(), d);
    CHECK(q.generators() == p.generators());
    // Duality involution for convex cones.
    auto dd = dual_cone(ConeUnion({dual_cone(ConeUnion({p}, d))}, d));
    CHECK(dd.facets() == p.facets());
  }
}

TEST_CASE("base polytope contains every normalized cone point", "[cones][property]") {
  std::mt19937_64 rng(4);
  std::vector<PolyhedralSeminorm> gauges = {linf_norm(2), l1_norm(2), regular_polygon_norm(6)};
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Vector> g;
    for (int i = 0; i < 3; ++i) g.push_back(Vector{Scalar(1 + static_cast<long>(rng() % 4)), Scalar(static_cast<long>(rng() % 7) - 3)});
    auto K = ConeUnion::from_generators({g}, 2);
    const auto& psi = gauges[trial % gauges.size()];
    auto verts = base_polytope(K, psi, false).vertices;
    for (int s = 0; s < 200; ++s) {
      Vector x(2);
      for (const auto& v : K.pieces()[0].generators()) x += v * Scalar(static_cast<long>(rng() % 5));
      if (x.is_zero()) continue;
      Vector y = x / psi(x);
      CHECK(std::holds_alternative<HullMember>(point_in_hull(verts, y)));
    }
  }
}

TEST_CASE("duals of solid cones are pointed", "[cones][property]") {
  std::mt19937_64 rng(8);
  int done = 0;
  while (done < 50) {
    std::size_t d = 2 + rng() % 2;
    std::vector<Vector> g;
    for (std::size_t i = 0; i < d + 1; ++i) {
      Vector v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = Scalar(static_cast<long>(rng() % 7) - 3);
      g.push_back(v);
    }
    auto K = ConeUnion::from_generators({g}, d);
    if (!K.is_solid()) continue;
    ++done;
    auto kp = dual_cone(K);
    CHECK(kp.is_pointed());
    Vector inner(d);
    for (const auto& v : g) inner += v;  // interior point of a solid cone
    for (const auto& y : kp.generators()) {
      if (y.is_zero()) continue;
      CHECK(to_functional(y)(inner) > 0);
    }
  }
}
