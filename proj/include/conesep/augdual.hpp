#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conesep/cones.hpp"
#include "conesep/errors.hpp"
#include "conesep/hull.hpp"
#include "conesep/seminorms.hpp"

namespace conesep {

/// The pair (x*, alpha) behind phi(x) = x*(x) + alpha * psi(x).
struct AugmentedFunctional {
  Functional x_star;
  Scalar alpha;

  AugmentedFunctional() = default;
  AugmentedFunctional(Functional x, Scalar a) : x_star(std::move(x)), alpha(std::move(a)) {
    if (alpha.sign() < 0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  }

  bool operator==(const AugmentedFunctional&) const = default;
};

inline Scalar phi_eval(const AugmentedFunctional& aug, const PolyhedralSeminorm& psi, const Vector& x) {
  if (aug.x_star.dim() != x.dim() || psi.dim() != x.dim())
    throw Error(ErrorCode::DimensionMismatch, "phi evaluated at a point of the wrong dimension");
  return aug.x_star(x) + aug.alpha * psi(x);
}

/// Minimum of a functional over a vertex list, with the first minimizer.
struct VertexExtreme {
  Scalar value;
  Vector at;
};

inline VertexExtreme vertex_min(const Functional& f, const std::vector<Vector>& verts) {
  if (verts.empty()) throw Error(ErrorCode::DegenerateInput, "no vertices");
  VertexExtreme e{f(verts.front()), verts.front()};
  for (const auto& v : verts) {
    Scalar w = f(v);
    if (w < e.value) e = {std::move(w), v};
  }
  return e;
}

inline VertexExtreme vertex_max(const Functional& f, const std::vector<Vector>& verts) {
  auto e = vertex_min(-f, verts);
  e.value = -e.value;
  return e;
}

struct AugDualClass {
  Verdict a_plus = Verdict::No;
  Verdict a_sharp = Verdict::No;
  Verdict a_amp = Verdict::No;
  Verdict a_circ = Verdict::No;
  /// min of x* over the base vertices, and where it is attained.
  Scalar vertex_minimum;
  Vector argmin;
};

namespace detail {

/// x* - alpha c_j for every gauge generator; x*(y) - alpha psi(y) is their minimum.
inline std::vector<Functional> residual_rows(const AugmentedFunctional& aug, const PolyhedralSeminorm& psi) {
  std::vector<Functional> rows;
  for (const auto& c : psi.generators()) rows.push_back(aug.x_star - c * aug.alpha);
  sort_unique(rows);
  return rows;
}

inline bool in_lineality_of_dual(const ConeUnion& K, const Functional& x_star) {
  return in_K_plus(K, x_star) && in_K_plus(K, -x_star);
}

/// x*(y) - alpha psi(y) > 0 on K minus l(K): every bad set piece cap {row <= 0} lies in l(K).
inline bool amp_condition(const ConeUnion& K, const std::vector<Functional>& rows) {
  std::vector<ConvexConePiece> bad;
  for (const auto& p : K.pieces()) {
    for (const auto& r : rows) {
      auto f = p.facets();
      f.push_back(-r);
      auto b = ConvexConePiece::from_facets(f, K.dim());
      if (!b.is_zero()) bad.push_back(std::move(b));
    }
  }
  return bad.empty() || within_lineality(K, bad);
}

/// Some y in the relative interior of P has x*(y) - alpha psi(y) <= 0.
inline bool relint_violation(const ConvexConePiece& P, const std::vector<Functional>& rows) {
  for (const auto& r : rows)
    if (cone_point_exists(P, {}, {-r}, true)) return true;
  return false;
}

/// icor K memberships for a convex K are decided exactly. For a union only a
/// violation inside the interior of a solid piece is conclusive.
inline Verdict circ_condition(const ConeUnion& K, const AugmentedFunctional& aug,
                              const std::vector<Functional>& rows) {
  if (!in_K_plus(K, aug.x_star) || in_lineality_of_dual(K, aug.x_star)) return Verdict::No;
  if (K.is_convex()) return to_verdict(!relint_violation(K.pieces().front(), rows));
  for (const auto& p : K.pieces())
    if (p.is_solid() && relint_violation(p, rows)) return Verdict::No;
  return Verdict::Unsupported;
}

}  // namespace detail

/// Membership of (x*, alpha) in the four augmented dual sets of K.
inline AugDualClass classify_augmented(const ConeUnion& K, const PolyhedralSeminorm& psi,
                                       const AugmentedFunctional& aug) {
  if (aug.x_star.dim() != K.dim()) throw Error(ErrorCode::DimensionMismatch, "functional dimension differs from cone");
  if (K.is_zero()) throw Error(ErrorCode::NontrivialityViolated, "K is the zero cone");
  const auto verts = base_polytope(K, psi, false).vertices;
  AugDualClass c;
  auto m = vertex_min(aug.x_star, verts);
  c.vertex_minimum = m.value;
  c.argmin = m.at;
  c.a_plus = to_verdict(in_K_plus(K, aug.x_star) && m.value >= aug.alpha);
  c.a_sharp = to_verdict(m.value > aug.alpha);
  const auto rows = detail::residual_rows(aug, psi);
  c.a_amp = to_verdict(in_K_amp(K, aug.x_star) && detail::amp_condition(K, rows));
  c.a_circ = detail::circ_condition(K, aug, rows);
  return c;
}

/// (x*, c) with c the minimum of x* over the base vertices.
inline AugmentedFunctional witness_a_plus(const ConeUnion& K, const PolyhedralSeminorm& psi, const Functional& x_star) {
  auto m = vertex_min(x_star, base_polytope(K, psi, false).vertices);
  if (m.value.sign() <= 0)
    throw Error(ErrorCode::NoPositiveInfimum, "x* is not positive on the base (vertex " + m.at.str() + ")");
  return {x_star, m.value};
}

inline AugmentedFunctional shrink_to_sharp(const AugmentedFunctional& aug, const Scalar& eps) {
  if (eps.sign() <= 0 || eps > aug.alpha) throw Error(ErrorCode::BadEpsilon, "epsilon must lie in (0, alpha]");
  return {aug.x_star, aug.alpha - eps};
}

/// C(x*) = {x : x*(x) >= psi(x)}, stored as the inequalities (x* - c_j)(x) >= 0.
struct BPCone {
  Functional x_star;
  std::vector<Functional> raw_facets;
  ConvexConePiece cone;

  bool contains(const PolyhedralSeminorm& psi, const Vector& x) const { return x_star(x) >= psi(x); }
  bool strictly_contains(const PolyhedralSeminorm& psi, const Vector& x) const { return x_star(x) > psi(x); }
};

inline BPCone bp_cone(const Functional& x_star, const PolyhedralSeminorm& psi) {
  if (x_star.dim() != psi.dim()) throw Error(ErrorCode::DimensionMismatch, "functional dimension differs from seminorm");
  std::vector<Functional> rows;
  for (const auto& c : psi.generators()) rows.push_back(x_star - c);
  sort_unique(rows);
  auto cone = ConvexConePiece::from_facets(rows, psi.dim());
  return {x_star, std::move(rows), std::move(cone)};
}

/// {x : x*(x) + alpha psi(x) <= 0} as the inequalities (-x* - alpha c_j)(x) >= 0.
struct LevelSetCone {
  AugmentedFunctional aug;
  std::vector<Functional> raw_facets;
  ConvexConePiece cone;

  bool contains(const PolyhedralSeminorm& psi, const Vector& x) const { return phi_eval(aug, psi, x).sign() <= 0; }
  bool strictly_contains(const PolyhedralSeminorm& psi, const Vector& x) const {
    return phi_eval(aug, psi, x).sign() < 0;
  }
};

inline LevelSetCone level_set_cone(const AugmentedFunctional& aug, const PolyhedralSeminorm& psi) {
  std::vector<Functional> rows;
  for (const auto& c : psi.generators()) rows.push_back(-aug.x_star - c * aug.alpha);
  sort_unique(rows);
  auto cone = ConvexConePiece::from_facets(rows, psi.dim());
  return {aug, std::move(rows), std::move(cone)};
}

/// Facet lists equal up to positive scaling of each row.
inline bool same_inequalities(std::vector<Functional> a, std::vector<Functional> b) {
  auto norm = [](std::vector<Functional>& v) {
    std::vector<Functional> out;
    for (const auto& f : v)
      if (!f.is_zero()) out.push_back(f.primitive());
    sort_unique(out);
    v = std::move(out);
  };
  norm(a);
  norm(b);
  return a == b;
}

struct BPClass {
  Verdict plus = Verdict::No;
  Verdict sharp = Verdict::No;
  Verdict amp = Verdict::No;
  Verdict circ = Verdict::No;
};

/// Memberships of x* in K^{BP+}, K^{BP#}, K^{BP&}, K^{BPo}: the augmented classes at alpha = 1.
inline BPClass bp_class(const ConeUnion& K, const PolyhedralSeminorm& psi, const Functional& x_star) {
  auto c = classify_augmented(K, psi, {x_star, Scalar(1)});
  return {c.a_plus, c.a_sharp, c.a_amp, c.a_circ};
}

/// K minus {0} inside the interior of C(x*).
inline bool is_dilating(const ConeUnion& K, const PolyhedralSeminorm& psi, const Functional& x_star) {
  if (!is_pointed(K)) throw Error(ErrorCode::NotPointed, "K is not pointed");
  return vertex_min(x_star, base_polytope(K, psi, false).vertices).value > 1;
}

struct OriginExclusionReport {
  bool origin_in_hull = false;
  /// Convex weights on the base vertices when the origin is in the hull.
  std::vector<Scalar> weights;
  std::vector<Vector> vertices;
  std::optional<Functional> k_sharp_witness;
  std::optional<AugmentedFunctional> cor_aplus_witness;
};

inline OriginExclusionReport origin_exclusion_report(const ConeUnion& K, const PolyhedralSeminorm& psi) {
  OriginExclusionReport r;
  r.vertices = base_polytope(K, psi, false).vertices;
  if (r.vertices.empty()) throw Error(ErrorCode::NontrivialityViolated, "K is the zero cone");
  auto verdict = point_in_hull(r.vertices, Vector(K.dim()));
  if (const auto* m = std::get_if<HullMember>(&verdict)) {
    r.origin_in_hull = true;
    r.weights = m->weights;
    return r;
  }
  Functional f = std::get<HullNonMember>(verdict).f;
  f = f / vertex_min(f, r.vertices).value;
  r.k_sharp_witness = f;
  r.cor_aplus_witness = AugmentedFunctional(f, Scalar(1, 2));
  return r;
}

}  // namespace conesep
