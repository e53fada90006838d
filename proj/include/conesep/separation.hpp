#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conesep/augdual.hpp"
#include "conesep/cones.hpp"
#include "conesep/errors.hpp"
#include "conesep/hull.hpp"
#include "conesep/linalg.hpp"
#include "conesep/seminorms.hpp"

namespace conesep {

enum class SeparationVariant { Weak, Proper, Strict, StrictBoundary };

inline const char* variant_name(SeparationVariant v) {
  switch (v) {
    case SeparationVariant::Weak: return "weak";
    case SeparationVariant::Proper: return "proper";
    case SeparationVariant::Strict: return "strict";
    case SeparationVariant::StrictBoundary: return "strict-boundary";
  }
  return "weak";
}

inline SeparationVariant parse_variant(const std::string& s) {
  if (s == "weak") return SeparationVariant::Weak;
  if (s == "proper") return SeparationVariant::Proper;
  if (s == "strict") return SeparationVariant::Strict;
  if (s == "strict-boundary" || s == "strict_boundary") return SeparationVariant::StrictBoundary;
  throw Error(ErrorCode::ParseError, "unknown variant '" + s + "'");
}

enum class SeparationClass { None, Weak, Proper, Strict };

inline const char* separation_class_name(SeparationClass c) {
  switch (c) {
    case SeparationClass::None: return "none";
    case SeparationClass::Weak: return "weak";
    case SeparationClass::Proper: return "proper";
    case SeparationClass::Strict: return "strict";
  }
  return "none";
}

/// The class a variant asks for; strict-boundary asks for strict separation of bd A.
inline SeparationClass requested_class(SeparationVariant v) {
  switch (v) {
    case SeparationVariant::Weak: return SeparationClass::Weak;
    case SeparationVariant::Proper: return SeparationClass::Proper;
    default: return SeparationClass::Strict;
  }
}

struct SeparationProblem {
  ConeUnion K;
  ConeUnion A;
  PolyhedralSeminorm psi;
  SeparationVariant variant = SeparationVariant::Strict;
};

/// Outcome of one disjointness question between two hulls.
struct Finding {
  bool disjoint = false;
  std::optional<SeparatingHyperplane> hyperplane;
  std::optional<IntersectionWitness> witness;
};

struct HypothesisReport {
  SeparationVariant variant = SeparationVariant::Strict;
  std::vector<Vector> s_minus_k;
  /// S_A^0, or S_{dA}^0 for the boundary variant.
  std::vector<Vector> s_a0;
  std::optional<ConeUnion> boundary;
  bool k_solid = false;
  bool k_pointed = false;
  bool a_solid = false;
  bool s_minus_k_solid = false;
  bool s_a0_solid = false;
  Finding a0_vs_cor_minus_k;  // S_A^0 and cor S_{-K}
  Finding cor_a0_vs_minus_k;  // cor S_A^0 and S_{-K}
  Finding relint_vs_relint;
  Finding closures;
  bool a_meets_minus_k_nonzero = false;
  Verdict a_meets_cor_minus_k = Verdict::No;
  bool origin_in_s_minus_k = false;
  bool holds = false;
  std::string reason;
};

class HypothesisFailure : public Error {
 public:
  explicit HypothesisFailure(HypothesisReport r)
      : Error(ErrorCode::HypothesisFailed, r.reason), report_(std::move(r)) {}
  const HypothesisReport& report() const { return report_; }

 private:
  HypothesisReport report_;
};

namespace detail {

inline Finding hull_finding(const std::vector<Vector>& P, const std::vector<Vector>& Q, bool p_relint, bool q_relint) {
  Finding f;
  if (auto w = hull_intersection(P, Q, p_relint, q_relint)) {
    f.witness = std::move(*w);
    return f;
  }
  f.disjoint = true;
  auto out = separate_polytopes(P, Q, SeparationMode::Weak);
  if (auto* h = std::get_if<SeparatingHyperplane>(&out)) f.hyperplane = *h;
  return f;
}

inline Finding strict_finding(const std::vector<Vector>& P, const std::vector<Vector>& Q) {
  Finding f;
  auto out = separate_polytopes(P, Q, SeparationMode::Strict);
  if (auto* h = std::get_if<SeparatingHyperplane>(&out)) {
    f.disjoint = true;
    f.hyperplane = *h;
  } else {
    f.witness = std::get<IntersectionWitness>(out);
  }
  return f;
}

inline bool nonzero_intersection(const ConeUnion& X, const ConeUnion& Y) {
  for (const auto& p : X.pieces())
    for (const auto& q : Y.pieces())
      if (!p.intersect(q).is_zero()) return true;
  return false;
}

/// A point of X interior to a solid piece of Y.
inline bool meets_piece_interior(const ConeUnion& X, const ConeUnion& Y) {
  for (const auto& p : X.pieces()) {
    if (p.is_zero()) continue;
    for (const auto& q : Y.pieces())
      if (q.is_solid() && cone_point_exists(p, q.facets(), {}, false)) return true;
  }
  return false;
}

inline void validate(const SeparationProblem& pr) {
  if (pr.K.dim() != pr.A.dim() || pr.psi.dim() != pr.K.dim())
    throw Error(ErrorCode::DimensionMismatch, "K, A and the seminorm differ in dimension");
  require_nontrivial(pr.K, "K");
  require_nontrivial(pr.A, "A");
  if (!classify_base(pr.K, pr.psi).normlike()) throw Error(ErrorCode::NotNormlike, "K has no normlike base");
  if (!classify_base(pr.A, pr.psi).normlike()) throw Error(ErrorCode::NotNormlike, "A has no normlike base");
}

}  // namespace detail

/// A cap cor(-K) is empty exactly when A misses -K off the origin; a hit inside
/// a solid piece of -K is conclusive the other way.
inline Verdict a_meets_cor_minus_k(const ConeUnion& K, const ConeUnion& A) {
  auto mk = K.negated();
  if (!detail::nonzero_intersection(A, mk)) return Verdict::No;
  if (detail::meets_piece_interior(A, mk)) return Verdict::Yes;
  return Verdict::Unsupported;
}

inline HypothesisReport check_hypotheses(const SeparationProblem& pr) {
  detail::validate(pr);
  HypothesisReport r;
  r.variant = pr.variant;
  const std::size_t n = pr.K.dim();
  const ConeUnion mk = pr.K.negated();
  r.s_minus_k = base_polytope(mk, pr.psi, false).vertices;
  if (pr.variant == SeparationVariant::StrictBoundary) {
    r.boundary = boundary_cone(pr.A);
    r.s_a0 = base_polytope(*r.boundary, pr.psi, true).vertices;
  } else {
    r.s_a0 = base_polytope(pr.A, pr.psi, true).vertices;
  }
  r.k_solid = pr.K.is_solid();
  r.k_pointed = is_pointed(pr.K);
  r.a_solid = pr.A.is_solid();
  r.s_minus_k_solid = affine_dimension(r.s_minus_k) == n;
  r.s_a0_solid = affine_dimension(r.s_a0) == n;
  r.a0_vs_cor_minus_k = detail::hull_finding(r.s_a0, r.s_minus_k, false, true);
  r.cor_a0_vs_minus_k = detail::hull_finding(r.s_a0, r.s_minus_k, true, false);
  r.relint_vs_relint = detail::hull_finding(r.s_a0, r.s_minus_k, true, true);
  r.closures = detail::strict_finding(r.s_a0, r.s_minus_k);
  r.a_meets_minus_k_nonzero = detail::nonzero_intersection(pr.A, mk);
  r.a_meets_cor_minus_k = a_meets_cor_minus_k(pr.K, pr.A);
  r.origin_in_s_minus_k = std::holds_alternative<HullMember>(point_in_hull(r.s_minus_k, Vector(n)));

  switch (pr.variant) {
    case SeparationVariant::Weak:
      r.holds = (r.s_minus_k_solid && r.a0_vs_cor_minus_k.disjoint) || (r.s_a0_solid && r.cor_a0_vs_minus_k.disjoint) ||
                r.relint_vs_relint.disjoint;
      if (!r.holds) r.reason = "S_A^0 meets cor S_-K, cor S_A^0 meets S_-K and the relative interiors meet";
      break;
    case SeparationVariant::Proper:
      r.holds = r.k_solid && r.s_minus_k_solid && r.a0_vs_cor_minus_k.disjoint;
      if (!r.k_solid)
        r.reason = "K is not solid";
      else if (!r.s_minus_k_solid)
        r.reason = "S_-K is not solid";
      else if (!r.holds)
        r.reason = "S_A^0 meets cor S_-K";
      break;
    case SeparationVariant::Strict:
    case SeparationVariant::StrictBoundary:
      r.holds = r.k_pointed && r.closures.disjoint;
      if (!r.k_pointed)
        r.reason = "K is not pointed";
      else if (!r.holds)
        r.reason = pr.variant == SeparationVariant::Strict ? "cl S_A^0 meets cl S_-K" : "cl S_dA^0 meets cl S_-K";
      break;
  }
  return r;
}

/// Classification of the separation of Omega1 and Omega2 by a closed convex cone C.
struct SeparationByConesVerdict {
  SeparationClass achieved = SeparationClass::None;
  bool omega1_in_closure = false;
  bool omega2_misses_interior = false;
  bool point_off_boundary = false;
  bool omega1_in_interior = false;
  bool omega2_outside_closure = false;
  /// A generator violating the first failed generator-level clause.
  std::optional<Vector> witness;
};

inline SeparationByConesVerdict classify_separation(const ConeUnion& omega1, const ConeUnion& omega2,
                                                    const ConvexConePiece& C) {
  SeparationByConesVerdict v;
  const auto& h = C.facets();
  auto in_closure = [&](const Vector& x) {
    for (const auto& f : h)
      if (f(x).sign() < 0) return false;
    return true;
  };
  auto in_interior = [&](const Vector& x) {
    for (const auto& f : h)
      if (f(x).sign() <= 0) return false;
    return true;
  };

  v.omega1_in_closure = true;
  for (const auto& g : omega1.all_generators()) {
    if (!in_closure(g)) {
      v.omega1_in_closure = false;
      if (!v.witness) v.witness = g;
    }
  }
  v.omega2_misses_interior = true;
  for (const auto& p : omega2.pieces())
    if (!p.is_zero() && detail::cone_point_exists(p, h, {}, false)) v.omega2_misses_interior = false;

  bool off = false;
  for (const auto& p : omega1.pieces())
    if (!p.is_zero() && detail::cone_point_exists(p, h, {}, false)) off = true;
  for (const auto& p : omega2.pieces())
    for (const auto& f : h)
      if (!off && !p.is_zero() && detail::cone_point_exists(p, {-f}, {}, false)) off = true;
  v.point_off_boundary = off;

  v.omega1_in_interior = true;
  for (const auto& g : omega1.all_generators()) {
    if (!in_interior(g)) {
      v.omega1_in_interior = false;
      if (!v.witness && v.omega1_in_closure) v.witness = g;
    }
  }
  v.omega2_outside_closure = true;
  for (const auto& p : omega2.pieces())
    if (!p.intersect(C).is_zero()) v.omega2_outside_closure = false;

  if (v.omega1_in_closure && v.omega2_misses_interior) {
    v.achieved = SeparationClass::Weak;
    if (v.point_off_boundary) v.achieved = SeparationClass::Proper;
    if (v.achieved == SeparationClass::Proper && v.omega1_in_interior && v.omega2_outside_closure)
      v.achieved = SeparationClass::Strict;
  }
  return v;
}

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> failures;
  /// min of x*(a) + alpha over the base vertices of A (or bd A), and the minimizer.
  Scalar a_min;
  Vector a_argmin;
  /// max of x*(k) + alpha over the vertices of S_-K, and the maximizer.
  Scalar k_max;
  Vector k_argmax;
  /// Independent recomputation of hull disjointness for strict certificates.
  std::optional<bool> hulls_disjoint;
  std::optional<Vector> counterexample;

  void fail(std::string msg, std::optional<Vector> at = std::nullopt) {
    ok = false;
    failures.push_back(std::move(msg));
    if (at && !counterexample) counterexample = std::move(at);
  }
};

struct SeparationCertificate {
  SeparationVariant variant = SeparationVariant::Strict;
  AugmentedFunctional aug;
  AugDualClass aug_class;
  SeparatingHyperplane hyperplane;
  Scalar delta;
  /// alpha = 0: the separating set is a halfspace.
  bool linear = false;
  /// {phi < 0} is empty, so int C is not described by phi and the cone-level class degrades.
  bool strict_level_set_empty = false;
  SeparationClass achieved = SeparationClass::None;
  SeparationByConesVerdict cones;
  VerificationReport verification;
};

/// {x : x*(x) + alpha psi(x) <= 0} as a convex cone.
inline ConvexConePiece separating_cone(const SeparationCertificate& c, const PolyhedralSeminorm& psi) {
  return level_set_cone(c.aug, psi).cone;
}

namespace detail {

inline void verify_into(const SeparationProblem& pr, const SeparationCertificate& c, VerificationReport& r) {
  const auto& x = c.aug.x_star;
  const Scalar& alpha = c.aug.alpha;
  const bool strict = c.variant == SeparationVariant::Strict || c.variant == SeparationVariant::StrictBoundary;
  if (x.dim() != pr.K.dim()) {
    r.fail("functional has the wrong dimension");
    return;
  }
  if (x.is_zero()) r.fail("x* is zero");
  if (alpha.sign() < 0) r.fail("alpha is negative");
  if (!in_K_plus(pr.K, x)) r.fail("x* is not in K+");

  const ConeUnion mk = pr.K.negated();
  const ConeUnion a_side = c.variant == SeparationVariant::StrictBoundary ? boundary_cone(pr.A) : pr.A;
  const auto a_verts = base_polytope(a_side, pr.psi, false).vertices;
  const auto k_verts = base_polytope(mk, pr.psi, false).vertices;

  // On vertices psi = 1, so phi reduces to x* + alpha.
  auto am = vertex_min(x, a_verts);
  r.a_min = am.value + alpha;
  r.a_argmin = am.at;
  auto km = vertex_max(x, k_verts);
  r.k_max = km.value + alpha;
  r.k_argmax = km.at;
  if (r.a_min.sign() < 0) r.fail("phi is negative on A", am.at);
  if (strict && r.a_min.sign() <= 0) r.fail("phi is not positive on A minus the origin", am.at);
  if (r.k_max.sign() > 0) r.fail("phi is positive on -K", km.at);
  if (strict && r.k_max.sign() >= 0) r.fail("phi is not negative on -K minus the origin", km.at);

  auto cls = classify_augmented(pr.K, pr.psi, c.aug);
  if (cls.a_plus != Verdict::Yes) r.fail("(x*, alpha) is not in K^{a+}", cls.argmin);
  if (c.variant == SeparationVariant::Proper) {
    if (cls.a_circ == Verdict::No) r.fail("(x*, alpha) is not in K^{ao}");
    // phi < 0 on the interior of every solid piece of -K.
    std::vector<Functional> rows;
    for (const auto& g : pr.psi.generators()) rows.push_back(x + g * alpha);
    for (const auto& p : mk.pieces())
      if (p.is_solid())
        for (const auto& row : rows)
          if (cone_point_exists(p, {}, {row}, true)) r.fail("phi vanishes inside cor(-K)");
  }
  if (strict) {
    if (alpha.sign() <= 0) r.fail("alpha is not positive");
    if (cls.a_sharp != Verdict::Yes) r.fail("(x*, alpha) is not in K^{a#}", cls.argmin);
    auto s_a0 = a_verts;
    s_a0.push_back(Vector(pr.K.dim()));
    r.hulls_disjoint = !hull_intersection(s_a0, k_verts).has_value();
    if (!*r.hulls_disjoint) r.fail("converse check: the hulls intersect");
    if (alpha.sign() > 0) {
      auto ls = level_set_cone(c.aug, pr.psi);
      auto bp = bp_cone(-x / alpha, pr.psi);
      if (!same_inequalities(ls.raw_facets, bp.raw_facets)) r.fail("level-set cone differs from C(-x*/alpha)");
    }
  }
}

inline SeparationCertificate assemble(const SeparationProblem& pr, SeparationVariant variant,
                                      const SeparatingHyperplane& h) {
  SeparationCertificate c;
  c.variant = variant;
  c.hyperplane = h;
  c.delta = (h.beta + h.gamma) / Scalar(2);
  c.aug = AugmentedFunctional(h.f, -c.delta);
  c.linear = c.aug.alpha.is_zero();
  std::vector<Functional> negative_rows;
  for (const auto& g : pr.psi.generators()) negative_rows.push_back(-(c.aug.x_star + g * c.aug.alpha));
  c.strict_level_set_empty = !region_has_nonzero_point({}, negative_rows, pr.K.dim());
  c.aug_class = classify_augmented(pr.K, pr.psi, c.aug);
  const ConeUnion omega2 = variant == SeparationVariant::StrictBoundary ? boundary_cone(pr.A) : pr.A;
  c.cones = classify_separation(pr.K.negated(), omega2, level_set_cone(c.aug, pr.psi).cone);
  c.achieved = c.cones.achieved;
  verify_into(pr, c, c.verification);
  if (!c.verification.ok)
    throw Error(ErrorCode::InternalError, "constructed certificate failed verification: " + c.verification.failures[0]);
  return c;
}

inline SeparatingHyperplane weak_hyperplane(const HypothesisReport& r) {
  auto out = separate_polytopes(r.s_a0, r.s_minus_k, SeparationMode::Weak);
  if (auto* h = std::get_if<SeparatingHyperplane>(&out)) return *h;
  throw Error(ErrorCode::InternalError, "hypothesis holds but no separating hyperplane was found");
}

}  // namespace detail

/// Recomputes every inequality of the certificate from the problem data. Never throws.
inline VerificationReport verify_certificate(const SeparationProblem& pr, const SeparationCertificate& c) {
  VerificationReport r;
  try {
    detail::verify_into(pr, c, r);
  } catch (const std::exception& e) {
    r.fail(std::string("verification aborted: ") + e.what());
  }
  return r;
}

inline SeparationCertificate separate_weak(const SeparationProblem& pr) {
  auto r = check_hypotheses({pr.K, pr.A, pr.psi, SeparationVariant::Weak});
  if (!r.holds) throw HypothesisFailure(std::move(r));
  return detail::assemble(pr, SeparationVariant::Weak, detail::weak_hyperplane(r));
}

inline SeparationCertificate separate_proper(const SeparationProblem& pr) {
  if (!pr.K.is_solid()) throw Error(ErrorCode::NotSolid, "K is not solid");
  auto r = check_hypotheses({pr.K, pr.A, pr.psi, SeparationVariant::Proper});
  if (!r.holds) throw HypothesisFailure(std::move(r));
  return detail::assemble(pr, SeparationVariant::Proper, detail::weak_hyperplane(r));
}

namespace detail {

inline SeparationCertificate strict_driver(const SeparationProblem& pr, SeparationVariant variant) {
  if (!is_pointed(pr.K)) throw Error(ErrorCode::NotPointed, "K is not pointed");
  auto r = check_hypotheses({pr.K, pr.A, pr.psi, variant});
  if (!r.holds) throw HypothesisFailure(std::move(r));
  return assemble(pr, variant, *r.closures.hyperplane);
}

}  // namespace detail

inline SeparationCertificate separate_strict(const SeparationProblem& pr) {
  return detail::strict_driver(pr, SeparationVariant::Strict);
}

inline SeparationCertificate separate_strict_boundary(const SeparationProblem& pr) {
  return detail::strict_driver(pr, SeparationVariant::StrictBoundary);
}

inline SeparationCertificate separate(const SeparationProblem& pr) {
  switch (pr.variant) {
    case SeparationVariant::Weak: return separate_weak(pr);
    case SeparationVariant::Proper: return separate_proper(pr);
    case SeparationVariant::Strict: return separate_strict(pr);
    case SeparationVariant::StrictBoundary: return separate_strict_boundary(pr);
  }
  return separate_strict(pr);
}

struct Assertion {
  std::string name;
  bool value = false;
  /// False when the value is only a lower bound (no witness found for a non-convex input).
  bool exact = true;
};

struct EquivalenceReport {
  bool convex = false;
  /// Interior form: S_A^0 cap cor S_-K empty, A cap cor(-K) empty, linear separation, augmented separation.
  std::vector<Assertion> interior;
  /// Strict form: closed hulls disjoint, augmented strict separation, A misses -K off 0 with 0 outside S_-K.
  std::vector<Assertion> strict;

  /// implies[i][j]: assertion i true implies assertion j true on this instance.
  static std::vector<std::vector<bool>> matrix(const std::vector<Assertion>& a) {
    std::vector<std::vector<bool>> m(a.size(), std::vector<bool>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = !a[i].value || a[j].value;
    return m;
  }
};

namespace detail {

/// Is there (x*, alpha) with x* + alpha >= t on A vertices, x* + alpha <= -t on S_-K
/// vertices and alpha >= t for some t > 0? This is strict augmented separation
/// stated on the bases, solved without reference to the hull LP.
inline std::optional<AugmentedFunctional> strict_augmented_lp(const std::vector<Vector>& a_verts,
                                                             const std::vector<Vector>& k_verts, std::size_t n) {
  const std::size_t total = n + 2;  // x*, alpha, t
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = Functional::unit(total, n + 1);
  for (const auto& a : a_verts) {
    Functional row = embed(to_functional(a), total);
    row[n] = 1;
    row[n + 1] = -1;
    lp.constraints.push_back({row, Relation::GreaterEqual, 0});
  }
  for (const auto& k : k_verts) {
    Functional row = embed(to_functional(k), total);
    row[n] = 1;
    row[n + 1] = 1;
    lp.constraints.push_back({row, Relation::LessEqual, 0});
  }
  Functional at = Functional::unit(total, n) - Functional::unit(total, n + 1);
  lp.constraints.push_back({at, Relation::GreaterEqual, 0});
  lp.constraints.push_back({Functional::unit(total, n), Relation::LessEqual, 1});
  lp.constraints.push_back({Functional::unit(total, n + 1), Relation::LessEqual, 1});
  add_box(lp, n, total);
  auto opt = solve_optimal(lp);
  if (opt.value.sign() <= 0) return std::nullopt;
  Functional x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = opt.point[i];
  return AugmentedFunctional(x, opt.point[n]);
}

}  // namespace detail

inline EquivalenceReport equivalence_report(const SeparationProblem& pr) {
  detail::validate(pr);
  EquivalenceReport rep;
  rep.convex = pr.K.is_convex() && pr.A.is_convex();
  const std::size_t n = pr.K.dim();
  auto r = check_hypotheses({pr.K, pr.A, pr.psi, SeparationVariant::Proper});

  rep.interior.push_back({"S_A^0 cap cor S_-K is empty", r.s_minus_k_solid && r.a0_vs_cor_minus_k.disjoint, true});
  const Verdict meets = r.a_meets_cor_minus_k;
  rep.interior.push_back({"A cap cor(-K) is empty", meets == Verdict::No, meets != Verdict::Unsupported});
  // x* in K+ and A+, nonzero: on a solid K it is negative on cor(-K).
  std::vector<ConvexConePiece> both = pr.K.pieces();
  both.insert(both.end(), pr.A.pieces().begin(), pr.A.pieces().end());
  const bool linear = pr.K.is_solid() && !dual_cone(ConeUnion(both, n)).is_zero();
  rep.interior.push_back({"linear separation of A and cor(-K)", linear, true});
  bool augmented = linear;
  if (!augmented) {
    try {
      separate_proper(pr);
      augmented = true;
    } catch (const Error&) {
    }
  }
  rep.interior.push_back({"augmented separation of A and cor(-K)", augmented, augmented || rep.convex});

  rep.strict.push_back({"cl S_A^0 cap cl S_-K is empty", r.closures.disjoint, true});
  const bool aug_strict = r.k_pointed && detail::strict_augmented_lp(base_polytope(pr.A, pr.psi, false).vertices,
                                                                     r.s_minus_k, n)
                                             .has_value();
  rep.strict.push_back({"strict augmented separation", aug_strict, true});
  rep.strict.push_back(
      {"A misses -K off the origin and 0 is outside S_-K", !r.a_meets_minus_k_nonzero && !r.origin_in_s_minus_k, true});
  return rep;
}

}  // namespace conesep
