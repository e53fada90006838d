#pragma once

// Randomized property suites shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "conesep/augdual.hpp"
#include "conesep/random.hpp"
#include "conesep/separation.hpp"

namespace suites {

using namespace conesep;

struct SuiteResult {
  std::string name;
  long instances = 0;
  long checks = 0;
  long failed = 0;
  std::vector<std::string> failures;

  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  bool ok() const { return failed == 0; }

  void check(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    ++failed;
    if (failures.size() < 10) failures.push_back(what);
  }
};

// ---------------------------------------------------------------------------
// Sampling helpers

inline Vector random_rational_point(Rng& rng, std::size_t n) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(rng.uniform(-9, 9), rng.uniform(1, 7));
  return Vector(c);
}

inline Functional random_functional(Rng& rng, std::size_t n, long bound = 5) {
  return to_functional(random_vector(rng, n, bound));
}

/// Symmetric ball spanned by +/- e_i and a few random points.
inline PolyhedralSeminorm random_minkowski(Rng& rng, std::size_t n) {
  std::vector<Vector> ball;
  for (std::size_t i = 0; i < n; ++i) {
    ball.push_back(Vector::unit(n, i));
    ball.push_back(-Vector::unit(n, i));
  }
  for (long k = rng.uniform(1, 2); k > 0; --k) {
    auto v = random_vector(rng, n, 2);
    ball.push_back(v);
    ball.push_back(-v);
  }
  return minkowski_norm_from_ball(ball);
}

inline PolyhedralSeminorm random_norm(Rng& rng, std::size_t n) {
  switch (rng.uniform(0, n == 2 ? 3 : 2)) {
    case 0: return linf_norm(n);
    case 1: return l1_norm(n);
    case 2: return random_minkowski(rng, n);
    default: return regular_polygon_norm(rng.uniform(3, 6));
  }
}

/// Nonnegative integer combination of the generators, possibly zero.
inline Vector random_point_in(Rng& rng, const ConvexConePiece& p) {
  Vector x(p.dim());
  for (const auto& g : p.generators()) x = x + g * Scalar(rng.uniform(0, 4));
  return x;
}

/// Strictly positive combination of all generators: interior when p is solid.
inline Vector random_interior_point(Rng& rng, const ConvexConePiece& p) {
  Vector x(p.dim());
  for (const auto& g : p.generators()) x = x + g * Scalar(rng.uniform(1, 4));
  return x;
}

inline bool nontrivial(const ConeUnion& K) { return !K.is_zero() && !is_whole_space(K); }

/// Pointed unions, arbitrary unions and cones with a lineality direction, in turn.
inline ConeUnion random_mixed_cone(Rng& rng, std::size_t n, long kind) {
  for (;;) {
    ConeUnion K;
    if (kind % 3 == 0) {
      K = random_pointed_cone(rng, random_functional(rng, n, 3), 1 + rng.uniform(0, 1), n);
    } else if (kind % 3 == 1) {
      K = random_cone(rng, n, 1 + rng.uniform(0, 2), 2);
    } else {
      auto g = random_pointed_generators(rng, random_functional(rng, n, 3), n, 4);
      auto l = random_vector(rng, n, 3);
      g.push_back(l);
      g.push_back(-l);
      K = ConeUnion::from_generators({g}, n);
    }
    if (nontrivial(K)) return K;
  }
}

inline ConeUnion single(const ConvexConePiece& p) { return ConeUnion({p}, p.dim()); }

/// Convex solid cone, pointed or with a lineality direction, never the whole space.
inline ConvexConePiece random_solid_piece(Rng& rng, std::size_t n, bool pointed) {
  for (;;) {
    std::vector<Vector> g;
    if (pointed) {
      g = random_pointed_generators(rng, random_functional(rng, n, 3), n + 1 + rng.uniform(0, 2), 4);
    } else {
      g = random_pointed_generators(rng, random_functional(rng, n, 3), n, 4);
      auto l = random_vector(rng, n, 3);
      g.push_back(l);
      g.push_back(-l);
    }
    auto p = ConvexConePiece::from_generators(g, n);
    if (p.is_solid() && !p.facets().empty() && p.is_pointed() == pointed) return p;
  }
}

/// Independent LP: do conv(P) and conv(Q) share a point?
inline bool hulls_meet(const std::vector<Vector>& P, const std::vector<Vector>& Q) {
  const std::size_t d = P.front().dim();
  const std::size_t total = P.size() + Q.size();
  LinearProgram lp;
  lp.objective = Functional(total);
  lp.nonnegative.assign(total, true);
  Functional sp(total), sq(total);
  for (std::size_t i = 0; i < P.size(); ++i) sp[i] = 1;
  for (std::size_t j = 0; j < Q.size(); ++j) sq[P.size() + j] = 1;
  lp.constraints.push_back({sp, Relation::Equal, 1});
  lp.constraints.push_back({sq, Relation::Equal, 1});
  for (std::size_t k = 0; k < d; ++k) {
    Functional row(total);
    for (std::size_t i = 0; i < P.size(); ++i) row[i] = P[i][k];
    for (std::size_t j = 0; j < Q.size(); ++j) row[P.size() + j] = -Q[j][k];
    lp.constraints.push_back({row, Relation::Equal, 0});
  }
  return !std::holds_alternative<LPInfeasible>(solve_lp(lp));
}

/// Independent LP: some x* with x*(v) >= 1 on every point.
inline std::optional<Functional> positive_on_all(const std::vector<Vector>& pts, std::size_t n) {
  LinearProgram lp;
  lp.objective = Functional(n);
  for (const auto& v : pts) lp.constraints.push_back({to_functional(v), Relation::GreaterEqual, 1});
  auto out = solve_lp(lp);
  if (const auto* o = std::get_if<LPOptimal>(&out)) return to_functional(o->point);
  return std::nullopt;
}

/// Independent LP over (x*, alpha): x*(v) >= alpha + 1 on every point, alpha >= 1.
inline std::optional<AugmentedFunctional> augmented_sharp_lp(const std::vector<Vector>& pts, std::size_t n) {
  LinearProgram lp;
  lp.objective = Functional(n + 1);
  for (const auto& v : pts) {
    Functional row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = v[i];
    row[n] = -1;
    lp.constraints.push_back({row, Relation::GreaterEqual, 1});
  }
  lp.constraints.push_back({Functional::unit(n + 1, n), Relation::GreaterEqual, 1});
  auto out = solve_lp(lp);
  const auto* o = std::get_if<LPOptimal>(&out);
  if (!o) return std::nullopt;
  Functional x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = o->point[i];
  return AugmentedFunctional(x, o->point[n]);
}

inline std::string at(long i) { return " (instance " + std::to_string(i) + ")"; }

// ---------------------------------------------------------------------------
// Cones generated by a base

inline SuiteResult generated_cone_suite(std::uint64_t seed, long count) {
  SuiteResult r("cone generated by its base");
  Rng rng(seed);
  for (long i = 0; i < count; ++i, ++r.instances) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const auto psi = random_norm(rng, n);
    const auto K = random_mixed_cone(rng, n, i);
    const auto lin = lineality(K);
    for (const auto& v : base_polytope(K, psi, false).vertices)
      r.check(K.contains(v) && psi(v) == 1, "base vertex off K or off psi = 1" + at(i));
    for (const auto& piece : K.pieces()) {
      const auto piece_base = base_polytope(single(piece), psi, false).vertices;
      for (int s = 0; s < 6; ++s) {
        // K = R_+ (K cap B) and K minus {0} = P (B minus {0}).
        const auto k = random_point_in(rng, piece);
        if (k.is_zero()) continue;
        const auto b = k / psi(k);
        r.check(K.contains(b) && psi(b) == 1, "normalized point left K or B" + at(i));
        r.check(std::holds_alternative<HullMember>(point_in_hull(piece_base, b)),
                "normalized point outside the piece base polytope" + at(i));
        r.check(K.contains(b * Scalar(7, 3)), "positive multiple of a base point left K" + at(i));
        // K minus l(K) = P ((E minus (-K)) cap B).
        const bool off_lineality = !K.contains(-k);
        r.check(off_lineality == !K.contains(-b), "normalization moved a point across l(K)" + at(i));
        r.check(off_lineality == !lin.cone.contains(k), "lineality cone disagrees with K cap -K" + at(i));
      }
      if (!piece.is_solid()) continue;
      // cor K = P ((cor K) cap B) for K != E.
      for (int s = 0; s < 3; ++s) {
        const auto x = random_interior_point(rng, piece);
        const auto b = x / psi(x);
        r.check(piece.interior_contains(x) && piece.interior_contains(b) && psi(b) == 1,
                "interior ray does not normalize into the interior" + at(i));
      }
      r.check(!interior_membership(K, Vector(n)).interior, "origin interior to a nontrivial cone" + at(i));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// psi_max of a Gerstewitz functional

inline SuiteResult psi_max_suite(std::uint64_t seed, long count) {
  SuiteResult r("psi_max properties");
  Rng rng(seed);
  for (long i = 0; i < count; ++i, ++r.instances) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const bool pointed = i % 3 != 2;
    const auto piece = random_solid_piece(rng, n, pointed);
    const ConeUnion K = single(piece);
    // -K = {a_i <= 0} with a_i the facets of K.
    const auto psi = gerstewitz_from_solid_cone(piece.facets(), n);
    const auto pm = psi_max(psi);
    for (int s = 0; s < 10; ++s) {
      const auto y = random_rational_point(rng, n);
      const auto z = random_rational_point(rng, n);
      const Scalar t(rng.uniform(1, 9), rng.uniform(1, 9));
      r.check((psi(y).sign() <= 0) == K.contains(-y), "{psi <= 0} differs from -K" + at(i));
      r.check((psi(y).sign() < 0) == piece.interior_contains(-y), "{psi < 0} differs from -int K" + at(i));
      // psi_max is a seminorm.
      r.check(pm(y) == pm(-y) && pm(y).sign() >= 0, "psi_max not symmetric and nonnegative" + at(i));
      r.check(pm(y + z) <= pm(y) + pm(z), "psi_max not subadditive" + at(i));
      r.check(pm(y * t) == t * pm(y), "psi_max not positively homogeneous" + at(i));
      r.check(pm(y) == max(psi(y), psi(-y)), "psi_max differs from max(psi(y), psi(-y))" + at(i));
      // l(K) = {psi_max <= 0} = {psi_max = 0}.
      r.check((pm(y).sign() <= 0) == (K.contains(y) && K.contains(-y)), "{psi_max <= 0} differs from l(K)" + at(i));
      // int K and -int K never meet, so {psi_max < 0} is empty.
      r.check(!(piece.interior_contains(y) && piece.interior_contains(-y)), "int K meets -int K" + at(i));
    }
    for (const auto& l : piece.lineality_basis()) {
      const auto y = l * Scalar(rng.uniform(-5, 5), rng.uniform(1, 4));
      r.check(pm(y).is_zero() && lineality(K).cone.contains(y), "lineality direction with psi_max != 0" + at(i));
    }
    // K pointed <=> psi_max a norm <=> norm-base <=> normlike-base.
    const bool p = is_pointed(K);
    const auto base = classify_base(K, pm);
    r.check(p == pointed, "pointedness verdict differs from construction" + at(i));
    r.check(p == pm.is_norm(), "pointedness differs from psi_max being a norm" + at(i));
    r.check(p == (base.kind == BaseKind::NormBase), "pointedness differs from norm-base" + at(i));
    r.check(p == base.normlike(), "pointedness differs from normlike-base" + at(i));
    // K != l(K) <=> {y in K : psi_max(y) = 1} is a base.
    bool positive_somewhere = false;
    for (const auto& g : piece.generators()) positive_somewhere |= pm(g).sign() > 0;
    r.check(positive_somewhere == !within_lineality(K, K.pieces()), "K != l(K) differs from a nonempty base" + at(i));
    // l(K) cap A = {0} <=> psi_max restricted to A is normlike.
    ConeUnion A;
    do A = random_cone(rng, n, 1 + rng.uniform(0, 1), 2); while (!nontrivial(A));
    bool meets = false;
    const auto lin = lineality(K);
    for (const auto& lp : lin.cone.pieces())
      for (const auto& ap : A.pieces()) meets |= !lp.intersect(ap).is_zero();
    r.check(!meets == classify_base(A, pm).normlike(), "l(K) cap A differs from the base verdict on A" + at(i));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Augmented dual sets

struct Sample {
  AugmentedFunctional aug;
  AugDualClass cls;
};

/// Candidate (x*, alpha) pairs around the vertex minimum of x*.
inline std::vector<AugmentedFunctional> candidates(Rng& rng, const ConeUnion& K, const PolyhedralSeminorm& psi) {
  std::vector<AugmentedFunctional> out;
  const auto verts = base_polytope(K, psi, false).vertices;
  const std::size_t n = K.dim();
  std::vector<Functional> xs;
  for (int s = 0; s < 3; ++s) xs.push_back(random_functional(rng, n));
  auto dual = dual_cone(K);
  if (!dual.is_zero()) {
    Vector d(n);
    for (const auto& g : dual.generators()) d = d + g * Scalar(rng.uniform(1, 3));
    xs.push_back(to_functional(d));
    xs.push_back(to_functional(dual.generators().front()));
  }
  for (const auto& x : xs) {
    const Scalar m = vertex_min(x, verts).value;
    out.emplace_back(x, Scalar(0));
    if (m.sign() > 0) {
      out.emplace_back(x, m / 2);
      out.emplace_back(x, m);
      out.emplace_back(x, m * Scalar(3, 2));
    } else {
      out.emplace_back(x, Scalar(rng.uniform(1, 3)));
    }
  }
  return out;
}

inline SuiteResult inclusion_suite(std::uint64_t seed, long count) {
  SuiteResult r("augmented dual inclusions");
  Rng rng(seed);
  long sharp = 0, amp = 0, circ = 0;
  for (long i = 0; i < count; ++i, ++r.instances) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const auto psi = random_norm(rng, n);
    const auto K = i % 4 == 3 ? single(random_solid_piece(rng, n, true)) : random_mixed_cone(rng, n, i);
    const bool convex = K.is_convex();
    const bool not_subspace = !within_lineality(K, K.pieces());
    const bool solid = K.is_solid();
    for (const auto& aug : candidates(rng, K, psi)) {
      const auto c = classify_augmented(K, psi, aug);
      sharp += c.a_sharp == Verdict::Yes;
      amp += c.a_amp == Verdict::Yes;
      circ += c.a_circ == Verdict::Yes;
      if (c.a_sharp == Verdict::Yes) {
        r.check(c.a_plus == Verdict::Yes, "a# without a+" + at(i));
        r.check(c.a_amp == Verdict::Yes, "a# without a&" + at(i));
      }
      if (convex && not_subspace) {
        if (c.a_amp == Verdict::Yes) r.check(c.a_circ == Verdict::Yes, "a& without a-circ on a convex cone" + at(i));
        if (c.a_sharp == Verdict::Yes) r.check(c.a_circ == Verdict::Yes, "a# without a-circ on a convex cone" + at(i));
      }
      if (convex && solid) {
        if (c.a_circ == Verdict::Yes) r.check(c.a_plus == Verdict::Yes, "a-circ without a+ on a solid cone" + at(i));
        if (c.a_amp == Verdict::Yes && not_subspace)
          r.check(c.a_plus == Verdict::Yes, "a& without a+ on a solid cone" + at(i));
      }
    }
  }
  r.check(sharp > 0 && amp > 0 && circ > 0, "a class never occurred among the samples");
  return r;
}

inline bool member(const AugDualClass& c, int theta) {
  switch (theta) {
    case 0: return c.a_plus == Verdict::Yes;
    case 1: return c.a_sharp == Verdict::Yes;
    case 2: return c.a_amp == Verdict::Yes;
    default: return c.a_circ == Verdict::Yes;
  }
}

inline SuiteResult structure_suite(std::uint64_t seed, long count) {
  SuiteResult r("augmented dual cone structure");
  Rng rng(seed);
  static const char* names[] = {"a+", "a#", "a&", "a-circ"};
  long perturbed = 0;
  for (long i = 0; i < count; ++i, ++r.instances) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const auto psi = random_norm(rng, n);
    const auto K = i % 2 ? single(random_solid_piece(rng, n, true)) : random_mixed_cone(rng, n, i);
    const auto verts = base_polytope(K, psi, false).vertices;
    const auto dual = dual_cone(K);

    // Zero-alpha embeddings of K+, K#, K& and K+ minus l(K+).
    for (int s = 0; s < 4; ++s) {
      const auto x = random_functional(rng, n);
      const auto c = classify_augmented(K, psi, AugmentedFunctional(x, 0));
      r.check(in_K_plus(K, x) == (c.a_plus == Verdict::Yes), "K+ x {0} differs from a+" + at(i));
      if (in_K_sharp(K, psi, x)) r.check(c.a_sharp == Verdict::Yes, "K# x {0} outside a#" + at(i));
      if (in_K_amp(K, x)) r.check(c.a_amp == Verdict::Yes, "K& x {0} outside a&" + at(i));
      if (in_K_plus(K, x) && !detail::in_lineality_of_dual(K, x))
        r.check(c.a_circ != Verdict::No, "K+ minus l(K+) x {0} rejected by a-circ" + at(i));
    }

    // The origin: in a+, never in a# or a-circ, in a& only when K is a subspace.
    const auto z = classify_augmented(K, psi, AugmentedFunctional(Functional(n), 0));
    r.check(z.a_plus == Verdict::Yes && z.a_sharp == Verdict::No && z.a_circ == Verdict::No,
            "origin misclassified" + at(i));
    if (!within_lineality(K, K.pieces())) r.check(z.a_amp == Verdict::No, "origin in a& of a non-subspace" + at(i));

    // Cone property and convexity.
    std::vector<Sample> pool;
    for (const auto& aug : candidates(rng, K, psi)) pool.push_back({aug, classify_augmented(K, psi, aug)});
    for (const auto& s : pool) {
      for (const Scalar& t : {Scalar(1, 3), Scalar(2), Scalar(7, 2)}) {
        const auto c = classify_augmented(K, psi, AugmentedFunctional(s.aug.x_star * t, s.aug.alpha * t));
        for (int th = 0; th < 4; ++th)
          if (member(s.cls, th)) r.check(member(c, th), std::string("scaling left ") + names[th] + at(i));
      }
    }
    for (std::size_t a = 0; a < pool.size(); ++a) {
      for (std::size_t b = a + 1; b < pool.size(); ++b) {
        const AugmentedFunctional sum(pool[a].aug.x_star + pool[b].aug.x_star, pool[a].aug.alpha + pool[b].aug.alpha);
        std::optional<AugDualClass> c;
        for (int th = 0; th < 4; ++th) {
          if (!member(pool[a].cls, th) || !member(pool[b].cls, th)) continue;
          if (!c) c = classify_augmented(K, psi, sum);
          r.check(member(*c, th), std::string("sum of members left ") + names[th] + at(i));
        }
      }
    }

    // l(K^{a+}) = l(K+) x {0}; members with alpha > 0 sit in (K+ minus l(K+)) x P.
    for (const auto& s : pool) {
      if (s.cls.a_plus != Verdict::Yes || s.aug.alpha.sign() == 0) continue;
      r.check(!detail::in_lineality_of_dual(K, s.aug.x_star), "alpha > 0 member with x* in l(K+)" + at(i));
      const auto neg = classify_augmented(K, psi, AugmentedFunctional(-s.aug.x_star, s.aug.alpha));
      r.check(neg.a_plus == Verdict::No, "both (x*, alpha) and (-x*, alpha) in a+" + at(i));
    }
    for (const auto& l : dual.lineality_basis()) {
      const auto f = to_functional(l);
      r.check(classify_augmented(K, psi, AugmentedFunctional(f, 0)).a_plus == Verdict::Yes &&
                  classify_augmented(K, psi, AugmentedFunctional(-f, 0)).a_plus == Verdict::Yes,
              "l(K+) x {0} outside l(K^{a+})" + at(i));
      r.check(classify_augmented(K, psi, AugmentedFunctional(f, 1)).a_plus == Verdict::No,
              "l(K+) direction with alpha > 0 in a+" + at(i));
    }
    r.check(dual.is_pointed() == K.hull().is_solid(), "K+ pointedness differs from solidity of K" + at(i));

    // Nontriviality: K^{a+} != {0} <=> K+ != {0}.
    if (!dual.is_zero()) {
      const auto g = to_functional(dual.generators().front());
      r.check(classify_augmented(K, psi, AugmentedFunctional(g, 0)).a_plus == Verdict::Yes,
              "generator of K+ not in a+" + at(i));
    } else {
      for (const auto& s : pool)
        if (!s.aug.x_star.is_zero() || s.aug.alpha.sign() > 0)
          r.check(s.cls.a_plus == Verdict::No, "nonzero a+ member with K+ = {0}" + at(i));
    }

    // Algebraic interior of K^{a+}: a# members with alpha > 0 survive the explicit step
    // eps = min((delta - alpha)/C, -alpha/beta); boundary members do not.
    for (const auto& s : pool) {
      if (s.cls.a_plus != Verdict::Yes || s.aug.alpha.sign() <= 0) continue;
      const Scalar delta = s.cls.vertex_minimum;
      if (delta == s.aug.alpha) {
        const AugmentedFunctional up(s.aug.x_star, s.aug.alpha * Scalar(1001, 1000));
        r.check(classify_augmented(K, psi, up).a_plus == Verdict::No, "boundary member is interior" + at(i));
        continue;
      }
      for (int d = 0; d < 3; ++d) {
        const auto y = random_functional(rng, n);
        const Scalar beta(rng.uniform(-4, 4), rng.uniform(1, 3));
        Scalar C(0);
        for (const auto& v : verts) C = max(C, (y(v) - beta).abs());
        Scalar eps = C.is_zero() ? Scalar(1) : (delta - s.aug.alpha) / C;
        if (beta.sign() < 0) eps = min(eps, -s.aug.alpha / beta);
        for (const Scalar& e : {eps, eps / 2}) {
          const AugmentedFunctional moved(s.aug.x_star + y * e, s.aug.alpha + beta * e);
          r.check(classify_augmented(K, psi, moved).a_plus == Verdict::Yes, "perturbation left a+" + at(i));
        }
        ++perturbed;
      }
    }
  }
  r.check(perturbed > 0, "no interior member was perturbed");
  return r;
}

inline SuiteResult witness_suite(std::uint64_t seed, long count) {
  SuiteResult r("a+ witness and shrink");
  Rng rng(seed);
  long positive = 0;
  for (long i = 0; i < count; ++i, ++r.instances) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const auto psi = random_norm(rng, n);
    const auto K = random_pointed_cone(rng, random_functional(rng, n, 3), 1 + rng.uniform(0, 2), n);
    const auto rep = origin_exclusion_report(K, psi);
    std::vector<Functional> xs{random_functional(rng, n)};
    if (rep.k_sharp_witness) xs.push_back(*rep.k_sharp_witness * Scalar(3) + random_functional(rng, n, 1));
    for (const auto& x : xs) {
      const Scalar c = vertex_min(x, rep.vertices).value;
      if (c.sign() <= 0) {
        bool threw = false;
        try {
          witness_a_plus(K, psi, x);
        } catch (const Error& e) {
          threw = e.code() == ErrorCode::NoPositiveInfimum;
        }
        r.check(threw, "witness built from a functional without positive infimum" + at(i));
        continue;
      }
      ++positive;
      const auto w = witness_a_plus(K, psi, x);
      r.check(w.x_star == x && w.alpha == c, "witness is not (x*, inf over the base)" + at(i));
      r.check(classify_augmented(K, psi, w).a_plus == Verdict::Yes, "witness outside a+" + at(i));
      r.check(classify_augmented(K, psi, AugmentedFunctional(x, c * Scalar(11, 10))).a_plus == Verdict::No,
              "alpha above the infimum still in a+" + at(i));
      for (const Scalar& eps : {c, c / 2, c / 7}) {
        const auto s = shrink_to_sharp(w, eps);
        r.check(s.alpha == c - eps, "shrink changed more than alpha" + at(i));
        r.check(classify_augmented(K, psi, s).a_sharp == Verdict::Yes, "shrunk pair outside a#" + at(i));
      }
    }
  }
  r.check(positive >= count / 2, "too few functionals with a positive infimum");
  return r;
}

// ---------------------------------------------------------------------------
// Origin exclusion chain: 0 not in S_K, K# nonempty, a# pair with alpha > 0.

/// Three rays v, w, -(v + w): pointed, with the origin in the hull of the base.
inline ConeUnion surrounding_rays(Rng& rng, std::size_t n) {
  for (;;) {
    const auto v = random_vector(rng, n, 4);
    const auto w = random_vector(rng, n, 4);
    if (rank(std::vector<Vector>{v, w}, n) < 2) continue;
    return ConeUnion::from_generators({{v}, {w}, {-(v + w)}}, n);
  }
}

inline SuiteResult origin_chain_suite(std::uint64_t seed, long pointed_count, long nonpointed_count) {
  SuiteResult r("origin exclusion chain");
  Rng rng(seed);
  long pointed = 0, nonpointed = 0, excluded = 0, pointed_but_included = 0;
  for (long i = 0; pointed < pointed_count || nonpointed < nonpointed_count; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const auto psi = random_norm(rng, n);
    const auto K = i % 5 == 4 ? surrounding_rays(rng, n) : random_mixed_cone(rng, n, i);
    const bool p = is_pointed(K);
    if (p ? pointed >= pointed_count : nonpointed >= nonpointed_count) continue;
    (p ? pointed : nonpointed) += 1;
    ++r.instances;
    const auto verts = base_polytope(K, psi, false).vertices;
    const bool outside = std::holds_alternative<HullNonMember>(point_in_hull(verts, Vector(n)));
    excluded += outside;
    pointed_but_included += p && !outside;
    r.check(!outside || p, "0 outside S_K for a non-pointed cone" + at(i));

    const auto sharp = positive_on_all(verts, n);
    if (sharp) r.check(in_K_sharp(K, psi, *sharp), "LP functional not in K#" + at(i));
    const auto aug = augmented_sharp_lp(verts, n);
    if (aug) {
      const auto c = classify_augmented(K, psi, *aug);
      r.check(c.a_sharp == Verdict::Yes && c.a_plus == Verdict::Yes && aug->alpha.sign() > 0,
              "LP pair not in a# with alpha > 0" + at(i));
    }
    r.check(outside == sharp.has_value(), "0 outside S_K differs from K# nonempty" + at(i));
    r.check(outside == aug.has_value(), "0 outside S_K differs from an a# pair with alpha > 0" + at(i));

    const auto rep = origin_exclusion_report(K, psi);
    r.check(rep.origin_in_hull == !outside, "origin report differs from the hull test" + at(i));
    if (rep.k_sharp_witness) r.check(in_K_sharp(K, psi, *rep.k_sharp_witness), "report witness not in K#" + at(i));
    if (rep.cor_aplus_witness) {
      const auto c = classify_augmented(K, psi, *rep.cor_aplus_witness);
      r.check(c.a_sharp == Verdict::Yes && rep.cor_aplus_witness->alpha.sign() > 0, "report pair not in a#" + at(i));
    }
    r.check(rep.k_sharp_witness.has_value() == outside && rep.cor_aplus_witness.has_value() == outside,
            "report witnesses differ from the hull test" + at(i));
  }
  r.check(excluded > 0 && pointed_but_included > 0, "chain never saw both a pointed cone with 0 in S_K and one without");
  return r;
}

// ---------------------------------------------------------------------------
// Interior of the dual cone equals K#.

inline SuiteResult dual_interior_suite(std::uint64_t seed, long cones, long functionals) {
  SuiteResult r("interior of K+ equals K#");
  Rng rng(seed);
  long agree_yes = 0;
  for (long i = 0; i < cones; ++i, ++r.instances) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const auto psi = random_norm(rng, n);
    const auto K = random_mixed_cone(rng, n, i);
    const auto dual = dual_cone(K);
    for (long j = 0; j < functionals; ++j) {
      Functional x = random_functional(rng, n);
      if (j % 2 && !dual.is_zero()) {
        Vector d(n);
        for (const auto& g : dual.generators()) d = d + g * Scalar(rng.uniform(0, 3));
        x = to_functional(d) + (j % 4 == 1 ? random_functional(rng, n, 1) : Functional(n));
        if (x.is_zero()) continue;
      }
      const bool sharp = in_K_sharp(K, psi, x);
      const bool interior = dual.interior_contains(to_point(x));
      agree_yes += sharp && interior;
      r.check(sharp == interior, "K# and int K+ disagree at " + x.str() + at(i));
    }
  }
  r.check(agree_yes > 0, "no functional landed in K#");
  return r;
}

// ---------------------------------------------------------------------------
// psi_max of the Gerstewitz functional of the orthant is the l_inf norm.

inline SuiteResult orthant_gauge_suite(std::uint64_t seed, long points) {
  SuiteResult r("psi_max of the orthant gauge");
  Rng rng(seed);
  for (std::size_t n = 2; n <= 4; ++n) {
    ++r.instances;
    std::vector<Functional> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(Functional::unit(n, i));
    const auto psi = gerstewitz_from_solid_cone(e, n);
    const auto pm = psi_max(psi);
    const auto linf = linf_norm(n);
    for (long s = 0; s * 3 < points + 2; ++s) {
      const auto y = random_rational_point(rng, n);
      Scalar top = y[0], big = y[0].abs();
      for (std::size_t i = 1; i < n; ++i) {
        top = max(top, y[i]);
        big = max(big, y[i].abs());
      }
      r.check(psi(y) == top, "psi differs from max_i y_i at " + y.str());
      r.check(pm(y) == big && linf(y) == big, "psi_max differs from l_inf at " + y.str());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Strict separation round trip.

inline SuiteResult round_trip_suite(std::uint64_t seed, long count) {
  SuiteResult r("strict separation round trip");
  Rng rng(seed);
  long certified = 0;
  for (long i = 0; i < count; ++i, ++r.instances) {
    RandomInstanceSpec spec;
    spec.n = 2 + static_cast<std::size_t>(i % 3);
    spec.pieces = 1 + static_cast<std::size_t>(rng.uniform(0, 2));
    spec.generators = std::min<std::size_t>(8, spec.n + static_cast<std::size_t>(rng.uniform(0, 3)));
    const auto psi = random_norm(rng, spec.n);
    const auto pr = random_problem(rng, spec, psi);
    const auto s_a0 = base_polytope(pr.A, psi, true).vertices;
    const auto s_mk = base_polytope(pr.K.negated(), psi, false).vertices;
    const bool disjoint = !hulls_meet(s_a0, s_mk);
    std::optional<SeparationCertificate> cert;
    try {
      cert = separate_strict(pr);
    } catch (const HypothesisFailure&) {
    }
    r.check(disjoint == cert.has_value(), "certificate existence differs from hull disjointness" + at(i));
    if (!cert) continue;
    ++certified;
    const auto v = verify_certificate(pr, *cert);
    r.check(v.ok && cert->achieved == SeparationClass::Strict, "certificate failed re-verification" + at(i));
    r.check(cert->aug.alpha.sign() > 0 && cert->aug_class.a_sharp == Verdict::Yes, "certificate not a#" + at(i));
    r.check(!hulls_meet(s_a0, s_mk), "certified instance with intersecting hulls" + at(i));
    for (int s = 0; s < 5; ++s) {
      const auto a = random_point_in(rng, pr.A.pieces()[static_cast<std::size_t>(rng.uniform(
                                          0, static_cast<long>(pr.A.pieces().size()) - 1))]);
      const auto k = -random_point_in(rng, pr.K.pieces()[static_cast<std::size_t>(rng.uniform(
                                           0, static_cast<long>(pr.K.pieces().size()) - 1))]);
      if (!a.is_zero()) r.check(phi_eval(cert->aug, psi, a).sign() > 0, "phi <= 0 on A minus {0}" + at(i));
      if (!k.is_zero()) r.check(phi_eval(cert->aug, psi, k).sign() < 0, "phi >= 0 on -K minus {0}" + at(i));
    }
  }
  r.check(certified >= count / 10, "too few certified instances: " + std::to_string(certified));
  return r;
}

}  // namespace suites
