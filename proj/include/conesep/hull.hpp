#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "conesep/errors.hpp"
#include "conesep/lp.hpp"
#include "conesep/vector.hpp"

namespace conesep {

/// q = sum(weights_i p_i) with weights >= 0 summing to 1.
struct HullMember {
  std::vector<Scalar> weights;
};

/// f(q) < c <= f(p_i) for every point.
struct HullNonMember {
  Functional f;
  Scalar c;
};

using HullVerdict = std::variant<HullMember, HullNonMember>;

/// min over P of f >= beta, max over Q of f <= gamma.
struct SeparatingHyperplane {
  Functional f;
  Scalar beta;
  Scalar gamma;
  bool strict() const { return beta > gamma; }
};

/// A point lying in both hulls together with convex weights for each.
struct IntersectionWitness {
  Vector point;
  std::vector<Scalar> weights_p;
  std::vector<Scalar> weights_q;
};

using SeparationOutcome = std::variant<SeparatingHyperplane, IntersectionWitness>;

enum class SeparationMode { Strict, Weak };

namespace detail {

inline std::size_t common_dim(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::size_t d = !a.empty() ? a.front().dim() : (!b.empty() ? b.front().dim() : 0);
  require_dim(a, d, "point");
  require_dim(b, d, "point");
  return d;
}

inline Functional embed(const Functional& f, std::size_t total, std::size_t offset = 0) {
  Functional g(total);
  for (std::size_t i = 0; i < f.dim(); ++i) g[offset + i] = f[i];
  return g;
}

inline void add_box(LinearProgram& lp, std::size_t dim, std::size_t total) {
  for (std::size_t j = 0; j < dim; ++j) {
    lp.constraints.push_back({Functional::unit(total, j), Relation::LessEqual, 1});
    lp.constraints.push_back({Functional::unit(total, j), Relation::GreaterEqual, -1});
  }
}

inline Functional head(const Vector& x, std::size_t dim) {
  Functional f(dim);
  for (std::size_t i = 0; i < dim; ++i) f[i] = x[i];
  return f;
}

inline Scalar min_value(const Functional& f, const std::vector<Vector>& pts) {
  Scalar m = f(pts.front());
  for (const auto& p : pts) m = min(m, f(p));
  return m;
}

inline Scalar max_value(const Functional& f, const std::vector<Vector>& pts) {
  Scalar m = f(pts.front());
  for (const auto& p : pts) m = max(m, f(p));
  return m;
}

}  // namespace detail

/// Decides q in conv(points) with the weight LP. A Farkas certificate of its
/// infeasibility is read as a separating functional.
inline HullVerdict point_in_hull(const std::vector<Vector>& points, const Vector& q) {
  if (points.empty()) throw Error(ErrorCode::DegenerateInput, "empty point set");
  const std::size_t d = q.dim();
  require_dim(points, d, "point");
  const std::size_t k = points.size();
  LinearProgram lp;
  lp.objective = Functional(k);
  lp.nonnegative.assign(k, true);
  for (std::size_t i = 0; i < d; ++i) {
    Functional row(k);
    for (std::size_t a = 0; a < k; ++a) row[a] = points[a][i];
    lp.constraints.push_back({row, Relation::Equal, q[i]});
  }
  Functional ones(k);
  for (std::size_t a = 0; a < k; ++a) ones[a] = 1;
  lp.constraints.push_back({ones, Relation::Equal, 1});
  auto out = solve_lp(lp);
  if (const auto* opt = std::get_if<LPOptimal>(&out)) {
    HullMember m;
    m.weights = opt->point.coords();
    return m;
  }
  // y.A >= 0 on every weight column and y.b = -1: f(p) >= -y_d > f(q).
  const auto& far = std::get<LPInfeasible>(out);
  Functional f(d);
  for (std::size_t i = 0; i < d; ++i) f[i] = far.multipliers[i];
  HullNonMember nm{f, -far.multipliers[d]};
  if (!(f(q) < nm.c)) throw Error(ErrorCode::InternalError, "Farkas functional does not separate the point");
  for (const auto& p : points)
    if (f(p) < nm.c) throw Error(ErrorCode::InternalError, "Farkas functional does not separate the point");
  return nm;
}

/// Finds a point in conv(P) and conv(Q). When a relint flag is set, every weight on
/// that side must be positive, which places the point in the relative interior.
/// Returns nothing when no such point exists.
inline std::optional<IntersectionWitness> hull_intersection(const std::vector<Vector>& P, const std::vector<Vector>& Q,
                                                            bool p_relint = false, bool q_relint = false) {
  const std::size_t d = detail::common_dim(P, Q);
  const std::size_t k = P.size(), l = Q.size();
  const std::size_t total = k + l + 1;  // lambda', mu', t
  const std::size_t t = k + l;
  // A relint side has weights t + lambda' with lambda' >= 0; t >= 0 is maximized.
  const Scalar tp = p_relint ? 1 : 0, tq = q_relint ? 1 : 0;
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = Functional::unit(total, t);
  lp.nonnegative.assign(total, true);
  for (std::size_t i = 0; i < d; ++i) {
    Functional row(total);
    Scalar shift = 0;
    for (std::size_t a = 0; a < k; ++a) {
      row[a] = P[a][i];
      shift += P[a][i] * tp;
    }
    for (std::size_t b = 0; b < l; ++b) {
      row[k + b] = -Q[b][i];
      shift -= Q[b][i] * tq;
    }
    row[t] = shift;
    lp.constraints.push_back({row, Relation::Equal, 0});
  }
  Functional sp(total), sq(total);
  for (std::size_t a = 0; a < k; ++a) sp[a] = 1;
  for (std::size_t b = 0; b < l; ++b) sq[k + b] = 1;
  sp[t] = Scalar(static_cast<long>(k)) * tp;
  sq[t] = Scalar(static_cast<long>(l)) * tq;
  lp.constraints.push_back({sp, Relation::Equal, 1});
  lp.constraints.push_back({sq, Relation::Equal, 1});
  lp.constraints.push_back({Functional::unit(total, t), Relation::LessEqual, 1});
  auto out = solve_lp(lp);
  const auto* opt = std::get_if<LPOptimal>(&out);
  if (!opt) return std::nullopt;
  if ((p_relint || q_relint) && opt->value.sign() <= 0) return std::nullopt;
  const Scalar& tv = opt->point[t];
  IntersectionWitness w;
  w.point = Vector(d);
  for (std::size_t a = 0; a < k; ++a) {
    w.weights_p.push_back(opt->point[a] + tv * tp);
    w.point += P[a] * w.weights_p.back();
  }
  for (std::size_t b = 0; b < l; ++b) w.weights_q.push_back(opt->point[k + b] + tv * tq);
  return w;
}

namespace detail {

/// LP over (f, beta, gamma) with f(p) >= beta, f(q) <= gamma and |f_j| <= 1.
inline LinearProgram separation_lp(const std::vector<Vector>& P, const std::vector<Vector>& Q, std::size_t d) {
  const std::size_t total = d + 2;
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = Functional(total);
  for (const auto& p : P) {
    Functional row = embed(to_functional(p), total);
    row[d] = -1;
    lp.constraints.push_back({row, Relation::GreaterEqual, 0});
  }
  for (const auto& q : Q) {
    Functional row = embed(to_functional(q), total);
    row[d + 1] = -1;
    lp.constraints.push_back({row, Relation::LessEqual, 0});
  }
  add_box(lp, d, total);
  return lp;
}

inline SeparatingHyperplane hyperplane_from(const Functional& f, const std::vector<Vector>& P,
                                            const std::vector<Vector>& Q) {
  return {f, min_value(f, P), max_value(f, Q)};
}

}  // namespace detail

/// Strict mode maximizes beta - gamma subject to |f_j| <= 1 and returns a
/// hyperplane only when the gap is positive. Weak mode returns any nonzero f with
/// min_P f >= max_Q f, preferring a gap, then a proper separation.
inline SeparationOutcome separate_polytopes(const std::vector<Vector>& P, const std::vector<Vector>& Q,
                                            SeparationMode mode) {
  if (P.empty() || Q.empty()) throw Error(ErrorCode::DegenerateInput, "empty point set");
  const std::size_t d = detail::common_dim(P, Q);
  const std::size_t total = d + 2;

  LinearProgram gap = detail::separation_lp(P, Q, d);
  gap.objective[d] = 1;
  gap.objective[d + 1] = -1;
  const LPOptimal g = solve_optimal(gap);
  if (g.value.sign() > 0) return detail::hyperplane_from(detail::head(g.point, d), P, Q);

  auto witness = [&]() -> SeparationOutcome {
    const std::size_t k = P.size();
    IntersectionWitness w;
    w.point = Vector(d);
    for (std::size_t a = 0; a < k; ++a) {
      Scalar l = -g.duals[a];
      w.point += P[a] * l;
      w.weights_p.push_back(std::move(l));
    }
    Vector other(d);
    for (std::size_t b = 0; b < Q.size(); ++b) {
      Scalar u = g.duals[k + b];
      other += Q[b] * u;
      w.weights_q.push_back(std::move(u));
    }
    if (other != w.point) throw Error(ErrorCode::InternalError, "intersection weights disagree");
    return w;
  };
  if (mode == SeparationMode::Strict) return witness();

  // Proper separation: maximize the total slack of all points.
  LinearProgram proper = detail::separation_lp(P, Q, d);
  proper.constraints.push_back({Functional::unit(total, d + 1) - Functional::unit(total, d), Relation::Equal, 0});
  for (const auto& p : P) proper.objective += detail::embed(to_functional(p), total);
  for (const auto& q : Q) proper.objective -= detail::embed(to_functional(q), total);
  proper.objective[d] = Scalar(static_cast<long>(Q.size())) - Scalar(static_cast<long>(P.size()));
  const LPOptimal pr = solve_optimal(proper);
  if (pr.value.sign() > 0) return detail::hyperplane_from(detail::head(pr.point, d), P, Q);

  // Both sets lie in every separating hyperplane: look for any nonzero f.
  for (std::size_t j = 0; j < d; ++j) {
    for (int s : {1, -1}) {
      LinearProgram lp = detail::separation_lp(P, Q, d);
      lp.constraints.push_back({Functional::unit(total, d + 1) - Functional::unit(total, d), Relation::Equal, 0});
      lp.objective = Functional::unit(total, j) * Scalar(s);
      const LPOptimal o = solve_optimal(lp);
      if (o.value.sign() > 0) return detail::hyperplane_from(detail::head(o.point, d), P, Q);
    }
  }
  return witness();
}

}  // namespace conesep
