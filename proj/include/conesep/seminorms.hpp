#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "conesep/double_description.hpp"
#include "conesep/errors.hpp"
#include "conesep/hull.hpp"
#include "conesep/linalg.hpp"
#include "conesep/vector.hpp"

namespace conesep {

/// psi(x) = max_j c_j(x) over a nonempty finite generator list.
class SublinearFunction {
 public:
  SublinearFunction(std::vector<Functional> generators, std::size_t dim) : dim_(dim), gens_(std::move(generators)) {
    if (gens_.empty()) throw Error(ErrorCode::DegenerateInput, "sublinear function needs a generator");
    require_dim(gens_, dim_, "generator");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Functional>& generators() const { return gens_; }

  Scalar operator()(const Vector& x) const { return gens_[argmax(x)](x); }

  /// Index of the first generator attaining the maximum.
  std::size_t argmax(const Vector& x) const {
    if (x.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
    std::size_t best = 0;
    Scalar v = gens_[0](x);
    for (std::size_t j = 1; j < gens_.size(); ++j) {
      Scalar w = gens_[j](x);
      if (w > v) {
        v = std::move(w);
        best = j;
      }
    }
    return best;
  }

 protected:
  std::size_t dim_;
  std::vector<Functional> gens_;
};

enum class SeminormKind { Linf, L1, Abs, Minkowski, PsiMax, Polygon, Custom };

inline const char* seminorm_kind_name(SeminormKind k) {
  switch (k) {
    case SeminormKind::Linf: return "linf";
    case SeminormKind::L1: return "l1";
    case SeminormKind::Abs: return "abs";
    case SeminormKind::Minkowski: return "minkowski";
    case SeminormKind::PsiMax: return "psi_max";
    case SeminormKind::Polygon: return "polygon";
    case SeminormKind::Custom: return "custom";
  }
  return "custom";
}

/// Sublinear function whose generator set is closed under negation, hence a seminorm.
class PolyhedralSeminorm : public SublinearFunction {
 public:
  PolyhedralSeminorm(std::vector<Functional> generators, std::size_t dim, SeminormKind kind = SeminormKind::Custom)
      : SublinearFunction(canonical(std::move(generators)), dim), kind_(kind) {
    for (const auto& c : gens_) {
      if (!std::binary_search(gens_.begin(), gens_.end(), -c))
        throw Error(ErrorCode::NotSymmetric, "generator set is not closed under negation");
    }
  }

  SeminormKind kind() const { return kind_; }
  /// Construction parameters kept for serialization: polygon order, or the
  /// defining vectors for abs, minkowski and psi_max.
  long order() const { return order_; }
  const std::vector<Vector>& source() const { return source_; }
  PolyhedralSeminorm& with_source(long order, std::vector<Vector> source) {
    order_ = order;
    source_ = std::move(source);
    return *this;
  }

  /// Basis of {x : psi(x) = 0}.
  std::vector<Vector> kernel_basis() const { return nullspace_basis(gens_, dim_); }
  bool is_norm() const { return kernel_basis().empty(); }

 private:
  static std::vector<Functional> canonical(std::vector<Functional> g) {
    sort_unique(g);
    return g;
  }

  SeminormKind kind_;
  long order_ = 0;
  std::vector<Vector> source_;
};

inline bool is_norm(const PolyhedralSeminorm& psi) { return psi.is_norm(); }

namespace detail {

/// Drops generators lying in the convex hull of the remaining ones. The maximum
/// of the linear functionals is unchanged.
inline std::vector<Functional> prune_generators(std::vector<Functional> g) {
  sort_unique(g);
  for (std::size_t i = 0; i < g.size();) {
    if (g.size() == 1) break;
    std::vector<Vector> others;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) others.push_back(to_point(g[j]));
    if (std::holds_alternative<HullMember>(point_in_hull(others, to_point(g[i])))) {
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return g;
}

}  // namespace detail

inline PolyhedralSeminorm linf_norm(std::size_t dim) {
  std::vector<Functional> g;
  for (std::size_t i = 0; i < dim; ++i) {
    g.push_back(Functional::unit(dim, i));
    g.push_back(-Functional::unit(dim, i));
  }
  return PolyhedralSeminorm(std::move(g), dim, SeminormKind::Linf);
}

inline PolyhedralSeminorm l1_norm(std::size_t dim) {
  std::vector<Functional> g;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    Functional f(dim);
    for (std::size_t i = 0; i < dim; ++i) f[i] = (mask >> i) & 1 ? -1 : 1;
    g.push_back(std::move(f));
  }
  return PolyhedralSeminorm(std::move(g), dim, SeminormKind::L1);
}

/// psi(x) = |x*(x)|.
inline PolyhedralSeminorm abs_functional_seminorm(const Functional& x_star) {
  if (x_star.is_zero()) throw Error(ErrorCode::ZeroFunctional, "|x*| needs a nonzero functional");
  PolyhedralSeminorm psi({x_star, -x_star}, x_star.dim(), SeminormKind::Abs);
  psi.with_source(0, {to_point(x_star)});
  return psi;
}

/// Gauge of the symmetric polytope conv(ball_vertices); generators are the polar vertices.
inline PolyhedralSeminorm minkowski_norm_from_ball(const std::vector<Vector>& ball_vertices) {
  if (ball_vertices.empty()) throw Error(ErrorCode::DegenerateInput, "empty ball");
  const std::size_t d = ball_vertices.front().dim();
  require_dim(ball_vertices, d, "ball vertex");
  for (const auto& v : ball_vertices) {
    if (std::holds_alternative<HullNonMember>(point_in_hull(ball_vertices, -v)))
      throw Error(ErrorCode::NotSymmetric, "ball is not centrally symmetric");
  }
  if (affine_dimension(ball_vertices) != d) throw Error(ErrorCode::OriginNotInterior, "ball is not full-dimensional");
  std::vector<Vector> lifted;
  for (const auto& v : ball_vertices) {
    Vector w(d + 1);
    for (std::size_t i = 0; i < d; ++i) w[i] = v[i];
    w[d] = 1;
    lifted.push_back(std::move(w));
  }
  std::vector<Functional> polar;
  for (const auto& h : double_description(lifted, d + 1)) {
    if (h[d].sign() <= 0) throw Error(ErrorCode::OriginNotInterior, "origin lies on the ball boundary");
    Functional a(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = -h[i] / h[d];
    polar.push_back(std::move(a));
  }
  PolyhedralSeminorm psi(std::move(polar), d, SeminormKind::Minkowski);
  psi.with_source(0, ball_vertices);
  return psi;
}

/// psi_max(x) = max(psi(x), psi(-x)).
inline PolyhedralSeminorm psi_max(const SublinearFunction& psi) {
  std::vector<Functional> g;
  for (const auto& c : psi.generators()) {
    g.push_back(c);
    g.push_back(-c);
  }
  PolyhedralSeminorm out(std::move(g), psi.dim(), SeminormKind::PsiMax);
  std::vector<Vector> src;
  for (const auto& c : psi.generators()) src.push_back(to_point(c));
  out.with_source(0, std::move(src));
  return out;
}

/// psi(x) + psi(-x) as the maximum of the pairwise differences c_i - c_j.
inline PolyhedralSeminorm psi_sigma(const SublinearFunction& psi) {
  std::vector<Functional> g;
  for (const auto& a : psi.generators())
    for (const auto& b : psi.generators()) g.push_back(a - b);
  return PolyhedralSeminorm(detail::prune_generators(std::move(g)), psi.dim(), SeminormKind::Custom);
}

/// For -K = {x : a_i(x) <= 0}, returns psi = max_i a_i, so that {psi <= 0} = -K
/// and {psi < 0} = int(-K).
inline SublinearFunction gerstewitz_from_solid_cone(const std::vector<Functional>& minus_k_facets, std::size_t dim) {
  require_dim(minus_k_facets, dim, "facet");
  const std::size_t total = dim + 1;
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = Functional::unit(total, dim);
  bool any = false;
  for (const auto& a : minus_k_facets) {
    if (a.is_zero()) continue;
    any = true;
    Functional row = detail::embed(a, total);
    row[dim] = 1;
    lp.constraints.push_back({row, Relation::LessEqual, 0});
  }
  lp.constraints.push_back({Functional::unit(total, dim), Relation::LessEqual, 1});
  detail::add_box(lp, dim, total);
  if (!any || solve_optimal(lp).value.sign() <= 0) throw Error(ErrorCode::NotSolid, "cone has empty interior");
  return SublinearFunction(minus_k_facets, dim);
}

/// Pointwise maximum of a finite family; redundant generators are dropped.
inline PolyhedralSeminorm sup_family(const std::vector<PolyhedralSeminorm>& family) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "sup of an empty family");
  const std::size_t d = family.front().dim();
  std::vector<Functional> g;
  for (const auto& psi : family) {
    if (psi.dim() != d) throw Error(ErrorCode::DimensionMismatch, "family members differ in dimension");
    g.insert(g.end(), psi.generators().begin(), psi.generators().end());
  }
  return PolyhedralSeminorm(detail::prune_generators(std::move(g)), d, SeminormKind::Custom);
}

namespace detail {

/// Rational point on the unit circle near angle phi, phi in [0, pi/2].
inline Vector circle_point(double phi, long denom) {
  double t = std::tan(phi / 2);
  Scalar tr(static_cast<long>(std::lround(t * static_cast<double>(denom))), denom);
  Scalar one(1);
  Scalar s = tr * tr;
  return Vector{(one - s) / (one + s), Scalar(2) * tr / (one + s)};
}

}  // namespace detail

/// Planar norm whose unit ball is a 2m-gon inscribed in the unit circle: rational
/// Pythagorean points near angles k*pi/m, k = 0..m-1, and their negatives.
/// Order 2 is the l1 norm.
inline PolyhedralSeminorm regular_polygon_norm(long m) {
  if (m < 2) throw Error(ErrorCode::BadOrder, "polygon order must be at least 2");
  const double pi = std::numbers::pi;
  const long denom = 8 * m;
  std::vector<Vector> pts;
  for (long k = 0; k < m; ++k) {
    // Reduce to [0, pi/2] by mirroring in the y axis, then (for even m) in the diagonal.
    long num = k, den = m;  // angle = num/den * pi
    bool mirror_x = 2 * num > den;
    if (mirror_x) num = den - num;
    bool swap = m % 2 == 0 && 4 * num > den;
    Vector p = swap ? detail::circle_point(pi * (0.5 - static_cast<double>(num) / static_cast<double>(den)), denom)
                    : detail::circle_point(pi * static_cast<double>(num) / static_cast<double>(den), denom);
    if (swap) p = Vector{p[1], p[0]};
    if (mirror_x) p[0] = -p[0];
    pts.push_back(p);
    pts.push_back(-p);
  }
  sort_unique(pts);
  PolyhedralSeminorm psi = minkowski_norm_from_ball(pts);
  PolyhedralSeminorm out(psi.generators(), 2, SeminormKind::Polygon);
  out.with_source(m, {});
  return out;
}

}  // namespace conesep
