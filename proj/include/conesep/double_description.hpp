#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conesep/errors.hpp"
#include "conesep/scalar.hpp"
#include "conesep/vector.hpp"

namespace conesep {

inline constexpr std::size_t kMaxDimension = 8;
inline constexpr std::size_t kMaxGeneratorsPerPiece = 16;

/// Generators of {x : c(x) >= 0 for all constraints c}: extreme rays of the
/// pointed part plus a basis of the lineality space.
struct ConeGenerators {
  std::vector<Vector> rays;
  std::vector<Vector> lineality;

  bool is_zero_cone() const { return rays.empty() && lineality.empty(); }

  /// Rays followed by +l and -l for each lineality basis vector.
  std::vector<Vector> all() const {
    std::vector<Vector> out = rays;
    for (const auto& l : lineality) {
      out.push_back(l);
      out.push_back(-l);
    }
    return out;
  }
};

namespace detail {

class ZeroSet {
 public:
  explicit ZeroSet(std::size_t bits = 0) : w_((bits + 63) / 64, 0) {}
  void grow(std::size_t bits) { w_.resize((bits + 63) / 64, 0); }
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  ZeroSet operator&(const ZeroSet& o) const {
    ZeroSet r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  bool subset_of(const ZeroSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct DDRay {
  Vector v;
  ZeroSet zeros;
};

}  // namespace detail

/// Incremental double description (Motzkin) with the combinatorial adjacency test.
template <class Tag>
ConeGenerators dd_cone(const std::vector<BasicVector<Tag>>& constraints, std::size_t dim) {
  require_dim(constraints, dim, "constraint");
  std::vector<Vector> lin;
  for (std::size_t i = 0; i < dim; ++i) lin.push_back(Vector::unit(dim, i));
  std::vector<detail::DDRay> rays;
  const std::size_t m = constraints.size();

  for (std::size_t k = 0; k < m; ++k) {
    const Vector c = constraints[k].template as<PointTag>();
    if (c.is_zero()) {
      for (auto& r : rays) r.zeros.set(k);
      continue;
    }
    std::size_t li = lin.size();
    Scalar cl;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      cl = c.dot(lin[i]);
      if (!cl.is_zero()) { li = i; break; }
    }
    if (li != lin.size()) {
      Vector l0 = lin[li];
      if (cl.sign() < 0) { l0 = -l0; cl = -cl; }
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(li));
      for (auto& l : lin) {
        Scalar t = c.dot(l);
        if (!t.is_zero()) l = (l - l0 * (t / cl)).primitive();
      }
      for (auto& r : rays) {
        Scalar t = c.dot(r.v);
        if (!t.is_zero()) r.v = (r.v - l0 * (t / cl)).primitive();
        r.zeros.set(k);
      }
      detail::ZeroSet z(m);
      for (std::size_t j = 0; j < k; ++j) z.set(j);
      rays.push_back({l0.primitive(), z});
      continue;
    }

    std::vector<Scalar> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = c.dot(rays[i].v);
      if (val[i].sign() > 0) pos.push_back(i);
      else if (val[i].sign() < 0) neg.push_back(i);
    }
    std::vector<detail::DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i].sign() < 0) continue;
      detail::DDRay r = rays[i];
      if (val[i].is_zero()) r.zeros.set(k);
      next.push_back(std::move(r));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        detail::ZeroSet common = rays[p].zeros & rays[q].zeros;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Vector w = (rays[q].v * val[p] - rays[p].v * val[q]).primitive();
        common.set(k);
        next.push_back({std::move(w), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(r.v.primitive());
  for (auto& l : lin) out.lineality.push_back(l.primitive());
  sort_unique(out.rays);
  return out;
}

/// Irredundant facet functionals f (cone = {f >= 0}) of cone(generators).
/// Equations appear as a +/- pair. The whole space yields an empty list.
inline std::vector<Functional> double_description(const std::vector<Vector>& generators, std::size_t dim) {
  auto dual = dd_cone(generators, dim);
  std::vector<Functional> facets;
  for (const auto& v : dual.all()) facets.push_back(to_functional(v));
  sort_unique(facets);
  return facets;
}

/// Generators (rays and +/- lineality basis) of the cone {f >= 0 for all facets}.
inline std::vector<Vector> cone_from_facets(const std::vector<Functional>& facets, std::size_t dim) {
  auto g = dd_cone(facets, dim).all();
  sort_unique(g);
  return g;
}

/// A bounded polyhedron {x : a(x) <= b}.
struct HalfSpace {
  Functional a;
  Scalar b;
};

/// Vertices of a bounded polyhedron; empty when infeasible.
/// Throws UnboundedPolyhedron if a recession direction exists.
inline std::vector<Vector> vertex_enumeration(const std::vector<HalfSpace>& hs, std::size_t dim) {
  std::vector<Functional> homog;
  for (const auto& h : hs) {
    if (h.a.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "half-space has wrong dimension");
    Functional f(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) f[i] = -h.a[i];
    f[dim] = h.b;
    homog.push_back(std::move(f));
  }
  homog.push_back(Functional::unit(dim + 1, dim));
  auto gens = dd_cone(homog, dim + 1);
  std::vector<Vector> verts;
  bool recession = !gens.lineality.empty();
  for (const auto& r : gens.rays) {
    if (r[dim].is_zero()) {
      recession = true;
      continue;
    }
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = r[i] / r[dim];
    verts.push_back(std::move(v));
  }
  if (verts.empty()) return verts;
  if (recession) throw Error(ErrorCode::UnboundedPolyhedron, "polyhedron has a recession direction");
  sort_unique(verts);
  return verts;
}

}  // namespace conesep
