#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conesep/double_description.hpp"
#include "conesep/errors.hpp"
#include "conesep/hull.hpp"
#include "conesep/linalg.hpp"
#include "conesep/lp.hpp"
#include "conesep/seminorms.hpp"
#include "conesep/vector.hpp"

namespace conesep {

/// Convex polyhedral cone with both representations. Generators are the extreme
/// rays plus +/- a basis of the lineality space; facets are irredundant, with
/// equations appearing as +/- pairs.
class ConvexConePiece {
 public:
  ConvexConePiece() = default;

  /// User-facing constructor: enforces the dimension and generator caps.
  static ConvexConePiece from_generators(const std::vector<Vector>& gens, std::size_t dim) {
    if (dim > kMaxDimension) throw Error(ErrorCode::DimensionTooLarge, "dimension exceeds 8");
    if (gens.size() > kMaxGeneratorsPerPiece) throw Error(ErrorCode::DimensionTooLarge, "more than 16 generators");
    return span(gens, dim);
  }

  /// R_+ hull of arbitrary generators, without caps.
  static ConvexConePiece span(const std::vector<Vector>& gens, std::size_t dim) {
    require_dim(gens, dim, "generator");
    std::vector<Vector> nz;
    for (const auto& g : gens)
      if (!g.is_zero()) nz.push_back(g.primitive());
    ConvexConePiece p;
    p.dim_ = dim;
    p.facets_ = double_description(nz, dim);
    p.finish_from_facets();
    return p;
  }

  static ConvexConePiece from_facets(const std::vector<Functional>& facets, std::size_t dim) {
    require_dim(facets, dim, "facet");
    ConvexConePiece p;
    p.dim_ = dim;
    auto gens = cone_from_facets(facets, dim);
    p.facets_ = double_description(gens, dim);
    p.finish_from_facets();
    return p;
  }

  static ConvexConePiece whole_space(std::size_t dim) { return from_facets({}, dim); }
  static ConvexConePiece zero(std::size_t dim) { return span({}, dim); }

  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& generators() const { return gens_; }
  const std::vector<Functional>& facets() const { return facets_; }
  const std::vector<Vector>& lineality_basis() const { return lin_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_solid() const { return rank(gens_, dim_) == dim_; }
  bool is_pointed() const { return lin_.empty(); }
  std::size_t cone_dim() const { return rank(gens_, dim_); }

  bool contains(const Vector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Functional& f) { return f(x).sign() >= 0; });
  }
  /// Interior membership: all facets strictly positive (impossible for non-solid pieces).
  bool interior_contains(const Vector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Functional& f) { return f(x).sign() > 0; });
  }

  ConvexConePiece negated() const {
    ConvexConePiece p;
    p.dim_ = dim_;
    for (const auto& g : gens_) p.gens_.push_back(-g);
    for (const auto& f : facets_) p.facets_.push_back(-f);
    for (const auto& l : lin_) p.lin_.push_back(-l);
    sort_unique(p.gens_);
    sort_unique(p.facets_);
    return p;
  }

  /// Intersection by facet-system concatenation.
  ConvexConePiece intersect(const ConvexConePiece& o) const {
    std::vector<Functional> f = facets_;
    f.insert(f.end(), o.facets_.begin(), o.facets_.end());
    return from_facets(f, dim_);
  }

  /// Cone of the generators on which x* vanishes (a face when x* >= 0 on the cone).
  ConvexConePiece face(const Functional& x_star) const {
    std::vector<Vector> g;
    for (const auto& v : gens_)
      if (x_star(v).is_zero()) g.push_back(v);
    return span(g, dim_);
  }

  friend bool operator==(const ConvexConePiece& a, const ConvexConePiece& b) {
    return a.dim_ == b.dim_ && a.facets_ == b.facets_;
  }

 private:
  void finish_from_facets() {
    auto dd = dd_cone(facets_, dim_);
    lin_ = dd.lineality;
    gens_ = dd.all();
    sort_unique(gens_);
  }

  std::size_t dim_ = 0;
  std::vector<Vector> gens_;
  std::vector<Functional> facets_;
  std::vector<Vector> lin_;
};

/// A possibly nonconvex cone: finite union of closed convex polyhedral pieces.
class ConeUnion {
 public:
  ConeUnion() = default;
  ConeUnion(std::vector<ConvexConePiece> pieces, std::size_t dim, std::string name = {})
      : pieces_(std::move(pieces)), dim_(dim), name_(std::move(name)) {
    if (pieces_.empty()) pieces_.push_back(ConvexConePiece::zero(dim_));
    for (const auto& p : pieces_)
      if (p.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "piece dimension differs");
  }

  static ConeUnion from_generators(const std::vector<std::vector<Vector>>& pieces, std::size_t dim,
                                   std::string name = {}) {
    std::vector<ConvexConePiece> ps;
    for (const auto& g : pieces) ps.push_back(ConvexConePiece::from_generators(g, dim));
    return ConeUnion(std::move(ps), dim, std::move(name));
  }

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<ConvexConePiece>& pieces() const { return pieces_; }
  bool is_convex() const { return pieces_.size() == 1; }

  bool is_zero() const {
    return std::all_of(pieces_.begin(), pieces_.end(), [](const auto& p) { return p.is_zero(); });
  }
  /// A finite union of closed sets has interior iff some member does.
  bool is_solid() const {
    return std::any_of(pieces_.begin(), pieces_.end(), [](const auto& p) { return p.is_solid(); });
  }
  bool contains(const Vector& x) const {
    return std::any_of(pieces_.begin(), pieces_.end(), [&](const auto& p) { return p.contains(x); });
  }

  std::vector<Vector> all_generators() const {
    std::vector<Vector> g;
    for (const auto& p : pieces_) g.insert(g.end(), p.generators().begin(), p.generators().end());
    sort_unique(g);
    return g;
  }

  ConeUnion negated() const {
    std::vector<ConvexConePiece> ps;
    for (const auto& p : pieces_) ps.push_back(p.negated());
    return ConeUnion(std::move(ps), dim_, name_.empty() ? name_ : "-" + name_);
  }

  /// Closed convex hull cone(K).
  ConvexConePiece hull() const { return ConvexConePiece::span(all_generators(), dim_); }

 private:
  std::vector<ConvexConePiece> pieces_;
  std::size_t dim_ = 0;
  std::string name_;
};

namespace detail {

/// Is there y in P with f(y) > 0 for every strict row and f(y) >= 0 for every
/// nonstrict row? With `relint`, y must also lie in the relative interior of P.
inline bool cone_point_exists(const ConvexConePiece& P, const std::vector<Functional>& strict,
                              const std::vector<Functional>& nonstrict, bool relint) {
  const auto& g = P.generators();
  if (g.empty()) return strict.empty() && !relint;
  const std::size_t k = g.size();
  const std::size_t total = k + 1;
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = Functional::unit(total, k);
  lp.nonnegative.assign(total, true);
  lp.nonnegative[k] = false;
  auto image = [&](const Functional& f) {
    Functional row(total);
    for (std::size_t i = 0; i < k; ++i) row[i] = f(g[i]);
    return row;
  };
  for (const auto& f : strict) {
    Functional row = image(f);
    row[k] = -1;
    lp.constraints.push_back({row, Relation::GreaterEqual, 0});
  }
  for (const auto& f : nonstrict) lp.constraints.push_back({image(f), Relation::GreaterEqual, 0});
  if (relint) {
    for (std::size_t i = 0; i < k; ++i) {
      Functional row = Functional::unit(total, i);
      row[k] = -1;
      lp.constraints.push_back({row, Relation::GreaterEqual, 0});
    }
  }
  Functional sum(total);
  for (std::size_t i = 0; i < k; ++i) sum[i] = 1;
  lp.constraints.push_back({sum, Relation::LessEqual, 1});
  lp.constraints.push_back({Functional::unit(total, k), Relation::LessEqual, 1});
  if (strict.empty() && !relint) return true;
  return solve_optimal(lp).value.sign() > 0;
}

/// Emptiness of {x : f(x) >= 0 (nonstrict), f(x) > 0 (strict)} minus the origin.
inline bool region_has_nonzero_point(const std::vector<Functional>& nonstrict, const std::vector<Functional>& strict,
                                     std::size_t dim) {
  if (strict.empty()) return !cone_from_facets(nonstrict, dim).empty();
  const std::size_t total = dim + 1;
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = Functional::unit(total, dim);
  for (const auto& f : nonstrict) lp.constraints.push_back({embed(f, total), Relation::GreaterEqual, 0});
  for (const auto& f : strict) {
    Functional row = embed(f, total);
    row[dim] = -1;
    lp.constraints.push_back({row, Relation::GreaterEqual, 0});
  }
  lp.constraints.push_back({Functional::unit(total, dim), Relation::LessEqual, 1});
  add_box(lp, dim, total);
  return solve_optimal(lp).value.sign() > 0;
}

/// Whether the region (minus the origin) is covered by pieces[i..]. Each piece
/// splits the uncovered remainder into the cells {h_1..h_{m-1} >= 0, h_m < 0}.
inline bool region_covered(std::vector<Functional> nonstrict, std::vector<Functional> strict,
                           const std::vector<ConvexConePiece>& pieces, std::size_t i, std::size_t dim) {
  if (!region_has_nonzero_point(nonstrict, strict, dim)) return true;
  if (i == pieces.size()) return false;
  const auto& h = pieces[i].facets();
  for (std::size_t m = 0; m < h.size(); ++m) {
    std::vector<Functional> ns = nonstrict, st = strict;
    ns.insert(ns.end(), h.begin(), h.begin() + static_cast<std::ptrdiff_t>(m));
    st.push_back(-h[m]);
    if (!region_covered(std::move(ns), std::move(st), pieces, i + 1, dim)) return false;
  }
  return true;
}

}  // namespace detail

/// region is contained in the union.
inline bool covers(const ConeUnion& U, const ConvexConePiece& region) {
  return detail::region_covered(region.facets(), {}, U.pieces(), 0, U.dim());
}

inline bool is_whole_space(const ConeUnion& K) { return covers(K, ConvexConePiece::whole_space(K.dim())); }

/// {0} != K != E.
inline void require_nontrivial(const ConeUnion& K, const char* what) {
  if (K.is_zero()) throw Error(ErrorCode::NontrivialityViolated, std::string(what) + " is the zero cone");
  if (is_whole_space(K)) throw Error(ErrorCode::NontrivialityViolated, std::string(what) + " is the whole space");
}

struct LinealityReport {
  ConeUnion cone;
  bool pointed = true;
  bool subspace = true;
};

/// l(K) = K cap (-K) as the union of the pairwise intersections piece_i cap (-piece_j).
inline LinealityReport lineality(const ConeUnion& K) {
  std::vector<ConvexConePiece> parts;
  for (const auto& a : K.pieces()) {
    for (const auto& b : K.pieces()) {
      auto c = a.intersect(b.negated());
      if (!c.is_zero() && std::find(parts.begin(), parts.end(), c) == parts.end()) parts.push_back(std::move(c));
    }
  }
  LinealityReport r;
  r.pointed = parts.empty();
  r.cone = ConeUnion(std::move(parts), K.dim());
  r.subspace = r.pointed || covers(r.cone, r.cone.hull());
  return r;
}

inline bool is_pointed(const ConeUnion& K) { return lineality(K).pointed; }

struct InteriorVerdict {
  bool interior = false;
  /// Set when x is in K but interior to no piece, so the union may still contain a neighborhood.
  bool under_approximation = false;
};

inline InteriorVerdict interior_membership(const ConeUnion& K, const Vector& x) {
  InteriorVerdict v;
  for (const auto& p : K.pieces())
    if (p.interior_contains(x)) v.interior = true;
  v.under_approximation = !v.interior && K.pieces().size() > 1 && K.contains(x);
  return v;
}

/// K+ = {y : y(g) >= 0 for every generator of every piece}, as a cone in the dual space.
inline ConvexConePiece dual_cone(const ConeUnion& K) {
  std::vector<Functional> rows;
  for (const auto& g : K.all_generators()) rows.push_back(to_functional(g));
  return ConvexConePiece::from_facets(rows, K.dim());
}

inline bool in_K_plus(const ConeUnion& K, const Functional& x_star) {
  for (const auto& g : K.all_generators())
    if (x_star(g).sign() < 0) return false;
  return true;
}

enum class Verdict { No, Yes, Unsupported };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::No: return "no";
    case Verdict::Yes: return "yes";
    case Verdict::Unsupported: return "unsupported";
  }
  return "unsupported";
}

inline Verdict to_verdict(bool b) { return b ? Verdict::Yes : Verdict::No; }

/// Is every region contained in l(K)? Exact for arbitrary unions via the cover test.
inline bool within_lineality(const ConeUnion& K, const std::vector<ConvexConePiece>& regions) {
  auto lin = lineality(K);
  for (const auto& r : regions)
    if (!covers(lin.cone, r)) return false;
  return true;
}

/// x* in K^&: x*(k) > 0 on K minus l(K). The set {k in piece : x*(k) <= 0} must sit inside l(K).
inline bool in_K_amp(const ConeUnion& K, const Functional& x_star) {
  std::vector<ConvexConePiece> bad;
  for (const auto& p : K.pieces()) {
    auto f = p.facets();
    f.push_back(-x_star);
    bad.push_back(ConvexConePiece::from_facets(f, K.dim()));
  }
  return within_lineality(K, bad);
}

enum class BaseKind { NormBase, NormlikeBase, SeminormBase, None };

inline const char* base_kind_name(BaseKind k) {
  switch (k) {
    case BaseKind::NormBase: return "norm-base";
    case BaseKind::NormlikeBase: return "normlike-base";
    case BaseKind::SeminormBase: return "seminorm-base";
    case BaseKind::None: return "none";
  }
  return "none";
}

struct BaseClassification {
  BaseKind kind = BaseKind::None;
  /// K cap K_psi for a seminorm-base.
  std::optional<ConeUnion> degenerate_part;

  bool normlike() const { return kind == BaseKind::NormBase || kind == BaseKind::NormlikeBase; }
};

inline BaseClassification classify_base(const ConeUnion& K, const PolyhedralSeminorm& psi) {
  if (psi.dim() != K.dim()) throw Error(ErrorCode::DimensionMismatch, "seminorm dimension differs from cone");
  BaseClassification c;
  if (K.is_zero()) return c;
  if (psi.is_norm()) {
    c.kind = BaseKind::NormBase;
    return c;
  }
  std::vector<ConvexConePiece> degenerate;
  for (const auto& p : K.pieces()) {
    auto f = p.facets();
    for (const auto& g : psi.generators()) f.push_back(-g);
    auto part = ConvexConePiece::from_facets(f, K.dim());
    if (!part.is_zero()) degenerate.push_back(std::move(part));
  }
  if (degenerate.empty()) {
    c.kind = BaseKind::NormlikeBase;
  } else {
    c.kind = BaseKind::SeminormBase;
    c.degenerate_part = ConeUnion(std::move(degenerate), K.dim());
  }
  return c;
}

struct BasePolytope {
  std::vector<Vector> vertices;
  bool includes_origin = false;
};

/// Per piece, the vertices of piece cap {psi <= 1} with psi = 1; their hull is conv(B_K).
inline BasePolytope base_polytope(const ConeUnion& K, const PolyhedralSeminorm& psi, bool augment_origin) {
  if (!classify_base(K, psi).normlike() && !K.is_zero())
    throw Error(ErrorCode::NotNormlike, "seminorm vanishes on a nonzero cone direction");
  BasePolytope b;
  const std::size_t d = K.dim();
  for (const auto& p : K.pieces()) {
    if (p.is_zero()) continue;
    std::vector<HalfSpace> hs;
    for (const auto& f : p.facets()) hs.push_back({-f, 0});
    for (const auto& c : psi.generators()) hs.push_back({c, 1});
    for (auto& v : vertex_enumeration(hs, d))
      if (psi(v) == 1) b.vertices.push_back(std::move(v));
  }
  if (augment_origin) {
    b.vertices.push_back(Vector(d));
    b.includes_origin = true;
  }
  sort_unique(b.vertices);
  return b;
}

/// min of x* over the base vertices > 0.
inline bool in_K_sharp(const ConeUnion& K, const PolyhedralSeminorm& psi, const Functional& x_star) {
  for (const auto& v : base_polytope(K, psi, false).vertices)
    if (x_star(v).sign() <= 0) return false;
  return true;
}

namespace detail {

inline Vector primitive_ray(const Vector& v) { return v.primitive(); }

/// Planar boundary: rays among the pieces' generators that are not interior to the union.
inline ConeUnion boundary_cone_2d(const ConeUnion& A) {
  std::vector<Vector> cand;
  for (const auto& g : A.all_generators()) cand.push_back(primitive_ray(g));
  sort_unique(cand);
  std::vector<ConvexConePiece> rays;
  for (const auto& r : cand) {
    bool covered[2] = {false, false};
    for (int s = 0; s < 2; ++s) {
      Vector perp{-r[1], r[0]};
      if (s == 1) perp = -perp;
      for (const auto& p : A.pieces()) {
        if (!p.contains(r)) continue;
        bool ok = true;
        for (const auto& h : p.facets())
          if (h(r).is_zero() && h(perp).sign() <= 0) ok = false;
        if (ok) covered[s] = true;
      }
    }
    if (!(covered[0] && covered[1])) rays.push_back(ConvexConePiece::span({r}, 2));
  }
  return ConeUnion(std::move(rays), 2);
}

/// Whether Q (a subset of P) is a face of P: the minimal face of P through a
/// relative-interior point of Q must not exceed Q.
inline bool is_face_of(const ConvexConePiece& Q, const ConvexConePiece& P) {
  Vector q(P.dim());
  for (const auto& g : Q.generators()) q += g;
  std::vector<Functional> tight;
  for (const auto& h : P.facets())
    if (h(q).is_zero()) tight.push_back(h);
  for (const auto& g : P.generators()) {
    bool on_face = std::all_of(tight.begin(), tight.end(), [&](const Functional& h) { return h(g).is_zero(); });
    if (on_face && !Q.contains(g)) return false;
  }
  return true;
}

}  // namespace detail

/// Boundary of a solid cone union as a union of rays (planar) or facet cones.
inline ConeUnion boundary_cone(const ConeUnion& A) {
  if (!A.is_solid()) throw Error(ErrorCode::NotSolid, "boundary extraction needs a solid cone");
  ConeUnion out;
  if (A.dim() == 2) {
    out = detail::boundary_cone_2d(A);
  } else {
    const auto& ps = A.pieces();
    for (const auto& p : ps)
      if (!p.is_solid()) throw Error(ErrorCode::UnsupportedOverlap, "lower-dimensional piece in dimension >= 3");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        auto q = ps[i].intersect(ps[j]);
        if (!detail::is_face_of(q, ps[i]) || !detail::is_face_of(q, ps[j]))
          throw Error(ErrorCode::UnsupportedOverlap, "pieces overlap along a non-face");
      }
    }
    std::vector<ConvexConePiece> facets;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (const auto& h : ps[i].facets()) {
        auto F = ps[i].face(h);
        bool shared = false;
        for (std::size_t j = 0; j < ps.size() && !shared; ++j) {
          if (j == i) continue;
          bool holds_face = std::all_of(F.generators().begin(), F.generators().end(),
                                        [&](const Vector& g) { return ps[j].contains(g); });
          bool opposite = std::all_of(ps[j].generators().begin(), ps[j].generators().end(),
                                      [&](const Vector& g) { return h(g).sign() <= 0; });
          shared = holds_face && opposite;
        }
        if (!shared && std::find(facets.begin(), facets.end(), F) == facets.end()) facets.push_back(F);
      }
    }
    out = ConeUnion(std::move(facets), A.dim());
  }
  if (out.is_zero()) throw Error(ErrorCode::NontrivialityViolated, "cone has empty boundary");
  return out;
}

}  // namespace conesep
