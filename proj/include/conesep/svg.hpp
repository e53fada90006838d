#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "conesep/separation.hpp"

namespace conesep {

namespace svg_detail {

inline std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline Scalar cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Exact monotone-chain hull of planar points, counterclockwise. Collinear
/// inputs come back as the two endpoints.
inline std::vector<Vector> planar_hull(std::vector<Vector> pts) {
  sort_unique(pts);
  if (pts.size() < 3) return pts;
  std::vector<Vector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline std::string polygon_path(const std::vector<Vector>& hull) {
  std::string d;
  for (std::size_t i = 0; i < hull.size(); ++i)
    d += (i == 0 ? "M " : " L ") + num(hull[i][0].to_double()) + " " + num(hull[i][1].to_double());
  if (hull.size() > 2) d += " Z";
  return d;
}

/// piece cap [-1, 1]^2.
inline std::vector<Vector> clip_to_box(const ConvexConePiece& p) {
  std::vector<HalfSpace> hs;
  for (const auto& f : p.facets()) hs.push_back({-f, 0});
  for (std::size_t i = 0; i < 2; ++i) {
    hs.push_back({Functional::unit(2, i), 1});
    hs.push_back({-Functional::unit(2, i), 1});
  }
  return planar_hull(vertex_enumeration(hs, 2));
}

/// Ray direction scaled so that it ends on the box boundary.
inline Vector to_box(const Vector& g) {
  Scalar m = std::max(g[0].abs(), g[1].abs());
  return g / m;
}

/// Generators of C lying on a facet: the rays that make up its boundary.
inline std::vector<Vector> boundary_rays(const ConvexConePiece& C) {
  std::vector<Vector> out;
  for (const auto& g : C.generators()) {
    bool on = C.facets().empty();
    for (const auto& f : C.facets())
      if (f(g).is_zero()) on = true;
    if (on) out.push_back(to_box(g));
  }
  sort_unique(out);
  return out;
}

}  // namespace svg_detail

/// Planar picture of -K, A, the base polytopes S_-K and S_A^0, and the curve
/// {phi = 0} of the certificate when one is given. Fixed viewBox, y axis up.
inline std::string render_svg(const SeparationProblem& pr, const std::optional<SeparationCertificate>& cert) {
  using namespace svg_detail;
  if (pr.K.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "SVG output needs a planar instance");
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\" width=\"480\" height=\"480\">\n";
  s += "<title>" + escape("-" + pr.K.name() + " and " + pr.A.name()) + "</title>\n";
  s += "<g transform=\"scale(1,-1)\" stroke-width=\"0.008\">\n";
  s += "<path class=\"axes\" d=\"M -1 0 L 1 0 M 0 -1 L 0 1\" stroke=\"#999\" fill=\"none\"/>\n";

  auto pieces = [&](const ConeUnion& U, const std::string& cls, const char* color) {
    for (const auto& p : U.pieces()) {
      if (p.is_zero()) continue;
      s += "<path class=\"" + cls + "\" d=\"" + polygon_path(clip_to_box(p)) + "\" fill=\"" + color +
           "\" fill-opacity=\"0.3\" stroke=\"" + color + "\"/>\n";
    }
  };
  pieces(pr.K.negated(), "cone-minus-K", "#1f77b4");
  pieces(pr.A, "cone-A", "#d62728");

  const auto s_mk = base_polytope(pr.K.negated(), pr.psi, false).vertices;
  const auto s_a0 = base_polytope(pr.A, pr.psi, true).vertices;
  s += "<path class=\"base-minus-K\" d=\"" + polygon_path(planar_hull(s_mk)) +
       "\" fill=\"none\" stroke=\"#1f77b4\" stroke-dasharray=\"0.03 0.02\"/>\n";
  s += "<path class=\"base-A0\" d=\"" + polygon_path(planar_hull(s_a0)) +
       "\" fill=\"none\" stroke=\"#d62728\" stroke-dasharray=\"0.03 0.02\"/>\n";

  if (cert) {
    const auto rays = boundary_rays(separating_cone(*cert, pr.psi));
    std::string d;
    for (const auto& r : rays) d += (d.empty() ? "M " : " M ") + std::string("0 0 L ") + num(r[0].to_double()) + " " +
                                    num(r[1].to_double());
    if (d.empty()) d = "M 0 0";
    s += "<path class=\"level-curve\" d=\"" + d + "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"0.02\"/>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace conesep
