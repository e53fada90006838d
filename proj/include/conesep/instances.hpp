#pragma once

#include <string>
#include <vector>

#include "conesep/separation.hpp"

namespace conesep::instances {

/// x(lambda) = (1 - lambda, lambda).
inline Vector segment_point(const Scalar& lambda) { return Vector{Scalar(1) - lambda, lambda}; }

/// R_+ [x(l0), x(l1)].
inline std::vector<Vector> sector(long l0, long l1) {
  return {segment_point(Scalar(l0, 5)), segment_point(Scalar(l1, 5))};
}

inline std::vector<Vector> omega1() { return sector(0, 1); }
inline std::vector<Vector> omega2() { return sector(2, 3); }
inline std::vector<Vector> omega3() { return sector(4, 5); }

inline std::vector<Vector> negate_all(std::vector<Vector> v) {
  for (auto& x : v) x = -x;
  return v;
}

/// Nonconvex K = -(Omega1 u Omega3) against the middle sector A = Omega2.
inline SeparationProblem nonconvex_k(const PolyhedralSeminorm& psi, SeparationVariant v = SeparationVariant::Strict) {
  return {ConeUnion::from_generators({negate_all(omega1()), negate_all(omega3())}, 2, "K"),
          ConeUnion::from_generators({omega2()}, 2, "A"), psi, v};
}

/// Mirrored roles: -K = Omega2 convex, A = Omega1 u Omega3 nonconvex.
inline SeparationProblem nonconvex_a(const PolyhedralSeminorm& psi, SeparationVariant v = SeparationVariant::Strict) {
  return {ConeUnion::from_generators({negate_all(omega2())}, 2, "K"),
          ConeUnion::from_generators({omega1(), omega3()}, 2, "A"), psi, v};
}

/// K = R^2_+, A = cone{(2,-1)}.
inline SeparationProblem orthant_strict(SeparationVariant v = SeparationVariant::Strict) {
  return {ConeUnion::from_generators({{Vector{1, 0}, Vector{0, 1}}}, 2, "K"),
          ConeUnion::from_generators({{Vector{2, -1}}}, 2, "A"), linf_norm(2), v};
}

/// K = R^2_+, A = cone{(0,1)}.
inline SeparationProblem orthant_weak(SeparationVariant v = SeparationVariant::Weak) {
  return {ConeUnion::from_generators({{Vector{1, 0}, Vector{0, 1}}}, 2, "K"),
          ConeUnion::from_generators({{Vector{0, 1}}}, 2, "A"), linf_norm(2), v};
}

/// A = R^2_+ with -K = cone{(1,1)} inside it: only the boundary of A can be
/// strictly separated from -K.
inline SeparationProblem boundary_only(SeparationVariant v = SeparationVariant::StrictBoundary) {
  return {ConeUnion::from_generators({{Vector{-1, -1}}}, 2, "K"),
          ConeUnion::from_generators({{Vector{1, 0}, Vector{0, 1}}}, 2, "A"), linf_norm(2), v};
}

}  // namespace conesep::instances
