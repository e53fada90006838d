#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "conesep/separation.hpp"

namespace conesep {

/// Seeded integer source. Draws use `engine() % width` so that streams are
/// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) {
    const auto width = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % width);
  }
  bool coin() { return eng_() % 2 == 0; }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline Vector random_vector(Rng& rng, std::size_t n, long bound) {
  Vector v(n);
  do {
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar(rng.uniform(-bound, bound));
  } while (v.is_zero());
  return v;
}

/// Generators strictly on the positive side of `direction`, so every piece and
/// the union are pointed.
inline std::vector<Vector> random_pointed_generators(Rng& rng, const Functional& direction, std::size_t count,
                                                     long bound) {
  std::vector<Vector> g;
  while (g.size() < count) {
    auto v = random_vector(rng, direction.dim(), bound);
    if (direction(v).sign() > 0) g.push_back(std::move(v));
  }
  return g;
}

inline ConeUnion random_pointed_cone(Rng& rng, const Functional& direction, std::size_t pieces, std::size_t gens,
                                     long bound = 5) {
  std::vector<std::vector<Vector>> ps;
  for (std::size_t i = 0; i < pieces; ++i) ps.push_back(random_pointed_generators(rng, direction, gens, bound));
  return ConeUnion::from_generators(ps, direction.dim());
}

/// Union of random cones with no pointedness constraint. May be the whole space.
inline ConeUnion random_cone(Rng& rng, std::size_t n, std::size_t pieces, std::size_t gens, long bound = 5) {
  std::vector<std::vector<Vector>> ps;
  for (std::size_t i = 0; i < pieces; ++i) {
    std::vector<Vector> g;
    for (std::size_t j = 0; j < gens; ++j) g.push_back(random_vector(rng, n, bound));
    ps.push_back(std::move(g));
  }
  return ConeUnion::from_generators(ps, n);
}

struct RandomInstanceSpec {
  std::size_t n = 2;
  std::size_t pieces = 1;
  std::size_t generators = 3;
  std::uint64_t seed = 1;
  std::optional<SeparationVariant> request;
  std::size_t max_attempts = 200;
};

inline void check_random_spec(const RandomInstanceSpec& s) {
  if (s.n < 2 || s.n > kMaxDimension) throw Error(ErrorCode::DimensionTooLarge, "dimension must lie in [2, 8]");
  if (s.pieces < 1 || s.pieces > 4) throw Error(ErrorCode::InvalidArgument, "pieces must lie in [1, 4]");
  if (s.generators < 1 || s.generators > kMaxGeneratorsPerPiece)
    throw Error(ErrorCode::InvalidArgument, "generators per piece must lie in [1, 16]");
}

/// K is pointed around a random direction d, A around an independent direction e.
inline SeparationProblem random_problem(Rng& rng, const RandomInstanceSpec& s, const PolyhedralSeminorm& psi) {
  auto d = to_functional(random_vector(rng, s.n, 3));
  auto e = to_functional(random_vector(rng, s.n, 3));
  auto K = random_pointed_cone(rng, d, s.pieces, s.generators);
  auto A = random_pointed_cone(rng, e, 1 + rng.uniform(0, static_cast<long>(s.pieces) - 1), s.generators);
  return {ConeUnion(K.pieces(), s.n, "K"), ConeUnion(A.pieces(), s.n, "A"), psi,
          s.request.value_or(SeparationVariant::Strict)};
}

/// Draws instances until the requested hypothesis holds.
inline SeparationProblem random_instance(const RandomInstanceSpec& s, const PolyhedralSeminorm& psi) {
  check_random_spec(s);
  if (psi.dim() != s.n) throw Error(ErrorCode::DimensionMismatch, "seminorm dimension differs from n");
  Rng rng(s.seed);
  for (std::size_t attempt = 0; attempt < s.max_attempts; ++attempt) {
    auto pr = random_problem(rng, s, psi);
    if (!s.request) return pr;
    if (check_hypotheses(pr).holds) return pr;
  }
  throw Error(ErrorCode::RejectionLimit, "no instance satisfied the requested hypothesis within the attempt bound");
}

}  // namespace conesep
