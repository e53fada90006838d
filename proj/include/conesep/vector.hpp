#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "conesep/errors.hpp"
#include "conesep/scalar.hpp"

namespace conesep {

struct PointTag {};
struct DualTag {};

template <class Tag>
class BasicVector {
 public:
  BasicVector() = default;
  explicit BasicVector(std::size_t dim) : c_(dim) {}
  explicit BasicVector(std::vector<Scalar> coords) : c_(std::move(coords)) {}
  BasicVector(std::initializer_list<Scalar> coords) : c_(coords) {}

  static BasicVector unit(std::size_t dim, std::size_t i) {
    BasicVector v(dim);
    v.c_[i] = 1;
    return v;
  }

  std::size_t dim() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  BasicVector& operator+=(const BasicVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  BasicVector& operator-=(const BasicVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  BasicVector& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  BasicVector& operator/=(const Scalar& s) {
    for (auto& x : c_) x /= s;
    return *this;
  }

  BasicVector operator-() const {
    BasicVector r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend BasicVector operator+(BasicVector a, const BasicVector& b) { return a += b; }
  friend BasicVector operator-(BasicVector a, const BasicVector& b) { return a -= b; }
  friend BasicVector operator*(BasicVector a, const Scalar& s) { return a *= s; }
  friend BasicVector operator*(const Scalar& s, BasicVector a) { return a *= s; }
  friend BasicVector operator/(BasicVector a, const Scalar& s) { return a /= s; }

  friend bool operator==(const BasicVector&, const BasicVector&) = default;
  friend auto operator<=>(const BasicVector& a, const BasicVector& b) {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

  /// Pairing with a vector of the other tag (or the same tag, as a plain dot product).
  template <class OtherTag>
  Scalar dot(const BasicVector<OtherTag>& o) const {
    if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "dot of differing dimensions");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) acc += c_[i].raw() * o[i].raw();
    return Scalar(std::move(acc));
  }

  /// Evaluates the functional at x.
  Scalar operator()(const BasicVector<PointTag>& x) const
    requires std::same_as<Tag, DualTag>
  {
    return dot(x);
  }

  /// Positive multiple with coprime integer coordinates. Zero stays zero.
  BasicVector primitive() const {
    if (is_zero()) return *this;
    mpz_class l = 1;
    for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(c_.size());
    mpz_class g = 0;
    for (const auto& x : c_) {
      mpz_class v = x.numerator() * (l / x.denominator());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      ints.push_back(std::move(v));
    }
    BasicVector r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = Scalar(mpq_class(ints[i] / g));
    return r;
  }

  template <class OtherTag>
  BasicVector<OtherTag> as() const {
    return BasicVector<OtherTag>(c_);
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicVector& v) { return os << v.str(); }

 private:
  void check_dim(const BasicVector& o) const {
    if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
  }

  std::vector<Scalar> c_;
};

using Vector = BasicVector<PointTag>;
using Functional = BasicVector<DualTag>;

inline Functional to_functional(const Vector& v) { return v.as<DualTag>(); }
inline Vector to_point(const Functional& f) { return f.as<PointTag>(); }

/// Sorts and removes exact duplicates.
template <class Tag>
void sort_unique(std::vector<BasicVector<Tag>>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

template <class Tag>
void require_dim(const std::vector<BasicVector<Tag>>& vs, std::size_t dim, const char* what) {
  for (const auto& v : vs)
    if (v.dim() != dim) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has wrong dimension");
}

}  // namespace conesep
