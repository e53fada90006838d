#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "conesep/errors.hpp"

namespace conesep {

/// Exact rational number. Always stored in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral T>
  Scalar(T value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Scalar(long num, long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Scalar(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

  /// Parses "p/q" or "p" with an optional sign. Throws ParseError on anything else.
  static Scalar parse(std::string_view text) {
    auto digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
      throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    if (!text.empty() && text.front() == '-') n = -n;
    return Scalar(mpq_class(n, d));
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  double to_double() const { return v_.get_d(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Scalar abs() const { return Scalar(mpq_class(::abs(v_))); }
  Scalar inverse() const {
    if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    return Scalar(mpq_class(1 / v_));
  }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class v_{0};
};

inline Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace conesep
