#pragma once

#include <atomic>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "conesep/errors.hpp"
#include "conesep/scalar.hpp"
#include "conesep/vector.hpp"

namespace conesep {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };

struct Constraint {
  Functional f;
  Relation rel;
  Scalar rhs;
};

/// Variables are free unless flagged in `nonnegative` (an empty flag list means all free).
struct LinearProgram {
  Functional objective;
  Sense sense = Sense::Minimize;
  std::vector<Constraint> constraints;
  std::vector<bool> nonnegative;

  std::size_t num_vars() const { return objective.dim(); }
  bool is_nonnegative(std::size_t j) const { return !nonnegative.empty() && nonnegative[j]; }
};

/// Optimal point with dual multipliers. For a minimization the duals satisfy
/// y >= 0 on >= rows, y <= 0 on <= rows, c - A^T y = 0 on free variables and
/// >= 0 on nonnegative ones; all signs flip for a maximization. value = c.x = y.b.
struct LPOptimal {
  Scalar value;
  Vector point;
  std::vector<Scalar> duals;
};

/// Farkas certificate: with each row written as a.x <= b, the multipliers are
/// nonnegative on inequality rows, sum(lambda_i a_i) = combination vanishes on free
/// variables and is >= 0 on nonnegative ones, and sum(lambda_i b_i) = offset = -1.
struct LPInfeasible {
  std::vector<Scalar> multipliers;
  Functional combination;
  Scalar offset;
};

/// A feasible point and a recession direction improving the objective.
struct LPUnbounded {
  Vector point;
  Vector ray;
};

using LPOutcome = std::variant<LPOptimal, LPInfeasible, LPUnbounded>;

/// Running totals of certificate checks performed by solve_lp.
struct LpAudit {
  static inline std::atomic<long> verified{0};
  static inline std::atomic<long> failed{0};
};

struct CertificateCheck {
  bool ok = true;
  std::string reason;
};

namespace detail {

inline bool row_holds(const Scalar& lhs, Relation rel, const Scalar& rhs) {
  switch (rel) {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
  }
  return false;
}

inline CertificateCheck fail(std::string why) { return {false, std::move(why)}; }

inline CertificateCheck check_feasible(const LinearProgram& lp, const Vector& x) {
  if (x.dim() != lp.num_vars()) return fail("point has wrong dimension");
  for (std::size_t j = 0; j < x.dim(); ++j)
    if (lp.is_nonnegative(j) && x[j].sign() < 0) return fail("negative value on a nonnegative variable");
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    if (!row_holds(c.f(x), c.rel, c.rhs)) return fail("row " + std::to_string(i) + " violated");
  }
  return {};
}

}  // namespace detail

/// Re-verifies an outcome by substitution. Independent of the solver internals.
inline CertificateCheck check_certificate(const LinearProgram& lp, const LPOutcome& outcome) {
  using detail::fail;
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.constraints.size();
  if (const auto* opt = std::get_if<LPOptimal>(&outcome)) {
    if (auto f = detail::check_feasible(lp, opt->point); !f.ok) return f;
    if (lp.objective(opt->point) != opt->value) return fail("objective value mismatch");
    if (opt->duals.size() != m) return fail("dual vector has wrong length");
    const int s = lp.sense == Sense::Minimize ? 1 : -1;
    Functional reduced = lp.objective;
    Scalar dual_value = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = lp.constraints[i];
      const Scalar& y = opt->duals[i];
      if (c.rel == Relation::GreaterEqual && s * y.sign() < 0) return fail("dual sign on >= row");
      if (c.rel == Relation::LessEqual && s * y.sign() > 0) return fail("dual sign on <= row");
      reduced -= c.f * y;
      dual_value += y * c.rhs;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (lp.is_nonnegative(j)) {
        if (s * reduced[j].sign() < 0) return fail("reduced cost sign");
      } else if (!reduced[j].is_zero()) {
        return fail("stationarity on free variable");
      }
    }
    if (dual_value != opt->value) return fail("duality gap");
    return {};
  }
  if (const auto* inf = std::get_if<LPInfeasible>(&outcome)) {
    if (inf->multipliers.size() != m) return fail("multiplier vector has wrong length");
    Functional comb(n);
    Scalar off = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = lp.constraints[i];
      const Scalar& l = inf->multipliers[i];
      if (c.rel != Relation::Equal && l.sign() < 0) return fail("negative multiplier on inequality");
      Scalar w = c.rel == Relation::GreaterEqual ? -l : l;
      comb += c.f * w;
      off += w * c.rhs;
    }
    if (comb != inf->combination || off != inf->offset) return fail("combination mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      if (lp.is_nonnegative(j) ? comb[j].sign() < 0 : !comb[j].is_zero())
        return fail("combination does not vanish");
    }
    if (off.sign() >= 0) return fail("offset not negative");
    return {};
  }
  const auto& unb = std::get<LPUnbounded>(outcome);
  if (auto f = detail::check_feasible(lp, unb.point); !f.ok) return f;
  if (unb.ray.dim() != n || unb.ray.is_zero()) return fail("bad ray");
  for (std::size_t j = 0; j < n; ++j)
    if (lp.is_nonnegative(j) && unb.ray[j].sign() < 0) return fail("ray leaves the orthant");
  for (const auto& c : lp.constraints) {
    if (!detail::row_holds(c.f(unb.ray), c.rel, Scalar(0))) return fail("ray violates a row");
  }
  Scalar gain = lp.objective(unb.ray);
  if (lp.sense == Sense::Minimize ? gain.sign() >= 0 : gain.sign() <= 0) return fail("ray does not improve");
  return {};
}

namespace detail {

/// Dense two-phase tableau simplex with Bland's rule.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp), n_(lp.num_vars()), m_(lp.constraints.size()) {
    for (const auto& c : lp.constraints)
      if (c.f.dim() != n_) throw Error(ErrorCode::DimensionMismatch, "constraint dimension differs from objective");
    if (!lp.nonnegative.empty() && lp.nonnegative.size() != n_)
      throw Error(ErrorCode::DimensionMismatch, "nonnegativity flags have wrong length");
    build();
  }

  LPOutcome solve() {
    // Phase one: minimize the sum of artificials.
    std::vector<mpq_class> cost1(cols_, 0);
    for (std::size_t j = first_art_; j < cols_; ++j) cost1[j] = 1;
    set_costs(cost1);
    run(cols_);
    if (sgn(d_[cols_]) != 0) return farkas(cost1);
    drive_out_artificials();

    std::vector<mpq_class> cost2(cols_, 0);
    const int s = lp_.sense == Sense::Minimize ? 1 : -1;
    for (std::size_t j = 0; j < n_; ++j) {
      cost2[pos_col_[j]] = s * lp_.objective[j].raw();
      if (neg_col_[j] != npos) cost2[neg_col_[j]] = -s * lp_.objective[j].raw();
    }
    set_costs(cost2);
    if (auto q = run(first_art_); q != npos) return ray(q);
    return optimal(cost2);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void build() {
    pos_col_.assign(n_, npos);
    neg_col_.assign(n_, npos);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      pos_col_[j] = col++;
      if (!lp_.is_nonnegative(j)) neg_col_[j] = col++;
    }
    slack_col_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i)
      if (lp_.constraints[i].rel != Relation::Equal) slack_col_[i] = col++;
    flip_.assign(m_, 1);
    init_col_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& c = lp_.constraints[i];
      if (c.rhs.sign() < 0) flip_[i] = -1;
      int slack_sign = c.rel == Relation::LessEqual ? 1 : -1;
      if (slack_col_[i] != npos && slack_sign * flip_[i] > 0) init_col_[i] = slack_col_[i];
    }
    first_art_ = col;
    for (std::size_t i = 0; i < m_; ++i)
      if (init_col_[i] == npos) init_col_[i] = col++;
    cols_ = col;

    t_.assign(m_, std::vector<mpq_class>(cols_ + 1, 0));
    basis_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& c = lp_.constraints[i];
      const int f = flip_[i];
      auto& row = t_[i];
      for (std::size_t j = 0; j < n_; ++j) {
        if (c.f[j].is_zero()) continue;
        row[pos_col_[j]] = f * c.f[j].raw();
        if (neg_col_[j] != npos) row[neg_col_[j]] = -f * c.f[j].raw();
      }
      if (slack_col_[i] != npos) row[slack_col_[i]] = (c.rel == Relation::LessEqual ? 1 : -1) * f;
      row[init_col_[i]] = 1;
      row[cols_] = f * c.rhs.raw();
      basis_[i] = init_col_[i];
    }
  }

  void set_costs(const std::vector<mpq_class>& cost) {
    d_.assign(cols_ + 1, 0);
    for (std::size_t j = 0; j < cols_; ++j) d_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const mpq_class& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(t_[i][j]) != 0) d_[j] -= cb * t_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    auto& prow = t_[r];
    const mpq_class p = prow[q];
    for (auto& x : prow)
      if (sgn(x) != 0) x /= p;
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[q]) == 0) return;
      const mpq_class factor = row[q];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r) eliminate(t_[i]);
    eliminate(d_);
    basis_[r] = q;
  }

  /// Runs Bland's rule over entering columns [0, limit). Returns the entering
  /// column of an unbounded direction, or npos at optimality.
  std::size_t run(std::size_t limit) {
    for (;;) {
      std::size_t q = npos;
      for (std::size_t j = 0; j < limit; ++j)
        if (sgn(d_[j]) < 0) { q = j; break; }
      if (q == npos) return npos;
      std::size_t r = npos;
      mpq_class best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][q]) <= 0) continue;
        mpq_class ratio = t_[i][cols_] / t_[i][q];
        if (r == npos || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == npos) return q;
      pivot(r, q);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_art_) continue;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<mpq_class> column_values(const std::vector<mpq_class>& xs_std) const {
    std::vector<mpq_class> x(n_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      x[j] = xs_std[pos_col_[j]];
      if (neg_col_[j] != npos) x[j] -= xs_std[neg_col_[j]];
    }
    return x;
  }

  Vector current_point() const {
    std::vector<mpq_class> xs(cols_, 0);
    for (std::size_t i = 0; i < m_; ++i) xs[basis_[i]] = t_[i][cols_];
    return to_vector(column_values(xs));
  }

  static Vector to_vector(const std::vector<mpq_class>& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Scalar(v[i]);
    return r;
  }

  /// Row duals of the current basis in the original row orientation.
  std::vector<mpq_class> row_duals(const std::vector<mpq_class>& cost) const {
    std::vector<mpq_class> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = flip_[i] * (cost[init_col_[i]] - d_[init_col_[i]]);
    return y;
  }

  LPOutcome farkas(const std::vector<mpq_class>& cost1) const {
    auto y = row_duals(cost1);
    mpq_class w = 0;
    for (std::size_t i = 0; i < m_; ++i) w += y[i] * lp_.constraints[i].rhs.raw();
    LPInfeasible out;
    out.multipliers.resize(m_);
    out.combination = Functional(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& c = lp_.constraints[i];
      mpq_class l = -y[i] / w;
      if (c.rel == Relation::GreaterEqual) l = -l;
      out.multipliers[i] = Scalar(l);
      Scalar wgt(mpq_class(-y[i] / w));
      out.combination += c.f * wgt;
    }
    out.offset = Scalar(-1);
    return out;
  }

  LPOutcome ray(std::size_t q) const {
    std::vector<mpq_class> dir(cols_, 0);
    dir[q] = 1;
    for (std::size_t i = 0; i < m_; ++i) dir[basis_[i]] = -t_[i][q];
    return LPUnbounded{current_point(), to_vector(column_values(dir))};
  }

  LPOutcome optimal(const std::vector<mpq_class>& cost2) const {
    auto y = row_duals(cost2);
    const int s = lp_.sense == Sense::Minimize ? 1 : -1;
    LPOptimal out;
    out.point = current_point();
    out.value = lp_.objective(out.point);
    out.duals.reserve(m_);
    for (auto& v : y) out.duals.emplace_back(mpq_class(s * v));
    return out;
  }

  const LinearProgram& lp_;
  std::size_t n_, m_;
  std::size_t cols_ = 0, first_art_ = 0;
  std::vector<std::size_t> pos_col_, neg_col_, slack_col_, init_col_, basis_;
  std::vector<int> flip_;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> d_;
};

}  // namespace detail

/// Solves the program exactly and re-verifies the certificate before returning.
inline LPOutcome solve_lp(const LinearProgram& lp) {
  LPOutcome out = detail::Tableau(lp).solve();
  auto check = check_certificate(lp, out);
  if (!check.ok) {
    ++LpAudit::failed;
    throw Error(ErrorCode::InternalError, "LP certificate failed re-verification: " + check.reason);
  }
  ++LpAudit::verified;
  return out;
}

/// Solves a program known to have a finite optimum.
inline LPOptimal solve_optimal(const LinearProgram& lp) {
  auto out = solve_lp(lp);
  if (auto* opt = std::get_if<LPOptimal>(&out)) return std::move(*opt);
  throw Error(ErrorCode::InternalError, "expected a finite optimum");
}

inline LPOutcome solve_lp(const Functional& objective, std::vector<Constraint> constraints, Sense sense) {
  LinearProgram lp{objective, sense, std::move(constraints), {}};
  return solve_lp(lp);
}

}  // namespace conesep
