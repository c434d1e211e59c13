#pragma once

#include "exactdet/determinant.hpp"
#include "exactdet/special_functions.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace exactdet {

/// The (n, a, b) triple parameterizing the binomial matrix L_n(a,b) and its
/// closed-form evaluation R_n(a,b). Valid iff n >= 0 and a >= b >= 0.
struct MacMahonParams {
  long long n = 0;
  long long a = 0;
  long long b = 0;

  void validate() const {
    if (n < 0)
      throw std::domain_error("macmahon: n must be nonnegative");
    if (b < 0)
      throw std::domain_error("macmahon: b must be nonnegative");
    if (a < b)
      throw std::domain_error("macmahon: requires a >= b");
  }

  friend bool operator==(const MacMahonParams &, const MacMahonParams &) = default;
};

struct Counterexample {
  MacMahonParams params;
  Rational lhs;
  Rational rhs;
};

struct VerificationReport {
  std::string grid;
  std::uint64_t cases_checked = 0;
  std::optional<Counterexample> counterexample;
  std::chrono::nanoseconds elapsed{0};

  bool ok() const { return !counterexample.has_value(); }
};

/// The n x n matrix with entry (i,j) = C(a+i, b+j), i,j in 1..n.
inline RationalMatrix binomial_matrix(const MacMahonParams &p) {
  p.validate();
  RationalMatrix m(p.n, p.n);
  for (long long i = 1; i <= p.n; ++i)
    for (long long j = 1; j <= p.n; ++j)
      m(i - 1, j - 1) = Rational(binomial(p.a + i, p.b + j));
  return m;
}

/// Closed-form value of det binomial_matrix(n,a,b), as a product of
/// superfactorials:
///   sf(a+n) sf(n-1) sf(a-b-1) sf(b) / (sf(a) sf(a-b+n-1) sf(b+n)).
/// Always a nonnegative integer on the valid domain.
inline Rational macmahon_closed_form(const MacMahonParams &p) {
  p.validate();
  const Integer num = superfactorial(p.a + p.n) * superfactorial(p.n - 1) *
                      superfactorial(p.a - p.b - 1) * superfactorial(p.b);
  const Integer den = superfactorial(p.a) * superfactorial(p.a - p.b + p.n - 1) *
                      superfactorial(p.b + p.n);
  return Rational(num, den);
}

using MacMahonEvaluator = std::function<Rational(const MacMahonParams &)>;

/// Evaluates binomial_matrix then takes its determinant (fallback strategy).
inline Rational determinant_evaluator(const MacMahonParams &p) {
  return det(binomial_matrix(p), Strategy::CondensationWithBareissFallback).value;
}

/// The right-hand side of the condensation recurrence
///   X_n(a,b) = (X_{n-1}(a,b) X_{n-1}(a+1,b+1) - X_{n-1}(a+1,b) X_{n-1}(a,b+1))
///              / X_{n-2}(a+1,b+1),
/// for any evaluator f. The same recurrence is satisfied by both the
/// determinant side and the closed form, which is the whole induction.
inline Rational recurrence_rhs(const MacMahonParams &p, const MacMahonEvaluator &f) {
  p.validate();
  if (p.n < 2)
    throw std::domain_error("recurrence_rhs: requires n >= 2");
  const Rational denom = f({p.n - 2, p.a + 1, p.b + 1});
  if (denom.is_zero())
    throw DivisionByZero("recurrence denominator X(n=" + std::to_string(p.n - 2) +
                         ", a=" + std::to_string(p.a + 1) +
                         ", b=" + std::to_string(p.b + 1) + ") is zero");
  const Rational numer = f({p.n - 1, p.a, p.b}) * f({p.n - 1, p.a + 1, p.b + 1}) -
                         f({p.n - 1, p.a + 1, p.b}) * f({p.n - 1, p.a, p.b + 1});
  return numer / denom;
}

enum class RecurrenceSide { Determinant, ClosedForm };

/// Evaluator for recurrence checks. The recurrence at a grid point with
/// a = b references X_{n-1}(a, b+1), one column shift outside the a >= b
/// domain; there the binomial matrix has an all-zero first row, so both
/// sides extend by X_n(a,b) = 0 for a < b, n >= 1 (and 1 for n = 0, the
/// empty determinant).
inline MacMahonEvaluator recurrence_evaluator(RecurrenceSide side) {
  return [side](const MacMahonParams &p) -> Rational {
    if (p.a < p.b)
      return p.n == 0 ? Rational(1) : Rational(0);
    if (side == RecurrenceSide::ClosedForm)
      return macmahon_closed_form(p);
    return determinant_evaluator(p);
  };
}

namespace detail {

template <typename CaseFn>
VerificationReport run_grid(std::string grid, long long n_min, long long n_max,
                            long long a_max, long long b_max, CaseFn check) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.grid = std::move(grid);
  for (long long n = n_min; n <= n_max && !rep.counterexample; ++n)
    for (long long a = 0; a <= a_max && !rep.counterexample; ++a)
      for (long long b = 0; b <= std::min(a, b_max); ++b) {
        const MacMahonParams p{n, a, b};
        auto [lhs, rhs] = check(p);
        ++rep.cases_checked;
        if (!(lhs == rhs)) {
          rep.counterexample = Counterexample{p, lhs, rhs};
          break;
        }
      }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

} // namespace detail

/// Exhaustively compares det binomial_matrix(n,a,b) against the closed form
/// on 0 <= n <= n_max, 0 <= b <= min(a, b_max), a <= a_max. Exact equality.
inline VerificationReport verify_identity(long long n_max, long long a_max,
                                          long long b_max = -1) {
  if (n_max < 0 || a_max < 0)
    throw std::domain_error("verify_identity: bounds must be nonnegative");
  if (b_max < 0)
    b_max = a_max;
  return detail::run_grid(
      "identity: 0<=n<=" + std::to_string(n_max) + ", 0<=b<=a<=" + std::to_string(a_max),
      0, n_max, a_max, b_max, [](const MacMahonParams &p) {
        return std::pair{determinant_evaluator(p), macmahon_closed_form(p)};
      });
}

/// Checks the recurrence in multiplied-out, division-free form,
///   f(n,a,b) f(n-2,a+1,b+1) = f(n-1,a,b) f(n-1,a+1,b+1)
///                             - f(n-1,a+1,b) f(n-1,a,b+1),
/// with f the determinant side or the closed form.
inline VerificationReport verify_recurrence(long long n_max, long long a_max,
                                            RecurrenceSide side,
                                            long long b_max = -1) {
  if (n_max < 2)
    throw std::domain_error("verify_recurrence: requires n_max >= 2");
  if (a_max < 0)
    throw std::domain_error("verify_recurrence: a_max must be nonnegative");
  if (b_max < 0)
    b_max = a_max;
  const MacMahonEvaluator f = recurrence_evaluator(side);
  const char *name = side == RecurrenceSide::Determinant ? "recurrence-L" : "recurrence-R";
  return detail::run_grid(
      std::string(name) + ": 2<=n<=" + std::to_string(n_max) + ", 0<=b<=a<=" +
          std::to_string(a_max),
      2, n_max, a_max, b_max, [&f](const MacMahonParams &p) {
        const Rational lhs =
            f(p) * f({p.n - 2, p.a + 1, p.b + 1});
        const Rational rhs =
            f({p.n - 1, p.a, p.b}) * f({p.n - 1, p.a + 1, p.b + 1}) -
            f({p.n - 1, p.a + 1, p.b}) * f({p.n - 1, p.a, p.b + 1});
        return std::pair{lhs, rhs};
      });
}

/// The specialization a = 2n+1, b = n: returns the closed-form value after
/// checking it against the determinant. A mismatch would falsify the main
/// identity, so it is reported as a hard logic error.
inline Rational bhp_value(long long n) {
  if (n < 1)
    throw std::domain_error("bhp_value: requires n >= 1");
  const MacMahonParams p{n, 2 * n + 1, n};
  const Rational closed = macmahon_closed_form(p);
  const Rational direct = determinant_evaluator(p);
  if (!(closed == direct))
    throw std::logic_error("bhp_value: closed form " + closed.str() +
                           " != determinant " + direct.str() + " at n=" +
                           std::to_string(n));
  return closed;
}

/// Cross-checks bhp_value for 1 <= n <= n_max.
inline VerificationReport verify_bhp(long long n_max) {
  if (n_max < 1)
    throw std::domain_error("verify_bhp: requires n_max >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.grid = "bhp: 1<=n<=" + std::to_string(n_max) + ", a=2n+1, b=n";
  for (long long n = 1; n <= n_max; ++n) {
    const MacMahonParams p{n, 2 * n + 1, n};
    const Rational lhs = determinant_evaluator(p);
    const Rational rhs = macmahon_closed_form(p);
    ++rep.cases_checked;
    if (!(lhs == rhs)) {
      rep.counterexample = Counterexample{p, lhs, rhs};
      break;
    }
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

} // namespace exactdet
