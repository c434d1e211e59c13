#pragma once

#include "exactdet/matrix.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace exactdet {

enum class Strategy {
  CondensationStrict,
  CondensationWithBareissFallback,
  Bareiss,
  Laplace
};

enum class Algorithm { Condensation, CondensationWithFallback, Bareiss, Laplace };

inline const char *to_string(Algorithm a) {
  switch (a) {
  case Algorithm::Condensation: return "condensation";
  case Algorithm::CondensationWithFallback: return "condensation_with_fallback";
  case Algorithm::Bareiss: return "bareiss";
  case Algorithm::Laplace: return "laplace";
  }
  return "?";
}

inline const char *to_string(Strategy s) {
  switch (s) {
  case Strategy::CondensationStrict: return "condensation-strict";
  case Strategy::CondensationWithBareissFallback: return "condensation-fallback";
  case Strategy::Bareiss: return "bareiss";
  case Strategy::Laplace: return "laplace";
  }
  return "?";
}

/// A zero divisor encountered while condensing: the order-`order` layer
/// cannot be advanced because the interior entry at (row, col), 1-based in
/// the divisor layer's coordinates, is zero.
class ZeroInteriorPivot : public std::runtime_error {
public:
  ZeroInteriorPivot(Index order, Index row, Index col)
      : std::runtime_error("zero interior pivot at layer r=" + std::to_string(order) +
                           ", position (" + std::to_string(row) + "," +
                           std::to_string(col) + ")"),
        order(order), row(row), col(col) {}
  Index order;
  Index row;
  Index col;
};

struct FallbackEvent {
  Index order;
  Index row;
  Index col;
  friend bool operator==(const FallbackEvent &, const FallbackEvent &) = default;
};

struct DetResult {
  Rational value;
  Algorithm algorithm = Algorithm::Condensation;
  std::vector<FallbackEvent> fallback_events;
  std::chrono::nanoseconds elapsed{0};
};

/// Two consecutive layers of minors: layer_prev holds every det A_r(k,l) for
/// the current order r, layer_prevprev the order r-1 minors (one size larger).
template <typename Scalar> struct CondensationState {
  SquareMatrix<Scalar> layer_prev;
  SquareMatrix<Scalar> layer_prevprev;
  Index order = 1;
};

template <typename Derived>
CondensationState<typename Derived::Scalar>
initial_condensation_state(const Eigen::MatrixBase<Derived> &m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  CondensationState<Scalar> s;
  s.layer_prev = m;
  // Order-0 minors are empty determinants, all equal to 1.
  s.layer_prevprev = SquareMatrix<Scalar>::Constant(n + 1, n + 1, Scalar(1));
  s.order = 1;
  return s;
}

namespace detail {

/// Row-partitioned evaluation; results are written to disjoint preallocated
/// rows, so the outcome is bit-identical for every thread count.
template <typename Fn> void for_rows(Index m, int threads, Fn fn) {
  if (threads <= 1 || m < 2) {
    fn(Index{0}, m);
    return;
  }
  const int t = static_cast<int>(std::min<Index>(threads, m));
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int w = 0; w < t; ++w) {
    const Index lo = m * w / t;
    const Index hi = m * (w + 1) / t;
    pool.emplace_back(fn, lo, hi);
  }
  for (auto &th : pool)
    th.join();
}

} // namespace detail

/// One condensation layer: entry (k,l) of the result is
/// (P(k,l) P(k+1,l+1) - P(k,l+1) P(k+1,l)) / Q(k+1,l+1) with P the current
/// layer and Q the one before it. Every divisor is checked up front; the
/// first zero (row-major) is reported.
template <typename Scalar>
CondensationState<Scalar> condense_step(const CondensationState<Scalar> &s,
                                        int threads = 1) {
  const Index m = s.layer_prev.rows() - 1;
  const auto &p = s.layer_prev;
  const auto &q = s.layer_prevprev;
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (q(i + 1, j + 1) == Scalar(0))
        throw ZeroInteriorPivot(s.order, i + 2, j + 2);

  SquareMatrix<Scalar> next(m, m);
  detail::for_rows(m, threads, [&](Index lo, Index hi) {
    for (Index i = lo; i < hi; ++i)
      for (Index j = 0; j < m; ++j)
        next(i, j) = (p(i, j) * p(i + 1, j + 1) - p(i, j + 1) * p(i + 1, j)) /
                     q(i + 1, j + 1);
  });
  return {std::move(next), s.layer_prev, s.order + 1};
}

/// Dodgson condensation, strict mode: a zero interior pivot is an error,
/// never a guess.
template <typename Derived>
DetResult dodgson_det(const Eigen::MatrixBase<Derived> &m, int threads = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  const Index n = m.rows();
  DetResult r;
  r.algorithm = Algorithm::Condensation;
  if (n == 0) {
    r.value = Rational(1);
  } else {
    auto state = initial_condensation_state(m);
    while (state.order < n)
      state = condense_step(state, threads);
    r.value = state.layer_prev(0, 0);
  }
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

/// Fraction-free (Bareiss) elimination with row-swap pivoting and sign
/// tracking. Every division is exact; a column with no nonzero pivot means
/// the determinant is 0.
template <typename Derived>
typename Derived::Scalar bareiss_det(const Eigen::MatrixBase<Derived> &m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  if (n == 0)
    return Scalar(1);
  SquareMatrix<Scalar> a = m;
  bool negate = false;
  Scalar prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i)
        if (!(a(i, k) == Scalar(0))) {
          piv = i;
          break;
        }
      if (piv < 0)
        return Scalar(0);
      a.row(k).swap(a.row(piv));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

inline constexpr Index kLaplaceMaxOrder = 10;

/// Ground-truth oracle: recursive first-column cofactor expansion.
/// Refuses matrices larger than kLaplaceMaxOrder (factorial cost).
template <typename Derived>
typename Derived::Scalar laplace_det(const Eigen::MatrixBase<Derived> &m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  if (n > kLaplaceMaxOrder)
    throw std::length_error("laplace_det: order " + std::to_string(n) +
                            " exceeds the guard of " + std::to_string(kLaplaceMaxOrder));
  if (n == 0)
    return Scalar(1);
  if (n == 1)
    return m(0, 0);
  if (n == 2)
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Scalar det(0);
  SquareMatrix<Scalar> sub(n - 1, n - 1);
  for (Index i = 0; i < n; ++i) {
    Index r = 0;
    for (Index ii = 0; ii < n; ++ii) {
      if (ii == i)
        continue;
      for (Index jj = 1; jj < n; ++jj)
        sub(r, jj - 1) = m(ii, jj);
      ++r;
    }
    const Scalar term = m(i, 0) * laplace_det(sub);
    det = (i % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Strategy dispatch. All strategies compute the same value; only the route
/// (and its failure modes) differ.
template <typename Derived>
DetResult det(const Eigen::MatrixBase<Derived> &m, Strategy strategy,
              int threads = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  DetResult r;
  switch (strategy) {
  case Strategy::CondensationStrict:
    return dodgson_det(m, threads);
  case Strategy::CondensationWithBareissFallback:
    try {
      return dodgson_det(m, threads);
    } catch (const ZeroInteriorPivot &z) {
      r.algorithm = Algorithm::CondensationWithFallback;
      r.fallback_events.push_back({z.order, z.row, z.col});
      r.value = bareiss_det(m);
    }
    break;
  case Strategy::Bareiss:
    r.algorithm = Algorithm::Bareiss;
    r.value = bareiss_det(m);
    break;
  case Strategy::Laplace:
    r.algorithm = Algorithm::Laplace;
    r.value = laplace_det(m);
    break;
  }
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

} // namespace exactdet
