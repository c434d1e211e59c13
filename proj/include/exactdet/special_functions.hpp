#pragma once

#include "exactdet/rational.hpp"

#include <stdexcept>

namespace exactdet {

/// n! = 1 * 2 * ... * n, with 0! = 1.
inline Integer factorial(long long n) {
  if (n < 0)
    throw std::domain_error("factorial: negative argument");
  Integer p = 1;
  for (long long k = 2; k <= n; ++k)
    p *= k;
  return p;
}

/// Superfactorial 1! * 2! * ... * n!. Defined for n >= -1, where n = 0 and
/// n = -1 are both empty products equal to 1. The n = -1 extension keeps
/// the closed form defined when its (a-b-1) slot hits -1, i.e. at a = b.
inline Integer superfactorial(long long n) {
  if (n < -1)
    throw std::domain_error("superfactorial: argument below -1");
  Integer p = 1;
  Integer kfact = 1;
  for (long long k = 2; k <= n; ++k) {
    kfact *= k;
    p *= kfact;
  }
  return p;
}

/// C(m, k), with the convention C(m, k) = 0 for k < 0 or k > m.
/// Negative upper argument is rejected; generalized binomials are out of scope.
inline Integer binomial(long long m, long long k) {
  if (m < 0)
    throw std::domain_error("binomial: negative upper argument");
  if (k < 0 || k > m)
    return 0;
  if (k > m - k)
    k = m - k;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i; // exact: r is C(m-k+i, i) after this step
  }
  return r;
}

} // namespace exactdet
