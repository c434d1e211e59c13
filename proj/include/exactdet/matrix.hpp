#pragma once

#include "exactdet/rational.hpp"

#include <Eigen/Core>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace Eigen {

template <> struct NumTraits<exactdet::Rational> : GenericNumTraits<exactdet::Rational> {
  typedef exactdet::Rational Real;
  typedef exactdet::Rational NonInteger;
  typedef exactdet::Rational Nested;
  typedef exactdet::Rational Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 8
  };
};

} // namespace Eigen

namespace exactdet {

template <typename Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = SquareMatrix<Rational>;
using Index = Eigen::Index;

/// Matrix text format error, with 1-based line/column of the offending token.
class MatrixFormatError : public std::runtime_error {
public:
  MatrixFormatError(std::string msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + std::move(msg)),
        line(line), column(column) {}
  int line;
  int column;
};

/// The r x r contiguous submatrix of A whose upper-left corner is entry (k, l),
/// 1-based. Read-only view, no copy.
template <typename Derived>
auto window(const Eigen::MatrixBase<Derived> &A, Index k, Index l, Index r) {
  if (k < 1 || l < 1 || r < 0 || k + r - 1 > A.rows() || l + r - 1 > A.cols())
    throw std::out_of_range("window (" + std::to_string(k) + "," + std::to_string(l) +
                            ") size " + std::to_string(r) + " exceeds a " +
                            std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                            " matrix");
  return A.block(k - 1, l - 1, r, r);
}

/// Parse the canonical text format: first line is the dimension n, then n
/// lines of n whitespace-separated Integer or "p/q" entries.
inline RationalMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line))
    throw MatrixFormatError("missing dimension line", 1, 1);
  long long n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoll(std::string(detail::trim(line)), &pos);
    if (pos != detail::trim(line).size())
      throw std::invalid_argument("trailing junk");
  } catch (const std::exception &) {
    throw MatrixFormatError("dimension is not a nonnegative integer: '" + line + "'", 1, 1);
  }
  if (n < 0)
    throw MatrixFormatError("negative dimension", 1, 1);

  RationalMatrix m(n, n);
  for (long long i = 0; i < n; ++i) {
    const int lineno = static_cast<int>(i) + 2;
    if (!std::getline(in, line))
      throw MatrixFormatError("expected " + std::to_string(n) + " rows, got " +
                                  std::to_string(i), lineno, 1);
    std::istringstream row(line);
    std::string tok;
    for (long long j = 0; j < n; ++j) {
      if (!(row >> tok))
        throw MatrixFormatError("row has " + std::to_string(j) + " entries, expected " +
                                    std::to_string(n), lineno, static_cast<int>(j) + 1);
      try {
        m(i, j) = Rational::parse(tok);
      } catch (const std::exception &e) {
        throw MatrixFormatError(std::string("bad entry '") + tok + "': " + e.what(),
                                lineno, static_cast<int>(j) + 1);
      }
    }
    if (row >> tok)
      throw MatrixFormatError("row has more than " + std::to_string(n) + " entries",
                              lineno, static_cast<int>(n) + 1);
  }
  return m;
}

/// Canonical text form; parse_matrix(render_matrix(M)) == M.
inline std::string render_matrix(const RationalMatrix &m) {
  std::string out = std::to_string(m.rows());
  out += '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0)
        out += ' ';
      out += m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

template <typename DerivedA, typename DerivedB>
bool matrices_equal(const Eigen::MatrixBase<DerivedA> &a,
                    const Eigen::MatrixBase<DerivedB> &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j)))
        return false;
  return true;
}

} // namespace exactdet
