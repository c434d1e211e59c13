#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exactdet/determinant.hpp"
#include "exactdet/random_matrix.hpp"

using namespace exactdet;

namespace {

RationalMatrix from_text(const char *t) { return parse_matrix(t); }

const char *kRegular3 = "3\n1 2 3\n4 5 6\n7 8 10\n";
const char *kZeroInterior3 = "3\n1 1 1\n1 0 1\n1 1 2\n";

} // namespace

TEST_CASE("condense_step reproduces the 2x2 minor layer") {
  const auto a = from_text(kRegular3);
  auto s = initial_condensation_state(a);
  CHECK(s.order == 1);
  CHECK(matrices_equal(s.layer_prev, a));
  CHECK(s.layer_prevprev.rows() == 4);
  CHECK(s.layer_prevprev(0, 0) == Rational(1));

  s = condense_step(s);
  CHECK(s.order == 2);
  REQUIRE(s.layer_prev.rows() == 2);
  CHECK(s.layer_prev(0, 0) == Rational(-3));
  CHECK(s.layer_prev(0, 1) == Rational(-3));
  CHECK(s.layer_prev(1, 0) == Rational(-3));
  CHECK(s.layer_prev(1, 1) == Rational(2));

  s = condense_step(s);
  CHECK(s.order == 3);
  REQUIRE(s.layer_prev.rows() == 1);
  CHECK(s.layer_prev(0, 0) == Rational(-3)); // (-3*2 - (-3)(-3)) / 5
}

TEST_CASE("condense_step reports the zero interior pivot") {
  const auto a = from_text(kZeroInterior3);
  auto s = condense_step(initial_condensation_state(a));
  try {
    condense_step(s);
    FAIL("expected ZeroInteriorPivot");
  } catch (const ZeroInteriorPivot &z) {
    CHECK(z.order == 2);
    CHECK(z.row == 2);
    CHECK(z.col == 2);
  }
}

TEST_CASE("dodgson_det on the worked examples") {
  CHECK(dodgson_det(from_text(kRegular3)).value == Rational(-3));
  CHECK(dodgson_det(RationalMatrix(0, 0)).value == Rational(1));
  RationalMatrix one(1, 1);
  one(0, 0) = Rational(7, 3);
  CHECK(dodgson_det(one).value == Rational(7, 3));
  CHECK_THROWS_AS(dodgson_det(from_text(kZeroInterior3)), ZeroInteriorPivot);
}

TEST_CASE("strategy dispatch and fallback provenance") {
  const auto a = from_text(kZeroInterior3);
  const auto r = det(a, Strategy::CondensationWithBareissFallback);
  CHECK(r.value == Rational(-1));
  CHECK(r.algorithm == Algorithm::CondensationWithFallback);
  REQUIRE(r.fallback_events.size() == 1);
  CHECK(r.fallback_events[0].order == 2);
  CHECK(r.fallback_events[0].row == 2);
  CHECK(r.fallback_events[0].col == 2);

  const auto clean = det(from_text(kRegular3), Strategy::CondensationWithBareissFallback);
  CHECK(clean.algorithm == Algorithm::Condensation);
  CHECK(clean.fallback_events.empty());

  const auto eye = det(RationalMatrix(SquareMatrix<Rational>::Identity(5, 5)),
                       Strategy::CondensationWithBareissFallback);
  CHECK(eye.value == Rational(1));

  RationalMatrix zrow(3, 3);
  zrow << Rational(0), Rational(0), Rational(0),
          Rational(1), Rational(2), Rational(3),
          Rational(4), Rational(5), Rational(7);
  CHECK(det(zrow, Strategy::CondensationWithBareissFallback).value == Rational(0));
}

TEST_CASE("bareiss_det basics") {
  CHECK(bareiss_det(from_text("2\n6 4\n10 10\n")) == Rational(20));
  CHECK(bareiss_det(from_text("2\n0 1\n1 0\n")) == Rational(-1));
  CHECK(bareiss_det(RationalMatrix(0, 0)) == Rational(1));
  CHECK(bareiss_det(from_text(kZeroInterior3)) == Rational(-1));
}

TEST_CASE("laplace_det basics and guard") {
  CHECK(laplace_det(from_text("2\n1 2\n3 4\n")) == Rational(-2));
  RationalMatrix one(1, 1);
  one(0, 0) = Rational(7, 3);
  CHECK(laplace_det(one) == Rational(7, 3));
  CHECK_THROWS_AS(laplace_det(RationalMatrix(SquareMatrix<Rational>::Identity(11, 11))),
                  std::length_error);
}

TEST_CASE("oracle agreement on random small-entry matrices") {
  RandomMatrixSource src(20260823);
  int fallbacks = 0;
  for (int t = 0; t < 500; ++t) {
    const Index n = 1 + static_cast<Index>(t % 7);
    const auto m = src.next(n, -9, 9);
    const Rational viaLaplace = laplace_det(m);
    CHECK(bareiss_det(m) == viaLaplace);
    const auto r = det(m, Strategy::CondensationWithBareissFallback);
    CHECK(r.value == viaLaplace);
    if (!r.fallback_events.empty())
      ++fallbacks;
  }
  CHECK(fallbacks > 0); // small entries make zero interior pivots common
}

TEST_CASE("every condensation layer entry is the minor it claims to be") {
  RandomMatrixSource src(99);
  std::mt19937_64 sizes(99);
  int done = 0;
  while (done < 25) {
    const Index n = 2 + static_cast<Index>(sizes() % 5);
    const auto m = src.next(n, -9, 9);
    try {
      auto s = initial_condensation_state(m);
      while (s.order < n) {
        s = condense_step(s);
        const Index cnt = s.layer_prev.rows();
        for (Index k = 1; k <= cnt; ++k)
          for (Index l = 1; l <= cnt; ++l)
            CHECK(s.layer_prev(k - 1, l - 1) ==
                  laplace_det(window(m, k, l, s.order)));
      }
    } catch (const ZeroInteriorPivot &) {
      continue; // only zero-pivot-free matrices qualify
    }
    ++done;
  }
}

TEST_CASE("multilinearity: scaling one row scales the determinant") {
  RandomMatrixSource src(5);
  for (int t = 0; t < 10; ++t) {
    const Index n = 2 + static_cast<Index>(t % 4);
    const auto m = src.next(n, -9, 9);
    const Rational c(3, 7);
    RationalMatrix scaled = m;
    for (Index j = 0; j < n; ++j)
      scaled(1, j) = scaled(1, j) * c;
    for (const auto strat : {Strategy::CondensationWithBareissFallback,
                             Strategy::Bareiss, Strategy::Laplace})
      CHECK(det(scaled, strat).value == c * det(m, strat).value);
  }
}

TEST_CASE("transpose invariance") {
  RandomMatrixSource src(6);
  for (int t = 0; t < 10; ++t) {
    const Index n = 1 + static_cast<Index>(t % 6);
    const auto m = src.next(n, -9, 9);
    const RationalMatrix mt = m.transpose();
    for (const auto strat : {Strategy::CondensationWithBareissFallback,
                             Strategy::Bareiss, Strategy::Laplace})
      CHECK(det(mt, strat).value == det(m, strat).value);
  }
}

TEST_CASE("determinism of values and fallback events") {
  RandomMatrixSource src(77);
  for (int t = 0; t < 20; ++t) {
    const auto m = src.next(5, -3, 3);
    const auto r1 = det(m, Strategy::CondensationWithBareissFallback);
    const auto r2 = det(m, Strategy::CondensationWithBareissFallback);
    CHECK(r1.value == r2.value);
    CHECK(r1.algorithm == r2.algorithm);
    CHECK(r1.fallback_events == r2.fallback_events);
  }
}

TEST_CASE("threaded condensation is bit-identical to sequential") {
  RandomMatrixSource src(8);
  for (int t = 0; t < 5; ++t) {
    const auto m = src.next(12, -9, 9);
    const auto seq = det(m, Strategy::CondensationWithBareissFallback, 1);
    const auto par = det(m, Strategy::CondensationWithBareissFallback, 4);
    CHECK(seq.value == par.value);
    CHECK(seq.fallback_events == par.fallback_events);
  }
}
