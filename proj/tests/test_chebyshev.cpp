#include <gtest/gtest.h>

#include <random>

#include "dickson/chebyshev.hpp"
#include "dickson/moments.hpp"
#include "oracles.hpp"

using namespace dickson;
using RPoly = Poly<Rational>;

TEST(ChebyshevU, Examples) {
  EXPECT_TRUE(monic_chebyshev_U(-1).is_zero());
  EXPECT_EQ(monic_chebyshev_U(0), RPoly{1});
  EXPECT_EQ(monic_chebyshev_U(1), (RPoly{0, 1}));
  EXPECT_EQ(monic_chebyshev_U(2), (RPoly{Rational(-1, 4), 0, 1}));
  EXPECT_EQ(monic_chebyshev_U(4)(Rational(0)), Rational(1, 16));
  EXPECT_THROW(monic_chebyshev_U(-2), DomainError);
}

TEST(ChebyshevU, ValuesAtZero) {
  for (int n = 0; n <= 20; ++n) {
    const Rational expect = n % 2 ? Rational(0) : Rational((n / 2) % 2 ? -1 : 1) / oracle::power(Rational(2), n);
    EXPECT_EQ(monic_chebyshev_U(n)(Rational(0)), expect);
  }
}

TEST(ChebyshevU, TrigonometricValues) {
  // 2^n U_n(cos t) = sin((n+1)t) / sin t
  for (int n = 0; n <= 15; ++n) {
    const Poly<double> u = to_real(monic_chebyshev_U(n));
    for (double t : {0.3, 1.1, 2.6}) {
      const double scale = std::ldexp(abs_eval(u, std::cos(t)), n);
      EXPECT_NEAR(std::ldexp(u(std::cos(t)), n), std::sin((n + 1) * t) / std::sin(t), 1e-14 * scale);
    }
  }
}

TEST(RecurrenceSolutions, ConstantSpec) {
  const auto spec = chebyshev_u_spec();
  for (unsigned n = 0; n <= 20; ++n) {
    const auto [p, assoc] = recurrence_solutions(spec, n);
    EXPECT_EQ(p, monic_chebyshev_U(static_cast<int>(n)));
    EXPECT_EQ(assoc, monic_chebyshev_U(static_cast<int>(n) - 1));
    if (n >= 1) EXPECT_EQ(assoc.degree(), static_cast<std::ptrdiff_t>(n) - 1);
  }
  EXPECT_EQ(recurrence_solutions(spec, 1).assoc, RPoly{1});
  EXPECT_EQ(recurrence_solutions(spec, 2).p, (RPoly{Rational(-1, 4), 0, 1}));
}

TEST(RecurrenceSolutions, AssociatedIsShiftedForConstantSpecs) {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational b = oracle::random_rational(rng, -2, 2, 5);
    Rational g = oracle::random_rational(rng, -2, 2, 5);
    if (g == 0) g = 1;
    const RecurrenceSpec<Rational> spec(b, g);
    for (unsigned n = 1; n <= 20; ++n)
      EXPECT_EQ(recurrence_solutions(spec, n).assoc, recurrence_solutions(spec, n - 1).p.scaled_argument(1));
  }
}

TEST(RecurrenceSolutions, RejectsZeroGamma) {
  const RecurrenceSpec<Rational> spec(Rational(0), std::vector<Rational>{1, 1, 0, 1});
  EXPECT_NO_THROW(recurrence_solutions(spec, 2));
  EXPECT_NO_THROW(recurrence_solutions(spec, 1));
  EXPECT_THROW(recurrence_solutions(spec, 3), DomainError);
}

TEST(RecurrenceSolutions, TableBeyondExtent) {
  const RecurrenceSpec<Rational> spec(std::vector<Rational>{0, 0}, std::vector<Rational>{1, 1});
  EXPECT_THROW(recurrence_solutions(spec, 4), DomainError);
}

TEST(CoRecursive, Examples) {
  const auto spec = chebyshev_u_spec();
  for (unsigned n = 0; n <= 10; ++n)
    EXPECT_EQ(co_recursive(spec, CoRecursiveParams<Rational>{1, 0}, n), monic_chebyshev_U(static_cast<int>(n)));
  EXPECT_EQ(co_recursive(spec, CoRecursiveParams<Rational>{-1, 0}, 2), (RPoly{Rational(1, 4), 0, 1}));
  EXPECT_EQ(scaled_dickson_from_dickson(2, Rational(3), Rational(5, 2)), (RPoly{Rational(1, 4), 0, 1}));
}

TEST(CoRecursive, UnperturbedTableSpec) {
  const RecurrenceSpec<Rational> spec(std::vector<Rational>{Rational(1, 3), 2, -1, 0, 5},
                                      std::vector<Rational>{1, 2, Rational(1, 2), 3, 1});
  for (unsigned n = 0; n <= 4; ++n)
    EXPECT_EQ(co_recursive(spec, CoRecursiveParams<Rational>{1, Rational(1, 3)}, n), recurrence_solutions(spec, n).p);
}

TEST(CoRecursiveProperty, TwoPathsAgree) {
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 20; ++trial) {
    const CoRecursiveParams<Rational> cp{oracle::random_rational(rng, -3, 3, 7), oracle::random_rational(rng, -3, 3, 7)};
    std::vector<Rational> beta(16), gamma(16);
    for (auto& b : beta) b = oracle::random_rational(rng, -2, 2, 5);
    for (auto& g : gamma) g = oracle::random_positive(rng, 2, 5);
    const RecurrenceSpec<Rational> table(beta, gamma);
    const RecurrenceSpec<Rational> constant(beta[0], gamma[0]);
    for (unsigned n = 0; n <= 15; ++n) {
      EXPECT_EQ(co_recursive(table, cp, n), co_recursive_direct(table, cp, n)) << "n=" << n;
      EXPECT_EQ(co_recursive(constant, cp, n), co_recursive_direct(constant, cp, n)) << "n=" << n;
    }
  }
}

TEST(ScaledDickson, Examples) {
  const Rational k(7, 3);
  EXPECT_EQ(scaled_dickson_d(0, k), RPoly{2 - k});
  EXPECT_EQ(scaled_dickson_d(1, k), (RPoly{0, 1}));
  EXPECT_EQ(scaled_dickson_d(2, Rational(2)), (RPoly{0, 0, 1}));
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(scaled_dickson_d(n, Rational(2)), RPoly::x() * monic_chebyshev_U(n - 1));
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(scaled_dickson_d(n, Rational(1)), monic_chebyshev_U(n));
}

TEST(ScaledDickson, IndependentOfA) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational k = oracle::random_rational(rng, -5, 5, 7);
    for (unsigned n = 0; n <= 12; ++n) {
      const RPoly d = scaled_dickson_d(n, k);
      for (int s = 0; s < 3; ++s)
        EXPECT_EQ(scaled_dickson_from_dickson(n, k, oracle::random_positive(rng, 3, 6)), d);
    }
  }
}

TEST(ScaledDickson, MonicSpecReproducesFamily) {
  const Rational k(-3, 2);
  const auto spec = scaled_dickson_spec(k);
  for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(recurrence_solutions(spec, n).p, scaled_dickson_d(n, k));
  EXPECT_THROW(scaled_dickson_spec(Rational(2)), DomainError);
}

TEST(ChebyshevOrthogonality, MonicNormalization) {
  // (2/pi) sqrt(1-x^2) on [-1,1] is L_1 at a = 1/4.
  const MomentFunctional f(1.0, 0.25);
  std::vector<Poly<double>> u;
  for (int n = 0; n <= 12; ++n) u.push_back(to_real(monic_chebyshev_U(n)));
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= 12; ++m) {
      const double v = functional_apply(f, u[n] * u[m]);
      EXPECT_NEAR(v, n == m ? std::ldexp(1.0, -2 * n) : 0.0, 1e-9) << n << "," << m;
    }
  EXPECT_NEAR(functional_apply(f, u[1] * u[1]), 0.25, 1e-14);
}

TEST(CoefficientSeqTest, Variants) {
  const CoefficientSeq<double> c(2.0);
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(c[1000], 2.0);
  const CoefficientSeq<double> t(std::vector<double>{1, 2});
  EXPECT_FALSE(t.has_tail());
  EXPECT_EQ(t.extent(), 2u);
  EXPECT_THROW(t[2], DomainError);
  const CoefficientSeq<double> m(std::vector<double>{1, 2}, 3.0);
  EXPECT_FALSE(m.is_constant());
  EXPECT_EQ(m[1], 2.0);
  EXPECT_EQ(m[7], 3.0);
}
