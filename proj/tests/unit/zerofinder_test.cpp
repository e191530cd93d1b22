#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "turan/evalkernel.hpp"
#include "turan/families.hpp"
#include "turan/zerofinder.hpp"

namespace {

using namespace turan;

TEST(ZeroFinder, HermiteDegreeTwo) {
  const ZeroSet z = zeros(make_builtin("hermite-monic"), 2);
  ASSERT_EQ(z.k(), 2);
  EXPECT_NEAR(z.zeros[0], -std::sqrt(0.5), 2e-16);
  EXPECT_NEAR(z.zeros[1], std::sqrt(0.5), 2e-16);
}

TEST(ZeroFinder, ChebyshevClosedForm) {
  const RecurrenceSpec t = make_builtin("chebyshev");
  for (int k = 1; k <= 64; ++k) {
    const ZeroSet z = zeros(t, k);
    for (int i = 1; i <= k; ++i) {
      const double expected = std::cos((2.0 * (k - i + 1) - 1.0) * M_PI / (2.0 * k));
      EXPECT_NEAR(z.zeros[static_cast<std::size_t>(i - 1)], expected, 1e-12) << k << ' ' << i;
    }
  }
}

TEST(ZeroFinder, LaguerreDegreeTwo) {
  const ZeroSet z = zeros(make_builtin("laguerre-normalized"), 2);
  EXPECT_NEAR(z.zeros[0], 2.0 - std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(z.zeros[1], 2.0 + std::sqrt(2.0), 1e-14);
}

TEST(ZeroFinder, DegreeOneIsDiagonal) {
  EXPECT_EQ(zeros(make_builtin("hermite-monic"), 1).zeros[0], 0.0);
  const double alpha[] = {3.0};
  // p_1 = 1 - x / (alpha + 1) for normalized Laguerre.
  EXPECT_NEAR(zeros(make_builtin("laguerre-normalized", alpha), 1).zeros[0], 4.0, 1e-13);
}

TEST(ZeroFinder, SortedSymmetricAndEnclosed) {
  for (const char* name : {"hermite-monic", "probabilist-hermite", "power-law", "geometric"}) {
    const RecurrenceSpec s = make_builtin(name);
    for (int k : {3, 10, 37}) {
      const double tol = 1e-12;
      const ZeroSet z = zeros(s, k, tol);
      ASSERT_EQ(z.k(), k);
      for (int i = 0; i < k; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (i > 0) {
          EXPECT_LT(z.zeros[u - 1], z.zeros[u]);
        }
        EXPECT_NEAR(z.zeros[u], -z.zeros[static_cast<std::size_t>(k - 1 - i)],
                    1e-11 * (1 + std::abs(z.zeros[u])));
        EXPECT_LE(z.enclosure[u], 0.5 * tol * (1.0 + std::abs(z.zeros[u])) * 1.0000001);
      }
    }
  }
}

TEST(ZeroFinder, StrictInterlacing) {
  for (const char* name :
       {"hermite-monic", "geometric", "chebyshev", "laguerre-normalized", "power-law"}) {
    const RecurrenceSpec s = make_builtin(name);
    for (int k = 2; k <= 30; ++k) {
      const ZeroSet hi = zeros(s, k);
      const ZeroSet lo = zeros(s, k - 1);
      for (int i = 0; i < k - 1; ++i) {
        const auto u = static_cast<std::size_t>(i);
        EXPECT_LT(hi.zeros[u], lo.zeros[u]) << name << ' ' << k;
        EXPECT_LT(lo.zeros[u], hi.zeros[u + 1]) << name << ' ' << k;
      }
    }
  }
}

TEST(ZeroFinder, SturmCountAgreesWithZeros) {
  const RecurrenceSpec s = make_builtin("power-law");
  const int k = 15;
  const ZeroSet z = zeros(s, k);
  for (int i = 0; i + 1 < k; ++i) {
    const double mid = 0.5 * (z.zeros[static_cast<std::size_t>(i)] + z.zeros[static_cast<std::size_t>(i + 1)]);
    EXPECT_EQ(sturm_count(s, k, mid), k - i - 1);
  }
}

TEST(ZeroFinder, ZerosAreRootsOfTheRecurrence) {
  const RecurrenceSpec s = make_builtin("geometric");
  const int k = 20;
  for (double x : zeros(s, k).zeros) {
    const EvalState lo = eval_sequence(s, k, std::nextafter(x, -INFINITY) - 1e-9 * (1 + std::abs(x)));
    const EvalState hi = eval_sequence(s, k, std::nextafter(x, INFINITY) + 1e-9 * (1 + std::abs(x)));
    EXPECT_EQ(lo.sign_changes, hi.sign_changes + 1);
  }
}

TEST(ZeroFinder, GershgorinEnclosesSpectrum) {
  for (const char* name : {"hermite-monic", "geometric", "chebyshev", "laguerre-normalized"}) {
    const RecurrenceSpec s = make_builtin(name);
    for (int k : {1, 2, 9, 40}) {
      const Interval g = gershgorin(jacobi_matrix(s, k));
      const ZeroSet z = zeros(s, k);
      EXPECT_LT(g.lo, z.zeros.front());
      EXPECT_GT(g.hi, z.zeros.back());
    }
  }
}

TEST(ZeroFinder, JacobiEntries) {
  const JacobiMatrix j = jacobi_matrix(make_builtin("hermite-monic"), 4);
  ASSERT_EQ(j.k(), 4);
  ASSERT_EQ(j.offdiag.size(), 3u);
  for (double d : j.diag) EXPECT_EQ(d, 0.0);
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(j.offdiag[static_cast<std::size_t>(i)], std::sqrt(0.5 * (i + 1)));
  const JacobiMatrix l = jacobi_matrix(make_builtin("laguerre-normalized"), 3);
  EXPECT_DOUBLE_EQ(l.diag[0], 1.0);
  EXPECT_DOUBLE_EQ(l.diag[1], 3.0);
  EXPECT_DOUBLE_EQ(l.offdiag[0], 1.0);
}

TEST(ZeroFinder, ExtremeAndIndexedAgreeWithFullSet) {
  const RecurrenceSpec s = make_builtin("probabilist-hermite");
  const int k = 25;
  const ZeroSet z = zeros(s, k);
  const ExtremeZeros e = extreme_zeros(s, k);
  EXPECT_NEAR(e.smallest, z.zeros.front(), 1e-12);
  EXPECT_NEAR(e.largest, z.zeros.back(), 1e-12);
  for (int i = 1; i <= k; ++i) {
    EXPECT_NEAR(zero_at(s, k, i), z.zeros[static_cast<std::size_t>(i - 1)], 1e-11);
  }
  EXPECT_THROW(zero_at(s, k, 0), InputError);
  EXPECT_THROW(zero_at(s, k, k + 1), InputError);
}

TEST(ZeroFinder, ScalingMovesZeros) {
  const RecurrenceSpec a = RecurrenceSpec::linear(1.0, 0.0);
  const RecurrenceSpec b = RecurrenceSpec::linear(9.0, 0.0);
  const ZeroSet za = zeros(a, 17);
  const ZeroSet zb = zeros(b, 17);
  for (int i = 0; i < 17; ++i) {
    EXPECT_NEAR(zb.zeros[static_cast<std::size_t>(i)], 3.0 * za.zeros[static_cast<std::size_t>(i)], 1e-11);
  }
}

TEST(ZeroFinder, InputValidation) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  EXPECT_THROW(zeros(h, 0), InputError);
  EXPECT_THROW(zeros(h, 5, 1e-16), InputError);
  const RecurrenceSpec t = RecurrenceSpec::table(RecurrenceForm::SymmetricMonic, {0.0, 1.0, 2.0});
  EXPECT_NO_THROW(zeros(t, 3));
  EXPECT_THROW(zeros(t, 4), CoefficientError);
}

TEST(ZeroFinder, RayleighCertificatesAreLowerBounds) {
  for (const char* name : {"hermite-monic", "probabilist-hermite", "power-law", "geometric"}) {
    const RecurrenceSpec s = make_builtin(name);
    for (int k : {2, 5, 20, 80}) {
      const double top = extreme_zeros(s, k).largest;
      const RayleighCertificate c = rayleigh_lower(s, k);
      EXPECT_LE(c.value, top + 1e-12 * (1 + std::abs(top))) << name << ' ' << k;
      double norm = 0.0;
      for (double v : c.vector) norm += v * v;
      EXPECT_NEAR(norm, 1.0, 1e-14);
    }
  }
}

TEST(ZeroFinder, RayleighExplicitVector) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const std::vector<double> e0 = {2.0, 0.0, 0.0};
  EXPECT_EQ(rayleigh_lower(h, 3, e0).value, 0.0);
  const std::vector<double> v = {1.0, 1.0, 0.0};
  // (2 * sqrt(1/2)) / 2.
  EXPECT_NEAR(rayleigh_lower(h, 3, v).value, std::sqrt(0.5), 1e-15);
  EXPECT_THROW(rayleigh_lower(h, 3, std::vector<double>{0.0, 0.0, 0.0}), InputError);
  EXPECT_THROW(rayleigh_lower(h, 3, std::vector<double>{1.0}), InputError);
}

TEST(ZeroFinder, RayleighConvergedMatchesLargestZero) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const double top = extreme_zeros(h, 20).largest;
  const RayleighCertificate c = rayleigh_converged(h, 20);
  EXPECT_NEAR(c.value, top, 1e-8);
  EXPECT_LE(c.value, top + 1e-12 * (1 + top));
}

}  // namespace
