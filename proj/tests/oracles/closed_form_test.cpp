// Closed forms and constants checked against independent evaluations.
#include <gtest/gtest.h>

#include <boost/math/special_functions/airy.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "turan/bounds.hpp"
#include "turan/families.hpp"
#include "turan/zerofinder.hpp"

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;
using namespace turan;

// Largest root in y of a cubic with a sign change on [lo, hi], in 50 digits.
template <class F>
Big big_root(F f, Big lo, Big hi) {
  Big flo = f(lo);
  for (int it = 0; it < 220; ++it) {
    const Big m = (lo + hi) / 2;
    const Big fm = f(m);
    if ((fm < 0) == (flo < 0)) {
      lo = m;
      flo = fm;
    } else {
      hi = m;
    }
  }
  return (lo + hi) / 2;
}

TEST(ClosedForms, AiryConstant) {
  const double a1 = -boost::math::airy_ai_zero<double>(1);
  EXPECT_NEAR(kAiryI1, std::cbrt(3.0) * a1, 1e-14);
}

TEST(ClosedForms, SmallHermiteZeros) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const ZeroSet z3 = zeros(h, 3);
  EXPECT_NEAR(z3.zeros[1], 0.0, 1e-15);
  EXPECT_NEAR(z3.zeros[2], std::sqrt(1.5), 1e-15);
  // x^4 - 3x^2 + 3/4.
  const ZeroSet z4 = zeros(h, 4);
  EXPECT_NEAR(z4.zeros[3], std::sqrt((3.0 + std::sqrt(6.0)) / 2.0), 1e-15);
  EXPECT_NEAR(z4.zeros[2], std::sqrt((3.0 - std::sqrt(6.0)) / 2.0), 1e-15);
}

TEST(ClosedForms, Vir1HermiteRoot) {
  for (int k : {3, 7, 20, 64, 100}) {
    const double ckm1 = 0.5 * (k - 1), ck = 0.5 * k, ck1 = 0.5 * (k + 1);
    const double top = vir1_root(ckm1, ck, ck1);
    EXPECT_NEAR(top, vir1_hermite_closed_form(k), 1e-10) << k;
    const double s = std::cbrt(std::pow(std::sqrt(double(k)) + std::sqrt(k - 1.0), 2.0));
    EXPECT_NEAR(top, std::sqrt(2.0 * k - (1.0 + s) * (1.0 + s) / (2.0 * s)), 1e-10) << k;
  }
}

TEST(ClosedForms, MarikSexticIn50Digits) {
  for (int k : {2, 5, 30, 100, 200}) {
    const Big kk = k;
    auto f = [&](const Big& y) {
      return 8 * kk * kk * (kk + 1) - (6 * kk + 1) * (2 * kk + 1) * y + (6 * kk + 2) * y * y - y * y * y;
    };
    // The positive root sits just below 2k.
    const Big y = big_root(f, Big(1), Big(2 * k + 2));
    EXPECT_NEAR(marik_closed_form(k), static_cast<double>(sqrt(y)), 1e-12 * (1 + std::sqrt(2.0 * k))) << k;
  }
}

}  // namespace
