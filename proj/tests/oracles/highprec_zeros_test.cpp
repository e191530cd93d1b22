// 50-digit bisection and evaluation as the reference for the zero solver.
#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <vector>

#include "turan/evalkernel.hpp"
#include "turan/families.hpp"
#include "turan/zerofinder.hpp"

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;
using namespace turan;

// p_k(x) in the form's own normalization, evaluated in 50 digits.
Big big_eval(const RecurrenceSpec& spec, int k, const Big& x) {
  Big prev = 0;
  Big curr = 1;
  const bool half_line = spec.form() == RecurrenceForm::HalfLine;
  for (int i = 0; i < k; ++i) {
    const Coefficients co = spec.coefficient(i);
    const Big lin = half_line ? Big(co.a) - x : x - Big(co.a);
    const Big next = (lin * curr - Big(co.c) * prev) / Big(co.b);
    prev = curr;
    curr = next;
  }
  return curr;
}

// Zeros by sign-change scanning on a fine grid, then 50-digit bisection.
std::vector<Big> big_zeros(const RecurrenceSpec& spec, int k, double lo, double hi) {
  std::vector<Big> out;
  const int n = 200 * k;
  Big a = lo;
  Big fa = big_eval(spec, k, a);
  for (int i = 1; i <= n; ++i) {
    Big b = Big(lo) + (Big(hi) - Big(lo)) * i / n;
    Big fb = big_eval(spec, k, b);
    if (fb == 0) {
      out.push_back(b);
    } else if ((fa < 0) != (fb < 0) && fa != 0) {
      Big l = a, r = b, fl = fa;
      for (int it = 0; it < 200; ++it) {
        const Big m = (l + r) / 2;
        const Big fm = big_eval(spec, k, m);
        if ((fm < 0) == (fl < 0)) {
          l = m;
          fl = fm;
        } else {
          r = m;
        }
      }
      out.push_back((l + r) / 2);
    }
    a = b;
    fa = fb;
  }
  return out;
}

TEST(HighPrecision, HermiteDegreeSixLargestZero) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const auto ref = big_zeros(h, 6, -4.0, 4.0);
  ASSERT_EQ(ref.size(), 6u);
  EXPECT_NEAR(static_cast<double>(ref.back()), 2.350605, 1e-6);
  EXPECT_NEAR(extreme_zeros(h, 6).largest, static_cast<double>(ref.back()), 1e-14);
}

TEST(HighPrecision, AllZerosOfSeveralFamilies) {
  struct Case {
    const char* name;
    int k;
    double lo, hi;
  };
  for (const Case& c : {Case{"hermite-monic", 20, -7, 7}, Case{"hermite-monic", 50, -11, 11},
                        Case{"probabilist-hermite", 30, -11, 11}, Case{"power-law", 15, -40, 40},
                        Case{"geometric", 12, -130, 130}, Case{"laguerre-normalized", 25, 0, 110},
                        Case{"chebyshev", 40, -1.01, 1.01}}) {
    const RecurrenceSpec s = make_builtin(c.name);
    const auto ref = big_zeros(s, c.k, c.lo, c.hi);
    ASSERT_EQ(static_cast<int>(ref.size()), c.k) << c.name;
    const ZeroSet z = zeros(s, c.k);
    for (int i = 0; i < c.k; ++i) {
      const double want = static_cast<double>(ref[static_cast<std::size_t>(i)]);
      EXPECT_NEAR(z.zeros[static_cast<std::size_t>(i)], want, 1e-12 * (1.0 + std::abs(want)))
          << c.name << ' ' << i;
    }
  }
}

TEST(HighPrecision, HermiteFiftyFarFromZeros) {
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const Big ref = big_eval(h, 50, Big(20));
  const double got = eval_sequence(h, 50, 20.0).value();
  EXPECT_NEAR(got / static_cast<double>(ref), 1.0, 1e-12);
}

TEST(HighPrecision, DeepDegreesStayScaled) {
  // k = 400 at x = 60: the value is near 10^700, beyond double range without rescaling.
  const RecurrenceSpec h = make_builtin("hermite-monic");
  const Big ref = big_eval(h, 400, Big(60));
  const EvalState s = eval_sequence(h, 400, 60.0);
  const Big got = Big(s.curr) * boost::multiprecision::ldexp(Big(1), s.scale_exp);
  EXPECT_NEAR(static_cast<double>(got / ref), 1.0, 1e-11);
}

}  // namespace
