#include "turan/zerofinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "turan/evalkernel.hpp"

namespace turan {

namespace {

constexpr int kMaxBisectionSteps = 4000;

void require_degree(int k) {
  if (k < 1) throw InputError("degree must be at least 1");
}

void require_tol(double tol) {
  if (!(tol >= 1e-14)) throw InputError("tolerance must be at least 1e-14");
}

struct Bisected {
  double value;
  double half_width;
};

// Newton steps on p_k inside a certified bracket; the midpoint is kept when
// an iterate leaves the bracket.
double polish(const RecurrenceSpec& spec, int k, double lo, double hi) {
  const bool half_line = spec.form() == RecurrenceForm::HalfLine;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    double prev = 0.0, curr = 1.0, dprev = 0.0, dcurr = 0.0;
    for (int i = 0; i < k; ++i) {
      const Coefficients co = spec.coefficient(i);
      const double lin = half_line ? co.a - x : x - co.a;
      const double dlin = half_line ? -1.0 : 1.0;
      const double next = (lin * curr - co.c * prev) / co.b;
      const double dnext = (lin * dcurr + dlin * curr - co.c * dprev) / co.b;
      prev = curr;
      curr = next;
      dprev = dcurr;
      dcurr = dnext;
      const double m = std::max({std::abs(curr), std::abs(prev), std::abs(dcurr), std::abs(dprev)});
      if (m > 0x1p64 || (m < 0x1p-64 && m > 0.0)) {
        const int e = -std::ilogb(m);
        prev = std::ldexp(prev, e);
        curr = std::ldexp(curr, e);
        dprev = std::ldexp(dprev, e);
        dcurr = std::ldexp(dcurr, e);
      }
    }
    if (curr == 0.0) return x;
    if (!(dcurr != 0.0) || !std::isfinite(curr / dcurr)) break;
    const double next = x - curr / dcurr;
    if (!(next >= lo && next <= hi)) return 0.5 * (lo + hi);
    if (next == x) return x;
    const bool small = std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                                 std::abs(next);
    x = next;
    if (small) break;
  }
  return x;
}

// The index-th smallest zero lies above x exactly when at least k - index + 1
// zeros exceed x.
Bisected bisect_zero(const RecurrenceSpec& spec, int k, int index, Interval bracket, double tol) {
  const int need = k - index + 1;
  double lo = bracket.lo;
  double hi = bracket.hi;
  for (int step = 0; step < kMaxBisectionSteps; ++step) {
    double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol * (1.0 + std::abs(mid)) || mid <= lo || mid >= hi) break;
    EvalState s = eval_sequence(spec, k, mid);
    if (s.at_zero()) {
      mid = std::nextafter(mid, hi);
      if (mid >= hi) break;
      s = eval_sequence(spec, k, mid);
    }
    if (s.sign_changes >= need) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {polish(spec, k, lo, hi), 0.5 * (hi - lo)};
}

Interval checked_bracket(const RecurrenceSpec& spec, int k) {
  const Interval g = gershgorin(jacobi_matrix(spec, k));
  if (sturm_count(spec, k, g.lo) != k || sturm_count(spec, k, g.hi) != 0) {
    throw SolverError("Gershgorin bracket does not enclose all zeros of p_" + std::to_string(k));
  }
  return g;
}

double quadratic_form(const JacobiMatrix& j, std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += j.diag[i] * v[i] * v[i];
  for (std::size_t i = 0; i + 1 < v.size(); ++i) sum += 2.0 * j.offdiag[i] * v[i] * v[i + 1];
  return sum;
}

double normalize(std::vector<double>& v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || !std::isfinite(scale)) return 0.0;
  double sq = 0.0;
  for (double& x : v) {
    x /= scale;
    sq += x * x;
  }
  const double norm = std::sqrt(sq);
  for (double& x : v) x /= norm;
  return norm * scale;
}

RayleighCertificate certificate(const JacobiMatrix& j, std::vector<double> v) {
  if (normalize(v) == 0.0) throw InputError("Rayleigh vector must be finite and nonzero");
  RayleighCertificate cert;
  cert.value = quadratic_form(j, v);
  cert.vector = std::move(v);
  return cert;
}

}  // namespace

JacobiMatrix jacobi_matrix(const RecurrenceSpec& spec, int k) {
  require_degree(k);
  JacobiMatrix j;
  j.diag.resize(static_cast<std::size_t>(k));
  j.offdiag.resize(static_cast<std::size_t>(k - 1));
  Coefficients here = spec.coefficient(0);
  for (int i = 0; i < k; ++i) {
    j.diag[static_cast<std::size_t>(i)] = here.a;
    if (i + 1 < k) {
      const Coefficients next = spec.coefficient(i + 1);
      const double product = here.b * next.c;
      if (!(product > 0.0)) {
        throw CoefficientError("b_i c_{i+1} must be positive", i);
      }
      j.offdiag[static_cast<std::size_t>(i)] = std::sqrt(product);
      here = next;
    }
  }
  return j;
}

Interval gershgorin(const JacobiMatrix& j) {
  const int k = j.k();
  double lo = INFINITY;
  double hi = -INFINITY;
  double reach = 0.0;
  for (int i = 0; i < k; ++i) {
    double r = 0.0;
    if (i > 0) r += j.offdiag[static_cast<std::size_t>(i - 1)];
    if (i + 1 < k) r += j.offdiag[static_cast<std::size_t>(i)];
    const double d = j.diag[static_cast<std::size_t>(i)];
    lo = std::min(lo, d - r);
    hi = std::max(hi, d + r);
    reach = std::max(reach, std::abs(d) + r);
  }
  const double pad = 1e-10 * (1.0 + reach);
  return {lo - pad, hi + pad};
}

int sturm_count(const RecurrenceSpec& spec, int k, double x) {
  return eval_sequence(spec, k, x).sign_changes;
}

ZeroSet zeros(const RecurrenceSpec& spec, int k, double tol) {
  require_degree(k);
  require_tol(tol);
  const Interval bracket = checked_bracket(spec, k);
  ZeroSet out;
  out.zeros.reserve(static_cast<std::size_t>(k));
  out.enclosure.reserve(static_cast<std::size_t>(k));
  Interval search = bracket;
  for (int i = 1; i <= k; ++i) {
    const Bisected b = bisect_zero(spec, k, i, search, tol);
    out.zeros.push_back(b.value);
    out.enclosure.push_back(b.half_width);
    // x_{i+1} > x_i > b.value - b.half_width.
    search.lo = b.value - b.half_width;
  }
  return out;
}

double zero_at(const RecurrenceSpec& spec, int k, int index, double tol) {
  require_degree(k);
  require_tol(tol);
  if (index < 1 || index > k) throw InputError("zero index out of range");
  return bisect_zero(spec, k, index, checked_bracket(spec, k), tol).value;
}

ExtremeZeros extreme_zeros(const RecurrenceSpec& spec, int k, double tol) {
  require_degree(k);
  require_tol(tol);
  const Interval bracket = checked_bracket(spec, k);
  const Bisected lo = bisect_zero(spec, k, 1, bracket, tol);
  const Bisected hi = bisect_zero(spec, k, k, bracket, tol);
  return {lo.value, hi.value, lo.half_width, hi.half_width};
}

RayleighCertificate rayleigh_lower(const RecurrenceSpec& spec, int k,
                                   std::span<const double> vector) {
  require_degree(k);
  if (vector.size() != static_cast<std::size_t>(k)) {
    throw InputError("Rayleigh vector length must equal k");
  }
  return certificate(jacobi_matrix(spec, k), std::vector<double>(vector.begin(), vector.end()));
}

RayleighCertificate rayleigh_lower(const RecurrenceSpec& spec, int k) {
  require_degree(k);
  const JacobiMatrix j = jacobi_matrix(spec, k);
  const double shift = gershgorin(j).lo;
  std::vector<double> v(static_cast<std::size_t>(k), 1.0);
  std::vector<double> w(v.size());
  const int steps = 3 * static_cast<int>(std::ceil(std::log2(static_cast<double>(k)))) + 10;
  for (int s = 0; s < steps; ++s) {
    for (int i = 0; i < k; ++i) {
      const auto u = static_cast<std::size_t>(i);
      double y = (j.diag[u] - shift) * v[u];
      if (i > 0) y += j.offdiag[u - 1] * v[u - 1];
      if (i + 1 < k) y += j.offdiag[u] * v[u + 1];
      w[u] = y;
    }
    std::swap(v, w);
    if (normalize(v) == 0.0) break;
  }
  return certificate(j, std::move(v));
}

RayleighCertificate rayleigh_converged(const RecurrenceSpec& spec, int k, double tol) {
  require_degree(k);
  const JacobiMatrix j = jacobi_matrix(spec, k);
  const double lambda = extreme_zeros(spec, k, tol).largest;
  std::vector<double> v(static_cast<std::size_t>(k), 0.0);
  v[0] = 1.0;
  for (int i = 0; i + 1 < k; ++i) {
    const auto u = static_cast<std::size_t>(i);
    double y = (lambda - j.diag[u]) * v[u];
    if (i > 0) y -= j.offdiag[u - 1] * v[u - 1];
    v[u + 1] = y / j.offdiag[u];
    const double big = std::max(std::abs(v[u]), std::abs(v[u + 1]));
    if (big > 0x1p64) {
      const int shift = -std::ilogb(big);
      for (std::size_t m = 0; m <= u + 1; ++m) v[m] = std::ldexp(v[m], shift);
    }
  }
  return certificate(j, std::move(v));
}

}  // namespace turan
