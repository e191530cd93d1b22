#include "turan/evalkernel.hpp"

#include <cmath>

#include "turan/numeric.hpp"

namespace turan {

ZeroOfPolynomialError::ZeroOfPolynomialError(int degree, double x)
    : std::domain_error("x is a zero of p_" + std::to_string(degree)), degree_(degree), x_(x) {}

namespace {

constexpr int kRangeExp = 64;

template <class Real>
int rescale_shift(Real magnitude) {
  if (magnitude == 0 || !std::isfinite(static_cast<double>(magnitude))) return 0;
  const int e = std::ilogb(magnitude);
  if (e >= kRangeExp || e < -kRangeExp) return -e;
  return 0;
}

// One forward step p_{i+1} from (p_{i-1}, p_i) in the form's own normalization.
template <class Real>
Real step(const RecurrenceSpec& spec, int i, Real x, Real prev, Real curr) {
  const Coefficients co = spec.coefficient(i);
  if (spec.form() == RecurrenceForm::HalfLine) {
    return ((static_cast<Real>(co.a) - x) * curr - static_cast<Real>(co.c) * prev) /
           static_cast<Real>(co.b);
  }
  return ((x - static_cast<Real>(co.a)) * curr - static_cast<Real>(co.c) * prev) /
         static_cast<Real>(co.b);
}

int sturm_sign(double v, int degree, bool flip_odd, int previous) {
  if (v == 0.0) return -previous;
  int s = v > 0.0 ? 1 : -1;
  if (flip_odd && (degree % 2 != 0)) s = -s;
  return s;
}

void require_symmetric(const RecurrenceSpec& spec, const char* what) {
  if (spec.form() != RecurrenceForm::SymmetricMonic) {
    throw InputError(std::string(what) + " needs a symmetric-monic spec");
  }
}

}  // namespace

double EvalState::value() const { return std::ldexp(curr, scale_exp); }
double EvalState::prev_value() const { return std::ldexp(prev, scale_exp); }

EvalState EvalState::rescaled(int shift) const {
  EvalState out = *this;
  out.prev = std::ldexp(prev, shift);
  out.curr = std::ldexp(curr, shift);
  out.scale_exp -= shift;
  return out;
}

EvalState eval_sequence(const RecurrenceSpec& spec, int k, double x) {
  if (k < 0) throw InputError("degree must be nonnegative");
  const bool flip = spec.form() == RecurrenceForm::HalfLine;
  EvalState s;
  s.x = x;
  int last_sign = 1;
  for (int i = 0; i < k; ++i) {
    const double next = step<double>(spec, i, x, s.prev, s.curr);
    s.prev = s.curr;
    s.curr = next;
    s.degree = i + 1;
    // A zero of p_k itself is reported through at_zero(), not counted.
    if (next != 0.0 || s.degree < k) {
      const int sign = sturm_sign(next, s.degree, flip, last_sign);
      if (sign != last_sign) ++s.sign_changes;
      last_sign = sign;
    }
    const int shift = rescale_shift(std::max(std::abs(s.prev), std::abs(s.curr)));
    if (shift != 0) s = s.rescaled(shift);
  }
  return s;
}

double ratio_t(const EvalState& state) {
  if (state.curr == 0.0) throw ZeroOfPolynomialError(state.degree, state.x);
  return state.prev / state.curr;
}

template <class Real>
BasicScaledWindow<Real> eval_window_as(const RecurrenceSpec& spec, double x, int first, int last) {
  if (first < -1 || last < first) throw InputError("invalid evaluation window");
  BasicScaledWindow<Real> w;
  w.first = first;
  w.values.assign(static_cast<std::size_t>(last - first + 1), Real(0));
  auto store = [&](int j, Real v) {
    if (j >= first && j <= last) w.values[static_cast<std::size_t>(j - first)] = v;
  };
  const Real xr = static_cast<Real>(x);
  Real prev = 0;
  Real curr = 1;
  store(0, curr);
  for (int i = 0; i < last; ++i) {
    const Real next = step<Real>(spec, i, xr, prev, curr);
    prev = curr;
    curr = next;
    store(i + 1, curr);
    const int shift = rescale_shift(std::max(std::abs(prev), std::abs(curr)));
    if (shift != 0) {
      prev = std::ldexp(prev, shift);
      curr = std::ldexp(curr, shift);
      for (Real& v : w.values) v = std::ldexp(v, shift);
      w.scale_exp -= shift;
    }
  }
  return w;
}

template BasicScaledWindow<double> eval_window_as<double>(const RecurrenceSpec&, double, int, int);
template BasicScaledWindow<long double> eval_window_as<long double>(const RecurrenceSpec&, double,
                                                                    int, int);

double TuranValue::value() const { return std::ldexp(mantissa, exponent); }

double TuranValue::relative() const { return relative_to_scale(mantissa, magnitude, exponent); }

TuranValue turan_T(const RecurrenceSpec& spec, int k, double x) {
  if (k < 1) throw InputError("turan_T needs k >= 1");
  const ScaledWindow w = eval_window(spec, x, k - 1, k + 1);
  TermSum<double> sum;
  sum.add(w[k] * w[k]);
  sum.sub(w[k - 1] * w[k + 1]);
  return TuranValue{sum.value(), 2 * w.scale_exp, 1, false, sum.magnitude()};
}

TuranValue turan_Tm(std::span<const double> u, int m) {
  if (m < 0) throw InputError("turan_Tm needs m >= 0");
  if (u.size() != static_cast<std::size_t>(2 * m + 1)) {
    throw InputError("turan_Tm window must have length 2m+1");
  }
  // Terms j and 2m-j coincide; sum the middle term plus each pair once.
  std::vector<double> binom(static_cast<std::size_t>(2 * m + 1), 1.0);
  for (int j = 1; j <= 2 * m; ++j) {
    binom[static_cast<std::size_t>(j)] =
        binom[static_cast<std::size_t>(j - 1)] * static_cast<double>(2 * m - j + 1) / j;
  }
  const auto at = [&](int j) { return u[static_cast<std::size_t>(j)]; };
  TermSum<double> sum;
  sum.add(0.5 * binom[static_cast<std::size_t>(m)] * (at(m) * at(m)));
  for (int j = 0; j < m; ++j) {
    const double sign = ((j + m) % 2 == 0) ? 1.0 : -1.0;
    sum.add(sign * binom[static_cast<std::size_t>(j)] * (at(j) * at(2 * m - j)));
  }
  return TuranValue{sum.value(), 0, m, false, sum.magnitude()};
}

TuranValue turan_S(std::span<const double> u) {
  if (u.size() != 4) throw InputError("turan_S window must have length 4");
  const double a = u[1] * u[1] - u[0] * u[2];
  const double b = u[2] * u[2] - u[1] * u[3];
  const double c = u[1] * u[2] - u[0] * u[3];
  const double ma = std::abs(u[1] * u[1]) + std::abs(u[0] * u[2]);
  const double mb = std::abs(u[2] * u[2]) + std::abs(u[1] * u[3]);
  const double mc = std::abs(u[1] * u[2]) + std::abs(u[0] * u[3]);
  return TuranValue{4.0 * a * b - c * c, 0, 2, false, 4.0 * ma * mb + mc * mc};
}

TuranValue turan_Tm_at(const RecurrenceSpec& spec, int k, int m, double x) {
  if (k - m < -1) throw InputError("turan_Tm_at needs k - m >= -1");
  const ScaledWindow w = eval_window(spec, x, k - m, k + m);
  TuranValue v = turan_Tm(w.values, m);
  v.exponent = 2 * w.scale_exp;
  return v;
}

TuranValue turan_S_at(const RecurrenceSpec& spec, int k, double x) {
  if (k < 1) throw InputError("turan_S_at needs k >= 1");
  const ScaledWindow w = eval_window(spec, x, k - 1, k + 2);
  TuranValue v = turan_S(w.values);
  v.exponent = 4 * w.scale_exp;
  return v;
}

TuranValue turan_T2(const RecurrenceSpec& spec, int k, double x) {
  return turan_Tm_at(spec, k, 2, x);
}

TuranValue turan_delta(const RecurrenceSpec& spec, int k, double x) {
  require_symmetric(spec, "turan_delta");
  if (k < 1) throw InputError("turan_delta needs k >= 1");
  const ScaledWindow w = eval_window(spec, x, k - 2, k + 2);
  const double ckm1 = spec.c(k - 1);
  const double ck = spec.c(k);
  const double ck1 = spec.c(k + 1);
  const double q_lo = w[k] - ckm1 * w[k - 2];
  const double q_mid = w[k + 1] - ck * w[k - 1];
  const double q_hi = w[k + 2] - ck1 * w[k];
  const double m_lo = std::abs(w[k]) + ckm1 * std::abs(w[k - 2]);
  const double m_mid = std::abs(w[k + 1]) + ck * std::abs(w[k - 1]);
  const double m_hi = std::abs(w[k + 2]) + ck1 * std::abs(w[k]);
  TermSum<double> sum;
  sum.add(q_mid * q_mid);
  sum.sub(q_lo * q_hi);
  return TuranValue{sum.value(), 2 * w.scale_exp, 1, false, m_mid * m_mid + m_lo * m_hi};
}

TuranValue turan_delta_form(const RecurrenceSpec& spec, int k, double x) {
  require_symmetric(spec, "turan_delta_form");
  if (k < 1) throw InputError("turan_delta_form needs k >= 1");
  const EvalState s = eval_sequence(spec, k, x);
  if (s.at_zero()) return turan_delta(spec, k, x);
  const double t = ratio_t(s);
  const double ck = spec.c(k);
  const double ck1 = spec.c(k + 1);
  const double x2 = x * x;
  TermSum<double> sum;
  sum.add(4.0 * ck * ck * t * t);
  sum.sub(ck * x2 * t * t);
  sum.sub(2.0 * ck1 * x * t);
  sum.sub(2.0 * ck * x * t);
  sum.add(x2 * x * t);
  sum.add(4.0 * ck1);
  sum.sub(x2);
  return TuranValue{sum.value(), 0, 1, true, sum.magnitude()};
}

TuranValue turan_T2_form(const RecurrenceSpec& spec, int k, double x) {
  require_symmetric(spec, "turan_T2_form");
  if (k < 2) throw InputError("turan_T2_form needs k >= 2");
  const double ckm1 = spec.c(k - 1);
  const EvalState s = eval_sequence(spec, k, x);
  if (s.at_zero()) {
    TuranValue v = turan_T2(spec, k, x);
    v.mantissa *= ckm1;
    v.magnitude *= ckm1;
    return v;
  }
  const double t = ratio_t(s);
  const double ck = spec.c(k);
  const double ck1 = spec.c(k + 1);
  const double x2 = x * x;
  TermSum<double> sum;
  sum.add(4.0 * ck * ckm1 * t * t);
  sum.sub(ck * x2 * t * t);
  sum.sub(4.0 * ckm1 * x * t);
  sum.add(ck * x * t);
  sum.sub(ck1 * x * t);
  sum.add(x2 * x * t);
  sum.add(3.0 * ckm1);
  sum.add(ck1);
  sum.sub(x2);
  return TuranValue{sum.value(), 0, 2, true, sum.magnitude()};
}

}  // namespace turan
