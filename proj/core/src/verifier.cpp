#include "turan/verifier.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "turan/bounds.hpp"
#include "turan/evalkernel.hpp"
#include "turan/numeric.hpp"
#include "turan/zerofinder.hpp"

namespace turan {

namespace {

constexpr std::array<Subject, 12> kSubjects = {
    Subject::TurNonneg,   Subject::FirstoIdentity, Subject::Eqtur2Identity,
    Subject::DeltaPIdentity, Subject::Turan2Nonneg, Subject::VxNonneg,
    Subject::PatrNonneg,  Subject::MarikNonneg,    Subject::BoundContainment,
    Subject::Perturbation, Subject::SzwarcTur11,   Subject::SzwarcTur12,
};

constexpr int kPatrMaxOrder = 3;

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  // 53 random bits mapped to [0, 1); identical on every platform.
  double next() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }
  double in(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 rng_;
};

std::vector<double> sample_points(double lo, double hi, double ext_lo, double ext_hi, int n,
                                  Uniform& rng) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  const int grid = n - n / 2;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < grid; ++i) {
    xs.push_back(mid + half * std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * grid)));
  }
  for (int i = grid; i < n; ++i) xs.push_back(rng.in(ext_lo, ext_hi));
  return xs;
}

// Sum of products at one shared scale, with the magnitude used for the
// relative residual.
template <class Real>
struct Acc {
  TermSum<Real> sum;
  Real magnitude = 0;

  void add(Real value, Real mag) {
    sum.add(value);
    magnitude += mag;
  }
  void term(Real coef, Real a, Real b) {
    const Real v = coef * (a * b);
    add(v, std::abs(v));
  }
  double relative(int exponent) const {
    const Real one = std::ldexp(Real(1), -exponent);
    const Real denom = one + magnitude;
    if (!std::isfinite(static_cast<double>(denom))) return 0.0;
    return static_cast<double>(sum.value() / denom);
  }
};

template <class Real>
double rel_T(const BasicScaledWindow<Real>& w, int k) {
  Acc<Real> a;
  a.term(1, w[k], w[k]);
  a.term(-1, w[k - 1], w[k + 1]);
  return a.relative(2 * w.scale_exp);
}

template <class Real>
double rel_Tm(const BasicScaledWindow<Real>& w, int k, int m) {
  Acc<Real> a;
  Real binom = 1;
  for (int j = 0; j <= m; ++j) {
    const Real sign = ((j + m) % 2 == 0) ? Real(1) : Real(-1);
    const Real weight = j == m ? Real(0.5) * binom : binom;
    a.term(sign * weight, w[k - m + j], w[k + m - j]);
    binom = binom * Real(2 * m - j) / Real(j + 1);
  }
  return a.relative(2 * w.scale_exp);
}

template <class Real>
double rel_S(const BasicScaledWindow<Real>& w, int k) {
  const Real u0 = w[k - 1], u1 = w[k], u2 = w[k + 1], u3 = w[k + 2];
  Acc<Real> a;
  const auto quad = [&](Real coef, Real p, Real q, Real r, Real s) {
    const Real v = coef * ((p * q) * (r * s));
    a.add(v, std::abs(v));
  };
  quad(3, u1, u1, u2, u2);
  quad(-4, u1, u1, u1, u3);
  quad(-4, u0, u2, u2, u2);
  quad(6, u0, u1, u2, u3);
  quad(-1, u0, u0, u3, u3);
  return a.relative(4 * w.scale_exp);
}

template <class Real>
struct QSeq {
  const BasicScaledWindow<Real>& w;
  const RecurrenceSpec& spec;
  Real q(int j) const { return w[j + 1] - static_cast<Real>(spec.c(j)) * w[j - 1]; }
  Real m(int j) const {
    return std::abs(w[j + 1]) + static_cast<Real>(spec.c(j)) * std::abs(w[j - 1]);
  }
};

template <class Real>
double rel_delta(const RecurrenceSpec& spec, const BasicScaledWindow<Real>& w, int k) {
  const QSeq<Real> s{w, spec};
  Acc<Real> a;
  a.add(s.q(k) * s.q(k), s.m(k) * s.m(k));
  a.add(-(s.q(k - 1) * s.q(k + 1)), s.m(k - 1) * s.m(k + 1));
  return a.relative(2 * w.scale_exp);
}

double identity_firsto(const RecurrenceSpec& spec, int k, double x) {
  const ScaledWindow w = eval_window(spec, x, k - 1, k + 2);
  const double ck = spec.c(k);
  const double ck1 = spec.c(k + 1);
  Acc<double> a;
  a.term(1, w[k + 1], w[k + 1]);
  a.term(-1, w[k], w[k + 2]);
  a.term(-ck, w[k], w[k]);
  a.term(ck, w[k - 1], w[k + 1]);
  a.term(-ck1, w[k], w[k]);
  a.term(ck, w[k], w[k]);
  return a.relative(2 * w.scale_exp);
}

double identity_eqtur2(const RecurrenceSpec& spec, int k, double x) {
  const ScaledWindow w = eval_window(spec, x, k - 2, k + 3);
  const double cm = spec.c(k - 1), c0 = spec.c(k), c1 = spec.c(k + 1), c2 = spec.c(k + 2);
  Acc<double> a;
  a.term(3, w[k + 1], w[k + 1]);
  a.term(-4, w[k], w[k + 2]);
  a.term(1, w[k - 1], w[k + 3]);
  a.term(-3 * cm, w[k], w[k]);
  a.term(4 * cm, w[k - 1], w[k + 1]);
  a.term(-cm, w[k - 2], w[k + 2]);
  for (double coef : {c2, 3 * c0, -4 * cm}) {
    a.term(-coef, w[k], w[k]);
    a.term(coef, w[k - 1], w[k + 1]);
  }
  for (double coef : {cm, -3 * c0, 3 * c1, -c2}) a.term(-coef, w[k], w[k]);
  return a.relative(2 * w.scale_exp);
}

double identity_deltaP(const RecurrenceSpec& spec, int k, double x, double mu) {
  const ScaledWindow w = eval_window(spec, x, k - 2, k + 3);
  const QSeq<double> s{w, spec};
  const double c0 = spec.c(k), c1 = spec.c(k + 1), c2 = spec.c(k + 2);
  Acc<double> a;
  const auto qterm = [&](double coef, int i, int j) {
    a.add(coef * (s.q(i) * s.q(j)), std::abs(coef) * s.m(i) * s.m(j));
  };
  const auto pterm = [&](double coef, double coef_mag, double u, double v) {
    a.add(coef * (u * v), coef_mag * std::abs(u * v));
  };
  qterm(1, k + 1, k + 1);
  qterm(-1, k, k + 2);
  qterm(-c0, k, k);
  qterm(c0, k - 1, k + 1);
  const double tm = 2 * c0 * mu;
  pterm(-tm, tm, w[k], w[k]);
  pterm(tm, tm, w[k - 1], w[k + 1]);
  const double a1 = 2 * c0 * c0 * (2 * c2 - 2 * c0 - mu);
  const double a1m = 2 * c0 * c0 * (2 * c2 + 2 * c0 + mu);
  const double a2 = -2 * x * c0 * (3 * c2 - 2 * c1 - c0 - mu);
  const double a2m = 2 * std::abs(x) * c0 * (3 * c2 + 2 * c1 + c0 + mu);
  const double a3 = x * x * (2 * c2 - 3 * c1 + c0) + 4 * c1 * (c1 - c0) - 2 * c0 * mu;
  const double a3m = x * x * (2 * c2 + 3 * c1 + c0) + 4 * c1 * (c1 + c0) + 2 * c0 * mu;
  pterm(-a1, a1m, w[k - 1], w[k - 1]);
  pterm(-a2, a2m, w[k - 1], w[k]);
  pterm(-a3, a3m, w[k], w[k]);
  return a.relative(2 * w.scale_exp);
}

enum class Domain { Real, Unit, HalfLine };

// Families whose generating function lies in the Laguerre-Polya class, with
// the x-set where that holds.
std::optional<Domain> lp_domain(const RecurrenceSpec& spec) {
  if (spec.form() == RecurrenceForm::SymmetricMonic && spec.hermite_slope()) return Domain::Real;
  if (spec.builtin() == Builtin::Chebyshev) return Domain::Unit;
  if (spec.builtin() == Builtin::LaguerreNormalized) return Domain::HalfLine;
  return std::nullopt;
}

struct XRange {
  double lo, hi, ext_lo, ext_hi;
};

XRange natural_range(const RecurrenceSpec& spec, int k, Domain d) {
  switch (d) {
    case Domain::Unit:
      return {-1.0, 1.0, -1.0, 1.0};
    case Domain::HalfLine: {
      const Interval g = gershgorin(jacobi_matrix(spec, k + 1));
      return {0.0, g.hi, 0.0, g.hi};
    }
    case Domain::Real:
      break;
  }
  const Interval g = gershgorin(jacobi_matrix(spec, k + 1));
  return {g.lo, g.hi, g.lo - 1.0, g.hi + 1.0};
}

struct Hypothesis {
  bool holds = true;
  std::string note;
};

Hypothesis need(const RecurrenceSpec& spec, ConditionId id, int lo, int hi, Hypothesis h) {
  if (!h.holds || lo > hi) return h;
  const RangeVerdict rv = check_range(spec, id, lo, hi);
  if (rv.verdict == Verdict::Fails) {
    h.holds = false;
    h.note = "hypotheses fail: observational only (" + std::string(to_string(id)) + " at index " +
             std::to_string(rv.violation->index) + ")";
  }
  return h;
}

Hypothesis need_either(const RecurrenceSpec& spec, ConditionId a, ConditionId b, int lo, int hi) {
  const Hypothesis ha = need(spec, a, lo, hi, {});
  if (ha.holds) return ha;
  const Hypothesis hb = need(spec, b, lo, hi, {});
  if (hb.holds) return hb;
  return {false, "hypotheses fail: observational only (" + std::string(to_string(a)) + " and " +
                     std::string(to_string(b)) + ")"};
}

void require_symmetric(const RecurrenceSpec& spec, Subject s) {
  if (spec.form() != RecurrenceForm::SymmetricMonic) {
    throw InputError(std::string(to_string(s)) + " needs a symmetric-monic family");
  }
}

void record(VerificationReport& r, double value, int k, double x, std::string detail) {
  if (!r.min_value || value < *r.min_value) r.min_value = value;
  if (value < -kNonnegTolerance && !r.first_counterexample) {
    r.first_counterexample = Counterexample{k, x, value, std::move(detail)};
  }
}

}  // namespace

std::string_view to_string(Subject s) {
  switch (s) {
    case Subject::TurNonneg:
      return "tur-nonneg";
    case Subject::FirstoIdentity:
      return "firsto-identity";
    case Subject::Eqtur2Identity:
      return "eqtur2-identity";
    case Subject::DeltaPIdentity:
      return "deltaP-identity";
    case Subject::Turan2Nonneg:
      return "turan2-nonneg";
    case Subject::VxNonneg:
      return "vx-nonneg";
    case Subject::PatrNonneg:
      return "patr-nonneg";
    case Subject::MarikNonneg:
      return "marik-nonneg";
    case Subject::BoundContainment:
      return "bound-containment";
    case Subject::Perturbation:
      return "perturbation";
    case Subject::SzwarcTur11:
      return "szwarc-tur11";
    case Subject::SzwarcTur12:
      return "szwarc-tur12";
  }
  return "?";
}

Subject parse_subject(std::string_view text) {
  for (Subject s : kSubjects) {
    if (to_string(s) == text) return s;
  }
  throw InputError("unknown verification subject: " + std::string(text));
}

bool is_identity(Subject s) {
  return s == Subject::FirstoIdentity || s == Subject::Eqtur2Identity ||
         s == Subject::DeltaPIdentity;
}

bool is_nonneg(Subject s) {
  switch (s) {
    case Subject::TurNonneg:
    case Subject::Turan2Nonneg:
    case Subject::VxNonneg:
    case Subject::PatrNonneg:
    case Subject::MarikNonneg:
    case Subject::SzwarcTur11:
    case Subject::SzwarcTur12:
      return true;
    default:
      return false;
  }
}

VerificationReport verify_identity(const RecurrenceSpec& spec, Subject subject, KRange k_range,
                                   int samples_per_k, std::uint64_t seed) {
  if (!is_identity(subject)) throw InputError(std::string(to_string(subject)) + " is not an identity");
  require_symmetric(spec, subject);
  if (k_range.lo < 1 || k_range.hi < k_range.lo) throw InputError("identity k-range must start at 1");
  if (samples_per_k < 1) throw InputError("sample count must be positive");
  VerificationReport r;
  r.subject = subject;
  Uniform rng(seed);
  for (int k = k_range.lo; k <= k_range.hi; ++k) {
    const double radius = 2.0 * std::sqrt(spec.c(k));
    const std::vector<double> xs =
        sample_points(-radius, radius, -radius - 1.0, radius + 1.0, samples_per_k, rng);
    double mu = 0.0;
    if (subject == Subject::DeltaPIdentity) {
      const double c0 = spec.c(k), c1 = spec.c(k + 1), c2 = spec.c(k + 2);
      const double inc = c1 - c0;
      const double convex = 2.0 * c2 - 3.0 * c1 + c0;
      if (inc < 0.0 || convex < 0.0) {
        r.skipped += samples_per_k;
        continue;
      }
      const double gap = std::sqrt(inc) - std::sqrt(convex);
      mu = 2.0 * inc + 0.5 * gap * gap;
    }
    for (double x : xs) {
      double res = 0.0;
      switch (subject) {
        case Subject::FirstoIdentity:
          res = identity_firsto(spec, k, x);
          break;
        case Subject::Eqtur2Identity:
          res = identity_eqtur2(spec, k, x);
          break;
        default:
          res = identity_deltaP(spec, k, x, mu);
          break;
      }
      res = std::abs(res);
      ++r.sample_count;
      r.max_relative_residual = std::max(r.max_relative_residual, res);
      if (res > kIdentityTolerance && !r.first_counterexample) {
        r.first_counterexample = Counterexample{k, x, res, "relative residual"};
      }
    }
  }
  if (r.skipped > 0) {
    r.notes.push_back(std::to_string(r.skipped) + " samples skipped: mu_k needs c_{k+1} >= c_k and "
                      "2c_{k+2} - 3c_{k+1} + c_k >= 0");
  }
  return r;
}

VerificationReport verify_nonneg(const RecurrenceSpec& spec, Subject subject, KRange k_range,
                                 int points_per_k, std::uint64_t seed) {
  if (!is_nonneg(subject)) {
    throw InputError(std::string(to_string(subject)) + " is not a nonnegativity subject");
  }
  if (points_per_k < 1) throw InputError("grid size must be positive");
  VerificationReport r;
  r.subject = subject;
  int k_lo = std::max(k_range.lo, 1);
  const int k_hi = k_range.hi;
  Hypothesis h;
  Domain domain = Domain::Real;
  switch (subject) {
    case Subject::TurNonneg:
      if (spec.form() == RecurrenceForm::SymmetricMonic) {
        h = need(spec, ConditionId::Nondecreasing, 2, k_hi + 1, h);
      } else {
        h = {false, "hypotheses fail: observational only (theorem covers symmetric-monic only)"};
      }
      break;
    case Subject::Turan2Nonneg:
      require_symmetric(spec, subject);
      k_lo = std::max(k_lo, 2);
      h = need(spec, ConditionId::Nondecreasing, 2, k_hi + 2, h);
      h = need(spec, ConditionId::Cond1, 1, k_hi, h);
      break;
    case Subject::VxNonneg:
      require_symmetric(spec, subject);
      h = need(spec, ConditionId::Nondecreasing, 2, k_hi + 2, h);
      h = need(spec, ConditionId::CondI, 0, k_hi - 1, h);
      h = need(spec, ConditionId::CondII, 0, k_hi - 1, h);
      break;
    case Subject::PatrNonneg:
    case Subject::MarikNonneg:
      if (const auto d = lp_domain(spec)) {
        domain = *d;
      } else {
        h = {false, "hypotheses fail: observational only (no Laguerre-Polya generating function)"};
        if (spec.form() == RecurrenceForm::UnitIntervalSymmetric) domain = Domain::Unit;
        if (spec.form() == RecurrenceForm::HalfLine) domain = Domain::HalfLine;
      }
      break;
    case Subject::SzwarcTur11:
      if (spec.form() != RecurrenceForm::UnitIntervalSymmetric) {
        throw InputError("szwarc-tur11 needs a unit-interval family");
      }
      domain = Domain::Unit;
      h = need_either(spec, ConditionId::SzwarcIA, ConditionId::SzwarcIB, 1, k_hi + 1);
      break;
    case Subject::SzwarcTur12:
      if (spec.form() != RecurrenceForm::HalfLine) {
        throw InputError("szwarc-tur12 needs a half-line family");
      }
      domain = Domain::HalfLine;
      h = need_either(spec, ConditionId::SzwarcIIA, ConditionId::SzwarcIIB, 1, k_hi + 1);
      break;
    default:
      break;
  }
  r.hypotheses_hold = h.holds;
  if (!h.holds) r.notes.push_back(h.note);

  Uniform rng(seed);
  int rejected = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const XRange range = natural_range(spec, k, domain);
    const std::vector<double> xs =
        sample_points(range.lo, range.hi, range.ext_lo, range.ext_hi, points_per_k, rng);
    for (double x : xs) {
      // One evaluation routine per precision; the long double pass only
      // re-checks candidates.
      const auto evaluate = [&](auto tag, int m) -> double {
        using Real = decltype(tag);
        switch (subject) {
          case Subject::Turan2Nonneg:
            return rel_Tm(eval_window_as<Real>(spec, x, k - 2, k + 2), k, 2);
          case Subject::VxNonneg:
            return rel_delta(spec, eval_window_as<Real>(spec, x, k - 2, k + 2), k);
          case Subject::PatrNonneg:
            return rel_Tm(eval_window_as<Real>(spec, x, k - m, k + m), k, m);
          case Subject::MarikNonneg:
            return rel_S(eval_window_as<Real>(spec, x, k - 1, k + 2), k);
          default:
            return rel_T(eval_window_as<Real>(spec, x, k - 1, k + 1), k);
        }
      };
      const int orders = subject == Subject::PatrNonneg ? std::min(kPatrMaxOrder, k) : 1;
      for (int m = 1; m <= orders; ++m) {
        double value = evaluate(0.0, m);
        if (value < -kNonnegTolerance) {
          value = evaluate(0.0L, m);
          if (value >= -kNonnegTolerance) ++rejected;
        }
        ++r.sample_count;
        std::string detail = subject == Subject::PatrNonneg ? "m = " + std::to_string(m) : "";
        record(r, value, k, x, std::move(detail));
      }
    }
  }
  if (rejected > 0) {
    r.notes.push_back(std::to_string(rejected) +
                      " candidates cleared by extended-precision re-evaluation");
  }
  return r;
}

VerificationReport verify_bound_containment(const RecurrenceSpec& spec, KRange k_range, double tol) {
  VerificationReport r;
  r.subject = Subject::BoundContainment;
  const auto check = [&](const BoundResult& b, int k, double zero) {
    if (!b.applicable() || !std::isfinite(b.value)) return;
    const double margin = b.side == Side::Upper ? b.value - zero : zero - b.value;
    ++r.sample_count;
    const double scaled = margin / (1.0 + std::abs(zero));
    if (!r.min_value || scaled < *r.min_value) r.min_value = scaled;
    if (margin < -tol && !r.first_counterexample) {
      r.first_counterexample = Counterexample{k, zero, margin, b.name};
    }
  };
  const double ztol = 1e-14;
  for (int k = std::max(k_range.lo, 1); k <= k_range.hi; ++k) {
    const ExtremeZeros ez = extreme_zeros(spec, k, ztol);
    switch (spec.form()) {
      case RecurrenceForm::SymmetricMonic: {
        if (k < 2) break;
        const BoundPair fo = bound_first_order(spec, k);
        check(fo.upper, k, ez.largest);
        check(fo.lower, k, ez.largest);
        check(bound_tt2(spec, k), k, ez.largest);
        check(bound_vir1(spec, k), k, ez.largest);
        check(bound_thmain(spec, k), k, ez.largest);
        check(bound_condsimpl(spec, k), k, ez.largest);
        if (const auto pl = spec.power_law_params()) check(bound_mnt(pl->c, pl->delta, k), k, ez.largest);
        if (const auto s = spec.hermite_slope()) {
          const MarikHermite mh = bound_marik_hermite(k, *s);
          check(mh.sextic, k, ez.largest);
          check(mh.refined, k, ez.largest);
        }
        BoundResult ray;
        ray.name = "rayleigh_lower";
        ray.side = Side::Lower;
        ray.verdict = Verdict::Holds;
        ray.value = rayleigh_lower(spec, k).value;
        check(ray, k, ez.largest);
        break;
      }
      case RecurrenceForm::UnitIntervalSymmetric: {
        const BoundResult fi = bound_finite_interval(spec, k);
        if (fi.covers == Covers::AllZeros) {
          check(fi, k, std::max(std::abs(ez.smallest), std::abs(ez.largest)));
        } else if (k >= 3) {
          const double z2 = zero_at(spec, k, 2, ztol);
          const double zk1 = zero_at(spec, k, k - 1, ztol);
          check(fi, k, std::max(std::abs(z2), std::abs(zk1)));
        }
        break;
      }
      case RecurrenceForm::HalfLine: {
        const BoundPair hl = bound_half_line(spec, k);
        check(hl.upper, k, ez.largest);
        if (hl.lower.covers == Covers::AllZeros) {
          check(hl.lower, k, ez.smallest);
        } else if (k >= 2) {
          check(hl.lower, k, zero_at(spec, k, 2, ztol));
        }
        break;
      }
      case RecurrenceForm::GeneralMonic:
        r.notes.push_back("no bounds are stated for general-monic families");
        return r;
    }
  }
  return r;
}

VerificationReport verify_perturbation_with(const RecurrenceSpec& spec, int k, double epsilon,
                                            std::span<const std::vector<double>> draws) {
  if (spec.form() != RecurrenceForm::SymmetricMonic) {
    throw InputError("perturbation needs a symmetric-monic family");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  VerificationReport r;
  r.subject = Subject::Perturbation;
  const double base = extreme_zeros(spec, k, 1e-14).largest;
  for (const std::vector<double>& e : draws) {
    std::vector<double> factors(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) factors[j] = (1.0 + e[j]) * (1.0 + e[j]);
    const RecurrenceSpec perturbed = RecurrenceSpec::composite(spec, std::move(factors));
    const double x = extreme_zeros(perturbed, k, 1e-14).largest;
    const double margin =
        std::min((1.0 + epsilon) * base - x, x - (1.0 - epsilon) * base) / std::abs(base);
    ++r.sample_count;
    r.max_relative_residual = std::max(r.max_relative_residual, std::abs(x - base) / std::abs(base));
    if (!r.min_value || margin < *r.min_value) r.min_value = margin;
    if (!(margin > 0.0) && !r.first_counterexample) {
      r.first_counterexample = Counterexample{k, x, margin, "x*_kk outside ((1-e)x_kk, (1+e)x_kk)"};
    }
  }
  return r;
}

VerificationReport verify_perturbation(const RecurrenceSpec& spec, int k, double epsilon,
                                       int draws, std::uint64_t seed) {
  if (draws < 1) throw InputError("draw count must be positive");
  Uniform rng(seed);
  std::vector<std::vector<double>> all(static_cast<std::size_t>(draws));
  for (std::vector<double>& e : all) {
    e.resize(static_cast<std::size_t>(k) + 1);
    for (double& v : e) v = epsilon * (2.0 * rng.next() - 1.0);
  }
  return verify_perturbation_with(spec, k, epsilon, all);
}

}  // namespace turan
