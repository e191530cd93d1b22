#include "turan/bounds.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace turan {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<ConditionId, 10> kAllConditions = {
    ConditionId::Nondecreasing, ConditionId::Cond1,     ConditionId::CondI,
    ConditionId::CondII,        ConditionId::CondNew,   ConditionId::SzwarcIA,
    ConditionId::SzwarcIB,      ConditionId::SzwarcIIA, ConditionId::SzwarcIIB,
    ConditionId::Tt2Ratio,
};

// g >= 0 is the condition; |g| within a few ulps of the terms is equality.
Verdict classify(double g, double magnitude, Verdict on_equality) {
  const double tol = 8.0 * kEps * magnitude;
  if (g > tol) return Verdict::Holds;
  if (g < -tol) return Verdict::Fails;
  return on_equality;
}

struct Point {
  Verdict verdict = Verdict::Holds;
  Violation violation;
};

void merge(Point& acc, Verdict v, int j, double lhs, double rhs, const char* detail) {
  if (v == Verdict::Fails && acc.verdict != Verdict::Fails) {
    acc.verdict = Verdict::Fails;
    acc.violation = {j, lhs, rhs, detail};
  } else if (v == Verdict::Boundary && acc.verdict == Verdict::Holds) {
    acc.verdict = Verdict::Boundary;
    acc.violation = {j, lhs, rhs, detail};
  }
}

// lhs >= rhs (or lhs > rhs when strict) at index j.
void compare(Point& acc, int j, double lhs, double rhs, Verdict on_equality, const char* detail) {
  merge(acc, classify(lhs - rhs, std::abs(lhs) + std::abs(rhs), on_equality), j, lhs, rhs, detail);
}

double growth(const RecurrenceSpec& spec, int j) {
  if (j <= 1) return kInf;
  return spec.c(j) / spec.c(j - 1) - 1.0;
}

Point evaluate(const RecurrenceSpec& spec, ConditionId id, int j) {
  Point p;
  switch (id) {
    case ConditionId::Nondecreasing:
      compare(p, j, spec.c(j), spec.c(j - 1), Verdict::Holds, "c_j >= c_{j-1}");
      break;
    case ConditionId::Cond1: {
      const double c0 = spec.c(j - 1), c1 = spec.c(j), c2 = spec.c(j + 1), c3 = spec.c(j + 2);
      compare(p, j, c0 + 3.0 * c2, 3.0 * c1 + c3, Verdict::Boundary,
              "c_{j-1} - 3c_j + 3c_{j+1} - c_{j+2} >= 0");
      break;
    }
    case ConditionId::CondI: {
      const double c0 = spec.c(j), c1 = spec.c(j + 1), c2 = spec.c(j + 2);
      compare(p, j, 2.0 * c2 + c0, 3.0 * c1, Verdict::Boundary, "2c_{j+2} - 3c_{j+1} + c_j >= 0");
      break;
    }
    case ConditionId::CondII: {
      const double c0 = spec.c(j), c1 = spec.c(j + 1), c2 = spec.c(j + 2);
      const double inc = c1 - c0;
      const double convex = 2.0 * c2 - 3.0 * c1 + c0;
      const Verdict v_inc = classify(inc, c1 + c0, Verdict::Holds);
      const Verdict v_cvx = classify(convex, 2.0 * c2 + 3.0 * c1 + c0, Verdict::Holds);
      if (v_inc == Verdict::Fails || v_cvx == Verdict::Fails) {
        merge(p, Verdict::Fails, j, inc, convex, "square-root argument negative");
        break;
      }
      const double lhs = std::max(inc, 0.0) * (std::sqrt(std::max(inc, 0.0)) +
                                               std::sqrt(std::max(convex, 0.0)));
      const double rhs = std::sqrt(c0) * std::abs(c2 - 2.0 * c1 + c0);
      compare(p, j, lhs, rhs, Verdict::Boundary,
              "(c_{j+1}-c_j)(sqrt(c_{j+1}-c_j) + sqrt(2c_{j+2}-3c_{j+1}+c_j)) >= "
              "sqrt(c_j)|c_{j+2}-2c_{j+1}+c_j|");
      break;
    }
    case ConditionId::CondNew: {
      const double dj = growth(spec, j);
      const double dn = growth(spec, j + 1);
      if (!(dj > 0.0)) {
        merge(p, Verdict::Fails, j, dj, 0.0, "d_j > 0");
        break;
      }
      const double lower = std::isinf(dj) ? 0.5 : dj / (2.0 * (1.0 + dj));
      compare(p, j, dn, lower, Verdict::Boundary, "d_{j+1} > d_j / (2(1 + d_j))");
      if (!std::isinf(dj)) {
        const double upper = dj * (1.0 + 2.0 * std::sqrt(dj) + 2.0 * dj) / (1.0 + dj);
        compare(p, j, upper, dn, Verdict::Boundary,
                "d_{j+1} < d_j(1 + 2 sqrt(d_j) + 2d_j) / (1 + d_j)");
      }
      break;
    }
    case ConditionId::SzwarcIA:
      compare(p, j, 0.5, spec.c(j), Verdict::Holds, "c_j <= 1/2");
      if (j >= 2) compare(p, j, spec.c(j), spec.c(j - 1), Verdict::Holds, "c_j >= c_{j-1}");
      break;
    case ConditionId::SzwarcIB:
      compare(p, j, spec.c(j), 0.5, Verdict::Holds, "c_j >= 1/2");
      if (j >= 2) compare(p, j, spec.c(j - 1), spec.c(j), Verdict::Holds, "c_j <= c_{j-1}");
      break;
    case ConditionId::SzwarcIIA:
    case ConditionId::SzwarcIIB: {
      const Coefficients now = spec.coefficient(j);
      const Coefficients before = spec.coefficient(j - 1);
      compare(p, j, now.b, before.b, Verdict::Holds, "b_j >= b_{j-1}");
      compare(p, j, now.c, before.c, Verdict::Holds, "c_j >= c_{j-1}");
      const double dc = now.c - before.c;
      const double db = now.b - before.b;
      if (id == ConditionId::SzwarcIIA) {
        compare(p, j, now.b, now.c, Verdict::Holds, "c_j <= b_j");
        compare(p, j, dc, db, Verdict::Holds, "c_j - c_{j-1} >= b_j - b_{j-1}");
      } else {
        compare(p, j, now.c, now.b, Verdict::Holds, "c_j >= b_j");
        compare(p, j, db, dc, Verdict::Holds, "c_j - c_{j-1} <= b_j - b_{j-1}");
      }
      break;
    }
    case ConditionId::Tt2Ratio: {
      const double now = spec.c(j);
      const double before = spec.c(j - 1);
      compare(p, j, before, 0.75 * now, Verdict::Fails, "(3/4)c_j < c_{j-1}");
      compare(p, j, now, before, Verdict::Holds, "c_{j-1} <= c_j");
      break;
    }
  }
  return p;
}

// Highest coefficient index touched when checking index j.
int reach(ConditionId id, int j) {
  switch (id) {
    case ConditionId::Cond1:
    case ConditionId::CondI:
    case ConditionId::CondII:
      return j + 2;
    case ConditionId::CondNew:
      return j + 1;
    default:
      return j;
  }
}

void require_form(const RecurrenceSpec& spec, ConditionId id) {
  if (!condition_applies_to(id, spec.form())) {
    throw InputError(std::string(to_string(id)) + " does not apply to form " +
                     std::string(to_string(spec.form())));
  }
}

BoundResult inapplicable(BoundResult r, std::string hypothesis, int index = -1) {
  r.verdict = Verdict::Fails;
  r.failed_hypothesis = std::move(hypothesis);
  r.failed_index = index;
  return r;
}

// Fold a range check into a bound; returns false once the bound has failed.
bool require(BoundResult& r, const RecurrenceSpec& spec, ConditionId id, int lo, int hi) {
  if (r.verdict == Verdict::Fails || lo > hi) return r.verdict != Verdict::Fails;
  const RangeVerdict rv = check_range(spec, id, lo, hi);
  r.verdict = combine(r.verdict, rv.verdict);
  if (rv.verdict == Verdict::Fails) {
    r.failed_hypothesis = std::string(to_string(id)) + ": " + rv.violation->detail;
    r.failed_index = rv.violation->index;
    return false;
  }
  return true;
}

bool symmetric(const RecurrenceSpec& spec) {
  return spec.form() == RecurrenceForm::SymmetricMonic;
}

bool coefficients_available(const RecurrenceSpec& spec, int top) {
  return !spec.max_degree() || top <= *spec.max_degree();
}

// Root of f on [u, v] where f(u), f(v) differ in sign; Newton with bisection fallback.
template <class F, class DF>
double safeguarded_newton(F f, DF df, double u, double v) {
  double fu = f(u);
  double x = 0.5 * (u + v);
  for (int it = 0; it < 200; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (fu < 0.0)) {
      u = x;
      fu = fx;
    } else {
      v = x;
    }
    if (v - u <= 4.0 * kEps * std::max(std::abs(u), std::abs(v))) break;
    const double d = df(x);
    double next = d != 0.0 ? x - fx / d : kNaN;
    if (!(next > u && next < v)) next = 0.5 * (u + v);
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Boundary:
      return "boundary";
    case Verdict::Fails:
      return "fails";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fails || b == Verdict::Fails) return Verdict::Fails;
  if (a == Verdict::Boundary || b == Verdict::Boundary) return Verdict::Boundary;
  return Verdict::Holds;
}

std::string_view to_string(ConditionId id) {
  switch (id) {
    case ConditionId::Nondecreasing:
      return "nondecreasing";
    case ConditionId::Cond1:
      return "cond1";
    case ConditionId::CondI:
      return "condi";
    case ConditionId::CondII:
      return "condii";
    case ConditionId::CondNew:
      return "condnew";
    case ConditionId::SzwarcIA:
      return "szwarc-ia";
    case ConditionId::SzwarcIB:
      return "szwarc-ib";
    case ConditionId::SzwarcIIA:
      return "szwarc-iia";
    case ConditionId::SzwarcIIB:
      return "szwarc-iib";
    case ConditionId::Tt2Ratio:
      return "tt2-ratio";
  }
  return "?";
}

ConditionId parse_condition(std::string_view text) {
  for (ConditionId id : kAllConditions) {
    if (to_string(id) == text) return id;
  }
  throw InputError("unknown condition: " + std::string(text));
}

std::span<const ConditionId> all_conditions() { return kAllConditions; }

bool condition_applies_to(ConditionId id, RecurrenceForm form) {
  switch (id) {
    case ConditionId::Nondecreasing:
      return true;
    case ConditionId::SzwarcIA:
    case ConditionId::SzwarcIB:
      return form == RecurrenceForm::UnitIntervalSymmetric;
    case ConditionId::SzwarcIIA:
    case ConditionId::SzwarcIIB:
      return form == RecurrenceForm::HalfLine;
    default:
      return form == RecurrenceForm::SymmetricMonic;
  }
}

int condition_first_index(ConditionId id) {
  switch (id) {
    case ConditionId::CondI:
    case ConditionId::CondII:
      return 0;
    case ConditionId::Cond1:
    case ConditionId::CondNew:
    case ConditionId::SzwarcIA:
    case ConditionId::SzwarcIB:
    case ConditionId::SzwarcIIA:
    case ConditionId::SzwarcIIB:
      return 1;
    case ConditionId::Nondecreasing:
      return 2;
    case ConditionId::Tt2Ratio:
      return 3;
  }
  return 0;
}

ConditionReport check_condition(const RecurrenceSpec& spec, ConditionId id, int k_max) {
  require_form(spec, id);
  ConditionReport report;
  report.id = id;
  report.first_index = condition_first_index(id);
  report.holds_up_to = report.first_index - 1;
  bool clean = true;
  for (int j = report.first_index; j <= k_max; ++j) {
    if (!coefficients_available(spec, reach(id, j))) break;
    const Point p = evaluate(spec, id, j);
    if (p.verdict == Verdict::Boundary && !report.first_boundary) report.first_boundary = j;
    if (p.verdict == Verdict::Fails) {
      if (!report.first_violation) report.first_violation = p.violation;
      report.verdict = Verdict::Fails;
      clean = false;
      break;
    }
    if (clean) report.holds_up_to = j;
    report.verdict = combine(report.verdict, p.verdict);
  }
  return report;
}

RangeVerdict check_range(const RecurrenceSpec& spec, ConditionId id, int lo, int hi) {
  require_form(spec, id);
  RangeVerdict out;
  for (int j = lo; j <= hi; ++j) {
    const Point p = evaluate(spec, id, j);
    out.verdict = combine(out.verdict, p.verdict);
    if (p.verdict == Verdict::Fails) {
      out.violation = p.violation;
      break;
    }
  }
  return out;
}

std::string_view to_string(Side s) { return s == Side::Upper ? "upper" : "lower"; }

std::string_view to_string(Covers c) {
  switch (c) {
    case Covers::AllZeros:
      return "all";
    case Covers::LargestZero:
      return "largest";
    case Covers::InteriorZeros:
      return "interior";
    case Covers::AllButSmallest:
      return "all-but-smallest";
  }
  return "?";
}

BoundPair bound_first_order(const RecurrenceSpec& spec, int k) {
  BoundPair out;
  out.upper.name = "first_order";
  out.upper.side = Side::Upper;
  out.upper.covers = Covers::AllZeros;
  out.lower.name = "lower_trivial";
  out.lower.side = Side::Lower;
  out.lower.covers = Covers::LargestZero;
  out.upper.value = kNaN;
  out.lower.value = kNaN;
  if (!symmetric(spec)) {
    out.upper = inapplicable(out.upper, "requires symmetric-monic form");
    out.lower = inapplicable(out.lower, "requires symmetric-monic form");
    return out;
  }
  if (k < 2) {
    out.upper = inapplicable(out.upper, "requires k >= 2");
    out.lower = inapplicable(out.lower, "requires k >= 2");
    return out;
  }
  const double root = std::sqrt(spec.c(k - 1));
  out.upper.value = 2.0 * root;
  out.upper.verdict = Verdict::Holds;
  require(out.upper, spec, ConditionId::Nondecreasing, 2, k);
  out.lower.value = root;
  out.lower.verdict = k == 2 ? Verdict::Boundary : Verdict::Holds;
  if (k == 2) out.lower.note = "equality: x_22 = sqrt(c_1)";
  return out;
}

BoundResult bound_tt2(const RecurrenceSpec& spec, int k) {
  BoundResult r;
  r.name = "tt2";
  r.value = kNaN;
  if (!symmetric(spec)) return inapplicable(r, "requires symmetric-monic form");
  if (k < 3) return inapplicable(r, "requires k >= 3");
  r.value = 2.0 * std::sqrt(spec.c(k - 2));
  r.verdict = Verdict::Holds;
  if (!require(r, spec, ConditionId::Nondecreasing, 2, k)) return r;
  require(r, spec, ConditionId::Tt2Ratio, k - 1, k - 1);
  return r;
}

BoundResult bound_finite_interval(const RecurrenceSpec& spec, int k) {
  BoundResult r;
  r.name = "finite_interval";
  r.value = kNaN;
  if (spec.form() != RecurrenceForm::UnitIntervalSymmetric) {
    return inapplicable(r, "requires unit-interval form");
  }
  if (k < 1) return inapplicable(r, "requires k >= 1");
  const Coefficients co = spec.coefficient(k);
  r.value = 2.0 * std::sqrt(co.b * co.c);
  const RangeVerdict a = check_range(spec, ConditionId::SzwarcIA, 1, k);
  if (a.verdict != Verdict::Fails) {
    r.verdict = a.verdict;
    r.covers = Covers::AllZeros;
    return r;
  }
  const RangeVerdict b = check_range(spec, ConditionId::SzwarcIB, 1, k);
  if (b.verdict != Verdict::Fails) {
    r.verdict = b.verdict;
    r.covers = Covers::InteriorZeros;
    return r;
  }
  return inapplicable(r, "szwarc-ia and szwarc-ib both fail", a.violation->index);
}

BoundPair bound_half_line(const RecurrenceSpec& spec, int k) {
  BoundPair out;
  out.upper.name = "half_line_upper";
  out.upper.side = Side::Upper;
  out.upper.covers = Covers::AllZeros;
  out.lower.name = "half_line_lower";
  out.lower.side = Side::Lower;
  out.upper.value = kNaN;
  out.lower.value = kNaN;
  if (spec.form() != RecurrenceForm::HalfLine) {
    out.upper = inapplicable(out.upper, "requires half-line form");
    out.lower = inapplicable(out.lower, "requires half-line form");
    return out;
  }
  if (k < 1) {
    out.upper = inapplicable(out.upper, "requires k >= 1");
    out.lower = inapplicable(out.lower, "requires k >= 1");
    return out;
  }
  const Coefficients co = spec.coefficient(k);
  const double sb = std::sqrt(co.b);
  const double sc = std::sqrt(co.c);
  out.upper.value = (sb + sc) * (sb + sc);
  out.lower.value = (sb - sc) * (sb - sc);
  const RangeVerdict b = check_range(spec, ConditionId::SzwarcIIB, 1, k);
  if (b.verdict != Verdict::Fails) {
    out.upper.verdict = b.verdict;
    out.lower.verdict = b.verdict;
    out.lower.covers = Covers::AllZeros;
    out.lower.note = "szwarc-iib";
    out.upper.note = "szwarc-iib";
    return out;
  }
  const RangeVerdict a = check_range(spec, ConditionId::SzwarcIIA, 1, k);
  if (a.verdict != Verdict::Fails) {
    out.upper.verdict = a.verdict;
    out.lower.verdict = a.verdict;
    out.lower.covers = Covers::AllButSmallest;
    out.lower.note = "szwarc-iia";
    out.upper.note = "szwarc-iia";
    return out;
  }
  const int index = a.violation->index;
  out.upper = inapplicable(out.upper, "szwarc-iia and szwarc-iib both fail", index);
  out.lower = inapplicable(out.lower, "szwarc-iia and szwarc-iib both fail", index);
  return out;
}

double largest_cubic_root(double a3, double a2, double a1, double a0, double lo, double hi) {
  const auto f = [&](double y) { return ((a3 * y + a2) * y + a1) * y + a0; };
  const auto df = [&](double y) { return (3.0 * a3 * y + 2.0 * a2) * y + a1; };
  std::array<double, 4> cuts{lo, hi, hi, hi};
  int n = 1;
  // Critical points split [lo, hi] into monotone pieces.
  const double qa = 3.0 * a3, qb = 2.0 * a2, qc = a1;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (qa != 0.0 && disc > 0.0) {
    const double s = std::sqrt(disc);
    const double q = -0.5 * (qb + std::copysign(s, qb));
    double r1 = q / qa;
    double r2 = q != 0.0 ? qc / q : r1;
    if (r1 > r2) std::swap(r1, r2);
    for (double r : {r1, r2}) {
      if (r > lo && r < hi) cuts[static_cast<std::size_t>(n++)] = r;
    }
  } else if (qa == 0.0 && qb != 0.0) {
    const double r = -qc / qb;
    if (r > lo && r < hi) cuts[static_cast<std::size_t>(n++)] = r;
  }
  cuts[static_cast<std::size_t>(n)] = hi;
  for (int i = n; i >= 1; --i) {
    const double u = cuts[static_cast<std::size_t>(i - 1)];
    const double v = cuts[static_cast<std::size_t>(i)];
    const double fu = f(u);
    const double fv = f(v);
    if (fv == 0.0) return v;
    if (fu == 0.0) {
      if (i == 1) return u;
      continue;
    }
    if ((fu < 0.0) != (fv < 0.0)) return safeguarded_newton(f, df, u, v);
  }
  return kNaN;
}

double vir1_polynomial(double x, double a, double b, double e) {
  const double y = x * x;
  const double c4 = -2.0 * (4.0 * a + b + e);
  const double c2 = 16.0 * a * a + (b + e) * (b + e) + 4.0 * a * (5.0 * b + 2.0 * e);
  const double c0 = -16.0 * b * a * (3.0 * a + e);
  return ((y + c4) * y + c2) * y + c0;
}

double vir1_root(double a, double b, double e) {
  const double c4 = -2.0 * (4.0 * a + b + e);
  const double c2 = 16.0 * a * a + (b + e) * (b + e) + 4.0 * a * (5.0 * b + 2.0 * e);
  const double c0 = -16.0 * b * a * (3.0 * a + e);
  const double y = largest_cubic_root(1.0, c4, c2, c0, 0.0, 4.0 * a);
  return std::sqrt(y);
}

double vir1_hermite_closed_form(int k) {
  const double s = std::cbrt(std::pow(std::sqrt(double(k)) + std::sqrt(double(k - 1)), 2.0));
  return std::sqrt(2.0 * k - (1.0 + s) * (1.0 + s) / (2.0 * s));
}

BoundResult bound_vir1(const RecurrenceSpec& spec, int k) {
  BoundResult r;
  r.name = "vir1";
  r.value = kNaN;
  if (!symmetric(spec)) return inapplicable(r, "requires symmetric-monic form");
  if (k < 2) return inapplicable(r, "requires k >= 2");
  if (!coefficients_available(spec, k + 2)) return inapplicable(r, "needs c up to k+2", k + 2);
  r.verdict = Verdict::Holds;
  if (require(r, spec, ConditionId::Nondecreasing, 2, k + 2)) {
    require(r, spec, ConditionId::Cond1, 1, k);
  }
  r.value = vir1_root(spec.c(k - 1), spec.c(k), spec.c(k + 1));
  if (r.applicable() && !std::isfinite(r.value)) {
    throw SolverError("vir1: no root of F in (0, 4c_{k-1}] at k = " + std::to_string(k));
  }
  return r;
}

double thmain_value(double c_k, double d) {
  if (d == 0.0) return 2.0 * std::sqrt(c_k);
  const double v = std::sqrt(6.0 * d + 81.0);
  // v - 9 = 6d / (v + 9) avoids cancellation for small d.
  const double w = std::cbrt(v + 9.0) - std::cbrt(6.0 * d / (v + 9.0));
  const double factor = 1.0 - std::pow(6.0, -4.0 / 3.0) * std::cbrt(d * d) * w * w;
  return 2.0 * std::sqrt(c_k * factor);
}

double thmain_sextic_root(double b, double e) {
  const double y = largest_cubic_root(1.0, -4.0 * (e + 2.0 * b), 4.0 * (e + b) * (e + 5.0 * b),
                                      -64.0 * b * b * e, 0.0, 4.0 * b);
  return std::sqrt(y);
}

BoundResult bound_thmain(const RecurrenceSpec& spec, int k) {
  BoundResult r;
  r.name = "thmain";
  r.value = kNaN;
  if (!symmetric(spec)) return inapplicable(r, "requires symmetric-monic form");
  if (k < 1) return inapplicable(r, "requires k >= 1");
  if (!coefficients_available(spec, k + 1)) return inapplicable(r, "needs c up to k+1", k + 1);
  const double ck = spec.c(k);
  const double d = spec.c(k + 1) / ck - 1.0;
  r.note = "d = c_{k+1}/c_k - 1";
  if (d < 0.0) {
    r.value = k >= 2 ? 2.0 * std::sqrt(spec.c(k - 1)) : kNaN;
    r.note = "d < 0: first-order value shown";
    return inapplicable(r, "nondecreasing: c_{k+1} < c_k", k + 1);
  }
  r.verdict = Verdict::Holds;
  if (require(r, spec, ConditionId::Nondecreasing, 2, k + 1) &&
      require(r, spec, ConditionId::CondI, 0, k - 1)) {
    require(r, spec, ConditionId::CondII, 0, k - 1);
  }
  r.value = thmain_value(ck, d);
  if (d == 0.0) {
    r.note = "degenerate: equals first-order at shifted index";
  } else {
    const double check = thmain_sextic_root(ck, spec.c(k + 1));
    if (!(std::abs(check - r.value) <= 1e-9 * r.value)) {
      r.note += "; sextic root disagrees";
    }
  }
  return r;
}

double condsimpl_value(double c_k, double d) {
  const double cr = std::cbrt(d);
  const double denom = std::cbrt(2.0) + cr;
  return 2.0 * std::sqrt(c_k * (1.0 - cr * cr / (denom * denom)));
}

BoundResult bound_condsimpl(const RecurrenceSpec& spec, int k) {
  BoundResult r;
  r.name = "condsimpl";
  r.value = kNaN;
  if (!symmetric(spec)) return inapplicable(r, "requires symmetric-monic form");
  if (k < 2) return inapplicable(r, "requires k >= 2");
  if (!coefficients_available(spec, k + 1)) return inapplicable(r, "needs c up to k+1", k + 1);
  const double ck = spec.c(k);
  const double d = 1.0 - ck / spec.c(k + 1);
  r.note = "d = 1 - c_k/c_{k+1}";
  r.verdict = Verdict::Holds;
  if (require(r, spec, ConditionId::Nondecreasing, 2, k + 1)) {
    require(r, spec, ConditionId::CondNew, 1, k);
  }
  if (d < 0.0) {
    r.value = kNaN;
    return r;
  }
  r.value = condsimpl_value(ck, d);
  if (d == 0.0) r.note = "degenerate: equals first-order at shifted index";
  return r;
}

BoundResult bound_mnt(double c, double delta, int k) {
  BoundResult r;
  r.name = "mnt";
  r.value = kNaN;
  if (!(c > 0.0) || !(delta >= 0.0)) throw InputError("mnt needs c > 0 and delta >= 0");
  if (k < 2) return inapplicable(r, "requires k >= 2");
  const bool use_k = delta >= 0.5;
  const double kk = use_k ? double(k) : k + 0.5;
  const double dr = std::cbrt(delta);
  const double denom = std::cbrt(kk) + dr;
  r.value = std::pow(double(k), delta) * 2.0 * c * std::sqrt(1.0 - dr * dr / (denom * denom));
  r.verdict = Verdict::Holds;
  r.note = use_k ? "k in place of k+1/2" : "k+1/2";
  return r;
}

double marik_polynomial(double x, int k) {
  const double y = x * x;
  const double kd = k;
  return 8.0 * kd * kd * (kd + 1.0) - (6.0 * kd + 1.0) * (2.0 * kd + 1.0) * y +
         (6.0 * kd + 2.0) * y * y - y * y * y;
}

double marik_closed_form(int k) {
  const double kd = k;
  const double m =
      std::pow(2.0, -1.0 / 6.0) * std::cbrt(std::sqrt(27.0 * kd + 2.0) + std::sqrt(27.0 * kd));
  const double m2 = m * m;
  return (m2 - 1.0) * (m2 - 1.0) * std::sqrt(m2 * m2 + 4.0 * m2 + 1.0) /
         (3.0 * std::sqrt(3.0) * m2 * m);
}

double marik_sextic_root(int k) {
  const double kd = k;
  const double y = largest_cubic_root(-1.0, 6.0 * kd + 2.0, -(6.0 * kd + 1.0) * (2.0 * kd + 1.0),
                                      8.0 * kd * kd * (kd + 1.0), 0.0, 2.0 * kd + 2.0);
  return std::sqrt(y);
}

double marik_refined(int k) {
  const double kd = k;
  return std::sqrt((4.0 * kd - 3.0 * std::cbrt(kd) + 1.0) / 2.0);
}

MarikHermite bound_marik_hermite(int k, double slope) {
  MarikHermite out;
  out.sextic.name = "marik_hermite";
  out.refined.name = "marik_hermite_refined";
  out.sextic.value = kNaN;
  out.refined.value = kNaN;
  if (!(slope > 0.0)) throw InputError("marik_hermite needs slope > 0");
  if (k < 2) {
    out.sextic = inapplicable(out.sextic, "requires k >= 2");
    out.refined = inapplicable(out.refined, "requires k >= 2");
    return out;
  }
  const double scale = std::sqrt(2.0 * slope);
  out.sextic.value = scale * marik_closed_form(k);
  out.sextic.verdict = Verdict::Holds;
  if (!(std::abs(marik_sextic_root(k) - marik_closed_form(k)) <= 1e-9 * marik_closed_form(k))) {
    out.sextic.note = "sextic root disagrees";
  }
  out.refined.value = scale * marik_refined(k);
  out.refined.verdict = Verdict::Holds;
  return out;
}

double reference_asymptotic_mnt(double c, double delta, int k) {
  const double kd = k;
  const double second = c * std::cbrt(1.0 / 3.0) * std::cbrt(4.0 * delta * delta) * kAiryI1 *
                        std::pow(kd, -2.0 / 3.0);
  return std::pow(kd, delta) * (2.0 * c - second);
}

}  // namespace turan
