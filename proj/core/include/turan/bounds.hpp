#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "turan/families.hpp"

namespace turan {

/// Outcome of a hypothesis check. Boundary means equality was reached in an
/// inequality where equality matters; it still counts as satisfied.
enum class Verdict { Holds, Boundary, Fails };

std::string_view to_string(Verdict v);

/// Combine two verdicts: any failure fails, otherwise any boundary is a boundary.
Verdict combine(Verdict a, Verdict b);

enum class ConditionId {
  Nondecreasing,
  Cond1,
  CondI,
  CondII,
  CondNew,
  SzwarcIA,
  SzwarcIB,
  SzwarcIIA,
  SzwarcIIB,
  Tt2Ratio,
};

std::string_view to_string(ConditionId id);
ConditionId parse_condition(std::string_view text);
std::span<const ConditionId> all_conditions();

/// Conditions that apply to a given recurrence form.
bool condition_applies_to(ConditionId id, RecurrenceForm form);

/// Lowest index at which a condition is evaluated.
int condition_first_index(ConditionId id);

struct Violation {
  int index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string detail;
};

/// Pointwise check of one condition over indices first..k_max.
///
/// holds_up_to is the largest j such that every index in first..j holds
/// (first - 1 when the first index already fails). Indices whose
/// coefficients lie beyond a table's capacity are not checked.
struct ConditionReport {
  ConditionId id = ConditionId::Nondecreasing;
  Verdict verdict = Verdict::Holds;
  int first_index = 0;
  int holds_up_to = 0;
  std::optional<Violation> first_violation;
  std::optional<int> first_boundary;
};

/// Throws InputError when the condition does not apply to the spec's form.
ConditionReport check_condition(const RecurrenceSpec& spec, ConditionId id, int k_max);

/// Verdict of a condition restricted to indices lo..hi (inclusive), plus the
/// first failing index.
struct RangeVerdict {
  Verdict verdict = Verdict::Holds;
  std::optional<Violation> violation;
};
RangeVerdict check_range(const RecurrenceSpec& spec, ConditionId id, int lo, int hi);

enum class Side { Upper, Lower };

/// Which zeros a bound claims to cover.
enum class Covers {
  AllZeros,         // every zero (upper on |x| for symmetric families)
  LargestZero,      // x_kk only
  InteriorZeros,    // x_2k..x_{k-1,k} on |x|
  AllButSmallest,   // x_2k..x_kk
};

std::string_view to_string(Side s);
std::string_view to_string(Covers c);

struct BoundResult {
  std::string name;
  Side side = Side::Upper;
  Covers covers = Covers::AllZeros;
  double value = 0.0;
  Verdict verdict = Verdict::Fails;
  std::string failed_hypothesis;
  int failed_index = -1;
  std::string note;

  bool applicable() const noexcept { return verdict != Verdict::Fails; }
};

/// Upper and lower companions for bounds that come as a pair.
struct BoundPair {
  BoundResult upper;
  BoundResult lower;
};

/// Largest zero below 2 sqrt(c_{k-1}); trivial lower companion sqrt(c_{k-1}).
BoundPair bound_first_order(const RecurrenceSpec& spec, int k);

/// x_kk < 2 sqrt(c_{k-2}) when (3/4) c_j < c_{j-1} <= c_j.
BoundResult bound_tt2(const RecurrenceSpec& spec, int k);

/// UnitIntervalSymmetric: |x_ik| < 2 sqrt(b_k c_k).
BoundResult bound_finite_interval(const RecurrenceSpec& spec, int k);

/// HalfLine: zeros inside ((sqrt b_k - sqrt c_k)^2, (sqrt b_k + sqrt c_k)^2).
BoundPair bound_half_line(const RecurrenceSpec& spec, int k);

/// Largest root of the sextic F from the second-order Turan inequality.
BoundResult bound_vir1(const RecurrenceSpec& spec, int k);

/// Main second-order bound, growth convention d = c_{k+1}/c_k - 1.
BoundResult bound_thmain(const RecurrenceSpec& spec, int k);

/// Simplified second-order bound, ratio convention d = 1 - c_k/c_{k+1}.
BoundResult bound_condsimpl(const RecurrenceSpec& spec, int k);

/// Uniform bound for c_k = c^2 k^(2 delta), in the unscaled variable.
BoundResult bound_mnt(double c, double delta, int k);

/// Bounds for c_k = s*k from the fourth-degree S_k form: the sextic root
/// (upper) and the refined companion (note field), scaled by sqrt(2s).
struct MarikHermite {
  BoundResult sextic;
  BoundResult refined;
};
MarikHermite bound_marik_hermite(int k, double slope = 0.5);

/// Two-term asymptotic x_kk k^-delta ~ 2c - c 3^(-1/3) (2 delta)^(2/3) i_1 k^(-2/3).
/// Returns the unscaled x_kk estimate (multiplied by k^delta). Not a bound.
double reference_asymptotic_mnt(double c, double delta, int k);

/// First zero of Ai(-x) times 3^(1/3): 3^(1/3) * 2.338107410459767.
inline constexpr double kAiryI1 = 3.3721344080681663;

// Formula-level helpers shared with tests and the acceptance suite.

/// 2 sqrt(c_k (1 - d^(2/3) / (2^(1/3) + d^(1/3))^2)).
double condsimpl_value(double c_k, double d);

/// 2 sqrt(c_k (1 - 6^(-4/3) d^(2/3) ((v+9)^(1/3) - (v-9)^(1/3))^2)), v = sqrt(6d + 81).
double thmain_value(double c_k, double d);

/// Largest root in (0, 4c_k] of the thmain sextic in y = x^2, returned as x.
double thmain_sextic_root(double c_k, double c_k1);

/// Largest root in (0, 4c_{k-1}] of the vir1 sextic in y = x^2, returned as x.
/// Returns NaN when the cubic has no root there.
double vir1_root(double c_km1, double c_k, double c_k1);

/// The vir1 sextic F(x).
double vir1_polynomial(double x, double c_km1, double c_k, double c_k1);

/// Closed form of the vir1 root for c_k = k/2.
double vir1_hermite_closed_form(int k);

/// S_k sextic 8k^2(k+1) - (6k+1)(2k+1)x^2 + (6k+2)x^4 - x^6 for c_k = k/2.
double marik_polynomial(double x, int k);
double marik_closed_form(int k);
double marik_sextic_root(int k);
double marik_refined(int k);

/// Largest root of a cubic a3 y^3 + a2 y^2 + a1 y + a0 inside [lo, hi],
/// by safeguarded Newton on monotone pieces. NaN when none.
double largest_cubic_root(double a3, double a2, double a1, double a0, double lo, double hi);

}  // namespace turan
