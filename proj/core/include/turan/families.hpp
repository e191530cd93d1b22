#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

/// Normalization of the three-term recurrence b_k p_{k+1} = (x - a_k) p_k - c_k p_{k-1}.
///
///   SymmetricMonic         p_{k+1} = x p_k - c_k p_{k-1}, c_0 = 0, c_k > 0.
///   GeneralMonic           the full relation, b_k > 0, c_k > 0, c_0 = 0.
///   UnitIntervalSymmetric  a_k = 0, b_k + c_k = 1, so p_k(1) = 1.
///   HalfLine               x p_k = -b_k p_{k+1} + (b_k + c_k) p_k - c_k p_{k-1},
///                          so p_k(0) = 1 and the leading sign is (-1)^k.
enum class RecurrenceForm { SymmetricMonic, GeneralMonic, UnitIntervalSymmetric, HalfLine };

enum class FamilyKind { Constant, Linear, PowerLaw, Geometric, Table, Composite };

/// Which named family a spec was built from; drives family-specific bounds
/// and the x-ranges where the Laguerre-Polya inequalities are known to hold.
enum class Builtin {
  None,
  HermiteMonic,
  ProbabilistHermite,
  PowerLaw,
  Geometric,
  Chebyshev,
  LaguerreNormalized,
  Table,
};

std::string_view to_string(RecurrenceForm form);
std::string_view to_string(FamilyKind kind);
RecurrenceForm parse_form(std::string_view text);
FamilyKind parse_kind(std::string_view text);

/// Coefficient triple at one index. For HalfLine, `a` is the Jacobi diagonal
/// b_k + c_k (the coefficient of p_k in the recurrence).
struct Coefficients {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
};

/// Parameters of the closed-form kinds. Unused fields are ignored.
struct FamilyParams {
  double value = 1.0;      // Constant: c_k = value
  double slope = 1.0;      // Linear: c_k = slope*k + intercept
  double intercept = 0.0;
  double c = 1.0;          // PowerLaw: c_k = c^2 k^(2 delta); Geometric: c_k = c * ratio^k
  double delta = 0.0;
  double ratio = 2.0;
  double a = 0.0;          // GeneralMonic closed forms: a_k = a
  double b_slope = 0.0;    // GeneralMonic/HalfLine closed forms: b_k = b_slope*k + b_intercept
  double b_intercept = 1.0;
  double alpha = 0.0;      // metadata for laguerre-normalized
};

struct PowerLawParams {
  double c;
  double delta;
};

/// An immutable coefficient source. Copies share their tables.
class RecurrenceSpec {
 public:
  static RecurrenceSpec closed_form(RecurrenceForm form, FamilyKind kind, FamilyParams params);
  static RecurrenceSpec constant(double value, RecurrenceForm form = RecurrenceForm::SymmetricMonic);
  static RecurrenceSpec linear(double slope, double intercept,
                               RecurrenceForm form = RecurrenceForm::SymmetricMonic);
  static RecurrenceSpec power_law(double c, double delta);
  static RecurrenceSpec geometric(double ratio, double scale = 1.0);
  /// Explicit coefficient lists indexed from 0. Empty `a`/`b` take the
  /// form's defaults; `c[0]` must be 0.
  static RecurrenceSpec table(RecurrenceForm form, std::vector<double> c,
                              std::vector<double> b = {}, std::vector<double> a = {});
  /// c_k of `base` multiplied by `c_scale * factors[k]` (factors may be empty).
  static RecurrenceSpec composite(const RecurrenceSpec& base, std::vector<double> factors,
                                  double c_scale = 1.0);

  RecurrenceForm form() const noexcept { return form_; }
  FamilyKind kind() const noexcept { return kind_; }
  Builtin builtin() const noexcept { return builtin_; }
  const FamilyParams& params() const noexcept { return params_; }
  const std::string& name() const noexcept { return name_; }

  /// Largest index whose coefficients are available; nullopt when unbounded.
  std::optional<int> max_degree() const noexcept { return max_degree_; }

  /// Validated coefficient triple. Throws CoefficientError beyond capacity or
  /// when the form's positivity constraints fail at k.
  Coefficients coefficient(int k) const;
  double c(int k) const { return coefficient(k).c; }

  /// (c, delta) when c_k = c^2 k^(2 delta) exactly: PowerLaw, symmetric
  /// Constant (delta = 0) and symmetric Linear through the origin (delta = 1/2).
  std::optional<PowerLawParams> power_law_params() const;

  /// Slope s when the spec is symmetric with c_k = s*k (a rescaled monic Hermite).
  std::optional<double> hermite_slope() const;

  RecurrenceSpec with_name(std::string name) const;
  RecurrenceSpec with_builtin(Builtin builtin) const;

  const std::vector<double>& table_a() const;
  const std::vector<double>& table_b() const;
  const std::vector<double>& table_c() const;

 private:
  struct Tables {
    std::vector<double> a, b, c;
  };
  struct CompositeData {
    std::shared_ptr<const RecurrenceSpec> base;
    std::vector<double> factors;
    double c_scale = 1.0;
  };

  RecurrenceSpec() = default;
  Coefficients raw_coefficient(int k) const;
  void validate(int k, const Coefficients& co) const;

  RecurrenceForm form_ = RecurrenceForm::SymmetricMonic;
  FamilyKind kind_ = FamilyKind::Constant;
  Builtin builtin_ = Builtin::None;
  FamilyParams params_{};
  std::string name_;
  std::optional<int> max_degree_;
  std::shared_ptr<const Tables> tables_;
  std::shared_ptr<const CompositeData> composite_;
};

/// Relative increments of a nondecreasing SymmetricMonic sequence.
/// Both conventions are exposed, indexed by k (entry 0 is unused):
///   d_ratio(k)  = (c_k - c_{k-1}) / c_k     (d_ratio(1) = 1 because c_0 = 0)
///   d_growth(k) = c_k / c_{k-1} - 1         (d_growth(1) = +inf)
///   delta(k)    = c_k - c_{k-1}
struct DifferenceProfile {
  std::vector<double> ratio;
  std::vector<double> growth;
  std::vector<double> increments;

  int k_max() const noexcept { return static_cast<int>(ratio.size()) - 1; }
  double d_ratio(int k) const { return ratio.at(static_cast<std::size_t>(k)); }
  double d_growth(int k) const { return growth.at(static_cast<std::size_t>(k)); }
  double delta(int k) const { return increments.at(static_cast<std::size_t>(k)); }
};

/// Thrown when a sequence required to be nondecreasing decreases at `index`.
class MonotonicityError : public InputError {
 public:
  MonotonicityError(const std::string& what, int index) : InputError(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

DifferenceProfile difference_profile(const RecurrenceSpec& spec, int k_max);

/// Names accepted by make_builtin.
std::span<const std::string_view> builtin_names();

/// hermite-monic, probabilist-hermite, power-law [c, delta], geometric [ratio, scale],
/// chebyshev, laguerre-normalized [alpha], table [c_0, c_1, ...].
RecurrenceSpec make_builtin(std::string_view name, std::span<const double> params = {});

}  // namespace turan
