#include "turan/families.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace turan {

namespace {

constexpr std::array<std::string_view, 7> kBuiltinNames = {
    "hermite-monic", "probabilist-hermite", "power-law",    "geometric",
    "chebyshev",     "laguerre-normalized", "table",
};

std::string index_message(std::string_view what, int k) {
  std::ostringstream os;
  os << what << " at k=" << k;
  return os.str();
}

}  // namespace

std::string_view to_string(RecurrenceForm form) {
  switch (form) {
    case RecurrenceForm::SymmetricMonic: return "symmetric-monic";
    case RecurrenceForm::GeneralMonic: return "general-monic";
    case RecurrenceForm::UnitIntervalSymmetric: return "unit-interval";
    case RecurrenceForm::HalfLine: return "half-line";
  }
  return "unknown";
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Constant: return "constant";
    case FamilyKind::Linear: return "linear";
    case FamilyKind::PowerLaw: return "power";
    case FamilyKind::Geometric: return "geometric";
    case FamilyKind::Table: return "table";
    case FamilyKind::Composite: return "composite";
  }
  return "unknown";
}

RecurrenceForm parse_form(std::string_view text) {
  if (text == "symmetric-monic") return RecurrenceForm::SymmetricMonic;
  if (text == "general-monic") return RecurrenceForm::GeneralMonic;
  if (text == "unit-interval") return RecurrenceForm::UnitIntervalSymmetric;
  if (text == "half-line") return RecurrenceForm::HalfLine;
  throw InputError("unknown recurrence form '" + std::string(text) + "'");
}

FamilyKind parse_kind(std::string_view text) {
  if (text == "constant") return FamilyKind::Constant;
  if (text == "linear") return FamilyKind::Linear;
  if (text == "power" || text == "power-law") return FamilyKind::PowerLaw;
  if (text == "geometric") return FamilyKind::Geometric;
  if (text == "table") return FamilyKind::Table;
  throw InputError("unknown family kind '" + std::string(text) + "'");
}

RecurrenceSpec RecurrenceSpec::closed_form(RecurrenceForm form, FamilyKind kind,
                                           FamilyParams params) {
  if (kind == FamilyKind::Table || kind == FamilyKind::Composite) {
    throw InputError("closed_form() does not build table or composite specs");
  }
  if (kind == FamilyKind::PowerLaw && (!(params.c > 0.0) || !(params.delta >= 0.0))) {
    throw InputError("power law needs c > 0 and delta >= 0");
  }
  if (kind == FamilyKind::Geometric && !(params.ratio > 0.0)) {
    throw InputError("geometric ratio must be positive");
  }
  RecurrenceSpec spec;
  spec.form_ = form;
  spec.kind_ = kind;
  spec.params_ = params;
  spec.name_ = std::string(to_string(kind));
  return spec;
}

RecurrenceSpec RecurrenceSpec::constant(double value, RecurrenceForm form) {
  FamilyParams p;
  p.value = value;
  return closed_form(form, FamilyKind::Constant, p);
}

RecurrenceSpec RecurrenceSpec::linear(double slope, double intercept, RecurrenceForm form) {
  FamilyParams p;
  p.slope = slope;
  p.intercept = intercept;
  return closed_form(form, FamilyKind::Linear, p);
}

RecurrenceSpec RecurrenceSpec::power_law(double c, double delta) {
  FamilyParams p;
  p.c = c;
  p.delta = delta;
  return closed_form(RecurrenceForm::SymmetricMonic, FamilyKind::PowerLaw, p);
}

RecurrenceSpec RecurrenceSpec::geometric(double ratio, double scale) {
  FamilyParams p;
  p.ratio = ratio;
  p.c = scale;
  return closed_form(RecurrenceForm::SymmetricMonic, FamilyKind::Geometric, p);
}

RecurrenceSpec RecurrenceSpec::table(RecurrenceForm form, std::vector<double> c,
                                     std::vector<double> b, std::vector<double> a) {
  if (c.empty()) throw InputError("coefficient table needs at least c_0");
  if (form == RecurrenceForm::HalfLine && b.empty()) {
    throw InputError("half-line table needs explicit b coefficients");
  }
  std::size_t n = c.size();
  if (!b.empty()) n = std::min(n, b.size());
  if (!a.empty()) n = std::min(n, a.size());

  RecurrenceSpec spec;
  spec.form_ = form;
  spec.kind_ = FamilyKind::Table;
  spec.builtin_ = Builtin::Table;
  spec.name_ = "table";
  spec.max_degree_ = static_cast<int>(n) - 1;
  spec.tables_ = std::make_shared<const Tables>(Tables{std::move(a), std::move(b), std::move(c)});
  return spec;
}

RecurrenceSpec RecurrenceSpec::composite(const RecurrenceSpec& base, std::vector<double> factors,
                                         double c_scale) {
  if (!(c_scale > 0.0)) throw InputError("composite scale must be positive");
  RecurrenceSpec spec;
  spec.form_ = base.form_;
  spec.kind_ = FamilyKind::Composite;
  spec.name_ = base.name_ + "*";
  spec.max_degree_ = base.max_degree_;
  if (!factors.empty()) {
    const int cap = static_cast<int>(factors.size()) - 1;
    spec.max_degree_ = spec.max_degree_ ? std::min(*spec.max_degree_, cap) : cap;
  }
  spec.composite_ = std::make_shared<const CompositeData>(
      CompositeData{std::make_shared<const RecurrenceSpec>(base), std::move(factors), c_scale});
  return spec;
}

RecurrenceSpec RecurrenceSpec::with_name(std::string name) const {
  RecurrenceSpec copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

RecurrenceSpec RecurrenceSpec::with_builtin(Builtin builtin) const {
  RecurrenceSpec copy = *this;
  copy.builtin_ = builtin;
  return copy;
}

const std::vector<double>& RecurrenceSpec::table_a() const {
  static const std::vector<double> empty;
  return tables_ ? tables_->a : empty;
}
const std::vector<double>& RecurrenceSpec::table_b() const {
  static const std::vector<double> empty;
  return tables_ ? tables_->b : empty;
}
const std::vector<double>& RecurrenceSpec::table_c() const {
  static const std::vector<double> empty;
  return tables_ ? tables_->c : empty;
}

Coefficients RecurrenceSpec::raw_coefficient(int k) const {
  Coefficients co;
  if (kind_ == FamilyKind::Composite) {
    co = composite_->base->coefficient(k);
    const auto& f = composite_->factors;
    double factor = composite_->c_scale;
    if (!f.empty()) factor *= f[static_cast<std::size_t>(k)];
    co.c *= factor;
    if (form_ == RecurrenceForm::UnitIntervalSymmetric && k > 0) co.b = 1.0 - co.c;
    if (form_ == RecurrenceForm::HalfLine) co.a = co.b + co.c;
    return co;
  }

  if (kind_ == FamilyKind::Table) {
    const auto idx = static_cast<std::size_t>(k);
    co.c = tables_->c[idx];
    if (!tables_->a.empty()) co.a = tables_->a[idx];
    if (!tables_->b.empty()) {
      co.b = tables_->b[idx];
    } else if (form_ == RecurrenceForm::UnitIntervalSymmetric) {
      co.b = k == 0 ? 1.0 : 1.0 - co.c;
    }
    if (form_ == RecurrenceForm::SymmetricMonic) {
      co.a = 0.0;
      co.b = 1.0;
    }
    if (form_ == RecurrenceForm::HalfLine) co.a = co.b + co.c;
    return co;
  }

  const double kk = static_cast<double>(k);
  if (k > 0) {
    switch (kind_) {
      case FamilyKind::Constant: co.c = params_.value; break;
      case FamilyKind::Linear: co.c = params_.slope * kk + params_.intercept; break;
      case FamilyKind::PowerLaw:
        co.c = params_.c * params_.c * std::pow(kk, 2.0 * params_.delta);
        break;
      case FamilyKind::Geometric: co.c = params_.c * std::pow(params_.ratio, kk); break;
      default: break;
    }
  }
  switch (form_) {
    case RecurrenceForm::SymmetricMonic: break;
    case RecurrenceForm::UnitIntervalSymmetric: co.b = k == 0 ? 1.0 : 1.0 - co.c; break;
    case RecurrenceForm::GeneralMonic:
      co.a = params_.a;
      co.b = params_.b_slope * kk + params_.b_intercept;
      break;
    case RecurrenceForm::HalfLine:
      co.b = params_.b_slope * kk + params_.b_intercept;
      co.a = co.b + co.c;
      break;
  }
  return co;
}

void RecurrenceSpec::validate(int k, const Coefficients& co) const {
  if (!std::isfinite(co.a) || !std::isfinite(co.b) || !std::isfinite(co.c)) {
    throw CoefficientError(index_message("non-finite coefficient", k), k);
  }
  if (k == 0) {
    if (co.c != 0.0) throw CoefficientError(index_message("c_0 must be 0", k), k);
  } else if (!(co.c > 0.0)) {
    throw CoefficientError(index_message("c_k must be positive", k), k);
  }
  if (!(co.b > 0.0)) throw CoefficientError(index_message("b_k must be positive", k), k);
  if (form_ == RecurrenceForm::UnitIntervalSymmetric) {
    if (std::abs(co.b + co.c - 1.0) > 4.0 * std::numeric_limits<double>::epsilon()) {
      throw CoefficientError(index_message("unit-interval form needs b_k + c_k = 1", k), k);
    }
  }
}

Coefficients RecurrenceSpec::coefficient(int k) const {
  if (k < 0) throw CoefficientError(index_message("negative coefficient index", k), k);
  if (max_degree_ && k > *max_degree_) {
    throw CoefficientError(index_message("coefficient index beyond table capacity", k), k);
  }
  const Coefficients co = raw_coefficient(k);
  validate(k, co);
  return co;
}

std::optional<PowerLawParams> RecurrenceSpec::power_law_params() const {
  if (form_ != RecurrenceForm::SymmetricMonic) return std::nullopt;
  switch (kind_) {
    case FamilyKind::PowerLaw: return PowerLawParams{params_.c, params_.delta};
    case FamilyKind::Constant:
      if (params_.value > 0.0) return PowerLawParams{std::sqrt(params_.value), 0.0};
      return std::nullopt;
    case FamilyKind::Linear:
      if (params_.intercept == 0.0 && params_.slope > 0.0) {
        return PowerLawParams{std::sqrt(params_.slope), 0.5};
      }
      return std::nullopt;
    case FamilyKind::Composite:
      if (composite_->factors.empty()) {
        if (auto base = composite_->base->power_law_params()) {
          return PowerLawParams{base->c * std::sqrt(composite_->c_scale), base->delta};
        }
      }
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::optional<double> RecurrenceSpec::hermite_slope() const {
  if (form_ != RecurrenceForm::SymmetricMonic) return std::nullopt;
  if (kind_ == FamilyKind::Linear && params_.intercept == 0.0 && params_.slope > 0.0) {
    return params_.slope;
  }
  if (kind_ == FamilyKind::PowerLaw && params_.delta == 0.5) return params_.c * params_.c;
  if (kind_ == FamilyKind::Composite && composite_->factors.empty()) {
    if (auto s = composite_->base->hermite_slope()) return *s * composite_->c_scale;
  }
  return std::nullopt;
}

DifferenceProfile difference_profile(const RecurrenceSpec& spec, int k_max) {
  if (spec.form() != RecurrenceForm::SymmetricMonic) {
    throw InputError("difference profile needs a symmetric-monic spec");
  }
  if (k_max < 1) throw InputError("difference profile needs k_max >= 1");
  DifferenceProfile prof;
  const auto n = static_cast<std::size_t>(k_max) + 1;
  prof.ratio.assign(n, std::numeric_limits<double>::quiet_NaN());
  prof.growth.assign(n, std::numeric_limits<double>::quiet_NaN());
  prof.increments.assign(n, std::numeric_limits<double>::quiet_NaN());

  double prev = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const double ck = spec.c(k);
    if (ck < prev) {
      throw MonotonicityError(index_message("c_k decreases", k), k);
    }
    const auto i = static_cast<std::size_t>(k);
    prof.increments[i] = ck - prev;
    prof.ratio[i] = (ck - prev) / ck;
    prof.growth[i] = k == 1 ? std::numeric_limits<double>::infinity() : ck / prev - 1.0;
    prev = ck;
  }
  return prof;
}

std::span<const std::string_view> builtin_names() { return kBuiltinNames; }

RecurrenceSpec make_builtin(std::string_view name, std::span<const double> params) {
  auto param = [&](std::size_t i, double fallback) {
    return i < params.size() ? params[i] : fallback;
  };

  if (name == "hermite-monic") {
    return RecurrenceSpec::linear(0.5, 0.0).with_name("hermite-monic").with_builtin(
        Builtin::HermiteMonic);
  }
  if (name == "probabilist-hermite") {
    return RecurrenceSpec::linear(1.0, 0.0)
        .with_name("probabilist-hermite")
        .with_builtin(Builtin::ProbabilistHermite);
  }
  if (name == "power-law") {
    return RecurrenceSpec::power_law(param(0, 1.0), param(1, 1.0))
        .with_name("power-law")
        .with_builtin(Builtin::PowerLaw);
  }
  if (name == "geometric") {
    const double ratio = param(0, 2.0);
    if (!(ratio > 0.0)) throw InputError("geometric ratio must be positive");
    return RecurrenceSpec::geometric(ratio, param(1, 1.0))
        .with_name("geometric")
        .with_builtin(Builtin::Geometric);
  }
  if (name == "chebyshev") {
    return RecurrenceSpec::constant(0.5, RecurrenceForm::UnitIntervalSymmetric)
        .with_name("chebyshev")
        .with_builtin(Builtin::Chebyshev);
  }
  if (name == "laguerre-normalized") {
    const double alpha = param(0, 0.0);
    if (!(alpha > -1.0)) throw InputError("laguerre-normalized needs alpha > -1");
    FamilyParams p;
    p.slope = 1.0;
    p.intercept = 0.0;
    p.b_slope = 1.0;
    p.b_intercept = alpha + 1.0;
    p.alpha = alpha;
    return RecurrenceSpec::closed_form(RecurrenceForm::HalfLine, FamilyKind::Linear, p)
        .with_name("laguerre-normalized")
        .with_builtin(Builtin::LaguerreNormalized);
  }
  if (name == "table") {
    return RecurrenceSpec::table(RecurrenceForm::SymmetricMonic,
                                 std::vector<double>(params.begin(), params.end()));
  }
  throw InputError("unknown family '" + std::string(name) + "'");
}

}  // namespace turan
