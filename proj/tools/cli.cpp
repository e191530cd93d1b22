#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "family_io.hpp"
#include "json_writer.hpp"
#include "turan/bounds.hpp"
#include "turan/verifier.hpp"
#include "turan/zerofinder.hpp"

namespace turan::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kEps = std::numeric_limits<double>::epsilon();

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw InputError("unknown format '" + text + "' (expected text, csv or json)");
}

int parse_int(std::string_view text, std::string_view what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw InputError("bad integer '" + std::string(text) + "' for " + std::string(what));
  }
  return v;
}

KRange parse_k_range(const std::string& text) {
  std::size_t sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find(':');
    skip = 1;
  }
  KRange r;
  if (sep == std::string::npos) {
    r.lo = r.hi = parse_int(text, "k");
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, sep), "k");
    r.hi = parse_int(std::string_view(text).substr(sep + skip), "k");
  }
  if (r.lo < 1 || r.hi < r.lo) throw InputError("invalid degree range '" + text + "'");
  return r;
}

unsigned worker_count(int jobs) {
  unsigned n = 0;
  if (const char* env = std::getenv("TURAN_ZEROS_THREADS"); env != nullptr && *env != '\0') {
    const int v = parse_int(env, "TURAN_ZEROS_THREADS");
    if (v < 0) throw InputError("TURAN_ZEROS_THREADS must be nonnegative");
    n = static_cast<unsigned>(v);
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::min<unsigned>(n, static_cast<unsigned>(std::max(jobs, 1)));
}

// Runs job(i) for i in [0, n) on a small pool; the first exception by index is rethrown.
template <class F>
void parallel_for(int n, F job) {
  const unsigned workers = worker_count(n);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Json optional_number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// ---------------------------------------------------------------- zeros

int cmd_zeros(const FamilyArg& fam, int k, double tol, Format format, std::ostream& out) {
  if (k < 1) throw InputError("degree must be at least 1");
  const ZeroSet z = zeros(fam.spec, k, tol);
  switch (format) {
    case Format::Text:
      for (double x : z.zeros) out << format_number(x) << '\n';
      break;
    case Format::Csv:
      out << "index,zero,enclosure\n";
      for (int i = 0; i < z.k(); ++i) {
        out << i + 1 << ',' << format_number(z.zeros[static_cast<std::size_t>(i)]) << ','
            << format_number(z.enclosure[static_cast<std::size_t>(i)]) << '\n';
      }
      break;
    case Format::Json: {
      Json j;
      j["family"] = fam.label;
      j["k"] = k;
      j["tol"] = tol;
      j["zeros"] = z.zeros;
      j["enclosure"] = z.enclosure;
      write_json(out, j);
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bounds

struct SweepRow {
  int k = 0;
  double x_min = 0.0;
  double x_kk = 0.0;
  double max_abs = 0.0;        // largest |zero|
  double interior_abs = 0.0;   // largest |x_ik| over 2 <= i <= k-1
  double second = 0.0;         // x_2k
  double slack = 0.0;          // numerical uncertainty of the zeros
  std::vector<BoundResult> bounds;
  std::optional<double> rayleigh;
  std::optional<double> reference_mnt;
  std::vector<std::string> violations;

  const BoundResult* find(std::string_view name) const {
    for (const auto& b : bounds) {
      if (b.name == name) return &b;
    }
    return nullptr;
  }
};

// Signed distance by which a bound clears the zeros it covers (positive is sound).
double margin(const SweepRow& row, const BoundResult& b) {
  if (b.side == Side::Upper) {
    switch (b.covers) {
      case Covers::AllZeros:
        return b.value - row.max_abs;
      case Covers::InteriorZeros:
        return b.value - row.interior_abs;
      default:
        return b.value - row.x_kk;
    }
  }
  switch (b.covers) {
    case Covers::AllZeros:
      return row.x_min - b.value;
    case Covers::AllButSmallest:
      return row.second - b.value;
    default:
      return row.x_kk - b.value;
  }
}

SweepRow compute_row(const RecurrenceSpec& spec, int k, double tol) {
  SweepRow row;
  row.k = k;
  // Only the outer two zeros on each side enter the bounds.
  const ExtremeZeros ez = extreme_zeros(spec, k, tol);
  row.x_min = ez.smallest;
  row.x_kk = ez.largest;
  double enclosure = std::max(ez.smallest_enclosure, ez.largest_enclosure);
  row.max_abs = std::max(std::abs(row.x_min), std::abs(row.x_kk));
  row.second = row.x_kk;
  if (k >= 3) {
    row.second = zero_at(spec, k, 2, tol);
    const double penultimate = zero_at(spec, k, k - 1, tol);
    row.interior_abs = std::max(std::abs(row.second), std::abs(penultimate));
    enclosure = std::max(enclosure, tol * (1.0 + row.max_abs));
  } else if (k == 2) {
    row.second = row.x_kk;
  }
  row.slack = enclosure + 8.0 * kEps * (1.0 + row.max_abs);

  switch (spec.form()) {
    case RecurrenceForm::SymmetricMonic: {
      const BoundPair first = bound_first_order(spec, k);
      row.bounds.push_back(first.upper);
      row.bounds.push_back(bound_tt2(spec, k));
      row.bounds.push_back(bound_vir1(spec, k));
      row.bounds.push_back(bound_thmain(spec, k));
      row.bounds.push_back(bound_condsimpl(spec, k));
      if (const auto pl = spec.power_law_params()) {
        row.bounds.push_back(bound_mnt(pl->c, pl->delta, k));
        if (k >= 2) row.reference_mnt = reference_asymptotic_mnt(pl->c, pl->delta, k);
      }
      if (const auto s = spec.hermite_slope()) {
        const MarikHermite m = bound_marik_hermite(k, *s);
        row.bounds.push_back(m.sextic);
        row.bounds.push_back(m.refined);
      }
      row.bounds.push_back(first.lower);
      row.rayleigh = rayleigh_lower(spec, k).value;
      break;
    }
    case RecurrenceForm::UnitIntervalSymmetric:
      row.bounds.push_back(bound_finite_interval(spec, k));
      break;
    case RecurrenceForm::HalfLine: {
      const BoundPair hl = bound_half_line(spec, k);
      row.bounds.push_back(hl.upper);
      row.bounds.push_back(hl.lower);
      break;
    }
    case RecurrenceForm::GeneralMonic:
      break;
  }

  for (const auto& b : row.bounds) {
    if (!b.applicable() || !std::isfinite(b.value)) continue;
    const double m = margin(row, b);
    // Equality is part of the claim only for boundary verdicts; otherwise the
    // bound must clear the zero by more than the solver's uncertainty.
    const bool bad = b.verdict == Verdict::Boundary ? m < -row.slack : m <= -row.slack;
    if (bad) {
      row.violations.push_back(b.name + " at k=" + std::to_string(k) + ": bound " +
                               format_number(b.value) + " vs zero margin " + format_number(m));
    }
  }
  if (row.rayleigh && *row.rayleigh > row.x_kk + 1e-12 * (1.0 + std::abs(row.x_kk))) {
    row.violations.push_back("rayleigh_lower at k=" + std::to_string(k) + ": " +
                             format_number(*row.rayleigh) + " exceeds x_kk");
  }
  return row;
}

struct Column {
  std::string_view name;
  bool with_ok;
};

constexpr Column kColumns[] = {
    {"first_order", true},    {"tt2", true},           {"vir1", true},
    {"thmain", true},         {"condsimpl", true},     {"mnt", true},
    {"marik_hermite", true},  {"lower_trivial", false}, {"rayleigh_lower", false},
    {"reference_mnt", false},
};

std::vector<Column> select_columns(const std::string& list) {
  std::vector<Column> out;
  if (list.empty()) return {std::begin(kColumns), std::end(kColumns)};
  std::string_view rest = list;
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string_view name = rest.substr(0, comma);
    const auto it = std::find_if(std::begin(kColumns), std::end(kColumns),
                                 [&](const Column& c) { return c.name == name; });
    if (it == std::end(kColumns)) throw InputError("unknown bound column '" + std::string(name) + "'");
    out.push_back(*it);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

std::string ok_cell(const BoundResult* b) {
  if (b == nullptr || !b->applicable()) return "0";
  return b->verdict == Verdict::Boundary ? "boundary" : "1";
}

std::string value_cell(const SweepRow& row, std::string_view name) {
  if (name == "rayleigh_lower") return row.rayleigh ? format_number(*row.rayleigh) : "";
  if (name == "reference_mnt") return row.reference_mnt ? format_number(*row.reference_mnt) : "";
  const BoundResult* b = row.find(name);
  if (b == nullptr || !b->applicable() || !std::isfinite(b->value)) return "";
  return format_number(b->value);
}

Json bound_json(const SweepRow& row, const BoundResult& b) {
  Json j;
  j["name"] = b.name;
  j["side"] = std::string(to_string(b.side));
  j["covers"] = std::string(to_string(b.covers));
  j["applicable"] = b.applicable();
  j["verdict"] = std::string(to_string(b.verdict));
  j["value"] = b.applicable() ? optional_number(b.value) : Json(nullptr);
  j["gap"] = b.applicable() && std::isfinite(b.value) ? Json(margin(row, b)) : Json(nullptr);
  if (!b.failed_hypothesis.empty()) j["failed_hypothesis"] = b.failed_hypothesis;
  if (b.failed_index >= 0) j["failed_index"] = b.failed_index;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

int cmd_bounds(const FamilyArg& fam, KRange range, const std::string& bound_list, double tol,
               Format format, std::ostream& out, std::ostream& err) {
  const std::vector<Column> columns = select_columns(bound_list);
  const int n = range.hi - range.lo + 1;
  std::vector<SweepRow> rows(static_cast<std::size_t>(n));
  parallel_for(n, [&](int i) {
    rows[static_cast<std::size_t>(i)] = compute_row(fam.spec, range.lo + i, tol);
  });

  std::vector<std::string> violations;
  for (const auto& row : rows) {
    violations.insert(violations.end(), row.violations.begin(), row.violations.end());
  }

  switch (format) {
    case Format::Csv: {
      out << "family,k,x_kk";
      for (const auto& c : columns) {
        out << ',' << c.name;
        if (c.with_ok) out << ',' << c.name << "_ok";
      }
      out << '\n';
      for (const auto& row : rows) {
        out << fam.label << ',' << row.k << ',' << format_number(row.x_kk);
        for (const auto& c : columns) {
          out << ',' << value_cell(row, c.name);
          if (c.with_ok) out << ',' << ok_cell(row.find(c.name));
        }
        out << '\n';
      }
      break;
    }
    case Format::Json: {
      Json j;
      j["family"] = fam.label;
      j["k_lo"] = range.lo;
      j["k_hi"] = range.hi;
      Json rows_json = Json::array();
      for (const auto& row : rows) {
        Json r;
        r["k"] = row.k;
        r["x_min"] = row.x_min;
        r["x_kk"] = row.x_kk;
        Json bounds = Json::array();
        for (const auto& b : row.bounds) bounds.push_back(bound_json(row, b));
        r["bounds"] = bounds;
        r["rayleigh_lower"] = row.rayleigh ? Json(*row.rayleigh) : Json(nullptr);
        r["reference_mnt"] = row.reference_mnt ? Json(*row.reference_mnt) : Json(nullptr);
        rows_json.push_back(r);
      }
      j["rows"] = rows_json;
      j["violations"] = violations;
      write_json(out, j);
      break;
    }
    case Format::Text:
      for (const auto& row : rows) {
        out << fam.label << " k=" << row.k << " x_kk=" << format_number(row.x_kk) << '\n';
        for (const auto& b : row.bounds) {
          out << "  " << b.name << ' ';
          if (b.applicable()) {
            out << format_number(b.value) << ' ' << to_string(b.verdict);
          } else {
            out << "n/a (" << b.failed_hypothesis << ')';
          }
          out << '\n';
        }
        if (row.rayleigh) out << "  rayleigh_lower " << format_number(*row.rayleigh) << '\n';
        if (row.reference_mnt) {
          out << "  reference_mnt " << format_number(*row.reference_mnt) << '\n';
        }
      }
      break;
  }
  for (const auto& v : violations) err << "violation: " << v << '\n';
  return violations.empty() ? kExitOk : kExitBoundViolation;
}

// ---------------------------------------------------------------- verify

enum class Suite { Identities, Inequalities, All };

Suite parse_suite(const std::string& text) {
  if (text == "identities") return Suite::Identities;
  if (text == "inequalities") return Suite::Inequalities;
  if (text == "all") return Suite::All;
  throw InputError("unknown suite '" + text + "' (expected identities, inequalities or all)");
}

constexpr int kIdentitySamples = 100;
constexpr int kGridPoints = 400;
constexpr int kPerturbationK = 30;
constexpr double kPerturbationEpsilon = 0.01;
constexpr int kPerturbationDraws = 50;

// How far past k a subject reads coefficients, hypotheses included.
int reach(Subject s) {
  switch (s) {
    case Subject::BoundContainment:
    case Subject::Perturbation:
      return 0;
    case Subject::Turan2Nonneg:
    case Subject::VxNonneg:
    case Subject::PatrNonneg:
    case Subject::Eqtur2Identity:
    case Subject::DeltaPIdentity:
      return 2;
    default:
      return 1;
  }
}

int min_k(Subject s) {
  switch (s) {
    case Subject::Turan2Nonneg:
    case Subject::BoundContainment:
    case Subject::Perturbation:
      return 2;
    default:
      return 1;
  }
}

std::vector<Subject> suite_subjects(Suite suite, RecurrenceForm form) {
  std::vector<Subject> out;
  const bool sym = form == RecurrenceForm::SymmetricMonic;
  if (suite != Suite::Inequalities && sym) {
    out = {Subject::FirstoIdentity, Subject::Eqtur2Identity, Subject::DeltaPIdentity};
  }
  if (suite != Suite::Identities) {
    out.push_back(Subject::TurNonneg);
    if (sym) {
      out.push_back(Subject::Turan2Nonneg);
      out.push_back(Subject::VxNonneg);
    }
    out.push_back(Subject::PatrNonneg);
    out.push_back(Subject::MarikNonneg);
    if (form == RecurrenceForm::UnitIntervalSymmetric) out.push_back(Subject::SzwarcTur11);
    if (form == RecurrenceForm::HalfLine) out.push_back(Subject::SzwarcTur12);
    out.push_back(Subject::BoundContainment);
    if (sym) out.push_back(Subject::Perturbation);
  }
  return out;
}

std::string report_status(const VerificationReport& r) {
  if (r.observational()) return "observational";
  return r.passed() ? "pass" : "fail";
}

Json report_json(const VerificationReport& r, KRange range) {
  Json j;
  j["subject"] = std::string(to_string(r.subject));
  j["status"] = report_status(r);
  j["k_lo"] = range.lo;
  j["k_hi"] = range.hi;
  j["sample_count"] = r.sample_count;
  j["max_relative_residual"] = r.max_relative_residual;
  j["min_value"] = r.min_value ? optional_number(*r.min_value) : Json(nullptr);
  if (r.first_counterexample) {
    Json c;
    c["k"] = r.first_counterexample->k;
    c["x"] = r.first_counterexample->x;
    c["value"] = r.first_counterexample->value;
    c["detail"] = r.first_counterexample->detail;
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  j["skipped"] = r.skipped;
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["notes"] = r.notes;
  return j;
}

int cmd_verify(const FamilyArg& fam, Suite suite, std::uint64_t seed, int kmax, Format format,
               std::ostream& out) {
  if (kmax < 1) throw InputError("--kmax must be at least 1");
  const RecurrenceSpec& spec = fam.spec;
  std::vector<std::string> warnings;
  if (suite != Suite::Inequalities && spec.form() != RecurrenceForm::SymmetricMonic) {
    warnings.push_back("identities skipped: they are stated for symmetric-monic families");
  }

  Json reports = Json::array();
  bool passed = true;
  std::vector<std::string> text_lines;
  for (Subject s : suite_subjects(suite, spec.form())) {
    KRange range{min_k(s), kmax};
    if (const auto cap = spec.max_degree()) range.hi = std::min(range.hi, *cap - reach(s));
    if (s == Subject::Perturbation) {
      range.hi = std::min(range.hi, kPerturbationK);
      range.lo = range.hi;
    }
    if (range.hi < range.lo) {
      warnings.push_back(std::string(to_string(s)) + " skipped: table too short");
      continue;
    }
    VerificationReport r;
    if (is_identity(s)) {
      r = verify_identity(spec, s, range, kIdentitySamples, seed);
    } else if (is_nonneg(s)) {
      r = verify_nonneg(spec, s, range, kGridPoints, seed);
    } else if (s == Subject::BoundContainment) {
      r = verify_bound_containment(spec, range);
    } else {
      r = verify_perturbation(spec, range.hi, kPerturbationEpsilon, kPerturbationDraws, seed);
    }
    if (r.observational()) {
      for (const auto& note : r.notes) warnings.push_back(std::string(to_string(s)) + ": " + note);
    }
    passed = passed && r.passed();
    reports.push_back(report_json(r, range));
    std::ostringstream line;
    line << to_string(s) << ' ' << report_status(r) << " k=" << range.lo << ".." << range.hi
         << " samples=" << r.sample_count
         << " max_residual=" << format_number(r.max_relative_residual);
    if (r.min_value) line << " min_value=" << format_number(*r.min_value);
    if (r.first_counterexample) {
      line << " counterexample k=" << r.first_counterexample->k
           << " x=" << format_number(r.first_counterexample->x);
    }
    text_lines.push_back(line.str());
  }

  if (format == Format::Json) {
    Json j;
    j["family"] = fam.label;
    j["suite"] = suite == Suite::All ? "all" : suite == Suite::Identities ? "identities" : "inequalities";
    j["seed"] = seed;
    j["kmax"] = kmax;
    j["reports"] = reports;
    j["warnings"] = warnings;
    j["passed"] = passed;
    write_json(out, j);
  } else {
    for (const auto& l : text_lines) out << l << '\n';
    for (const auto& w : warnings) out << "warning: " << w << '\n';
    out << (passed ? "passed" : "FAILED") << '\n';
  }
  return passed ? kExitOk : kExitCounterexample;
}

// ---------------------------------------------------------------- check

int cmd_check(const FamilyArg& fam, int kmax, Format format, std::ostream& out) {
  if (kmax < 1) throw InputError("--kmax must be at least 1");
  std::vector<ConditionReport> reports;
  for (ConditionId id : all_conditions()) {
    if (condition_applies_to(id, fam.spec.form())) {
      reports.push_back(check_condition(fam.spec, id, kmax));
    }
  }
  switch (format) {
    case Format::Csv:
      out << "family,condition,verdict,first_index,holds_up_to,violation_index,lhs,rhs,"
             "first_boundary\n";
      for (const auto& r : reports) {
        out << fam.label << ',' << to_string(r.id) << ',' << to_string(r.verdict) << ','
            << r.first_index << ',' << r.holds_up_to << ',';
        if (r.first_violation) {
          out << r.first_violation->index << ',' << format_number(r.first_violation->lhs) << ','
              << format_number(r.first_violation->rhs);
        } else {
          out << ",,";
        }
        out << ',';
        if (r.first_boundary) out << *r.first_boundary;
        out << '\n';
      }
      break;
    case Format::Json: {
      Json j;
      j["family"] = fam.label;
      j["kmax"] = kmax;
      Json conditions = Json::array();
      for (const auto& r : reports) {
        Json c;
        c["condition"] = std::string(to_string(r.id));
        c["verdict"] = std::string(to_string(r.verdict));
        c["first_index"] = r.first_index;
        c["holds_up_to"] = r.holds_up_to;
        if (r.first_violation) {
          Json v;
          v["index"] = r.first_violation->index;
          v["lhs"] = r.first_violation->lhs;
          v["rhs"] = r.first_violation->rhs;
          v["detail"] = r.first_violation->detail;
          c["first_violation"] = v;
        } else {
          c["first_violation"] = nullptr;
        }
        c["first_boundary"] = r.first_boundary ? Json(*r.first_boundary) : Json(nullptr);
        conditions.push_back(c);
      }
      j["conditions"] = conditions;
      write_json(out, j);
      break;
    }
    case Format::Text:
      for (const auto& r : reports) {
        out << to_string(r.id) << ' ' << to_string(r.verdict) << " holds_up_to=" << r.holds_up_to;
        if (r.first_violation) out << " first_violation=" << r.first_violation->index;
        if (r.first_boundary) out << " first_boundary=" << *r.first_boundary;
        out << '\n';
      }
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- families

int cmd_families(const std::string& which, std::ostream& out) {
  Json j;
  if (which.empty() || which == "list") {
    for (std::string_view name : builtin_names()) {
      if (name == "table") continue;
      j[std::string(name)] = describe_family(make_builtin(name));
    }
  } else {
    j[which] = describe_family(parse_family(which).spec);
  }
  write_json(out, j);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extreme zeros and Turan inequalities of three-term recurrences", "turan-zeros"};
  app.require_subcommand(1);

  std::string family;
  std::string k_text;
  std::string format_text;
  double tol = 1e-12;
  std::string bound_list;
  std::string suite_text = "all";
  std::uint64_t seed = 0;
  int kmax = 40;
  std::string families_arg;

  auto* zeros_cmd = app.add_subcommand("zeros", "All zeros of p_k");
  zeros_cmd->add_option("family", family, "Builtin name, JSON object or @file")->required();
  zeros_cmd->add_option("k", k_text, "Degree")->required();
  zeros_cmd->add_option("--tol", tol, "Relative enclosure width");
  zeros_cmd->add_option("--format", format_text, "text, csv or json");

  auto* bounds_cmd = app.add_subcommand("bounds", "Compare every bound with x_kk");
  bounds_cmd->add_option("family", family, "Builtin name, JSON object or @file")->required();
  bounds_cmd->add_option("k", k_text, "Degree or range lo..hi")->required();
  bounds_cmd->add_option("--bounds", bound_list, "Comma-separated bound columns");
  bounds_cmd->add_option("--tol", tol, "Relative enclosure width");
  bounds_cmd->add_option("--format", format_text, "csv, json or text");

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity and inequality suites");
  verify_cmd->add_option("family", family, "Builtin name, JSON object or @file")->required();
  verify_cmd->add_option("--suite", suite_text, "identities, inequalities or all");
  verify_cmd->add_option("--seed", seed, "Sampling seed");
  verify_cmd->add_option("--kmax", kmax, "Largest degree");
  verify_cmd->add_option("--format", format_text, "json or text");

  auto* check_cmd = app.add_subcommand("check", "Check the coefficient conditions");
  check_cmd->add_option("family", family, "Builtin name, JSON object or @file")->required();
  check_cmd->add_option("--kmax", kmax, "Largest index");
  check_cmd->add_option("--format", format_text, "csv, json or text");

  auto* families_cmd = app.add_subcommand("families", "Print builtin family expansions");
  families_cmd->add_option("name", families_arg, "list or a family argument");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (families_cmd->parsed()) return cmd_families(families_arg, out);
    const FamilyArg fam = parse_family(family);
    if (zeros_cmd->parsed()) {
      return cmd_zeros(fam, parse_int(k_text, "k"), tol,
                       parse_format(format_text.empty() ? "text" : format_text), out);
    }
    if (bounds_cmd->parsed()) {
      return cmd_bounds(fam, parse_k_range(k_text), bound_list, tol,
                        parse_format(format_text.empty() ? "csv" : format_text), out, err);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(fam, parse_suite(suite_text), seed, kmax,
                        parse_format(format_text.empty() ? "json" : format_text), out);
    }
    return cmd_check(fam, kmax, parse_format(format_text.empty() ? "csv" : format_text), out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CoefficientError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}

}  // namespace turan::cli
