#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turan/families.hpp"

namespace turan {

enum class Subject {
  TurNonneg,
  FirstoIdentity,
  Eqtur2Identity,
  DeltaPIdentity,
  Turan2Nonneg,
  VxNonneg,
  PatrNonneg,
  MarikNonneg,
  BoundContainment,
  Perturbation,
  SzwarcTur11,
  SzwarcTur12,
};

std::string_view to_string(Subject s);
Subject parse_subject(std::string_view text);
bool is_identity(Subject s);
bool is_nonneg(Subject s);

struct KRange {
  int lo = 1;
  int hi = 1;
};

struct Counterexample {
  int k = 0;
  double x = 0.0;
  double value = 0.0;
  std::string detail;
};

/// Residual statistics of one subject. For nonnegativity subjects,
/// min_value is the smallest relative value (value / (1 + sum |terms|));
/// for containment it is the smallest margin relative to 1 + |x_kk|.
struct VerificationReport {
  Subject subject = Subject::TurNonneg;
  int sample_count = 0;
  double max_relative_residual = 0.0;
  std::optional<double> min_value;
  std::optional<Counterexample> first_counterexample;
  int skipped = 0;
  bool hypotheses_hold = true;
  std::vector<std::string> notes;

  bool observational() const noexcept { return !hypotheses_hold; }
  /// No counterexample, or hypotheses fail so nothing was claimed.
  bool passed() const noexcept { return observational() || !first_counterexample; }
};

/// Relative residual allowed for identities.
inline constexpr double kIdentityTolerance = 1e-10;
/// Relative slack allowed for nonnegativity.
inline constexpr double kNonnegTolerance = 1e-12;

/// Sample points for degree k: half on a Chebyshev-spaced grid over
/// [-R, R], half seeded uniform over [-R - 1, R + 1], R = 2 sqrt(c_k).
/// Identities are checked for SymmetricMonic specs only.
VerificationReport verify_identity(const RecurrenceSpec& spec, Subject subject, KRange k_range,
                                   int samples_per_k, std::uint64_t seed);

/// Nonnegativity over a per-k grid of `points_per_k` x values restricted to
/// the subject's domain. Candidate counterexamples are re-evaluated in long
/// double with compensated summation before being reported.
VerificationReport verify_nonneg(const RecurrenceSpec& spec, Subject subject, KRange k_range,
                                 int points_per_k, std::uint64_t seed);

/// Every applicable bound against the zeros it covers; violation iff the
/// margin is below -tol (tol absorbs the bisection enclosure).
VerificationReport verify_bound_containment(const RecurrenceSpec& spec, KRange k_range,
                                            double tol = 1e-10);

/// c_k -> c_k (1 + e_k)^2 with |e_k| < epsilon drawn per index; checks
/// x*_kk in ((1 - epsilon) x_kk, (1 + epsilon) x_kk).
VerificationReport verify_perturbation(const RecurrenceSpec& spec, int k, double epsilon,
                                       int draws, std::uint64_t seed);

/// Same, with every draw given explicitly (one factor list per draw, e_j for j = 0..k).
VerificationReport verify_perturbation_with(const RecurrenceSpec& spec, int k, double epsilon,
                                            std::span<const std::vector<double>> draws);

}  // namespace turan
