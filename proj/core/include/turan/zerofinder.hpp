#pragma once

#include <span>
#include <vector>

#include "turan/families.hpp"

namespace turan {

/// Symmetric tridiagonal matrix whose eigenvalues are the zeros of p_k.
/// diag_i = a_i (b_i + c_i for HalfLine), offdiag_i = sqrt(b_i c_{i+1}).
struct JacobiMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;

  int k() const noexcept { return static_cast<int>(diag.size()); }
};

JacobiMatrix jacobi_matrix(const RecurrenceSpec& spec, int k);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Gershgorin hull of the spectrum, widened slightly so both ends are strict.
Interval gershgorin(const JacobiMatrix& j);

/// Number of zeros of p_k strictly greater than x.
int sturm_count(const RecurrenceSpec& spec, int k, double x);

/// Sorted zeros with the half-width of each final bisection interval.
struct ZeroSet {
  std::vector<double> zeros;
  std::vector<double> enclosure;

  int k() const noexcept { return static_cast<int>(zeros.size()); }
};

/// All zeros, each enclosed to width <= tol * (1 + |zero|). tol >= 1e-14.
ZeroSet zeros(const RecurrenceSpec& spec, int k, double tol = 1e-12);

struct ExtremeZeros {
  double smallest = 0.0;
  double largest = 0.0;
  double smallest_enclosure = 0.0;
  double largest_enclosure = 0.0;
};

/// Only the outermost zeros x_1k and x_kk.
ExtremeZeros extreme_zeros(const RecurrenceSpec& spec, int k, double tol = 1e-12);

/// The i-th smallest zero (1-based).
double zero_at(const RecurrenceSpec& spec, int k, int index, double tol = 1e-12);

/// Rayleigh quotient v^T J v of a unit vector: a lower bound on x_kk.
struct RayleighCertificate {
  std::vector<double> vector;
  double value = 0.0;
};

/// Certificate for a caller-supplied vector (normalized internally).
RayleighCertificate rayleigh_lower(const RecurrenceSpec& spec, int k, std::span<const double> vector);

/// Certificate from 3*ceil(log2 k) + 10 steps of shifted power iteration
/// started at the uniform vector.
RayleighCertificate rayleigh_lower(const RecurrenceSpec& spec, int k);

/// Certificate from the eigenvector of x_kk, generated by the normalized
/// recurrence at the bisected zero.
RayleighCertificate rayleigh_converged(const RecurrenceSpec& spec, int k, double tol = 1e-14);

}  // namespace turan
