#pragma once

#include <span>
#include <vector>

#include "turan/families.hpp"

namespace turan {

/// Scaled pair (p_{k-1}(x), p_k(x)) after forward recurrence.
///
/// True values are prev * 2^scale_exp and curr * 2^scale_exp. The larger
/// mantissa is kept in [2^-64, 2^64] by exact power-of-two rescaling.
/// `sign_changes` counts strict sign changes of p_0..p_k in the
/// positive-leading-coefficient normalization (for HalfLine this is
/// (-1)^i p_i); an exact zero p_i with i < k takes the sign opposite to
/// p_{i-1}, and p_k(x) = 0 adds no change, so the count is the number of
/// zeros strictly above x.
struct EvalState {
  double x = 0.0;
  double prev = 0.0;
  double curr = 1.0;
  int scale_exp = 0;
  int degree = 0;
  int sign_changes = 0;

  double value() const;       // p_k(x), may overflow to inf
  double prev_value() const;  // p_{k-1}(x)
  bool at_zero() const noexcept { return curr == 0.0; }

  /// Same state with both mantissas multiplied by 2^shift.
  EvalState rescaled(int shift) const;
};

EvalState eval_sequence(const RecurrenceSpec& spec, int k, double x);

/// t = p_{k-1}(x) / p_k(x). Throws ZeroOfPolynomialError when p_k(x) = 0.
double ratio_t(const EvalState& state);

/// Values p_first..p_last at one shared binary exponent. first may be -1 (p_{-1} = 0).
template <class Real>
struct BasicScaledWindow {
  int first = 0;
  int scale_exp = 0;
  std::vector<Real> values;

  Real operator[](int j) const { return values[static_cast<std::size_t>(j - first)]; }
  int last() const noexcept { return first + static_cast<int>(values.size()) - 1; }
};
using ScaledWindow = BasicScaledWindow<double>;

template <class Real>
BasicScaledWindow<Real> eval_window_as(const RecurrenceSpec& spec, double x, int first, int last);

inline ScaledWindow eval_window(const RecurrenceSpec& spec, double x, int first, int last) {
  return eval_window_as<double>(spec, x, first, last);
}

/// A Turan-type quantity as mantissa * 2^exponent.
///
/// `magnitude` is the sum of absolute values of the products that were added
/// (same exponent), used for relative tolerances. Normalized values are
/// divided by p_k(x)^2 and carry exponent 0.
struct TuranValue {
  double mantissa = 0.0;
  int exponent = 0;
  int order = 1;
  bool normalized = false;
  double magnitude = 0.0;

  double value() const;
  /// mantissa / (2^-exponent + magnitude)
  double relative() const;
};

/// T_k = p_k^2 - p_{k-1} p_{k+1} (k >= 1), unnormalized at matched scale.
TuranValue turan_T(const RecurrenceSpec& spec, int k, double x);

/// (1/2) sum_{j=0}^{2m} (-1)^{j+m} C(2m, j) u_{k-m+j} u_{k+m-j} over a window
/// u_{k-m}..u_{k+m} of length 2m+1.
TuranValue turan_Tm(std::span<const double> u, int m);

/// 4(u_k^2 - u_{k-1}u_{k+1})(u_{k+1}^2 - u_k u_{k+2}) - (u_k u_{k+1} - u_{k-1}u_{k+2})^2
/// over a window u_{k-1}..u_{k+2}.
TuranValue turan_S(std::span<const double> u);

/// T_k^{(m)} of the family at x (needs k - m >= -1).
TuranValue turan_Tm_at(const RecurrenceSpec& spec, int k, int m, double x);
/// S_k of the family at x (k >= 1).
TuranValue turan_S_at(const RecurrenceSpec& spec, int k, double x);
/// T_k^{(2)} = 3p_k^2 - 4p_{k-1}p_{k+1} + p_{k-2}p_{k+2}, unnormalized (k >= 1).
TuranValue turan_T2(const RecurrenceSpec& spec, int k, double x);
/// T_k(dP) = q_k^2 - q_{k-1}q_{k+1} with q_j = p_{j+1} - c_j p_{j-1} (k >= 1).
TuranValue turan_delta(const RecurrenceSpec& spec, int k, double x);

/// c_k(4c_k - x^2)t^2 - x(2c_{k+1} + 2c_k - x^2)t + 4c_{k+1} - x^2, which is
/// p_k^-2 T_k(dP). SymmetricMonic only. Falls back to the unnormalized
/// T_k(dP) (normalized = false) where p_k(x) = 0.
TuranValue turan_delta_form(const RecurrenceSpec& spec, int k, double x);

/// c_k(4c_{k-1} - x^2)t^2 - x(4c_{k-1} - c_k + c_{k+1} - x^2)t + 3c_{k-1} + c_{k+1} - x^2,
/// which is c_{k-1} p_k^-2 T_k^{(2)}. SymmetricMonic, k >= 2. Falls back to
/// c_{k-1} T_k^{(2)} (normalized = false) where p_k(x) = 0.
TuranValue turan_T2_form(const RecurrenceSpec& spec, int k, double x);

}  // namespace turan
