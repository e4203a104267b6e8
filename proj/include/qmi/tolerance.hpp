#pragma once

#include <atomic>
#include <stdexcept>

namespace qmi {

/// Absolute tolerance used by operator comparisons and validation.
struct Tolerance {
  double eps;

  explicit Tolerance(double e = 1e-9) : eps(e) {
    if (!(e > 0.0)) throw std::invalid_argument("Tolerance: eps must be positive");
  }
};

namespace detail {
inline std::atomic<double>& tolerance_slot() {
  static std::atomic<double> eps{1e-9};
  return eps;
}
}  // namespace detail

/// Process-wide default tolerance; set once per run (e.g. from --tol or QMI_TOL).
inline Tolerance current_tolerance() { return Tolerance(detail::tolerance_slot().load()); }
inline void set_current_tolerance(Tolerance t) { detail::tolerance_slot().store(t.eps); }

}  // namespace qmi
