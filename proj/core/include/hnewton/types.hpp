#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace hnewton {

using cplx = std::complex<double>;

// numerical failures; the CLI maps these to exit code 2, usage errors
// (std::invalid_argument etc.) map to exit code 1
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |a_{-n}| = |b_{-n}| or a vanishing denominator: the local linear model
// has no unique preimage
struct NoUniqueSolution : NumericalError {
  using NumericalError::NumericalError;
};

// the translation constant c = -(a_0 + conj(b_0)) vanished, so there is
// no direction to aim the seed at
struct DegenerateConstant : NumericalError {
  using NumericalError::NumericalError;
};

// normal_form / singular_seeds preconditions violated (a_1 = 0,
// |a_1| != |b_1|, nonzero constant term, cusp case, delta out of range)
struct NotSingularZero : NumericalError {
  using NumericalError::NumericalError;
};

// pivot breakdown in the 2x2 real solve
struct SingularJacobianError : NumericalError {
  using NumericalError::NumericalError;
};

// an evaluator returned a non-finite value where a finite one was required
struct EvaluationError : NumericalError {
  using NumericalError::NumericalError;
};

inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

constexpr double pi = 3.14159265358979323846;

}  // namespace hnewton
