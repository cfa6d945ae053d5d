#ifndef PMT_CSCALAR_HPP
#define PMT_CSCALAR_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace pmt {

using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation hit a pole or an undefined power (0 base, negative exponent, ...).
struct SingularityError : Error {
  using Error::Error;
};

// A transformation lost invertibility at the evaluation point (Q_t = 0,
// vanishing total x-derivative, zero leading coefficient of an affine map).
struct DegeneracyError : Error {
  using Error::Error;
};

// A point left the validity domain of a transformation or solution.
struct DomainError : Error {
  explicit DomainError(const std::string& msg, int step_index = -1)
      : Error(msg), step(step_index) {}
  int step;  // iteration step at which the violation occurred, -1 if n/a
};

// Parameter values excluded by a catalog entry.
struct ConstraintError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct UnsupportedError : Error {
  using Error::Error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Negative real axis within 1e-9 angular distance of the principal cut.
inline bool near_branch_cut(Complex z) {
  return z.real() < 0.0 && std::abs(z.imag()) <= 1e-9 * (-z.real());
}

// Exponents that are exact small integers take the repeated-multiplication
// path; everything else goes through the principal branch.
inline bool integer_valued(Complex e, long* out) {
  if (e.imag() != 0.0) return false;
  const double r = std::round(e.real());
  if (r != e.real() || std::abs(r) > 64.0) return false;
  *out = static_cast<long>(r);
  return true;
}

inline Complex cpow_int(Complex base, long n) {
  if (n == 0) return Complex(1.0);
  if (n < 0) {
    if (base == 0.0) throw SingularityError("zero base raised to negative integer power");
    return 1.0 / cpow_int(base, -n);
  }
  Complex acc(1.0), sq = base;
  for (long m = n; m > 0; m >>= 1) {
    if (m & 1) acc *= sq;
    if (m > 1) sq *= sq;
  }
  return acc;
}

// Principal-branch complex power with an integer fast path.
inline Complex cpow(Complex base, Complex expo, bool* branch_warning = nullptr) {
  long n = 0;
  if (integer_valued(expo, &n)) return cpow_int(base, n);
  if (base == 0.0) {
    if (expo.imag() == 0.0 && expo.real() > 0.0) return Complex(0.0);
    throw SingularityError("zero base with negative or non-integer exponent");
  }
  if (branch_warning && near_branch_cut(base)) *branch_warning = true;
  return std::pow(base, expo);
}

}  // namespace pmt

#endif
