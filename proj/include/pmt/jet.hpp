#ifndef PMT_JET_HPP
#define PMT_JET_HPP

#include "pmt/cscalar.hpp"

namespace pmt {

// Truncated Taylor carrier over the independents (x, t, w), where w is the
// dependent-variable slot. Coefficients are raw partial derivatives, not
// factorial-normalized: for f = x^2, dxx == 2.
//
// Tracked second-order pairs are xx, xw, ww only. No transform component is
// more than first order in t (Q = Q(t) enters through Q_t alone), so dtt,
// dxt, dtw never feed any pushforward formula and are not carried.
struct Jet {
  Complex v{};
  Complex dx{}, dt{}, dw{};
  Complex dxx{}, dxw{}, dww{};
  bool branch_warning = false;
};

enum class SeedRole { x, t, w, constant };

inline Jet seed_jet(Complex value, SeedRole role) {
  if (!is_finite(value)) throw SingularityError("non-finite jet seed value");
  Jet j;
  j.v = value;
  switch (role) {
    case SeedRole::x: j.dx = 1.0; break;
    case SeedRole::t: j.dt = 1.0; break;
    case SeedRole::w: j.dw = 1.0; break;
    case SeedRole::constant: break;
  }
  return j;
}

inline Jet constant_jet(Complex value) { return seed_jet(value, SeedRole::constant); }

inline Jet operator+(const Jet& a, const Jet& b) {
  return {a.v + b.v, a.dx + b.dx, a.dt + b.dt, a.dw + b.dw,
          a.dxx + b.dxx, a.dxw + b.dxw, a.dww + b.dww,
          a.branch_warning || b.branch_warning};
}

inline Jet operator-(const Jet& a, const Jet& b) {
  return {a.v - b.v, a.dx - b.dx, a.dt - b.dt, a.dw - b.dw,
          a.dxx - b.dxx, a.dxw - b.dxw, a.dww - b.dww,
          a.branch_warning || b.branch_warning};
}

inline Jet operator-(const Jet& a) {
  return {-a.v, -a.dx, -a.dt, -a.dw, -a.dxx, -a.dxw, -a.dww, a.branch_warning};
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  r.v = a.v * b.v;
  r.dx = a.dx * b.v + a.v * b.dx;
  r.dt = a.dt * b.v + a.v * b.dt;
  r.dw = a.dw * b.v + a.v * b.dw;
  r.dxx = a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx;
  r.dxw = a.dxw * b.v + a.dx * b.dw + a.dw * b.dx + a.v * b.dxw;
  r.dww = a.dww * b.v + 2.0 * a.dw * b.dw + a.v * b.dww;
  r.branch_warning = a.branch_warning || b.branch_warning;
  return r;
}

inline Jet operator*(Complex c, const Jet& a) {
  return {c * a.v, c * a.dx, c * a.dt, c * a.dw, c * a.dxx, c * a.dxw, c * a.dww,
          a.branch_warning};
}

inline Jet operator*(const Jet& a, Complex c) { return c * a; }
inline Jet operator+(const Jet& a, Complex c) { Jet r = a; r.v += c; return r; }
inline Jet operator+(Complex c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, Complex c) { Jet r = a; r.v -= c; return r; }
inline Jet operator-(Complex c, const Jet& a) { return c + (-a); }

// Second-order chain rule for a scalar function applied to a jet:
// f0 = f(a.v), f1 = f'(a.v), f2 = f''(a.v).
inline Jet jet_chain(const Jet& a, Complex f0, Complex f1, Complex f2,
                     bool extra_branch = false) {
  Jet r;
  r.v = f0;
  r.dx = f1 * a.dx;
  r.dt = f1 * a.dt;
  r.dw = f1 * a.dw;
  r.dxx = f2 * a.dx * a.dx + f1 * a.dxx;
  r.dxw = f2 * a.dx * a.dw + f1 * a.dxw;
  r.dww = f2 * a.dw * a.dw + f1 * a.dww;
  r.branch_warning = a.branch_warning || extra_branch;
  if (!is_finite(r.v) || !is_finite(r.dx) || !is_finite(r.dt) || !is_finite(r.dw) ||
      !is_finite(r.dxx) || !is_finite(r.dxw) || !is_finite(r.dww))
    throw SingularityError("non-finite jet coefficients");
  return r;
}

inline Jet reciprocal(const Jet& b) {
  if (b.v == 0.0) throw SingularityError("division by a jet with zero value");
  const Complex iv = 1.0 / b.v;
  return jet_chain(b, iv, -iv * iv, 2.0 * iv * iv * iv);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
inline Jet operator/(const Jet& a, Complex c) {
  if (c == 0.0) throw SingularityError("division by zero constant");
  return (1.0 / c) * a;
}
inline Jet operator/(Complex c, const Jet& b) { return c * reciprocal(b); }

inline Jet pow(const Jet& a, Complex expo) {
  long n = 0;
  if (integer_valued(expo, &n)) {
    if (n == 0) return constant_jet(1.0);
    const bool neg = n < 0;
    const long m = neg ? -n : n;
    Jet acc = a;
    for (long i = 1; i < m; ++i) acc = acc * a;
    return neg ? reciprocal(acc) : acc;
  }
  if (a.v == 0.0) throw SingularityError("jet power with zero base and non-integer exponent");
  const bool cut = near_branch_cut(a.v);
  const Complex f0 = std::pow(a.v, expo);
  const Complex f1 = expo * std::pow(a.v, expo - 1.0);
  const Complex f2 = expo * (expo - 1.0) * std::pow(a.v, expo - 2.0);
  return jet_chain(a, f0, f1, f2, cut);
}

inline Jet log(const Jet& a) {
  if (a.v == 0.0) throw SingularityError("log of a jet with zero value");
  const Complex iv = 1.0 / a.v;
  return jet_chain(a, std::log(a.v), iv, -iv * iv, near_branch_cut(a.v));
}

inline Jet exp(const Jet& a) {
  const Complex e = std::exp(a.v);
  return jet_chain(a, e, e, e);
}

inline Jet sqrt(const Jet& a) {
  if (a.v == 0.0) throw SingularityError("sqrt of a jet with zero value");
  const Complex s = std::sqrt(a.v);
  return jet_chain(a, s, 0.5 / s, -0.25 / (s * a.v), near_branch_cut(a.v));
}

}  // namespace pmt

#endif
