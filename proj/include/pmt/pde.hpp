#ifndef PMT_PDE_HPP
#define PMT_PDE_HPP

#include <utility>
#include <variant>

#include "pmt/cscalar.hpp"

namespace pmt {

// Scalar equation in u:
//   u_t = kappa*(n*u^(n-1)*u_x^2 + u^n*u_xx) + (lam*u^n/x + sigma*x + tau*u^n)*u_x
struct ScalarUPde {
  Complex n;
  Complex kappa{1.0};
  Complex lam{0.0};
  Complex sigma{0.0};
  Complex tau{0.0};
};

// Scalar equation in the potential v:
//   v_t = A*(v_x/x^p)^m*v_xx + B*(v_x/x^p)^q + C0
struct ScalarVPde {
  Complex A{1.0};
  Complex m;
  Complex B{0.0};
  Complex q{0.0};
  Complex C0{0.0};
  int p = 0;  // x-weight, 0 or 1
};

// flux(x, u) = a * x^p * u^m  (p taken from the owning system)
struct PowerFlux {
  Complex a{1.0};
  Complex m;
};
// flux(u) = c / (u - 1), only with p = 0
struct ReciprocalFlux {
  Complex c;
};
using FluxForm = std::variant<PowerFlux, ReciprocalFlux>;

struct PowerSource {
  Complex b;
  Complex q;
};
struct LogSource {
  Complex b;
};
struct ConstSource {
  Complex c0;
};
struct NoSource {};
using SourceForm = std::variant<PowerSource, LogSource, ConstSource, NoSource>;

// First-order potential system:
//   v_x = x^p * u
//   v_t = flux(x, u) * u_x + source(u)
struct PotentialSystem {
  int p = 1;
  FluxForm flux;
  SourceForm source;
};

struct ScalarJetPoint {
  Complex x, t;
  Complex w, w_x, w_t, w_xx;  // w plays u or v
};

// u_t stays free: the system equivalences are first-order identities in
// which u_x and u_t are independent variables; only v_x and v_t are
// determined by the system on-solution.
struct SystemJetPoint {
  Complex x, t;
  Complex u, u_x, u_t;
  Complex v, v_x, v_t;
};

// Residual value together with the sum of the magnitudes of the equation's
// individual terms (the scale used for relative residuals).
struct Residual {
  Complex value;
  double scale = 0.0;
  double relative() const;
};

Residual residual_scalar_u(const ScalarUPde& spec, const ScalarJetPoint& pt);
Residual residual_scalar_v(const ScalarVPde& spec, const ScalarJetPoint& pt);
std::pair<Residual, Residual> residual_system(const PotentialSystem& spec,
                                              const SystemJetPoint& pt);

// Right-hand sides (everything except the time derivative); residuals are
// w_t minus these, so a completed point has a bitwise-zero residual.
Complex rhs_scalar_u(const ScalarUPde& spec, const ScalarJetPoint& pt,
                     double* term_scale = nullptr);
Complex rhs_scalar_v(const ScalarVPde& spec, const ScalarJetPoint& pt,
                     double* term_scale = nullptr);

// Sets w_t so the residual vanishes exactly.
void complete_time_derivative(const ScalarUPde& spec, ScalarJetPoint& pt);
void complete_time_derivative(const ScalarVPde& spec, ScalarJetPoint& pt);
// Sets v_x and v_t from the two system equations; u_t is left untouched.
void complete_time_derivative(const PotentialSystem& spec, SystemJetPoint& pt);

Complex flux_value(const PotentialSystem& spec, Complex x, Complex u);
Complex source_value(const PotentialSystem& spec, Complex u);

using EquationSpec = std::variant<ScalarUPde, ScalarVPde, PotentialSystem>;

}  // namespace pmt

#endif
