#include "pmt/pde.hpp"

#include <limits>

namespace pmt {

double Residual::relative() const {
  return std::abs(value) / (scale + std::numeric_limits<double>::epsilon());
}

namespace {

void accumulate(Complex& sum, double& scale, Complex term) {
  sum += term;
  scale += std::abs(term);
}

}  // namespace

Complex rhs_scalar_u(const ScalarUPde& spec, const ScalarJetPoint& pt, double* term_scale) {
  const Complex u = pt.w;
  if (u == 0.0 && (spec.n.real() < 1.0 || spec.n.imag() != 0.0))
    throw SingularityError("scalar-u residual at u = 0");
  if (pt.x == 0.0 && spec.lam != 0.0)
    throw SingularityError("scalar-u residual with 1/x term at x = 0");

  Complex rhs = 0.0;
  double scale = 0.0;
  if (spec.kappa != 0.0) {
    if (spec.n != 0.0)
      accumulate(rhs, scale, spec.kappa * spec.n * cpow(u, spec.n - 1.0) * pt.w_x * pt.w_x);
    accumulate(rhs, scale, spec.kappa * cpow(u, spec.n) * pt.w_xx);
  }
  if (spec.lam != 0.0)
    accumulate(rhs, scale, spec.lam * cpow(u, spec.n) / pt.x * pt.w_x);
  if (spec.sigma != 0.0)
    accumulate(rhs, scale, spec.sigma * pt.x * pt.w_x);
  if (spec.tau != 0.0)
    accumulate(rhs, scale, spec.tau * cpow(u, spec.n) * pt.w_x);
  if (term_scale) *term_scale = scale;
  return rhs;
}

Residual residual_scalar_u(const ScalarUPde& spec, const ScalarJetPoint& pt) {
  double scale = 0.0;
  const Complex rhs = rhs_scalar_u(spec, pt, &scale);
  return {pt.w_t - rhs, scale + std::abs(pt.w_t)};
}

Complex rhs_scalar_v(const ScalarVPde& spec, const ScalarJetPoint& pt, double* term_scale) {
  if (spec.p != 0 && pt.x == 0.0)
    throw SingularityError("scalar-v residual with x-weight at x = 0");
  const Complex slope = spec.p ? pt.w_x / pt.x : pt.w_x;
  if (slope == 0.0 &&
      ((spec.A != 0.0 && spec.m.real() < 0.0) || (spec.B != 0.0 && spec.q.real() < 0.0)))
    throw SingularityError("scalar-v residual at v_x = 0 with negative exponent");

  Complex rhs = 0.0;
  double scale = 0.0;
  if (spec.A != 0.0) accumulate(rhs, scale, spec.A * cpow(slope, spec.m) * pt.w_xx);
  if (spec.B != 0.0) accumulate(rhs, scale, spec.B * cpow(slope, spec.q));
  if (spec.C0 != 0.0) accumulate(rhs, scale, spec.C0);
  if (term_scale) *term_scale = scale;
  return rhs;
}

Residual residual_scalar_v(const ScalarVPde& spec, const ScalarJetPoint& pt) {
  double scale = 0.0;
  const Complex rhs = rhs_scalar_v(spec, pt, &scale);
  return {pt.w_t - rhs, scale + std::abs(pt.w_t)};
}

Complex flux_value(const PotentialSystem& spec, Complex x, Complex u) {
  if (const auto* pf = std::get_if<PowerFlux>(&spec.flux)) {
    Complex f = pf->a * cpow(u, pf->m);
    if (spec.p) f *= x;
    return f;
  }
  const auto& rf = std::get<ReciprocalFlux>(spec.flux);
  if (u == 1.0) throw SingularityError("reciprocal flux at u = 1");
  return rf.c / (u - 1.0);
}

Complex source_value(const PotentialSystem& spec, Complex u) {
  if (std::holds_alternative<NoSource>(spec.source)) return 0.0;
  if (const auto* ps = std::get_if<PowerSource>(&spec.source))
    return ps->b * cpow(u, ps->q);
  if (const auto* ls = std::get_if<LogSource>(&spec.source)) {
    if (ls->b == 0.0) return 0.0;
    if (u == 0.0) throw SingularityError("log source at u = 0");
    return ls->b * std::log(u);
  }
  return std::get<ConstSource>(spec.source).c0;
}

std::pair<Residual, Residual> residual_system(const PotentialSystem& spec,
                                              const SystemJetPoint& pt) {
  if (spec.p != 0 && pt.x == 0.0)
    throw SingularityError("system residual with x-weight at x = 0");
  const Complex xp_u = spec.p ? pt.x * pt.u : pt.u;
  Residual r1{pt.v_x - xp_u, std::abs(pt.v_x) + std::abs(xp_u)};

  const Complex flux_term = flux_value(spec, pt.x, pt.u) * pt.u_x;
  const Complex src = source_value(spec, pt.u);
  Residual r2{pt.v_t - (flux_term + src),
              std::abs(pt.v_t) + std::abs(flux_term) + std::abs(src)};
  return {r1, r2};
}

void complete_time_derivative(const ScalarUPde& spec, ScalarJetPoint& pt) {
  pt.w_t = rhs_scalar_u(spec, pt);
}

void complete_time_derivative(const ScalarVPde& spec, ScalarJetPoint& pt) {
  pt.w_t = rhs_scalar_v(spec, pt);
}

void complete_time_derivative(const PotentialSystem& spec, SystemJetPoint& pt) {
  pt.v_x = spec.p ? pt.x * pt.u : pt.u;
  pt.v_t = flux_value(spec, pt.x, pt.u) * pt.u_x + source_value(spec, pt.u);
}

}  // namespace pmt
