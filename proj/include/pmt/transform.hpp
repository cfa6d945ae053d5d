#ifndef PMT_TRANSFORM_HPP
#define PMT_TRANSFORM_HPP

#include <functional>
#include <string>

#include "pmt/expr.hpp"
#include "pmt/pde.hpp"

namespace pmt {

// x' = P(x,t,w), t' = Q(t), u'/v' = W(x,t,w). Q depends on t only; P may
// depend on w for the integrated-form maps (hodograph and friends), in which
// case the general total-derivative formulas apply.
struct ScalarTransform {
  Expr P, Q, W;
  ParamMap params;
  std::function<bool(Complex x, Complex t, Complex w)> domain;  // null = everywhere

  bool in_domain(Complex x, Complex t, Complex w) const {
    return !domain || domain(x, t, w);
  }
};

// Simplified system form: x' = P(x,t,v), t' = Q(t), u' = R(x,t,u,v),
// v' = S(x,t,v). P and S never depend on u.
struct SystemTransform {
  Expr P, Q, R, S;
  ParamMap params;
  std::function<bool(Complex x, Complex t, Complex u, Complex v)> domain;

  bool in_domain(Complex x, Complex t, Complex u, Complex v) const {
    return !domain || domain(x, t, u, v);
  }
};

struct PointU {
  Complex x, t, u;
};
struct PointUV {
  Complex x, t, u, v;
};

// Transports a solution jet to primed variables via total derivatives.
// Throws DegeneracyError when Q_t or the total x-derivative of P vanishes.
ScalarJetPoint pushforward_scalar(const ScalarTransform& tr, const ScalarJetPoint& pt,
                                  bool* branch_warning = nullptr);
SystemJetPoint pushforward_system(const SystemTransform& tr, const SystemJetPoint& pt,
                                  bool* branch_warning = nullptr);

// Magnitude of the total x-derivative of P at the point (degeneracy probe).
double scalar_dxp_magnitude(const ScalarTransform& tr, const ScalarJetPoint& pt);
double system_dxp_magnitude(const SystemTransform& tr, const SystemJetPoint& pt);

PointU apply_point(const ScalarTransform& tr, const PointU& pt, bool* branch_warning = nullptr);
PointUV apply_point(const SystemTransform& tr, const PointUV& pt, bool* branch_warning = nullptr);

struct IterateResultU {
  PointU point;
  int branch_warnings = 0;
};
struct IterateResultUV {
  PointUV point;
  int branch_warnings = 0;
};

// N-fold pointwise composition. Domain violations carry the step index.
IterateResultU iterate_point(const ScalarTransform& tr, const PointU& pt, int n);
IterateResultUV iterate_point(const SystemTransform& tr, const PointUV& pt, int n);

// Solves W(x,t,w) = wprime for w when W is affine in w.
Complex invert_dependent(const ScalarTransform& tr, Complex x, Complex t, Complex wprime);

struct NondegeneracyWitness {
  bool nondegenerate = false;
  bool potential = false;
  Complex witness;        // Q_t * R_u * (P_x*S_v - P_v*S_x)
  double potential_norm;  // |P_v|^2 + |R_v|^2
};

NondegeneracyWitness check_nondegeneracy(const SystemTransform& tr, const PointUV& pt,
                                         double tol = 1e-9);

// (P(x,t), Q, R(x,t,u)) embedded into the system setting with v' = v.
SystemTransform lift_to_system(const ScalarTransform& tr);

// First partials of a system-transform component, obtained from two jet
// evaluations (one with u in the w slot, one with v).
struct ComponentPartials {
  Complex val, x, t, u, v;
  bool branch_warning = false;
};

ComponentPartials system_partials(const Expr& e, const PointUV& pt, const ParamMap& params);

}  // namespace pmt

#endif
