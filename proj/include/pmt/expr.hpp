#ifndef PMT_EXPR_HPP
#define PMT_EXPR_HPP

#include <array>
#include <map>
#include <memory>
#include <string>

#include "pmt/jet.hpp"

namespace pmt {

using ParamMap = std::map<std::string, Complex>;

enum class Var { x, t, u, v, w };

// Immutable expression tree for transformation components. Exponents of pow
// nodes are constants or named parameters, never subexpressions; derived
// exponents (k+1, -2k, ...) are computed at parameter-binding time.
class Expr {
 public:
  enum class Kind { constant, param, var, add, sub, mul, div, pow, ln, exp, sqrt };

  struct Node {
    Kind kind;
    Complex value{};                      // constant
    std::string name;                     // param
    Var var{};                            // var
    std::shared_ptr<const Node> a, b;     // children
    bool exponent_is_param = false;       // pow
    Complex exponent{};
    std::string exponent_name;
  };

  Expr() = default;

  static Expr constant(Complex c);
  static Expr constant(double c) { return constant(Complex(c)); }
  static Expr parameter(std::string name);
  static Expr variable(Var v);

  bool empty() const { return !node_; }
  const Node& root() const { return *node_; }

  // True when the expression references the given variable.
  bool depends_on(Var v) const;

  // Parenthesized prefix text, e.g. (pow x (param k)); stable across versions.
  std::string serialize() const;

  // Recursive clone with one variable renamed (used to lift scalar
  // transforms into the system setting).
  Expr rename_var(Var from, Var to) const;

  friend Expr operator+(const Expr&, const Expr&);
  friend Expr operator-(const Expr&, const Expr&);
  friend Expr operator*(const Expr&, const Expr&);
  friend Expr operator/(const Expr&, const Expr&);
  friend Expr pow(const Expr& base, Complex exponent);
  friend Expr pow(const Expr& base, const std::string& exponent_param);
  friend Expr ln(const Expr&);
  friend Expr exp(const Expr&);
  friend Expr sqrt(const Expr&);

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Expr operator+(const Expr& a, Complex c) { return a + Expr::constant(c); }
inline Expr operator+(Complex c, const Expr& a) { return Expr::constant(c) + a; }
inline Expr operator-(const Expr& a, Complex c) { return a - Expr::constant(c); }
inline Expr operator-(Complex c, const Expr& a) { return Expr::constant(c) - a; }
inline Expr operator*(Complex c, const Expr& a) { return Expr::constant(c) * a; }
inline Expr operator*(const Expr& a, Complex c) { return a * Expr::constant(c); }
inline Expr operator/(const Expr& a, Complex c) { return a / Expr::constant(c); }
inline Expr operator/(Complex c, const Expr& a) { return Expr::constant(c) / a; }

// Evaluation environments assign a jet (or plain value) per variable slot.
struct JetEnv {
  std::array<Jet, 5> slot{};
  std::array<bool, 5> present{};
  void set(Var v, Jet j) {
    slot[static_cast<int>(v)] = j;
    present[static_cast<int>(v)] = true;
  }
};

struct ValueEnv {
  std::array<Complex, 5> slot{};
  std::array<bool, 5> present{};
  void set(Var v, Complex c) {
    slot[static_cast<int>(v)] = c;
    present[static_cast<int>(v)] = true;
  }
};

Jet eval_jet(const Expr& e, const JetEnv& env, const ParamMap& params);
Complex eval_value(const Expr& e, const ValueEnv& env, const ParamMap& params,
                   bool* branch_warning = nullptr);

// Shortest round-trip decimal text for report output.
std::string format_double(double d);
std::string format_complex(Complex z);

}  // namespace pmt

#endif
