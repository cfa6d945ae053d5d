#include "pmt/expr.hpp"

#include <charconv>
#include <cstring>

namespace pmt {

namespace {

std::shared_ptr<const Expr::Node> make_node(Expr::Node n) {
  return std::make_shared<const Expr::Node>(std::move(n));
}

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::t: return "t";
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::w: return "w";
  }
  return "?";
}

}  // namespace

Expr Expr::constant(Complex c) {
  Node n;
  n.kind = Kind::constant;
  n.value = c;
  return Expr(make_node(std::move(n)));
}

Expr Expr::parameter(std::string name) {
  Node n;
  n.kind = Kind::param;
  n.name = std::move(name);
  return Expr(make_node(std::move(n)));
}

Expr Expr::variable(Var v) {
  Node n;
  n.kind = Kind::var;
  n.var = v;
  return Expr(make_node(std::move(n)));
}

namespace {

Expr::Node binary(Expr::Kind k, const Expr& a, const Expr& b) {
  Expr::Node n;
  n.kind = k;
  n.a = std::make_shared<const Expr::Node>(a.root());
  n.b = std::make_shared<const Expr::Node>(b.root());
  return n;
}

Expr::Node unary(Expr::Kind k, const Expr& a) {
  Expr::Node n;
  n.kind = k;
  n.a = std::make_shared<const Expr::Node>(a.root());
  return n;
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) { return Expr(make_node(binary(Expr::Kind::add, a, b))); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make_node(binary(Expr::Kind::sub, a, b))); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make_node(binary(Expr::Kind::mul, a, b))); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make_node(binary(Expr::Kind::div, a, b))); }

Expr pow(const Expr& base, Complex exponent) {
  Expr::Node n = unary(Expr::Kind::pow, base);
  n.exponent = exponent;
  return Expr(make_node(std::move(n)));
}

Expr pow(const Expr& base, const std::string& exponent_param) {
  Expr::Node n = unary(Expr::Kind::pow, base);
  n.exponent_is_param = true;
  n.exponent_name = exponent_param;
  return Expr(make_node(std::move(n)));
}

Expr ln(const Expr& a) { return Expr(make_node(unary(Expr::Kind::ln, a))); }
Expr exp(const Expr& a) { return Expr(make_node(unary(Expr::Kind::exp, a))); }
Expr sqrt(const Expr& a) { return Expr(make_node(unary(Expr::Kind::sqrt, a))); }

namespace {

bool node_depends_on(const Expr::Node& n, Var v) {
  if (n.kind == Expr::Kind::var) return n.var == v;
  if (n.a && node_depends_on(*n.a, v)) return true;
  if (n.b && node_depends_on(*n.b, v)) return true;
  return false;
}

std::shared_ptr<const Expr::Node> rename_node(const Expr::Node& n, Var from, Var to) {
  Expr::Node c = n;
  if (c.kind == Expr::Kind::var && c.var == from) c.var = to;
  if (n.a) c.a = rename_node(*n.a, from, to);
  if (n.b) c.b = rename_node(*n.b, from, to);
  return make_node(std::move(c));
}

Complex lookup_param(const std::string& name, const ParamMap& params) {
  auto it = params.find(name);
  if (it == params.end()) throw ConfigError("unbound parameter '" + name + "'");
  return it->second;
}

Complex node_exponent(const Expr::Node& n, const ParamMap& params) {
  return n.exponent_is_param ? lookup_param(n.exponent_name, params) : n.exponent;
}

Jet eval_jet_node(const Expr::Node& n, const JetEnv& env, const ParamMap& params) {
  switch (n.kind) {
    case Expr::Kind::constant: return constant_jet(n.value);
    case Expr::Kind::param: return constant_jet(lookup_param(n.name, params));
    case Expr::Kind::var: {
      const int i = static_cast<int>(n.var);
      if (!env.present[i])
        throw ConfigError(std::string("variable '") + var_name(n.var) +
                          "' not bound in this evaluation context");
      return env.slot[i];
    }
    case Expr::Kind::add: return eval_jet_node(*n.a, env, params) + eval_jet_node(*n.b, env, params);
    case Expr::Kind::sub: return eval_jet_node(*n.a, env, params) - eval_jet_node(*n.b, env, params);
    case Expr::Kind::mul: return eval_jet_node(*n.a, env, params) * eval_jet_node(*n.b, env, params);
    case Expr::Kind::div: return eval_jet_node(*n.a, env, params) / eval_jet_node(*n.b, env, params);
    case Expr::Kind::pow: return pow(eval_jet_node(*n.a, env, params), node_exponent(n, params));
    case Expr::Kind::ln: return log(eval_jet_node(*n.a, env, params));
    case Expr::Kind::exp: return exp(eval_jet_node(*n.a, env, params));
    case Expr::Kind::sqrt: return sqrt(eval_jet_node(*n.a, env, params));
  }
  throw Error("corrupt expression node");
}

Complex eval_value_node(const Expr::Node& n, const ValueEnv& env, const ParamMap& params,
                        bool* branch) {
  switch (n.kind) {
    case Expr::Kind::constant: return n.value;
    case Expr::Kind::param: return lookup_param(n.name, params);
    case Expr::Kind::var: {
      const int i = static_cast<int>(n.var);
      if (!env.present[i])
        throw ConfigError(std::string("variable '") + var_name(n.var) +
                          "' not bound in this evaluation context");
      return env.slot[i];
    }
    case Expr::Kind::add:
      return eval_value_node(*n.a, env, params, branch) + eval_value_node(*n.b, env, params, branch);
    case Expr::Kind::sub:
      return eval_value_node(*n.a, env, params, branch) - eval_value_node(*n.b, env, params, branch);
    case Expr::Kind::mul:
      return eval_value_node(*n.a, env, params, branch) * eval_value_node(*n.b, env, params, branch);
    case Expr::Kind::div: {
      const Complex den = eval_value_node(*n.b, env, params, branch);
      if (den == 0.0) throw SingularityError("division by zero");
      return eval_value_node(*n.a, env, params, branch) / den;
    }
    case Expr::Kind::pow:
      return cpow(eval_value_node(*n.a, env, params, branch), node_exponent(n, params), branch);
    case Expr::Kind::ln: {
      const Complex a = eval_value_node(*n.a, env, params, branch);
      if (a == 0.0) throw SingularityError("log of zero");
      if (branch && near_branch_cut(a)) *branch = true;
      return std::log(a);
    }
    case Expr::Kind::exp: return std::exp(eval_value_node(*n.a, env, params, branch));
    case Expr::Kind::sqrt: {
      const Complex a = eval_value_node(*n.a, env, params, branch);
      if (a == 0.0) throw SingularityError("sqrt of zero");
      if (branch && near_branch_cut(a)) *branch = true;
      return std::sqrt(a);
    }
  }
  throw Error("corrupt expression node");
}

void serialize_node(const Expr::Node& n, std::string& out);

void serialize_exponent(const Expr::Node& n, std::string& out) {
  if (n.exponent_is_param) {
    out += "(param ";
    out += n.exponent_name;
    out += ')';
  } else {
    out += format_complex(n.exponent);
  }
}

void serialize_node(const Expr::Node& n, std::string& out) {
  switch (n.kind) {
    case Expr::Kind::constant: out += format_complex(n.value); return;
    case Expr::Kind::param: out += "(param " + n.name + ")"; return;
    case Expr::Kind::var: out += var_name(n.var); return;
    case Expr::Kind::add:
    case Expr::Kind::sub:
    case Expr::Kind::mul:
    case Expr::Kind::div: {
      const char* op = n.kind == Expr::Kind::add   ? "add"
                       : n.kind == Expr::Kind::sub ? "sub"
                       : n.kind == Expr::Kind::mul ? "mul"
                                                   : "div";
      out += '(';
      out += op;
      out += ' ';
      serialize_node(*n.a, out);
      out += ' ';
      serialize_node(*n.b, out);
      out += ')';
      return;
    }
    case Expr::Kind::pow:
      out += "(pow ";
      serialize_node(*n.a, out);
      out += ' ';
      serialize_exponent(n, out);
      out += ')';
      return;
    case Expr::Kind::ln:
    case Expr::Kind::exp:
    case Expr::Kind::sqrt: {
      const char* op = n.kind == Expr::Kind::ln ? "ln" : n.kind == Expr::Kind::exp ? "exp" : "sqrt";
      out += '(';
      out += op;
      out += ' ';
      serialize_node(*n.a, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

bool Expr::depends_on(Var v) const { return node_ && node_depends_on(*node_, v); }

Expr Expr::rename_var(Var from, Var to) const {
  if (!node_) return {};
  return Expr(rename_node(*node_, from, to));
}

std::string Expr::serialize() const {
  if (!node_) return "";
  std::string out;
  serialize_node(*node_, out);
  return out;
}

Jet eval_jet(const Expr& e, const JetEnv& env, const ParamMap& params) {
  if (e.empty()) throw Error("evaluating an empty expression");
  return eval_jet_node(e.root(), env, params);
}

Complex eval_value(const Expr& e, const ValueEnv& env, const ParamMap& params,
                   bool* branch_warning) {
  if (e.empty()) throw Error("evaluating an empty expression");
  return eval_value_node(e.root(), env, params, branch_warning);
}

std::string format_double(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return "(complex " + format_double(z.real()) + " " + format_double(z.imag()) + ")";
}

}  // namespace pmt
