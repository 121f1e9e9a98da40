#pragma once

// Evaluation of scenario documents and the verification report.

#include "fano/blowup.hpp"
#include "fano/chern.hpp"
#include "fano/core.hpp"
#include "fano/dsl.hpp"
#include "fano/profiles.hpp"
#include "fano/schubert.hpp"

#include <json.hpp>

#include <algorithm>
#include <ctime>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace fano {

using Scenario = dsl::Scenario;

/// Largest Grassmannian (by dimension) the language will multiply in.
inline constexpr int kMaxSchubertDim = 12;
inline constexpr long kMaxExponent = 4096;
inline constexpr unsigned kMaxPowerBits = 1u << 16;

using Value = std::variant<Integer, Rational, bool, DivisorExpr, SchubertCycle, IntegerMatrix>;

inline Value normalize(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return Integer(boost::multiprecision::numerator(q));
  return q;
}

inline std::string matrix_str(const IntegerMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (c) s += ",";
      s += m[r][c].str();
    }
    s += "]";
  }
  return s + "]";
}

inline std::string to_string(const Value& v) {
  struct Visitor {
    std::string operator()(const Integer& x) const { return x.str(); }
    std::string operator()(const Rational& x) const { return fano::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const DivisorExpr& d) const { return d.str(); }
    std::string operator()(const SchubertCycle& c) const { return c.str(); }
    std::string operator()(const IntegerMatrix& m) const { return matrix_str(m); }
  };
  return std::visit(Visitor{}, v);
}

inline nlohmann::json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

inline nlohmann::json to_json(const Value& v) {
  if (const auto* i = std::get_if<Integer>(&v)) return integer_json(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  if (const auto* m = std::get_if<IntegerMatrix>(&v)) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : *m) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(integer_json(x));
      rows.push_back(std::move(r));
    }
    return rows;
  }
  return to_string(v);
}

inline bool values_equal(const Value& a, const Value& b) {
  auto numeric = [](const Value& v) -> std::optional<Rational> {
    if (const auto* i = std::get_if<Integer>(&v)) return Rational(*i);
    if (const auto* q = std::get_if<Rational>(&v)) return *q;
    return std::nullopt;
  };
  const auto na = numeric(a), nb = numeric(b);
  if (na && nb) return *na == *nb;
  auto cycle_vs_number = [](const SchubertCycle& c, const Rational& n) {
    if (n == 0) return c.is_zero();
    return c.codim() == 0 && Rational(c.coefficient(Partition())) == n;
  };
  if (const auto* c = std::get_if<SchubertCycle>(&a)) {
    if (nb) return cycle_vs_number(*c, *nb);
    if (const auto* d = std::get_if<SchubertCycle>(&b)) return *c == *d;
    return false;
  }
  if (const auto* c = std::get_if<SchubertCycle>(&b)) return na && cycle_vs_number(*c, *na);
  if (const auto* d = std::get_if<DivisorExpr>(&a)) {
    if (nb) return *nb == 0 && *d == DivisorExpr{};
    if (const auto* e = std::get_if<DivisorExpr>(&b)) return *d == *e;
    return false;
  }
  if (const auto* d = std::get_if<DivisorExpr>(&b)) return na && *na == 0 && *d == DivisorExpr{};
  if (const auto* x = std::get_if<bool>(&a)) {
    const auto* y = std::get_if<bool>(&b);
    return y && *x == *y;
  }
  if (const auto* x = std::get_if<IntegerMatrix>(&a)) {
    const auto* y = std::get_if<IntegerMatrix>(&b);
    return y && *x == *y;
  }
  return false;
}

/// Mutable state while walking one scenario's statements.
class Environment {
 public:
  std::optional<FourfoldProfile> profile;
  std::optional<GrassmannianContext> context;
  std::optional<SectionModel> section;
  std::optional<Center> center;
  std::map<std::string, Value> variables;

  void set_profile(FourfoldProfile p, std::optional<SectionModel> s) {
    profile = std::move(p);
    section = std::move(s);
    if (section) set_context(section->context, false);
    model_.reset();
  }

  void set_center(Center c) {
    center = std::move(c);
    model_.reset();
  }

  void set_context(const GrassmannianContext& ctx, bool clear_section = true) {
    if (ctx.dim() > kMaxSchubertDim)
      throw Error(ctx.str() + " exceeds the supported dimension " + std::to_string(kMaxSchubertDim));
    if (clear_section) section.reset();
    if (!context || *context != ctx) tangent_.reset();
    context = ctx;
  }

  const BlowupModel& model() {
    if (!model_) {
      if (!profile) throw Error("no profile defined");
      if (!center) throw Error("no center defined");
      model_.emplace(*profile, *center);
    }
    return *model_;
  }

  const GrassmannianContext& ctx() const {
    if (!context) throw Error("no Grassmannian context (use 'grassmannian k n' or an ambient profile)");
    return *context;
  }

  const SectionModel& require_section() const {
    if (!section) throw Error("no linear section defined (use a profile with 'ambient grK_N')");
    return *section;
  }

  const TotalChernClass& tangent() {
    if (!tangent_) tangent_ = tangent_chern(ctx());
    return *tangent_;
  }

 private:
  std::optional<BlowupModel> model_;
  std::optional<TotalChernClass> tangent_;
};

namespace detail {

inline const char* type_name(const Value& v) {
  switch (v.index()) {
    case 0: return "integer";
    case 1: return "rational";
    case 2: return "boolean";
    case 3: return "divisor";
    case 4: return "cycle";
    default: return "matrix";
  }
}

inline Integer as_integer(const Value& v, const std::string& what) {
  if (const auto* i = std::get_if<Integer>(&v)) return *i;
  throw Error(what + " must be an integer, got " + type_name(v) + " " + to_string(v));
}

inline int as_int(const Value& v, const std::string& what, long lo, long hi) {
  const Integer x = as_integer(v, what);
  if (x < lo || x > hi) throw Error(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x.convert_to<int>();
}

inline DivisorExpr as_divisor(const Value& v, const std::string& what) {
  if (const auto* d = std::get_if<DivisorExpr>(&v)) return *d;
  if (const auto* i = std::get_if<Integer>(&v); i && *i == 0) return {};
  throw Error(what + " must be a divisor, got " + type_name(v) + " " + to_string(v));
}

inline SchubertCycle as_cycle(const Value& v, const std::string& what) {
  if (const auto* c = std::get_if<SchubertCycle>(&v)) return *c;
  throw Error(what + " must be a Schubert cycle, got " + type_name(v) + " " + to_string(v));
}

inline Partition as_schubert_class(const Value& v, const std::string& what) {
  const SchubertCycle c = as_cycle(v, what);
  if (c.terms().size() != 1 || c.terms().begin()->second != 1)
    throw Error(what + " must be a single Schubert class sigma[...], got " + c.str());
  return c.terms().begin()->first;
}

inline IntegerMatrix as_matrix(const Value& v, const std::string& what) {
  if (const auto* m = std::get_if<IntegerMatrix>(&v)) return *m;
  throw Error(what + " must be a matrix, got " + type_name(v) + " " + to_string(v));
}

inline std::optional<Rational> as_number(const Value& v) {
  if (const auto* i = std::get_if<Integer>(&v)) return Rational(*i);
  if (const auto* q = std::get_if<Rational>(&v)) return *q;
  return std::nullopt;
}

inline Value negate(const Value& v) {
  struct Visitor {
    Value operator()(const Integer& x) const { return Integer(-x); }
    Value operator()(const Rational& x) const { return Rational(-x); }
    Value operator()(bool) const { throw Error("cannot negate a boolean"); }
    Value operator()(const DivisorExpr& d) const { return -d; }
    Value operator()(const SchubertCycle& c) const { return -c; }
    Value operator()(IntegerMatrix m) const {
      for (auto& row : m)
        for (auto& x : row) x = -x;
      return m;
    }
  };
  return std::visit(Visitor{}, v);
}

inline SchubertCycle lift_number(const SchubertCycle& like, const Integer& n) {
  if (n == 0) return SchubertCycle(like.context(), like.codim());
  if (!like.is_zero() && like.codim() != 0)
    throw Error("cycles are homogeneous: cannot add the number " + n.str() + " to " + like.str());
  return SchubertCycle::basis(like.context(), Partition(), n);
}

inline Value add(const Value& a, const Value& b) {
  const auto na = as_number(a), nb = as_number(b);
  if (na && nb) return normalize(*na + *nb);
  if (std::holds_alternative<DivisorExpr>(a) || std::holds_alternative<DivisorExpr>(b))
    return as_divisor(a, "operand of '+'") + as_divisor(b, "operand of '+'");
  if (const auto* c = std::get_if<SchubertCycle>(&a)) {
    if (const auto* d = std::get_if<SchubertCycle>(&b)) return *c + *d;
    return *c + lift_number(*c, as_integer(b, "operand of '+'"));
  }
  if (const auto* d = std::get_if<SchubertCycle>(&b)) return lift_number(*d, as_integer(a, "operand of '+'")) + *d;
  if (const auto* m = std::get_if<IntegerMatrix>(&a)) {
    const IntegerMatrix n = as_matrix(b, "operand of '+'");
    if (m->size() != n.size()) throw Error("matrix shapes differ");
    IntegerMatrix out = *m;
    for (std::size_t r = 0; r < out.size(); ++r) {
      if (out[r].size() != n[r].size()) throw Error("matrix shapes differ");
      for (std::size_t c = 0; c < out[r].size(); ++c) out[r][c] += n[r][c];
    }
    return out;
  }
  throw Error(std::string("cannot add ") + type_name(a) + " and " + type_name(b));
}

inline Value multiply_values(const Value& a, const Value& b) {
  const auto na = as_number(a), nb = as_number(b);
  if (na && nb) return normalize(*na * *nb);
  if (const auto* c = std::get_if<SchubertCycle>(&a)) {
    if (const auto* d = std::get_if<SchubertCycle>(&b)) {
      if (c->context() != d->context()) throw Error("context mismatch: " + c->context().str() + " vs " + d->context().str());
      return *c * *d;
    }
    return as_integer(b, "factor of a cycle") * *c;
  }
  if (const auto* d = std::get_if<SchubertCycle>(&b)) return as_integer(a, "factor of a cycle") * *d;
  if (const auto* d = std::get_if<DivisorExpr>(&a)) {
    if (std::holds_alternative<DivisorExpr>(b))
      throw Error("products of divisors are numbers; use quartic(d1, d2, d3, d4)");
    return as_integer(b, "factor of a divisor") * *d;
  }
  if (const auto* d = std::get_if<DivisorExpr>(&b)) return as_integer(a, "factor of a divisor") * *d;
  auto scale = [](IntegerMatrix m, const Integer& s) {
    for (auto& row : m)
      for (auto& x : row) x *= s;
    return m;
  };
  if (const auto* m = std::get_if<IntegerMatrix>(&a)) {
    if (const auto* n = std::get_if<IntegerMatrix>(&b)) {
      if (m->empty() || n->empty() || (*m)[0].size() != n->size()) throw Error("matrix shapes do not multiply");
      const std::size_t cols = (*n)[0].size();
      for (const auto& row : *n)
        if (row.size() != cols) throw Error("ragged matrix");
      IntegerMatrix out(m->size(), std::vector<Integer>(cols));
      for (std::size_t i = 0; i < m->size(); ++i) {
        if ((*m)[i].size() != n->size()) throw Error("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j)
          for (std::size_t k = 0; k < n->size(); ++k) out[i][j] += (*m)[i][k] * (*n)[k][j];
      }
      return out;
    }
    return scale(*m, as_integer(b, "factor of a matrix"));
  }
  if (const auto* m = std::get_if<IntegerMatrix>(&b)) return scale(*m, as_integer(a, "factor of a matrix"));
  throw Error(std::string("cannot multiply ") + type_name(a) + " and " + type_name(b));
}

inline Value power_value(const Value& base, const Value& exponent) {
  const Integer e = as_integer(exponent, "exponent");
  if (e > kMaxExponent || e < -kMaxExponent) throw Error("exponent " + e.str() + " is too large");
  const long n = e.convert_to<long>();
  if (const auto* c = std::get_if<SchubertCycle>(&base)) {
    if (n < 0) throw Error("negative power of a cycle");
    if (c->codim() == 0 && !c->is_zero()) {
      const Integer coeff = c->coefficient(Partition());
      if (coeff != 0 && boost::multiprecision::msb(abs(coeff)) * static_cast<unsigned>(n) > kMaxPowerBits)
        throw Error("power is too large");
    }
    return power(*c, static_cast<int>(n));
  }
  const auto q = as_number(base);
  if (!q) throw Error(std::string("cannot raise a ") + type_name(base) + " to a power");
  const Integer num = boost::multiprecision::numerator(*q), den = boost::multiprecision::denominator(*q);
  const unsigned bits = std::max(num == 0 ? 0u : unsigned(boost::multiprecision::msb(abs(num))) + 1,
                                 unsigned(boost::multiprecision::msb(den)) + 1);
  if (static_cast<unsigned long>(bits) * static_cast<unsigned long>(n < 0 ? -n : n) > kMaxPowerBits)
    throw Error("power is too large");
  if (n < 0 && num == 0) throw Error("zero raised to a negative power");
  const unsigned m = static_cast<unsigned>(n < 0 ? -n : n);
  const Rational r(ipow(num, m), ipow(den, m));
  return normalize(n < 0 ? Rational(1) / r : r);
}

struct CenterInvariantArgs {
  DivisorExpr l, d;
  Integer r;
};

}  // namespace detail

class Evaluator {
 public:
  explicit Evaluator(Environment& env) : env_(env) {}

  Value eval(const dsl::Expr& e) {
    using dsl::ExprKind;
    switch (e.kind) {
      case ExprKind::integer: return e.value;
      case ExprKind::boolean: return e.flag;
      case ExprKind::divisor_h: return DivisorExpr::H();
      case ExprKind::divisor_e: return DivisorExpr::E();
      case ExprKind::name: {
        auto it = env_.variables.find(e.name);
        if (it == env_.variables.end()) throw Error("unknown name '" + e.name + "'");
        return it->second;
      }
      case ExprKind::sigma: {
        const auto& ctx = env_.ctx();
        const Partition p(e.parts);
        SchubertCycle c(ctx, p.weight());
        c.add(p, 1);
        return c;
      }
      case ExprKind::matrix: {
        IntegerMatrix m;
        for (const auto& row : e.rows) {
          std::vector<Integer> r;
          for (const auto& x : row) r.push_back(detail::as_integer(eval(*x), "matrix entry"));
          if (!m.empty() && r.size() != m[0].size()) throw Error("matrix rows have different lengths");
          m.push_back(std::move(r));
        }
        return m;
      }
      case ExprKind::call: return call(e);
      case ExprKind::negate: return detail::negate(eval(*e.args[0]));
      case ExprKind::add: return detail::add(eval(*e.args[0]), eval(*e.args[1]));
      case ExprKind::subtract: return detail::add(eval(*e.args[0]), detail::negate(eval(*e.args[1])));
      case ExprKind::multiply: return detail::multiply_values(eval(*e.args[0]), eval(*e.args[1]));
      case ExprKind::power: return detail::power_value(eval(*e.args[0]), eval(*e.args[1]));
    }
    throw Error("unknown expression");
  }

 private:
  void arity(const dsl::Expr& e, std::size_t n) const {
    if (e.args.size() != n)
      throw Error(e.name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                  std::to_string(e.args.size()));
  }

  std::vector<Value> args(const dsl::Expr& e, std::size_t n) {
    arity(e, n);
    std::vector<Value> out;
    for (const auto& a : e.args) out.push_back(eval(*a));
    return out;
  }

  std::string arg_name(const dsl::Expr& e, std::size_t i) const { return e.name + " argument " + std::to_string(i + 1); }

  Integer integer_arg(const dsl::Expr& e, const std::vector<Value>& v, std::size_t i) const {
    return detail::as_integer(v[i], arg_name(e, i));
  }
  DivisorExpr divisor_arg(const dsl::Expr& e, const std::vector<Value>& v, std::size_t i) const {
    return detail::as_divisor(v[i], arg_name(e, i));
  }

  detail::CenterInvariantArgs infer_args(const dsl::Expr& e) {
    const auto v = args(e, 3);
    return {divisor_arg(e, v, 0), divisor_arg(e, v, 1), integer_arg(e, v, 2)};
  }

  const TotalChernClass& chern_source() {
    if (env_.section) return env_.section->chern;
    return env_.tangent();
  }

  Value call(const dsl::Expr& e) {
    const std::string& f = e.name;
    if (f == "quartic") {
      const auto v = args(e, 4);
      return quartic_number(env_.model(), divisor_arg(e, v, 0), divisor_arg(e, v, 1), divisor_arg(e, v, 2),
                            divisor_arg(e, v, 3));
    }
    if (f == "monomial") {
      const auto v = args(e, 1);
      return monomial_number(env_.model(), detail::as_int(v[0], arg_name(e, 0), 0, 4));
    }
    if (f == "chi") return chi_riemann_roch(env_.model(), divisor_arg(e, args(e, 1), 0));
    if (f == "euler") {
      args(e, 0);
      return euler_blowup(env_.model());
    }
    if (f == "c2pair") {
      const auto v = args(e, 2);
      return pair_degree2(env_.model(), c2_blowup(env_.model()), divisor_arg(e, v, 0), divisor_arg(e, v, 1));
    }
    if (f == "c2a") {
      args(e, 0);
      if (!env_.model().curve_center()) throw Error("c2a is defined for curve centres only");
      return c2_blowup(env_.model()).coefficient(Degree2Symbol::fiber);
    }
    if (f == "c2n") {
      args(e, 0);
      return env_.model().normal_c2();
    }
    if (f == "genus") {
      const auto v = args(e, 2);
      return adjunction_genus(integer_arg(e, v, 0), integer_arg(e, v, 1));
    }
    if (f == "solve") {
      const auto v = args(e, 3);
      return normalize(solve_linear(integer_arg(e, v, 0), integer_arg(e, v, 1), integer_arg(e, v, 2)));
    }
    if (f == "k3blowup") {
      const auto v = args(e, 3);
      return threefold_blowup_K3(integer_arg(e, v, 0), integer_arg(e, v, 1), integer_arg(e, v, 2));
    }
    if (f == "inferdeg" || f == "inferlkf" || f == "inferc2e") {
      const auto a = infer_args(e);
      const auto inv = infer_center_invariants(env_.model(), a.l, a.d, a.r);
      if (f == "inferdeg") return inv.deg;
      if (f == "inferlkf") return inv.lkf;
      return inv.c2_minus_euler;
    }
    if (f == "noether" || f == "picrank") {
      if (f == "picrank") return noether_check(integer_arg(e, args(e, 1), 0), 0).picard_rank;
      const auto v = args(e, 2);
      return noether_check(integer_arg(e, v, 0), integer_arg(e, v, 1)).holds;
    }
    if (f == "mukaigenus") return genus_from_degree(integer_arg(e, args(e, 1), 0));
    if (f == "grassdim" || f == "grasseuler") {
      const auto v = args(e, 2);
      const long k = detail::as_int(v[0], arg_name(e, 0), 1, 1000000);
      const long n = detail::as_int(v[1], arg_name(e, 1), 1, 1000000);
      if (f == "grassdim") return grass_dim(k, n);
      if (n > 10000) throw Error("grasseuler argument too large");
      return euler_grassmannian(k, n);
    }
    if (f == "eu") {
      arity(e, 2);
      if (e.args[0]->kind != dsl::ExprKind::name) throw Error("eu expects an ambient name such as gr2_5");
      const int codim = detail::as_int(eval(*e.args[1]), arg_name(e, 1), 0, 100);
      return derive_profile(e.args[0]->name, e.args[0]->name, codim).profile.euler;
    }
    if (f == "degree") return integrate(detail::as_cycle(args(e, 1)[0], arg_name(e, 0)));
    if (f == "sdegree") {
      const auto c = detail::as_cycle(args(e, 1)[0], arg_name(e, 0));
      return section_degree(env_.require_section(), c);
    }
    if (f == "chern" || f == "csub" || f == "cquot") {
      const int i = detail::as_int(args(e, 1)[0], arg_name(e, 0), 0, 1000);
      if (f == "chern") return chern_source()[i];
      const auto bundles = universal_bundles(env_.ctx());
      return (f == "csub" ? bundles.sub : bundles.quot).total[i];
    }
    if (f == "seuler") {
      args(e, 0);
      return euler_of_section(env_.require_section());
    }
    if (f == "sindex") {
      args(e, 0);
      return section_index(env_.require_section());
    }
    if (f == "nc1" || f == "nc2") {
      const Partition p = detail::as_schubert_class(args(e, 1)[0], arg_name(e, 0));
      const auto n = plane_normal_bundle(env_.require_section(), PlaneClass{p, p.str()});
      return f == "nc1" ? n.c1_on_line : n.c2;
    }
    if (f == "planes") {
      const auto v = args(e, 4);
      const std::vector<PlaneClass> planes{{detail::as_schubert_class(v[0], arg_name(e, 0)), "first"},
                                           {detail::as_schubert_class(v[1], arg_name(e, 1)), "second"}};
      return plane_intersection_matrix(env_.require_section(), planes, integer_arg(e, v, 2), integer_arg(e, v, 3));
    }
    if (f == "det") {
      const auto m = detail::as_matrix(args(e, 1)[0], arg_name(e, 0));
      if (m.size() > 12) throw Error("det supports matrices up to 12x12");
      return determinant(m);
    }
    throw Error("unknown function '" + f + "'");
  }

  Environment& env_;
};

struct AssertionResult {
  std::string label;
  nlohmann::json expected;
  nlohmann::json actual;
  std::string expected_text;
  std::string actual_text;
  bool pass = false;
  std::string cite;
};

struct ScenarioResult {
  std::string name;
  std::vector<AssertionResult> assertions;
  std::vector<std::string> notes;
  bool pass = true;
};

struct Report {
  std::vector<ScenarioResult> scenarios;
  std::size_t total = 0;
  std::size_t failed = 0;
};

namespace detail {

inline void check_literal(const std::string& profile, const char* field, const Integer& given, const Integer& derived) {
  if (given != derived)
    throw Error("profile " + profile + ": " + field + " given as " + given.str() + " but the ambient gives " +
                derived.str());
}

inline int small(const Integer& x, const char* what, long lo, long hi) {
  if (x < lo || x > hi) throw Error(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x.convert_to<int>();
}

class StatementRunner {
 public:
  StatementRunner(Environment& env, ScenarioResult& out) : env_(env), out_(out) {}

  void operator()(const dsl::ProfileStmt& p) {
    if (p.ambient) {
      const int codim = small(p.ambient->codim, "codim", 0, 100);
      auto derived = derive_profile(p.name, p.ambient->name, codim);
      if (derived.section && derived.section->context.dim() > kMaxSchubertDim)
        throw Error("ambient " + p.ambient->name + " exceeds the supported dimension");
      check_literal(p.name, "h4", p.h4, derived.profile.h4);
      check_literal(p.name, "index", p.index, derived.profile.index);
      check_literal(p.name, "chi", p.chi, derived.profile.chi_o);
      check_literal(p.name, "euler", p.euler, derived.profile.euler);
      env_.set_profile(std::move(derived.profile), std::move(derived.section));
    } else {
      env_.set_profile(FourfoldProfile::make(p.name, p.h4, p.index, *p.c2h2, p.chi, p.euler), std::nullopt);
    }
  }
  void operator()(const dsl::CurveStmt& c) {
    if (c.genus < 0) throw Error("curve genus must be non-negative");
    env_.set_center(CurveCenter{c.genus, c.hc});
  }
  void operator()(const dsl::SurfaceStmt& s) {
    SurfaceCenter center{s.hhc, s.hkc, s.kc2, s.euler, s.c2xc, s.rational};
    center.validate();
    env_.set_center(center);
  }
  void operator()(const dsl::PlaneStmt& p) {
    env_.set_center(plane_center(env_.require_section(), Partition(p.parts)));
  }
  void operator()(const dsl::GrassStmt& g) {
    const int k = small(g.k, "grassmannian k", 1, 64);
    const int n = small(g.n, "grassmannian n", 1, 64);
    env_.set_context(GrassmannianContext(k, n));
  }
  void operator()(const dsl::NoteStmt& n) { out_.notes.push_back(n.text); }
  void operator()(const dsl::LetStmt& l) {
    env_.variables.erase(l.name);
    env_.variables.emplace(l.name, Evaluator(env_).eval(*l.value));
  }
  void operator()(const dsl::AssertStmt& a) {
    AssertionResult r;
    r.label = a.label ? *a.label : dsl::print(a.lhs);
    r.cite = a.cite;
    std::optional<Value> lhs, rhs;
    try {
      rhs = Evaluator(env_).eval(*a.rhs);
      r.expected_text = (a.equal ? "" : "!= ") + to_string(*rhs);
      r.expected = a.equal ? to_json(*rhs) : nlohmann::json(r.expected_text);
    } catch (const std::exception& ex) {
      r.expected_text = std::string("error: ") + ex.what();
      r.expected = r.expected_text;
    }
    try {
      lhs = Evaluator(env_).eval(*a.lhs);
      r.actual_text = to_string(*lhs);
      r.actual = to_json(*lhs);
    } catch (const std::exception& ex) {
      r.actual_text = std::string("error: ") + ex.what();
      r.actual = r.actual_text;
    }
    r.pass = lhs && rhs && values_equal(*lhs, *rhs) == a.equal;
    out_.assertions.push_back(std::move(r));
  }

 private:
  Environment& env_;
  ScenarioResult& out_;
};

}  // namespace detail

inline ScenarioResult run_scenario(const Scenario& scenario) {
  ScenarioResult out;
  out.name = scenario.name;
  Environment env;
  detail::StatementRunner runner(env, out);
  for (const auto& statement : scenario.statements) {
    try {
      std::visit(runner, statement);
    } catch (const std::exception& ex) {
      AssertionResult r;
      r.label = "setup: " + dsl::print(statement);
      r.expected_text = "ok";
      r.expected = "ok";
      r.actual_text = std::string("error: ") + ex.what();
      r.actual = r.actual_text;
      r.pass = false;
      out.assertions.push_back(std::move(r));
    }
  }
  out.pass = std::all_of(out.assertions.begin(), out.assertions.end(), [](const auto& a) { return a.pass; });
  return out;
}

/// Evaluates every scenario (concurrently when there are several) and sorts
/// the results by name.
inline Report run(const std::vector<Scenario>& scenarios) {
  Report report;
  if (scenarios.size() > 1) {
    std::vector<std::future<ScenarioResult>> jobs;
    for (const auto& s : scenarios) jobs.push_back(std::async(std::launch::async, [&s] { return run_scenario(s); }));
    for (auto& j : jobs) report.scenarios.push_back(j.get());
  } else {
    for (const auto& s : scenarios) report.scenarios.push_back(run_scenario(s));
  }
  std::stable_sort(report.scenarios.begin(), report.scenarios.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  for (const auto& s : report.scenarios) {
    report.total += s.assertions.size();
    for (const auto& a : s.assertions) report.failed += a.pass ? 0 : 1;
  }
  return report;
}

inline nlohmann::json report_json(const Report& report) {
  nlohmann::json scenarios = nlohmann::json::array();
  for (const auto& s : report.scenarios) {
    nlohmann::json assertions = nlohmann::json::array();
    for (const auto& a : s.assertions)
      assertions.push_back({{"label", a.label}, {"expected", a.expected}, {"actual", a.actual}, {"pass", a.pass}, {"cite", a.cite}});
    scenarios.push_back({{"name", s.name}, {"assertions", std::move(assertions)}, {"pass", s.pass}});
  }
  return {{"scenarios", std::move(scenarios)}, {"total", report.total}, {"failed", report.failed}};
}

inline std::string format_json(const Report& report, bool timestamp = false) {
  nlohmann::json j = report_json(report);
  if (timestamp) {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
  }
  return j.dump(2) + "\n";
}

inline std::string format_text(const Report& report, bool verbose = false) {
  std::ostringstream os;
  for (const auto& s : report.scenarios) {
    os << (s.pass ? "ok    " : "FAIL  ") << s.name << "\n";
    for (const auto& a : s.assertions) {
      os << "  " << (a.pass ? "PASS" : "FAIL") << "  " << a.label << "  expected " << a.expected_text << "  actual "
         << a.actual_text;
      if (!a.cite.empty()) os << "  [" << a.cite << "]";
      os << "\n";
    }
    if (verbose)
      for (const auto& n : s.notes) os << "  note  " << n << "\n";
  }
  os << report.total << " assertions, " << report.failed << " failed\n";
  return os.str();
}

}  // namespace fano
