#pragma once

// Numerical intersection theory on the blowup of a smooth fourfold X along a
// smooth curve or surface C.
//
// Only top-degree numbers are modelled. Divisors are combinations
// a*rho^*H + b*E, and every product of four of them reduces to the five
// monomials (rho^*H)^a * E^(4-a). Degree-2 classes that are not products of
// divisors (rho^*c_2(X), rho^*[C], the fibre class A of E -> C) are paired
// against divisors through a fixed rule table.
//
// For curve centres rho^*H * E^3 is read as the degree of H on C; with the
// P^4 line projection (H-E)^4 = 0 this is the only consistent reading.

#include "fano/core.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <variant>

namespace fano {

/// Numerical fingerprint of a smooth fourfold with K_X = -index * H.
struct FourfoldProfile {
  std::string name;
  Integer h4;
  Integer index;
  Integer c2h2;
  Integer c1c2h;
  Integer chi_o;
  Integer euler;

  static FourfoldProfile make(std::string name, Integer h4, Integer index, Integer c2h2, Integer chi_o,
                              Integer euler) {
    FourfoldProfile p{std::move(name), std::move(h4), index, c2h2, index * c2h2, std::move(chi_o),
                      std::move(euler)};
    p.validate();
    return p;
  }

  void validate() const {
    if (h4 < 1) throw Error("profile " + name + ": H^4 must be positive");
    if (index < 1) throw Error("profile " + name + ": index must be positive");
    if (c1c2h != index * c2h2) throw Error("profile " + name + ": c1*c2*H must equal index * c2*H^2");
  }

  friend bool operator==(const FourfoldProfile&, const FourfoldProfile&) = default;
};

struct CurveCenter {
  Integer genus;
  Integer hc;  ///< H . C

  friend bool operator==(const CurveCenter&, const CurveCenter&) = default;
};

struct SurfaceCenter {
  Integer hhc;    ///< H^2 . C
  Integer hkc;    ///< H|_C . K_C
  Integer kc2;    ///< K_C^2
  Integer euler;  ///< c_2(C)
  Integer c2xc;   ///< c_2(X) . C
  /// Rational surfaces with chi(O) = 1 must satisfy Noether: K^2 + e = 12.
  bool rational = false;

  void validate() const {
    if (rational && kc2 + euler != 12) throw Error("rational surface centre violates K^2 + e = 12");
  }

  /// c_2(N_{C/X}) from c(N) c(T_C) = c(T_X)|_C with K_X = -index*H.
  Integer normal_c2(const Integer& index) const { return c2xc - euler + index * hkc + kc2; }

  friend bool operator==(const SurfaceCenter&, const SurfaceCenter&) = default;
};

using Center = std::variant<CurveCenter, SurfaceCenter>;

class BlowupModel {
 public:
  BlowupModel(FourfoldProfile base, Center center) : base_(std::move(base)), center_(std::move(center)) {
    base_.validate();
    if (const auto* s = std::get_if<SurfaceCenter>(&center_)) s->validate();
    if (const auto* c = std::get_if<CurveCenter>(&center_)) {
      if (c->genus < 0) throw Error("curve genus must be non-negative");
    }
  }

  const FourfoldProfile& base() const { return base_; }
  const Center& center() const { return center_; }
  bool curve_center() const { return std::holds_alternative<CurveCenter>(center_); }
  const CurveCenter& curve() const { return std::get<CurveCenter>(center_); }
  const SurfaceCenter& surface() const { return std::get<SurfaceCenter>(center_); }

  /// K_blowup = rho^*K_X + discrepancy * E (codimension of C minus one).
  Integer discrepancy() const { return curve_center() ? 2 : 1; }

  Integer normal_c2() const {
    if (curve_center()) throw Error("normal_c2 is defined for surface centres only");
    return surface().normal_c2(base_.index);
  }

 private:
  FourfoldProfile base_;
  Center center_;
};

/// h * rho^*H + e * E
struct DivisorExpr {
  Integer h = 0;
  Integer e = 0;

  static DivisorExpr H() { return {1, 0}; }
  static DivisorExpr E() { return {0, 1}; }

  friend DivisorExpr operator+(const DivisorExpr& a, const DivisorExpr& b) { return {a.h + b.h, a.e + b.e}; }
  friend DivisorExpr operator-(const DivisorExpr& a, const DivisorExpr& b) { return {a.h - b.h, a.e - b.e}; }
  friend DivisorExpr operator-(const DivisorExpr& a) { return {-a.h, -a.e}; }
  friend DivisorExpr operator*(const Integer& s, const DivisorExpr& a) { return {s * a.h, s * a.e}; }
  friend bool operator==(const DivisorExpr&, const DivisorExpr&) = default;

  std::string str() const {
    std::string out;
    auto term = [&](const Integer& c, const char* atom) {
      if (c == 0) return;
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const Integer mag = c < 0 ? Integer(-c) : c;
      if (mag != 1) out += mag.str() + "*";
      out += atom;
    };
    term(h, "H");
    term(e, "E");
    return out.empty() ? "0" : out;
  }
};

/// -K of the blowup: index * rho^*H - discrepancy * E.
inline DivisorExpr anticanonical(const BlowupModel& model) { return {model.base().index, -model.discrepancy()}; }

/// (rho^*H)^a * E^(4-a).
inline Integer monomial_number(const BlowupModel& model, int a) {
  if (a < 0 || a > 4) throw Error("monomial_number takes 0 <= a <= 4");
  const auto& x = model.base();
  const Integer& r = x.index;
  if (a == 4) return x.h4;
  if (a == 3) return 0;
  if (model.curve_center()) {
    const auto& c = model.curve();
    switch (a) {
      case 2: return 0;
      case 1: return c.hc;
      default: return r * c.hc + 2 * c.genus - 2;  // -K_X.C + 2g - 2
    }
  }
  const auto& s = model.surface();
  switch (a) {
    case 2: return -s.hhc;
    case 1: return -s.hkc - r * s.hhc;  // -H|_C.K_C + K_X.H.C
    default: return s.c2xc - r * s.hkc - s.euler - r * r * s.hhc;
  }
}

/// Symmetric multilinear product of four divisors.
inline Integer quartic_number(const BlowupModel& model, const DivisorExpr& d1, const DivisorExpr& d2,
                              const DivisorExpr& d3, const DivisorExpr& d4) {
  std::array<Integer, 5> monomial;
  for (int a = 0; a <= 4; ++a) monomial[a] = monomial_number(model, a);
  const std::array<const DivisorExpr*, 4> ds{&d1, &d2, &d3, &d4};
  Integer total = 0;
  for (int mask = 0; mask < 16; ++mask) {
    Integer coeff = 1;
    int h_count = 0;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1 << i)) {
        coeff *= ds[i]->h;
        ++h_count;
      } else {
        coeff *= ds[i]->e;
      }
      if (coeff == 0) break;
    }
    if (coeff != 0) total += coeff * monomial[h_count];
  }
  return total;
}

enum class Degree2Symbol {
  pullback_c2,      ///< rho^*c_2(X)
  pullback_center,  ///< rho^*[C], surface centres
  fiber,            ///< A, the fibre of E -> C, curve centres
  hh,               ///< (rho^*H)^2
  he,               ///< rho^*H . E
  ee,               ///< E^2
};

inline const char* symbol_name(Degree2Symbol s) {
  switch (s) {
    case Degree2Symbol::pullback_c2: return "rho^*c2";
    case Degree2Symbol::pullback_center: return "rho^*[C]";
    case Degree2Symbol::fiber: return "A";
    case Degree2Symbol::hh: return "rho^*H^2";
    case Degree2Symbol::he: return "rho^*H.E";
    case Degree2Symbol::ee: return "E^2";
  }
  return "?";
}

/// Formal integer combination of degree-2 symbols.
struct Degree2Class {
  std::map<Degree2Symbol, Integer> terms;

  Integer coefficient(Degree2Symbol s) const {
    auto it = terms.find(s);
    return it == terms.end() ? Integer(0) : it->second;
  }
};

/// c_2 of the blowup.
///
/// Curve centre: rho^*c_2(X) + (2g - 2 + K_X.C) A. This follows from
/// 0 -> T -> rho^*T_X -> j_*(N/O(-1)) -> 0 together with rho^*H.E = (H.C) A.
/// The coefficient is pinned by the P^4 line projection, whose fibres are
/// planes with c_2(T)|_fibre = 3.
///
/// Surface centre: rho^*c_2(X) + rho^*[C] + rho^*K_X . E.
inline Degree2Class c2_blowup(const BlowupModel& model) {
  const Integer& r = model.base().index;
  if (model.curve_center()) {
    const auto& c = model.curve();
    return {{{Degree2Symbol::pullback_c2, 1}, {Degree2Symbol::fiber, 2 * c.genus - 2 - r * c.hc}}};
  }
  return {{{Degree2Symbol::pullback_c2, 1}, {Degree2Symbol::pullback_center, 1}, {Degree2Symbol::he, -r}}};
}

namespace detail {

/// symbol . X . Y for X, Y in {rho^*H, E}; `e_count` is how many of them are E.
inline Integer pair_rule(const BlowupModel& model, Degree2Symbol s, int e_count) {
  const bool curve = model.curve_center();
  switch (s) {
    case Degree2Symbol::pullback_c2:
      if (e_count == 0) return model.base().c2h2;
      if (e_count == 1) return 0;
      return curve ? Integer(0) : Integer(-model.surface().c2xc);
    case Degree2Symbol::fiber:
      if (!curve) throw Error("unknown symbol A for a surface centre");
      return e_count == 2 ? 1 : 0;
    case Degree2Symbol::pullback_center:
      if (curve) throw Error("unknown symbol rho^*[C] for a curve centre");
      if (e_count == 0) return model.surface().hhc;
      if (e_count == 1) return 0;
      return -model.normal_c2();
    case Degree2Symbol::hh: return monomial_number(model, 4 - e_count);
    case Degree2Symbol::he: return monomial_number(model, 3 - e_count);
    case Degree2Symbol::ee: return monomial_number(model, 2 - e_count);
  }
  throw Error("unknown degree-2 symbol");
}

}  // namespace detail

/// class2 . d1 . d2, bilinear in the divisors.
inline Integer pair_degree2(const BlowupModel& model, const Degree2Class& class2, const DivisorExpr& d1,
                            const DivisorExpr& d2) {
  Integer total = 0;
  for (const auto& [symbol, coeff] : class2.terms) {
    if (coeff == 0) continue;
    const Integer value = d1.h * d2.h * detail::pair_rule(model, symbol, 0) +
                          (d1.h * d2.e + d1.e * d2.h) * detail::pair_rule(model, symbol, 1) +
                          d1.e * d2.e * detail::pair_rule(model, symbol, 2);
    total += coeff * value;
  }
  return total;
}

/// 24 * (chi(O(D)) - chi(O)); always divisible by 24 for consistent data.
inline Integer riemann_roch_bracket(const BlowupModel& model, const DivisorExpr& d) {
  const DivisorExpr c1 = anticanonical(model);
  const Degree2Class c2 = c2_blowup(model);
  return quartic_number(model, d, d, d, d) + 2 * quartic_number(model, d, d, d, c1) +
         quartic_number(model, d, d, c1, c1) + pair_degree2(model, c2, d, d) + pair_degree2(model, c2, d, c1);
}

inline Integer chi_riemann_roch(const BlowupModel& model, const DivisorExpr& d) {
  const Integer bracket = riemann_roch_bracket(model, d);
  if (bracket % 24 != 0)
    throw Error("non-integral Riemann-Roch value " + bracket.str() + "/24 for D = " + d.str() +
                " (inconsistent profile)");
  return bracket / 24 + model.base().chi_o;
}

inline Integer euler_blowup(const BlowupModel& model) {
  const auto& x = model.base();
  if (model.curve_center()) return x.euler + 2 * (2 - 2 * model.curve().genus);
  return x.euler + model.surface().euler;
}

/// K^3 of the blowup of a smooth threefold along a smooth curve of genus g
/// with K.C = kc.
inline Integer threefold_blowup_K3(const Integer& k3, const Integer& kc, const Integer& genus) {
  if (genus < 0) throw Error("curve genus must be non-negative");
  return k3 - 2 * kc + 2 - 2 * genus;
}

/// x with constant + coefficient * x = rhs.
inline Rational solve_linear(const Integer& constant, const Integer& coefficient, const Integer& rhs) {
  if (coefficient == 0) throw Error("solve_linear: zero coefficient");
  return Rational(rhs - constant, coefficient);
}

/// Invariants of the surface F blown up by the other contraction of a link,
/// read off from L = phi^*(generator) and the exceptional divisor D over F.
struct CenterInvariants {
  Integer deg;                ///< L^2 . F
  Integer lkf;                ///< L|_F . K_F
  Integer c2_minus_euler;     ///< c_2(W').F - e(F)
};

inline CenterInvariants infer_center_invariants(const BlowupModel& model, const DivisorExpr& l,
                                                const DivisorExpr& d, const Integer& target_index) {
  if (target_index < 1) throw Error("target index must be positive");
  if (quartic_number(model, l, l, l, d) != 0)
    throw Error("precondition failure: L^3 . D must vanish for a divisor contracted to a surface");
  CenterInvariants out;
  out.deg = -quartic_number(model, l, l, d, d);
  // L.D^3 = -L|_F.K_F - r L^2.F
  out.lkf = -quartic_number(model, l, d, d, d) - target_index * out.deg;
  // D^4 = c_2.F - e(F) - r L.K_F - r^2 L^2.F
  out.c2_minus_euler = quartic_number(model, d, d, d, d) + target_index * out.lkf +
                       target_index * target_index * out.deg;
  return out;
}

/// Genus of a curve M on a surface: 2g - 2 = K.M + M^2.
inline Integer adjunction_genus(const Integer& km, const Integer& m2) {
  const Integer sum = km + m2;
  if (sum % 2 != 0) throw Error("parity violation: K.M + M^2 must be even");
  return sum / 2 + 1;
}

struct NoetherResult {
  bool holds;
  Integer picard_rank;  ///< 10 - K^2 for a rational surface
};

inline NoetherResult noether_check(const Integer& k2, const Integer& euler) {
  return {k2 + euler == 12, 10 - k2};
}

/// Genus of a Mukai fourfold from its degree: L^4 = 2g - 2.
inline Integer genus_from_degree(const Integer& l4) {
  if (l4 % 2 != 0) throw Error("genus_from_degree requires an even degree");
  return l4 / 2 + 1;
}

}  // namespace fano
