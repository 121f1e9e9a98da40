#pragma once

// Fourfold profiles derived from an ambient description instead of literals.
//
// Ambient names:
//   grK_N        Gr(K,N), cut by `codim` general hyperplanes
//   ciN[_d...]   complete intersection of degrees d... in P^N, then cut by
//                `codim` hyperplanes ("ci4" is P^4, "ci6_2_2" is W_{2.2})

#include "fano/blowup.hpp"
#include "fano/chern.hpp"
#include "fano/core.hpp"
#include "fano/schubert.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fano {

struct GrassmannianAmbient {
  int k;
  int n;
};

struct ProjectiveAmbient {
  int n;
  std::vector<int> degrees;
};

using AmbientSpec = std::variant<GrassmannianAmbient, ProjectiveAmbient>;

inline constexpr int kMaxAmbientDim = 40;
/// Grassmannian sections are limited to ambients of this dimension.
inline constexpr int kMaxSectionAmbientDim = 12;

namespace detail {

inline std::optional<int> parse_small_int(std::string_view s) {
  if (s.empty() || s.size() > 3) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::vector<std::string_view> split_underscore(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find('_', start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline AmbientSpec parse_ambient(std::string_view name) {
  auto bad = [&]() { return Error("unknown ambient '" + std::string(name) + "' (expected grK_N or ciN_d1_d2...)"); };
  if (name.starts_with("gr")) {
    const auto parts = detail::split_underscore(name.substr(2));
    if (parts.size() != 2) throw bad();
    const auto k = detail::parse_small_int(parts[0]);
    const auto n = detail::parse_small_int(parts[1]);
    if (!k || !n) throw bad();
    if (*k < 1 || *n <= *k) throw Error("ambient " + std::string(name) + ": Gr(k,n) requires n > k >= 1");
    if (*k * (*n - *k) > kMaxAmbientDim) throw Error("ambient " + std::string(name) + " is too large");
    return GrassmannianAmbient{*k, *n};
  }
  if (name.starts_with("ci")) {
    const auto parts = detail::split_underscore(name.substr(2));
    const auto n = detail::parse_small_int(parts[0]);
    if (!n) throw bad();
    if (*n < 1 || *n > kMaxAmbientDim) throw Error("ambient " + std::string(name) + ": dimension out of range");
    ProjectiveAmbient out{*n, {}};
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto d = detail::parse_small_int(parts[i]);
      if (!d) throw bad();
      if (*d < 1 || *d > 99) throw Error("ambient " + std::string(name) + ": degree out of range");
      out.degrees.push_back(*d);
    }
    return out;
  }
  throw bad();
}

/// Degrees of the monomials in Chern classes that enter the profile and the
/// Todd genus of a fourfold.
struct ChernNumbers {
  Integer h4, c1h3_over_h, c2h2, c1_4, c1_2c2, c2_2, c1c3, c4;
  Integer index;
};

/// chi(O) of a fourfold from Todd: td_4 = (-c4 + c3c1 + 3c2^2 + 4c2c1^2 - c1^4)/720.
inline Integer todd_chi(const ChernNumbers& c) {
  const Integer num = -c.c4 + c.c1c3 + 3 * c.c2_2 + 4 * c.c1_2c2 - c.c1_4;
  if (num % 720 != 0) throw Error("Todd genus " + num.str() + "/720 is not an integer");
  return num / 720;
}

struct DerivedAmbient {
  FourfoldProfile profile;
  /// Present for Grassmannian sections: the Schubert context and section data.
  std::optional<SectionModel> section;
};

inline ChernNumbers section_chern_numbers(const SectionModel& s) {
  const auto& ctx = s.context;
  const auto h = SchubertCycle::special(ctx, 1);
  auto deg = [&](const SchubertCycle& x) { return section_degree(s, x); };
  const auto c1 = s.chern[1], c2 = s.chern[2], c3 = s.chern[3], c4 = s.chern[4];
  ChernNumbers n;
  n.index = section_index(s);
  n.h4 = deg(power(h, 4));
  n.c2h2 = deg(c2 * h * h);
  n.c1_4 = deg(power(c1, 4));
  n.c1_2c2 = deg(c1 * c1 * c2);
  n.c2_2 = deg(c2 * c2);
  n.c1c3 = deg(c1 * c3);
  n.c4 = deg(c4);
  n.c1h3_over_h = n.index * n.h4;
  return n;
}

inline ChernNumbers ci_chern_numbers(const CompleteIntersection& ci) {
  const auto a = ci.chern_coefficients();
  const Integer d = ci.degree();
  ChernNumbers n;
  n.index = a[1];
  n.h4 = d;
  n.c2h2 = a[2] * d;
  n.c1_4 = a[1] * a[1] * a[1] * a[1] * d;
  n.c1_2c2 = a[1] * a[1] * a[2] * d;
  n.c2_2 = a[2] * a[2] * d;
  n.c1c3 = a[1] * a[3] * d;
  n.c4 = a[4] * d;
  n.c1h3_over_h = n.index * d;
  return n;
}

inline DerivedAmbient derive_profile(const std::string& name, std::string_view ambient, int codim) {
  if (codim < 0) throw Error("ambient codim must be non-negative");
  const AmbientSpec spec = parse_ambient(ambient);
  ChernNumbers numbers;
  Integer euler;
  std::optional<SectionModel> section;
  if (const auto* g = std::get_if<GrassmannianAmbient>(&spec)) {
    const GrassmannianContext ctx(g->k, g->n);
    if (ctx.dim() - codim != 4)
      throw Error("ambient " + std::string(ambient) + " with codim " + std::to_string(codim) +
                  " is not a fourfold");
    if (ctx.dim() > kMaxSectionAmbientDim || g->k > kMaxTensorRank || ctx.cols() > kMaxTensorRank)
      throw Error("ambient " + std::string(ambient) + " exceeds the supported bundle ranks");
    section = section_chern(tangent_chern(ctx), codim);
    numbers = section_chern_numbers(*section);
    euler = euler_of_section(*section);
  } else {
    const auto& p = std::get<ProjectiveAmbient>(spec);
    const CompleteIntersection ci{p.n, p.degrees, codim};
    if (ci.dim() != 4)
      throw Error("ambient " + std::string(ambient) + " with codim " + std::to_string(codim) +
                  " is not a fourfold");
    numbers = ci_chern_numbers(ci);
    euler = numbers.c4;
  }
  if (numbers.index < 1) throw Error("ambient " + std::string(ambient) + " is not Fano (index " +
                                     numbers.index.str() + ")");
  return {FourfoldProfile::make(name, numbers.h4, numbers.index, numbers.c2h2, todd_chi(numbers), euler),
          std::move(section)};
}

/// A plane in a Grassmannian section, as surface-centre data.
inline SurfaceCenter plane_center(const SectionModel& model, const Partition& plane) {
  const auto& ctx = model.context;
  plane_normal_bundle(model, PlaneClass{plane, plane.str()});  // validates the class
  SurfaceCenter s;
  s.hhc = integrate(power(SchubertCycle::special(ctx, 1), 2) * SchubertCycle::basis(ctx, plane));
  if (s.hhc != 1) throw Error("class " + plane.str() + " is not a plane (degree " + s.hhc.str() + ")");
  s.hkc = -3;
  s.kc2 = 9;
  s.euler = 3;
  s.c2xc = integrate(model.chern[2] * SchubertCycle::basis(ctx, plane));
  s.rational = true;
  return s;
}

}  // namespace fano
