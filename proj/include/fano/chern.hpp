#pragma once

// Chern classes on Grassmannians and on their smooth linear sections.
//
// A section X = G ∩ (c hyperplanes) is never given its own Chow ring. Its
// Chern classes are stored as ambient classes whose restriction to X is the
// true class, and every degree on X is computed in G after multiplying by
// sigma_1^c.

#include "fano/core.hpp"
#include "fano/schubert.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fano {

/// c_0 + c_1 + ... + c_limit. Components above limit are zero.
class TotalChernClass {
 public:
  TotalChernClass(GrassmannianContext ctx, std::vector<SchubertCycle> components)
      : ctx_(ctx), components_(std::move(components)) {
    if (components_.empty()) throw Error("total Chern class needs a degree-0 component");
    if (limit() > ctx_.dim()) throw Error("total Chern class extends beyond the dimension of " + ctx_.str());
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const auto& c = components_[i];
      if (c.context() != ctx_) throw Error("context mismatch in total Chern class");
      if (!c.is_zero() && c.codim() != static_cast<int>(i))
        throw Error("component " + std::to_string(i) + " has codimension " + std::to_string(c.codim()));
      if (c.is_zero()) components_[i] = SchubertCycle(ctx_, static_cast<int>(i));
    }
    if (components_[0] != SchubertCycle::unit(ctx_)) throw Error("c_0 of a total Chern class must be 1");
  }

  static TotalChernClass unit(const GrassmannianContext& ctx) {
    return TotalChernClass(ctx, {SchubertCycle::unit(ctx)});
  }

  const GrassmannianContext& context() const { return ctx_; }
  int limit() const { return static_cast<int>(components_.size()) - 1; }
  const std::vector<SchubertCycle>& components() const { return components_; }

  SchubertCycle operator[](int i) const {
    if (i < 0) throw Error("negative Chern class index");
    if (i > limit()) return SchubertCycle(ctx_, i);
    return components_[i];
  }

  TotalChernClass truncated(int new_limit) const {
    std::vector<SchubertCycle> comps;
    for (int i = 0; i <= new_limit; ++i) comps.push_back((*this)[i]);
    return TotalChernClass(ctx_, std::move(comps));
  }

  friend bool operator==(const TotalChernClass& a, const TotalChernClass& b) {
    if (a.ctx_ != b.ctx_) return false;
    const int top = std::max(a.limit(), b.limit());
    for (int i = 0; i <= top; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

 private:
  GrassmannianContext ctx_;
  std::vector<SchubertCycle> components_;
};

/// Product of total classes, keeping components up to `limit`.
inline TotalChernClass product(const TotalChernClass& a, const TotalChernClass& b, int limit) {
  if (a.context() != b.context()) throw Error("context mismatch in Chern class product");
  const auto& ctx = a.context();
  limit = std::min(limit, ctx.dim());
  std::vector<SchubertCycle> comps;
  for (int d = 0; d <= limit; ++d) {
    SchubertCycle sum(ctx, d);
    for (int i = 0; i <= std::min(d, a.limit()); ++i) {
      if (d - i > b.limit()) continue;
      sum += a[i] * b[d - i];
    }
    comps.push_back(std::move(sum));
  }
  return TotalChernClass(ctx, std::move(comps));
}

inline TotalChernClass operator*(const TotalChernClass& a, const TotalChernClass& b) {
  return product(a, b, a.limit() + b.limit());
}

struct BundleModel {
  int rank;
  TotalChernClass total;

  BundleModel(int r, TotalChernClass t) : rank(r), total(std::move(t)) {
    if (rank < 1) throw Error("bundle rank must be positive");
  }

  /// c_i(V^*) = (-1)^i c_i(V).
  BundleModel dual() const {
    std::vector<SchubertCycle> comps = total.components();
    for (std::size_t i = 1; i < comps.size(); i += 2) comps[i] *= -1;
    return BundleModel(rank, TotalChernClass(total.context(), std::move(comps)));
  }
};

struct UniversalBundles {
  /// Dual of the tautological subbundle: c = sum of sigma_{1^i}, i <= k.
  BundleModel sub;
  /// Universal quotient bundle: c = sum of sigma_r, r <= n-k.
  BundleModel quot;
};

inline UniversalBundles universal_bundles(const GrassmannianContext& ctx) {
  std::vector<SchubertCycle> sub;
  for (int i = 0; i <= ctx.k(); ++i) sub.push_back(SchubertCycle::basis(ctx, Partition::column(i)));
  std::vector<SchubertCycle> quot;
  for (int r = 0; r <= ctx.cols(); ++r) quot.push_back(SchubertCycle::special(ctx, r));
  // Both sums are exact; keep them only up to dim for the class invariant.
  sub.resize(std::min<std::size_t>(sub.size(), ctx.dim() + 1), SchubertCycle(ctx, 0));
  quot.resize(std::min<std::size_t>(quot.size(), ctx.dim() + 1), SchubertCycle(ctx, 0));
  return {BundleModel(ctx.k(), TotalChernClass(ctx, std::move(sub))),
          BundleModel(ctx.cols(), TotalChernClass(ctx, std::move(quot)))};
}

inline constexpr int kMaxTensorRank = 6;

namespace detail {

using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Integer>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int max_degree) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b) {
      if (da + total_degree(eb) > max_degree) continue;
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.try_emplace(std::move(e), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

/// e_i of the variables [first, first+count) inside a space of nvars variables.
inline Poly elementary(int i, int first, int count, int nvars) {
  Poly out;
  if (i < 0 || i > count) return out;
  std::vector<int> pick(count, 0);
  std::fill(pick.end() - i, pick.end(), 1);
  do {
    Exponents e(nvars, 0);
    for (int j = 0; j < count; ++j) e[first + j] = pick[j];
    out[e] += 1;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

/// Writes a polynomial symmetric separately in x_1..x_ra and y_1..y_rb as a
/// polynomial in e_1(x)..e_ra(x), e_1(y)..e_rb(y). The returned keys hold the
/// exponent of each elementary function in that order.
inline Poly to_elementary_basis(Poly f, int ra, int rb) {
  const int nvars = ra + rb;
  std::vector<Poly> ex, ey;
  for (int i = 0; i <= ra; ++i) ex.push_back(elementary(i, 0, ra, nvars));
  for (int j = 0; j <= rb; ++j) ey.push_back(elementary(j, ra, rb, nvars));
  Poly out;
  while (!f.empty()) {
    // Lex-leading monomial: its x-part and y-part are both partitions.
    const auto lead = *f.rbegin();
    const Exponents& alpha = lead.first;
    Exponents key(nvars, 0);
    Poly term{{Exponents(nvars, 0), lead.second}};
    for (int i = 0; i < ra; ++i) {
      const int next = i + 1 < ra ? alpha[i + 1] : 0;
      const int m = alpha[i] - next;
      if (m < 0) throw Error("polynomial is not symmetric in the first group of roots");
      key[i] = m;
      for (int t = 0; t < m; ++t) term = poly_mul(term, ex[i + 1], total_degree(alpha));
    }
    for (int j = 0; j < rb; ++j) {
      const int next = j + 1 < rb ? alpha[ra + j + 1] : 0;
      const int m = alpha[ra + j] - next;
      if (m < 0) throw Error("polynomial is not symmetric in the second group of roots");
      key[ra + j] = m;
      for (int t = 0; t < m; ++t) term = poly_mul(term, ey[j + 1], total_degree(alpha));
    }
    out[key] += lead.second;
    for (const auto& [e, c] : term) {
      auto [it, inserted] = f.try_emplace(e, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second == 0) f.erase(it);
      }
    }
  }
  return out;
}

}  // namespace detail

/// c(a ⊗ b) by the splitting principle: expand prod(1 + x_i + y_j), rewrite in
/// elementary symmetric functions of the roots, then substitute c_i(a), c_j(b).
inline TotalChernClass tensor_chern(const BundleModel& a, const BundleModel& b) {
  const auto& ctx = a.total.context();
  if (b.total.context() != ctx) throw Error("context mismatch in tensor_chern");
  if (a.rank > kMaxTensorRank || b.rank > kMaxTensorRank)
    throw Error("tensor_chern supports ranks up to " + std::to_string(kMaxTensorRank));
  const int ra = a.rank, rb = b.rank, nvars = ra + rb;
  const int limit = std::min(ra * rb, ctx.dim());

  detail::Poly f{{detail::Exponents(nvars, 0), 1}};
  for (int i = 0; i < ra; ++i) {
    for (int j = 0; j < rb; ++j) {
      detail::Poly factor{{detail::Exponents(nvars, 0), 1}};
      detail::Exponents xi(nvars, 0), yj(nvars, 0);
      xi[i] = 1;
      yj[ra + j] = 1;
      factor[xi] = 1;
      factor[yj] = 1;
      f = detail::poly_mul(f, factor, limit);
    }
  }
  const detail::Poly e_form = detail::to_elementary_basis(std::move(f), ra, rb);

  std::vector<SchubertCycle> comps;
  for (int d = 0; d <= limit; ++d) comps.emplace_back(ctx, d);
  for (const auto& [key, coeff] : e_form) {
    SchubertCycle term = SchubertCycle::unit(ctx);
    for (int i = 0; i < ra && !term.is_zero(); ++i)
      for (int t = 0; t < key[i]; ++t) term = term * a.total[i + 1];
    for (int j = 0; j < rb && !term.is_zero(); ++j)
      for (int t = 0; t < key[ra + j]; ++t) term = term * b.total[j + 1];
    int d = 0;
    for (int i = 0; i < ra; ++i) d += key[i] * (i + 1);
    for (int j = 0; j < rb; ++j) d += key[ra + j] * (j + 1);
    if (term.is_zero() || d > limit) continue;
    comps[d] += coeff * term;
  }
  return TotalChernClass(ctx, std::move(comps));
}

/// Tangent bundle of Gr(k,n) as (dual sub) ⊗ quot.
inline TotalChernClass tangent_chern(const GrassmannianContext& ctx) {
  const auto bundles = universal_bundles(ctx);
  return tensor_chern(bundles.sub, bundles.quot);
}

struct SectionModel {
  GrassmannianContext context;
  int codim;
  TotalChernClass chern;

  int dim() const { return context.dim() - codim; }
};

/// c(X) = c(G) / (1 + sigma_1)^c for X cut by c general hyperplanes. The
/// default truncation is dim X; pass a larger limit to keep more terms.
inline SectionModel section_chern(const TotalChernClass& ambient, int c, std::optional<int> limit = std::nullopt) {
  const auto& ctx = ambient.context();
  if (c < 0 || c >= ctx.dim()) throw Error("section codimension must satisfy 0 <= c < dim G");
  const int top = std::min(limit.value_or(ctx.dim() - c), ctx.dim());
  // (1 + h)^{-c} = sum_j (-1)^j C(c+j-1, j) h^j
  std::vector<SchubertCycle> inverse;
  const SchubertCycle h = SchubertCycle::special(ctx, 1);
  SchubertCycle h_power = SchubertCycle::unit(ctx);
  for (int j = 0; j <= top; ++j) {
    Integer coeff = c == 0 ? Integer(j == 0 ? 1 : 0) : binomial(c + j - 1, j);
    if (j % 2) coeff = -coeff;
    inverse.push_back(coeff * h_power);
    h_power = h_power * h;
  }
  return {ctx, c, product(ambient, TotalChernClass(ctx, std::move(inverse)), top)};
}

/// deg_X(alpha|_X) = deg_G(alpha * sigma_1^c).
inline Integer section_degree(const SectionModel& model, const SchubertCycle& cycle) {
  if (cycle.context() != model.context) throw Error("context mismatch in section_degree");
  if (cycle.codim() + model.codim != model.context.dim()) return 0;
  return integrate(cycle * power(SchubertCycle::special(model.context, 1), model.codim));
}

inline Integer euler_of_section(const SectionModel& model) {
  if (model.chern.limit() < model.dim())
    throw Error("Chern class truncated below the top degree of the section");
  return section_degree(model, model.chern[model.dim()]);
}

/// r with c_1(X) = r * sigma_1.
inline Integer section_index(const SectionModel& model) {
  if (model.chern.limit() < 1) throw Error("Chern class truncated below degree 1");
  return model.chern[1].coefficient(Partition({1}));
}

struct PlaneClass {
  Partition schubert;
  std::string name;
};

struct PlaneNormalBundle {
  /// a with c_1(N) = a * (line class).
  Integer c1_on_line;
  Integer c2;

  friend bool operator==(const PlaneNormalBundle&, const PlaneNormalBundle&) = default;
};

/// c(N) c(P^2) = c(X)|_plane with c_1(P^2) = 3l and c_2(P^2) = 3.
inline PlaneNormalBundle plane_normal_bundle(const SectionModel& model, const PlaneClass& plane) {
  const auto& ctx = model.context;
  if (plane.schubert.weight() != ctx.dim() - 2)
    throw Error("plane class " + plane.schubert.str() + " must have codimension " + std::to_string(ctx.dim() - 2) +
                " in " + ctx.str());
  if (!plane.schubert.fits(ctx)) throw Error("plane class " + plane.schubert.str() + " lies outside " + ctx.str());
  if (model.chern.limit() < 2) throw Error("Chern class truncated below degree 2");
  const Integer a = section_index(model) - 3;
  const Integer c2_on_plane = integrate(model.chern[2] * SchubertCycle::basis(ctx, plane.schubert));
  return {a, c2_on_plane - 3 * a - 3};
}

/// Intersection matrix of two planes in a fourfold section, from their
/// self-intersections c_2(N) and the relation sigma_1^2|_X = u*P1 + v*P2.
inline IntegerMatrix plane_intersection_matrix(const SectionModel& model, std::span<const PlaneClass> planes,
                                               const Integer& u, const Integer& v) {
  if (planes.size() != 2) throw Error("plane_intersection_matrix needs exactly two planes");
  const auto& ctx = model.context;
  const SchubertCycle h2 = power(SchubertCycle::special(ctx, 1), 2);
  std::array<Integer, 2> self{}, pairing{};
  for (int i = 0; i < 2; ++i) {
    self[i] = plane_normal_bundle(model, planes[i]).c2;
    pairing[i] = integrate(h2 * SchubertCycle::basis(ctx, planes[i].schubert));
  }
  // pairing[0] = u*self[0] + v*x ; pairing[1] = u*x + v*self[1]
  const std::array<std::pair<Integer, Integer>, 2> equations{
      std::pair{v, pairing[0] - u * self[0]}, std::pair{u, pairing[1] - v * self[1]}};
  std::optional<Integer> x;
  for (const auto& [coeff, rhs] : equations) {
    if (coeff == 0) {
      if (rhs != 0) throw Error("inconsistent plane intersection data");
      continue;
    }
    if (rhs % coeff != 0) throw Error("inconsistent plane intersection data: non-integral off-diagonal entry");
    const Integer value = rhs / coeff;
    if (x && *x != value) throw Error("inconsistent plane intersection data: equations disagree");
    x = value;
  }
  if (!x) throw Error("inconsistent plane intersection data: off-diagonal entry is undetermined");
  return {{self[0], *x}, {*x, self[1]}};
}

/// Smooth complete intersection of hypersurfaces of the given degrees in P^N,
/// further cut by `hyperplanes` general hyperplanes.
struct CompleteIntersection {
  int ambient_dim;
  std::vector<int> degrees;
  int hyperplanes = 0;

  int dim() const { return ambient_dim - static_cast<int>(degrees.size()) - hyperplanes; }

  Integer degree() const {
    Integer d = 1;
    for (int x : degrees) d *= x;
    return d;
  }

  /// a_i with c_i(X) = a_i h^i, i = 0..dim.
  std::vector<Integer> chern_coefficients() const {
    if (ambient_dim < 1 || dim() < 0) throw Error("complete intersection has negative dimension");
    const int top = dim();
    std::vector<Integer> c(top + 1);
    for (int i = 0; i <= top; ++i) c[i] = binomial(ambient_dim + 1, i);
    auto divide = [&](int d) {
      if (d < 1) throw Error("hypersurface degree must be positive");
      // multiply by 1/(1 + d h) = sum (-d)^j h^j
      for (int i = 1; i <= top; ++i) c[i] -= d * c[i - 1];
    };
    for (int d : degrees) divide(d);
    for (int i = 0; i < hyperplanes; ++i) divide(1);
    return c;
  }
};

}  // namespace fano
