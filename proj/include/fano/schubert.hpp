#pragma once

// Chow ring of the Grassmannian Gr(k,n) in the Schubert basis.
//
// Classes are indexed by partitions inside the k x (n-k) box. Products are
// computed by expanding one factor with the Giambelli determinant into
// special classes sigma_p and applying the Pieri rule once per factor.

#include "fano/core.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fano {

class GrassmannianContext {
 public:
  GrassmannianContext(int k, int n) : k_(k), n_(n) {
    if (k < 1 || n <= k) throw Error("Grassmannian Gr(k,n) requires n > k >= 1");
  }

  int k() const { return k_; }
  int n() const { return n_; }
  /// Width of the partition box.
  int cols() const { return n_ - k_; }
  int dim() const { return k_ * (n_ - k_); }

  friend bool operator==(const GrassmannianContext&, const GrassmannianContext&) = default;

  std::string str() const {
    return "Gr(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
  }

 private:
  int k_;
  int n_;
};

/// Weakly decreasing sequence of positive parts; trailing zeros are dropped so
/// that (2,0) and (2) compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw Error("partition parts must be non-negative");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  bool fits(const GrassmannianContext& ctx) const {
    return length() <= ctx.k() && (parts_.empty() || parts_.front() <= ctx.cols());
  }

  /// (m, m, ..., m) with k rows: the class of a point.
  static Partition full_box(const GrassmannianContext& ctx) {
    return Partition(std::vector<int>(ctx.k(), ctx.cols()));
  }
  /// (1, 1, ..., 1) with p rows.
  static Partition column(int p) { return Partition(std::vector<int>(p, 1)); }
  static Partition row(int p) { return p == 0 ? Partition() : Partition({p}); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

/// Homogeneous integer combination of Schubert classes. Out-of-box terms are
/// identically zero and never stored; zero coefficients are erased.
class SchubertCycle {
 public:
  using Terms = std::map<Partition, Integer>;

  SchubertCycle(GrassmannianContext ctx, int codim) : ctx_(ctx), codim_(codim) {
    if (codim < 0) throw Error("cycle codimension must be non-negative");
  }

  static SchubertCycle basis(const GrassmannianContext& ctx, const Partition& p,
                             const Integer& coefficient = 1) {
    SchubertCycle c(ctx, p.weight());
    c.add(p, coefficient);
    return c;
  }
  static SchubertCycle unit(const GrassmannianContext& ctx) { return basis(ctx, Partition()); }
  /// sigma_p, the p-th special class.
  static SchubertCycle special(const GrassmannianContext& ctx, int p) {
    return basis(ctx, Partition::row(p));
  }

  const GrassmannianContext& context() const { return ctx_; }
  int codim() const { return codim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const Partition& p, const Integer& coefficient) {
    if (p.weight() != codim_)
      throw Error("partition " + p.str() + " has weight " + std::to_string(p.weight()) +
                  ", cycle has codimension " + std::to_string(codim_));
    if (!p.fits(ctx_) || coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SchubertCycle& operator+=(const SchubertCycle& other) {
    require_compatible(other);
    for (const auto& [p, c] : other.terms_) add(p, c);
    return *this;
  }
  SchubertCycle& operator-=(const SchubertCycle& other) {
    require_compatible(other);
    for (const auto& [p, c] : other.terms_) add(p, -c);
    return *this;
  }
  SchubertCycle& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }

  friend SchubertCycle operator+(SchubertCycle a, const SchubertCycle& b) { return a += b; }
  friend SchubertCycle operator-(SchubertCycle a, const SchubertCycle& b) { return a -= b; }
  friend SchubertCycle operator-(SchubertCycle a) { return a *= -1; }
  friend SchubertCycle operator*(const Integer& s, SchubertCycle a) { return a *= s; }
  friend SchubertCycle operator*(SchubertCycle a, const Integer& s) { return a *= s; }

  /// Zero cycles compare equal whatever their nominal codimension.
  friend bool operator==(const SchubertCycle& a, const SchubertCycle& b) {
    if (a.ctx_ != b.ctx_) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.codim_ == b.codim_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "11*s(2)+12*s(1,1)".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Larger partitions first reads more naturally: s(2) before s(1,1).
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [p, c] = *it;
      if (!first) os << (c < 0 ? "-" : "+");
      else if (c < 0) os << "-";
      first = false;
      const Integer mag = c < 0 ? Integer(-c) : c;
      if (mag != 1) os << mag << "*";
      os << "s" << p.str();
    }
    return os.str();
  }

 private:
  void require_compatible(const SchubertCycle& other) {
    if (ctx_ != other.ctx_) throw Error("context mismatch: " + ctx_.str() + " vs " + other.ctx_.str());
    if (other.is_zero()) return;
    if (is_zero()) {
      codim_ = other.codim_;
      return;
    }
    if (codim_ != other.codim_)
      throw Error("cycles are homogeneous: cannot combine codimension " + std::to_string(codim_) +
                  " with " + std::to_string(other.codim_));
  }

  GrassmannianContext ctx_;
  int codim_;
  Terms terms_;
};

enum class Strip { horizontal, vertical };

inline Integer grass_dim(long k, long n) {
  if (k < 1 || n <= k) throw Error("grass_dim requires n > k >= 1");
  return Integer(k) * (n - k);
}

/// Number of Schubert cells, i.e. the topological Euler number of Gr(k,n).
inline Integer euler_grassmannian(long k, long n) {
  if (k < 1 || n <= k) throw Error("euler_grassmannian requires n > k >= 1");
  return binomial(n, k);
}

namespace detail {

template <typename Emit>
void grow_strip(const GrassmannianContext& ctx, Strip strip, const std::vector<int>& mu, int row,
                int remaining, std::vector<int>& lambda, Emit& emit) {
  if (row == ctx.k()) {
    if (remaining == 0) emit(Partition(lambda));
    return;
  }
  const int lo = mu[row];
  int hi;
  if (strip == Strip::horizontal) {
    hi = row == 0 ? ctx.cols() : mu[row - 1];
  } else {
    hi = std::min(lo + 1, row == 0 ? ctx.cols() : lambda[row - 1]);
  }
  hi = std::min(hi, lo + remaining);
  for (int v = lo; v <= hi; ++v) {
    lambda[row] = v;
    grow_strip(ctx, strip, mu, row + 1, remaining - (v - lo), lambda, emit);
  }
}

}  // namespace detail

/// Calls emit(lambda) for every lambda inside the box of ctx such that
/// lambda/mu is a horizontal (or vertical) strip of size p.
template <typename Emit>
void for_each_strip(const GrassmannianContext& ctx, Strip strip, const Partition& mu, int p, Emit emit) {
  if (p < 0 || !mu.fits(ctx)) return;
  std::vector<int> padded(ctx.k());
  for (int i = 0; i < ctx.k(); ++i) padded[i] = mu[i];
  std::vector<int> lambda(ctx.k());
  detail::grow_strip(ctx, strip, padded, 0, p, lambda, emit);
}

/// Multiplication by sigma_p (horizontal) or sigma_{1^p} (vertical).
inline SchubertCycle pieri_multiply(const GrassmannianContext& ctx, int p, Strip strip,
                                    const SchubertCycle& cycle) {
  if (cycle.context() != ctx) throw Error("context mismatch in pieri_multiply");
  if (p < 0) throw Error("pieri_multiply requires p >= 0");
  SchubertCycle out(ctx, cycle.codim() + p);
  for (const auto& [mu, c] : cycle.terms())
    for_each_strip(ctx, strip, mu, p, [&](const Partition& lambda) { out.add(lambda, c); });
  return out;
}

namespace detail {

inline int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

/// sigma_lambda * b via det(sigma_{lambda_i + j - i}).
inline SchubertCycle giambelli_apply(const Partition& lambda, const SchubertCycle& b) {
  const auto& ctx = b.context();
  const int len = lambda.length();
  SchubertCycle out(ctx, b.codim() + lambda.weight());
  std::vector<int> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool vanishes = false;
    std::vector<int> specials(len);
    for (int i = 0; i < len; ++i) {
      specials[i] = lambda[i] + perm[i] - i;
      if (specials[i] < 0 || specials[i] > ctx.cols()) vanishes = true;
    }
    if (vanishes) continue;
    SchubertCycle term = b;
    for (int p : specials) {
      if (p == 0) continue;
      term = pieri_multiply(ctx, p, Strip::horizontal, term);
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    if (permutation_sign(perm) < 0) out -= term;
    else out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace detail

inline SchubertCycle multiply(const GrassmannianContext& ctx, const SchubertCycle& a, const SchubertCycle& b) {
  if (a.context() != ctx || b.context() != ctx) throw Error("context mismatch in multiply");
  SchubertCycle out(ctx, a.codim() + b.codim());
  if (a.codim() + b.codim() > ctx.dim()) return out;
  for (const auto& [lambda, c] : a.terms()) out += c * detail::giambelli_apply(lambda, b);
  return out;
}

inline SchubertCycle operator*(const SchubertCycle& a, const SchubertCycle& b) {
  return multiply(a.context(), a, b);
}

inline SchubertCycle power(const SchubertCycle& a, int exponent) {
  if (exponent < 0) throw Error("negative power of a cycle");
  SchubertCycle out = SchubertCycle::unit(a.context());
  for (int i = 0; i < exponent; ++i) {
    out = out * a;
    if (out.is_zero()) return SchubertCycle(a.context(), a.codim() * exponent);
  }
  return out;
}

/// Degree: the coefficient of the point class for top-codimension cycles.
inline Integer integrate(const SchubertCycle& cycle) {
  const auto& ctx = cycle.context();
  if (cycle.codim() != ctx.dim()) return 0;
  return cycle.coefficient(Partition::full_box(ctx));
}

/// Every partition of the given weight inside the box, in increasing order.
inline std::vector<Partition> partitions_in_box(const GrassmannianContext& ctx, int weight) {
  std::vector<Partition> out;
  std::vector<int> parts(ctx.k());
  auto rec = [&](auto&& self, int row, int remaining, int cap) -> void {
    if (row == ctx.k()) {
      if (remaining == 0) out.emplace_back(parts);
      return;
    }
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      parts[row] = v;
      self(self, row + 1, remaining - v, v);
    }
  };
  if (weight >= 0) rec(rec, 0, weight, ctx.cols());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fano
