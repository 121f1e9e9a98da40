#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Raised for every contract violation in the library (bad context, parity,
/// inconsistent data). The message names the violated condition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer ipow(const Integer& base, unsigned exponent) {
  Integer r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

/// Narrowing with a range check; used where an exact integer drives a loop
/// bound or a container size.
inline long to_long(const Integer& x, const char* what) {
  if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min())
    throw Error(std::string(what) + " is out of range");
  return x.convert_to<long>();
}

inline std::string to_string(const Integer& x) { return x.str(); }

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free (Bareiss) elimination; exact for any square integer matrix.
inline Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace fano
