#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace heckepos {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely: coeffs()[i] is the coefficient of q^i. The highest stored
/// coefficient is never zero, so the zero polynomial has no coefficients.
class QPoly {
 public:
  using Coeff = mpz_class;

  QPoly() = default;
  explicit QPoly(std::vector<Coeff> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const Coeff& c);
  /// c * q^power
  static QPoly monomial(const Coeff& c, std::size_t power);
  static QPoly from_int64(std::span<const std::int64_t> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<int> degree() const;
  Coeff coefficient(std::size_t i) const;
  std::span<const Coeff> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Coeff eval(const Coeff& x) const;
  /// this * q^k
  QPoly shifted(std::size_t k) const;
  /// this / q^k; the k lowest coefficients must vanish.
  QPoly unshifted(std::size_t k) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  QPoly operator-() const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Descending powers, e.g. "q^4+4q^2+1", "q-1", "0".
  std::string to_string() const;

  /// Coefficients as int64 when they all fit.
  std::optional<std::vector<std::int64_t>> to_int64() const;

 private:
  void trim();

  std::vector<Coeff> coeffs_;
};

/// Quotient and remainder of a by a monic divisor.
std::pair<QPoly, QPoly> divmod_monic(const QPoly& a, const QPoly& monic_divisor);

/// True iff every coefficient is >= 0.
bool is_nonneg(const QPoly& p);

/// True iff f_i == (-1)^n f_{n-i} for 0 <= i <= n. Requires n >= degree(p).
bool palindrome_signature(const QPoly& p, int n);

}  // namespace heckepos
