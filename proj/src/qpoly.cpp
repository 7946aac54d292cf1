#include "heckepos/qpoly.hpp"

#include <algorithm>
#include <limits>

#include "heckepos/errors.hpp"

namespace heckepos {

QPoly::QPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::constant(const Coeff& c) { return QPoly(std::vector<Coeff>{c}); }

QPoly QPoly::monomial(const Coeff& c, std::size_t power) {
  std::vector<Coeff> coeffs(power + 1);
  coeffs[power] = c;
  return QPoly(std::move(coeffs));
}

QPoly QPoly::from_int64(std::span<const std::int64_t> coeffs) {
  std::vector<Coeff> out;
  out.reserve(coeffs.size());
  for (std::int64_t c : coeffs) {
    // mpz_class has no int64 constructor on every platform; go through long.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    out.emplace_back(static_cast<long>(c));
  }
  return QPoly(std::move(out));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> QPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

QPoly::Coeff QPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
}

QPoly::Coeff QPoly::eval(const Coeff& x) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Coeff> out(k + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return QPoly(std::move(out));
}

QPoly QPoly::unshifted(std::size_t k) const {
  for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i) {
    if (coeffs_[i] != 0) throw IntegrityError("unshift: polynomial not divisible by q^" + std::to_string(k));
  }
  if (k >= coeffs_.size()) return {};
  return QPoly(std::vector<Coeff>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPoly::Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Coeff& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    Coeff magnitude = abs(c);
    if (k == 0 || magnitude != 1) out += magnitude.get_str();
    if (k >= 1) out += 'q';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::optional<std::vector<std::int64_t>> QPoly::to_int64() const {
  std::vector<std::int64_t> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (!c.fits_slong_p()) return std::nullopt;
    out.push_back(c.get_si());
  }
  return out;
}

std::pair<QPoly, QPoly> divmod_monic(const QPoly& a, const QPoly& monic_divisor) {
  const auto dd = monic_divisor.degree();
  if (!dd || monic_divisor.coefficient(static_cast<std::size_t>(*dd)) != 1) {
    throw IntegrityError("divmod_monic: divisor is not monic");
  }
  std::vector<QPoly::Coeff> rem(a.coeffs().begin(), a.coeffs().end());
  const auto d = static_cast<std::size_t>(*dd);
  if (rem.size() <= d) return {QPoly{}, a};
  std::vector<QPoly::Coeff> quot(rem.size() - d);
  const auto div = monic_divisor.coeffs();
  for (std::size_t k = rem.size(); k-- > d;) {
    const QPoly::Coeff lead = rem[k];
    if (lead == 0) continue;
    quot[k - d] = lead;
    for (std::size_t j = 0; j <= d; ++j) rem[k - d + j] -= lead * div[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

bool is_nonneg(const QPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const auto& c) { return c >= 0; });
}

bool palindrome_signature(const QPoly& p, int n) {
  if (n < 0) return p.is_zero();
  if (auto d = p.degree(); d && *d > n) return false;
  const bool odd = (n % 2) != 0;
  for (int i = 0; i <= n; ++i) {
    const auto lhs = p.coefficient(static_cast<std::size_t>(i));
    const auto mirror = p.coefficient(static_cast<std::size_t>(n - i));
    if (lhs != (odd ? QPoly::Coeff(-mirror) : mirror)) return false;
  }
  return true;
}

}  // namespace heckepos
