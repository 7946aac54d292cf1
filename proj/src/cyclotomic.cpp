#include "heckepos/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "heckepos/errors.hpp"

namespace heckepos {

namespace {

constexpr std::string_view kPhi = "Φ";

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// std::map nodes are stable, so references handed out stay valid.
std::map<unsigned, QPoly>& cache() {
  static std::map<unsigned, QPoly> c;
  return c;
}

QPoly compute_cyclotomic(unsigned k) {
  // q^k - 1 divided by every Phi_d with d | k, d < k.
  QPoly p = QPoly::monomial(1, k) - QPoly{1};
  for (unsigned d : divisors(k)) {
    if (d == k) break;
    auto [quot, rem] = divmod_monic(p, cyclotomic(d));
    if (!rem.is_zero()) throw IntegrityError("cyclotomic: inexact division");
    p = std::move(quot);
  }
  return p;
}

}  // namespace

const QPoly& cyclotomic(unsigned k) {
  if (k == 0) throw ConfigurationError("cyclotomic index must be positive");
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache().find(k); it != cache().end()) return it->second;
  }
  // Recursion into smaller indices happens outside the lock.
  QPoly p = compute_cyclotomic(k);
  std::lock_guard lock(cache_mutex());
  return cache().try_emplace(k, std::move(p)).first->second;
}

unsigned euler_phi(unsigned k) {
  unsigned result = k;
  unsigned n = k;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned> divisors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

CyclotomicLabel factor_cyclotomic(const QPoly& p, unsigned m) {
  if (m == 0) throw ConfigurationError("factor_cyclotomic: order bound must be positive");
  auto candidates = divisors(m);
  std::sort(candidates.begin(), candidates.end(), [](unsigned a, unsigned b) {
    const unsigned da = euler_phi(a), db = euler_phi(b);
    return da != db ? da > db : a > b;
  });

  CyclotomicLabel label;
  QPoly residual = p;
  for (unsigned k : candidates) {
    const QPoly& phi = cyclotomic(k);
    for (;;) {
      if (residual.degree().value_or(-1) < phi.degree().value_or(0)) break;
      auto [quot, rem] = divmod_monic(residual, phi);
      if (!rem.is_zero()) break;
      residual = std::move(quot);
      label.push_back(k);
    }
  }
  if (residual != QPoly{1}) {
    throw NotCyclotomicProduct("not a product of cyclotomic polynomials with index dividing " +
                               std::to_string(m) + ": " + p.to_string());
  }
  std::sort(label.begin(), label.end(), std::greater<>());
  return label;
}

QPoly label_product(const CyclotomicLabel& label) {
  QPoly out{1};
  for (unsigned k : label) out *= cyclotomic(k);
  return out;
}

unsigned label_degree(const CyclotomicLabel& label) {
  unsigned d = 0;
  for (unsigned k : label) d += euler_phi(k);
  return d;
}

std::string render_label(const CyclotomicLabel& label) {
  if (label.empty()) return "1";
  CyclotomicLabel sorted = label;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::string out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out += kPhi;
    out += std::to_string(sorted[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

CyclotomicLabel parse_label(std::string_view text) {
  CyclotomicLabel label;
  if (text == "1") return label;
  auto read_number = [&](std::size_t& pos) {
    const std::size_t start = pos;
    unsigned value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + static_cast<unsigned>(text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw UsageError("malformed cyclotomic label: " + std::string(text));
    return value;
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text.substr(pos, kPhi.size()) != kPhi) {
      throw UsageError("malformed cyclotomic label: " + std::string(text));
    }
    pos += kPhi.size();
    const unsigned k = read_number(pos);
    unsigned exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = read_number(pos);
    }
    if (k == 0) throw UsageError("cyclotomic index must be positive");
    label.insert(label.end(), exponent, k);
  }
  if (label.empty()) throw UsageError("empty cyclotomic label");
  std::sort(label.begin(), label.end(), std::greater<>());
  return label;
}

}  // namespace heckepos
