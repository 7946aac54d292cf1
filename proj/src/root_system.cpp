#include "heckepos/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>

#include "heckepos/errors.hpp"

namespace heckepos {

// ---------------------------------------------------------------------------
// CoxeterType

CoxeterType CoxeterType::parse(std::string_view text) {
  if (text.size() < 2) throw ConfigurationError("malformed Coxeter type: '" + std::string(text) + "'");
  CoxeterType t;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::B; break;  // same Weyl group
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw ConfigurationError("unknown Coxeter family in '" + std::string(text) + "'");
  }
  unsigned rank = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9' || rank > 1000) {
      throw ConfigurationError("malformed Coxeter type: '" + std::string(text) + "'");
    }
    rank = rank * 10 + static_cast<unsigned>(c - '0');
  }
  t.rank = rank;
  t.validate();
  return t;
}

std::string CoxeterType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

void CoxeterType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw ConfigurationError("unsupported rank for type " + name());
}

std::uint64_t expected_group_order(const CoxeterType& ctype) {
  ctype.validate();
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto factorial = [](unsigned n) {
    std::uint64_t f = 1;
    for (unsigned k = 2; k <= n; ++k) f = f > kMax / k ? kMax : f * k;
    return f;
  };
  auto times_pow2 = [](std::uint64_t v, unsigned e) {
    for (unsigned k = 0; k < e; ++k) v = v > kMax / 2 ? kMax : v * 2;
    return v;
  };
  switch (ctype.family) {
    case Family::A: return factorial(ctype.rank + 1);
    case Family::B: return times_pow2(factorial(ctype.rank), ctype.rank);
    case Family::D: return times_pow2(factorial(ctype.rank), ctype.rank - 1);
    case Family::E: return ctype.rank == 6 ? 51840 : ctype.rank == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::vector<unsigned> GenSet::indices() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  const std::size_t nu = images_.size();
  length_ = static_cast<unsigned>(std::count_if(images_.begin(), images_.end(), [nu](std::uint8_t k) { return k >= nu; }));
}

std::size_t GroupElement::image(std::size_t root) const {
  const std::size_t nu = images_.size();
  if (root < nu) return images_[root];
  const std::size_t k = images_[root - nu];
  return k < nu ? k + nu : k - nu;
}

// ---------------------------------------------------------------------------
// RootDatum

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix cartan_matrix(const CoxeterType& t) {
  const unsigned n = t.rank;
  Matrix c(n, std::vector<int>(n, 0));
  for (unsigned i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](unsigned i, unsigned j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (unsigned i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // alpha_{n-1} is the short root
      for (unsigned i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (unsigned i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4
      bond(0, 2);
      bond(1, 3);
      for (unsigned i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      c[2][1] = -2;  // alpha_1 long, alpha_2 short
      break;
    case Family::G:
      // alpha_0 short, alpha_1 long
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

std::vector<int> reflect(const Matrix& cartan, unsigned i, const std::vector<int>& beta) {
  int pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing += cartan[i][j] * beta[j];
  std::vector<int> out = beta;
  out[i] -= pairing;
  return out;
}

}  // namespace

RootDatum RootDatum::build(CoxeterType ctype) {
  ctype.validate();
  if (ctype.rank > 8) {
    throw ConfigurationError("rank " + std::to_string(ctype.rank) + " exceeds the supported maximum of 8");
  }
  RootDatum d;
  d.ctype_ = ctype;
  d.cartan_ = cartan_matrix(ctype);
  const unsigned n = ctype.rank;

  // Reflection closure of the simple roots.
  std::map<std::vector<int>, bool> seen;
  std::vector<std::vector<int>> frontier;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, true);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (unsigned i = 0; i < n; ++i) {
        auto gamma = reflect(d.cartan_, i, beta);
        if (seen.emplace(gamma, true).second) next.push_back(std::move(gamma));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> positive;
  for (const auto& [coords, unused] : seen) {
    if (std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; })) positive.push_back(coords);
  }
  if (2 * positive.size() != seen.size()) throw IntegrityError("root closure is not symmetric under negation");
  if (2 * positive.size() > 255) throw ConfigurationError("root system too large for the element encoding");
  // Height, then reverse lexicographic, so simple root i lands at index i.
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a > b;
  });
  d.nu_ = static_cast<unsigned>(positive.size());
  d.roots_ = positive;
  for (const auto& beta : positive) {
    std::vector<int> neg(beta.size());
    std::transform(beta.begin(), beta.end(), neg.begin(), [](int c) { return -c; });
    d.roots_.push_back(std::move(neg));
  }
  if (d.nu_ * 2 % n != 0) throw IntegrityError("2 nu not divisible by rank");

  std::map<std::vector<int>, std::uint8_t> index;
  for (std::size_t k = 0; k < d.roots_.size(); ++k) index.emplace(d.roots_[k], static_cast<std::uint8_t>(k));
  d.reflection_tables_.assign(n, std::vector<std::uint8_t>(d.roots_.size()));
  for (unsigned i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d.roots_.size(); ++k) {
      d.reflection_tables_[i][k] = index.at(reflect(d.cartan_, i, d.roots_[k]));
    }
  }
  return d;
}

GroupElement RootDatum::identity() const {
  std::vector<std::uint8_t> images(nu_);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return GroupElement(std::move(images));
}

GroupElement RootDatum::element_from_images(std::span<const std::uint8_t> positive_images) const {
  if (positive_images.size() != nu_) throw UsageError("element encoding has the wrong number of root images");
  for (std::uint8_t k : positive_images) {
    if (k >= 2 * nu_) throw UsageError("root image out of range");
  }
  return GroupElement(std::vector<std::uint8_t>(positive_images.begin(), positive_images.end()));
}

GroupElement RootDatum::simple_reflection(unsigned i) const {
  if (i >= rank()) throw UsageError("simple index out of range: " + std::to_string(i + 1));
  return GroupElement(std::vector<std::uint8_t>(reflection_tables_[i].begin(), reflection_tables_[i].begin() + nu_));
}

GroupElement RootDatum::from_word(std::span<const unsigned> word) const {
  GroupElement x = identity();
  for (unsigned i : word) x = right_multiply(x, i);
  return x;
}

GroupElement RootDatum::multiply(const GroupElement& x, const GroupElement& y) const {
  std::vector<std::uint8_t> images(nu_);
  for (unsigned j = 0; j < nu_; ++j) images[j] = static_cast<std::uint8_t>(x.image(y.images_[j]));
  return GroupElement(std::move(images));
}

GroupElement RootDatum::inverse(const GroupElement& x) const {
  std::vector<std::uint8_t> images(nu_);
  for (unsigned j = 0; j < nu_; ++j) {
    const std::size_t t = x.images_[j];
    if (t < nu_) {
      images[t] = static_cast<std::uint8_t>(j);
    } else {
      images[t - nu_] = static_cast<std::uint8_t>(j + nu_);
    }
  }
  return GroupElement(std::move(images));
}

GroupElement RootDatum::left_multiply(unsigned i, const GroupElement& x) const {
  if (i >= rank()) throw UsageError("simple index out of range: " + std::to_string(i + 1));
  const auto& table = reflection_tables_[i];
  std::vector<std::uint8_t> images(nu_);
  for (unsigned j = 0; j < nu_; ++j) images[j] = table[x.images_[j]];
  return GroupElement(std::move(images));
}

GroupElement RootDatum::right_multiply(const GroupElement& x, unsigned i) const {
  if (i >= rank()) throw UsageError("simple index out of range: " + std::to_string(i + 1));
  const auto& table = reflection_tables_[i];
  std::vector<std::uint8_t> images(nu_);
  for (unsigned j = 0; j < nu_; ++j) images[j] = static_cast<std::uint8_t>(x.image(table[j]));
  return GroupElement(std::move(images));
}

GroupElement RootDatum::longest_element() const {
  GroupElement x = identity();
  for (bool grew = true; grew;) {
    grew = false;
    const GenSet left = left_descents(x);
    for (unsigned i = 0; i < rank(); ++i) {
      if (!left.contains(i)) {
        x = left_multiply(i, x);
        grew = true;
        break;
      }
    }
  }
  return x;
}

GenSet RootDatum::left_descents(const GroupElement& x) const {
  // s_i x < x  iff  x^{-1}(alpha_i) < 0  iff  some positive root maps to -alpha_i.
  GenSet out;
  for (unsigned j = 0; j < nu_; ++j) {
    const std::size_t t = x.images_[j];
    if (t >= nu_ && t - nu_ < rank()) out.insert(static_cast<unsigned>(t - nu_));
  }
  return out;
}

GenSet RootDatum::right_descents(const GroupElement& x) const {
  GenSet out;
  for (unsigned i = 0; i < rank(); ++i) {
    if (x.images_[i] >= nu_) out.insert(i);
  }
  return out;
}

std::vector<unsigned> RootDatum::reduced_word(const GroupElement& x) const {
  std::vector<unsigned> word;
  word.reserve(x.length());
  GroupElement rest = x;
  while (rest.length() > 0) {
    const unsigned i = left_descents(rest).indices().front();
    word.push_back(i);
    rest = left_multiply(i, rest);
  }
  return word;
}

GenSet RootDatum::support(const GroupElement& x) const {
  GenSet out;
  for (unsigned i : reduced_word(x)) out.insert(i);
  return out;
}

std::vector<std::vector<long>> RootDatum::matrix(const GroupElement& x) const {
  const unsigned n = rank();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (unsigned j = 0; j < n; ++j) {
    const auto& col = roots_[x.images_[j]];
    for (unsigned i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

std::uint64_t RootDatum::key(const GroupElement& x) const { return key_of_images(x.positive_images().first(rank())); }

std::uint64_t RootDatum::key_of_images(std::span<const std::uint8_t> simple_images) const {
  std::uint64_t key = 0;
  for (std::uint8_t k : simple_images) key = (key << 8) | k;
  return key;
}

}  // namespace heckepos
