#include "heckepos/classes.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>
#include <unordered_set>

#include "heckepos/errors.hpp"
#include "heckepos/hecke.hpp"

namespace heckepos {

namespace {

constexpr std::uint64_t kDefaultDescentThreshold = 1'000'000;

std::string describe(const WeylGroup& g, ElementId x) {
  std::string out;
  for (unsigned i : g.reduced_word(x)) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out.empty() ? "e" : out;
}

}  // namespace

std::optional<std::size_t> ClassTable::regular_class(unsigned d) const {
  for (std::size_t k = 0; k < records_.size(); ++k) {
    if (records_[k].regular_d == d) return k;
  }
  return std::nullopt;
}

std::vector<ElementId> min_length_elements(const WeylGroup& group, const std::vector<ElementId>& members) {
  unsigned best = ~0u;
  for (ElementId x : members) best = std::min(best, group.length(x));
  std::vector<ElementId> out;
  for (ElementId x : members) {
    if (group.length(x) == best) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> min_length_by_descent(const WeylGroup& group, ElementId x) {
  ElementId current = x;
  for (;;) {
    // Explore the length-preserving conjugates of `current`; jump down as soon
    // as some conjugation shortens.
    std::unordered_set<ElementId> seen{current};
    std::deque<ElementId> queue{current};
    std::optional<ElementId> lower;
    while (!queue.empty() && !lower) {
      const ElementId y = queue.front();
      queue.pop_front();
      for (unsigned i = 0; i < group.rank(); ++i) {
        const ElementId z = group.conjugate_by_generator(i, y);
        if (group.length(z) < group.length(y)) {
          lower = z;
          break;
        }
        if (group.length(z) == group.length(y) && seen.insert(z).second) queue.push_back(z);
      }
    }
    if (lower) {
      current = *lower;
      continue;
    }
    std::vector<ElementId> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    for (ElementId y : out) {
      for (unsigned i = 0; i < group.rank(); ++i) {
        if (group.length(group.conjugate_by_generator(i, y)) < group.length(y)) {
          throw IntegrityError("descent search stopped above the minimal length");
        }
      }
    }
    return out;
  }
}

QPoly char_poly_of_matrix(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  // coeffs[k] is the coefficient of q^k; c_n = 1.
  std::vector<long> coeffs(n + 1, 0);
  coeffs[n] = 1;
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<long>> next(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += coeffs[n - k + 1];
    }
    m = std::move(next);
    long trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    if (trace % static_cast<long>(k) != 0) throw IntegrityError("Faddeev-LeVerrier: inexact division");
    coeffs[n - k] = -trace / static_cast<long>(k);
  }
  return QPoly(std::vector<QPoly::Coeff>(coeffs.begin(), coeffs.end()));
}

QPoly char_poly(const RootDatum& datum, const GroupElement& x) { return char_poly_of_matrix(datum.matrix(x)); }

bool is_elliptic(const RootDatum& datum, const GroupElement& x) { return char_poly(datum, x).eval(1) != 0; }

unsigned element_order(const RootDatum& datum, const GroupElement& x) {
  const GroupElement one = datum.identity();
  GroupElement y = x;
  unsigned k = 1;
  while (!(y == one)) {
    y = datum.multiply(y, x);
    ++k;
  }
  return k;
}

unsigned element_order(const WeylGroup& group, ElementId x) {
  const auto word = group.reduced_word(x);
  ElementId y = x;
  unsigned k = 1;
  while (y != WeylGroup::identity()) {
    for (unsigned i : word) y = group.right_mul(y, i);
    ++k;
  }
  return k;
}

ElementId element_power(const WeylGroup& group, ElementId x, unsigned k) {
  const auto word = group.reduced_word(x);
  ElementId y = WeylGroup::identity();
  for (unsigned e = 0; e < k; ++e) {
    for (unsigned i : word) y = group.right_mul(y, i);
  }
  return y;
}

std::set<unsigned> regular_d_set(const CoxeterType& ctype) {
  ctype.validate();
  const unsigned n = ctype.rank;
  std::set<unsigned> out;
  auto even_up_to = [&](unsigned bound, auto&& keep) {
    for (unsigned d = 2; d <= bound; d += 2) {
      if (keep(d)) out.insert(d);
    }
  };
  auto odd_quotient = [](unsigned num, unsigned d) { return num % d == 0 && (num / d) % 2 == 1; };
  switch (ctype.family) {
    case Family::A:
      out.insert(n + 1);
      break;
    case Family::B:
      even_up_to(2 * n, [&](unsigned d) { return (2 * n) % d == 0; });
      break;
    case Family::D:
      if (n % 2 == 0) {
        // An even number of equal negative cycles; 2n/d merely integral would admit d = 2n.
        even_up_to(2 * n, [&](unsigned d) { return odd_quotient(2 * n - 2, d) || ((2 * n) % d == 0 && (2 * n / d) % 2 == 0); });
      } else {
        even_up_to(2 * n, [&](unsigned d) { return odd_quotient(2 * n - 2, d); });
      }
      break;
    case Family::E:
      if (n == 6) out = {3, 6, 9, 12};
      if (n == 7) out = {2, 6, 14, 18};
      if (n == 8) out = {2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30};
      break;
    case Family::F:
      out = {2, 3, 4, 6, 8, 12};
      break;
    case Family::G:
      out = {2, 3, 6};
      break;
  }
  return out;
}

std::set<unsigned> regular_d_set_loose(const CoxeterType& ctype) {
  std::set<unsigned> out = regular_d_set(ctype);
  if (ctype.family == Family::D && ctype.rank % 2 == 0) {
    for (unsigned d = 2; d <= 2 * ctype.rank; d += 2) {
      if ((2 * ctype.rank) % d == 0) out.insert(d);
    }
  }
  return out;
}

ClassTable conjugacy_classes(const WeylGroup& group, const ClassOptions& options) {
  const std::size_t n = group.size();
  const RootDatum& datum = group.datum();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  // Orbits under x -> s_i x s_i, seeded in id order.
  std::vector<std::uint32_t> raw_class(n, kUnset);
  std::vector<std::vector<ElementId>> orbits;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (raw_class[seed] != kUnset) continue;
    const auto label = static_cast<std::uint32_t>(orbits.size());
    std::vector<ElementId> orbit{static_cast<ElementId>(seed)};
    raw_class[seed] = label;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (unsigned i = 0; i < group.rank(); ++i) {
        const ElementId y = group.conjugate_by_generator(i, orbit[head]);
        if (raw_class[y] == kUnset) {
          raw_class[y] = label;
          orbit.push_back(y);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }

  const std::uint64_t threshold = options.descent_threshold ? options.descent_threshold : kDefaultDescentThreshold;
  std::vector<ClassRecord> records(orbits.size());
  std::vector<std::vector<ElementId>> mins(orbits.size());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    ClassRecord& r = records[k];
    auto& orbit = orbits[k];
    std::sort(orbit.begin(), orbit.end());
    r.size = orbit.size();
    if (n % r.size != 0) throw IntegrityError("class size does not divide the group order");
    r.centralizer_order = n / r.size;
    const bool descend = options.mode == MinLengthMode::descent || r.size > threshold;
    mins[k] = descend ? min_length_by_descent(group, orbit.front()) : min_length_elements(group, orbit);
    r.representative = mins[k].front();
    r.min_length = group.length(r.representative);
    r.min_count = mins[k].size();
    const GroupElement rep = group.element(r.representative);
    r.char_poly = char_poly(datum, rep);
    r.order = element_order(group, r.representative);
    r.label = factor_cyclotomic(r.char_poly, r.order);
    r.elliptic = std::find(r.label.begin(), r.label.end(), 1u) == r.label.end();
  }

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> label_text(records.size());
  for (std::size_t k = 0; k < records.size(); ++k) label_text[k] = render_label(records[k].label);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(records[a].min_length, records[a].size, label_text[a], records[a].representative) <
           std::tie(records[b].min_length, records[b].size, label_text[b], records[b].representative);
  });

  ClassTable table;
  std::vector<std::uint32_t> position(records.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    position[order[k]] = static_cast<std::uint32_t>(k);
    table.records_.push_back(std::move(records[order[k]]));
    table.members_.push_back(std::move(orbits[order[k]]));
    table.min_elements_.push_back(std::move(mins[order[k]]));
  }
  table.class_of_.resize(n);
  for (std::size_t x = 0; x < n; ++x) table.class_of_[x] = position[raw_class[x]];

  identify_regular_classes(group, table);
  return table;
}

void identify_regular_classes(const WeylGroup& group, ClassTable& table) {
  const unsigned nu = group.datum().nu();
  for (auto& r : table.records_) r.regular_d.reset();
  for (unsigned d : regular_d_set(group.datum().type())) {
    if ((2 * nu) % d != 0) throw IntegrityError("regular degree does not divide 2 nu");
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < table.records_.size(); ++k) {
      const ClassRecord& r = table.records_[k];
      if (r.elliptic && r.order == d && r.min_length * d == 2 * nu) candidates.push_back(k);
    }
    if (candidates.size() != 1) {
      throw IntegrityError("found " + std::to_string(candidates.size()) + " candidate classes for the regular degree " +
                           std::to_string(d) + " in " + group.datum().type().name() + ", expected exactly one");
    }
    table.records_[candidates.front()].regular_d = d;
  }
}

PowerIdentityReport power_identity_checks(std::shared_ptr<const WeylGroup> group, const ClassTable& table,
                                          std::size_t hecke_limit) {
  const WeylGroup& g = *group;
  const unsigned nu = g.datum().nu();
  const unsigned h = g.datum().coxeter_number();
  const ElementId w0 = g.longest();
  const auto degrees = regular_d_set(g.datum().type());
  PowerIdentityReport report;
  auto fail = [&](const std::string& what) { throw IntegrityError("power identity failed: " + what); };

  auto class_for = [&](unsigned d) {
    auto k = table.regular_class(d);
    if (!k) fail("no class marked regular for d=" + std::to_string(d));
    return *k;
  };

  if (degrees.count(2)) {
    for (unsigned d : degrees) {
      if (d % 2 != 0) continue;
      for (ElementId w : table.min_elements(class_for(d))) {
        if (element_power(g, w, d / 2) != w0) fail("w^{d/2} != w0 for d=" + std::to_string(d) + ", w=" + describe(g, w));
        if ((d / 2) * g.length(w) != nu) fail("(d/2)|w| != nu for d=" + std::to_string(d));
      }
      report.checks.push_back("d=" + std::to_string(d) + ": w^" + std::to_string(d / 2) + " = w0 and " +
                              std::to_string(d / 2) + "|w| = " + std::to_string(nu) + " on all of C_min");
    }
  }

  const std::size_t coxeter_class = class_for(h);
  for (unsigned d : degrees) {
    if (h % d != 0) continue;
    const std::size_t target = class_for(d);
    for (ElementId y : table.min_elements(coxeter_class)) {
      const ElementId p = element_power(g, y, h / d);
      if (table.class_of(p) != target || g.length(p) != table[target].min_length) {
        fail("y^{h/d} not in C^d_min for d=" + std::to_string(d) + ", y=" + describe(g, y));
      }
      if ((h / d) * g.length(y) != g.length(p)) fail("(h/d)|y| != |y^{h/d}| for d=" + std::to_string(d));
    }
    report.checks.push_back("d=" + std::to_string(d) + ": y^" + std::to_string(h / d) + " lies in C^" +
                            std::to_string(d) + "_min with additive length for all y in C^h_min");
  }

  if (g.size() <= hecke_limit) {
    const HeckeElt t_w0_squared = power_basis(group, w0, 2);
    for (ElementId w : table.min_elements(coxeter_class)) {
      if (power_basis(group, w, h) != t_w0_squared) fail("T_w^h != T_{w0}^2 for w=" + describe(g, w));
    }
    report.checks.push_back("T_w^" + std::to_string(h) + " = T_{w0}^2 in H for all w in C^h_min");
  }
  return report;
}

}  // namespace heckepos
