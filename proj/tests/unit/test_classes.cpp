#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "heckepos/classes.hpp"
#include "heckepos/errors.hpp"

using namespace heckepos;

namespace {

std::shared_ptr<const WeylGroup> group(const char* t) { return WeylGroup::enumerate(CoxeterType::parse(t)); }

ElementId word(const WeylGroup& g, std::initializer_list<unsigned> letters) {
  const std::vector<unsigned> w(letters);
  return g.from_word(w);
}

std::size_t partitions(unsigned n) {
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned m = part; m <= n; ++m) p[m] += p[m - part];
  }
  return p[n];
}

// Determinant by cofactor expansion, the independent oracle for char polys.
QPoly det_poly(const std::vector<std::vector<QPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  QPoly sum;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<QPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QPoly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const QPoly term = m[0][j] * det_poly(minor);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

TEST_SUITE("classes") {
  TEST_CASE("class counts and sizes") {
    auto a2 = group("A2");
    const ClassTable t = conjugacy_classes(*a2);
    REQUIRE(t.size() == 3);
    std::vector<std::uint64_t> sizes;
    for (const auto& r : t.records()) sizes.push_back(r.size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::uint64_t>{1, 2, 3});

    CHECK(conjugacy_classes(*group("G2")).size() == 6);
    CHECK(conjugacy_classes(*group("B3")).size() == 10);
    CHECK(conjugacy_classes(*group("F4")).size() == 25);
    CHECK(conjugacy_classes(*group("D4")).size() == 13);
    CHECK(conjugacy_classes(*group("E6")).size() == 25);
  }

  TEST_CASE("record invariants") {
    for (const char* t : {"A3", "B3", "D4", "F4", "G2"}) {
      auto g = group(t);
      CAPTURE(t);
      const ClassTable table = conjugacy_classes(*g);
      std::uint64_t total = 0;
      const unsigned nu = g->datum().nu();
      for (std::size_t k = 0; k < table.size(); ++k) {
        const ClassRecord& r = table[k];
        total += r.size;
        CHECK(r.size * r.centralizer_order == g->size());
        CHECK(r.char_poly.degree() == static_cast<int>(g->rank()));
        CHECK(label_degree(r.label) == g->rank());
        CHECK(r.elliptic == (std::count(r.label.begin(), r.label.end(), 1u) == 0));
        CHECK(g->length(r.representative) == r.min_length);
        CHECK(table.class_of(r.representative) == k);
        if (r.regular_d) CHECK(r.min_length * *r.regular_d == 2 * nu);
        for (ElementId m : table.min_elements(k)) CHECK(g->length(m) == r.min_length);
        // Class function: same char poly on a few members.
        for (std::size_t j = 0; j < std::min<std::size_t>(5, table.members(k).size()); ++j) {
          CHECK(char_poly(g->datum(), g->element(table.members(k)[j])) == r.char_poly);
        }
        // Every char poly factors with indices dividing the order.
        for (unsigned f : r.label) CHECK(r.order % f == 0);
      }
      CHECK(total == g->size());
    }
  }

  TEST_CASE("minimal lengths") {
    auto g2 = group("G2");
    const ClassTable t = conjugacy_classes(*g2);
    CHECK(t[0].min_length == 0);
    CHECK(t[0].size == 1);
    CHECK(t[t.class_of(word(*g2, {0}))].min_length == 1);
    CHECK(t[t.class_of(word(*g2, {0, 1}))].min_length == 2);
    for (const char* name : {"A4", "B4", "D5", "F4", "E6"}) {
      auto g = group(name);
      std::vector<unsigned> cox(g->rank());
      std::iota(cox.begin(), cox.end(), 0u);
      CHECK(conjugacy_classes(*g)[conjugacy_classes(*g).class_of(g->from_word(cox))].min_length == g->rank());
    }
  }

  TEST_CASE("descent agrees with the exhaustive scan") {
    for (const char* t : {"B4", "F4", "D5"}) {
      auto g = group(t);
      CAPTURE(t);
      const ClassTable table = conjugacy_classes(*g);
      for (std::size_t k = 0; k < table.size(); ++k) {
        const auto found = min_length_by_descent(*g, table.members(k).back());
        REQUIRE_FALSE(found.empty());
        CHECK(g->length(found.front()) == table[k].min_length);
        for (ElementId x : found) {
          CHECK(std::binary_search(table.min_elements(k).begin(), table.min_elements(k).end(), x));
        }
      }
      ClassOptions descent;
      descent.mode = MinLengthMode::descent;
      const ClassTable other = conjugacy_classes(*g, descent);
      REQUIRE(other.size() == table.size());
      for (std::size_t k = 0; k < table.size(); ++k) {
        CHECK(other[k].min_length == table[k].min_length);
        CHECK(other[k].label == table[k].label);
      }
    }
  }

  TEST_CASE("characteristic polynomials") {
    const RootDatum a2 = RootDatum::build(CoxeterType::parse("A2"));
    CHECK(char_poly(a2, a2.identity()) == QPoly{1, -2, 1});
    const std::vector<unsigned> c{0, 1};
    CHECK(char_poly(a2, a2.from_word(c)) == QPoly{1, 1, 1});
    CHECK(char_poly(a2, a2.longest_element()) == QPoly{-1, 0, 1});
    CHECK_FALSE(is_elliptic(a2, a2.identity()));
    CHECK_FALSE(is_elliptic(a2, a2.longest_element()));
    CHECK(is_elliptic(a2, a2.from_word(c)));
    CHECK(element_order(a2, a2.identity()) == 1);
    CHECK(element_order(a2, a2.from_word(c)) == 3);

    // Faddeev-LeVerrier against cofactor expansion of det(qI - M).
    std::mt19937 rng(9);
    for (const char* t : {"B3", "F4", "D4"}) {
      auto g = group(t);
      std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g->size() - 1));
      for (int k = 0; k < 20; ++k) {
        const auto m = g->datum().matrix(g->element(pick(rng)));
        std::vector<std::vector<QPoly>> qm(m.size(), std::vector<QPoly>(m.size()));
        for (std::size_t r = 0; r < m.size(); ++r) {
          for (std::size_t s = 0; s < m.size(); ++s) qm[r][s] = QPoly{-m[r][s]} + (r == s ? QPoly{0, 1} : QPoly{});
        }
        CHECK(char_poly_of_matrix(m) == det_poly(qm));
      }
    }
  }

  TEST_CASE("elliptic classes of B_n are counted by partitions") {
    for (unsigned n = 2; n <= 5; ++n) {
      auto g = WeylGroup::enumerate(CoxeterType{Family::B, n});
      std::size_t elliptic = 0;
      for (const auto& r : conjugacy_classes(*g).records()) elliptic += r.elliptic ? 1 : 0;
      CHECK(elliptic == partitions(n));
    }
  }

  TEST_CASE("regular degrees") {
    auto set = [](const char* t) { return regular_d_set(CoxeterType::parse(t)); };
    CHECK(set("G2") == std::set<unsigned>{2, 3, 6});
    CHECK(set("E7") == std::set<unsigned>{2, 6, 14, 18});
    CHECK(set("B3") == std::set<unsigned>{2, 6});
    CHECK(set("A4") == std::set<unsigned>{5});
    CHECK(set("D5") == std::set<unsigned>{8});
    CHECK(set("D4") == std::set<unsigned>{2, 4, 6});
    CHECK(regular_d_set_loose(CoxeterType::parse("D4")) == std::set<unsigned>{2, 4, 6, 8});
    CHECK(set("D6") == std::set<unsigned>{2, 6, 10});
    CHECK(regular_d_set_loose(CoxeterType::parse("D6")) == std::set<unsigned>{2, 4, 6, 10, 12});
  }

  TEST_CASE("regular class identification") {
    auto g2 = group("G2");
    const ClassTable t = conjugacy_classes(*g2);
    const auto c6 = t.regular_class(6);
    REQUIRE(c6);
    CHECK(*c6 == t.class_of(word(*g2, {0, 1})));
    CHECK(t[*t.regular_class(2)].representative == g2->longest());
    CHECK(t[*t.regular_class(2)].min_length == 6);
    auto a2 = group("A2");
    const ClassTable ta = conjugacy_classes(*a2);
    CHECK(*ta.regular_class(3) == ta.class_of(word(*a2, {0, 1})));
    for (const char* name : {"A3", "B4", "D4", "D5", "F4", "E6", "B5"}) {
      auto g = group(name);
      const ClassTable table = conjugacy_classes(*g);
      for (unsigned d : regular_d_set(g->datum().type())) CHECK(table.regular_class(d).has_value());
    }
  }

  TEST_CASE("power identities") {
    for (const char* t : {"A2", "B2", "G2", "B3", "D4", "F4"}) {
      auto g = group(t);
      CAPTURE(t);
      CHECK_NOTHROW(power_identity_checks(g, conjugacy_classes(*g)));
    }
    auto g2 = group("G2");
    const ElementId c = word(*g2, {0, 1});
    CHECK(element_power(*g2, c, 3) == g2->longest());
    auto b2 = group("B2");
    CHECK(element_power(*b2, word(*b2, {0, 1}), 2) == b2->longest());
  }
}
