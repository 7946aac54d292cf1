#include <doctest.h>

#include <random>
#include <set>

#include "heckepos/errors.hpp"
#include "heckepos/root_system.hpp"
#include "heckepos/weyl_group.hpp"

using namespace heckepos;

namespace {

RootDatum datum(const char* t) { return RootDatum::build(CoxeterType::parse(t)); }

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("type parsing and rank bounds") {
    CHECK(CoxeterType::parse("b5") == CoxeterType{Family::B, 5});
    CHECK(CoxeterType::parse("C3") == CoxeterType{Family::B, 3});
    CHECK(CoxeterType::parse("E6").name() == "E6");
    CHECK_THROWS_AS(CoxeterType::parse("D3").validate(), ConfigurationError);
    CHECK_THROWS_AS(CoxeterType::parse("E9").validate(), ConfigurationError);
    CHECK_THROWS_AS(CoxeterType::parse("G3").validate(), ConfigurationError);
    CHECK_THROWS(CoxeterType::parse("Q2"));
  }

  TEST_CASE("root counts and Coxeter numbers") {
    CHECK(datum("A1").nu() == 1);
    CHECK(datum("A1").coxeter_number() == 2);
    CHECK(datum("G2").nu() == 6);
    CHECK(datum("G2").coxeter_number() == 6);
    CHECK(datum("F4").nu() == 24);
    CHECK(datum("B5").nu() == 25);
    CHECK(datum("D4").nu() == 12);
    CHECK(datum("E6").nu() == 36);
    CHECK(datum("E7").nu() == 63);
    CHECK(datum("E8").nu() == 120);
    CHECK(datum("E8").coxeter_number() == 30);
  }

  TEST_CASE("simple reflections permute the roots") {
    for (const char* t : {"A3", "B3", "D4", "F4", "G2", "E6"}) {
      const RootDatum d = datum(t);
      for (unsigned i = 0; i < d.rank(); ++i) {
        const auto table = d.reflection_table(i);
        std::set<unsigned> image(table.begin(), table.end());
        CHECK(image.size() == 2 * d.nu());
        CHECK(table[i] == d.negate(i));
        for (std::size_t k = 0; k < d.nu(); ++k) {
          if (k != i) CHECK(d.is_positive(table[k]));
          CHECK(table[d.negate(k)] == d.negate(table[k]));
        }
      }
    }
  }

  TEST_CASE("multiplication") {
    const RootDatum a2 = datum("A2");
    const GroupElement s1 = a2.simple_reflection(0);
    const GroupElement s2 = a2.simple_reflection(1);
    CHECK(a2.multiply(s1, s1) == a2.identity());
    CHECK(a2.multiply(s1, s2).length() == 2);

    const RootDatum b3 = datum("B3");
    auto g = WeylGroup::enumerate(CoxeterType::parse("B3"));
    std::mt19937 rng(1);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g->size() - 1));
    for (int k = 0; k < 100; ++k) {
      const GroupElement x = g->element(pick(rng)), y = g->element(pick(rng)), z = g->element(pick(rng));
      CHECK(b3.multiply(b3.multiply(x, y), z) == b3.multiply(x, b3.multiply(y, z)));
    }
  }

  TEST_CASE("longest element, descents and support") {
    const RootDatum a1 = datum("A1");
    CHECK(a1.longest_element() == a1.simple_reflection(0));
    const RootDatum a2 = datum("A2");
    const std::vector<unsigned> w121{0, 1, 0};
    CHECK(a2.longest_element() == a2.from_word(w121));
    CHECK(datum("G2").longest_element().length() == 6);

    const GenSet full = GenSet::full(2);
    CHECK(a2.left_descents(a2.identity()).empty());
    CHECK(a2.left_descents(a2.longest_element()) == full);
    CHECK(a2.right_descents(a2.longest_element()) == full);
    const std::vector<unsigned> w12{0, 1};
    CHECK(a2.left_descents(a2.from_word(w12)) == GenSet::from_bits(1));
    CHECK(a2.right_descents(a2.from_word(w12)) == GenSet::from_bits(2));

    CHECK(a2.support(a2.identity()).empty());
    CHECK(a2.support(a2.simple_reflection(0)) == GenSet::from_bits(1));
    CHECK(a2.support(a2.from_word(w121)) == full);
    CHECK(a2.reduced_word(a2.identity()).empty());
    CHECK(a2.reduced_word(a2.simple_reflection(1)) == std::vector<unsigned>{1});
  }

  TEST_CASE("reduced words of all of F4") {
    const RootDatum d = datum("F4");
    auto g = WeylGroup::enumerate(CoxeterType::parse("F4"));
    for (ElementId x = 0; x < g->size(); ++x) {
      const GroupElement e = g->element(x);
      const auto word = d.reduced_word(e);
      CHECK(word.size() == e.length());
      CHECK(d.from_word(word) == e);
    }
  }
}

TEST_SUITE("weyl_group") {
  TEST_CASE("orders match the product of degrees") {
    for (const char* t : {"A1", "A2", "B2", "G2", "B3", "A4", "D4", "F4", "B5", "D5", "E6"}) {
      const CoxeterType ct = CoxeterType::parse(t);
      auto g = WeylGroup::enumerate(ct);
      CAPTURE(t);
      CHECK(g->size() == expected_group_order(ct));
      CHECK(g->length(g->longest()) == g->datum().nu());
    }
    CHECK(expected_group_order(CoxeterType::parse("A2")) == 6);
    CHECK(expected_group_order(CoxeterType::parse("G2")) == 12);
    CHECK(expected_group_order(CoxeterType::parse("F4")) == 1152);
    CHECK(expected_group_order(CoxeterType::parse("E8")) == 696729600);
  }

  TEST_CASE("length distribution of B2") {
    auto g = WeylGroup::enumerate(CoxeterType::parse("B2"));
    CHECK(g->length_distribution() == std::vector<std::uint64_t>{1, 2, 2, 2, 1});
  }

  TEST_CASE("length invariants") {
    for (const char* t : {"B3", "G2", "D4"}) {
      auto g = WeylGroup::enumerate(CoxeterType::parse(t));
      const unsigned nu = g->datum().nu();
      for (ElementId x = 0; x < g->size(); ++x) {
        CHECK(g->length(g->inverse(x)) == g->length(x));
        CHECK(g->length(g->multiply(g->longest(), x)) == nu - g->length(x));
        if (x > 0) CHECK(g->length(x) >= g->length(x - 1));
        for (unsigned i = 0; i < g->rank(); ++i) {
          const int diff = int(g->length(g->right_mul(x, i))) - int(g->length(x));
          CHECK((diff == 1 || diff == -1));
          CHECK(g->left_mul(i, x) == g->id_of(g->datum().left_multiply(i, g->element(x))));
        }
      }
    }
  }

  TEST_CASE("support does not depend on the stripping order") {
    auto g = WeylGroup::enumerate(CoxeterType::parse("B3"));
    for (ElementId x = 0; x < g->size(); ++x) {
      // Strip the largest descent each time instead of the smallest.
      GenSet letters;
      ElementId y = x;
      while (g->length(y) > 0) {
        unsigned i = g->rank();
        while (!g->is_left_descent(--i, y)) {
        }
        letters.insert(i);
        y = g->left_mul(i, y);
      }
      CHECK(letters == g->support(x));
    }
  }

  TEST_CASE("resource guards") {
    CHECK_THROWS_AS(WeylGroup::enumerate(CoxeterType::parse("E8")), ResourceError);
    CHECK_THROWS_AS(WeylGroup::enumerate(CoxeterType::parse("E7")), ResourceError);
    EnumerationOptions tight;
    tight.memory_budget = 1024;
    CHECK_THROWS_AS(WeylGroup::enumerate(CoxeterType::parse("F4"), tight), ResourceError);
  }

  TEST_CASE("rebuilding from stored images") {
    auto g = WeylGroup::enumerate(CoxeterType::parse("B3"));
    auto h = WeylGroup::from_images(g->datum_ptr(), g->all_images());
    REQUIRE(h->size() == g->size());
    for (ElementId x = 0; x < g->size(); ++x) {
      CHECK(h->inverse(x) == g->inverse(x));
      for (unsigned i = 0; i < g->rank(); ++i) {
        CHECK(h->right_mul(x, i) == g->right_mul(x, i));
        CHECK(h->left_mul(i, x) == g->left_mul(i, x));
      }
    }
    auto images = g->all_images();
    std::swap(images[0], images[images.size() - 1]);
    CHECK_THROWS_AS(WeylGroup::from_images(g->datum_ptr(), images), IntegrityError);
  }
}
