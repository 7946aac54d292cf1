#include <doctest.h>

#include <numeric>
#include <random>

#include "heckepos/cyclotomic.hpp"
#include "heckepos/errors.hpp"
#include "heckepos/qpoly.hpp"

using namespace heckepos;

TEST_SUITE("qpoly") {
  TEST_CASE("ring operations") {
    const QPoly x{0, 1};
    CHECK((x + QPoly{1}) * (x + QPoly{1}) == QPoly{1, 2, 1});
    CHECK((x - QPoly{1}) * (x + QPoly{1}) == QPoly{-1, 0, 1});
    CHECK(QPoly{1, 0, 1}.eval(1) == 2);
    CHECK((x - x).is_zero());
    CHECK_FALSE(QPoly{}.degree().has_value());
    CHECK(QPoly{1, 0, 1}.degree() == 2);
    CHECK(QPoly{5, 0, 3}.coefficient(2) == 3);
    CHECK(QPoly{5, 0, 3}.coefficient(9) == 0);
  }

  TEST_CASE("rendering") {
    CHECK(QPoly{1, 0, 4, 0, 1}.to_string() == "q^4+4q^2+1");
    CHECK(QPoly{-1, 1}.to_string() == "q-1");
    CHECK(QPoly{}.to_string() == "0");
    CHECK(QPoly{1, -1, 1}.to_string() == "q^2-q+1");
    CHECK(QPoly{0, -2}.to_string() == "-2q");
  }

  TEST_CASE("shifts and large coefficients") {
    const QPoly p{3, 0, 2};
    CHECK(p.shifted(3).unshifted(3) == p);
    CHECK_THROWS_AS(p.unshifted(1), IntegrityError);
    QPoly big = QPoly::monomial(QPoly::Coeff("123456789012345678901234567890"), 2);
    CHECK(big.coefficient(2).get_str() == "123456789012345678901234567890");
    CHECK_FALSE(big.to_int64().has_value());
    CHECK(QPoly{1, 2}.to_int64() == std::vector<std::int64_t>{1, 2});
  }

  TEST_CASE("division by monic") {
    auto [quot, rem] = divmod_monic(QPoly{-1, 0, 0, 1}, QPoly{-1, 1});
    CHECK(quot == QPoly{1, 1, 1});
    CHECK(rem.is_zero());
    auto [q2, r2] = divmod_monic(QPoly{2, 0, 1}, QPoly{1, 1});
    CHECK(q2 * QPoly{1, 1} + r2 == QPoly{2, 0, 1});
    CHECK(r2 == QPoly{3});
  }

  TEST_CASE("nonnegativity and palindromic signature") {
    CHECK(palindrome_signature(QPoly{1, 0, 1}, 2));
    CHECK(palindrome_signature(QPoly{-1, 1}, 1));
    CHECK_FALSE(palindrome_signature(QPoly{1, 1}, 1));
    CHECK_FALSE(palindrome_signature(QPoly{1, 2}, 2));
    CHECK_FALSE(is_nonneg(QPoly{0, -1, 1}));
    CHECK(is_nonneg(QPoly{1, 0, 4, 0, 1}));
  }
}

TEST_SUITE("cyclotomic") {
  TEST_CASE("small cases") {
    CHECK(cyclotomic(1) == QPoly{-1, 1});
    CHECK(cyclotomic(2) == QPoly{1, 1});
    CHECK(cyclotomic(3) == QPoly{1, 1, 1});
    CHECK(cyclotomic(6) == QPoly{1, -1, 1});
    CHECK(cyclotomic(12) == QPoly{1, 0, -1, 0, 1});
  }

  TEST_CASE("degree is the totient and the divisor product is q^k - 1") {
    for (unsigned k = 1; k <= 36; ++k) {
      CAPTURE(k);
      unsigned phi = 0;
      for (unsigned j = 1; j <= k; ++j) phi += std::gcd(j, k) == 1 ? 1 : 0;
      CHECK(euler_phi(k) == phi);
      CHECK(cyclotomic(k).degree() == static_cast<int>(phi));
      QPoly prod{1};
      for (unsigned d : divisors(k)) prod *= cyclotomic(d);
      CHECK(prod == QPoly::monomial(1, k) - QPoly{1});
    }
  }

  TEST_CASE("factorization") {
    CHECK(factor_cyclotomic(QPoly{1, 1, 1}, 3) == CyclotomicLabel{3});
    const QPoly p = cyclotomic(2) * cyclotomic(2) * cyclotomic(6);
    CHECK(factor_cyclotomic(p, 6) == CyclotomicLabel{6, 2, 2});
    CHECK_THROWS_AS(factor_cyclotomic(QPoly{2, 0, 1}, 4), NotCyclotomicProduct);
  }

  TEST_CASE("factorization recovers random products") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<unsigned> pick(1, 18), count(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
      CyclotomicLabel label;
      unsigned m = 1;
      for (unsigned j = count(rng); j > 0; --j) {
        const unsigned k = pick(rng);
        label.push_back(k);
        m = std::lcm(m, k);
      }
      std::sort(label.rbegin(), label.rend());
      CHECK(factor_cyclotomic(label_product(label), m) == label);
    }
  }

  TEST_CASE("labels") {
    CHECK(render_label({8, 2}) == "Φ8Φ2");
    CHECK(render_label({6, 2, 2}) == "Φ6Φ2^2");
    CHECK(render_label({10, 2, 2}) == "Φ10Φ2^2");
    CHECK(render_label({}) == "1");
    CHECK(parse_label("Φ4^2Φ2") == CyclotomicLabel{4, 4, 2});
    CHECK(parse_label("Φ2Φ10") == CyclotomicLabel{10, 2});
    CHECK(label_degree({6, 2, 2}) == 4);
    CHECK_THROWS_AS(parse_label("Φ"), UsageError);
    CHECK_THROWS_AS(parse_label("x3"), UsageError);
  }
}
