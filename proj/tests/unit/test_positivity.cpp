#include <doctest.h>

#include "heckepos/checks.hpp"
#include "heckepos/errors.hpp"
#include "heckepos/positivity.hpp"
#include "heckepos/report.hpp"

using namespace heckepos;

namespace {

Classification run(const char* t, TraceMethod method = TraceMethod::averaged, unsigned threads = 1) {
  ClassifyOptions options;
  options.method = method;
  options.threads = threads;
  return classify(WeylGroup::enumerate(CoxeterType::parse(t)), options);
}

std::vector<std::string> positive_labels(const Classification& c) {
  std::vector<std::string> out;
  for (const auto& v : c.verdicts) {
    if (v.positive) out.push_back(render_label(c.classes[v.class_index].label));
  }
  return out;
}

}  // namespace

TEST_SUITE("positivity") {
  TEST_CASE("Coxeter closed forms") {
    CHECK(coxeter_fixture(CoxeterType::parse("B2")) == QPoly{1, 0, 2, 0, 1});
    CHECK(coxeter_fixture(CoxeterType::parse("A1")) == QPoly{1, 0, 1});
    CHECK(coxeter_fixture(CoxeterType::parse("F4")).to_string() == "q^8+2q^6+6q^4+2q^2+1");
    CHECK(coxeter_fixture(CoxeterType::parse("E8")).to_string() ==
          "q^16+q^14+2q^12+4q^10+2q^9+10q^8+2q^7+4q^6+2q^4+q^2+1");
    CHECK(coxeter_fixture(CoxeterType::parse("D4")).to_string() == "q^8+q^6+2q^4+q^2+1");
    CHECK(coxeter_fixture(CoxeterType::parse("D6")).to_string() == "q^12+q^10+2q^8+2q^6+2q^4+q^2+1");
    for (const auto& t : {"A1", "A3", "B4", "D5", "E7", "E8", "F4", "G2"}) {
      const CoxeterType ct = CoxeterType::parse(t);
      const QPoly p = coxeter_fixture(ct);
      CHECK(p.degree() == static_cast<int>(2 * ct.rank));
      CHECK(palindrome_signature(p, static_cast<int>(2 * ct.rank)));
    }
  }

  TEST_CASE("G2") {
    const Classification c = run("G2");
    CHECK(c.verdicts.size() == 6);
    CHECK(positive_labels(c) == std::vector<std::string>{"Φ6", "Φ3", "Φ2^2"});
    for (const auto& v : c.verdicts) CHECK(v.positive == v.regular);
    const ConjectureReport r = conjecture_checks(c);
    CHECK(r.non_elliptic_positive.empty());
    CHECK_FALSE(r.cycle_type.has_value());
    const PublishedComparison cmp = compare_to_published(c);
    CHECK(cmp.has_fixture);
    CHECK(cmp.exact());
  }

  TEST_CASE("identity class is excluded and reports |W|") {
    const Classification c = run("B2");
    CHECK(c.verdicts[0].nww_poly == QPoly{8});
    CHECK_FALSE(c.verdicts[0].positive);
    const ConjectureReport r = conjecture_checks(c);
    REQUIRE(r.cycle_type);
    CHECK(r.cycle_type->k == 1);
    CHECK(r.cycle_type->label == "Φ4");
    CHECK(r.cycle_type->positive);
  }

  TEST_CASE("routes and thread counts agree") {
    for (const char* t : {"A3", "B3", "G2", "D4"}) {
      CAPTURE(t);
      const Classification a = run(t);
      const Classification b = run(t, TraceMethod::direct);
      const Classification c = run(t, TraceMethod::averaged, 3);
      REQUIRE(a.verdicts.size() == b.verdicts.size());
      for (std::size_t k = 0; k < a.verdicts.size(); ++k) {
        CHECK(a.verdicts[k].nww_poly == b.verdicts[k].nww_poly);
        CHECK(a.verdicts[k].nww_poly == c.verdicts[k].nww_poly);
      }
    }
  }

  TEST_CASE("F4 has no positive class beyond the regular ones") {
    const Classification c = run("F4");
    CHECK(compare_to_published(c).exact());
    CHECK(check_coxeter_class(*WeylGroup::enumerate(CoxeterType::parse("F4")), c).ok);
    CHECK(check_centralizers(c).ok);
    CHECK(check_regular_positive(c).ok);
  }

  TEST_CASE("comparison with anomalous published entries") {
    const Classification c = run("B5");
    const PublishedComparison cmp = compare_to_published(c);
    CHECK(cmp.ok());
    CHECK(cmp.matched == std::vector<std::string>{"Φ8Φ2", "Φ4^2Φ2"});
    REQUIRE(cmp.anomalies.size() == 1);
    CHECK(cmp.anomalies[0].published == "Φ6Φ2^2");
    CHECK(cmp.anomalies[0].published_degree == 4);
    CHECK(cmp.anomalies[0].computed == "Φ6Φ2^3");
    CHECK(cmp.extra == std::vector<std::string>{"Φ6Φ4Φ2"});
    CHECK_FALSE(cmp.exact());
  }

  TEST_CASE("known traces are reused only when consistent") {
    auto g = WeylGroup::enumerate(CoxeterType::parse("B3"));
    const Classification fresh = classify(g);
    ClassifyOptions options;
    std::vector<std::string> warnings;
    options.warn = [&](const std::string& m) { warnings.push_back(m); };
    for (const auto& v : fresh.verdicts) {
      options.known_traces[g->reduced_word(fresh.classes[v.class_index].representative)] = v.nww_poly;
    }
    const auto key = g->reduced_word(fresh.classes[3].representative);
    options.known_traces[key] = options.known_traces[key] + QPoly{1};
    const Classification again = classify(g, options);
    CHECK(warnings.size() == 1);
    for (std::size_t k = 0; k < fresh.verdicts.size(); ++k) CHECK(again.verdicts[k].nww_poly == fresh.verdicts[k].nww_poly);
  }
}
