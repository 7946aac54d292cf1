#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "heckepos/errors.hpp"
#include "heckepos/persist.hpp"
#include "heckepos/positivity.hpp"
#include "heckepos/report.hpp"

using namespace heckepos;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("heckepos-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void overwrite(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::trunc);
  out << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("persist") {
  TEST_CASE("polynomial json round trip") {
    QPoly big = QPoly::monomial(QPoly::Coeff("123456789012345678901234567890"), 3);
    big += QPoly{-4, 0, 7};
    for (const QPoly& p : {QPoly{}, QPoly{1}, QPoly{1, 0, 2, 0, 1}, QPoly{-3, 5}, big}) {
      const auto j = poly_to_json(p);
      CHECK(poly_from_json(j) == p);
      CHECK(poly_from_json(nlohmann::json::parse(j.dump())) == p);
    }
    CHECK(poly_to_json(big)["coeffs"][3].is_string());
    CHECK_THROWS_AS(poly_from_json(nlohmann::json{{"coeffs", {1, "x"}}}), IntegrityError);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json{{"other", 1}}), IntegrityError);
  }

  TEST_CASE("element tables in the cache") {
    TempDir tmp;
    std::vector<std::string> warnings;
    Cache cache(tmp.path, [&](const std::string& m) { warnings.push_back(m); });
    const CoxeterType b3 = CoxeterType::parse("B3");
    auto first = load_or_enumerate(&cache, b3);
    REQUIRE(fs::exists(cache.record_path(b3, "elements")));
    auto second = load_or_enumerate(&cache, b3);
    REQUIRE(second->size() == first->size());
    CHECK(second->all_images() == first->all_images());
    for (ElementId x = 0; x < first->size(); ++x) {
      CHECK(second->reduced_word(x) == first->reduced_word(x));
      CHECK(second->inverse(x) == first->inverse(x));
    }
    CHECK(warnings.empty());

    SUBCASE("stale schema version") {
      auto doc = nlohmann::json::parse(slurp(cache.record_path(b3, "elements")));
      doc["schema_version"] = kSchemaVersion + 1;
      overwrite(cache.record_path(b3, "elements"), doc.dump());
      CHECK_FALSE(cache.load(b3, "elements"));
      CHECK(warnings.size() == 1);
      CHECK(load_or_enumerate(&cache, b3)->size() == 48);
    }
    SUBCASE("corrupt file") {
      overwrite(cache.record_path(b3, "elements"), "{\"schema_version\": 1, \"payl");
      CHECK(load_or_enumerate(&cache, b3)->size() == 48);
      CHECK_FALSE(warnings.empty());
      warnings.clear();
      CHECK(cache.load(b3, "elements"));
      CHECK(warnings.empty());
    }
    SUBCASE("record for another type") {
      fs::create_directories(cache.record_path(CoxeterType::parse("A3"), "elements").parent_path());
      fs::copy_file(cache.record_path(b3, "elements"), cache.record_path(CoxeterType::parse("A3"), "elements"));
      CHECK(load_or_enumerate(&cache, CoxeterType::parse("A3"))->size() == 24);
      CHECK_FALSE(warnings.empty());
    }
    SUBCASE("tampered images") {
      auto doc = nlohmann::json::parse(slurp(cache.record_path(b3, "elements")));
      std::string images = doc["payload"]["images"];
      const std::size_t width = 2 * 9;
      std::swap_ranges(images.begin() + width, images.begin() + 2 * width, images.begin() + 5 * width);
      doc["payload"]["images"] = images;
      overwrite(cache.record_path(b3, "elements"), doc.dump());
      CHECK(load_or_enumerate(&cache, b3)->size() == 48);
      CHECK_FALSE(warnings.empty());
    }
  }

  TEST_CASE("checkpoint resume equals an uninterrupted run") {
    TempDir tmp;
    auto g = WeylGroup::enumerate(CoxeterType::parse("B4"));
    const ElementId w = g->from_word(std::vector<unsigned>{0, 1, 2, 3});
    const ElementId v = g->from_word(std::vector<unsigned>{1, 0, 1});
    const std::size_t chunk = 37;
    ChunkedTrace whole(g, w, v, chunk);
    whole.run();
    const QPoly expected = whole.total();

    const fs::path path = checkpoint_path(tmp.path, g->datum().type(), g->reduced_word(w), g->reduced_word(v), chunk);
    {
      ChunkedTrace partial(g, w, v, chunk);
      TraceCheckpoint cp(path, g->datum().type(), g->reduced_word(w), g->reduced_word(v), chunk);
      CHECK(cp.resume(partial) == 0);
      partial.run(1, [&](const ChunkResult& c) { cp.record(c); }, 4);
      CHECK_FALSE(partial.done());
    }
    REQUIRE(fs::exists(path));
    ChunkedTrace resumed(g, w, v, chunk);
    TraceCheckpoint cp(path, g->datum().type(), g->reduced_word(w), g->reduced_word(v), chunk);
    CHECK(cp.resume(resumed) == 4);
    resumed.run(2, [&](const ChunkResult& c) { cp.record(c); });
    CHECK(resumed.total() == expected);

    // A checkpoint for a different run is ignored.
    std::vector<std::string> warnings;
    ChunkedTrace other(g, v, w, chunk);
    TraceCheckpoint wrong(path, g->datum().type(), g->reduced_word(v), g->reduced_word(w), chunk,
                          [&](const std::string& m) { warnings.push_back(m); });
    CHECK(wrong.resume(other) == 0);
    CHECK(warnings.size() == 1);
  }

  TEST_CASE("word parsing") {
    CHECK(parse_word("1,2,1", 3) == std::vector<unsigned>{0, 1, 0});
    CHECK(parse_word("3,1", 3) == std::vector<unsigned>{2, 0});
    CHECK_THROWS_AS(parse_word(" 3", 3), UsageError);
    CHECK(parse_word("e", 3).empty());
    CHECK(parse_word("", 3).empty());
    CHECK_THROWS_AS(parse_word("0", 3), UsageError);
    CHECK_THROWS_AS(parse_word("4", 3), UsageError);
    CHECK_THROWS_AS(parse_word("1,,2", 3), UsageError);
    CHECK_THROWS_AS(parse_word("1;2", 3), UsageError);
    CHECK_THROWS_AS(parse_word("x", 3), UsageError);
    CHECK(word_string({0, 1, 0}) == "1,2,1");
    CHECK(word_string({}) == "");
    CHECK_THROWS_AS(parse_format("yaml"), UsageError);
  }

  TEST_CASE("rendering is deterministic across thread counts") {
    auto g = WeylGroup::enumerate(CoxeterType::parse("B4"));
    ClassifyOptions one;
    ClassifyOptions many;
    many.threads = 4;
    const Classification a = classify(g, one);
    const Classification b = classify(g, many);
    for (Format f : {Format::text, Format::json, Format::csv}) {
      CHECK(render(positive_document(*g, a), f) == render(positive_document(*g, b), f));
      CHECK(render(report_document(*g, a), f) == render(report_document(*g, b), f));
    }
    const std::string text = render(positive_document(*g, a), Format::text);
    CHECK(text.find("Φ8") != std::string::npos);
    const auto json = nlohmann::json::parse(render(positive_document(*g, a), Format::json));
    CHECK(json["schema_version"] == kSchemaVersion);
    CHECK(json["rows"].size() == a.verdicts.size());
    const std::string csv = render(classes_document(*g, a.classes), Format::csv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(a.classes.size() + 1));
  }
}
