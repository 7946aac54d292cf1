// heckepos command-line driver.
//
//   heckepos <command> --type <T> [options]
//
// Commands: roots, elements, classes, nww, positive, report, selftest.
// Exit codes: 0 ok, 1 mismatch against a fixture, 2 usage error,
// 3 resource or integrity error (including an interrupted nww run).

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "heckepos/checks.hpp"
#include "heckepos/errors.hpp"
#include "heckepos/persist.hpp"
#include "heckepos/positivity.hpp"
#include "heckepos/report.hpp"
#include "heckepos/trace.hpp"

namespace hp = heckepos;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct RunConfig {
  std::string command;
  std::string type;
  std::string format = "text";
  std::string cache_dir;
  unsigned threads = 1;
  std::string memory_budget = "2G";
  std::size_t chunk_size = hp::kDefaultChunkSize;
  bool allow_huge = false;
  std::string w;
  std::optional<std::string> w_prime;
  std::string method = "averaged";
  std::optional<std::size_t> stop_after_chunks;
};

std::uint64_t parse_bytes(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw hp::UsageError("bad --memory-budget '" + text + "'");
  }
  std::string suffix = text.substr(used);
  if (!suffix.empty() && (suffix.back() == 'B' || suffix.back() == 'b')) suffix.pop_back();
  if (suffix.size() == 2 && suffix[1] == 'i') suffix.pop_back();
  unsigned shift = 0;
  if (suffix.empty()) {
    shift = 0;
  } else if (suffix == "K" || suffix == "k") {
    shift = 10;
  } else if (suffix == "M" || suffix == "m") {
    shift = 20;
  } else if (suffix == "G" || suffix == "g") {
    shift = 30;
  } else {
    throw hp::UsageError("bad --memory-budget suffix in '" + text + "' (use K, M or G)");
  }
  if (value == 0 || value > (UINT64_MAX >> shift)) throw hp::UsageError("--memory-budget out of range");
  return static_cast<std::uint64_t>(value) << shift;
}

void warn(const std::string& message) { std::cerr << "warning: " << message << '\n'; }

class Runner {
 public:
  explicit Runner(const RunConfig& cfg)
      : cfg_(cfg), format_(hp::parse_format(cfg.format)), budget_(parse_bytes(cfg.memory_budget)) {
    if (!cfg.cache_dir.empty()) cache_.emplace(cfg.cache_dir, warn);
  }

  int run() {
    const std::string& c = cfg_.command;
    if (c == "selftest") return selftest();
    if (cfg_.type.empty()) throw hp::UsageError("--type is required for " + c);
    ctype_ = hp::CoxeterType::parse(cfg_.type);
    ctype_.validate();
    if (c == "roots") return emit(hp::roots_document(hp::RootDatum::build(ctype_)));
    if (c == "elements") return emit(hp::elements_document(*group()));
    if (c == "classes") return classes();
    if (c == "nww") return nww();
    if (c == "positive" || c == "report") return positive(c == "report");
    throw hp::UsageError("unknown command " + c);
  }

 private:
  int emit(const hp::Document& doc) {
    std::cout << hp::render(doc, format_);
    return kOk;
  }

  std::shared_ptr<const hp::WeylGroup> group() {
    hp::EnumerationOptions options;
    options.memory_budget = budget_;
    options.allow_huge = cfg_.allow_huge;
    return hp::load_or_enumerate(cache_ ? &*cache_ : nullptr, ctype_, options);
  }

  int classes() {
    auto g = group();
    return emit(hp::classes_document(*g, hp::conjugacy_classes(*g)));
  }

  int nww() {
    if (cfg_.w.empty()) throw hp::UsageError("nww needs --w (use e for the identity)");
    const unsigned rank = ctype_.rank;
    const auto w_word = hp::parse_word(cfg_.w, rank);
    const auto v_word = hp::parse_word(cfg_.w_prime.value_or(cfg_.w), rank);
    auto g = group();
    const hp::ElementId w = g->from_word(w_word);
    const hp::ElementId v = g->from_word(v_word);

    hp::ChunkedTrace trace(g, w, v, cfg_.chunk_size);
    std::optional<hp::TraceCheckpoint> checkpoint;
    if (cache_) {
      checkpoint.emplace(hp::checkpoint_path(cache_->dir(), ctype_, g->reduced_word(w), g->reduced_word(v),
                                             cfg_.chunk_size),
                         ctype_, g->reduced_word(w), g->reduced_word(v), cfg_.chunk_size, warn);
      if (const std::size_t n = checkpoint->resume(trace); n > 0) {
        std::cerr << "resumed " << n << " of " << trace.num_chunks() << " chunks from " << checkpoint->path().string()
                  << '\n';
      }
    }
    hp::ChunkSink sink;
    if (checkpoint) sink = [&](const hp::ChunkResult& chunk) { checkpoint->record(chunk); };
    trace.run(cfg_.threads, sink, cfg_.stop_after_chunks);
    if (!trace.done()) {
      std::cerr << "stopped after " << trace.completed().size() << " of " << trace.num_chunks() << " chunks";
      if (checkpoint) std::cerr << "; rerun the same command to resume";
      std::cerr << '\n';
      return kResource;
    }
    const hp::QPoly value = trace.total();
    hp::validate_trace(*g, w, v, value);
    return emit(hp::nww_document(*g, w, v, value));
  }

  int positive(bool as_report) {
    auto g = group();
    hp::ClassifyOptions options;
    options.threads = cfg_.threads;
    options.memory_budget = budget_;
    options.warn = warn;
    if (cfg_.method == "direct") {
      options.method = hp::TraceMethod::direct;
    } else if (cfg_.method != "averaged") {
      throw hp::UsageError("unknown --method '" + cfg_.method + "' (expected averaged or direct)");
    }
    if (cache_) load_traces(options);
    const hp::Classification result = hp::classify(g, options);
    if (cache_) store_traces(*g, result);

    const int status = emit(as_report ? hp::report_document(*g, result) : hp::positive_document(*g, result));
    const hp::CoxeterCheck cox = hp::coxeter_check(*g, result);
    const hp::PublishedComparison cmp = hp::compare_to_published(result);
    if (!cox.matched()) {
      std::cerr << "Coxeter class: computed " << cox.computed.to_string() << ", closed form " << cox.fixture.to_string()
                << '\n';
      return kMismatch;
    }
    if (cmp.has_fixture && !cmp.ok()) {
      std::cerr << "published list not reproduced\n";
      return kMismatch;
    }
    return status;
  }

  void load_traces(hp::ClassifyOptions& options) {
    auto payload = cache_->load(ctype_, "traces");
    if (!payload) return;
    try {
      for (const auto& entry : payload->at("traces")) {
        options.known_traces[entry.at("word").get<std::vector<unsigned>>()] = hp::poly_from_json(entry.at("nww"));
      }
    } catch (const std::exception& e) {
      warn("ignoring corrupt trace record: " + std::string(e.what()));
      options.known_traces.clear();
    }
  }

  void store_traces(const hp::WeylGroup& g, const hp::Classification& result) {
    nlohmann::json traces = nlohmann::json::array();
    for (const auto& v : result.verdicts) {
      traces.push_back({{"word", g.reduced_word(result.classes[v.class_index].representative)},
                        {"nww", hp::poly_to_json(v.nww_poly)}});
    }
    cache_->store(ctype_, "traces", nlohmann::json{{"traces", std::move(traces)}});
  }

  int selftest() {
    std::vector<hp::CoxeterType> types;
    if (cfg_.type.empty()) {
      types = {hp::CoxeterType::parse("A2"), hp::CoxeterType::parse("B2"), hp::CoxeterType::parse("G2")};
    } else {
      types = {hp::CoxeterType::parse(cfg_.type)};
      if (hp::expected_group_order(types.front()) > 2000) {
        throw hp::UsageError("selftest runs every pair; pick a group of order at most 2000");
      }
    }
    hp::Document doc{{"schema_version", hp::kSchemaVersion}, {"kind", "selftest"}};
    hp::Document rows = hp::Document::array();
    bool all_ok = true;
    for (const auto& t : types) {
      for (const auto& r : hp::selftest_suite(t, cfg_.threads)) {
        all_ok = all_ok && r.ok;
        rows.push_back({{"check", r.name}, {"status", r.ok ? "PASS" : "FAIL"}, {"cases", r.cases}, {"detail", r.detail}});
      }
    }
    doc["columns"] = {"check", "status", "cases", "detail"};
    doc["rows"] = std::move(rows);
    doc["summary"] = {{"passed", all_ok}};
    emit(doc);
    return all_ok ? kOk : kMismatch;
  }

  const RunConfig& cfg_;
  hp::Format format_;
  std::uint64_t budget_;
  std::optional<hp::Cache> cache_;
  hp::CoxeterType ctype_;
};

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("HECKE_CACHE_DIR")) cfg.cache_dir = env;

  CLI::App app{"Trace polynomials N^{w,w'} on Iwahori-Hecke algebras and positive conjugacy classes of Weyl groups"};
  app.add_option("command", cfg.command, "roots | elements | classes | nww | positive | report | selftest")
      ->required()
      ->check(CLI::IsMember({"roots", "elements", "classes", "nww", "positive", "report", "selftest"}));
  app.add_option("--type", cfg.type, "Coxeter type, e.g. A3, B5, D4, E6, F4, G2");
  app.add_option("--format", cfg.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir, "cache and checkpoint directory (default $HECKE_CACHE_DIR)");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--memory-budget", cfg.memory_budget, "bytes, with optional K/M/G suffix (default 2G)");
  app.add_option("--chunk-size", cfg.chunk_size, "basis elements per nww chunk")->check(CLI::PositiveNumber);
  app.add_flag("--allow-huge", cfg.allow_huge, "permit groups above one million elements");
  app.add_option("--w", cfg.w, "element as comma-separated 1-based simple indices, e.g. 1,2,1");
  app.add_option("--w-prime", cfg.w_prime, "second element (default: same as --w)");
  app.add_option("--method", cfg.method, "trace route for positive/report: averaged | direct")
      ->check(CLI::IsMember({"averaged", "direct"}));
  app.add_option("--stop-after-chunks", cfg.stop_after_chunks, "nww: stop after this many new chunks (test hook)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return Runner(cfg).run();
  } catch (const hp::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const hp::ConfigurationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const hp::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const hp::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kResource;
  } catch (const hp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource error: out of memory\n";
    return kResource;
  }
}
