#include "heckepos/persist.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "heckepos/errors.hpp"

namespace heckepos {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t kLargestStoredTable = 1'000'000;

std::string word_text(const std::vector<unsigned>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (unsigned i : word) {
    if (!out.empty()) out += '.';
    out += std::to_string(i + 1);
  }
  return out;
}

std::optional<json> read_json(const fs::path& path, std::string& problem) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    problem = e.what();
    return json{};
  }
}

}  // namespace

json poly_to_json(const QPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) {
      coeffs.push_back(c.get_si());
    } else {
      coeffs.push_back(c.get_str());
    }
  }
  return json{{"coeffs", std::move(coeffs)}};
}

QPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw IntegrityError("polynomial record without a coeffs array");
  }
  std::vector<QPoly::Coeff> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
    } else if (c.is_string()) {
      QPoly::Coeff v;
      if (v.set_str(c.get<std::string>(), 10) != 0) throw IntegrityError("bad coefficient string");
      coeffs.push_back(v);
    } else {
      throw IntegrityError("coefficient is neither an integer nor a decimal string");
    }
  }
  return QPoly(std::move(coeffs));
}

void write_json_atomic(const fs::path& path, const json& doc) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ResourceError("cannot write " + tmp.string());
    out << doc.dump() << '\n';
    out.flush();
    if (!out) throw ResourceError("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw ResourceError("cannot replace " + path.string() + ": " + ec.message());
}

Cache::Cache(fs::path dir, WarningSink warn) : dir_(std::move(dir)), warn_(std::move(warn)) {}

fs::path Cache::record_path(const CoxeterType& ctype, const std::string& kind) const {
  return dir_ / ctype.name() / (kind + ".json");
}

void Cache::warn(const std::string& message) const {
  if (warn_) warn_(message);
}

std::optional<json> Cache::load(const CoxeterType& ctype, const std::string& kind) const {
  const fs::path path = record_path(ctype, kind);
  std::string problem;
  auto doc = read_json(path, problem);
  if (!doc) return std::nullopt;
  if (!problem.empty()) {
    warn("ignoring corrupt cache record " + path.string() + ": " + problem);
    return std::nullopt;
  }
  if (!doc->is_object() || !doc->contains("schema_version") || !doc->contains("payload")) {
    warn("ignoring malformed cache record " + path.string());
    return std::nullopt;
  }
  if ((*doc)["schema_version"] != kSchemaVersion) {
    warn("ignoring cache record " + path.string() + " with schema_version " + (*doc)["schema_version"].dump() +
         " (current " + std::to_string(kSchemaVersion) + ")");
    return std::nullopt;
  }
  if (doc->value("ctype", "") != ctype.name() || doc->value("kind", "") != kind) {
    warn("ignoring cache record " + path.string() + " written for a different key");
    return std::nullopt;
  }
  return (*doc)["payload"];
}

void Cache::store(const CoxeterType& ctype, const std::string& kind, const json& payload) const {
  write_json_atomic(record_path(ctype, kind),
                    json{{"schema_version", kSchemaVersion}, {"ctype", ctype.name()}, {"kind", kind}, {"payload", payload}});
}

json element_table_payload(const WeylGroup& group) {
  static constexpr char kHex[] = "0123456789abcdef";
  const auto& images = group.all_images();
  std::string hex;
  hex.reserve(images.size() * 2);
  for (std::uint8_t b : images) {
    hex += kHex[b >> 4];
    hex += kHex[b & 15];
  }
  return json{{"order", group.size()}, {"nu", group.datum().nu()}, {"images", std::move(hex)}};
}

std::shared_ptr<const WeylGroup> group_from_payload(std::shared_ptr<const RootDatum> datum, const json& payload) {
  if (!payload.is_object() || !payload.contains("images") || !payload["images"].is_string()) {
    throw IntegrityError("element table without images");
  }
  if (payload.value("nu", 0u) != datum->nu()) throw IntegrityError("element table for a different root system");
  const std::string& hex = payload["images"].get_ref<const std::string&>();
  if (hex.size() % 2 != 0) throw IntegrityError("element table has an odd number of hex digits");
  auto digit = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    throw IntegrityError("element table contains a non-hex character");
  };
  std::vector<std::uint8_t> images(hex.size() / 2);
  for (std::size_t k = 0; k < images.size(); ++k) {
    images[k] = static_cast<std::uint8_t>(digit(hex[2 * k]) << 4 | digit(hex[2 * k + 1]));
  }
  return WeylGroup::from_images(std::move(datum), std::move(images));
}

std::shared_ptr<const WeylGroup> load_or_enumerate(const Cache* cache, const CoxeterType& ctype,
                                                   const EnumerationOptions& options) {
  const std::uint64_t order = expected_group_order(ctype);
  if (cache == nullptr || order > kLargestStoredTable) return WeylGroup::enumerate(ctype, options);
  auto datum = std::make_shared<const RootDatum>(RootDatum::build(ctype));
  if (auto payload = cache->load(ctype, "elements")) {
    try {
      return group_from_payload(datum, *payload);
    } catch (const IntegrityError& e) {
      cache->warn("ignoring corrupt element table for " + ctype.name() + ": " + e.what());
    }
  }
  auto group = WeylGroup::enumerate(datum, options);
  cache->store(ctype, "elements", element_table_payload(*group));
  return group;
}

TraceCheckpoint::TraceCheckpoint(fs::path path, const CoxeterType& ctype, std::vector<unsigned> w,
                                 std::vector<unsigned> w_prime, std::size_t chunk_size, WarningSink warn)
    : path_(std::move(path)),
      ctype_(ctype),
      w_(std::move(w)),
      w_prime_(std::move(w_prime)),
      chunk_size_(chunk_size),
      warn_(std::move(warn)) {}

json TraceCheckpoint::header() const {
  return json{{"schema_version", kSchemaVersion}, {"ctype", ctype_.name()}, {"w", w_},
              {"w_prime", w_prime_}, {"chunk_size", chunk_size_}};
}

std::size_t TraceCheckpoint::resume(ChunkedTrace& trace) {
  auto warn = [&](const std::string& m) {
    if (warn_) warn_(m);
  };
  std::string problem;
  auto doc = read_json(path_, problem);
  if (!doc) return 0;
  if (!problem.empty()) {
    warn("ignoring corrupt checkpoint " + path_.string() + ": " + problem);
    return 0;
  }
  json expected = header();
  for (const auto& [key, value] : expected.items()) {
    if (!doc->contains(key) || (*doc)[key] != value) {
      warn("ignoring checkpoint " + path_.string() + ": " + key + " does not match this run");
      return 0;
    }
  }
  std::map<std::size_t, QPoly> loaded;
  try {
    for (const auto& [key, value] : doc->at("chunks").items()) {
      const std::size_t index = std::stoull(key);
      if (index >= trace.num_chunks()) throw IntegrityError("chunk index out of range");
      loaded[index] = poly_from_json(value);
    }
  } catch (const std::exception& e) {
    warn("ignoring corrupt checkpoint " + path_.string() + ": " + e.what());
    return 0;
  }
  for (const auto& [index, partial] : loaded) {
    trace.restore(index, partial);
    chunks_[index] = partial;
  }
  return loaded.size();
}

void TraceCheckpoint::record(const ChunkResult& chunk) {
  auto [it, inserted] = chunks_.try_emplace(chunk.index, chunk.partial);
  if (!inserted && it->second != chunk.partial) {
    throw IntegrityError("chunk " + std::to_string(chunk.index) + " recomputed with a different value");
  }
  json doc = header();
  json chunks = json::object();
  for (const auto& [index, partial] : chunks_) chunks[std::to_string(index)] = poly_to_json(partial);
  doc["chunks"] = std::move(chunks);
  write_json_atomic(path_, doc);
}

fs::path checkpoint_path(const fs::path& cache_dir, const CoxeterType& ctype, const std::vector<unsigned>& w,
                         const std::vector<unsigned>& w_prime, std::size_t chunk_size) {
  std::ostringstream name;
  name << "nww-" << word_text(w) << "-" << word_text(w_prime) << "-c" << chunk_size << ".json";
  return cache_dir / ctype.name() / "checkpoints" / name.str();
}

}  // namespace heckepos
