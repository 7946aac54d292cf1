#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "heckepos/qpoly.hpp"
#include "heckepos/root_system.hpp"
#include "heckepos/trace.hpp"
#include "heckepos/weyl_group.hpp"

namespace heckepos {

/// Version of every JSON document written by the library: cache records,
/// checkpoints and reports.
inline constexpr int kSchemaVersion = 1;

using WarningSink = std::function<void(const std::string&)>;

/// {"coeffs":[c0,c1,...]}; coefficients outside the int64 range are decimal strings.
nlohmann::json poly_to_json(const QPoly& p);
/// Inverse of poly_to_json. Throws IntegrityError on a malformed value.
QPoly poly_from_json(const nlohmann::json& j);

/// Writes to a sibling temporary file and renames it over `path`.
void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& doc);

/// Versioned records under `dir`, one file per (type, kind).
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, WarningSink warn = {});

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path record_path(const CoxeterType& ctype, const std::string& kind) const;

  /// The stored payload, or nullopt when absent. Stale or corrupt records are
  /// reported through the warning sink and treated as absent.
  std::optional<nlohmann::json> load(const CoxeterType& ctype, const std::string& kind) const;
  void store(const CoxeterType& ctype, const std::string& kind, const nlohmann::json& payload) const;

  void warn(const std::string& message) const;

 private:
  std::filesystem::path dir_;
  WarningSink warn_;
};

/// Element table as stored in the cache: hex-encoded positive-root images.
nlohmann::json element_table_payload(const WeylGroup& group);
std::shared_ptr<const WeylGroup> group_from_payload(std::shared_ptr<const RootDatum> datum,
                                                    const nlohmann::json& payload);

/// Loads the element table from the cache when present and valid, otherwise
/// enumerates it and stores it. Tables above one million elements are never stored.
std::shared_ptr<const WeylGroup> load_or_enumerate(const Cache* cache, const CoxeterType& ctype,
                                                   const EnumerationOptions& options = {});

/// Completed chunks of one ChunkedTrace, kept in a JSON file that is
/// rewritten atomically after every chunk.
class TraceCheckpoint {
 public:
  TraceCheckpoint(std::filesystem::path path, const CoxeterType& ctype, std::vector<unsigned> w,
                  std::vector<unsigned> w_prime, std::size_t chunk_size, WarningSink warn = {});

  const std::filesystem::path& path() const { return path_; }

  /// Restores every stored chunk into `trace`; returns how many. A file for a
  /// different run, a stale version or a corrupt file is ignored with a warning.
  std::size_t resume(ChunkedTrace& trace);
  /// Adds one chunk and persists the file.
  void record(const ChunkResult& chunk);

 private:
  nlohmann::json header() const;

  std::filesystem::path path_;
  CoxeterType ctype_;
  std::vector<unsigned> w_;
  std::vector<unsigned> w_prime_;
  std::size_t chunk_size_;
  WarningSink warn_;
  std::map<std::size_t, QPoly> chunks_;
};

/// Default checkpoint file name for nww(w, w') under a cache directory.
std::filesystem::path checkpoint_path(const std::filesystem::path& cache_dir, const CoxeterType& ctype,
                                      const std::vector<unsigned>& w, const std::vector<unsigned>& w_prime,
                                      std::size_t chunk_size);

}  // namespace heckepos
