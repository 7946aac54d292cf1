#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "heckepos/qpoly.hpp"
#include "heckepos/weyl_group.hpp"

namespace heckepos {

/// N^{w,w'}: the trace of h -> T_w h T_{w'^{-1}} on H, as a polynomial in q.
struct TracePoly {
  QPoly value;
  ElementId w = 0;
  ElementId w_prime = 0;
};

inline constexpr std::size_t kDefaultChunkSize = 4096;

/// Partial trace over one contiguous block of basis ids.
struct ChunkResult {
  std::size_t index = 0;
  QPoly partial;
};

/// Called once per finished chunk, never concurrently.
using ChunkSink = std::function<void(const ChunkResult&)>;

/// The trace computed basis element by basis element: for every b, the
/// coefficient of T_b in T_w T_b T_{w'^{-1}}. Basis ids are split into
/// contiguous chunks whose exact partial sums can be computed in any order,
/// persisted, and restored.
class ChunkedTrace {
 public:
  ChunkedTrace(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId w_prime,
               std::size_t chunk_size = kDefaultChunkSize);

  /// Same trace but with right factor T_{right} instead of T_{w'^{-1}}.
  static ChunkedTrace with_right_factor(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId right,
                                        std::size_t chunk_size = kDefaultChunkSize);

  std::size_t chunk_size() const { return chunk_size_; }
  std::size_t num_chunks() const;
  const std::map<std::size_t, QPoly>& completed() const { return completed_; }
  bool done() const { return completed_.size() == num_chunks(); }

  /// Records a chunk computed elsewhere. Replaying an identical chunk is a no-op;
  /// a conflicting value throws IntegrityError.
  void restore(std::size_t chunk, const QPoly& partial);

  /// Computes pending chunks, at most `limit` of them, on `threads` workers.
  void run(unsigned threads = 1, const ChunkSink& sink = {}, std::optional<std::size_t> limit = std::nullopt);

  /// Sum of all chunks. Throws if chunks are missing.
  QPoly total() const;

  /// Partial trace for one chunk, computed from scratch.
  QPoly compute_chunk(std::size_t chunk) const;

 private:
  ChunkedTrace(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId right, std::size_t chunk_size, bool);

  std::shared_ptr<const WeylGroup> group_;
  ElementId left_;
  ElementId right_;
  std::size_t chunk_size_;
  std::map<std::size_t, QPoly> completed_;
};

struct TraceOptions {
  std::size_t chunk_size = kDefaultChunkSize;
  unsigned threads = 1;
  ChunkSink progress;
};

/// N^{w,w'} by the chunked basis sum, validated against the top-degree
/// descent count. Throws IntegrityError if the validation fails.
TracePoly nww(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId w_prime, const TraceOptions& options = {});

/// sum over a' of the coefficient of T_{a'} in T_w T_{a'} T_{w'}, the right
/// factor being T_{w'} rather than T_{w'^{-1}}.
QPoly nww_right_factor_convention(std::shared_ptr<const WeylGroup> group, ElementId w, ElementId w_prime);

/// N^{x,w'} for every x at once, through the averaging identity
///   N^{x,w'} = q^{|x|} [T_{x^{-1}}] sum_b q^{-|b|} T_b T_{w'^{-1}} T_{b^{-1}},
/// with the sum over b assembled along a chain of parabolic subgroups.
/// Entry x of the result is N^{x,w'}.
std::vector<QPoly> nww_column(const WeylGroup& group, ElementId w_prime,
                              std::uint64_t memory_budget = std::uint64_t{2} << 30);

/// N^{w,w'} through nww_column, validated like nww().
TracePoly nww_averaged(const WeylGroup& group, ElementId w, ElementId w_prime,
                       std::uint64_t memory_budget = std::uint64_t{2} << 30);

/// #{a' : support(w) within left descents of a', support(w') within right descents of a'}.
std::uint64_t top_coeff_count(const WeylGroup& group, ElementId w, ElementId w_prime);

/// #{y : w y = y w'}, by brute force.
std::uint64_t commuting_count(const WeylGroup& group, ElementId w, ElementId w_prime);

/// Throws IntegrityError unless p has degree |w|+|w'| with top coefficient
/// top_coeff_count(w, w').
void validate_trace(const WeylGroup& group, ElementId w, ElementId w_prime, const QPoly& p);

/// Generators in the order they are adjoined by the parabolic chain used by nww_column.
std::vector<unsigned> parabolic_chain_order(const WeylGroup& group);

}  // namespace heckepos
