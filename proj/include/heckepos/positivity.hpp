#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heckepos/classes.hpp"
#include "heckepos/cyclotomic.hpp"
#include "heckepos/qpoly.hpp"
#include "heckepos/trace.hpp"
#include "heckepos/weyl_group.hpp"

namespace heckepos {

struct PositivityVerdict {
  std::size_t class_index = 0;
  QPoly nww_poly;  ///< N^{w,w} at the class representative
  bool positive = false;
  bool regular = false;
  bool elliptic = false;
};

enum class TraceMethod {
  averaged,  ///< nww_column: one pass over a parabolic chain per class
  direct,    ///< ChunkedTrace: basis-by-basis sum
};

struct ClassifyOptions {
  unsigned threads = 1;
  std::uint64_t memory_budget = std::uint64_t{2} << 30;
  TraceMethod method = TraceMethod::averaged;
  ClassOptions class_options;
  /// Previously computed N^{w,w}, keyed by the reduced word of the class
  /// representative. Entries failing validation are recomputed.
  std::map<std::vector<unsigned>, QPoly> known_traces;
  /// Called, never concurrently, when a known trace is rejected.
  std::function<void(const std::string&)> warn;
};

struct Classification {
  CoxeterType ctype;
  std::uint64_t group_order = 0;
  unsigned nu = 0;
  unsigned coxeter_number = 0;
  ClassTable classes;
  std::vector<PositivityVerdict> verdicts;  ///< parallel to classes.records()
};

/// Computes N^{w,w} at a minimal-length representative of every class and
/// decides positivity. Checks on the way, raising IntegrityError on failure:
/// degree 2|w| with the descent-count top coefficient, value |W|/|C| at q = 1,
/// palindromic symmetry, and positivity of every regular elliptic class.
Classification classify(std::shared_ptr<const WeylGroup> group, const ClassifyOptions& options = {});

/// N^{w,w} for a Coxeter element, from the closed form per type.
QPoly coxeter_fixture(const CoxeterType& ctype);

/// Published labels of the positive classes that are not regular elliptic, or
/// nullopt for types without a published list.
std::optional<std::vector<std::string>> published_nonregular_positive(const CoxeterType& ctype);

struct ConjectureReport {
  /// Positive classes that are not elliptic.
  std::vector<std::size_t> non_elliptic_positive;
  /// Type B_n with n = k(k+1): the class with negative cycles 2, 4, ..., 2k
  /// (signed-permutation cycles of lengths 4, 8, ..., 4k on the 2n letters +-i).
  struct CycleTypeCheck {
    unsigned k = 0;
    std::string label;
    std::optional<std::size_t> class_index;
    bool positive = false;
  };
  std::optional<CycleTypeCheck> cycle_type;
};

ConjectureReport conjecture_checks(const Classification& result);

struct PublishedComparison {
  bool has_fixture = false;
  std::vector<std::string> computed;   ///< labels of non-regular positive classes
  std::vector<std::string> published;  ///< fixture labels
  std::vector<std::string> matched;
  struct Anomaly {
    std::string published;                ///< fixture label whose degree differs from the rank
    unsigned published_degree = 0;
    std::optional<std::string> computed;  ///< computed label that contains it, if exactly one does
  };
  std::vector<Anomaly> anomalies;
  std::vector<std::string> missing;  ///< published, degree == rank, not computed
  std::vector<std::string> extra;    ///< computed, not explained by any published entry
  /// Every published entry is confirmed: matched, or an anomaly resolved to a computed label.
  bool ok() const {
    for (const auto& a : anomalies) {
      if (!a.computed) return false;
    }
    return has_fixture && missing.empty();
  }
  bool exact() const { return ok() && extra.empty(); }
};

PublishedComparison compare_to_published(const Classification& result);

}  // namespace heckepos
