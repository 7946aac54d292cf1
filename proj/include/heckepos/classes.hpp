#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "heckepos/cyclotomic.hpp"
#include "heckepos/qpoly.hpp"
#include "heckepos/weyl_group.hpp"

namespace heckepos {

/// Everything recorded about one conjugacy class.
struct ClassRecord {
  ElementId representative = 0;  ///< smallest id of minimal length
  std::uint64_t size = 0;
  unsigned min_length = 0;
  std::uint64_t min_count = 0;  ///< |C_min|, or the size of the sample found in descent mode
  QPoly char_poly;
  CyclotomicLabel label;
  bool elliptic = false;
  unsigned order = 1;
  std::optional<unsigned> regular_d;
  std::uint64_t centralizer_order = 0;
};

enum class MinLengthMode {
  exhaustive,  ///< scan every member of the orbit
  descent,     ///< conjugation descent from one member, then validated
};

struct ClassOptions {
  MinLengthMode mode = MinLengthMode::exhaustive;
  /// In automatic use, classes above this size switch to descent mode.
  std::uint64_t descent_threshold = 0;
};

/// Conjugacy classes in canonical order: (min length, size, label text),
/// with the representative id as the last tie-break.
class ClassTable {
 public:
  const std::vector<ClassRecord>& records() const { return records_; }
  std::vector<ClassRecord>& records() { return records_; }
  std::size_t size() const { return records_.size(); }
  const ClassRecord& operator[](std::size_t k) const { return records_[k]; }

  std::uint32_t class_of(ElementId x) const { return class_of_[x]; }
  const std::vector<ElementId>& members(std::size_t k) const { return members_[k]; }
  /// Elements of minimal length in class k.
  const std::vector<ElementId>& min_elements(std::size_t k) const { return min_elements_[k]; }

  /// Index of the class carrying regular_d == d, if any.
  std::optional<std::size_t> regular_class(unsigned d) const;

 private:
  friend ClassTable conjugacy_classes(const WeylGroup& group, const ClassOptions& options);
  friend void identify_regular_classes(const WeylGroup& group, ClassTable& table);

  std::vector<ClassRecord> records_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<ElementId>> members_;
  std::vector<std::vector<ElementId>> min_elements_;
};

/// Orbits of W under conjugation, with per-class analysis and the regular
/// classes marked. Throws IntegrityError if regular-class identification is
/// not unique.
ClassTable conjugacy_classes(const WeylGroup& group, const ClassOptions& options = {});

/// Minimal-length members of the orbit `members`, by exhaustive scan.
std::vector<ElementId> min_length_elements(const WeylGroup& group, const std::vector<ElementId>& members);

/// Reaches the minimal length of the class of x by conjugations
/// x -> s x s that never increase the length. Returns the minimal-length
/// elements encountered.
std::vector<ElementId> min_length_by_descent(const WeylGroup& group, ElementId x);

/// det(q I - M) for the matrix M of x on the simple-root basis.
QPoly char_poly(const RootDatum& datum, const GroupElement& x);
/// det(q I - M) of an integer matrix, by Faddeev-LeVerrier with exact division.
QPoly char_poly_of_matrix(const std::vector<std::vector<long>>& m);

bool is_elliptic(const RootDatum& datum, const GroupElement& x);
unsigned element_order(const RootDatum& datum, const GroupElement& x);
unsigned element_order(const WeylGroup& group, ElementId x);
/// x^k through the multiplication table.
ElementId element_power(const WeylGroup& group, ElementId x, unsigned k);

/// Degrees d for which a regular elliptic class of order d exists.
std::set<unsigned> regular_d_set(const CoxeterType& ctype);

/// The same per-type rules with the looser D_n (n even) condition "2n/d
/// integral" in place of "2n/d even". Differs from regular_d_set only by
/// d with 2n/d odd, for which no elliptic class of order d has length 2 nu / d.
std::set<unsigned> regular_d_set_loose(const CoxeterType& ctype);

/// Marks, for each d in regular_d_set, the unique class that is elliptic, has
/// element order d and minimal length 2 nu / d.
void identify_regular_classes(const WeylGroup& group, ClassTable& table);

struct PowerIdentityReport {
  std::vector<std::string> checks;  ///< one line per verified identity
};

/// Verifies the power identities of regular elements:
///  - when 2 is regular and d is even: w^{d/2} = w0 and (d/2)|w| = nu for w in C^d_min;
///  - when d divides h: y^{h/d} lies in C^d_min with (h/d)|y| = |y^{h/d}| for y in C^h_min;
///  - for groups of order at most `hecke_limit`: T_w^h = T_{w0}^2 in H for w in C^h_min.
/// Throws IntegrityError on the first failure.
PowerIdentityReport power_identity_checks(std::shared_ptr<const WeylGroup> group, const ClassTable& table,
                                          std::size_t hecke_limit = 1152);

}  // namespace heckepos
