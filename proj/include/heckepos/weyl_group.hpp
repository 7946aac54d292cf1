#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "heckepos/root_system.hpp"

namespace heckepos {

/// Dense id of an enumerated group element; the identity is 0.
using ElementId = std::uint32_t;

struct EnumerationOptions {
  std::uint64_t memory_budget = std::uint64_t{2} << 30;
  /// Required for groups above one million elements.
  bool allow_huge = false;
};

/// Rough memory needed to enumerate and tabulate a group of this type.
std::uint64_t estimated_enumeration_bytes(const CoxeterType& ctype);

/// All elements of a Weyl group, interned with dense ids in nondecreasing
/// length order, plus left/right multiplication tables by simple reflections.
/// Immutable once built; share it through shared_ptr<const WeylGroup>.
class WeylGroup {
 public:
  static std::shared_ptr<const WeylGroup> enumerate(std::shared_ptr<const RootDatum> datum,
                                                    const EnumerationOptions& options = {});
  static std::shared_ptr<const WeylGroup> enumerate(CoxeterType ctype, const EnumerationOptions& options = {});
  /// Rebuilds the tables from stored positive-root images (nu bytes per element,
  /// in id order). Throws IntegrityError unless they form the whole group with
  /// the identity first and lengths nondecreasing.
  static std::shared_ptr<const WeylGroup> from_images(std::shared_ptr<const RootDatum> datum,
                                                      std::vector<std::uint8_t> images);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
  unsigned rank() const { return datum_->rank(); }
  std::size_t size() const { return lengths_.size(); }

  unsigned length(ElementId x) const { return lengths_[x]; }
  /// s_i x
  ElementId left_mul(unsigned i, ElementId x) const { return left_[static_cast<std::size_t>(x) * rank() + i]; }
  /// x s_i
  ElementId right_mul(ElementId x, unsigned i) const { return right_[static_cast<std::size_t>(x) * rank() + i]; }
  ElementId inverse(ElementId x) const { return inverse_[x]; }
  static constexpr ElementId identity() { return 0; }
  ElementId longest() const { return static_cast<ElementId>(size() - 1); }

  bool is_left_descent(unsigned i, ElementId x) const { return lengths_[left_mul(i, x)] < lengths_[x]; }
  bool is_right_descent(ElementId x, unsigned i) const { return lengths_[right_mul(x, i)] < lengths_[x]; }
  GenSet left_descents(ElementId x) const;
  GenSet right_descents(ElementId x) const;
  GenSet support(ElementId x) const;
  /// x = s_{w[0]} s_{w[1]} ..., 0-based letters, lexicographically first left-greedy word.
  std::vector<unsigned> reduced_word(ElementId x) const;

  ElementId multiply(ElementId x, ElementId y) const;
  ElementId from_word(std::span<const unsigned> word) const;
  ElementId conjugate_by_generator(unsigned i, ElementId x) const { return left_mul(i, right_mul(x, i)); }

  ElementId id_of(const GroupElement& x) const;
  GroupElement element(ElementId x) const;
  std::span<const std::uint8_t> positive_images(ElementId x) const;
  /// positive_images of every element, concatenated in id order.
  const std::vector<std::uint8_t>& all_images() const { return images_; }

  /// Number of elements of each length 0..nu.
  std::vector<std::uint64_t> length_distribution() const;

 private:
  WeylGroup() = default;
  void build_inverse_and_left();

  std::shared_ptr<const RootDatum> datum_;
  std::vector<std::uint8_t> images_;  // size() * nu
  std::vector<std::uint8_t> lengths_;
  std::vector<ElementId> left_;
  std::vector<ElementId> right_;
  std::vector<ElementId> inverse_;
  std::unordered_map<std::uint64_t, ElementId> index_;
};

}  // namespace heckepos
