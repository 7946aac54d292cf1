#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace heckepos {

enum class Family : char { A = 'A', B = 'B', D = 'D', E = 'E', F = 'F', G = 'G' };

/// An irreducible finite Weyl group, e.g. {B, 5}. The B tag also covers C_n.
struct CoxeterType {
  Family family = Family::A;
  unsigned rank = 1;

  /// Parses "A1", "B5", "e6" (case-insensitive family letter).
  static CoxeterType parse(std::string_view text);
  std::string name() const;
  /// Throws ConfigurationError unless the rank is admissible for the family.
  void validate() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

/// Product of the fundamental degrees; known before enumeration.
std::uint64_t expected_group_order(const CoxeterType& ctype);

/// Subset of the simple reflections, as a bit set over simple indices.
class GenSet {
 public:
  constexpr GenSet() = default;
  static constexpr GenSet full(unsigned rank) { return GenSet((std::uint32_t{1} << rank) - 1); }
  static constexpr GenSet from_bits(std::uint32_t bits) { return GenSet(bits); }

  constexpr bool contains(unsigned i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(unsigned i) { bits_ |= std::uint32_t{1} << i; }
  constexpr bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  unsigned size() const { return static_cast<unsigned>(__builtin_popcount(bits_)); }
  std::vector<unsigned> indices() const;

  constexpr GenSet operator|(GenSet o) const { return GenSet(bits_ | o.bits_); }
  friend constexpr bool operator==(GenSet, GenSet) = default;

 private:
  constexpr explicit GenSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// A Weyl group element, stored as the images of the positive roots under the
/// induced permutation of the root set. Images of negative roots follow by
/// negation. Root indices below nu are positive; index k + nu is -root(k).
class GroupElement {
 public:
  GroupElement() = default;

  std::span<const std::uint8_t> positive_images() const { return images_; }
  /// Image of any root index in [0, 2 nu).
  std::size_t image(std::size_t root) const;
  unsigned length() const { return length_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.images_ == b.images_; }

 private:
  friend class RootDatum;
  explicit GroupElement(std::vector<std::uint8_t> images);

  std::vector<std::uint8_t> images_;
  unsigned length_ = 0;
};

/// Root system and Cartan data of an irreducible Weyl group, with exact group
/// arithmetic on GroupElement. Immutable after build().
class RootDatum {
 public:
  static RootDatum build(CoxeterType ctype);

  const CoxeterType& type() const { return ctype_; }
  unsigned rank() const { return ctype_.rank; }
  /// Number of positive roots, the length of the longest element.
  unsigned nu() const { return nu_; }
  unsigned coxeter_number() const { return 2 * nu_ / ctype_.rank; }
  /// cartan()[i][j] = <alpha_i^vee, alpha_j>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  std::size_t num_roots() const { return roots_.size(); }
  /// Coordinates of a root in the basis of simple roots.
  const std::vector<int>& root(std::size_t k) const { return roots_[k]; }
  std::size_t negate(std::size_t k) const { return k < nu_ ? k + nu_ : k - nu_; }
  bool is_positive(std::size_t k) const { return k < nu_; }
  /// Permutation of all 2 nu root indices induced by s_i.
  std::span<const std::uint8_t> reflection_table(unsigned i) const { return reflection_tables_[i]; }

  GroupElement identity() const;
  /// Element with the given images of the positive roots; validates the size.
  GroupElement element_from_images(std::span<const std::uint8_t> positive_images) const;
  GroupElement simple_reflection(unsigned i) const;
  /// Product s_{word[0]} s_{word[1]} ... with 0-based simple indices.
  GroupElement from_word(std::span<const unsigned> word) const;
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  GroupElement left_multiply(unsigned i, const GroupElement& x) const;
  GroupElement right_multiply(const GroupElement& x, unsigned i) const;
  GroupElement longest_element() const;

  GenSet left_descents(const GroupElement& x) const;
  GenSet right_descents(const GroupElement& x) const;
  /// Letters of a reduced word, listed left to right, with x = s_{w[0]} s_{w[1]} ...
  std::vector<unsigned> reduced_word(const GroupElement& x) const;
  GenSet support(const GroupElement& x) const;

  /// Matrix of x on the simple-root basis; column j holds x(alpha_j).
  std::vector<std::vector<long>> matrix(const GroupElement& x) const;

  /// Injective 64-bit key: the images of the simple roots.
  std::uint64_t key(const GroupElement& x) const;
  std::uint64_t key_of_images(std::span<const std::uint8_t> simple_images) const;

 private:
  RootDatum() = default;

  CoxeterType ctype_;
  unsigned nu_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<std::uint8_t>> reflection_tables_;
};

}  // namespace heckepos
