#pragma once

#include <map>
#include <memory>

#include "heckepos/qpoly.hpp"
#include "heckepos/weyl_group.hpp"

namespace heckepos {

enum class Side { left, right };

/// Element of the Iwahori-Hecke algebra in the T-basis: sum of terms[b] * T_b.
/// Zero coefficients are never stored.
class HeckeElt {
 public:
  explicit HeckeElt(std::shared_ptr<const WeylGroup> group) : group_(std::move(group)) {}

  /// coeff * T_b
  static HeckeElt basis(std::shared_ptr<const WeylGroup> group, ElementId b, const QPoly& coeff = QPoly{1});

  const WeylGroup& group() const { return *group_; }
  const std::shared_ptr<const WeylGroup>& group_ptr() const { return group_; }
  const std::map<ElementId, QPoly>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  QPoly coefficient(ElementId b) const;

  void add_term(ElementId b, const QPoly& coeff);
  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator*=(const QPoly& scalar);

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }

  /// Value of each coefficient at q = 1, i.e. the image in the group algebra.
  std::map<ElementId, QPoly::Coeff> at_one() const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  std::map<ElementId, QPoly> terms_;
};

/// h * T_{s_i} (side right) or T_{s_i} * h (side left).
HeckeElt mul_by_gen(const HeckeElt& h, unsigned i, Side side);

/// Product in H by bilinearity.
HeckeElt mul(const HeckeElt& h1, const HeckeElt& h2);

/// T_a * T_b, folding a reduced word of b through mul_by_gen.
HeckeElt mul_basis(std::shared_ptr<const WeylGroup> group, ElementId a, ElementId b);

/// T_x raised to a nonnegative power.
HeckeElt power_basis(std::shared_ptr<const WeylGroup> group, ElementId x, unsigned exponent);

/// Coefficient of T_b in T_a T_{a'}.
QPoly phi(std::shared_ptr<const WeylGroup> group, ElementId a, ElementId a_prime, ElementId b);

/// Coefficient of T_b in T_a T_{a'} T_{a''}.
QPoly f3(std::shared_ptr<const WeylGroup> group, ElementId a, ElementId a_prime, ElementId a_second, ElementId b);

}  // namespace heckepos
