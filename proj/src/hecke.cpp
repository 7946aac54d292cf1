#include "heckepos/hecke.hpp"

#include <algorithm>

namespace heckepos {

namespace {

const QPoly& q_poly() {
  static const QPoly q{0, 1};
  return q;
}

const QPoly& q_minus_one() {
  static const QPoly p{-1, 1};
  return p;
}

}  // namespace

HeckeElt HeckeElt::basis(std::shared_ptr<const WeylGroup> group, ElementId b, const QPoly& coeff) {
  HeckeElt h(std::move(group));
  h.add_term(b, coeff);
  return h;
}

QPoly HeckeElt::coefficient(ElementId b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? QPoly{} : it->second;
}

void HeckeElt::add_term(ElementId b, const QPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

HeckeElt& HeckeElt::operator*=(const QPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= scalar;
  return *this;
}

std::map<ElementId, QPoly::Coeff> HeckeElt::at_one() const {
  std::map<ElementId, QPoly::Coeff> out;
  for (const auto& [b, c] : terms_) {
    QPoly::Coeff v = c.eval(1);
    if (v != 0) out.emplace(b, v);
  }
  return out;
}

HeckeElt mul_by_gen(const HeckeElt& h, unsigned i, Side side) {
  const WeylGroup& g = h.group();
  HeckeElt out(h.group_ptr());
  for (const auto& [x, c] : h.terms()) {
    const ElementId y = side == Side::right ? g.right_mul(x, i) : g.left_mul(i, x);
    if (g.length(y) > g.length(x)) {
      out.add_term(y, c);
    } else {
      // T_x T_s = T_{xs} T_s^2 = q T_{xs} + (q-1) T_x when xs < x
      out.add_term(y, c * q_poly());
      out.add_term(x, c * q_minus_one());
    }
  }
  return out;
}

HeckeElt mul(const HeckeElt& h1, const HeckeElt& h2) {
  HeckeElt out(h1.group_ptr());
  for (const auto& [b, c] : h2.terms()) {
    HeckeElt partial = h1;
    for (unsigned i : h1.group().reduced_word(b)) partial = mul_by_gen(partial, i, Side::right);
    partial *= c;
    out += partial;
  }
  return out;
}

HeckeElt mul_basis(std::shared_ptr<const WeylGroup> group, ElementId a, ElementId b) {
  HeckeElt out = HeckeElt::basis(group, a);
  for (unsigned i : group->reduced_word(b)) out = mul_by_gen(out, i, Side::right);
  return out;
}

HeckeElt power_basis(std::shared_ptr<const WeylGroup> group, ElementId x, unsigned exponent) {
  HeckeElt out = HeckeElt::basis(group, WeylGroup::identity());
  const auto word = group->reduced_word(x);
  for (unsigned k = 0; k < exponent; ++k) {
    for (unsigned i : word) out = mul_by_gen(out, i, Side::right);
  }
  return out;
}

QPoly phi(std::shared_ptr<const WeylGroup> group, ElementId a, ElementId a_prime, ElementId b) {
  return mul_basis(std::move(group), a, a_prime).coefficient(b);
}

QPoly f3(std::shared_ptr<const WeylGroup> group, ElementId a, ElementId a_prime, ElementId a_second, ElementId b) {
  HeckeElt h = mul_basis(group, a, a_prime);
  for (unsigned i : group->reduced_word(a_second)) h = mul_by_gen(h, i, Side::right);
  return h.coefficient(b);
}

}  // namespace heckepos
