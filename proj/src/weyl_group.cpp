#include "heckepos/weyl_group.hpp"

#include <algorithm>
#include <string>

#include "heckepos/errors.hpp"

namespace heckepos {

namespace {

constexpr std::uint64_t kHugeThreshold = 1'000'000;

std::uint64_t nu_of(const CoxeterType& t) {
  switch (t.family) {
    case Family::A: return std::uint64_t{t.rank} * (t.rank + 1) / 2;
    case Family::B: return std::uint64_t{t.rank} * t.rank;
    case Family::D: return std::uint64_t{t.rank} * (t.rank - 1);
    case Family::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace

std::uint64_t estimated_enumeration_bytes(const CoxeterType& ctype) {
  const std::uint64_t order = expected_group_order(ctype);
  // images + length + three id tables + hash node
  const std::uint64_t per_element = nu_of(ctype) + 1 + 4 * (2 * ctype.rank + 1) + 48;
  return order > UINT64_MAX / per_element ? UINT64_MAX : order * per_element;
}

std::shared_ptr<const WeylGroup> WeylGroup::enumerate(CoxeterType ctype, const EnumerationOptions& options) {
  ctype.validate();
  // Check the budget before building anything, so E8 fails fast.
  const std::uint64_t order = expected_group_order(ctype);
  if (ctype == CoxeterType{Family::E, 8}) {
    throw ResourceError("E8 (order 696,729,600) is beyond the supported scale; refusing to enumerate");
  }
  if (order > kHugeThreshold && !options.allow_huge) {
    throw ResourceError("type " + ctype.name() + " has " + std::to_string(order) +
                        " elements; pass --allow-huge to enumerate it");
  }
  return enumerate(std::make_shared<const RootDatum>(RootDatum::build(ctype)), options);
}

std::shared_ptr<const WeylGroup> WeylGroup::enumerate(std::shared_ptr<const RootDatum> datum,
                                                      const EnumerationOptions& options) {
  const CoxeterType ctype = datum->type();
  const std::uint64_t order = expected_group_order(ctype);
  if (ctype == CoxeterType{Family::E, 8}) {
    throw ResourceError("E8 (order 696,729,600) is beyond the supported scale; refusing to enumerate");
  }
  if (order > kHugeThreshold && !options.allow_huge) {
    throw ResourceError("type " + ctype.name() + " has " + std::to_string(order) +
                        " elements; pass --allow-huge to enumerate it");
  }
  const std::uint64_t bytes = estimated_enumeration_bytes(ctype);
  if (bytes > options.memory_budget) {
    throw ResourceError("enumerating " + ctype.name() + " needs about " + std::to_string(bytes >> 20) +
                        " MiB, above the memory budget of " + std::to_string(options.memory_budget >> 20) + " MiB");
  }

  auto group = std::shared_ptr<WeylGroup>(new WeylGroup());
  WeylGroup& g = *group;
  g.datum_ = datum;
  const RootDatum& d = *datum;
  const unsigned n = d.rank();
  const unsigned nu = d.nu();

  g.images_.reserve(order * nu);
  g.lengths_.reserve(order);
  g.right_.assign(order * n, 0);
  g.index_.reserve(order);

  const GroupElement one = d.identity();
  g.images_.insert(g.images_.end(), one.positive_images().begin(), one.positive_images().end());
  g.lengths_.push_back(0);
  g.index_.emplace(d.key(one), 0);

  // Breadth-first by right multiplication; ids come out in length order.
  std::vector<std::uint8_t> simple(n);
  for (std::size_t x = 0; x < g.lengths_.size(); ++x) {
    if (g.lengths_.size() > order) throw IntegrityError("enumeration exceeded the expected group order");
    for (unsigned i = 0; i < n; ++i) {
      const std::uint8_t* xi = &g.images_[x * nu];
      if (xi[i] >= nu) continue;  // descent: x s_i was found earlier
      const auto table = d.reflection_table(i);
      auto image_of = [&](std::size_t root) -> std::uint8_t {
        if (root < nu) return xi[root];
        const std::uint8_t k = xi[root - nu];
        return static_cast<std::uint8_t>(k < nu ? k + nu : k - nu);
      };
      for (unsigned j = 0; j < n; ++j) simple[j] = image_of(table[j]);
      const std::uint64_t key = d.key_of_images(simple);
      auto [it, inserted] = g.index_.try_emplace(key, static_cast<ElementId>(g.lengths_.size()));
      if (inserted) {
        std::vector<std::uint8_t> full(nu);
        for (unsigned j = 0; j < nu; ++j) full[j] = image_of(table[j]);
        g.images_.insert(g.images_.end(), full.begin(), full.end());
        g.lengths_.push_back(static_cast<std::uint8_t>(g.lengths_[x] + 1));
      }
      const ElementId y = it->second;
      g.right_[x * n + i] = y;
      g.right_[static_cast<std::size_t>(y) * n + i] = static_cast<ElementId>(x);
    }
  }
  if (g.lengths_.size() != order) {
    throw IntegrityError("enumerated " + std::to_string(g.lengths_.size()) + " elements of " + ctype.name() +
                         ", expected " + std::to_string(order));
  }

  g.build_inverse_and_left();
  return group;
}

std::shared_ptr<const WeylGroup> WeylGroup::from_images(std::shared_ptr<const RootDatum> datum,
                                                        std::vector<std::uint8_t> images) {
  const RootDatum& d = *datum;
  const unsigned n = d.rank();
  const unsigned nu = d.nu();
  const std::uint64_t order = expected_group_order(d.type());
  if (images.size() != order * nu) {
    throw IntegrityError("stored table of " + d.type().name() + " has the wrong size");
  }
  auto group = std::shared_ptr<WeylGroup>(new WeylGroup());
  WeylGroup& g = *group;
  g.datum_ = datum;
  g.images_ = std::move(images);
  g.lengths_.resize(order);
  g.index_.reserve(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::uint8_t* xi = &g.images_[x * nu];
    unsigned len = 0;
    for (unsigned j = 0; j < nu; ++j) {
      if (xi[j] >= 2 * nu) throw IntegrityError("stored root image out of range");
      if (xi[j] >= nu) ++len;
    }
    g.lengths_[x] = static_cast<std::uint8_t>(len);
    if (x > 0 && len < g.lengths_[x - 1]) throw IntegrityError("stored table is not in length order");
    if (!g.index_.try_emplace(d.key_of_images(std::span<const std::uint8_t>(xi, n)), static_cast<ElementId>(x)).second) {
      throw IntegrityError("stored table repeats an element");
    }
  }
  if (g.lengths_[0] != 0) throw IntegrityError("stored table does not start with the identity");

  g.right_.assign(order * n, 0);
  std::vector<std::uint8_t> simple(n);
  for (std::size_t x = 0; x < order; ++x) {
    const std::uint8_t* xi = &g.images_[x * nu];
    for (unsigned i = 0; i < n; ++i) {
      const auto table = d.reflection_table(i);
      for (unsigned j = 0; j < n; ++j) {
        const std::size_t root = table[j];
        if (root < nu) {
          simple[j] = xi[root];
        } else {
          const std::uint8_t k = xi[root - nu];
          simple[j] = static_cast<std::uint8_t>(k < nu ? k + nu : k - nu);
        }
      }
      auto it = g.index_.find(d.key_of_images(simple));
      if (it == g.index_.end()) throw IntegrityError("stored table is not closed under multiplication");
      g.right_[x * n + i] = it->second;
    }
  }
  g.build_inverse_and_left();
  return group;
}

// Inverses and left multiplication through the interned keys.
void WeylGroup::build_inverse_and_left() {
  const RootDatum& d = *datum_;
  const unsigned n = d.rank();
  const unsigned nu = d.nu();
  const std::size_t order = lengths_.size();
  inverse_.assign(order, 0);
  left_.assign(order * n, 0);
  std::vector<std::uint8_t> inv(nu);
  std::vector<std::uint8_t> simple(n);
  for (std::size_t x = 0; x < order; ++x) {
    const std::uint8_t* xi = &images_[x * nu];
    for (unsigned j = 0; j < nu; ++j) {
      const unsigned t = xi[j];
      if (t < nu) {
        inv[t] = static_cast<std::uint8_t>(j);
      } else {
        inv[t - nu] = static_cast<std::uint8_t>(j + nu);
      }
    }
    inverse_[x] = index_.at(d.key_of_images(std::span<const std::uint8_t>(inv).first(n)));
    for (unsigned i = 0; i < n; ++i) {
      const auto table = d.reflection_table(i);
      for (unsigned j = 0; j < n; ++j) simple[j] = table[xi[j]];
      left_[x * n + i] = index_.at(d.key_of_images(simple));
    }
  }
}

GenSet WeylGroup::left_descents(ElementId x) const {
  GenSet out;
  for (unsigned i = 0; i < rank(); ++i) {
    if (is_left_descent(i, x)) out.insert(i);
  }
  return out;
}

GenSet WeylGroup::right_descents(ElementId x) const {
  GenSet out;
  for (unsigned i = 0; i < rank(); ++i) {
    if (is_right_descent(x, i)) out.insert(i);
  }
  return out;
}

std::vector<unsigned> WeylGroup::reduced_word(ElementId x) const {
  std::vector<unsigned> word;
  word.reserve(length(x));
  while (length(x) > 0) {
    unsigned i = 0;
    while (!is_left_descent(i, x)) ++i;
    word.push_back(i);
    x = left_mul(i, x);
  }
  return word;
}

GenSet WeylGroup::support(ElementId x) const {
  GenSet out;
  for (unsigned i : reduced_word(x)) out.insert(i);
  return out;
}

ElementId WeylGroup::multiply(ElementId x, ElementId y) const {
  for (unsigned i : reduced_word(y)) x = right_mul(x, i);
  return x;
}

ElementId WeylGroup::from_word(std::span<const unsigned> word) const {
  ElementId x = identity();
  for (unsigned i : word) {
    if (i >= rank()) throw UsageError("simple index out of range: " + std::to_string(i + 1));
    x = right_mul(x, i);
  }
  return x;
}

ElementId WeylGroup::id_of(const GroupElement& x) const {
  if (x.positive_images().size() != datum_->nu()) throw UsageError("element belongs to a different root datum");
  auto it = index_.find(datum_->key(x));
  if (it == index_.end()) throw UsageError("element not found in the group table");
  return it->second;
}

GroupElement WeylGroup::element(ElementId x) const { return datum_->element_from_images(positive_images(x)); }

std::span<const std::uint8_t> WeylGroup::positive_images(ElementId x) const {
  const std::size_t nu = datum_->nu();
  return std::span<const std::uint8_t>(images_).subspan(static_cast<std::size_t>(x) * nu, nu);
}

std::vector<std::uint64_t> WeylGroup::length_distribution() const {
  std::vector<std::uint64_t> counts(datum_->nu() + 1, 0);
  for (std::uint8_t l : lengths_) ++counts[l];
  return counts;
}

}  // namespace heckepos
