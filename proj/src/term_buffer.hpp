#pragma once

// Fixed-width Hecke vector kernels shared by the trace routes.
//
// Every coefficient polynomial is stored in a row of `width` slots, so the
// rewrite rules become flat array loops. Two coefficient types are supported:
// checked int64 (fast path, throws ArithmeticError on overflow) and mpz_class.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "heckepos/errors.hpp"
#include "heckepos/qpoly.hpp"
#include "heckepos/weyl_group.hpp"

namespace heckepos::detail {

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<std::int64_t> {
  static void add(std::int64_t& a, std::int64_t b) {
    if (__builtin_add_overflow(a, b, &a)) throw ArithmeticError("int64 coefficient overflow");
  }
  static void sub(std::int64_t& a, std::int64_t b) {
    if (__builtin_sub_overflow(a, b, &a)) throw ArithmeticError("int64 coefficient overflow");
  }
  static void mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) {
    std::int64_t p;
    if (__builtin_mul_overflow(a, b, &p)) throw ArithmeticError("int64 coefficient overflow");
    add(acc, p);
  }
  static bool is_zero(std::int64_t a) { return a == 0; }
  static QPoly::Coeff to_mpz(std::int64_t a) { return QPoly::Coeff(static_cast<long>(a)); }
};

template <>
struct CoeffOps<mpz_class> {
  static void add(mpz_class& a, const mpz_class& b) { a += b; }
  static void sub(mpz_class& a, const mpz_class& b) { a -= b; }
  static void mul_add(mpz_class& acc, const mpz_class& a, const mpz_class& b) { mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
  static bool is_zero(const mpz_class& a) { return a == 0; }
  static const QPoly::Coeff& to_mpz(const mpz_class& a) { return a; }
};

/// Sparse set of (element id, fixed-width polynomial) rows over one group.
template <class C>
class TermBuffer {
 public:
  using Ops = CoeffOps<C>;

  TermBuffer(std::size_t group_size, std::size_t width) : width_(width), slot_(group_size, -1) {}

  std::size_t width() const { return width_; }
  std::size_t num_terms() const { return ids_.size(); }
  ElementId id(std::size_t t) const { return ids_[t]; }
  const C* row(std::size_t t) const { return coeffs_.data() + t * width_; }
  C* row(std::size_t t) { return coeffs_.data() + t * width_; }

  const C* find(ElementId x) const {
    const std::int32_t s = slot_[x];
    return s < 0 ? nullptr : row(static_cast<std::size_t>(s));
  }

  /// Row for x, inserted as zero if absent. Invalidates earlier row pointers.
  C* row_for(ElementId x) {
    std::int32_t s = slot_[x];
    if (s >= 0) return row(static_cast<std::size_t>(s));
    s = static_cast<std::int32_t>(ids_.size());
    slot_[x] = s;
    ids_.push_back(x);
    const std::size_t need = ids_.size() * width_;
    if (coeffs_.size() < need) coeffs_.resize(std::max(need, coeffs_.size() * 2));
    C* r = row(static_cast<std::size_t>(s));
    std::fill(r, r + width_, C(0));
    return r;
  }

  void clear() {
    for (ElementId x : ids_) slot_[x] = -1;
    ids_.clear();
  }

  void set_basis(ElementId x) {
    clear();
    row_for(x)[0] = C(1);
  }

  std::size_t bytes() const { return slot_.size() * sizeof(std::int32_t) + coeffs_.capacity() * sizeof(C); }

 private:
  std::size_t width_;
  std::vector<std::int32_t> slot_;
  std::vector<ElementId> ids_;
  std::vector<C> coeffs_;
};

template <class C>
void check_room(const C* p, std::size_t width, std::size_t shift) {
  for (std::size_t k = width - shift; k < width; ++k) {
    if (!CoeffOps<C>::is_zero(p[k])) throw IntegrityError("Hecke kernel: degree bound exceeded");
  }
}

/// dst += q^shift * src
template <class C>
void add_shifted(C* dst, const C* src, std::size_t width, std::size_t shift) {
  check_room(src, width, shift);
  for (std::size_t k = 0; k + shift < width; ++k) CoeffOps<C>::add(dst[k + shift], src[k]);
}

template <class C>
void subtract(C* dst, const C* src, std::size_t width) {
  for (std::size_t k = 0; k < width; ++k) CoeffOps<C>::sub(dst[k], src[k]);
}

/// Rewrite of one term under multiplication by T_s: when the length goes up,
/// T_x -> T_y; otherwise T_x -> q T_y + (q - 1) T_x, where y = xs or sx.
template <class C>
void rewrite_term(const WeylGroup& g, ElementId x, ElementId y, const C* p, TermBuffer<C>& dst) {
  const std::size_t w = dst.width();
  if (g.length(y) > g.length(x)) {
    add_shifted(dst.row_for(y), p, w, 0);
  } else {
    add_shifted(dst.row_for(y), p, w, 1);
    C* rx = dst.row_for(x);
    add_shifted(rx, p, w, 1);
    subtract(rx, p, w);
  }
}

/// dst = T_{s_i} src
template <class C>
void apply_left_gen(const WeylGroup& g, unsigned i, const TermBuffer<C>& src, TermBuffer<C>& dst) {
  dst.clear();
  for (std::size_t t = 0; t < src.num_terms(); ++t) {
    const ElementId x = src.id(t);
    rewrite_term(g, x, g.left_mul(i, x), src.row(t), dst);
  }
}

/// dst = src T_{s_i}
template <class C>
void apply_right_gen(const WeylGroup& g, unsigned i, const TermBuffer<C>& src, TermBuffer<C>& dst) {
  dst.clear();
  for (std::size_t t = 0; t < src.num_terms(); ++t) {
    const ElementId x = src.id(t);
    rewrite_term(g, x, g.right_mul(x, i), src.row(t), dst);
  }
}

/// dst = R^t src, R the right multiplication by T_{s_i} and ^t the transpose
/// with respect to the T-basis pairing <T_x, T_z> = delta_{x,z}.
template <class C>
void apply_right_gen_transposed(const WeylGroup& g, unsigned i, const TermBuffer<C>& src, TermBuffer<C>& dst) {
  dst.clear();
  const std::size_t w = dst.width();
  for (std::size_t t = 0; t < src.num_terms(); ++t) {
    const ElementId z = src.id(t);
    const ElementId zs = g.right_mul(z, i);
    const C* p = src.row(t);
    if (g.length(zs) < g.length(z)) {
      add_shifted(dst.row_for(zs), p, w, 0);
      C* rz = dst.row_for(z);
      add_shifted(rz, p, w, 1);
      subtract(rz, p, w);
    } else {
      add_shifted(dst.row_for(zs), p, w, 1);
    }
  }
}

/// out += sum_x a_x * b_x (polynomial products); out has a.width + b.width - 1 slots.
template <class C>
void accumulate_pairing(const TermBuffer<C>& a, const TermBuffer<C>& b, C* out) {
  const std::size_t wa = a.width(), wb = b.width();
  for (std::size_t t = 0; t < a.num_terms(); ++t) {
    const C* pb = b.find(a.id(t));
    if (pb == nullptr) continue;
    const C* pa = a.row(t);
    for (std::size_t i = 0; i < wa; ++i) {
      if (CoeffOps<C>::is_zero(pa[i])) continue;
      for (std::size_t j = 0; j < wb; ++j) CoeffOps<C>::mul_add(out[i + j], pa[i], pb[j]);
    }
  }
}

template <class C>
QPoly to_qpoly(std::span<const C> coeffs) {
  std::vector<QPoly::Coeff> out;
  out.reserve(coeffs.size());
  for (const C& c : coeffs) out.emplace_back(CoeffOps<C>::to_mpz(c));
  return QPoly(std::move(out));
}

}  // namespace heckepos::detail
