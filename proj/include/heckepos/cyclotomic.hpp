#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heckepos/qpoly.hpp"

namespace heckepos {

/// The k-th cyclotomic polynomial. Results are memoized; safe to call concurrently.
const QPoly& cyclotomic(unsigned k);

/// Euler's totient, i.e. the degree of the k-th cyclotomic polynomial.
unsigned euler_phi(unsigned k);

/// Positive divisors of m in increasing order.
std::vector<unsigned> divisors(unsigned m);

/// Multiset of cyclotomic indices, kept sorted in decreasing order.
using CyclotomicLabel = std::vector<unsigned>;

/// Writes p as a product of cyclotomic polynomials whose indices divide m.
///
/// Trial division by the admissible factors, largest degree first. Throws
/// NotCyclotomicProduct if a nontrivial residual remains.
CyclotomicLabel factor_cyclotomic(const QPoly& p, unsigned m);

/// Product of the cyclotomic polynomials named by the label.
QPoly label_product(const CyclotomicLabel& label);

/// Sum of totients, the degree of label_product.
unsigned label_degree(const CyclotomicLabel& label);

/// "Φ8Φ2", "Φ6Φ2^2"; the empty label renders as "1".
std::string render_label(const CyclotomicLabel& label);

/// Inverse of render_label. Throws UsageError on malformed text.
CyclotomicLabel parse_label(std::string_view text);

}  // namespace heckepos
