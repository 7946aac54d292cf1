#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "heckepos/classes.hpp"
#include "heckepos/positivity.hpp"
#include "heckepos/weyl_group.hpp"

namespace heckepos {

/// Outcome of one verification; `detail` names the first failure or summarizes the cases.
struct CheckResult {
  std::string name;
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;
};

using ElementPair = std::pair<ElementId, ElementId>;

/// Every ordered pair of elements.
std::vector<ElementPair> all_pairs(const WeylGroup& group);
/// `count` pairs drawn uniformly with a fixed seed.
std::vector<ElementPair> random_pairs(const WeylGroup& group, std::size_t count, unsigned seed);

/// N^{w,w'}(1) = #{y : w y = y w'}. With `all`, pairs are ignored and every
/// pair is covered one column at a time; otherwise each pair uses the chunked sum.
CheckResult check_q_one(std::shared_ptr<const WeylGroup> group, const std::vector<ElementPair>& pairs, bool all);

/// For each pair: degree at most |w|+|w'|, top coefficient equal to the
/// descent-set count and positive, top coefficient 1 when either support is
/// all of S, and f_i = (-1)^n f_{n-i}.
CheckResult check_trace_properties(std::shared_ptr<const WeylGroup> group, const std::vector<ElementPair>& pairs);

/// Degree and leading-coefficient statements for every structure constant of
/// T_a T_{a'}, in both the a-degree and the a'-degree forms.
CheckResult check_phi_bounds(std::shared_ptr<const WeylGroup> group);

/// N^{w,w} agrees for every minimal-length w in each class.
CheckResult check_cmin_constancy(std::shared_ptr<const WeylGroup> group, const ClassTable& table);

/// N^{w,w}(1) = |W| / |C| and |C| * centralizer = |W| for every class.
CheckResult check_centralizers(const Classification& result);

/// N^{w,w} of the Coxeter class equals the closed form.
CheckResult check_coxeter_class(const WeylGroup& group, const Classification& result);

/// Every regular elliptic class is positive, and every d has its class.
CheckResult check_regular_positive(const Classification& result);

/// Power identities of regular classes (see power_identity_checks).
CheckResult check_power_identities(std::shared_ptr<const WeylGroup> group, const ClassTable& table);

/// The invariant suite on one type: everything above on all pairs.
std::vector<CheckResult> selftest_suite(const CoxeterType& ctype, unsigned threads = 1);

}  // namespace heckepos
