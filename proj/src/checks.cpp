#include "heckepos/checks.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "heckepos/errors.hpp"
#include "heckepos/hecke.hpp"
#include "heckepos/report.hpp"
#include "heckepos/trace.hpp"

namespace heckepos {

namespace {

std::string pair_text(const WeylGroup& g, ElementId w, ElementId w_prime) {
  return "(" + word_string(g.reduced_word(w)) + " | " + word_string(g.reduced_word(w_prime)) + ")";
}

void fail(CheckResult& r, const std::string& what) {
  if (r.ok) r.detail = what;
  r.ok = false;
}

void finish(CheckResult& r) {
  if (r.ok) r.detail = std::to_string(r.cases) + " cases";
}

}  // namespace

std::vector<ElementPair> all_pairs(const WeylGroup& group) {
  std::vector<ElementPair> out;
  out.reserve(group.size() * group.size());
  for (ElementId w = 0; w < group.size(); ++w) {
    for (ElementId v = 0; v < group.size(); ++v) out.emplace_back(w, v);
  }
  return out;
}

std::vector<ElementPair> random_pairs(const WeylGroup& group, std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(group.size() - 1));
  std::vector<ElementPair> out;
  for (std::size_t k = 0; k < count; ++k) {
    const ElementId w = pick(rng);
    out.emplace_back(w, pick(rng));
  }
  return out;
}

CheckResult check_q_one(std::shared_ptr<const WeylGroup> group, const std::vector<ElementPair>& pairs, bool all) {
  const WeylGroup& g = *group;
  CheckResult r;
  r.name = "N^{w,w'}(1) = #{y : wy = yw'}";
  if (all) {
    for (ElementId v = 0; v < g.size(); ++v) {
      const auto column = nww_column(g, v);
      for (ElementId w = 0; w < g.size(); ++w) {
        ++r.cases;
        if (column[w].eval(1) != QPoly::Coeff(static_cast<unsigned long>(commuting_count(g, w, v)))) {
          fail(r, "mismatch at " + pair_text(g, w, v));
        }
      }
    }
  } else {
    for (auto [w, v] : pairs) {
      ++r.cases;
      const QPoly p = nww(group, w, v).value;
      if (p.eval(1) != QPoly::Coeff(static_cast<unsigned long>(commuting_count(g, w, v)))) {
        fail(r, "mismatch at " + pair_text(g, w, v));
      }
    }
  }
  finish(r);
  return r;
}

CheckResult check_trace_properties(std::shared_ptr<const WeylGroup> group, const std::vector<ElementPair>& pairs) {
  const WeylGroup& g = *group;
  CheckResult r;
  r.name = "degree, leading coefficient, full-support and palindromic properties";
  std::map<ElementId, std::vector<QPoly>> columns;
  const GenSet full = GenSet::full(g.rank());
  for (auto [w, v] : pairs) {
    ++r.cases;
    auto it = columns.find(v);
    if (it == columns.end()) it = columns.emplace(v, nww_column(g, v)).first;
    const QPoly& p = it->second[w];
    const int n = static_cast<int>(g.length(w) + g.length(v));
    const std::string where = pair_text(g, w, v);
    if (!p.degree() || *p.degree() > n) {
      fail(r, "degree above |w|+|w'| at " + where);
      continue;
    }
    const auto top = p.coefficient(static_cast<std::size_t>(n));
    if (top <= 0 || top != QPoly::Coeff(static_cast<unsigned long>(top_coeff_count(g, w, v)))) {
      fail(r, "leading coefficient differs from the descent count at " + where);
    }
    if ((g.support(w) == full || g.support(v) == full) && top != 1) {
      fail(r, "leading coefficient is not 1 with full support at " + where);
    }
    if (!palindrome_signature(p, n)) fail(r, "not palindromic at " + where);
  }
  finish(r);
  return r;
}

CheckResult check_phi_bounds(std::shared_ptr<const WeylGroup> group) {
  const WeylGroup& g = *group;
  CheckResult r;
  r.name = "bounds on the structure constants of T_a T_a'";
  for (ElementId a = 0; a < g.size(); ++a) {
    for (ElementId a2 = 0; a2 < g.size(); ++a2) {
      const HeckeElt prod = mul_basis(group, a, a2);
      const unsigned la = g.length(a);
      const unsigned la2 = g.length(a2);
      for (ElementId b = 0; b < g.size(); ++b) {
        ++r.cases;
        const QPoly p = prod.coefficient(b);
        const std::string where = "a=" + word_string(g.reduced_word(a)) + " a'=" + word_string(g.reduced_word(a2)) +
                                  " b=" + word_string(g.reduced_word(b));
        if (p.degree() && (*p.degree() > static_cast<int>(la) || *p.degree() > static_cast<int>(la2))) {
          fail(r, "degree bound fails at " + where);
          continue;
        }
        // Top coefficient in |a|.
        const auto ta = p.coefficient(la);
        const bool case_a = b == a2 && g.support(a).subset_of(g.left_descents(a2));
        if (ta < 0) fail(r, "negative coefficient at |a| for " + where);
        if (ta != 0 && !case_a && !(g.length(b) < la2)) fail(r, "nonzero coefficient at |a| outside the cases for " + where);
        if (case_a && ta != 1) fail(r, "coefficient at |a| is not 1 for " + where);
        // Top coefficient in |a'|, with the right descents of a.
        const auto tb = p.coefficient(la2);
        const bool case_b = b == a && g.support(a2).subset_of(g.right_descents(a));
        if (tb < 0) fail(r, "negative coefficient at |a'| for " + where);
        if (tb != 0 && !case_b && !(g.length(b) < la)) fail(r, "nonzero coefficient at |a'| outside the cases for " + where);
        if (case_b && tb != 1) fail(r, "coefficient at |a'| is not 1 for " + where);
      }
    }
  }
  finish(r);
  return r;
}

CheckResult check_cmin_constancy(std::shared_ptr<const WeylGroup> group, const ClassTable& table) {
  const WeylGroup& g = *group;
  CheckResult r;
  r.name = "N^{w,w} constant on the minimal-length elements of each class";
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto& mins = table.min_elements(k);
    const QPoly first = nww_averaged(g, mins.front(), mins.front()).value;
    for (std::size_t j = 1; j < mins.size(); ++j) {
      ++r.cases;
      if (nww_averaged(g, mins[j], mins[j]).value != first) {
        fail(r, "class " + render_label(table[k].label) + " differs at " + word_string(g.reduced_word(mins[j])));
      }
    }
  }
  finish(r);
  return r;
}

CheckResult check_centralizers(const Classification& result) {
  CheckResult r;
  r.name = "N^{w,w}(1) = |W| / |C|";
  for (const auto& v : result.verdicts) {
    ++r.cases;
    const ClassRecord& c = result.classes[v.class_index];
    if (c.size * c.centralizer_order != result.group_order) fail(r, "class size times centralizer is not |W|");
    if (v.nww_poly.eval(1) * static_cast<unsigned long>(c.size) != static_cast<unsigned long>(result.group_order)) {
      fail(r, "class " + render_label(c.label) + ": value at 1 is not the centralizer order");
    }
  }
  finish(r);
  return r;
}

CheckResult check_coxeter_class(const WeylGroup& group, const Classification& result) {
  CheckResult r;
  r.name = "Coxeter class against its closed form";
  const CoxeterCheck c = coxeter_check(group, result);
  r.cases = 1;
  r.ok = c.matched();
  r.detail = "computed " + c.computed.to_string() + (r.ok ? " = " : " != ") + c.fixture.to_string();
  return r;
}

CheckResult check_regular_positive(const Classification& result) {
  CheckResult r;
  r.name = "regular elliptic classes are positive";
  std::set<unsigned> found;
  for (const auto& v : result.verdicts) {
    const ClassRecord& c = result.classes[v.class_index];
    if (!c.regular_d) continue;
    ++r.cases;
    found.insert(*c.regular_d);
    if (!v.positive) fail(r, "C^" + std::to_string(*c.regular_d) + " is not positive");
  }
  if (found != regular_d_set(result.ctype)) fail(r, "not every regular degree has a class");
  if (r.ok) {
    std::ostringstream s;
    s << "d in {";
    bool first = true;
    for (unsigned d : found) {
      s << (first ? "" : ",") << d;
      first = false;
    }
    s << "}";
    r.detail = s.str();
  }
  return r;
}

CheckResult check_power_identities(std::shared_ptr<const WeylGroup> group, const ClassTable& table) {
  CheckResult r;
  r.name = "power identities of regular elements";
  try {
    const PowerIdentityReport report = power_identity_checks(group, table);
    r.cases = report.checks.size();
    finish(r);
  } catch (const IntegrityError& e) {
    fail(r, e.what());
  }
  return r;
}

std::vector<CheckResult> selftest_suite(const CoxeterType& ctype, unsigned threads) {
  auto group = WeylGroup::enumerate(ctype);
  ClassifyOptions options;
  options.threads = threads;
  const Classification result = classify(group, options);
  const auto pairs = all_pairs(*group);
  std::vector<CheckResult> out;
  out.push_back(check_q_one(group, pairs, true));
  out.push_back(check_trace_properties(group, pairs));
  out.push_back(check_phi_bounds(group));
  out.push_back(check_cmin_constancy(group, result.classes));
  out.push_back(check_centralizers(result));
  out.push_back(check_coxeter_class(*group, result));
  out.push_back(check_regular_positive(result));
  out.push_back(check_power_identities(group, result.classes));
  for (auto& r : out) r.name = ctype.name() + ": " + r.name;
  return out;
}

}  // namespace heckepos
