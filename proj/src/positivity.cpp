#include "heckepos/positivity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "heckepos/errors.hpp"

namespace heckepos {

namespace {

QPoly trace_for_class(const std::shared_ptr<const WeylGroup>& group, ElementId w, const ClassifyOptions& options) {
  if (options.method == TraceMethod::direct) {
    TraceOptions trace_options;
    trace_options.threads = 1;
    return nww(group, w, w, trace_options).value;
  }
  return nww_averaged(*group, w, w, options.memory_budget).value;
}

bool multiset_contains(const CyclotomicLabel& big, const CyclotomicLabel& small) {
  std::map<unsigned, int> count;
  for (unsigned k : big) ++count[k];
  for (unsigned k : small) {
    if (--count[k] < 0) return false;
  }
  return true;
}

}  // namespace

Classification classify(std::shared_ptr<const WeylGroup> group, const ClassifyOptions& options) {
  Classification result;
  const RootDatum& datum = group->datum();
  result.ctype = datum.type();
  result.group_order = group->size();
  result.nu = datum.nu();
  result.coxeter_number = datum.coxeter_number();
  result.classes = conjugacy_classes(*group, options.class_options);

  const auto& records = result.classes.records();
  std::vector<QPoly> traces(records.size());

  // Classes are independent; the verdicts are assembled in class order afterwards.
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t k; (k = next.fetch_add(1)) < records.size();) {
        const ElementId w = records[k].representative;
        if (auto it = options.known_traces.find(group->reduced_word(w)); it != options.known_traces.end()) {
          try {
            validate_trace(*group, w, w, it->second);
            if (it->second.eval(1) == QPoly::Coeff(static_cast<unsigned long>(records[k].centralizer_order))) {
              traces[k] = it->second;
              continue;
            }
          } catch (const IntegrityError&) {
          }
          std::lock_guard lock(error_mutex);
          if (options.warn) options.warn("discarding an inconsistent stored trace for class #" + std::to_string(k));
        }
        traces[k] = trace_for_class(group, w, options);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(records.size());
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(records.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t k = 0; k < records.size(); ++k) {
    const ClassRecord& r = records[k];
    PositivityVerdict v;
    v.class_index = k;
    v.nww_poly = std::move(traces[k]);
    v.elliptic = r.elliptic;
    v.regular = r.regular_d.has_value();
    const bool trivial_class = r.size == 1 && r.representative == WeylGroup::identity();
    v.positive = !trivial_class && is_nonneg(v.nww_poly);

    const std::string where = result.ctype.name() + " class " + render_label(r.label) + " (#" + std::to_string(k) + ")";
    if (v.nww_poly.eval(1) != QPoly::Coeff(static_cast<unsigned long>(r.centralizer_order))) {
      throw IntegrityError(where + ": N^{w,w}(1) differs from the centralizer order");
    }
    if (!palindrome_signature(v.nww_poly, static_cast<int>(2 * r.min_length))) {
      throw IntegrityError(where + ": N^{w,w} is not palindromic");
    }
    if (v.regular && v.elliptic && !v.positive) {
      throw IntegrityError(where + ": regular elliptic class is not positive");
    }
    result.verdicts.push_back(std::move(v));
  }
  return result;
}

QPoly coxeter_fixture(const CoxeterType& ctype) {
  ctype.validate();
  const unsigned n = ctype.rank;
  auto from_pairs = [](std::initializer_list<std::pair<unsigned, long>> terms) {
    QPoly p;
    for (auto [power, c] : terms) p += QPoly::monomial(c, power);
    return p;
  };
  QPoly p;
  switch (ctype.family) {
    case Family::A:
      for (unsigned k = 0; k <= n; ++k) p += QPoly::monomial(1, 2 * k);
      return p;
    case Family::B:
      p = from_pairs({{2 * n, 1}, {0, 1}});
      for (unsigned k = 1; k < n; ++k) p += QPoly::monomial(2, 2 * k);
      return p;
    case Family::D:
      p = from_pairs({{2 * n, 1}, {2 * n - 2, 1}, {2, 1}, {0, 1}});
      for (unsigned k = 2; k + 2 <= n; ++k) p += QPoly::monomial(2, 2 * k);
      return p;
    case Family::E:
      if (n == 6) return from_pairs({{12, 1}, {10, 1}, {8, 2}, {6, 4}, {4, 2}, {2, 1}, {0, 1}});
      if (n == 7) return from_pairs({{14, 1}, {12, 1}, {10, 2}, {8, 4}, {7, 2}, {6, 4}, {4, 2}, {2, 1}, {0, 1}});
      return from_pairs(
          {{16, 1}, {14, 1}, {12, 2}, {10, 4}, {9, 2}, {8, 10}, {7, 2}, {6, 4}, {4, 2}, {2, 1}, {0, 1}});
    case Family::F:
      return from_pairs({{8, 1}, {6, 2}, {4, 6}, {2, 2}, {0, 1}});
    case Family::G:
      return from_pairs({{4, 1}, {2, 4}, {0, 1}});
  }
  throw ConfigurationError("no Coxeter-class closed form for type " + ctype.name());
}

std::optional<std::vector<std::string>> published_nonregular_positive(const CoxeterType& ctype) {
  using List = std::vector<std::string>;
  const std::string name = ctype.name();
  if (name == "E6" || name == "F4" || name == "G2") return List{};
  if (name == "E7") return List{"Φ12Φ6Φ2", "Φ10Φ6Φ2", "Φ10Φ2^3", "Φ8Φ4Φ2", "Φ4^2Φ2^3"};
  if (name == "E8") return List{"Φ18Φ6", "Φ18Φ2^2", "Φ9Φ3", "Φ14Φ2^2"};
  if (name == "B5") return List{"Φ8Φ2", "Φ6Φ2^2", "Φ4^2Φ2"};
  if (name == "B6") return List{"Φ10Φ2^2", "Φ8Φ4", "Φ8Φ2^2", "Φ6Φ2^3"};
  return std::nullopt;
}

ConjectureReport conjecture_checks(const Classification& result) {
  ConjectureReport report;
  for (const auto& v : result.verdicts) {
    if (v.positive && !v.elliptic) report.non_elliptic_positive.push_back(v.class_index);
  }
  if (result.ctype.family == Family::B) {
    const unsigned n = result.ctype.rank;
    for (unsigned k = 1; k * (k + 1) <= n; ++k) {
      if (k * (k + 1) != n) continue;
      // Negative cycles of lengths 2, 4, ..., 2k: char poly prod (q^{2j} + 1).
      QPoly target{1};
      for (unsigned j = 1; j <= k; ++j) target *= QPoly::monomial(1, 2 * j) + QPoly{1};
      ConjectureReport::CycleTypeCheck check;
      check.k = k;
      const auto& records = result.classes.records();
      for (std::size_t c = 0; c < records.size(); ++c) {
        if (records[c].char_poly == target) {
          if (check.class_index) throw IntegrityError("cycle type (4)(8)... matches more than one class");
          check.class_index = c;
          check.label = render_label(records[c].label);
          check.positive = result.verdicts[c].positive;
        }
      }
      report.cycle_type = check;
    }
  }
  return report;
}

PublishedComparison compare_to_published(const Classification& result) {
  PublishedComparison cmp;
  const auto& records = result.classes.records();
  for (const auto& v : result.verdicts) {
    if (v.positive && !(v.regular && v.elliptic)) cmp.computed.push_back(render_label(records[v.class_index].label));
  }
  const auto published = published_nonregular_positive(result.ctype);
  if (!published) return cmp;
  cmp.has_fixture = true;
  cmp.published = *published;

  std::vector<std::string> remaining = cmp.computed;
  const unsigned rank = result.ctype.rank;
  for (const std::string& text : cmp.published) {
    const CyclotomicLabel label = parse_label(text);
    const std::string canonical = render_label(label);
    const unsigned degree = label_degree(label);
    if (degree != rank) {
      cmp.anomalies.push_back({canonical, degree, std::nullopt});
      continue;
    }
    auto it = std::find(remaining.begin(), remaining.end(), canonical);
    if (it != remaining.end()) {
      cmp.matched.push_back(canonical);
      remaining.erase(it);
    } else {
      cmp.missing.push_back(canonical);
    }
  }
  for (auto& anomaly : cmp.anomalies) {
    const CyclotomicLabel label = parse_label(anomaly.published);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (multiset_contains(parse_label(remaining[i]), label)) hits.push_back(i);
    }
    if (hits.size() == 1) {
      anomaly.computed = remaining[hits.front()];
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(hits.front()));
    }
  }
  cmp.extra = std::move(remaining);
  return cmp;
}

}  // namespace heckepos
