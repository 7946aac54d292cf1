#pragma once

#include <string>

#include <json.hpp>

#include "heckepos/classes.hpp"
#include "heckepos/positivity.hpp"
#include "heckepos/root_system.hpp"
#include "heckepos/weyl_group.hpp"

namespace heckepos {

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

/// Report document: header fields, then "columns" and "rows" (a table whose
/// row objects carry exactly the listed keys), then an optional "summary".
/// Polynomials appear as {"coeffs":[...]}.
using Document = nlohmann::ordered_json;

/// 1-based comma-separated reduced word; "" for the identity.
std::string word_string(const std::vector<unsigned>& word);
/// Parses "1,2,1" into 0-based letters; "" and "e" give the identity.
/// Throws UsageError on anything else or on letters outside 1..rank.
std::vector<unsigned> parse_word(const std::string& text, unsigned rank);

Document roots_document(const RootDatum& datum);
Document elements_document(const WeylGroup& group);
Document classes_document(const WeylGroup& group, const ClassTable& table);

/// Result of comparing the Coxeter class to its closed form.
struct CoxeterCheck {
  std::size_t class_index = 0;
  QPoly computed;
  QPoly fixture;
  bool matched() const { return computed == fixture; }
};
CoxeterCheck coxeter_check(const WeylGroup& group, const Classification& result);

/// Every class with its trace and verdict; the summary carries the Coxeter
/// check, the conjecture checks and the comparison with the published list.
Document positive_document(const WeylGroup& group, const Classification& result);
/// The comparison with the published list as a table, one row per entry.
Document report_document(const WeylGroup& group, const Classification& result);
Document nww_document(const WeylGroup& group, ElementId w, ElementId w_prime, const QPoly& value);

/// Deterministic rendering: json is pretty-printed, csv holds the table only,
/// text has the header, an aligned table and the summary.
std::string render(const Document& doc, Format format);

}  // namespace heckepos
