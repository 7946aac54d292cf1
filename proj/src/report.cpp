#include "heckepos/report.hpp"

#include <algorithm>
#include <sstream>

#include "heckepos/errors.hpp"
#include "heckepos/persist.hpp"

namespace heckepos {

using nlohmann::ordered_json;

namespace {

ordered_json poly_doc(const QPoly& p) { return ordered_json::parse(poly_to_json(p).dump()); }

bool is_poly(const ordered_json& v) { return v.is_object() && v.size() == 1 && v.contains("coeffs"); }

std::string cell_text(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (is_poly(v)) return poly_from_json(nlohmann::json::parse(v.dump())).to_string();
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) {
      if (!out.empty()) out += ' ';
      out += cell_text(x);
    }
    return out;
  }
  return v.dump();
}

// Display width of UTF-8 text.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const std::string& prefix, const ordered_json& v, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object() && !is_poly(v)) {
    for (const auto& [key, value] : v.items()) flatten(prefix.empty() ? key : prefix + "." + key, value, out);
    return;
  }
  if (v.is_array() && !v.empty() && v.front().is_object() && !is_poly(v.front())) {
    for (std::size_t k = 0; k < v.size(); ++k) flatten(prefix + "[" + std::to_string(k) + "]", v[k], out);
    return;
  }
  std::string text = cell_text(v);
  if (v.is_array() && v.empty()) text = "none";
  out.emplace_back(prefix, text);
}

ordered_json header(const std::string& kind, const CoxeterType& ctype) {
  return ordered_json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"ctype", ctype.name()}};
}

ordered_json class_row(const WeylGroup& group, const ClassTable& table, std::size_t k) {
  const ClassRecord& r = table[k];
  ordered_json row;
  row["class"] = k;
  row["label"] = render_label(r.label);
  row["representative"] = word_string(group.reduced_word(r.representative));
  row["min_length"] = r.min_length;
  row["size"] = r.size;
  row["min_count"] = r.min_count;
  row["order"] = r.order;
  row["elliptic"] = r.elliptic;
  row["regular_d"] = r.regular_d ? ordered_json(*r.regular_d) : ordered_json(nullptr);
  row["centralizer_order"] = r.centralizer_order;
  return row;
}

ordered_json columns_of(const ordered_json& rows, std::initializer_list<const char*> fallback) {
  ordered_json cols = ordered_json::array();
  if (!rows.empty()) {
    for (const auto& [key, value] : rows.front().items()) cols.push_back(key);
  } else {
    for (const char* c : fallback) cols.push_back(c);
  }
  return cols;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw UsageError("unknown format '" + name + "' (expected text, json or csv)");
}

std::string word_string(const std::vector<unsigned>& word) {
  std::string out;
  for (unsigned i : word) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out;
}

std::vector<unsigned> parse_word(const std::string& text, unsigned rank) {
  std::vector<unsigned> word;
  if (text.empty() || text == "e") return word;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty() || piece.size() > 3 || !std::all_of(piece.begin(), piece.end(), ::isdigit)) {
      throw UsageError("bad element word '" + text + "': expected comma-separated indices like 1,2,1");
    }
    const unsigned letter = static_cast<unsigned>(std::stoul(piece));
    if (letter < 1 || letter > rank) {
      throw UsageError("bad element word '" + text + "': index " + piece + " outside 1.." + std::to_string(rank));
    }
    word.push_back(letter - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return word;
}

Document roots_document(const RootDatum& datum) {
  Document doc = header("roots", datum.type());
  doc["rank"] = datum.rank();
  doc["nu"] = datum.nu();
  ordered_json cartan = ordered_json::array();
  for (const auto& row : datum.cartan()) cartan.push_back(row);
  doc["cartan"] = cartan;
  ordered_json rows = ordered_json::array();
  for (std::size_t k = 0; k < datum.nu(); ++k) {
    const auto& c = datum.root(k);
    int height = 0;
    for (int x : c) height += x;
    rows.push_back(ordered_json{{"index", k + 1}, {"height", height}, {"coordinates", c}});
  }
  doc["columns"] = columns_of(rows, {"index", "height", "coordinates"});
  doc["rows"] = std::move(rows);
  return doc;
}

Document elements_document(const WeylGroup& group) {
  Document doc = header("elements", group.datum().type());
  doc["order"] = group.size();
  doc["length_distribution"] = group.length_distribution();
  ordered_json rows = ordered_json::array();
  for (ElementId x = 0; x < group.size(); ++x) {
    rows.push_back(ordered_json{{"id", x}, {"length", group.length(x)}, {"word", word_string(group.reduced_word(x))}});
  }
  doc["columns"] = columns_of(rows, {"id", "length", "word"});
  doc["rows"] = std::move(rows);
  return doc;
}

Document classes_document(const WeylGroup& group, const ClassTable& table) {
  Document doc = header("classes", group.datum().type());
  doc["group_order"] = group.size();
  ordered_json rows = ordered_json::array();
  for (std::size_t k = 0; k < table.size(); ++k) rows.push_back(class_row(group, table, k));
  doc["columns"] = columns_of(rows, {});
  doc["rows"] = std::move(rows);
  doc["summary"] = ordered_json{{"classes", table.size()}};
  return doc;
}

CoxeterCheck coxeter_check(const WeylGroup& group, const Classification& result) {
  std::vector<unsigned> word(group.rank());
  for (unsigned i = 0; i < group.rank(); ++i) word[i] = i;
  CoxeterCheck check;
  check.class_index = result.classes.class_of(group.from_word(word));
  check.computed = result.verdicts[check.class_index].nww_poly;
  check.fixture = coxeter_fixture(result.ctype);
  return check;
}

namespace {

ordered_json comparison_summary(const PublishedComparison& cmp) {
  ordered_json s;
  s["published_list"] = cmp.has_fixture ? ordered_json(cmp.published) : ordered_json(nullptr);
  s["computed_list"] = cmp.computed;
  if (!cmp.has_fixture) return s;
  s["matched"] = cmp.matched;
  ordered_json anomalies = ordered_json::array();
  for (const auto& a : cmp.anomalies) {
    anomalies.push_back(ordered_json{{"published", a.published},
                                     {"published_degree", a.published_degree},
                                     {"computed", a.computed ? ordered_json(*a.computed) : ordered_json(nullptr)}});
  }
  s["label_anomalies"] = std::move(anomalies);
  s["missing"] = cmp.missing;
  s["computed_only"] = cmp.extra;
  s["confirmed"] = cmp.ok();
  return s;
}

ordered_json classification_summary(const WeylGroup& group, const Classification& result) {
  const CoxeterCheck cox = coxeter_check(group, result);
  const ConjectureReport conj = conjecture_checks(result);
  const PublishedComparison cmp = compare_to_published(result);
  std::size_t positive = 0;
  for (const auto& v : result.verdicts) positive += v.positive ? 1 : 0;

  ordered_json s;
  s["classes"] = result.verdicts.size();
  s["positive"] = positive;
  s["coxeter_class"] = ordered_json{{"class", cox.class_index},
                                    {"computed", poly_doc(cox.computed)},
                                    {"closed_form", poly_doc(cox.fixture)},
                                    {"matched", cox.matched()}};
  ordered_json non_elliptic = ordered_json::array();
  for (std::size_t k : conj.non_elliptic_positive) non_elliptic.push_back(render_label(result.classes[k].label));
  s["positive_not_elliptic"] = std::move(non_elliptic);
  if (conj.cycle_type) {
    const auto& c = *conj.cycle_type;
    s["cycle_type_check"] = ordered_json{{"k", c.k},
                                         {"label", c.label},
                                         {"class", c.class_index ? ordered_json(*c.class_index) : ordered_json(nullptr)},
                                         {"positive", c.positive}};
  }
  s["published_comparison"] = comparison_summary(cmp);
  return s;
}

ordered_json classification_header(const std::string& kind, const Classification& result) {
  ordered_json doc = header(kind, result.ctype);
  doc["group_order"] = result.group_order;
  doc["nu"] = result.nu;
  doc["coxeter_number"] = result.coxeter_number;
  return doc;
}

}  // namespace

Document positive_document(const WeylGroup& group, const Classification& result) {
  Document doc = classification_header("positive", result);
  ordered_json rows = ordered_json::array();
  for (const auto& v : result.verdicts) {
    ordered_json row = class_row(group, result.classes, v.class_index);
    row["positive"] = v.positive;
    row["nww"] = poly_doc(v.nww_poly);
    rows.push_back(std::move(row));
  }
  doc["columns"] = columns_of(rows, {});
  doc["rows"] = std::move(rows);
  doc["summary"] = classification_summary(group, result);
  return doc;
}

Document report_document(const WeylGroup& group, const Classification& result) {
  Document doc = classification_header("report", result);
  const PublishedComparison cmp = compare_to_published(result);
  const unsigned rank = result.ctype.rank;
  ordered_json rows = ordered_json::array();
  auto add = [&](const std::string& published, const std::string& computed, const std::string& status) {
    rows.push_back(ordered_json{{"published", published}, {"computed", computed}, {"status", status}});
  };
  if (cmp.has_fixture) {
    for (const std::string& text : cmp.published) {
      const std::string canonical = render_label(parse_label(text));
      if (std::find(cmp.matched.begin(), cmp.matched.end(), canonical) != cmp.matched.end()) {
        add(canonical, canonical, "match");
        continue;
      }
      auto a = std::find_if(cmp.anomalies.begin(), cmp.anomalies.end(),
                            [&](const auto& x) { return x.published == canonical; });
      if (a != cmp.anomalies.end()) {
        add(canonical, a->computed.value_or(""),
            "published label anomaly: degree " + std::to_string(a->published_degree) + " but rank " + std::to_string(rank));
      } else {
        add(canonical, "", "missing");
      }
    }
    for (const std::string& e : cmp.extra) add("", e, "computed only");
  } else {
    for (const std::string& e : cmp.computed) add("", e, "no published list");
  }
  doc["columns"] = columns_of(rows, {"published", "computed", "status"});
  doc["rows"] = std::move(rows);
  doc["summary"] = classification_summary(group, result);
  return doc;
}

Document nww_document(const WeylGroup& group, ElementId w, ElementId w_prime, const QPoly& value) {
  Document doc = header("nww", group.datum().type());
  doc["w"] = word_string(group.reduced_word(w));
  doc["w_prime"] = word_string(group.reduced_word(w_prime));
  doc["length_w"] = group.length(w);
  doc["length_w_prime"] = group.length(w_prime);
  doc["nww"] = poly_doc(value);
  doc["at_one"] = value.eval(1).get_str();
  return doc;
}

std::string render(const Document& doc, Format format) {
  if (format == Format::json) return doc.dump(2) + "\n";

  std::vector<std::string> columns;
  if (doc.contains("columns")) {
    for (const auto& c : doc["columns"]) columns.push_back(c.get<std::string>());
  }
  std::vector<std::vector<std::string>> cells;
  if (doc.contains("rows")) {
    for (const auto& row : doc["rows"]) {
      std::vector<std::string> line;
      for (const auto& c : columns) line.push_back(cell_text(row.contains(c) ? row[c] : ordered_json(nullptr)));
      cells.push_back(std::move(line));
    }
  }

  std::ostringstream out;
  if (format == Format::csv) {
    if (columns.empty()) {
      // Tableless documents: one key,value line per header field.
      std::vector<std::pair<std::string, std::string>> fields;
      flatten("", doc, fields);
      out << "key,value\n";
      for (const auto& [k, v] : fields) out << csv_field(k) << ',' << csv_field(v) << '\n';
      return out.str();
    }
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_field(columns[c]);
    out << '\n';
    for (const auto& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c) out << (c ? "," : "") << csv_field(line[c]);
      out << '\n';
    }
    return out.str();
  }

  std::vector<std::pair<std::string, std::string>> head;
  for (const auto& [key, value] : doc.items()) {
    if (key == "columns" || key == "rows" || key == "summary") continue;
    flatten(key, value, head);
  }
  for (const auto& [k, v] : head) out << k << ": " << v << '\n';
  if (!columns.empty()) {
    std::vector<std::size_t> w(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      w[c] = width(columns[c]);
      for (const auto& line : cells) w[c] = std::max(w[c], width(line[c]));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      std::string text;
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (c) text += "  ";
        text += line[c];
        if (c + 1 < line.size()) text.append(w[c] - width(line[c]), ' ');
      }
      out << '\n' << text;
    };
    emit(columns);
    std::vector<std::string> rule;
    for (std::size_t c = 0; c < columns.size(); ++c) rule.emplace_back(w[c], '-');
    emit(rule);
    for (const auto& line : cells) emit(line);
    out << '\n';
  }
  if (doc.contains("summary")) {
    std::vector<std::pair<std::string, std::string>> tail;
    flatten("", doc["summary"], tail);
    out << '\n';
    for (const auto& [k, v] : tail) out << k << ": " << v << '\n';
  }
  return out.str();
}

}  // namespace heckepos
