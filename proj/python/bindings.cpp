#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heckepos/errors.hpp"
#include "heckepos/positivity.hpp"
#include "heckepos/report.hpp"
#include "heckepos/trace.hpp"

namespace py = pybind11;
namespace hp = heckepos;

namespace {

// Coefficients as Python ints, constant term first.
py::list coeffs(const hp::QPoly& p) {
  py::list out;
  const auto deg = p.degree();
  if (!deg) return out;
  for (int i = 0; i <= *deg; ++i) out.append(py::int_(py::str(p.coefficient(static_cast<std::size_t>(i)).get_str())));
  return out;
}

std::shared_ptr<const hp::WeylGroup> group_of(const std::string& type, bool allow_huge) {
  hp::EnumerationOptions options;
  options.allow_huge = allow_huge;
  return hp::WeylGroup::enumerate(hp::CoxeterType::parse(type), options);
}

std::vector<unsigned> letters(const hp::WeylGroup& g, const std::vector<unsigned>& word) {
  std::vector<unsigned> out;
  for (unsigned s : word) {
    if (s < 1 || s > g.rank()) throw hp::UsageError("index " + std::to_string(s) + " outside 1.." + std::to_string(g.rank()));
    out.push_back(s - 1);
  }
  return out;
}

std::vector<unsigned> one_based(std::vector<unsigned> word) {
  for (auto& s : word) ++s;
  return word;
}

class PyGroup {
 public:
  PyGroup(const std::string& type, bool allow_huge) : g_(group_of(type, allow_huge)) {}

  std::string type() const { return g_->datum().type().name(); }
  std::size_t size() const { return g_->size(); }
  unsigned rank() const { return g_->rank(); }
  unsigned nu() const { return g_->datum().nu(); }
  unsigned coxeter_number() const { return g_->datum().coxeter_number(); }
  unsigned length(const std::vector<unsigned>& word) const { return g_->length(id(word)); }
  std::vector<unsigned> reduced_word(const std::vector<unsigned>& word) const {
    return one_based(g_->reduced_word(id(word)));
  }
  py::list nww(const std::vector<unsigned>& w, const std::optional<std::vector<unsigned>>& w_prime) const {
    const hp::ElementId a = id(w);
    const hp::ElementId b = w_prime ? id(*w_prime) : a;
    py::gil_scoped_release release;
    hp::QPoly value = hp::nww(g_, a, b).value;
    py::gil_scoped_acquire acquire;
    return coeffs(value);
  }

  const std::shared_ptr<const hp::WeylGroup>& group() const { return g_; }

 private:
  hp::ElementId id(const std::vector<unsigned>& word) const { return g_->from_word(letters(*g_, word)); }

  std::shared_ptr<const hp::WeylGroup> g_;
};

py::list classify(const std::string& type, unsigned threads) {
  auto g = group_of(type, false);
  hp::ClassifyOptions options;
  options.threads = threads;
  hp::Classification result;
  {
    py::gil_scoped_release release;
    result = hp::classify(g, options);
  }
  py::list out;
  for (const auto& v : result.verdicts) {
    const hp::ClassRecord& c = result.classes[v.class_index];
    py::dict row;
    row["label"] = hp::render_label(c.label);
    row["representative"] = one_based(g->reduced_word(c.representative));
    row["size"] = c.size;
    row["min_length"] = c.min_length;
    row["order"] = c.order;
    row["elliptic"] = c.elliptic;
    row["regular_d"] = c.regular_d;
    row["nww"] = coeffs(v.nww_poly);
    row["positive"] = v.positive;
    out.append(row);
  }
  return out;
}

std::string render(const std::string& command, const std::string& type, const std::string& format) {
  const hp::Format f = hp::parse_format(format);
  auto g = group_of(type, false);
  if (command == "roots") return hp::render(hp::roots_document(g->datum()), f);
  if (command == "elements") return hp::render(hp::elements_document(*g), f);
  if (command == "classes") return hp::render(hp::classes_document(*g, hp::conjugacy_classes(*g)), f);
  if (command == "positive" || command == "report") {
    const hp::Classification result = hp::classify(g);
    return hp::render(command == "report" ? hp::report_document(*g, result) : hp::positive_document(*g, result), f);
  }
  throw hp::UsageError("unknown command " + command);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "N^{w,w'} trace polynomials and positive conjugacy classes of Weyl groups";

  auto base = py::register_exception<hp::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<hp::UsageError>(m, "UsageError", base.ptr());
  py::register_exception<hp::ConfigurationError>(m, "ConfigurationError", base.ptr());
  py::register_exception<hp::ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<hp::IntegrityError>(m, "IntegrityError", base.ptr());

  py::class_<PyGroup>(m, "WeylGroup")
      .def(py::init<const std::string&, bool>(), py::arg("type"), py::arg("allow_huge") = false)
      .def_property_readonly("type", &PyGroup::type)
      .def_property_readonly("rank", &PyGroup::rank)
      .def_property_readonly("nu", &PyGroup::nu)
      .def_property_readonly("coxeter_number", &PyGroup::coxeter_number)
      .def("__len__", &PyGroup::size)
      .def("length", &PyGroup::length, py::arg("word"))
      .def("reduced_word", &PyGroup::reduced_word, py::arg("word"))
      .def("nww", &PyGroup::nww, py::arg("w"), py::arg("w_prime") = py::none(),
           "Coefficients of N^{w,w'}, constant term first. Words use 1-based indices.");

  m.def(
      "nww",
      [](const std::string& type, const std::vector<unsigned>& w, const std::optional<std::vector<unsigned>>& w_prime) {
        return PyGroup(type, false).nww(w, w_prime);
      },
      py::arg("type"), py::arg("w"), py::arg("w_prime") = py::none());
  m.def("classify", &classify, py::arg("type"), py::arg("threads") = 1);
  m.def(
      "coxeter_fixture", [](const std::string& type) { return coeffs(hp::coxeter_fixture(hp::CoxeterType::parse(type))); },
      py::arg("type"));
  m.def(
      "regular_degrees", [](const std::string& type) { return hp::regular_d_set(hp::CoxeterType::parse(type)); },
      py::arg("type"));
  m.def("render", &render, py::arg("command"), py::arg("type"), py::arg("format") = "json");
}
