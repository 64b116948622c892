#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "eisenpole/cli.hpp"
#include "eisenpole/identities.hpp"
#include "eisenpole/poles.hpp"

namespace py = pybind11;
using namespace eisenpole;
using ordered_json = nlohmann::ordered_json;

namespace {

py::object to_py(const ordered_json& j) {
  switch (j.type()) {
    case ordered_json::value_t::null:
      return py::none();
    case ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case ordered_json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case ordered_json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    case ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case ordered_json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_py(e));
      return out;
    }
    case ordered_json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

py::object parse(const std::string& s) { return to_py(ordered_json::parse(s)); }

Rat rat_arg(const std::string& s) {
  auto q = parse_rat(s);
  if (!q) throw std::invalid_argument("cannot parse rational: " + s);
  return *q;
}

}  // namespace

PYBIND11_MODULE(_eisenpole, m) {
  m.doc() = "exact pole orders and Siegel-Weil identities of degenerate spherical "
            "Eisenstein series (split groups of rank <= 8)";

  m.def("root_datum", [](const std::string& group) {
    return parse(RootDatum::build(group).to_json());
  });

  m.def("b_matrix", [](const std::string& group) {
    RootDatum d = RootDatum::build(group);
    return parse(b_matrix(d).json());
  });

  m.def("potential_poles", [](const std::string& group, int parabolic) {
    RootDatum d = RootDatum::build(group);
    py::list out;
    for (const Rat& s : potential_poles(d, parabolic - 1)) out.append(rat_str(s));
    return out;
  });

  m.def(
      "pole_report",
      [](const std::string& group, int parabolic, long digits, int threads) {
        RootDatum d = RootDatum::build(group);
        PipelineOptions opt;
        opt.digits = digits;
        opt.threads = threads;
        return parse(pole_report(d, parabolic - 1, opt).to_json());
      },
      py::arg("group"), py::arg("parabolic"), py::arg("digits") = 60, py::arg("threads") = 1);

  m.def("residue_factor", [](const std::string& group, int parabolic) {
    RootDatum d = RootDatum::build(group);
    return residue_factor(d, parabolic - 1).str();
  });

  m.def("d_P", [](const std::string& group, int parabolic, const std::string& s0) {
    RootDatum d = RootDatum::build(group);
    return d_P(d, parabolic - 1, rat_arg(s0));
  });

  m.def("epsilon_factor", [](const std::string& group, int parabolic, const std::string& s0) {
    RootDatum d = RootDatum::build(group);
    return rat_str(epsilon_factor(d, parabolic - 1, rat_arg(s0)));
  });

  m.def("identities", [](const std::string& group) {
    RootDatum d = RootDatum::build(group);
    py::list out;
    for (const auto& a : all_positive_admissible(d))
      out.append(parse(render_identity_json(d, a, identity_constant(d, a))));
    return out;
  });

  m.def(
      "verify_denominator_assumption",
      [](const std::string& group, int parabolic) {
        RootDatum d = RootDatum::build(group);
        for (const Rat& s0 : potential_poles(d, parabolic - 1))
          if (!verify_denominator_assumption(d, parabolic - 1, s0).ok()) return false;
        return true;
      },
      py::arg("group"), py::arg("parabolic"));

  m.def(
      "appendix_proof",
      [](const std::string& group, int parabolic, const std::string& s0, bool latex) {
        RootDatum d = RootDatum::build(group);
        AppendixDoc doc = emit_appendix_proof(d, parabolic - 1, rat_arg(s0));
        return latex ? doc.latex() : doc.text();
      },
      py::arg("group"), py::arg("parabolic"), py::arg("s0"), py::arg("latex") = false);
}
