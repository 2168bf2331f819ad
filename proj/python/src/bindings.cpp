#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parsum/fault.hpp"
#include "parsum/fixed.hpp"
#include "parsum/inj.hpp"
#include "parsum/perm.hpp"
#include "parsum/suites.hpp"

namespace py = pybind11;
using namespace parsum;

PYBIND11_MODULE(_parsum, m) {
  m.doc() = "Injections, permutations and the verification suites";
  py::register_exception<Error>(m, "ParsumError", PyExc_ValueError);

  py::class_<ApRow>(m, "ApRow")
      .def(py::init<>())
      .def_static("identity", &ApRow::identity)
      .def_static("affine", &ApRow::affine, py::arg("scale"), py::arg("offset"))
      .def_static("finite_permutation", &ApRow::finite_permutation)
      .def_static("parse", &ApRow::parse)
      .def("__call__", &ApRow::operator())
      .def("preimage", &ApRow::preimage)
      .def("is_bijective", &ApRow::is_bijective)
      .def_property_readonly("cutoff", &ApRow::cutoff)
      .def_property_readonly("period", &ApRow::period)
      .def("__str__", &ApRow::str)
      .def("__repr__", [](const ApRow& r) { return "ApRow.parse('" + r.str() + "')"; })
      .def("__eq__", [](const ApRow& a, const ApRow& b) { return equal(a, b); });
  m.def("compose", py::overload_cast<const ApRow&, const ApRow&>(&compose), py::arg("outer"), py::arg("inner"));
  m.def("images_disjoint", py::overload_cast<const ApRow&, const ApRow&>(&images_disjoint));

  py::class_<Perm>(m, "Perm")
      .def(py::init<std::vector<std::size_t>>())
      .def_static("identity", &Perm::identity)
      .def("__call__", &Perm::operator())
      .def("__len__", &Perm::size)
      .def("one_line", &Perm::one_line)
      .def("inverse", &Perm::inverse)
      .def("__str__", &Perm::str)
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; });
  m.def("compose_perms", py::overload_cast<const Perm&, const Perm&>(&compose), py::arg("outer"), py::arg("inner"));
  m.def("block_shuffle", &block_shuffle);
  m.def("sigma_tilde", &sigma_tilde);

  m.def("cyclic_generator_values", [](std::size_t q, Nat upto) {
    CyclicEmbedding g(q);
    std::vector<Nat> out;
    for (Nat j = 1; j <= upto; ++j) out.push_back(g.generator()(j));
    return out;
  });

  m.def("suite_ids", &suite_ids);
  m.def("demo_names", &demo_names);
  m.def("run_demo", &run_demo);
  m.def("fault_names", [] {
    std::vector<std::string> out;
    for (Fault f : all_faults()) out.push_back(fault_name(f));
    return out;
  });
  m.def(
      "verify_json",
      [](const std::vector<std::string>& suites, std::uint64_t seed, std::size_t cases, std::size_t window,
         const std::string& instance, const std::string& fault) {
        SuiteConfig config{seed, cases, window, instance};
        std::optional<ScopedFault> scoped;
        if (!fault.empty()) {
          auto f = parse_fault(fault);
          if (!f) throw Error("unknown fault: " + fault);
          scoped.emplace(*f);
        }
        py::gil_scoped_release release;
        return run_suites(suites, config).json();
      },
      py::arg("suites"), py::arg("seed"), py::arg("cases"), py::arg("window"), py::arg("instance"),
      py::arg("fault") = "");
}
