#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hilrank/design_matrix.hpp"
#include "hilrank/enumeration.hpp"
#include "hilrank/exp_hilbert.hpp"
#include "hilrank/families.hpp"
#include "hilrank/rank.hpp"
#include "hilrank/simplicial_complex.hpp"

namespace py = pybind11;

namespace {

using hilrank::Int;

py::int_ to_py(const Int& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py(const std::vector<Int>& values) {
  py::list out;
  for (const Int& v : values) out.append(to_py(v));
  return out;
}

std::vector<Int> ints_from_py(const py::sequence& seq) {
  std::vector<Int> out;
  for (const auto& item : seq) {
    out.emplace_back(Int(py::str(item).cast<std::string>()));
  }
  return out;
}

py::list faces_to_py(const std::vector<hilrank::Face>& faces) {
  py::list out;
  for (const auto& f : faces) out.append(f.vertices());
  return out;
}

py::dict report_to_py(const hilrank::RankReport& rep) {
  py::dict d;
  d["rank"] = to_py(rep.rank);
  d["model_dimension"] = to_py(rep.model_dimension);
  d["degrees_of_freedom"] = to_py(rep.degrees_of_freedom);
  d["method"] = hilrank::to_string(rep.method);
  py::list checks;
  for (auto m : rep.cross_checks) checks.append(hilrank::to_string(m));
  d["cross_checks"] = checks;
  d["ds_model"] = rep.ds_model;
  d["oracle_checked"] = rep.oracle_checked;
  if (rep.oracle_rank) {
    d["oracle_rank"] = to_py(*rep.oracle_rank);
    d["agree"] = rep.oracle_agrees;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(hilrank, m) {
  m.doc() = "Ranks of hierarchical log-linear model matrices via exponential Hilbert series";

  py::register_exception<hilrank::size_cap_error>(m, "SizeCapError", PyExc_ValueError);
  py::register_exception<hilrank::not_ds_error>(m, "NotDehnSommervilleError", PyExc_ValueError);

  py::class_<hilrank::SimplicialComplex>(m, "SimplicialComplex")
      .def_static(
          "from_facets",
          [](int m_, const std::vector<std::vector<int>>& facets) {
            return hilrank::SimplicialComplex::from_facets(m_, facets);
          },
          py::arg("m"), py::arg("facets"))
      .def_property_readonly("m", &hilrank::SimplicialComplex::vertex_count)
      .def_property_readonly("facets",
                             [](const hilrank::SimplicialComplex& c) {
                               return faces_to_py(c.facets());
                             })
      .def_property_readonly("dimension", &hilrank::SimplicialComplex::dimension)
      .def("faces",
           [](const hilrank::SimplicialComplex& c) { return faces_to_py(c.faces()); })
      .def("f_vector",
           [](const hilrank::SimplicialComplex& c) { return to_py(c.f_vector().counts); })
      .def("minimal_nonfaces",
           [](const hilrank::SimplicialComplex& c) { return faces_to_py(c.minimal_nonfaces()); })
      .def(
          "is_face",
          [](const hilrank::SimplicialComplex& c, const std::vector<int>& s) {
            return c.is_face(s);
          },
          py::arg("vertex_set"))
      .def("__eq__",
           [](const hilrank::SimplicialComplex& a, const hilrank::SimplicialComplex& b) {
             return a == b;
           })
      .def("__repr__", [](const hilrank::SimplicialComplex& c) {
        std::string out = "SimplicialComplex(m=" + std::to_string(c.vertex_count()) + ", facets=[";
        const auto& facets = c.facets();
        for (std::size_t i = 0; i < facets.size(); ++i) {
          if (i) out += ", ";
          out += "[";
          const auto& verts = facets[i].vertices();
          for (std::size_t j = 0; j < verts.size(); ++j) {
            if (j) out += ",";
            out += std::to_string(verts[j]);
          }
          out += "]";
        }
        return out + "])";
      });

  py::class_<hilrank::DesignMatrix>(m, "DesignMatrix")
      .def_readonly("rows", &hilrank::DesignMatrix::rows)
      .def_readonly("cols", &hilrank::DesignMatrix::cols)
      .def("entry", &hilrank::DesignMatrix::at, py::arg("row"), py::arg("col"))
      .def("dump", &hilrank::DesignMatrix::dump);

  m.def(
      "e_vector",
      [](const py::sequence& f) {
        return to_py(hilrank::e_vector(hilrank::FVector{ints_from_py(f)}).coeffs);
      },
      py::arg("f_vector"), "e-vector from an f-vector (binomial transform)");
  m.def(
      "f_from_e",
      [](const py::sequence& e) {
        return to_py(hilrank::f_from_e(hilrank::EVector{ints_from_py(e)}).counts);
      },
      py::arg("e_vector"), "f-vector from an e-vector (inverse transform)");
  m.def(
      "e_vector_of",
      [](const hilrank::SimplicialComplex& c) {
        return to_py(hilrank::e_vector(c.f_vector()).coeffs);
      },
      py::arg("complex"));

  m.def(
      "eval_coarse_exact",
      [](const hilrank::SimplicialComplex& c, const std::vector<int>& levels) {
        return to_py(hilrank::eval_coarse_exact(c, levels));
      },
      py::arg("complex"), py::arg("levels"));
  m.def(
      "eval_fine_polynomial",
      [](const hilrank::SimplicialComplex& c, int r) {
        return to_py(hilrank::eval_fine_polynomial(c, r));
      },
      py::arg("complex"), py::arg("r"));
  m.def("truncated_coarse_series", &hilrank::truncated_coarse_series, py::arg("complex"),
        py::arg("x"), py::arg("total_degree"));
  m.def("is_dehn_sommerville", &hilrank::is_dehn_sommerville, py::arg("complex"));

  m.def(
      "rank_face_vector",
      [](const hilrank::SimplicialComplex& c, int r) {
        return to_py(hilrank::rank_face_vector(c, r));
      },
      py::arg("complex"), py::arg("r"));
  m.def(
      "rank_ds",
      [](const hilrank::SimplicialComplex& c, int r) { return to_py(hilrank::rank_ds(c, r)); },
      py::arg("complex"), py::arg("r"));

  m.def(
      "build_design_matrix",
      [](const hilrank::SimplicialComplex& c, const std::vector<int>& levels,
         std::size_t column_cap) {
        return hilrank::build_design_matrix(hilrank::ModelSpec::make(c, levels), column_cap);
      },
      py::arg("complex"), py::arg("levels"), py::arg("column_cap") = hilrank::kDefaultColumnCap);
  m.def("exact_rank", &hilrank::exact_rank, py::arg("matrix"));

  m.def(
      "report",
      [](const hilrank::SimplicialComplex& c, const std::vector<int>& levels, bool verify,
         std::size_t column_cap) {
        return report_to_py(
            hilrank::report(hilrank::ModelSpec::make(c, levels), verify, column_cap));
      },
      py::arg("complex"), py::arg("levels"), py::arg("verify") = false,
      py::arg("column_cap") = hilrank::kDefaultColumnCap);

  m.def("cyclic_complex", &hilrank::cyclic_complex, py::arg("m"));
  m.def("main_effect_complex", &hilrank::main_effect_complex, py::arg("m"));
  m.def("saturated_complex", &hilrank::saturated_complex, py::arg("m"));
  m.def("simplex_boundary_complex", &hilrank::simplex_boundary_complex, py::arg("m"));

  m.def(
      "all_complexes", [](int m_) { return hilrank::all_complexes(m_); }, py::arg("m"),
      "every complex on [m] containing all singletons (m <= 4)");
}
