// Python bindings for the main operations. Arbitrary-precision values
// cross the boundary as Python ints (exactly, via decimal strings) and
// rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hstar/ehrhart.hpp"
#include "hstar/errors.hpp"
#include "hstar/eulerian.hpp"
#include "hstar/families.hpp"
#include "hstar/polytope.hpp"
#include "hstar/reflexive.hpp"
#include "hstar/triangulation.hpp"
#include "hstar/unimodular_map.hpp"

namespace py = pybind11;

namespace {

using hstar::Int;
using hstar::IntMatrix;
using hstar::IntVector;
using hstar::Rat;

py::int_ to_py(const Int& x) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(x.str()));
}

Int int_from_py(const py::handle& obj) {
  return Int(py::cast<std::string>(py::str(obj)));
}

py::object to_py(const Rat& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(hstar::numerator(x)), to_py(hstar::denominator(x)));
}

py::list vec_to_py(const IntVector& v) {
  py::list out;
  for (const Int& x : v) out.append(to_py(x));
  return out;
}

IntVector vec_from_py(const py::sequence& seq) {
  IntVector out;
  out.reserve(seq.size());
  for (const py::handle& h : seq) out.push_back(int_from_py(h));
  return out;
}

py::list vecs_to_py(const std::vector<IntVector>& vs) {
  py::list out;
  for (const IntVector& v : vs) out.append(vec_to_py(v));
  return out;
}

std::vector<IntVector> vecs_from_py(const py::sequence& seq) {
  std::vector<IntVector> out;
  out.reserve(seq.size());
  for (const py::handle& h : seq) out.push_back(vec_from_py(py::cast<py::sequence>(h)));
  return out;
}

IntMatrix mat_from_py(const py::sequence& seq) {
  std::vector<std::vector<Int>> rows;
  for (const py::handle& h : seq) rows.push_back(vec_from_py(py::cast<py::sequence>(h)));
  return IntMatrix(rows);
}

py::list mat_to_py(const IntMatrix& m) {
  py::list out;
  for (int i = 0; i < m.rows(); ++i) out.append(vec_to_py(m.row(i)));
  return out;
}

py::tuple map_to_py(const hstar::AffineUnimodularMap& m) {
  return py::make_tuple(mat_to_py(m.u()), vec_to_py(m.v()));
}

py::dict delta_check_to_py(const hstar::DeltaCheck& c) {
  py::dict out;
  out["passed"] = c.passed;
  out["applicable"] = c.applicable;
  out["witness"] = c.witness;
  return out;
}

hstar::LatticePolytope make_polytope(int dim, const py::sequence& vertices) {
  return hstar::LatticePolytope(dim, vecs_from_py(vertices));
}

}  // namespace

PYBIND11_MODULE(_hstar, m) {
  m.doc() = "Exact lattice-polytope toolkit: Ehrhart and delta-polynomials, "
            "reflexive duality, unimodular equivalence, triangulation "
            "certificates.";

  // Translators run newest-first, so the base class goes in first.
  py::register_exception<hstar::Error>(m, "HstarError", PyExc_RuntimeError);
  py::register_exception<hstar::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<hstar::CapabilityError>(m, "CapabilityError",
                                                 PyExc_NotImplementedError);
  py::register_exception<hstar::DegeneracyError>(m, "DegeneracyError",
                                                 PyExc_ValueError);

  py::class_<hstar::LatticePolytope>(m, "Polytope")
      .def(py::init(&make_polytope), py::arg("dim"), py::arg("vertices"))
      .def_property_readonly("dim", &hstar::LatticePolytope::dim)
      .def_property_readonly(
          "vertices",
          [](const hstar::LatticePolytope& p) { return vecs_to_py(p.vertices()); })
      .def("is_simplex", &hstar::LatticePolytope::is_simplex)
      .def("inequalities",
           [](const hstar::LatticePolytope& p) {
             py::list out;
             for (const hstar::HalfSpace& hs : p.hrep().halfspaces)
               out.append(py::make_tuple(vec_to_py(hs.a), to_py(hs.b)));
             return out;
           })
      .def(
          "lattice_points",
          [](const hstar::LatticePolytope& p, bool interior) {
            return vecs_to_py(p.lattice_points(interior
                                                   ? hstar::PointLocation::Interior
                                                   : hstar::PointLocation::Closed));
          },
          py::arg("interior") = false)
      .def("normalized_volume",
           [](const hstar::LatticePolytope& p) { return to_py(p.normalized_volume()); })
      .def("dilate",
           [](const hstar::LatticePolytope& p, const py::int_& k) {
             return p.dilate(int_from_py(k));
           })
      .def("translate",
           [](const hstar::LatticePolytope& p, const py::sequence& v) {
             return p.translate(vec_from_py(v));
           })
      .def("pyramid", &hstar::LatticePolytope::pyramid)
      .def("apply",
           [](const hstar::LatticePolytope& p, const py::sequence& u,
              const py::sequence& v) {
             return p.apply(
                 hstar::AffineUnimodularMap(mat_from_py(u), vec_from_py(v)));
           },
           py::arg("U"), py::arg("v"))
      .def("__eq__",
           [](const hstar::LatticePolytope& a, const hstar::LatticePolytope& b) {
             return a == b;
           })
      .def("__repr__", [](const hstar::LatticePolytope& p) {
        return "<Polytope dim=" + std::to_string(p.dim()) + " vertices=" +
               std::to_string(p.vertex_count()) + ">";
      });

  m.def("make_qn", [](int n) { return hstar::make_qn(n).polytope; }, py::arg("n"));
  m.def("make_rn", [](int n) { return hstar::make_rn(n).polytope; }, py::arg("n"));
  m.def("make_rn_tilde", [](int n) { return hstar::make_rn_tilde(n).polytope; },
        py::arg("n"));
  m.def("make_un", [](int n) { return mat_to_py(hstar::make_un(n)); }, py::arg("n"));
  m.def("qn_to_rntilde", [](int n) { return map_to_py(hstar::qn_to_rntilde(n)); },
        py::arg("n"));

  m.def("count_points",
        [](const hstar::LatticePolytope& p, long k) {
          return to_py(hstar::count_points(p, k));
        },
        py::arg("polytope"), py::arg("k"));
  m.def("ehrhart_polynomial",
        [](const hstar::LatticePolytope& p, bool reciprocity) {
          const hstar::RatPolynomial poly =
              hstar::EhrhartCalculator(p).ehrhart_polynomial(reciprocity);
          py::list out;
          for (const Rat& c : poly.coeffs()) out.append(to_py(c));
          return out;
        },
        py::arg("polytope"), py::arg("reciprocity") = false);
  m.def("delta_polynomial",
        [](const hstar::LatticePolytope& p, bool reciprocity) {
          py::list out;
          for (const Int& c : hstar::EhrhartCalculator(p).delta_vector(reciprocity))
            out.append(to_py(c));
          return out;
        },
        py::arg("polytope"), py::arg("reciprocity") = false);
  m.def("validate_delta", [](const hstar::LatticePolytope& p) {
    const hstar::DeltaReport r = hstar::validate_delta(p);
    py::dict out;
    out["dim"] = r.dim;
    py::list delta;
    for (const Int& c : r.delta) delta.append(to_py(c));
    out["delta"] = delta;
    out["delta0"] = delta_check_to_py(r.delta0);
    out["delta1_identity"] = delta_check_to_py(r.delta1_identity);
    out["deltad_interior"] = delta_check_to_py(r.deltad_interior);
    out["nonnegativity"] = delta_check_to_py(r.nonnegativity);
    out["hibi_lower_bound"] = delta_check_to_py(r.hibi_lower_bound);
    out["palindromic"] = delta_check_to_py(r.palindromic);
    out["all_passed"] = r.all_passed();
    return out;
  });

  m.def("eulerian",
        [](int n, const std::string& method) {
          const hstar::IntPolynomial poly = method == "descents"
                                                ? hstar::eulerian_descents(n)
                                                : hstar::eulerian_recurrence(n);
          py::list out;
          for (const Int& c : poly.coeffs()) out.append(to_py(c));
          return out;
        },
        py::arg("n"), py::arg("method") = "recurrence");

  m.def("is_reflexive", [](const hstar::LatticePolytope& p) {
    const hstar::ReflexivityReport r = hstar::is_reflexive(p);
    py::dict out;
    out["reflexive"] = r.reflexive();
    out["origin_unique_interior"] = r.origin_unique_interior;
    out["facet_offsets_one"] = r.facet_offsets_one;
    return out;
  });
  m.def("dual_polytope", &hstar::dual_polytope);
  m.def("find_equivalence",
        [](const hstar::LatticePolytope& a,
           const hstar::LatticePolytope& b) -> py::object {
          const auto m_ = hstar::find_equivalence(a, b);
          return m_ ? py::object(map_to_py(*m_)) : py::none();
        });
  m.def("is_self_dual",
        [](const hstar::LatticePolytope& p) -> py::object {
          const auto m_ = hstar::is_self_dual(p);
          return m_ ? py::object(map_to_py(*m_)) : py::none();
        });

  m.def("check_triangulation",
        [](const hstar::LatticePolytope& p, const py::sequence& points,
           const py::sequence& cells, const py::object& heights,
           bool allow_subconfiguration) {
          std::vector<std::vector<int>> cell_lists;
          for (const py::handle& c : cells)
            cell_lists.push_back(py::cast<std::vector<int>>(c));
          std::optional<std::vector<Rat>> hs;
          if (!heights.is_none()) {
            std::vector<Rat> values;
            for (const py::handle& h : py::cast<py::sequence>(heights))
              values.push_back(Rat(int_from_py(h)));
            hs = std::move(values);
          }
          const hstar::Triangulation t = hstar::Triangulation::create(
              hstar::PointConfiguration::create(p.dim(), vecs_from_py(points)),
              std::move(cell_lists), std::move(hs));
          const hstar::CoveringReport covering = hstar::check_covering(t, p);
          py::dict out;
          out["covering"] = covering.covering();
          out["volume_matches"] = covering.volume_matches;
          out["interiors_disjoint"] = covering.interiors_disjoint;
          out["uses_all_points"] = covering.uses_all_points;
          out["unimodular"] = hstar::check_unimodular(t);
          out["flag"] = hstar::check_flag(t);
          if (t.heights) {
            const auto policy = allow_subconfiguration
                                    ? hstar::PointUsePolicy::AllowSubconfiguration
                                    : hstar::PointUsePolicy::RequireAllPoints;
            out["regular"] =
                hstar::check_regular_with_heights(t, *t.heights, policy).regular;
          }
          return out;
        },
        py::arg("polytope"), py::arg("points"), py::arg("cells"),
        py::arg("heights") = py::none(), py::arg("allow_subconfiguration") = false);

  m.def("search_rfu",
        [](const hstar::LatticePolytope& p, std::uint64_t trials,
           std::uint64_t seed) -> py::object {
          const auto result = hstar::search_rfu(p, trials, seed);
          if (!result) return py::none();
          py::dict out;
          out["trial"] = result->trial;
          out["seed"] = result->seed;
          out["points"] = vecs_to_py(result->triangulation.config.points);
          out["cells"] = result->triangulation.cells;
          py::list hs;
          for (const Int& h : result->heights) hs.append(to_py(h));
          out["heights"] = hs;
          return out;
        },
        py::arg("polytope"), py::arg("trials") = 1000, py::arg("seed") = 0);
}
