#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tiltglue/error.hpp"
#include "tiltglue/example.hpp"
#include "tiltglue/glue.hpp"
#include "tiltglue/io.hpp"

namespace py = pybind11;
using namespace tiltglue;

namespace {

std::vector<std::vector<std::int64_t>> to_rows(const Matrix& m) {
  std::vector<std::vector<std::int64_t>> rows(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

Workspace make_workspace(const std::optional<std::string>& data_dir, std::optional<Scalar> prime) {
  return data_dir ? Workspace(DataSource(*data_dir), prime) : Workspace(DataSource(), prime);
}

std::shared_ptr<BoundQuiverAlgebra> mutable_ptr(const AlgebraPtr& a) { return std::const_pointer_cast<BoundQuiverAlgebra>(a); }

Settings make_settings(std::uint64_t seed) { return Settings{seed, kDefaultCap}; }

}  // namespace

PYBIND11_MODULE(_tiltglue, m) {
  m.doc() = "Tilting modules glued along recollements of module categories";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<BoundQuiverAlgebra, std::shared_ptr<BoundQuiverAlgebra>>(m, "Algebra")
      .def_property_readonly("name", &BoundQuiverAlgebra::name)
      .def_property_readonly("dimension", &BoundQuiverAlgebra::dimension)
      .def_property_readonly("prime", [](const BoundQuiverAlgebra& a) { return a.field().modulus(); })
      .def_property_readonly("vertices", [](const BoundQuiverAlgebra& a) { return a.quiver().vertex_names(); })
      .def_property_readonly("relation_count", [](const BoundQuiverAlgebra& a) { return a.relations().size(); })
      .def("__str__", [](const BoundQuiverAlgebra& a) { return print_algebra(a); });

  py::class_<Module>(m, "Module")
      .def_property_readonly("dims", &Module::dims)
      .def_property_readonly("dimension", &Module::total_dim)
      .def_property_readonly("algebra", [](const Module& x) { return mutable_ptr(x.algebra()); })
      .def("map", [](const Module& x, std::size_t arrow) { return to_rows(x.map(arrow)); })
      .def("to_text", [](const Module& x, const std::string& name) { return print_module(x, name); },
           py::arg("name") = "M");

  py::class_<Universe, std::shared_ptr<Universe>>(m, "Universe")
      .def_property_readonly("name", &Universe::name)
      .def_property_readonly("algebra", [](const Universe& u) { return mutable_ptr(u.algebra()); })
      .def_property_readonly("names", &Universe::member_names)
      .def("__len__", &Universe::size)
      .def("member", [](const Universe& u, const std::string& name) { return u.member(u.index_of_name(name)); })
      .def("identify_summands",
           [](const Universe& u, const Module& x, std::uint64_t seed) {
             std::vector<std::string> out;
             for (auto i : u.identify_summands(x, seed)) out.push_back(u.member_name(i));
             return out;
           },
           py::arg("module"), py::arg("seed") = kDefaultSeed)
      .def("sum", [](const Universe& u, const std::vector<std::string>& names) {
        std::vector<std::size_t> idx;
        for (const auto& n : names) idx.push_back(u.index_of_name(n));
        return sum_of_members(u, idx);
      });

  m.def("parse_algebra", [](const std::string& text, std::optional<Scalar> prime) {
          return mutable_ptr(parse_algebra(text, prime));
        },
        py::arg("text"), py::arg("prime") = py::none());
  m.def("parse_module", [](const std::string& text, std::shared_ptr<BoundQuiverAlgebra> a) { return parse_module(text, a).module; });
  m.def("load_universe",
        [](const std::string& path, const std::optional<std::string>& data_dir, std::optional<Scalar> prime) {
          Workspace ws = make_workspace(data_dir, prime);
          return std::const_pointer_cast<Universe>(ws.universe(path));
        },
        py::arg("path"), py::arg("data_dir") = py::none(), py::arg("prime") = py::none());

  m.def("ext_dim", &ext_dim, py::arg("x"), py::arg("y"), py::arg("degree") = 1);
  m.def("ext_dim_sigma", &ext_dim_sigma, py::arg("x"), py::arg("y"), py::arg("degree") = 1);
  m.def("projective_dimension", &projective_dimension, py::arg("module"), py::arg("cap") = kDefaultCap);
  m.def("injective_dimension", &injective_dimension, py::arg("module"), py::arg("cap") = kDefaultCap);
  m.def("is_isomorphic", &is_isomorphic, py::arg("x"), py::arg("y"), py::arg("seed") = kDefaultSeed);
  m.def("decompose",
        [](const Module& x, std::uint64_t seed) {
          std::vector<Module> out;
          for (auto& s : decompose(x, seed)) out.push_back(s.module);
          return out;
        },
        py::arg("module"), py::arg("seed") = kDefaultSeed);
  m.def("dualize", py::overload_cast<const Module&>(&dualize));

  m.def("verify_tilting",
        [](const Module& t, std::size_t n, std::uint64_t seed) {
          const auto r = verify_tilting(t, n, make_settings(seed));
          return py::dict(py::arg("accepted") = r.accepted, py::arg("failed_axiom") = r.failed_axiom,
                          py::arg("detail") = r.detail, py::arg("dimension") = r.dimension);
        },
        py::arg("module"), py::arg("n"), py::arg("seed") = kDefaultSeed);
  m.def("verify_cotilting",
        [](const Module& t, std::size_t n, std::uint64_t seed) {
          const auto r = verify_cotilting(t, n, make_settings(seed));
          return py::dict(py::arg("accepted") = r.accepted, py::arg("failed_axiom") = r.failed_axiom,
                          py::arg("detail") = r.detail, py::arg("dimension") = r.dimension);
        },
        py::arg("module"), py::arg("n"), py::arg("seed") = kDefaultSeed);

  m.def("functor_images",
        [](const std::string& total, const std::string& c_side, const std::vector<std::string>& a_vertices,
           const std::optional<std::string>& data_dir) {
          Workspace ws = make_workspace(data_dir, std::nullopt);
          const auto u = ws.universe(total);
          const auto uc = ws.universe(c_side);
          std::vector<std::size_t> av;
          for (const auto& v : a_vertices) av.push_back(u->algebra()->quiver().vertex_index(v));
          const Recollement r = Recollement::build(u->algebra(), av, nullptr, uc->algebra());
          py::dict out;
          for (std::size_t i = 0; i < uc->size(); ++i) {
            const auto idx = u->identify_summands(r.j_lower_shriek(uc->member(i)));
            std::vector<std::string> names;
            for (auto k : idx) names.push_back(u->member_name(k));
            out[py::str("j_!" + uc->member_name(i))] = names;
          }
          return out;
        },
        py::arg("total"), py::arg("c_side"), py::arg("a_vertices"), py::arg("data_dir") = py::none());

  m.def("reproduce",
        [](const std::string& id, std::uint64_t seed, std::optional<Scalar> prime,
           const std::optional<std::string>& data_dir) {
          Workspace ws = make_workspace(data_dir, prime);
          const Reproduction rp = reproduce(ws, example_path(id), make_settings(seed));
          return py::dict(py::arg("match") = rp.match, py::arg("members") = rp.outcome.members,
                          py::arg("n2") = rp.outcome.n2, py::arg("certified") = rp.outcome.certified,
                          py::arg("summary") = rp.outcome.summary, py::arg("report") = rp.report,
                          py::arg("diff") = rp.diff,
                          py::arg("error") = rp.error ? std::optional<std::string>(to_string(*rp.error)) : std::nullopt);
        },
        py::arg("id"), py::arg("seed") = kDefaultSeed, py::arg("prime") = py::none(), py::arg("data_dir") = py::none());
}
