#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sheaflab/catalog.hpp"
#include "sheaflab/cli.hpp"

namespace py = pybind11;
using namespace sheaflab;

namespace {

py::tuple chern_tuple(const ChernData3& c) { return py::make_tuple(c.rank, c.c1, c.c2, c.c3); }

SamplingConfig sampling(std::uint64_t seed, std::size_t samples, bool exhaustive) {
  return SamplingConfig{seed, samples, exhaustive};
}

}  // namespace

PYBIND11_MODULE(_sheaflab, m) {
  m.doc() = "Exact cohomology and Chern data for sheaves on P^3 presented by complexes of line bundles";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<CohomologyError>(m, "CohomologyError");
  py::register_exception<SpectrumError>(m, "SpectrumError");
  py::register_exception<FiberJump>(m, "FiberJump");
  py::register_exception<LiftFailed>(m, "LiftFailed");
  py::register_exception<GenericityFailure>(m, "GenericityFailure");

  py::class_<FieldSpec>(m, "Field")
      .def(py::init([](const std::string& text) { return FieldSpec::parse(text); }), py::arg("spec") = "101")
      .def_property_readonly("characteristic", &FieldSpec::characteristic)
      .def("__repr__", [](const FieldSpec& f) { return "<Field " + f.to_string() + ">"; })
      .def("__eq__", [](const FieldSpec& a, const FieldSpec& b) { return a == b; });

  py::class_<FreeComplex>(m, "Complex")
      .def_static("parse", [](const std::string& text) { return parse_complex(text); })
      .def_static("read", &read_complex_file)
      .def("write", [](const FreeComplex& c, const std::string& path) { write_complex_file(path, c); })
      .def("format", &format_complex)
      .def_property_readonly("shape", &FreeComplex::shape)
      .def_property_readonly("rank", &FreeComplex::rank)
      .def_property_readonly("coh_pos", &FreeComplex::coh_pos)
      .def_property_readonly("positions", [](const FreeComplex& c) { return py::make_tuple(c.pmin(), c.pmax()); })
      .def("term", [](const FreeComplex& c, int pos) { return c.term(pos).twists(); })
      .def("dual", &dualize)
      .def("twist", &twist_complex)
      .def("__repr__", [](const FreeComplex& c) { return "<Complex " + c.shape() + ">"; })
      .def("__eq__", [](const FreeComplex& a, const FreeComplex& b) { return a == b; });

  m.def("chern", [](const FreeComplex& c) { return chern_tuple(chern_of(c)); },
        "(rank, c1, c2, c3) of the presented sheaf");
  m.def("chi", [](py::tuple c, long long t) {
    return chi3({c[0].cast<long long>(), c[1].cast<long long>(), c[2].cast<long long>(), c[3].cast<long long>()}, t);
  });
  m.def("parity_ok", [](long long c1, long long c2, long long c3) { return parity_check({3, c1, c2, c3}); });

  m.def(
      "cohomology",
      [](const FreeComplex& c, int lo, int hi) {
        CohTable tab = h_table(c, lo, hi);
        py::dict out;
        for (int t = lo; t <= hi; ++t) {
          py::list row;
          for (int i = 0; i <= tab.n(); ++i) row.append(tab.h(i, t));
          out[py::int_(t)] = row;
        }
        return out;
      },
      py::arg("complex"), py::arg("lo") = -6, py::arg("hi") = 4, "{t: [h0, h1, h2, h3]} of E(t)");

  m.def("spectrum", [](const FreeComplex& c) { return spectrum_of(c).spectrum.values(); });
  m.def("spectrum_tables", [](const std::vector<int>& k) {
    SpectrumTables t = forward(Spectrum(k));
    return py::make_tuple(t.h1_low, t.h2_high);
  });
  m.def("recover_spectrum", [](int c, const std::map<int, long long>& h1, const std::map<int, long long>& h2) {
    return recover(SpectrumTables{c, h1, h2}).values();
  });

  m.def(
      "validate",
      [](const FreeComplex& c, std::uint64_t seed, std::size_t samples, bool exhaustive) {
        ValidityReport r = validate(c, sampling(seed, samples, exhaustive));
        return py::make_tuple(r.ok(), r.to_string());
      },
      py::arg("complex"), py::arg("seed") = 42, py::arg("samples") = 64, py::arg("exhaustive") = false);

  m.def(
      "globally_generated",
      [](const FreeComplex& c, int t, std::uint64_t seed, std::size_t samples, bool exhaustive) {
        GgVerdict v = is_globally_generated(c, t, sampling(seed, samples, exhaustive));
        return py::make_tuple(v.positive(), v.to_string());
      },
      py::arg("complex"), py::arg("twist") = 0, py::arg("seed") = 42, py::arg("samples") = 64,
      py::arg("exhaustive") = false);

  m.def(
      "liaison_example",
      [](int which, const FieldSpec& f, std::uint64_t seed) {
        LiaisonInput in = liaison_input(which, f, seed);
        return ferrand_transfer(in.resolution, in.a, in.b, in.f, in.g);
      },
      py::arg("which"), py::arg("field") = FieldSpec::prime(101), py::arg("seed") = 42);

  m.def("catalog_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : catalog()) ids.push_back(e.id);
    return ids;
  });
  m.def(
      "build", [](const std::string& id, const FieldSpec& f, std::uint64_t seed) { return build(id, f, seed); },
      py::arg("id"), py::arg("field") = FieldSpec::prime(101), py::arg("seed") = 42);
  m.def(
      "verify",
      [](const std::string& id, const FieldSpec& f, std::uint64_t seed, std::size_t samples) {
        VerifyReport r = verify(id, f, seed, samples);
        return py::make_tuple(r.passed(), r.to_text());
      },
      py::arg("id"), py::arg("field") = FieldSpec::prime(101), py::arg("seed") = 42, py::arg("samples") = 64);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
