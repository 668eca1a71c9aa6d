#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>
#include <sstream>

#include "sgc/circular.hpp"
#include "sgc/cli.hpp"
#include "sgc/error.hpp"
#include "sgc/families.hpp"
#include "sgc/girth.hpp"
#include "sgc/io.hpp"
#include "sgc/lemmas.hpp"
#include "sgc/winding.hpp"

namespace py = pybind11;
using namespace sgc;

namespace {

// Rationals cross the boundary as fractions.Fraction; anything whose str()
// parses ("5/2", 3, "2.5", Fraction) is accepted on the way in.
py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.numerator(), r.denominator());
}

Rational from_py(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

Sign parse_sign(const std::string& s) {
  if (s == "+") return Sign::Positive;
  if (s == "-") return Sign::Negative;
  throw Error(ErrorCode::ParseError, "sign must be '+' or '-', got '" + s + "'");
}

py::object girth_dict(const GirthResult& r) {
  py::dict d;
  d["length"] = r.length ? py::cast(*r.length) : py::none();
  d["witness"] = r.witness ? py::cast(r.witness->vertices()) : py::none();
  return d;
}

py::dict coloring_dict(const Coloring& c) {
  py::dict d;
  d["p"] = c.pq.p;
  d["q"] = c.pq.q;
  d["assign"] = c.assign;
  return d;
}

CycleMap make_map(const py::object& r, const std::vector<int>& cycle, const py::list& images) {
  std::vector<Rational> im;
  for (const auto& x : images) im.push_back(from_py(x));
  return make_cycle_map(CycleSeq(cycle), from_py(r), std::move(im));
}

}  // namespace

PYBIND11_MODULE(_sgc, m) {
  m.doc() = "signed graphs, circular colorings and winding numbers";

  static py::exception<Error> error(m, "SgcError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<SignedGraph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::tuple<int, int, std::string>>& edges) {
             std::vector<Edge> es;
             for (const auto& [u, v, s] : edges) es.push_back({u, v, parse_sign(s)});
             return build_graph(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &SignedGraph::order)
      .def_property_readonly("size", &SignedGraph::size)
      .def_property_readonly("edges",
                             [](const SignedGraph& g) {
                               std::vector<std::tuple<int, int, std::string>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, std::string(1, sign_char(e.sign)));
                               return out;
                             })
      .def("labels",
           [](const SignedGraph& g) {
             std::vector<std::string> out;
             for (const auto& l : g.labels()) out.push_back(to_string(l));
             return out;
           })
      .def("is_bipartite", [](const SignedGraph& g) { return is_bipartite(g).has_value(); })
      .def("switch", [](const SignedGraph& g, const std::vector<int>& cut) { return switching(g, cut); },
           py::arg("cut"))
      .def("to_sgf", &write_sgf)
      .def("to_dot", [](const SignedGraph& g, const std::string& name) { return write_dot(g, name); },
           py::arg("name") = "G")
      .def_static("from_sgf", [](const std::string& text) { return read_sgf(text); })
      .def("__eq__", [](const SignedGraph& a, const SignedGraph& b) { return a == b; })
      .def("__repr__", [](const SignedGraph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("family", [](const std::string& name, int ell, int k) { return make_family({parse_family(name), ell, k}); },
        py::arg("name"), py::arg("ell") = 1, py::arg("k") = 3);
  m.def("complete_graph", &complete_graph);
  m.def("s_construction", &s_construction);

  m.def("negative_girth", [](const SignedGraph& g) { return girth_dict(negative_girth(g)); });
  m.def("odd_girth", [](const SignedGraph& g) { return girth_dict(odd_girth(g)); });
  m.def("brute_force_negative_girth", [](const SignedGraph& g) { return girth_dict(brute_force_negative_girth(g)); });

  m.def(
      "chi_c",
      [](const SignedGraph& g, std::optional<int> q_max, const py::object& upper) {
        ChiCOptions o;
        o.q_max = q_max;
        if (!upper.is_none()) o.upper = from_py(upper);
        const auto r = chi_c(g, o);
        py::dict d;
        d["value"] = to_fraction(r.value);
        d["certificate"] = coloring_dict(r.certificate);
        py::list refuted;
        for (const auto& pq : r.refuted) refuted.append(to_fraction(pq.value()));
        d["refuted"] = refuted;
        d["q_max"] = r.q_max;
        d["upper"] = to_fraction(r.upper);
        return d;
      },
      py::arg("g"), py::arg("q_max") = py::none(), py::arg("upper") = py::none());
  m.def(
      "decide_colorable",
      [](const SignedGraph& g, int p, int q, std::optional<std::uint64_t> seed) -> py::object {
        auto c = decide_colorable(g, make_pq(p, q), SearchOptions{seed});
        if (!c) return py::none();
        return py::cast(c->assign);
      },
      py::arg("g"), py::arg("p"), py::arg("q"), py::arg("seed") = py::none());
  m.def(
      "verify_coloring",
      [](const SignedGraph& g, int p, int q, const std::vector<int>& assign) {
        return verify_coloring(g, Coloring{make_pq(p, q), assign});
      },
      py::arg("g"), py::arg("p"), py::arg("q"), py::arg("assign"));
  m.def(
      "brute_force_chi_c",
      [](const SignedGraph& g, int q_max, const py::object& upper) -> py::object {
        auto v = brute_force_chi_c(g, q_max, from_py(upper));
        return v ? to_fraction(*v) : py::none();
      },
      py::arg("g"), py::arg("q_max"), py::arg("upper"));

  m.def(
      "winding",
      [](const py::object& r, const std::vector<int>& cycle, const py::list& images, const std::string& extension) {
        const CycleMap cm = make_map(r, cycle, images);
        if (extension != "cD" && extension != "csh") throw Error(ErrorCode::BadParams, "extension must be cD or csh");
        return winding_number(extension == "cD" ? extend_cD(cm) : extend_csh(cm), pick_interval(cm));
      },
      py::arg("r"), py::arg("cycle"), py::arg("images"), py::arg("extension") = "csh");
  m.def(
      "is_far_polar_cycle",
      [](const py::object& r, const std::vector<int>& cycle, const py::list& images) {
        return is_far_polar_cycle(make_map(r, cycle, images));
      },
      py::arg("r"), py::arg("cycle"), py::arg("images"));
  m.def(
      "layer_winding_parities",
      [](const SignedGraph& g, int p, int q, const std::vector<int>& assign) {
        return layer_winding_parities(g, Coloring{make_pq(p, q), assign});
      },
      py::arg("g"), py::arg("p"), py::arg("q"), py::arg("assign"));

  m.def(
      "lemma_suite",
      [](const std::string& name, int trials, std::uint64_t seed, std::optional<std::vector<int>> params) {
        const Lemma l = parse_lemma(name);
        const auto report = lemma_suite(l, params ? *params : default_lemma_params(l), trials, seed);
        return py::module_::import("json").attr("loads")(lemma_report_to_json(report));
      },
      py::arg("name"), py::arg("trials"), py::arg("seed"), py::arg("params") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> argv{"sgc"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::ostringstream out, err;
        const int code = run_cli(argv, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
