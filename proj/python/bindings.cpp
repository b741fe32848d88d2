#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wienerlab/brooms.hpp"
#include "wienerlab/enumerate.hpp"
#include "wienerlab/error.hpp"
#include "wienerlab/thresholds.hpp"
#include "wienerlab/transforms.hpp"
#include "wienerlab/tree.hpp"
#include "wienerlab/verify.hpp"

namespace py = pybind11;
using namespace wienerlab;

namespace {

std::vector<Edge> edge_vector(const Tree& t) { return {t.edges().begin(), t.edges().end()}; }

py::tuple shape_tuple(const ShapeClass& s) {
  return py::make_tuple(s.kind == ShapeClass::Kind::kPath           ? "path"
                        : s.kind == ShapeClass::Kind::kStar         ? "star"
                        : s.kind == ShapeClass::Kind::kDoubleBroom  ? "double"
                        : s.kind == ShapeClass::Kind::kTripleBroom  ? "triple"
                                                                    : "other",
                        s.a, s.b, s.c);
}

py::dict context_dict(const SpecialContext& c) {
  py::dict d;
  d["special"] = c.special;
  d["depth"] = c.depth;
  d["first_component"] = c.first_component;
  d["second_component"] = c.second_component;
  d["first_broom"] = c.first_broom;
  d["second_broom"] = c.second_broom;
  d["first_leaves"] = c.first_leaves;
  d["second_leaves"] = c.second_leaves;
  d["predicted_delta"] = predicted_broom_delta_full(c);
  return d;
}

py::dict record_dict(const ExtremalRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["d"] = r.d;
  d["c"] = r.gap();
  d["max_wiener"] = r.max_wiener;
  d["all_double_broom"] = r.all_double_broom;
  d["any_double_broom"] = r.any_double_broom;
  d["best_double_wiener"] = r.best_double_wiener ? py::cast(*r.best_double_wiener) : py::none();
  py::list argmax;
  for (const ArgmaxTree& a : r.argmax) argmax.append(py::make_tuple(a.canonical, shape_tuple(a.shape)));
  d["argmax"] = argmax;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Wiener-index tools for trees";

  static py::exception<Error> error(m, "WienerlabError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Tree>(m, "Tree")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return tree_from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_tree(text); })
      .def_property_readonly("order", &Tree::order)
      .def_property_readonly("edges", &edge_vector)
      .def("degree", &Tree::degree)
      .def("to_text", [](const Tree& t) { return format_tree(t); })
      .def("__len__", &Tree::order)
      .def("__repr__", [](const Tree& t) { return "<Tree n=" + std::to_string(t.order()) + ">"; });

  m.def("path_tree", &path_tree);
  m.def("star_tree", &star_tree);
  m.def("double_broom", &double_broom, py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("triple_broom", &triple_broom, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("wiener", &wiener_edge_decomposition);
  m.def("wiener_pairwise", &wiener_pairwise);
  m.def("diameter", &diameter);
  m.def("eccentricity", &eccentricity);
  m.def("leaves", &leaves);
  m.def("broom_vertices", &broom_vertices);
  m.def("canonical_form", &canonical_form);
  m.def("classify", [](const Tree& t) { return shape_tuple(classify(t)); });

  m.def("special_contexts", [](const Tree& t) {
    py::list out;
    for (const auto& c : find_special_contexts(t)) out.append(context_dict(c));
    return out;
  });
  m.def(
      "relocate_broom",
      [](const Tree& t, std::size_t index, bool swap) {
        const auto ctxs = find_special_contexts(t);
        if (index >= ctxs.size()) throw Error(ErrorKind::kDomain, "no context " + std::to_string(index));
        return relocate_broom(t, swap ? ctxs[index].swapped() : ctxs[index]);
      },
      py::arg("tree"), py::arg("index"), py::arg("swap") = false);
  m.def("relocate_leaf", &relocate_leaf, py::arg("tree"), py::arg("x"), py::arg("y"));
  m.def("predicted_leaf_delta", [](const Tree& t, Vertex x, Vertex y) { return predicted_leaf_delta(leaf_path(t, x, y)); });
  m.def("predicted_broom_delta", &predicted_broom_delta_reduced, py::arg("t1"), py::arg("t2"), py::arg("p"),
        py::arg("n"));

  m.def("best_double_broom", [](std::int64_t n, std::int64_t d) {
    const auto c = best_double_broom(n, d);
    return py::make_tuple(c.a, c.b, c.wiener);
  });
  m.def("best_triple_broom", [](std::int64_t n, std::int64_t d) {
    const auto c = best_triple_broom(n, d);
    return py::make_tuple(c.a, c.b, c.c, c.wiener);
  });
  m.def("compare_brooms", [](std::int64_t n, std::int64_t d) {
    const auto c = compare_brooms(n, d);
    py::dict out;
    out["winner"] = to_string(c.winner);
    out["margin"] = c.margin;
    out["regime"] = to_string(c.regime);
    out["best_double"] = py::make_tuple(c.best_double.a, c.best_double.b, c.best_double.wiener);
    out["best_triple"] = py::make_tuple(c.best_triple.a, c.best_triple.b, c.best_triple.c, c.best_triple.wiener);
    return out;
  });
  m.def("theorem_bound", &theorem_bound);
  m.def("proposition_bound", &proposition_bound);
  m.def("okok_bounds", &okok_bounds);
  m.def("offpath_bound", &offpath_bound);

  m.def("count_free_trees", &count_free_trees, py::arg("n"), py::arg("ceiling") = kDefaultCeiling);
  m.def("free_trees", &free_trees, py::arg("n"), py::arg("ceiling") = kDefaultCeiling);
  m.def(
      "extremal_trees",
      [](std::size_t n, std::uint32_t d, unsigned jobs) {
        ExtremalRecord r;
        {
          py::gil_scoped_release release;
          r = extremal_trees(n, d, {kDefaultCeiling, jobs});
        }
        return record_dict(r);
      },
      py::arg("n"), py::arg("d"), py::arg("jobs") = 1);

  m.def(
      "verify",
      [](const std::string& lemma, std::size_t min_n, std::size_t max_n, std::uint64_t samples, std::uint64_t seed) {
        VerifyParams p;
        p.min_n = min_n;
        p.max_n = max_n;
        p.samples = samples;
        p.seed = seed;
        const VerificationReport r = verify(lemma, p);
        py::dict out;
        out["lemma"] = r.lemma;
        out["range"] = r.range;
        out["checked"] = r.checked;
        py::list bad;
        for (const auto& c : r.counterexamples) bad.append(py::make_tuple(c.detail, c.tree_text));
        out["counterexamples"] = bad;
        return out;
      },
      py::arg("lemma"), py::arg("min_n") = 0, py::arg("max_n") = 0, py::arg("samples") = 10'000, py::arg("seed") = 7);
  m.attr("lemma_ids") = lemma_ids();
}
