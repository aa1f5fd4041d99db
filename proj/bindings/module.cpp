#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entailkit/compose.hpp"
#include "entailkit/corpus.hpp"
#include "entailkit/eval.hpp"
#include "entailkit/measures.hpp"
#include "entailkit/vector_space.hpp"

namespace py = pybind11;
using namespace entailkit;

namespace {

DistVector as_vector(const std::vector<double>& w) { return DistVector(w); }

ElementwiseOp op_from(const std::string& name) { return elementwise_op_from_name(name); }

}  // namespace

PYBIND11_MODULE(_entailkit, m) {
  m.doc() = "distributional entailment toolkit: measures, composition, spaces";

  py::register_exception<Error>(m, "EntailkitError");

  m.def(
      "score",
      [](const std::string& measure, const std::vector<double>& u, const std::vector<double>& v,
         double alpha, double epsilon) {
        MeasureConfig config;
        config.alpha = alpha;
        config.epsilon = epsilon;
        return apply_measure(measure, as_vector(u), as_vector(v), config);
      },
      py::arg("measure"), py::arg("u"), py::arg("v"), py::arg("alpha") = 0.99,
      py::arg("epsilon") = 1e-8,
      "Directional entailment score of u (narrower) against v (broader).");

  m.def("measure_names", [] { return measure_names(); });

  m.def(
      "compose",
      [](const std::string& op, const std::vector<std::vector<double>>& vectors) {
        std::vector<DistVector> vs;
        vs.reserve(vectors.size());
        for (const auto& w : vectors) vs.push_back(as_vector(w));
        return compose_elementwise(op_from(op), vs).weights();
      },
      py::arg("op"), py::arg("vectors"),
      "Elementwise composition (add, mul, min, max) of non-negative vectors.");

  m.def(
      "predict_support",
      [](const std::string& op, const std::vector<std::vector<std::size_t>>& supports) {
        std::vector<FeatureSet> fs(supports.begin(), supports.end());
        return predict_feature_set(op_from(op), fs);
      },
      py::arg("op"), py::arg("supports"),
      "Predicted support of the composed vector from the argument supports.");

  m.def(
      "support",
      [](const std::vector<double>& v) { return support(as_vector(v)); }, py::arg("v"));

  m.def("auc", &auc, py::arg("scores"), py::arg("labels"),
        "Mann-Whitney AUC with ties counted half.");

  py::class_<VectorSpace>(m, "VectorSpace")
      .def_property_readonly("words", [](const VectorSpace& s) { return s.vocab.words(); })
      .def_property_readonly("dims", [](const VectorSpace& s) { return s.vocab.dims(); })
      .def("__contains__",
           [](const VectorSpace& s, const std::string& w) { return s.find(w) != nullptr; })
      .def("vector", [](const VectorSpace& s, const std::string& w) {
        const DistVector* v = s.find(w);
        if (!v) throw py::key_error(w);
        return v->weights();
      });

  m.def(
      "build_space",
      [](const std::vector<std::string>& lines, std::size_t dims, std::size_t window,
         std::size_t min_count) {
        PipelineConfig config;
        config.dims = dims;
        config.window = window;
        config.min_word_count = min_count;
        return build_space(lines, config);
      },
      py::arg("lines"), py::arg("dims") = 300, py::arg("window") = 5, py::arg("min_count") = 1,
      "PPMI vector space from raw text lines.");

  m.def("load_space", [](const std::string& path) { return load_space(path); }, py::arg("path"));
  m.def(
      "save_space",
      [](const VectorSpace& space, const std::string& path) { save_space(space, path); },
      py::arg("space"), py::arg("path"));
}
