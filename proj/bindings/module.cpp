#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "prayatul/confusion.hpp"
#include "prayatul/core.hpp"
#include "prayatul/engine.hpp"
#include "prayatul/io.hpp"

namespace py = pybind11;
using namespace prayatul;

namespace {

LabelSequence make_sequence(std::vector<std::string> labels,
                            std::optional<std::vector<std::string>> ids) {
    LabelSequence seq;
    if (ids) {
        seq.ids = std::move(*ids);
        seq.labels = std::move(labels);
    } else {
        seq = LabelSequence::from_labels(std::move(labels));
    }
    validate_sequence(seq);
    return seq;
}

py::dict cells_dict(const PrayatulMatrix& m) {
    py::dict d;
    if (m.cells) {
        d["br"] = m.cells->br;
        d["rw"] = m.cells->rw;
        d["wr"] = m.cells->wr;
        d["bw"] = m.cells->bw;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Instance-level pairwise classifier comparison (prayatul matrix)";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<LabelSequence>(m, "LabelSequence")
        .def(py::init(&make_sequence), py::arg("labels"), py::arg("ids") = py::none(),
             "Labels with optional instance IDs; positional IDs \"0\", \"1\", ... otherwise.")
        .def_readonly("ids", &LabelSequence::ids)
        .def_readonly("labels", &LabelSequence::labels)
        .def("__len__", &LabelSequence::size);

    py::class_<PrayatulMatrix>(m, "PrayatulMatrix")
        .def(py::init([](std::int64_t br, std::int64_t rw, std::int64_t wr, std::int64_t bw) {
                 PrayatulMatrix pm;
                 pm.br = br;
                 pm.rw = rw;
                 pm.wr = wr;
                 pm.bw = bw;
                 return pm;
             }),
             py::arg("br"), py::arg("rw"), py::arg("wr"), py::arg("bw"))
        .def_readonly("br", &PrayatulMatrix::br)
        .def_readonly("rw", &PrayatulMatrix::rw)
        .def_readonly("wr", &PrayatulMatrix::wr)
        .def_readonly("bw", &PrayatulMatrix::bw)
        .def_property_readonly("total", &PrayatulMatrix::total)
        .def_property_readonly("cells", &cells_dict,
                               "Per-cell instance IDs; empty unless generated with keep_cells")
        .def("__repr__", [](const PrayatulMatrix& pm) {
            return "PrayatulMatrix(br=" + std::to_string(pm.br) + ", rw=" + std::to_string(pm.rw) +
                   ", wr=" + std::to_string(pm.wr) + ", bw=" + std::to_string(pm.bw) + ")";
        });

    py::class_<MeasureSet>(m, "MeasureSet")
        .def_readonly("sigma_c", &MeasureSet::sigma_c)
        .def_readonly("alpha", &MeasureSet::alpha)
        .def_readonly("xi_c", &MeasureSet::xi_c)
        .def_readonly("xi_e", &MeasureSet::xi_e)
        .def_readonly("phi_e", &MeasureSet::phi_e)
        .def("as_dict", [](const MeasureSet& s) {
            py::dict d;
            d["sigma_c"] = s.sigma_c;
            d["alpha"] = s.alpha;
            d["xi_c"] = s.xi_c;
            d["xi_e"] = s.xi_e;
            d["phi_e"] = s.phi_e;
            return d;
        });

    py::class_<ConfusionMatrix>(m, "ConfusionMatrix")
        .def_readonly("classes", &ConfusionMatrix::classes)
        .def_readonly("counts", &ConfusionMatrix::counts)
        .def_property_readonly("total", &ConfusionMatrix::total);

    py::class_<ConfusionSummary>(m, "ConfusionSummary")
        .def_readonly("accuracy", &ConfusionSummary::accuracy)
        .def_readonly("precision", &ConfusionSummary::precision)
        .def_readonly("recall", &ConfusionSummary::recall)
        .def_property_readonly(
            "averaging", [](const ConfusionSummary& s) { return s.averaging.to_string(); });

    m.def(
        "correctness",
        [](const LabelSequence& predictions, const LabelSequence& truth) {
            return correctness(predictions, truth).flags;
        },
        py::arg("predictions"), py::arg("truth"),
        "Per-instance right/wrong flags of predictions against truth.");

    m.def("generate_prayatul_matrix", &generate_prayatul_matrix, py::arg("truth"),
          py::arg("primary"), py::arg("alternative"), py::arg("keep_cells") = false,
          "Single-pass 2x2 joint-correctness matrix of primary and alternative vs truth.");

    m.def("comparative_deviation", &comparative_deviation, py::arg("matrix"));
    m.def("polarization", &polarization, py::arg("matrix"));
    m.def("comparative_rightness", &comparative_rightness, py::arg("matrix"));
    m.def("effective_rightness", &effective_rightness, py::arg("matrix"));
    m.def("effective_superiority", &effective_superiority, py::arg("matrix"));
    m.def("measure_set", &measure_set, py::arg("matrix"),
          "All five comparative measures; undefined values come back as None.");
    m.def("transpose", &transpose, py::arg("matrix"),
          "Swap the primary and alternative roles.");

    m.def("confusion_matrix", &confusion_matrix, py::arg("truth"), py::arg("predictions"));
    m.def(
        "summarize",
        [](const ConfusionMatrix& cm, const std::string& averaging) {
            return summarize(cm, parse_averaging(averaging));
        },
        py::arg("confusion"), py::arg("averaging") = "macro",
        "Accuracy/precision/recall under \"binary:<class>\", \"macro\" or \"micro\".");

    m.def(
        "load_labels",
        [](const std::filesystem::path& path, const std::string& format) {
            if (format != "csv" && format != "plain") {
                throw Error(ErrorCode::SchemaError,
                            "bad label format \"" + format + "\" (expected csv or plain)");
            }
            return load_labels(path, format == "csv" ? LabelFormat::CsvWithIds
                                                     : LabelFormat::PlainLabels);
        },
        py::arg("path"), py::arg("format") = "csv",
        "Load an id,label CSV file or a plain one-label-per-line file.");

    m.def(
        "align",
        [](const LabelSequence& truth, const std::vector<LabelSequence>& others) {
            return align(truth, others, true);
        },
        py::arg("truth"), py::arg("others"),
        "Reorder each sequence to the truth's instance order.");
}
