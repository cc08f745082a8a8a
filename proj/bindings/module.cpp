#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "texttile/texttile.hpp"

namespace py = pybind11;
using namespace texttile;

namespace {

Segmentation tile_text(const std::string& text, const RunConfig& cfg) {
    return run_segmentation(RawDocument{text, "<python>"}, cfg);
}

ScoreTable score_text(const std::string& text, const RunConfig& cfg) {
    return run_scores(RawDocument{text, "<python>"}, cfg);
}

TokenizedDocument tokenize_string(const std::string& text, const RunConfig& cfg) {
    StopwordSet stopwords = resolve_stopwords(cfg);
    return tokenize_text(RawDocument{text, "<python>"}, cfg, stopwords);
}

GoldBoundaries make_gold(const std::set<int>& gaps, int threshold) {
    return GoldBoundaries{gaps, threshold};
}

}  // namespace

PYBIND11_MODULE(_texttile, m) {
    m.doc() = "Lexical-cohesion subtopic segmentation (TextTiling) core";
#ifdef TEXTTILE_VERSION
    m.attr("__version__") = TEXTTILE_VERSION;
#endif
    m.attr("STEMMER_VERSION") = kStemmerVersion;

    py::register_exception<Error>(m, "TextTileError", PyExc_ValueError);

    py::enum_<Method>(m, "Method")
        .value("blocks", Method::blocks)
        .value("chains", Method::chains);
    py::enum_<BlockExtent>(m, "BlockExtent")
        .value("k", BlockExtent::k_sequences)
        .value("k_plus_1", BlockExtent::k_plus_1);
    py::enum_<ChainScoring>(m, "ChainScoring")
        .value("spanning", ChainScoring::spanning)
        .value("boundary_events", ChainScoring::boundary_events);
    py::enum_<TokenCounting>(m, "TokenCounting")
        .value("all_tokens", TokenCounting::all_tokens)
        .value("content_only", TokenCounting::content_only);
    py::enum_<PlateauMode>(m, "PlateauMode")
        .value("non_decreasing", PlateauMode::non_decreasing)
        .value("strict", PlateauMode::strict);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("w", &RunConfig::w)
        .def_readwrite("k", &RunConfig::k)
        .def_readwrite("method", &RunConfig::method)
        .def_readwrite("smoothing_window", &RunConfig::smoothing_window)
        .def_readwrite("smoothing_rounds", &RunConfig::smoothing_rounds)
        .def_readwrite("min_separation", &RunConfig::min_separation)
        .def_readwrite("stopword_path", &RunConfig::stopword_path)
        .def_readwrite("seed", &RunConfig::seed)
        .def_readwrite("block_extent", &RunConfig::block_extent)
        .def_readwrite("chain_hiatus", &RunConfig::chain_hiatus)
        .def_readwrite("chain_min_length", &RunConfig::chain_min_length)
        .def_readwrite("chain_scoring", &RunConfig::chain_scoring)
        .def_readwrite("token_counting", &RunConfig::token_counting)
        .def_readwrite("plateau", &RunConfig::plateau);

    py::class_<BoundaryRecord>(m, "Boundary")
        .def_readonly("paragraph", &BoundaryRecord::paragraph)
        .def_readonly("source_gap", &BoundaryRecord::source_gap)
        .def_readonly("depth", &BoundaryRecord::depth)
        .def("__repr__", [](const BoundaryRecord& b) {
            return "Boundary(paragraph=" + std::to_string(b.paragraph) +
                   ", source_gap=" + std::to_string(b.source_gap) +
                   ", depth=" + std::to_string(b.depth) + ")";
        });

    py::class_<Segmentation>(m, "Segmentation")
        .def_readonly("boundaries", &Segmentation::boundaries)
        .def_readonly("w", &Segmentation::w)
        .def_readonly("depth_mean", &Segmentation::depth_mean)
        .def_readonly("depth_stddev", &Segmentation::depth_stddev)
        .def_readonly("cutoff", &Segmentation::cutoff)
        .def_property_readonly("paragraphs", [](const Segmentation& s) {
            std::vector<int> out;
            for (const auto& b : s.boundaries) out.push_back(b.paragraph);
            return out;
        });

    py::class_<DepthSeries>(m, "DepthSeries")
        .def_readonly("depths", &DepthSeries::depths)
        .def_readonly("mean", &DepthSeries::mean)
        .def_readonly("stddev", &DepthSeries::stddev);

    py::class_<ScoreTable>(m, "ScoreTable")
        .def_property_readonly("raw", [](const ScoreTable& t) { return t.raw.values; })
        .def_property_readonly("smoothed", [](const ScoreTable& t) { return t.smoothed.values; })
        .def_readonly("depths", &ScoreTable::depths)
        .def_readonly("boundary_gaps", &ScoreTable::boundary_gaps);

    py::class_<TokenSequence>(m, "TokenSequence")
        .def_readonly("index", &TokenSequence::index)
        .def_readonly("term_counts", &TokenSequence::term_counts)
        .def_property_readonly("tokens", [](const TokenSequence& s) {
            std::vector<std::pair<std::string, bool>> out;
            for (const auto& t : s.tokens) out.emplace_back(t.term, t.is_content);
            return out;
        });

    py::class_<TokenizedDocument>(m, "TokenizedDocument")
        .def_readonly("sequences", &TokenizedDocument::sequences)
        .def_readonly("paragraph_gaps", &TokenizedDocument::paragraph_gaps)
        .def_readonly("break_gaps", &TokenizedDocument::break_gaps)
        .def_readonly("w", &TokenizedDocument::w)
        .def_readonly("num_paragraphs", &TokenizedDocument::num_paragraphs);

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("precision", &EvalReport::precision)
        .def_readonly("recall", &EvalReport::recall)
        .def_readonly("correct", &EvalReport::correct)
        .def_readonly("inserted", &EvalReport::inserted)
        .def_readonly("deleted", &EvalReport::deleted)
        .def_readonly("slack", &EvalReport::slack)
        .def("__repr__", [](const EvalReport& r) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "EvalReport(precision=%.3f, recall=%.3f, C=%d, I=%d, D=%d)", r.precision,
                          r.recall, r.correct, r.inserted, r.deleted);
            return std::string(buf);
        });

    py::class_<BaselineReport>(m, "BaselineReport")
        .def_readonly("precision", &BaselineReport::precision)
        .def_readonly("recall", &BaselineReport::recall)
        .def_readonly("correct", &BaselineReport::correct)
        .def_readonly("inserted", &BaselineReport::inserted)
        .def_readonly("deleted", &BaselineReport::deleted);

    m.def("stem", &porter_stem, py::arg("word"), "Porter-stem a lowercase word");
    m.def("normalize_term", &normalize_term, py::arg("surface"),
          "lowercase, strip possessives, stem");
    m.def(
        "split_paragraphs",
        [](const std::string& text) { return split_paragraphs(RawDocument{text, "<python>"}); },
        py::arg("text"));
    m.def("tokenize", &tokenize_string, py::arg("text"), py::arg("config") = RunConfig{});
    m.def("tile", &tile_text, py::arg("text"), py::arg("config") = RunConfig{},
          "Segment text; boundary p means a topic break after paragraph p (0-based)");
    m.def("gap_scores", &score_text, py::arg("text"), py::arg("config") = RunConfig{});
    m.def("cosine", &cosine, py::arg("v1"), py::arg("v2"));
    m.def(
        "smooth",
        [](const std::vector<double>& values, int window, int rounds) {
            return smooth(GapSeries{values, SeriesKind::raw_block}, window, rounds).values;
        },
        py::arg("values"), py::arg("window") = 3, py::arg("rounds") = 1);
    m.def(
        "depth_scores",
        [](const std::vector<double>& values) {
            return depth_scores(GapSeries{values, SeriesKind::smoothed});
        },
        py::arg("values"));
    m.def("select_boundaries", &select_boundaries, py::arg("depths"),
          py::arg("min_separation") = 3);
    m.def(
        "precision_recall",
        [](const std::set<int>& hypothesis, const std::set<int>& gold, int slack) {
            return precision_recall(hypothesis, make_gold(gold, 1), slack);
        },
        py::arg("hypothesis"), py::arg("gold"), py::arg("slack") = 0);
    m.def(
        "random_baseline",
        [](int num_gaps, const std::set<int>& gold, double rate, int trials,
           std::uint64_t seed) {
            return random_baseline(num_gaps, make_gold(gold, 1), BaselineConfig{rate, trials, seed});
        },
        py::arg("num_gaps"), py::arg("gold"), py::arg("rate") = 0.41,
        py::arg("trials") = 10000, py::arg("seed") = 0);
    m.def(
        "true_boundaries",
        [](const std::map<std::string, std::set<int>>& marks, int num_gaps, int threshold) {
            JudgeSet judges;
            judges.num_paragraph_gaps = num_gaps;
            judges.marks = marks;
            return true_boundaries(judges, threshold).gaps;
        },
        py::arg("marks"), py::arg("num_gaps"), py::arg("threshold") = 3);
}
