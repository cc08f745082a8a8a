#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "texttile/boundary_detect.hpp"
#include "texttile/eval_harness.hpp"
#include "texttile/lexical_scoring.hpp"
#include "texttile/text_ingest.hpp"

namespace texttile {

// Every knob of the tiling pipeline with its default value; the CLI maps
// flags onto these one-to-one.
struct RunConfig {
    int w = 20;
    int k = 6;
    Method method = Method::blocks;
    int smoothing_window = 3;
    int smoothing_rounds = 1;
    int min_separation = 3;
    std::optional<std::string> stopword_path;
    std::uint64_t seed = 0;
    BlockExtent block_extent = BlockExtent::k_sequences;
    int chain_hiatus = 5;
    int chain_min_length = 2;
    ChainScoring chain_scoring = ChainScoring::spanning;
    TokenCounting token_counting = TokenCounting::all_tokens;
    PlateauMode plateau = PlateauMode::non_decreasing;
};

SegmentConfig to_segment_config(const RunConfig& cfg);

// Stopword file named in the config, or the bundled list.
StopwordSet resolve_stopwords(const RunConfig& cfg);

TokenizedDocument tokenize_text(const RawDocument& doc, const RunConfig& cfg,
                                const StopwordSet& stopwords);

// Whole pipeline from raw text to boundaries.
Segmentation run_segmentation(const RawDocument& doc, const RunConfig& cfg);

// Per-gap score table backing the `scores` command and plots.
struct ScoreTable {
    GapSeries raw;
    GapSeries smoothed;
    DepthSeries depths;
    std::vector<int> boundary_gaps;  // source gaps of the final boundaries
};

ScoreTable run_scores(const RawDocument& doc, const RunConfig& cfg);

}  // namespace texttile
