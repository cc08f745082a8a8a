#include "texttile/pipeline.hpp"

namespace texttile {

SegmentConfig to_segment_config(const RunConfig& cfg) {
    SegmentConfig sc;
    sc.method = cfg.method;
    sc.block = BlockConfig{cfg.k, cfg.block_extent};
    sc.chain = ChainConfig{cfg.chain_hiatus, cfg.chain_min_length, cfg.chain_scoring};
    sc.smoothing_window = cfg.smoothing_window;
    sc.smoothing_rounds = cfg.smoothing_rounds;
    sc.min_separation = cfg.min_separation;
    sc.plateau = cfg.plateau;
    return sc;
}

StopwordSet resolve_stopwords(const RunConfig& cfg) {
    if (cfg.stopword_path) return StopwordSet::from_file(*cfg.stopword_path);
    return StopwordSet::bundled();
}

TokenizedDocument tokenize_text(const RawDocument& doc, const RunConfig& cfg,
                                const StopwordSet& stopwords) {
    return tokenize(doc, cfg.w, stopwords, cfg.token_counting);
}

Segmentation run_segmentation(const RawDocument& doc, const RunConfig& cfg) {
    StopwordSet stopwords = resolve_stopwords(cfg);
    return segment(tokenize_text(doc, cfg, stopwords), to_segment_config(cfg));
}

ScoreTable run_scores(const RawDocument& doc, const RunConfig& cfg) {
    StopwordSet stopwords = resolve_stopwords(cfg);
    TokenizedDocument tdoc = tokenize_text(doc, cfg, stopwords);
    SegmentConfig sc = to_segment_config(cfg);

    ScoreTable table;
    if (cfg.method == Method::blocks) {
        table.raw = block_similarity_series(build_term_table(tdoc), sc.block);
    } else {
        TermTable tt = build_term_table(tdoc);
        table.raw = chain_score_series(extract_chains(tt, sc.chain),
                                       static_cast<int>(tdoc.sequences.size()), sc.chain.scoring);
    }
    table.smoothed = smooth(table.raw, sc.smoothing_window, sc.smoothing_rounds);
    table.depths = depth_scores(table.smoothed, sc.plateau);

    Segmentation seg = segment(tdoc, sc);
    for (const BoundaryRecord& b : seg.boundaries) table.boundary_gaps.push_back(b.source_gap);
    return table;
}

}  // namespace texttile
