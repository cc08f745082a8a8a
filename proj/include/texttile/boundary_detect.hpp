#pragma once

#include <vector>

#include "texttile/lexical_scoring.hpp"
#include "texttile/text_ingest.hpp"

namespace texttile {

// non_decreasing: plateaus continue the walk toward a peak (default,
// smoothed series plateau often). strict: a plateau stops the walk.
enum class PlateauMode { non_decreasing, strict };

// Depth of the cohesion valley at every gap, with the statistics the
// boundary cutoff is computed from (population standard deviation).
struct DepthSeries {
    std::vector<double> depths;
    double mean = 0.0;
    double stddev = 0.0;
};

enum class Method { blocks, chains };

struct SegmentConfig {
    Method method = Method::blocks;
    BlockConfig block;
    ChainConfig chain;
    int smoothing_window = 3;
    int smoothing_rounds = 1;
    int min_separation = 3;  // accepted gaps must differ by more than this
    PlateauMode plateau = PlateauMode::non_decreasing;
};

// Boundary after paragraph `paragraph` (0-based), with the gap it came from.
struct BoundaryRecord {
    int paragraph = 0;
    int source_gap = 0;
    double depth = 0.0;
};

struct Segmentation {
    std::vector<BoundaryRecord> boundaries;  // sorted by paragraph
    SegmentConfig params;
    int w = 0;
    double depth_mean = 0.0;
    double depth_stddev = 0.0;
    double cutoff = 0.0;  // mean - stddev/2
};

// For each gap, walk left and right while values keep rising away from it;
// the depth is the sum of both rises. Zero at strict local maxima.
DepthSeries depth_scores(const GapSeries& series,
                         PlateauMode mode = PlateauMode::non_decreasing);

// Greedy selection by descending depth (ties toward the lower gap): accept a
// gap iff its depth strictly exceeds mean - stddev/2 and it lies more than
// min_separation gaps from every accepted one. Ascending result.
std::vector<int> select_boundaries(const DepthSeries& depths, int min_separation = 3);

// Nearest element of doc.paragraph_gaps, ties toward the earlier gap.
int nearest_paragraph_gap(int gap, const TokenizedDocument& doc);

// Map token-sequence gaps to boundary-after-paragraph indices; duplicates
// collapse. Throws NoParagraphGapsError on single-paragraph documents.
std::vector<int> snap_to_paragraphs(const std::vector<int>& gaps, const TokenizedDocument& doc);

// Full boundary pipeline: score series -> smooth -> depth -> select -> snap.
Segmentation segment(const TokenizedDocument& doc, const SegmentConfig& cfg = {});

}  // namespace texttile
