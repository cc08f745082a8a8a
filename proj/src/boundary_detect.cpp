#include "texttile/boundary_detect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>

#include "texttile/errors.hpp"

namespace texttile {
namespace {

// Paragraph index whose break sits at this gap; the earliest break wins when
// several short paragraphs share one gap.
int paragraph_for_gap(int gap, const TokenizedDocument& doc) {
    for (std::size_t b = 0; b < doc.break_gaps.size(); ++b)
        if (doc.break_gaps[b] == gap) return static_cast<int>(b);
    throw Error("gap " + std::to_string(gap) + " is not a paragraph gap");
}

}  // namespace

DepthSeries depth_scores(const GapSeries& series, PlateauMode mode) {
    const std::vector<double>& v = series.values;
    const int n = static_cast<int>(v.size());
    if (n == 0) throw TooShortError("empty gap series");

    auto keeps_rising = [&](double next, double here) {
        return mode == PlateauMode::non_decreasing ? next >= here : next > here;
    };

    DepthSeries out;
    out.depths.reserve(n);
    for (int i = 0; i < n; ++i) {
        int l = i;
        while (l - 1 >= 0 && keeps_rising(v[l - 1], v[l])) --l;
        int r = i;
        while (r + 1 < n && keeps_rising(v[r + 1], v[r])) ++r;
        out.depths.push_back((v[l] - v[i]) + (v[r] - v[i]));
    }

    out.mean = std::accumulate(out.depths.begin(), out.depths.end(), 0.0) / n;
    double var = 0.0;
    for (double d : out.depths) var += (d - out.mean) * (d - out.mean);
    out.stddev = std::sqrt(var / n);
    return out;
}

std::vector<int> select_boundaries(const DepthSeries& depths, int min_separation) {
    if (min_separation < 0) throw Error("min_separation must be >= 0");

    std::vector<int> order(depths.depths.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (depths.depths[a] != depths.depths[b]) return depths.depths[a] > depths.depths[b];
        return a < b;
    });

    const double cutoff = depths.mean - depths.stddev / 2.0;
    std::vector<int> accepted;
    for (int gap : order) {
        if (!(depths.depths[gap] > cutoff)) break;  // order is sorted by depth
        bool clear = std::all_of(accepted.begin(), accepted.end(), [&](int a) {
            return std::abs(gap - a) > min_separation;
        });
        if (clear) accepted.push_back(gap);
    }
    std::sort(accepted.begin(), accepted.end());
    return accepted;
}

int nearest_paragraph_gap(int gap, const TokenizedDocument& doc) {
    const std::vector<int>& pgs = doc.paragraph_gaps;
    if (pgs.empty()) throw NoParagraphGapsError();

    auto it = std::lower_bound(pgs.begin(), pgs.end(), gap);
    if (it == pgs.end()) return pgs.back();
    if (it == pgs.begin()) return pgs.front();
    int above = *it;
    int below = *(it - 1);
    return (gap - below <= above - gap) ? below : above;  // tie -> earlier
}

std::vector<int> snap_to_paragraphs(const std::vector<int>& gaps, const TokenizedDocument& doc) {
    std::vector<int> result;
    for (int g : gaps) result.push_back(paragraph_for_gap(nearest_paragraph_gap(g, doc), doc));
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

Segmentation segment(const TokenizedDocument& doc, const SegmentConfig& cfg) {
    if (doc.num_paragraphs < 2) throw NoParagraphGapsError();
    const int n = static_cast<int>(doc.sequences.size());
    if (n < 2) throw TooShortError("need at least 2 token-sequences, have " + std::to_string(n));

    GapSeries raw;
    if (cfg.method == Method::blocks) {
        raw = block_similarity_series(build_term_table(doc), cfg.block);
    } else {
        TermTable table = build_term_table(doc);
        raw = chain_score_series(extract_chains(table, cfg.chain), n, cfg.chain.scoring);
    }

    GapSeries smoothed = smooth(raw, cfg.smoothing_window, cfg.smoothing_rounds);
    DepthSeries depths = depth_scores(smoothed, cfg.plateau);
    std::vector<int> gaps = select_boundaries(depths, cfg.min_separation);

    // Snap each accepted gap to its paragraph; when several gaps land on the
    // same paragraph break, keep the deepest one as provenance.
    std::map<int, BoundaryRecord> by_paragraph;
    for (int g : gaps) {
        int p = paragraph_for_gap(nearest_paragraph_gap(g, doc), doc);
        BoundaryRecord rec{p, g, depths.depths[g]};
        auto [it, inserted] = by_paragraph.emplace(p, rec);
        if (!inserted && rec.depth > it->second.depth) it->second = rec;
    }

    Segmentation seg;
    seg.params = cfg;
    seg.w = doc.w;
    seg.depth_mean = depths.mean;
    seg.depth_stddev = depths.stddev;
    seg.cutoff = depths.mean - depths.stddev / 2.0;
    for (const auto& [p, rec] : by_paragraph) seg.boundaries.push_back(rec);
    return seg;
}

}  // namespace texttile
