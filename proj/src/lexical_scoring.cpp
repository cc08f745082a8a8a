#include "texttile/lexical_scoring.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "texttile/errors.hpp"

namespace texttile {

TermWeights block_vector(const TermTable& table, int lo, int hi) {
    if (lo < 0 || hi < lo || hi >= table.num_sequences)
        throw RangeError("block range [" + std::to_string(lo) + "," + std::to_string(hi) +
                         "] out of bounds for " + std::to_string(table.num_sequences) +
                         " sequences");
    TermWeights weights;
    for (const auto& [term, postings] : table.postings) {
        long sum = 0;
        for (const Posting& p : postings) {
            if (p.sequence > hi) break;
            if (p.sequence >= lo) sum += p.frequency;
        }
        if (sum > 0) weights[term] = static_cast<double>(sum);
    }
    return weights;
}

double cosine(const TermWeights& v1, const TermWeights& v2) {
    double dot = 0.0, norm1 = 0.0, norm2 = 0.0;
    for (const auto& [term, w] : v1) {
        norm1 += w * w;
        auto it = v2.find(term);
        if (it != v2.end()) dot += w * it->second;
    }
    for (const auto& [term, w] : v2) norm2 += w * w;
    if (norm1 == 0.0 || norm2 == 0.0) return 0.0;
    return std::min(1.0, dot / std::sqrt(norm1 * norm2));
}

GapSeries block_similarity_series(const TermTable& table, const BlockConfig& cfg) {
    const int n = table.num_sequences;
    if (n < 2) throw TooShortError("need at least 2 token-sequences, have " + std::to_string(n));
    if (cfg.k < 1) throw Error("blocksize k must be >= 1");

    const int extra = cfg.extent == BlockExtent::k_plus_1 ? 1 : 0;
    GapSeries series;
    series.kind = SeriesKind::raw_block;
    series.values.reserve(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        TermWeights left = block_vector(table, std::max(0, i - cfg.k + 1 - extra), i);
        TermWeights right = block_vector(table, i + 1, std::min(n - 1, i + cfg.k + extra));
        series.values.push_back(cosine(left, right));
    }
    return series;
}

std::vector<Chain> extract_chains(const TermTable& table, const ChainConfig& cfg) {
    if (cfg.hiatus < 1) throw Error("chain hiatus must be >= 1");
    if (cfg.min_length < 2) throw Error("chain min_length must be >= 2");

    std::vector<Chain> chains;
    for (const auto& [term, postings] : table.postings) {
        std::size_t run_begin = 0;
        for (std::size_t i = 1; i <= postings.size(); ++i) {
            bool run_ends = i == postings.size() ||
                            postings[i].sequence - postings[i - 1].sequence > cfg.hiatus;
            if (!run_ends) continue;
            if (i - run_begin >= static_cast<std::size_t>(cfg.min_length))
                chains.push_back({term, postings[run_begin].sequence, postings[i - 1].sequence});
            run_begin = i;
        }
    }
    return chains;
}

GapSeries chain_score_series(const std::vector<Chain>& chains, int num_sequences,
                             ChainScoring scoring) {
    if (num_sequences < 2)
        throw TooShortError("need at least 2 token-sequences, have " +
                            std::to_string(num_sequences));
    GapSeries series;
    series.kind = SeriesKind::raw_chain;
    series.values.assign(num_sequences - 1, 0.0);
    const int last_gap = num_sequences - 2;

    if (scoring == ChainScoring::spanning) {
        // Gap i is crossed when start <= i and end >= i+1.
        for (const Chain& c : chains) {
            int lo = std::max(0, c.start);
            int hi = std::min(last_gap, c.end - 1);
            for (int i = lo; i <= hi; ++i) series.values[i] += 1.0;
        }
    } else {
        // Count chain ends at sequence i and starts at sequence i+1, then
        // invert against the chain count so that boundaries are valleys.
        std::vector<int> events(num_sequences - 1, 0);
        for (const Chain& c : chains) {
            if (c.end <= last_gap) ++events[c.end];
            if (c.start >= 1 && c.start - 1 <= last_gap) ++events[c.start - 1];
        }
        for (int i = 0; i <= last_gap; ++i)
            series.values[i] = static_cast<double>(static_cast<int>(chains.size()) - events[i]);
    }
    return series;
}

GapSeries smooth(const GapSeries& series, int window, int rounds) {
    if (window < 1 || window % 2 == 0) throw Error("smoothing window must be odd and >= 1");
    if (rounds < 0) throw Error("smoothing rounds must be >= 0");

    GapSeries out;
    out.kind = SeriesKind::smoothed;
    out.values = series.values;
    const int n = static_cast<int>(out.values.size());
    const int half = (window - 1) / 2;

    std::vector<double> next(out.values.size());
    for (int r = 0; r < rounds; ++r) {
        for (int i = 0; i < n; ++i) {
            int lo = std::max(0, i - half);
            int hi = std::min(n - 1, i + half);
            double sum = 0.0;
            for (int j = lo; j <= hi; ++j) sum += out.values[j];
            next[i] = sum / (hi - lo + 1);
        }
        out.values.swap(next);
    }
    return out;
}

}  // namespace texttile
