#pragma once

#include <map>
#include <string>
#include <vector>

#include "texttile/text_ingest.hpp"

namespace texttile {

enum class SeriesKind { raw_block, raw_chain, smoothed, depth };

// One real-valued score per token-sequence gap; gap i sits between
// sequences i and i+1, so values.size() == num_sequences - 1.
struct GapSeries {
    std::vector<double> values;
    SeriesKind kind = SeriesKind::raw_block;
};

// Left block covers the k sequences ending at gap i, right block the k
// sequences starting at i+1; k_plus_1 widens both by one sequence.
enum class BlockExtent { k_sequences, k_plus_1 };

struct BlockConfig {
    int k = 6;
    BlockExtent extent = BlockExtent::k_sequences;
};

// spanning: gap score = number of chains strictly crossing the gap.
// boundary_events: gap score = chain count minus the number of chain
// ends/starts adjacent to the gap, so valleys still mark boundaries.
enum class ChainScoring { spanning, boundary_events };

struct ChainConfig {
    int hiatus = 5;      // max sequence-index gap inside one chain
    int min_length = 2;  // min occurrences to form a chain
    ChainScoring scoring = ChainScoring::spanning;
};

// Maximal run of a term's occurrences with no hiatus longer than allowed;
// span is inclusive in sequence indices.
struct Chain {
    std::string term;
    int start = 0;
    int end = 0;
};

using TermWeights = std::map<std::string, double>;

// Per-term summed frequency over sequences lo..hi inclusive; zero-weight
// terms omitted. Throws RangeError on out-of-bounds indices.
TermWeights block_vector(const TermTable& table, int lo, int hi);

// sum w1*w2 / sqrt(sum w1^2 * sum w2^2); 0 when either vector is empty.
double cosine(const TermWeights& v1, const TermWeights& v2);

// Cosine of the two blocks flanking every gap; blocks truncate at the
// document edges so every gap gets a score. Throws TooShortError when
// fewer than two sequences.
GapSeries block_similarity_series(const TermTable& table, const BlockConfig& cfg = {});

std::vector<Chain> extract_chains(const TermTable& table, const ChainConfig& cfg = {});

GapSeries chain_score_series(const std::vector<Chain>& chains, int num_sequences,
                             ChainScoring scoring = ChainScoring::spanning);

// Mean filter, `rounds` passes over an odd window that shrinks at the
// edges. rounds = 0 returns the input relabeled as smoothed.
GapSeries smooth(const GapSeries& series, int window = 3, int rounds = 1);

}  // namespace texttile
