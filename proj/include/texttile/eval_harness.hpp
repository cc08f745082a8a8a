#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace texttile {

// Per-judge boundary marks over the paragraph gaps of one text. Gap p is
// the boundary after paragraph p, 0-based.
struct JudgeSet {
    int num_paragraph_gaps = 0;
    std::map<std::string, std::set<int>> marks;
    std::optional<std::vector<int>> sentence_counts;  // one per paragraph
};

// Paragraph gaps marked by at least `threshold` judges.
struct GoldBoundaries {
    std::set<int> gaps;
    int threshold = 3;
};

struct EvalReport {
    double precision = 0.0;  // C/(C+I), 0 when nothing was hypothesized
    double recall = 0.0;     // C/|gold|, 0 when gold is empty
    int correct = 0;
    int inserted = 0;
    int deleted = 0;
    int slack = 0;
};

struct BaselineConfig {
    double rate = 0.41;
    int trials = 10000;
    std::uint64_t seed = 0;
};

// Trial-averaged scores of the random-placement baseline.
struct BaselineReport {
    double precision = 0.0;
    double recall = 0.0;
    double correct = 0.0;
    double inserted = 0.0;
    double deleted = 0.0;
    BaselineConfig config;
};

// Mean and population standard deviation of per-text scores.
struct SuiteStats {
    double precision_mean = 0.0;
    double precision_stddev = 0.0;
    double recall_mean = 0.0;
    double recall_stddev = 0.0;
};

// Sentence count by terminal punctuation (. ! ?); a run counts once, and
// non-empty text with no terminal punctuation counts as one sentence.
int count_sentences(std::string_view paragraph);

// Merge every paragraph of <= 3 sentences into the neighbor whose shared gap
// carries more judge votes (ties toward the following neighbor). One pass in
// original paragraph order; a merged result is not re-examined. Votes on the
// vanished gap are dropped and remaining gaps renumbered. Requires
// sentence_counts.
JudgeSet merge_short_paragraphs(const JudgeSet& judges);

GoldBoundaries true_boundaries(const JudgeSet& judges, int threshold = 3);

// One-to-one matching, greedy by ascending distance then ascending index;
// with slack s a hypothesis gap may match a gold gap up to s away.
EvalReport precision_recall(const std::set<int>& hypothesis, const GoldBoundaries& gold,
                            int slack = 0);

// Each trial marks every gap with probability rate; per-trial scores use
// slack 0. Per-trial RNG streams derive from the seed, so results are
// reproducible regardless of evaluation order.
BaselineReport random_baseline(int num_gaps, const GoldBoundaries& gold,
                               const BaselineConfig& cfg = {});

SuiteStats aggregate_reports(const std::vector<EvalReport>& reports);

// Judge file: `judge_id: g1,g2,...` per line, optional `gaps: N` header and
// `sentences: c1,c2,...` line, '#' comments. Throws JudgeFileError with the
// offending line number.
JudgeSet parse_judge_file(std::istream& in);
JudgeSet load_judge_file(const std::filesystem::path& path);

}  // namespace texttile
