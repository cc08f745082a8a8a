#include "texttile/eval_harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <tuple>

#include "texttile/errors.hpp"

namespace texttile {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform double in [0,1) from the engine's raw bits; bit-reproducible
// across platforms, unlike the standard distributions.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<int> parse_int_list(std::string_view s, int line_no) {
    std::vector<int> out;
    std::string token;
    std::stringstream ss{std::string(s)};
    while (std::getline(ss, token, ',')) {
        std::string_view t = trim(token);
        if (t.empty()) continue;
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(std::string(t), &used);
            if (used != t.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw JudgeFileError(line_no, "expected integer, got '" + std::string(t) + "'");
        }
        if (value < 0) throw JudgeFileError(line_no, "negative index " + std::to_string(value));
        out.push_back(value);
    }
    return out;
}

}  // namespace

int count_sentences(std::string_view paragraph) {
    int count = 0;
    bool in_run = false;
    bool any_text = false;
    for (char c : paragraph) {
        bool ender = c == '.' || c == '!' || c == '?';
        if (ender && !in_run) ++count;
        in_run = ender;
        if (!std::isspace(static_cast<unsigned char>(c)) && !ender) any_text = true;
    }
    if (count == 0 && any_text) return 1;
    return count;
}

JudgeSet merge_short_paragraphs(const JudgeSet& judges) {
    if (!judges.sentence_counts) throw MissingSentenceCountsError();
    const std::vector<int>& counts = *judges.sentence_counts;
    if (static_cast<int>(counts.size()) != judges.num_paragraph_gaps + 1)
        throw Error("sentence counts cover " + std::to_string(counts.size()) +
                    " paragraphs but there are " + std::to_string(judges.num_paragraph_gaps) +
                    " gaps");

    // Working state: paragraph sentence counts plus, per live gap, the set
    // of judges marking it.
    std::vector<int> pars = counts;
    std::vector<std::set<std::string>> gaps(judges.num_paragraph_gaps);
    for (const auto& [judge, marked] : judges.marks)
        for (int g : marked) gaps.at(g).insert(judge);

    std::size_t pos = 0;
    while (pos < pars.size()) {
        if (pars[pos] > 3 || pars.size() < 2) {
            ++pos;
            continue;
        }
        bool has_prev = pos > 0;
        bool has_next = pos + 1 < pars.size();
        std::size_t votes_prev = has_prev ? gaps[pos - 1].size() : 0;
        std::size_t votes_next = has_next ? gaps[pos].size() : 0;
        bool forward = has_next && (!has_prev || votes_next >= votes_prev);
        if (forward) {
            pars[pos] += pars[pos + 1];
            pars.erase(pars.begin() + pos + 1);
            gaps.erase(gaps.begin() + pos);
            ++pos;  // the merged paragraph is not re-examined
        } else {
            pars[pos - 1] += pars[pos];
            pars.erase(pars.begin() + pos);
            gaps.erase(gaps.begin() + pos - 1);
        }
    }

    JudgeSet out;
    out.num_paragraph_gaps = static_cast<int>(gaps.size());
    out.sentence_counts = pars;
    for (const auto& [judge, marked] : judges.marks) out.marks[judge] = {};
    for (std::size_t g = 0; g < gaps.size(); ++g)
        for (const std::string& judge : gaps[g]) out.marks[judge].insert(static_cast<int>(g));
    return out;
}

GoldBoundaries true_boundaries(const JudgeSet& judges, int threshold) {
    if (threshold < 1) throw Error("threshold must be >= 1");
    std::map<int, int> votes;
    for (const auto& [judge, marked] : judges.marks)
        for (int g : marked) ++votes[g];
    GoldBoundaries gold;
    gold.threshold = threshold;
    for (const auto& [gap, count] : votes)
        if (count >= threshold) gold.gaps.insert(gap);
    return gold;
}

EvalReport precision_recall(const std::set<int>& hypothesis, const GoldBoundaries& gold,
                            int slack) {
    if (slack < 0 || slack > 1) throw Error("slack must be 0 or 1");

    // (distance, hypothesis gap, gold gap), matched greedily one-to-one.
    std::vector<std::tuple<int, int, int>> candidates;
    for (int h : hypothesis)
        for (int g : gold.gaps)
            if (std::abs(h - g) <= slack) candidates.emplace_back(std::abs(h - g), h, g);
    std::sort(candidates.begin(), candidates.end());

    std::set<int> used_h, used_g;
    int correct = 0;
    for (const auto& [d, h, g] : candidates) {
        if (used_h.count(h) || used_g.count(g)) continue;
        used_h.insert(h);
        used_g.insert(g);
        ++correct;
    }

    EvalReport report;
    report.slack = slack;
    report.correct = correct;
    report.inserted = static_cast<int>(hypothesis.size()) - correct;
    report.deleted = static_cast<int>(gold.gaps.size()) - correct;
    int selected = correct + report.inserted;
    report.precision = selected > 0 ? static_cast<double>(correct) / selected : 0.0;
    report.recall = !gold.gaps.empty() ? static_cast<double>(correct) / gold.gaps.size() : 0.0;
    return report;
}

BaselineReport random_baseline(int num_gaps, const GoldBoundaries& gold,
                               const BaselineConfig& cfg) {
    if (cfg.trials < 1) throw Error("trials must be >= 1");
    if (cfg.rate < 0.0 || cfg.rate > 1.0) throw Error("rate must be in [0,1]");

    BaselineReport out;
    out.config = cfg;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
        std::set<int> hypothesis;
        for (int g = 0; g < num_gaps; ++g)
            if (uniform01(rng) < cfg.rate) hypothesis.insert(g);
        EvalReport r = precision_recall(hypothesis, gold, 0);
        out.precision += r.precision;
        out.recall += r.recall;
        out.correct += r.correct;
        out.inserted += r.inserted;
        out.deleted += r.deleted;
    }
    out.precision /= cfg.trials;
    out.recall /= cfg.trials;
    out.correct /= cfg.trials;
    out.inserted /= cfg.trials;
    out.deleted /= cfg.trials;
    return out;
}

SuiteStats aggregate_reports(const std::vector<EvalReport>& reports) {
    SuiteStats stats;
    if (reports.empty()) return stats;
    const double n = static_cast<double>(reports.size());
    for (const EvalReport& r : reports) {
        stats.precision_mean += r.precision;
        stats.recall_mean += r.recall;
    }
    stats.precision_mean /= n;
    stats.recall_mean /= n;
    double pv = 0.0, rv = 0.0;
    for (const EvalReport& r : reports) {
        pv += (r.precision - stats.precision_mean) * (r.precision - stats.precision_mean);
        rv += (r.recall - stats.recall_mean) * (r.recall - stats.recall_mean);
    }
    stats.precision_stddev = std::sqrt(pv / n);
    stats.recall_stddev = std::sqrt(rv / n);
    return stats;
}

JudgeSet parse_judge_file(std::istream& in) {
    JudgeSet judges;
    judges.num_paragraph_gaps = -1;  // unknown until resolved

    std::string line;
    int line_no = 0;
    int max_mark = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string_view body = trim(line);
        if (body.empty()) continue;

        auto colon = body.find(':');
        if (colon == std::string_view::npos)
            throw JudgeFileError(line_no, "expected 'name: values'");
        std::string key{trim(body.substr(0, colon))};
        std::string_view rest = trim(body.substr(colon + 1));
        if (key.empty()) throw JudgeFileError(line_no, "missing name before ':'");

        if (key == "gaps") {
            std::vector<int> v = parse_int_list(rest, line_no);
            if (v.size() != 1) throw JudgeFileError(line_no, "gaps header needs one integer");
            judges.num_paragraph_gaps = v[0];
        } else if (key == "sentences") {
            judges.sentence_counts = parse_int_list(rest, line_no);
        } else {
            if (judges.marks.count(key))
                throw JudgeFileError(line_no, "duplicate judge id '" + key + "'");
            std::vector<int> v = parse_int_list(rest, line_no);
            std::set<int> marks(v.begin(), v.end());
            if (!marks.empty()) max_mark = std::max(max_mark, *marks.rbegin());
            judges.marks[key] = std::move(marks);
        }
    }

    if (judges.marks.empty()) throw JudgeFileError(line_no, "no judge lines found");
    if (judges.num_paragraph_gaps < 0 && judges.sentence_counts)
        judges.num_paragraph_gaps = static_cast<int>(judges.sentence_counts->size()) - 1;
    if (judges.num_paragraph_gaps < 0) judges.num_paragraph_gaps = max_mark + 1;
    if (max_mark >= judges.num_paragraph_gaps)
        throw JudgeFileError(line_no, "mark " + std::to_string(max_mark) +
                                          " out of range for " +
                                          std::to_string(judges.num_paragraph_gaps) + " gaps");
    if (judges.sentence_counts &&
        static_cast<int>(judges.sentence_counts->size()) != judges.num_paragraph_gaps + 1)
        throw JudgeFileError(line_no, "sentences line must list gaps+1 paragraph counts");
    return judges;
}

JudgeSet load_judge_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read judge file: " + path.string());
    return parse_judge_file(in);
}

}  // namespace texttile
