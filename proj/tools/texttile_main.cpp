#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "texttile/texttile.hpp"

namespace {

using namespace texttile;

struct CliOptions {
    RunConfig run;
    std::string path;
    bool quiet = false;
    // distrib
    std::string terms_arg;
    int top = 10;
    bool top_given = false;
    // eval
    std::string judges_path;
    std::string hypothesis_path;
    int threshold = 3;
    int slack = 0;
    std::optional<double> baseline_rate;
    int trials = 10000;
    bool merge_short = false;
};

RawDocument read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return RawDocument{buf.str(), path};
}

// Flag beats the TEXTTILE_STOPWORDS environment variable.
void resolve_stopword_source(RunConfig& cfg) {
    if (cfg.stopword_path) return;
    if (const char* env = std::getenv("TEXTTILE_STOPWORDS"); env && *env)
        cfg.stopword_path = std::string(env);
}

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--w", cfg.w, "tokens per token-sequence")->capture_default_str();
    cmd->add_option("--k", cfg.k, "blocksize in token-sequences")->capture_default_str();
    cmd->add_option("--method", cfg.method, "scoring method")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Method>{{"blocks", Method::blocks}, {"chains", Method::chains}},
            CLI::ignore_case))
        ->default_str("blocks");
    cmd->add_option("--smoothing-window", cfg.smoothing_window, "smoothing window (odd)")
        ->capture_default_str();
    cmd->add_option("--smoothing-rounds", cfg.smoothing_rounds, "smoothing rounds")
        ->capture_default_str();
    cmd->add_option("--min-separation", cfg.min_separation,
                    "required token-sequence distance between boundaries")
        ->capture_default_str();
    cmd->add_option("--stopwords", cfg.stopword_path,
                    "stopword file (one term per line, # comments); "
                    "overrides TEXTTILE_STOPWORDS and the bundled list");
    cmd->add_option("--seed", cfg.seed, "seed for randomized runs")->capture_default_str();
    cmd->add_option("--block-extent", cfg.block_extent, "sequences per block")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, BlockExtent>{{"k", BlockExtent::k_sequences},
                                               {"k+1", BlockExtent::k_plus_1}}))
        ->default_str("k");
    cmd->add_option("--chain-hiatus", cfg.chain_hiatus,
                    "max sequence gap inside one lexical chain")
        ->capture_default_str();
    cmd->add_option("--chain-min-length", cfg.chain_min_length,
                    "min occurrences to form a chain")
        ->capture_default_str();
    cmd->add_option("--chain-scoring", cfg.chain_scoring, "chain gap scoring")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ChainScoring>{{"spanning", ChainScoring::spanning},
                                                {"events", ChainScoring::boundary_events}}))
        ->default_str("spanning");
    cmd->add_option("--token-counting", cfg.token_counting,
                    "which tokens count toward w")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, TokenCounting>{{"all", TokenCounting::all_tokens},
                                                 {"content", TokenCounting::content_only}}))
        ->default_str("all");
    cmd->add_option("--plateau", cfg.plateau, "plateau handling in the depth scan")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, PlateauMode>{{"non-decreasing", PlateauMode::non_decreasing},
                                               {"strict", PlateauMode::strict}}))
        ->default_str("non-decreasing");
}

int cmd_tile(const CliOptions& opt) {
    Segmentation seg = run_segmentation(read_document(opt.path), opt.run);
    std::cout << std::fixed << std::setprecision(6);
    for (const BoundaryRecord& b : seg.boundaries) {
        if (opt.quiet)
            std::cout << b.paragraph << "\n";
        else
            std::cout << "boundary after paragraph " << b.paragraph << " (gap " << b.source_gap
                      << ", depth " << b.depth << ")\n";
    }
    return 0;
}

int cmd_scores(const CliOptions& opt) {
    ScoreTable table = run_scores(read_document(opt.path), opt.run);
    std::set<int> flagged(table.boundary_gaps.begin(), table.boundary_gaps.end());
    std::cout << "gap\traw\tsmoothed\tdepth\tis_boundary\n" << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < table.raw.values.size(); ++i) {
        std::cout << i << '\t' << table.raw.values[i] << '\t' << table.smoothed.values[i] << '\t'
                  << table.depths.depths[i] << '\t' << (flagged.count(static_cast<int>(i)) ? 1 : 0)
                  << "\n";
    }
    return 0;
}

int cmd_distrib(const CliOptions& opt) {
    StopwordSet stopwords = resolve_stopwords(opt.run);
    TokenizedDocument doc = tokenize_text(read_document(opt.path), opt.run, stopwords);
    TermTable table = build_term_table(doc);

    struct Row {
        long total;
        std::string term;
    };
    std::vector<Row> rows;
    auto total_of = [&](const std::string& term) {
        long total = 0;
        for (const Posting& p : table.postings.at(term)) total += p.frequency;
        return total;
    };

    if (!opt.terms_arg.empty()) {
        std::stringstream ss(opt.terms_arg);
        std::string surface;
        while (std::getline(ss, surface, ',')) {
            if (surface.empty()) continue;
            std::string term = normalize_term(surface);
            if (!table.postings.count(term)) {
                std::cerr << "texttile: warning: unknown term: " << surface << "\n";
                continue;
            }
            rows.push_back({total_of(term), term});
        }
    } else {
        for (const auto& [term, postings] : table.postings) rows.push_back({total_of(term), term});
        std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
            if (a.total != b.total) return a.total > b.total;
            return a.term < b.term;
        });
        if (static_cast<int>(rows.size()) > opt.top) rows.resize(opt.top);
    }

    const int n = static_cast<int>(doc.sequences.size());
    std::size_t count_w = 3, term_w = 4;
    for (const Row& r : rows) {
        count_w = std::max(count_w, std::to_string(r.total).size());
        term_w = std::max(term_w, r.term.size());
    }

    // Ruler in the style of a term-distribution plot: one character column
    // per token-sequence, labels every 5 columns (0-based indices).
    std::string ruler(static_cast<std::size_t>(n), ' ');
    for (int c = 5; c < n; c += 5) {
        std::string label = std::to_string(c);
        if (static_cast<int>(label.size()) <= c + 1)
            ruler.replace(c + 1 - label.size(), label.size(), label);
    }
    std::string dashes(count_w + 1 + term_w + 1 + n, '-');
    std::string seq_head = "seq";
    seq_head.resize(term_w, ' ');

    auto print_ruler = [&] {
        std::cout << dashes << "\n"
                  << std::string(count_w, ' ') << ' ' << seq_head << ' ' << ruler << "\n"
                  << dashes << "\n";
    };

    print_ruler();
    for (const Row& r : rows) {
        std::string cells(static_cast<std::size_t>(n), ' ');
        for (const Posting& p : table.postings.at(r.term)) {
            int f = std::min(p.frequency, 9);
            cells[p.sequence] = static_cast<char>('0' + f);
        }
        std::string term = r.term;
        term.resize(term_w, ' ');
        std::cout << std::setw(static_cast<int>(count_w)) << r.total << ' ' << term << ' ' << cells
                  << "\n";
    }
    print_ruler();
    return 0;
}

std::set<int> read_hypothesis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read hypothesis file: " + path);
    std::set<int> gaps;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::stringstream ss(line);
        int g;
        while (ss >> g) {
            if (g < 0) throw Error("hypothesis file: negative gap index " + std::to_string(g));
            gaps.insert(g);
        }
        if (!ss.eof()) {
            std::string junk;
            ss.clear();
            if (ss >> junk) throw Error("hypothesis file: expected integer, got '" + junk + "'");
        }
    }
    return gaps;
}

int cmd_eval(const CliOptions& opt) {
    JudgeSet judges = load_judge_file(opt.judges_path);

    std::set<int> hypothesis;
    std::optional<int> doc_gaps;
    if (!opt.path.empty()) {
        RawDocument raw = read_document(opt.path);
        Segmentation seg = run_segmentation(raw, opt.run);
        for (const BoundaryRecord& b : seg.boundaries) hypothesis.insert(b.paragraph);
        doc_gaps = static_cast<int>(split_paragraphs(raw).size()) - 1;
    } else {
        hypothesis = read_hypothesis_file(opt.hypothesis_path);
    }

    if (doc_gaps && judges.num_paragraph_gaps != *doc_gaps) {
        bool declared = false;  // header may be absent; then adopt the document's count
        for (const auto& [judge, marked] : judges.marks)
            for (int g : marked)
                if (g >= *doc_gaps) declared = true;
        if (judges.num_paragraph_gaps > *doc_gaps || declared)
            throw Error("judge file covers " + std::to_string(judges.num_paragraph_gaps) +
                        " gaps but document has " + std::to_string(*doc_gaps));
        judges.num_paragraph_gaps = *doc_gaps;
    }

    if (opt.merge_short) judges = merge_short_paragraphs(judges);

    GoldBoundaries gold = true_boundaries(judges, opt.threshold);
    EvalReport report = precision_recall(hypothesis, gold, opt.slack);

    std::cout << std::fixed << std::setprecision(3) << "precision " << report.precision
              << " recall " << report.recall << " C " << report.correct << " I " << report.inserted
              << " D " << report.deleted << "\n";

    if (opt.baseline_rate) {
        BaselineConfig bc{*opt.baseline_rate, opt.trials, opt.run.seed};
        BaselineReport base = random_baseline(judges.num_paragraph_gaps, gold, bc);
        std::cout << std::fixed << std::setprecision(3) << "baseline precision " << base.precision
                  << " recall " << base.recall << " rate " << base.config.rate << " trials "
                  << base.config.trials << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CliOptions opt;

    CLI::App app{"TextTiling: multi-paragraph subtopic segmentation of expository text.\n"
                 "Paragraph and gap indices are 0-based everywhere: boundary p falls after\n"
                 "paragraph p, token-sequence gap g between sequences g and g+1."};
    app.require_subcommand(1);

    auto* tile = app.add_subcommand("tile", "segment a text file into subtopic tiles");
    tile->add_option("path", opt.path, "UTF-8 text, paragraphs separated by blank lines")
        ->required();
    add_run_options(tile, opt.run);
    tile->add_flag("--quiet", opt.quiet, "print boundary paragraph numbers only");

    auto* scores = app.add_subcommand("scores", "per-gap score table (TSV) for plotting");
    scores->add_option("path", opt.path, "UTF-8 text file")->required();
    add_run_options(scores, opt.run);

    auto* distrib = app.add_subcommand("distrib", "term distribution matrix per token-sequence");
    distrib->add_option("path", opt.path, "UTF-8 text file")->required();
    add_run_options(distrib, opt.run);
    auto* terms_opt = distrib->add_option("--terms", opt.terms_arg, "comma-separated terms");
    distrib->add_option("--top", opt.top, "show the N most frequent content terms")
        ->excludes(terms_opt)
        ->capture_default_str();

    auto* eval = app.add_subcommand("eval", "score a segmentation against judge marks");
    auto* eval_path = eval->add_option("path", opt.path, "document to tile and evaluate");
    add_run_options(eval, opt.run);
    eval->add_option("--hypothesis", opt.hypothesis_path,
                     "boundary indices file (as printed by tile --quiet)")
        ->excludes(eval_path);
    eval->add_option("--judges", opt.judges_path, "judge marks file")->required();
    eval->add_option("--threshold", opt.threshold, "votes needed for a gold boundary")
        ->capture_default_str();
    eval->add_option("--slack", opt.slack, "allow off-by-one matching (0 or 1)")
        ->capture_default_str();
    eval->add_option("--baseline", opt.baseline_rate,
                     "also run the random baseline at this rate");
    eval->add_option("--trials", opt.trials, "baseline trials")->capture_default_str();
    eval->add_flag("--merge-short", opt.merge_short,
                   "merge paragraphs of <= 3 sentences before thresholding");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "texttile: " << e.what() << "\n";
        return 2;
    }

    try {
        resolve_stopword_source(opt.run);
        if (tile->parsed()) return cmd_tile(opt);
        if (scores->parsed()) return cmd_scores(opt);
        if (distrib->parsed()) return cmd_distrib(opt);
        if (eval->parsed()) {
            if (opt.path.empty() && opt.hypothesis_path.empty())
                throw Error("eval needs a document path or --hypothesis");
            return cmd_eval(opt);
        }
    } catch (const Error& e) {
        std::cerr << "texttile: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "texttile: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
