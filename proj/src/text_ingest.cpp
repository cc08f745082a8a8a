#include "texttile/text_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "texttile/errors.hpp"
#include "texttile/stemmer.hpp"

namespace texttile {
namespace {

bool is_blank_line(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

// Letters form tokens; bytes >= 0x80 are kept so multi-byte UTF-8 words stay
// intact. Digits and punctuation separate tokens.
bool is_word_char(unsigned char c) {
    return std::isalpha(c) || c >= 0x80;
}

bool counted(const Token& t, TokenCounting counting) {
    return counting == TokenCounting::all_tokens || t.is_content;
}

}  // namespace

std::string normalize_term(std::string_view surface) {
    std::string s;
    s.reserve(surface.size());
    for (unsigned char c : surface) {
        if (is_word_char(c) || c == '\'')
            s.push_back(static_cast<char>(c < 0x80 ? std::tolower(c) : c));
    }
    std::size_t b = 0, e = s.size();
    while (b < e && s[b] == '\'') ++b;
    while (e > b && s[e - 1] == '\'') --e;
    s = s.substr(b, e - b);
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "'s") == 0) s.resize(s.size() - 2);
    s.erase(std::remove(s.begin(), s.end(), '\''), s.end());
    // Stem to a fixed point: a single Porter pass is not idempotent (e.g.
    // agreed -> agre -> agr), and table keys must re-normalize to themselves.
    for (int guard = 0; guard < 8; ++guard) {
        std::string next = porter_stem(s);
        if (next == s) break;
        s = std::move(next);
    }
    return s;
}

std::vector<std::string> split_paragraphs(const RawDocument& doc) {
    std::vector<std::string> paragraphs;
    std::string current;
    std::size_t pos = 0;
    const std::string& text = doc.text;

    auto flush = [&] {
        if (!is_blank_line(current)) paragraphs.push_back(current);
        current.clear();
    };

    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (nl == std::string::npos ? text.size() : nl) - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (is_blank_line(line)) {
            flush();
        } else {
            if (!current.empty()) current.push_back('\n');
            current.append(line);
        }
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    flush();

    if (paragraphs.empty()) throw EmptyDocumentError();
    return paragraphs;
}

std::vector<Token> normalize_tokens(std::string_view paragraph, const StopwordSet& stopwords) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < paragraph.size()) {
        unsigned char c = static_cast<unsigned char>(paragraph[i]);
        if (!is_word_char(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < paragraph.size()) {
            unsigned char d = static_cast<unsigned char>(paragraph[i]);
            if (is_word_char(d) || d == '\'')
                ++i;
            else
                break;
        }
        std::string term = normalize_term(paragraph.substr(start, i - start));
        if (term.empty()) continue;
        bool content = !stopwords.contains(term);
        tokens.push_back({std::move(term), content});
    }
    return tokens;
}

TokenizedDocument build_token_sequences(const std::vector<std::vector<Token>>& paragraphs,
                                        int w, TokenCounting counting) {
    if (w < 1) throw Error("w must be >= 1");

    TokenizedDocument doc;
    doc.w = w;
    doc.num_paragraphs = static_cast<int>(paragraphs.size());
    doc.counting = counting;

    // Counted-token offset of each paragraph break (break b follows
    // paragraph b), plus the chunked sequences themselves.
    std::vector<long> break_offsets;
    long offset = 0;
    for (std::size_t p = 0; p < paragraphs.size(); ++p) {
        for (const Token& t : paragraphs[p]) {
            if (!counted(t, counting)) continue;
            if (offset % w == 0) {
                doc.sequences.push_back(TokenSequence{static_cast<int>(doc.sequences.size()), {}, {}});
            }
            TokenSequence& seq = doc.sequences.back();
            seq.tokens.push_back(t);
            if (t.is_content) ++seq.term_counts[t.term];
            ++offset;
        }
        if (p + 1 < paragraphs.size()) break_offsets.push_back(offset);
    }

    if (doc.sequences.empty()) throw NoTokensError();

    const long n = static_cast<long>(doc.sequences.size());
    if (n >= 2) {
        for (long t : break_offsets) {
            // Gap g sits at counted-token offset (g+1)*w; pick the nearest
            // valid gap, breaking ties toward the earlier one.
            long g = t / w - 1;
            long lo = std::clamp(g, 0L, n - 2);
            long hi = std::clamp(g + 1, 0L, n - 2);
            long d_lo = std::labs(t - (lo + 1) * w);
            long d_hi = std::labs(t - (hi + 1) * w);
            doc.break_gaps.push_back(static_cast<int>(d_lo <= d_hi ? lo : hi));
        }
        doc.paragraph_gaps = doc.break_gaps;
        std::sort(doc.paragraph_gaps.begin(), doc.paragraph_gaps.end());
        doc.paragraph_gaps.erase(
            std::unique(doc.paragraph_gaps.begin(), doc.paragraph_gaps.end()),
            doc.paragraph_gaps.end());
    }
    return doc;
}

TermTable build_term_table(const TokenizedDocument& doc) {
    TermTable table;
    table.num_sequences = static_cast<int>(doc.sequences.size());
    for (const TokenSequence& seq : doc.sequences)
        for (const auto& [term, freq] : seq.term_counts)
            table.postings[term].push_back({seq.index, freq});
    return table;
}

TokenizedDocument tokenize(const RawDocument& doc, int w, const StopwordSet& stopwords,
                           TokenCounting counting) {
    std::vector<std::vector<Token>> paragraph_tokens;
    for (const std::string& p : split_paragraphs(doc))
        paragraph_tokens.push_back(normalize_tokens(p, stopwords));
    return build_token_sequences(paragraph_tokens, w, counting);
}

}  // namespace texttile
