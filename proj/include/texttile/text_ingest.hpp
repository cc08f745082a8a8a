#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "texttile/stopwords.hpp"

namespace texttile {

struct RawDocument {
    std::string text;
    std::string source_name;
};

struct Token {
    std::string term;  // normalized form (lowercased, stemmed)
    bool is_content;   // false iff the normalized form is a stopword
};

// Whether w counts every word token or content tokens only. The default
// counts all tokens, which keeps sequence lengths stable when the stopword
// list changes; stopwords are excluded from term counts in either mode.
enum class TokenCounting { all_tokens, content_only };

// A pseudo-sentence of w consecutive word tokens.
struct TokenSequence {
    int index = 0;
    std::vector<Token> tokens;              // chunked tokens, in order
    std::map<std::string, int> term_counts;  // content terms only, freq >= 1
};

struct TokenizedDocument {
    std::vector<TokenSequence> sequences;
    // Per paragraph break b (the break after paragraph b, 0-based): the
    // token-sequence gap index nearest the break's token offset.
    std::vector<int> break_gaps;
    // Sorted unique values of break_gaps: the gap indices that coincide with
    // paragraph breaks. Subset of {0, ..., sequences.size()-2}.
    std::vector<int> paragraph_gaps;
    int w = 0;
    int num_paragraphs = 0;
    TokenCounting counting = TokenCounting::all_tokens;
};

struct Posting {
    int sequence = 0;
    int frequency = 0;
};

// Per-term postings: every sequence a term occurs in, with its in-sequence
// frequency, sorted by sequence index. Stopwords never appear as keys.
struct TermTable {
    std::map<std::string, std::vector<Posting>> postings;
    int num_sequences = 0;
};

// Lowercase, strip a possessive 's and stray apostrophes, then stem.
std::string normalize_term(std::string_view surface);

// Maximal runs of text separated by one or more blank lines. Throws
// EmptyDocumentError when the document has no non-whitespace content.
std::vector<std::string> split_paragraphs(const RawDocument& doc);

// Tokenize one paragraph: tokens are maximal letter runs (word-internal
// apostrophes allowed), normalized via normalize_term; order preserved.
std::vector<Token> normalize_tokens(std::string_view paragraph, const StopwordSet& stopwords);

// Concatenate paragraph token lists and chunk into sequences of exactly w
// counted tokens (the last sequence may be shorter). Records, for every
// paragraph break, the nearest gap index (ties to the earlier gap). Throws
// NoTokensError when no token is counted.
TokenizedDocument build_token_sequences(const std::vector<std::vector<Token>>& paragraphs,
                                        int w,
                                        TokenCounting counting = TokenCounting::all_tokens);

TermTable build_term_table(const TokenizedDocument& doc);

// split_paragraphs + normalize_tokens + build_token_sequences.
TokenizedDocument tokenize(const RawDocument& doc, int w, const StopwordSet& stopwords,
                           TokenCounting counting = TokenCounting::all_tokens);

}  // namespace texttile
