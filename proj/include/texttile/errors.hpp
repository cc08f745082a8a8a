#pragma once

#include <stdexcept>
#include <string>

namespace texttile {

// Base class for all texttile errors. CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Document has no non-whitespace content.
class EmptyDocumentError : public Error {
public:
    EmptyDocumentError() : Error("empty document") {}
};

// Document contains no word tokens.
class NoTokensError : public Error {
public:
    NoTokensError() : Error("document contains no word tokens") {}
};

// Sequence index range out of bounds.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

// Fewer than two token-sequences; no gaps to score.
class TooShortError : public Error {
public:
    explicit TooShortError(const std::string& what) : Error(what) {}
};

// Single-paragraph document; no paragraph gap to place a boundary at.
class NoParagraphGapsError : public Error {
public:
    NoParagraphGapsError() : Error("document has no paragraph gaps (single paragraph)") {}
};

// Short-paragraph merging requested but no sentence counts available.
class MissingSentenceCountsError : public Error {
public:
    MissingSentenceCountsError() : Error("sentence counts required for short-paragraph merging") {}
};

// Malformed judge file; carries the offending line number.
class JudgeFileError : public Error {
public:
    JudgeFileError(int line, const std::string& what)
        : Error("judge file line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace texttile
