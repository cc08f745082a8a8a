#include "texttile/stopwords.hpp"

#include <cctype>
#include <fstream>

#include "texttile/errors.hpp"
#include "texttile/stemmer.hpp"
#include "texttile/text_ingest.hpp"

namespace texttile {

extern const char* const kBundledStopwords[];
extern const std::size_t kBundledStopwordCount;

namespace {

std::string lower_trim(std::string_view raw) {
    std::size_t b = 0, e = raw.size();
    while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i)
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i]))));
    return out;
}

}  // namespace

void StopwordSet::add(std::string entry) {
    if (entry.empty()) return;
    entries_.push_back(entry);
    lookup_.insert(normalize_term(entry));
    lookup_.insert(std::move(entry));
}

bool StopwordSet::contains(std::string_view normalized_term) const {
    return lookup_.count(std::string(normalized_term)) > 0;
}

const StopwordSet& StopwordSet::bundled() {
    static const StopwordSet set = [] {
        StopwordSet s;
        for (std::size_t i = 0; i < kBundledStopwordCount; ++i) s.add(kBundledStopwords[i]);
        return s;
    }();
    return set;
}

StopwordSet StopwordSet::from_words(const std::vector<std::string>& words) {
    StopwordSet s;
    for (const auto& w : words) s.add(lower_trim(w));
    return s;
}

StopwordSet StopwordSet::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read stopword file: " + path.string());
    StopwordSet s;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        s.add(lower_trim(line));
    }
    return s;
}

}  // namespace texttile
