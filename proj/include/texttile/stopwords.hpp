#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace texttile {

// Closed-class / high-frequency words excluded from term tables.
//
// Membership is tested against normalized terms (lowercased, stemmed), so the
// set keeps both the raw lowercased entries and their stemmed forms. This is
// what guarantees that a term table never carries a stopword key: any token
// normalizing into the set is dropped before it can be counted.
class StopwordSet {
public:
    // The list compiled into the library (~400 entries).
    static const StopwordSet& bundled();

    // One term per line; '#' starts a comment; blank lines ignored.
    static StopwordSet from_file(const std::filesystem::path& path);

    static StopwordSet from_words(const std::vector<std::string>& words);

    bool contains(std::string_view normalized_term) const;

    // Raw lowercased entries as loaded, in load order.
    const std::vector<std::string>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    void add(std::string entry);

    std::unordered_set<std::string> lookup_;
    std::vector<std::string> entries_;
};

}  // namespace texttile
