#include "texttile/stemmer.hpp"

#include <cstddef>
#include <initializer_list>

namespace texttile {
namespace {

bool is_plain_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Letter classification and the m-measure over a prefix of the word.
// 'y' counts as a vowel when preceded by a consonant, as a consonant
// otherwise (and at position 0).
struct Probe {
    const std::string& w;

    bool consonant(std::size_t i) const {
        char c = w[i];
        if (is_plain_vowel(c)) return false;
        if (c == 'y') return i == 0 || !consonant(i - 1);
        return true;
    }

    // Number of vowel->consonant transitions in w[0..end): the m of [C](VC)^m[V].
    int measure(std::size_t end) const {
        int m = 0;
        bool seen_vowel = false;
        for (std::size_t i = 0; i < end; ++i) {
            if (!consonant(i)) {
                seen_vowel = true;
            } else if (seen_vowel) {
                ++m;
                seen_vowel = false;
            }
        }
        return m;
    }

    bool has_vowel(std::size_t end) const {
        for (std::size_t i = 0; i < end; ++i)
            if (!consonant(i)) return true;
        return false;
    }

    // w[0..end) ends in a double consonant.
    bool ends_double_consonant(std::size_t end) const {
        return end >= 2 && w[end - 1] == w[end - 2] && consonant(end - 1);
    }

    // w[0..end) ends consonant-vowel-consonant with the final consonant
    // not being w, x, or y.
    bool ends_cvc(std::size_t end) const {
        if (end < 3) return false;
        if (!consonant(end - 3) || consonant(end - 2) || !consonant(end - 1)) return false;
        char c = w[end - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }
};

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void replace_suffix(std::string& w, std::size_t suffix_len, std::string_view repl) {
    w.resize(w.size() - suffix_len);
    w.append(repl);
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// The longest matching suffix selects the rule; if the stem's measure does
// not exceed min_measure, the step makes no change at all (so e.g.
// "rational" is not rewritten by the shorter "tional" rule).
void apply_longest(std::string& w, std::initializer_list<Rule> rules, int min_measure) {
    const Rule* best = nullptr;
    for (const Rule& r : rules) {
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size()))
            best = &r;
    }
    if (!best) return;
    std::size_t stem_len = w.size() - best->suffix.size();
    if (Probe{w}.measure(stem_len) > min_measure)
        replace_suffix(w, best->suffix.size(), best->replacement);
}

// Plurals and -ed / -ing.
void step1ab(std::string& w) {
    if (ends_with(w, "sses")) {
        replace_suffix(w, 4, "ss");
    } else if (ends_with(w, "ies")) {
        replace_suffix(w, 3, "i");
    } else if (!ends_with(w, "ss") && ends_with(w, "s")) {
        w.pop_back();
    }

    bool strip_fixup = false;
    if (ends_with(w, "eed")) {
        if (Probe{w}.measure(w.size() - 3) > 0) w.pop_back();
    } else if (ends_with(w, "ed") && Probe{w}.has_vowel(w.size() - 2)) {
        w.resize(w.size() - 2);
        strip_fixup = true;
    } else if (ends_with(w, "ing") && Probe{w}.has_vowel(w.size() - 3)) {
        w.resize(w.size() - 3);
        strip_fixup = true;
    }

    if (strip_fixup) {
        Probe p{w};
        if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
            w.push_back('e');
        } else if (p.ends_double_consonant(w.size())) {
            char c = w.back();
            if (c != 'l' && c != 's' && c != 'z') w.pop_back();
        } else if (p.measure(w.size()) == 1 && p.ends_cvc(w.size())) {
            w.push_back('e');
        }
    }
}

void step1c(std::string& w) {
    if (ends_with(w, "y") && Probe{w}.has_vowel(w.size() - 1)) w.back() = 'i';
}

void step2(std::string& w) {
    apply_longest(w,
                  {{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
                   {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
                   {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
                   {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                   {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
                   {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
                   {"iviti", "ive"},   {"biliti", "ble"}},
                  0);
}

void step3(std::string& w) {
    apply_longest(w,
                  {{"icate", "ic"}, {"ative", ""}, {"alize", "al"},
                   {"iciti", "ic"}, {"ical", "ic"}, {"ful", ""}, {"ness", ""}},
                  0);
}

void step4(std::string& w) {
    // "ion" only drops when the remaining stem ends in s or t.
    static constexpr std::string_view suffixes[] = {
        "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
        "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize"};

    std::string_view best;
    for (std::string_view s : suffixes)
        if (ends_with(w, s) && s.size() > best.size()) best = s;
    if (best.empty()) return;

    std::size_t stem_len = w.size() - best.size();
    if (Probe{w}.measure(stem_len) <= 1) return;
    if (best == "ion" && stem_len > 0) {
        char c = w[stem_len - 1];
        if (c != 's' && c != 't') return;
    }
    w.resize(stem_len);
}

void step5(std::string& w) {
    if (ends_with(w, "e")) {
        Probe p{w};
        int m = p.measure(w.size() - 1);
        if (m > 1 || (m == 1 && !p.ends_cvc(w.size() - 1))) w.pop_back();
    }
    Probe p{w};
    if (w.size() >= 2 && w.back() == 'l' && p.ends_double_consonant(w.size()) &&
        p.measure(w.size()) > 1)
        w.pop_back();
}

}  // namespace

std::string porter_stem(std::string word) {
    if (word.size() <= 2) return word;
    step1ab(word);
    step1c(word);
    step2(word);
    step3(word);
    step4(word);
    step5(word);
    return word;
}

}  // namespace texttile
