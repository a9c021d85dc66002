#ifndef MOODCO_TEXT_FEATURES_HPP
#define MOODCO_TEXT_FEATURES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "moodco/lexicon.hpp"

namespace moodco {

struct Profile;  // corpus.hpp

// Punctuation tallied independently of word extraction. Only question marks
// and commas feed the metrics; the rest are kept for reporting.
struct PunctuationCounts {
    std::int64_t question_marks = 0;
    std::int64_t commas = 0;
    std::int64_t exclamation_marks = 0;
    std::int64_t periods = 0;
};

struct TokenizedText {
    std::vector<std::string> words;    // lowercased, in text order
    std::vector<bool> is_numeric;      // parallel to words
    std::vector<int> letter_counts;    // letter codepoints per word
    PunctuationCounts punct;
};

// Per-text feature vector: LIWC-style category percentages plus the
// structural rates used by the mood indicators. All rates are per word
// and scaled by 100; every field is exactly 0 when word_count == 0.
struct FeatureVector {
    std::int64_t word_count = 0;
    std::vector<double> category_pct;  // indexed by CategoryId, in [0,100]
    double question_marks_pct = 0.0;   // marks per word x 100 (may exceed 100)
    double commas_pct = 0.0;
    double numerals_pct = 0.0;         // numeric tokens / words x 100
    double six_letter_pct = 0.0;       // words with > 6 letters / words x 100
};

// Splits `text` into words and punctuation counts. A word is a maximal run
// of Unicode letters, digits, or apostrophes; a '.' or ',' flanked by digits
// is absorbed into the token so "3,5" stays one (numeric) word. Words are
// lowercased with simple case folding; accents are preserved. Apostrophes
// at token edges are stripped.
TokenizedText tokenize(std::string_view text);

FeatureVector analyze_text(std::string_view text, const Lexicon& lexicon);

// The profile's text-kind posts concatenated (newline-joined, stored order)
// and analyzed as one narration. word_count here is the profile total.
FeatureVector analyze_profile(const Profile& profile, const Lexicon& lexicon);

namespace unicode {
// Shared with the lexicon/config loaders for case-insensitive matching.
bool is_letter(char32_t cp);
char32_t fold_case(char32_t cp);
std::string fold_case_utf8(std::string_view s);
}  // namespace unicode

}  // namespace moodco

#endif  // MOODCO_TEXT_FEATURES_HPP
