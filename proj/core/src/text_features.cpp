#include "moodco/text_features.hpp"

#include <algorithm>
#include <array>

#include "moodco/corpus.hpp"

namespace moodco {

namespace unicode {

namespace {

// Letter ranges for the scripts this tool realistically meets in
// social-media text (Latin with its extensions, Greek, Cyrillic, Hebrew,
// Arabic, CJK). Anything outside, emoji included, is punctuation.
struct Range {
    char32_t lo, hi;
};

constexpr std::array<Range, 22> kLetterRanges{{
    {0x0041, 0x005A},  // A-Z
    {0x0061, 0x007A},  // a-z
    {0x00AA, 0x00AA},  // feminine ordinal
    {0x00B5, 0x00B5},  // micro sign
    {0x00BA, 0x00BA},  // masculine ordinal
    {0x00C0, 0x00D6},  // Latin-1 letters (sans multiplication sign)
    {0x00D8, 0x00F6},
    {0x00F8, 0x024F},  // Latin Extended-A/B
    {0x0250, 0x02AF},  // IPA extensions
    {0x0370, 0x0373},
    {0x0376, 0x0377},
    {0x037B, 0x037D},
    {0x0386, 0x0386},
    {0x0388, 0x03FF},  // Greek
    {0x0400, 0x04FF},  // Cyrillic
    {0x0531, 0x0556},  // Armenian
    {0x0561, 0x0587},
    {0x05D0, 0x05EA},  // Hebrew
    {0x0620, 0x064A},  // Arabic
    {0x1E00, 0x1FFF},  // Latin Extended Additional, Greek Extended
    {0x3040, 0x30FF},  // Hiragana, Katakana
    {0x4E00, 0x9FFF},  // CJK Unified
}};

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decodes the next UTF-8 codepoint; malformed bytes decode as U+FFFD and
// advance by one so tokenization never stalls on broken input.
char32_t next_codepoint(std::string_view s, std::size_t& i) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + static_cast<std::size_t>(len) > s.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k < len; ++k) {
        unsigned char bk = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
        if ((bk & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += static_cast<std::size_t>(len);
    return cp;
}

}  // namespace

bool is_letter(char32_t cp) {
    auto it = std::upper_bound(kLetterRanges.begin(), kLetterRanges.end(), cp,
                               [](char32_t c, const Range& r) { return c < r.lo; });
    if (it == kLetterRanges.begin()) return false;
    return cp <= std::prev(it)->hi;
}

// Simple (one-to-one) case folding over the same scripts. Enough for
// Italian and its neighbourhood; unmapped codepoints pass through.
char32_t fold_case(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x0178) return 0x00FF;  // Ÿ -> ÿ
    if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;  // Greek capitals
    if (cp == 0x03C2) return 0x03C3;                                     // final sigma
    if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;  // Cyrillic А-Я
    if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;  // Ѐ-Џ
    return cp;
}

std::string fold_case_utf8(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) append_utf8(out, fold_case(next_codepoint(s, i)));
    return out;
}

}  // namespace unicode

namespace {

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

struct RawToken {
    std::string text;    // folded UTF-8
    int letters = 0;     // letter codepoints
    int digits = 0;
    int separators = 0;  // '.'/',' absorbed between digits
    int apostrophes = 0;
};

}  // namespace

TokenizedText tokenize(std::string_view text) {
    TokenizedText out;
    RawToken tok;

    auto flush = [&] {
        if (tok.text.empty()) {
            tok = RawToken{};
            return;
        }
        // Strip edge apostrophes ("'ciao'" -> "ciao"); the lexicon never
        // sees surrounding quote marks. Clitic apostrophes stay inside.
        std::string_view sv = tok.text;
        while (!sv.empty() && sv.front() == '\'') sv.remove_prefix(1);
        while (!sv.empty() && sv.back() == '\'') sv.remove_suffix(1);
        if (!sv.empty()) {
            bool inner_apostrophe = sv.find('\'') != std::string_view::npos;
            bool numeric =
                tok.digits > 0 && tok.letters == 0 && !inner_apostrophe && tok.separators <= 1;
            out.words.emplace_back(sv);
            out.is_numeric.push_back(numeric);
            out.letter_counts.push_back(tok.letters);
        }
        tok = RawToken{};
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char32_t cp = unicode::next_codepoint(text, i);
        if (unicode::is_letter(cp)) {
            unicode::append_utf8(tok.text, unicode::fold_case(cp));
            ++tok.letters;
            continue;
        }
        if (is_ascii_digit(cp)) {
            tok.text.push_back(static_cast<char>(cp));
            ++tok.digits;
            continue;
        }
        if (is_apostrophe(cp)) {
            tok.text.push_back('\'');
            ++tok.apostrophes;
            continue;
        }
        // Decimal separator: '.'/',' between digits stays in the token
        // ("3,5" is one numeric word and the comma is not punctuation).
        if ((cp == U'.' || cp == U',') && tok.digits > 0 && tok.letters == 0 &&
            tok.apostrophes == 0 && tok.separators == 0 && i < n &&
            is_ascii_digit(static_cast<unsigned char>(text[i]))) {
            tok.text.push_back(static_cast<char>(cp));
            ++tok.separators;
            continue;
        }
        flush();
        switch (cp) {
            case U'?': ++out.punct.question_marks; break;
            case U',': ++out.punct.commas; break;
            case U'!': ++out.punct.exclamation_marks; break;
            case U'.': ++out.punct.periods; break;
            default: break;
        }
    }
    flush();
    return out;
}

FeatureVector analyze_text(std::string_view text, const Lexicon& lexicon) {
    FeatureVector fv;
    fv.category_pct.assign(lexicon.categories().size(), 0.0);

    TokenizedText tt = tokenize(text);
    fv.word_count = static_cast<std::int64_t>(tt.words.size());
    if (fv.word_count == 0) return fv;

    std::vector<std::int64_t> hits(lexicon.categories().size(), 0);
    std::int64_t numerals = 0;
    std::int64_t long_words = 0;
    std::vector<CategoryId> cats;
    for (std::size_t w = 0; w < tt.words.size(); ++w) {
        if (tt.is_numeric[w]) ++numerals;
        if (tt.letter_counts[w] > 6) ++long_words;
        lexicon.categorize_into(tt.words[w], cats);
        for (CategoryId c : cats) ++hits[c];
    }

    const double scale = 100.0 / static_cast<double>(fv.word_count);
    for (std::size_t c = 0; c < hits.size(); ++c)
        fv.category_pct[c] = scale * static_cast<double>(hits[c]);
    fv.question_marks_pct = scale * static_cast<double>(tt.punct.question_marks);
    fv.commas_pct = scale * static_cast<double>(tt.punct.commas);
    fv.numerals_pct = scale * static_cast<double>(numerals);
    fv.six_letter_pct = scale * static_cast<double>(long_words);
    return fv;
}

FeatureVector analyze_profile(const Profile& profile, const Lexicon& lexicon) {
    std::string narration;
    bool first = true;
    for (const Post& post : profile.posts) {
        if (post.kind != PostKind::text) continue;
        if (!first) narration.push_back('\n');
        narration += post.text;
        first = false;
    }
    return analyze_text(narration, lexicon);
}

}  // namespace moodco
