#ifndef MOODCO_MOOD_HPP
#define MOODCO_MOOD_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "moodco/lexicon.hpp"
#include "moodco/text_features.hpp"

namespace moodco {

enum class MoodLabel { positive, negative, neutral };
const char* to_string(MoodLabel label);

// What to do when both indicators are nonzero and equal. The default keeps
// such posts out of the contingency counting, like true zero-score posts.
enum class TiePolicy { neutral, positive, negative };

struct MoodScores {
    double positive = 0.0;  // always >= 0
    double negative = 0.0;  // may dip below 0 through the -Nu term
};

// The ten symbols of the two indicator formulas.
enum class MetricSymbol : std::uint8_t { NE, SW, AW, SaW, Nu, TP, PF, PE, Fa, QM };
constexpr std::size_t kMetricSymbolCount = 10;
const char* to_string(MetricSymbol s);

// Structural features a symbol may bind to instead of a lexicon category.
enum class BuiltinFeature { numerals_pct, question_marks_pct, commas_pct, six_letter_pct };

// Resolves each formula symbol to a lexicon category or a builtin rate.
// Built once per run; score functions then read straight out of the
// feature vector.
class CategoryBindings {
public:
    // Canonical symbol->name map (NE=negative_emotion, ..., Nu=numerals_pct,
    // QM=question_marks_pct, SX=sexual).
    static std::map<std::string, std::string> default_map();

    // Resolves a symbol->name map against a lexicon. Unknown symbols and
    // unresolvable names are configuration errors. Missing symbols fall
    // back to the defaults.
    static CategoryBindings resolve(const std::map<std::string, std::string>& map,
                                    const Lexicon& lexicon);
    static CategoryBindings resolve_defaults(const Lexicon& lexicon);

    // Loads a key=value bindings file and resolves it.
    static CategoryBindings load(const std::filesystem::path& path, const Lexicon& lexicon);

    double value(MetricSymbol symbol, const FeatureVector& fv) const;
    const std::string& bound_name(MetricSymbol symbol) const;

    // Category backing the self-presentation "Sexual" parameter (binding
    // key SX); nullopt when the lexicon does not define it.
    std::optional<CategoryId> sexual_category() const { return sexual_category_; }

private:
    struct FeatureRef {
        bool is_builtin = false;
        BuiltinFeature builtin = BuiltinFeature::numerals_pct;
        CategoryId category = 0;
        std::string name;
    };
    std::array<FeatureRef, kMetricSymbolCount> refs_;
    std::optional<CategoryId> sexual_category_;
};

// Eq. NE+SW+AW+SaW-Nu+TP: the negative mood indicator. Every term enters
// positively except Numerals.
double negative_mood_score(const FeatureVector& fv, const CategoryBindings& bindings);

// Eq. PF+PE+Fa+QM: the positive mood indicator.
double positive_mood_score(const FeatureVector& fv, const CategoryBindings& bindings);

MoodScores mood_scores(const FeatureVector& fv, const CategoryBindings& bindings);

// Neutral iff both scores are zero; otherwise the larger score wins and
// nonzero ties follow the policy.
MoodLabel classify_mood(const MoodScores& scores, TiePolicy tie_policy = TiePolicy::neutral);

// Linear model over z-standardized Word Count and Sexual. The published
// regression coefficients are not available; unit weights are the
// documented default and scores are model-relative.
struct SelfPresentationModel {
    double word_count_weight = 1.0;
    double sexual_weight = 1.0;
    double intercept = 0.0;
};

// Corpus-level moments of the two parameters (population sd over profiles).
struct SelfPresentationStats {
    double word_count_mean = 0.0;
    double word_count_sd = 0.0;
    double sexual_mean = 0.0;
    double sexual_sd = 0.0;
};

// Z-standardizes the profile's word count and sexual percentage against
// corpus_stats and applies the model. Zero variance in either parameter is
// a degenerate-statistics error.
double self_presentation_score(const FeatureVector& profile_fv, CategoryId sexual_category,
                               const SelfPresentationModel& model,
                               const SelfPresentationStats& corpus_stats);

}  // namespace moodco

#endif  // MOODCO_MOOD_HPP
