#include "moodco/mood.hpp"

#include "moodco/config.hpp"
#include "moodco/errors.hpp"

namespace moodco {

const char* to_string(MoodLabel label) {
    switch (label) {
        case MoodLabel::positive: return "positive";
        case MoodLabel::negative: return "negative";
        case MoodLabel::neutral: return "neutral";
    }
    return "neutral";
}

const char* to_string(MetricSymbol s) {
    switch (s) {
        case MetricSymbol::NE: return "NE";
        case MetricSymbol::SW: return "SW";
        case MetricSymbol::AW: return "AW";
        case MetricSymbol::SaW: return "SaW";
        case MetricSymbol::Nu: return "Nu";
        case MetricSymbol::TP: return "TP";
        case MetricSymbol::PF: return "PF";
        case MetricSymbol::PE: return "PE";
        case MetricSymbol::Fa: return "Fa";
        case MetricSymbol::QM: return "QM";
    }
    return "?";
}

namespace {

constexpr std::array<MetricSymbol, kMetricSymbolCount> kAllSymbols = {
    MetricSymbol::NE, MetricSymbol::SW, MetricSymbol::AW, MetricSymbol::SaW,
    MetricSymbol::Nu, MetricSymbol::TP, MetricSymbol::PF, MetricSymbol::PE,
    MetricSymbol::Fa, MetricSymbol::QM};

std::optional<BuiltinFeature> builtin_by_name(const std::string& name) {
    if (name == "numerals_pct") return BuiltinFeature::numerals_pct;
    if (name == "question_marks_pct") return BuiltinFeature::question_marks_pct;
    if (name == "commas_pct") return BuiltinFeature::commas_pct;
    if (name == "six_letter_pct") return BuiltinFeature::six_letter_pct;
    return std::nullopt;
}

double builtin_value(BuiltinFeature b, const FeatureVector& fv) {
    switch (b) {
        case BuiltinFeature::numerals_pct: return fv.numerals_pct;
        case BuiltinFeature::question_marks_pct: return fv.question_marks_pct;
        case BuiltinFeature::commas_pct: return fv.commas_pct;
        case BuiltinFeature::six_letter_pct: return fv.six_letter_pct;
    }
    return 0.0;
}

}  // namespace

std::map<std::string, std::string> CategoryBindings::default_map() {
    return {{"NE", "negative_emotion"},
            {"SW", "swear"},
            {"AW", "anger"},
            {"SaW", "sadness"},
            {"Nu", "numerals_pct"},
            {"TP", "third_person_plural_verb"},
            {"PF", "positive_feeling"},
            {"PE", "positive_emotion"},
            {"Fa", "family"},
            {"QM", "question_marks_pct"},
            {"SX", "sexual"}};
}

CategoryBindings CategoryBindings::resolve(const std::map<std::string, std::string>& map,
                                           const Lexicon& lexicon) {
    auto defaults = default_map();
    auto merged = defaults;
    for (const auto& [key, value] : map) {
        if (!defaults.count(key))
            throw ConfigError("unknown binding symbol '" + key + "'");
        merged[key] = value;
    }

    CategoryBindings b;
    for (MetricSymbol s : kAllSymbols) {
        const std::string& name = merged.at(to_string(s));
        FeatureRef ref;
        ref.name = name;
        if (auto builtin = builtin_by_name(name)) {
            ref.is_builtin = true;
            ref.builtin = *builtin;
        } else if (auto cat = lexicon.find_category(name)) {
            ref.category = *cat;
        } else {
            throw ConfigError("binding " + std::string(to_string(s)) + " = '" + name +
                              "': not a builtin feature and not a lexicon category");
        }
        b.refs_[static_cast<std::size_t>(s)] = std::move(ref);
    }
    b.sexual_category_ = lexicon.find_category(merged.at("SX"));
    return b;
}

CategoryBindings CategoryBindings::resolve_defaults(const Lexicon& lexicon) {
    return resolve({}, lexicon);
}

CategoryBindings CategoryBindings::load(const std::filesystem::path& path,
                                        const Lexicon& lexicon) {
    return resolve(parse_kv_file(path), lexicon);
}

double CategoryBindings::value(MetricSymbol symbol, const FeatureVector& fv) const {
    const FeatureRef& ref = refs_[static_cast<std::size_t>(symbol)];
    if (ref.is_builtin) return builtin_value(ref.builtin, fv);
    return ref.category < fv.category_pct.size() ? fv.category_pct[ref.category] : 0.0;
}

const std::string& CategoryBindings::bound_name(MetricSymbol symbol) const {
    return refs_[static_cast<std::size_t>(symbol)].name;
}

double negative_mood_score(const FeatureVector& fv, const CategoryBindings& b) {
    return b.value(MetricSymbol::NE, fv) + b.value(MetricSymbol::SW, fv) +
           b.value(MetricSymbol::AW, fv) + b.value(MetricSymbol::SaW, fv) -
           b.value(MetricSymbol::Nu, fv) + b.value(MetricSymbol::TP, fv);
}

double positive_mood_score(const FeatureVector& fv, const CategoryBindings& b) {
    return b.value(MetricSymbol::PF, fv) + b.value(MetricSymbol::PE, fv) +
           b.value(MetricSymbol::Fa, fv) + b.value(MetricSymbol::QM, fv);
}

MoodScores mood_scores(const FeatureVector& fv, const CategoryBindings& b) {
    return {positive_mood_score(fv, b), negative_mood_score(fv, b)};
}

MoodLabel classify_mood(const MoodScores& scores, TiePolicy tie_policy) {
    if (scores.positive == 0.0 && scores.negative == 0.0) return MoodLabel::neutral;
    if (scores.positive > scores.negative) return MoodLabel::positive;
    if (scores.negative > scores.positive) return MoodLabel::negative;
    switch (tie_policy) {
        case TiePolicy::positive: return MoodLabel::positive;
        case TiePolicy::negative: return MoodLabel::negative;
        case TiePolicy::neutral: break;
    }
    return MoodLabel::neutral;
}

double self_presentation_score(const FeatureVector& profile_fv, CategoryId sexual_category,
                               const SelfPresentationModel& model,
                               const SelfPresentationStats& corpus_stats) {
    if (corpus_stats.word_count_sd <= 0.0)
        throw DegenerateDataError("self-presentation: zero variance in word count");
    if (corpus_stats.sexual_sd <= 0.0)
        throw DegenerateDataError("self-presentation: zero variance in sexual percentage");
    const double sexual_pct = sexual_category < profile_fv.category_pct.size()
                                  ? profile_fv.category_pct[sexual_category]
                                  : 0.0;
    const double z_wc = (static_cast<double>(profile_fv.word_count) -
                         corpus_stats.word_count_mean) /
                        corpus_stats.word_count_sd;
    const double z_sx = (sexual_pct - corpus_stats.sexual_mean) / corpus_stats.sexual_sd;
    return model.intercept + model.word_count_weight * z_wc + model.sexual_weight * z_sx;
}

}  // namespace moodco
