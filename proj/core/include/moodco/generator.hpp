#ifndef MOODCO_GENERATOR_HPP
#define MOODCO_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "moodco/corpus.hpp"
#include "moodco/pipeline.hpp"

namespace moodco {

// Synthetic-corpus model: posts draw a mood, comments copy their post's
// mood with probability `coupling` and draw independently otherwise.
// Texts are assembled from the shipped micro-lexicon so that scoring
// recovers the planted moods. One RNG stream per profile, derived from
// the master seed, keeps output stable under any parallel schedule.
struct ContagionConfig {
    std::size_t n_profiles = 50;
    std::size_t posts_per_profile = 600;
    double comments_per_post_mean = 2.0;
    double p_positive_post = 0.5;  // among emotional posts
    double coupling = 0.5;
    std::uint64_t seed = 1;

    // Planting knobs for effect-direction experiments; the defaults keep
    // the plain model above.
    double p_neutral_post = 0.0;
    int words_per_post = 8;
    int words_per_comment = 6;
    double sexual_word_rate = 0.0;         // chance a filler slot carries a sexual word
    double likes_mean_neutral = 8.0;       // Poisson mean for neutral posts
    double likes_mean_emotional = 8.0;     // Poisson mean for emotional posts
    double comments_boost_emotional = 0.0; // added to the comment-count mean
    std::string id_prefix = "p";

    void validate() const;  // throws ConfigError on bad probabilities/counts
};

Corpus generate_contagion_corpus(const ContagionConfig& config);

// Balanced judge-labeled stand-in: texts planted so that the ten metric
// features reproduce the intended condition/sign structure (all negative
// predictors high in negative posts, numerals scarce there, question marks
// and the positive categories high in positive posts).
struct CriterionPlantConfig {
    std::size_t per_label = 48;
    int words_per_text = 10;
    std::uint64_t seed = 7;
};

CriterionSample planted_criterion_sample(const CriterionPlantConfig& config);

// Word pools used by both generators; exposed so tests can assert they
// stay consistent with data/micro_lexicon.tsv.
namespace pools {
extern const std::vector<std::string> positive_emotion;   // PE-only words
extern const std::vector<std::string> positive_feeling;   // PF-only words
extern const std::vector<std::string> family;             // Fa-only words
extern const std::vector<std::string> negative_emotion;   // NE-only words
extern const std::vector<std::string> swear;              // SW-only words
extern const std::vector<std::string> anger;              // AW-only words
extern const std::vector<std::string> sadness;            // SaW-only words
extern const std::vector<std::string> third_person_plural;
extern const std::vector<std::string> sexual;
extern const std::vector<std::string> filler;             // matches no category
}  // namespace pools

}  // namespace moodco

#endif  // MOODCO_GENERATOR_HPP
