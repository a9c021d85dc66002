#ifndef MOODCO_PIPELINE_HPP
#define MOODCO_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moodco/config.hpp"
#include "moodco/corpus.hpp"
#include "moodco/lexicon.hpp"
#include "moodco/mood.hpp"
#include "moodco/stats.hpp"
#include "moodco/text_features.hpp"

namespace moodco {

// --- criterion sample ------------------------------------------------------

struct CriterionPost {
    std::string text;
    MoodLabel label = MoodLabel::neutral;
};

struct CriterionSample {
    std::vector<CriterionPost> posts;

    std::array<std::size_t, 3> label_counts() const;  // negative, positive, neutral
    bool balanced() const;
};

// CSV with a `text,label` header.
CriterionSample load_criterion_csv(const std::filesystem::path& path);
void save_criterion_csv(const CriterionSample& sample, const std::filesystem::path& path);

// --- feature selection -------------------------------------------------------

// Group means z-scored across the three conditions, in the fixed order
// negative / positive / neutral.
struct ConditionTriple {
    double negative = 0.0;
    double positive = 0.0;
    double neutral = 0.0;
};

struct SelectedPredictor {
    std::string feature;  // lexicon category or builtin rate name
    TestResult anova;     // F with (k-1, N-k) df
    MoodLabel target_mood = MoodLabel::neutral;
    char sign = '+';      // '+' when the target condition sits above the others
    ConditionTriple z_by_condition;
    ConditionTriple group_means;
};

struct SelectedPredictors {
    std::vector<SelectedPredictor> predictors;  // sorted by F descending
    std::vector<std::string> skipped;           // degenerate features, with reasons
};

// ANOVA across the three label groups for every lexicon category and
// builtin rate; keeps p < alpha, requires the Scheffe test to single out
// one condition, and signs it by the z-score of the target-condition mean.
SelectedPredictors select_features(const CriterionSample& sample,
                                   std::span<const FeatureVector> features,
                                   const Lexicon& lexicon, double alpha = 0.01);

// --- corpus scoring ----------------------------------------------------------

struct ScoredComment {
    std::string comment_id;
    MoodScores scores;
    MoodLabel label = MoodLabel::neutral;
};

struct ScoredPost {
    std::string post_id;
    std::int64_t likes = 0;
    MoodScores scores;
    MoodLabel label = MoodLabel::neutral;
    double comment_pos_mean = 0.0;  // mean over ALL the post's comments, 0 if none
    double comment_neg_mean = 0.0;
    std::vector<ScoredComment> comments;
};

struct ScoredProfile {
    std::string profile_id;
    std::vector<ScoredPost> posts;  // the eligible (text, commented) posts
};

// The §-style accounting: totals, eligibility, and the mood breakdown for
// posts and for the comments attached to eligible posts.
struct ScoreSummary {
    std::int64_t posts_total = 0;
    std::int64_t posts_eligible = 0;
    std::int64_t posts_positive = 0;
    std::int64_t posts_negative = 0;
    std::int64_t posts_neutral = 0;
    std::int64_t comments_total = 0;
    std::int64_t comments_scored = 0;
    std::int64_t comments_positive = 0;
    std::int64_t comments_negative = 0;
    std::int64_t comments_neutral = 0;

    std::int64_t posts_non_neutral() const { return posts_positive + posts_negative; }
    std::int64_t comments_non_neutral() const { return comments_positive + comments_negative; }
};

struct ScoredCorpus {
    std::vector<ScoredProfile> profiles;
    ScoreSummary summary;
};

// Scores every eligible post (kind=text with >= 1 comment) and all of its
// comments. Per-profile work is independent; `jobs` > 1 parallelizes it
// without changing the output.
ScoredCorpus score_corpus(const Corpus& corpus, const Lexicon& lexicon,
                          const CategoryBindings& bindings,
                          TiePolicy tie_policy = TiePolicy::neutral, int jobs = 1);

// --- post-group comparisons -----------------------------------------------

// The order parameters compared across post groups.
struct PostObservation {
    double likes = 0.0;
    double n_comments = 0.0;
    double comment_pos_score = 0.0;
    double comment_neg_score = 0.0;
};

PostObservation observe(const ScoredPost& post);

struct GroupStats {
    std::string name;
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 0.0;  // sample sd
};

struct VariableComparison {
    std::string variable;
    GroupStats group_a;  // t = (mean_a - mean_b) / SE
    GroupStats group_b;
    TestResult t;
    bool degenerate = false;
    std::string note;
};

struct PostGroupReport {
    std::string group_a_name;
    std::string group_b_name;
    std::size_t n_a_original = 0;
    std::size_t n_b_original = 0;
    std::size_t n_balanced = 0;  // both groups after bootstrap balancing
    std::uint64_t seed = 0;
    std::vector<VariableComparison> variables;
};

// Bootstrap-balances the larger group down to the smaller's size, then runs
// a pooled t per variable. A variable that is constant in both groups is
// reported as degenerate instead of failing the run.
PostGroupReport compare_post_groups(std::span<const PostObservation> group_a,
                                    std::span<const PostObservation> group_b,
                                    const std::string& group_a_name,
                                    const std::string& group_b_name, std::uint64_t seed);

// --- per-profile coherence -------------------------------------------------

struct CoherenceResult {
    std::string profile_id;
    bool determinate = false;
    ContingencyTable table;  // post mood x comment mood, positive/negative only
    std::int64_t n_observations = 0;
    double chi2 = 0.0;
    double df = 0.0;
    double p = 1.0;
    bool highly_empathetic = false;  // chi2 >= threshold
    double empathy_score = 0.0;      // the chi2 value, graded empathy intensity
};

// Counts (post label, comment label) pairs over non-neutral posts and
// comments. unit=comment counts one observation per comment; post_mean
// averages each post's non-neutral comment scores and counts one
// observation per post. A profile whose table collapses below 2x2 is
// indeterminate.
CoherenceResult coherence(const ScoredProfile& profile, CoherenceUnit unit,
                          double empathy_threshold, TiePolicy tie_policy = TiePolicy::neutral);

// One table over every profile's observations.
CoherenceResult pooled_coherence(std::span<const ScoredProfile> profiles, CoherenceUnit unit,
                                 double empathy_threshold,
                                 TiePolicy tie_policy = TiePolicy::neutral);

// --- empathy split -----------------------------------------------------------

// Per-profile variables fed into the High/Low empathy comparison.
struct ProfileVariables {
    std::string profile_id;
    Gender gender = Gender::unspecified;
    std::optional<FacebookMetrics> metrics;
    FeatureVector features;  // analyze_profile output (single-narration)
    std::optional<double> sp_score;
};

// Computes profile-level features and self-presentation scores for every
// profile. sp scores stay unset when the corpus statistics are degenerate.
std::vector<ProfileVariables> collect_profile_variables(
    const Corpus& corpus, const Lexicon& lexicon, const CategoryBindings& bindings,
    const SelfPresentationModel& model = {});

struct CorrelationEntry {
    std::string variable;
    TestResult r;
    bool degenerate = false;
    std::string note;
};

struct EmpathyReport {
    MedianSplit split;  // over determinate profiles, by chi2
    std::vector<std::string> indeterminate;
    std::vector<VariableComparison> metric_comparisons;  // Facebook variables
    std::vector<VariableComparison> liwc_comparisons;    // profile-level features
    std::optional<VariableComparison> sp_comparison;
    std::optional<VariableComparison> gender_comparison;  // empathy by gender
    std::vector<CorrelationEntry> correlations;           // chi2 vs each variable
    std::vector<std::string> warnings;
};

// Median split on the per-profile chi2, then Low-vs-High t per Facebook
// metric, per profile-level feature, and for the self-presentation score;
// Pearson r of chi2 against each variable; empathy-by-gender t.
EmpathyReport empathy_split_and_compare(std::span<const CoherenceResult> coherence_results,
                                        std::span<const ProfileVariables> profiles,
                                        const Lexicon& lexicon);

}  // namespace moodco

#endif  // MOODCO_PIPELINE_HPP
