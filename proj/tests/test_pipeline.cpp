#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "moodco/errors.hpp"
#include "moodco/generator.hpp"
#include "moodco/pipeline.hpp"
#include "support/fixtures.hpp"

using namespace moodco;
using doctest::Approx;

namespace {

std::vector<FeatureVector> analyze_sample(const CriterionSample& sample, const Lexicon& lex) {
    std::vector<FeatureVector> out;
    out.reserve(sample.posts.size());
    for (const auto& post : sample.posts) out.push_back(analyze_text(post.text, lex));
    return out;
}

const SelectedPredictor* find_predictor(const SelectedPredictors& s, const std::string& name) {
    for (const auto& p : s.predictors)
        if (p.feature == name) return &p;
    return nullptr;
}

ScoredCorpus score_planted(const Corpus& corpus, int jobs = 1) {
    return score_corpus(corpus, fixtures::micro_lexicon(), fixtures::default_bindings(),
                        TiePolicy::neutral, jobs);
}

}  // namespace

TEST_CASE("criterion CSV round-trips, including quoting") {
    fixtures::TempDir tmp;
    CriterionSample sample;
    sample.posts.push_back({"ciao, \"amico\"?\ndavvero", MoodLabel::positive});
    sample.posts.push_back({"odio tutto", MoodLabel::negative});
    sample.posts.push_back({"tavolo treno", MoodLabel::neutral});
    auto path = tmp.file("criterion.csv");
    save_criterion_csv(sample, path);
    CriterionSample reloaded = load_criterion_csv(path);
    REQUIRE(reloaded.posts.size() == 3);
    CHECK(reloaded.posts[0].text == sample.posts[0].text);
    CHECK(reloaded.posts[0].label == MoodLabel::positive);
    CHECK(reloaded.posts[2].label == MoodLabel::neutral);

    CHECK_THROWS_AS(load_criterion_csv(tmp.file("missing.csv")), ConfigError);
    tmp.write("bad.csv", "text,label\nciao,happy\n");
    CHECK_THROWS_AS(load_criterion_csv(tmp.file("bad.csv")), DataError);
    tmp.write("noheader.csv", "ciao,positive\n");
    CHECK_THROWS_AS(load_criterion_csv(tmp.file("noheader.csv")), DataError);
}

TEST_CASE("select_features recovers the planted table structure") {
    const Lexicon& lex = fixtures::micro_lexicon();
    CriterionSample sample = planted_criterion_sample({.per_label = 48, .seed = 1});
    auto features = analyze_sample(sample, lex);
    SelectedPredictors selected = select_features(sample, features, lex, 0.01);

    // Output is ordered by descending F.
    for (std::size_t i = 1; i < selected.predictors.size(); ++i)
        CHECK(selected.predictors[i - 1].anova.statistic >=
              selected.predictors[i].anova.statistic);

    const struct {
        const char* feature;
        MoodLabel target;
        char sign;
    } expected[] = {
        {"negative_emotion", MoodLabel::negative, '+'},
        {"swear", MoodLabel::negative, '+'},
        {"anger", MoodLabel::negative, '+'},
        {"sadness", MoodLabel::negative, '+'},
        {"third_person_plural_verb", MoodLabel::negative, '+'},
        {"numerals_pct", MoodLabel::negative, '-'},
        {"positive_feeling", MoodLabel::positive, '+'},
        {"positive_emotion", MoodLabel::positive, '+'},
        {"family", MoodLabel::positive, '+'},
        {"question_marks_pct", MoodLabel::positive, '+'},
    };
    for (const auto& e : expected) {
        const SelectedPredictor* p = find_predictor(selected, e.feature);
        REQUIRE_MESSAGE(p != nullptr, e.feature);
        CHECK_MESSAGE(p->target_mood == e.target, e.feature);
        CHECK_MESSAGE(p->sign == e.sign, e.feature);
        CHECK(p->anova.p_value < 0.01);
    }

    // Sign consistency with the z triple.
    for (const auto& p : selected.predictors) {
        double z_target = p.target_mood == MoodLabel::negative ? p.z_by_condition.negative
                          : p.target_mood == MoodLabel::positive ? p.z_by_condition.positive
                                                                 : p.z_by_condition.neutral;
        CHECK((p.sign == '+') == (z_target > 0));
    }
}

TEST_CASE("select_features rejects unbalanced or undersized samples") {
    const Lexicon& lex = fixtures::micro_lexicon();
    CriterionSample sample = planted_criterion_sample({.per_label = 4, .seed = 2});
    sample.posts.pop_back();
    auto features = analyze_sample(sample, lex);
    CHECK_THROWS_AS(select_features(sample, features, lex, 0.01), DataError);

    CriterionSample tiny;
    tiny.posts.push_back({"odio", MoodLabel::negative});
    tiny.posts.push_back({"amore", MoodLabel::positive});
    tiny.posts.push_back({"tavolo", MoodLabel::neutral});
    CHECK_THROWS_AS(select_features(tiny, analyze_sample(tiny, lex), lex, 0.01), DataError);
}

TEST_CASE("a category with identical distributions is excluded") {
    const Lexicon& lex = fixtures::micro_lexicon();
    CriterionSample sample = planted_criterion_sample({.per_label = 24, .seed = 3});
    // "money" words never appear in the planted texts: constant zero,
    // degenerate, reported under skipped.
    auto features = analyze_sample(sample, lex);
    SelectedPredictors selected = select_features(sample, features, lex, 0.01);
    CHECK(find_predictor(selected, "money") == nullptr);
    bool skipped_money = false;
    for (const auto& s : selected.skipped)
        if (s.rfind("money", 0) == 0) skipped_money = true;
    CHECK(skipped_money);
}

TEST_CASE("alpha = 1 bound: nothing with a Scheffe-attributable condition is filtered") {
    const Lexicon& lex = fixtures::micro_lexicon();
    CriterionSample sample = planted_criterion_sample({.per_label = 24, .seed = 8});
    auto features = analyze_sample(sample, lex);
    SelectedPredictors strict = select_features(sample, features, lex, 0.01);
    SelectedPredictors loose = select_features(sample, features, lex, 0.999999);
    CHECK(loose.predictors.size() >= strict.predictors.size());
}

TEST_CASE("score_corpus: accounting on a hand-built fixture") {
    Corpus corpus;
    corpus.push_back(fixtures::profile(
        "p1",
        {fixtures::post("a", "ti odio", {fixtures::comment("c1", "anche io"),
                                         fixtures::comment("c2", "amore mio")}),
         fixtures::post("b", "che bella giornata", {fixtures::comment("c3", "merda")}),
         fixtures::post("c", "tavolo treno", {fixtures::comment("c4", "gioia")}),
         fixtures::post("d", "senza commenti"),
         fixtures::post("e", "", {}, PostKind::photo)}));

    ScoredCorpus scored = score_planted(corpus);
    const ScoreSummary& s = scored.summary;
    CHECK(s.posts_total == 5);
    CHECK(s.posts_eligible == 3);  // text posts with comments
    CHECK(s.posts_positive == 1);
    CHECK(s.posts_negative == 1);
    CHECK(s.posts_neutral == 1);
    CHECK(s.posts_non_neutral() == 2);
    CHECK(s.comments_total == 4);
    CHECK(s.comments_scored == 4);
    CHECK(s.comments_positive == 2);  // "amore mio", "gioia"
    CHECK(s.comments_negative == 1);  // "merda"
    CHECK(s.comments_neutral == 1);   // "anche io"

    const ScoredPost& odio = scored.profiles[0].posts[0];
    CHECK(odio.label == MoodLabel::negative);
    CHECK(odio.comments.size() == 2);
    // Comment means average over ALL comments, neutral included.
    CHECK(odio.comment_pos_mean == Approx(25.0));  // (0 + 50) / 2
    CHECK(odio.comment_neg_mean == Approx(0.0));
}

TEST_CASE("score_corpus output is independent of the job count") {
    Corpus corpus = generate_contagion_corpus({.n_profiles = 12,
                                               .posts_per_profile = 30,
                                               .comments_per_post_mean = 1.5,
                                               .seed = 17,
                                               .p_neutral_post = 0.2});
    ScoredCorpus serial = score_planted(corpus, 1);
    ScoredCorpus parallel = score_planted(corpus, 8);
    REQUIRE(serial.profiles.size() == parallel.profiles.size());
    for (std::size_t i = 0; i < serial.profiles.size(); ++i) {
        CHECK(serial.profiles[i].profile_id == parallel.profiles[i].profile_id);
        REQUIRE(serial.profiles[i].posts.size() == parallel.profiles[i].posts.size());
        for (std::size_t j = 0; j < serial.profiles[i].posts.size(); ++j) {
            const auto& a = serial.profiles[i].posts[j];
            const auto& b = parallel.profiles[i].posts[j];
            CHECK(a.post_id == b.post_id);
            CHECK(a.label == b.label);
            CHECK(a.scores.positive == b.scores.positive);
            CHECK(a.scores.negative == b.scores.negative);
        }
    }
}

TEST_CASE("empty posts are neutral everywhere") {
    Corpus corpus;
    corpus.push_back(fixtures::profile(
        "p1", {fixtures::post("a", "", {fixtures::comment("c1", "")}),
               fixtures::post("b", "", {fixtures::comment("c2", "")})}));
    ScoredCorpus scored = score_planted(corpus);
    CHECK(scored.summary.posts_neutral == 2);
    CHECK(scored.summary.comments_neutral == 2);
    CHECK(scored.summary.posts_non_neutral() == 0);
}

TEST_CASE("compare_post_groups balances and reports per-variable results") {
    std::vector<PostObservation> a, b;
    Rng rng(5);
    for (int i = 0; i < 300; ++i)
        a.push_back({static_cast<double>(rng.poisson(10.0)), 2.0, 1.0, 5.0});
    for (int i = 0; i < 120; ++i)
        b.push_back({static_cast<double>(rng.poisson(10.0)), 2.0, 1.0, 1.0});

    PostGroupReport report = compare_post_groups(a, b, "negative", "positive", 42);
    CHECK(report.n_a_original == 300);
    CHECK(report.n_b_original == 120);
    CHECK(report.n_balanced == 120);
    REQUIRE(report.variables.size() == 4);

    // n_comments is constant in both groups: degenerate, but only there.
    const auto& n_comments = report.variables[1];
    CHECK(n_comments.variable == "n_comments");
    CHECK(n_comments.degenerate);
    const auto& neg_score = report.variables[3];
    CHECK(neg_score.variable == "comment_neg_score");
    CHECK_FALSE(neg_score.degenerate);
    CHECK(neg_score.t.statistic > 0.0);  // group a planted higher
    CHECK(neg_score.t.p_value < 1e-6);
    CHECK(neg_score.group_a.n == 120);
    CHECK(neg_score.group_b.n == 120);

    // Same seed, same report; the balancing is the only stochastic step.
    PostGroupReport again = compare_post_groups(a, b, "negative", "positive", 42);
    CHECK(again.variables[0].t.statistic == report.variables[0].t.statistic);

    CHECK_THROWS_AS(compare_post_groups({}, b, "x", "y", 1), DegenerateDataError);
}

TEST_CASE("identical groups stay calm across seeds") {
    // Monte Carlo calibration: both groups from one distribution; p < .01
    // should fire at about the nominal rate.
    Rng source(12);
    int fired = 0, total = 0;
    for (std::uint64_t rep = 0; rep < 100; ++rep) {
        std::vector<PostObservation> a, b;
        for (int i = 0; i < 60; ++i)
            a.push_back({static_cast<double>(source.poisson(8.0)),
                         static_cast<double>(source.poisson(2.0)), source.uniform01(),
                         source.uniform01()});
        for (int i = 0; i < 90; ++i)
            b.push_back({static_cast<double>(source.poisson(8.0)),
                         static_cast<double>(source.poisson(2.0)), source.uniform01(),
                         source.uniform01()});
        PostGroupReport report = compare_post_groups(a, b, "a", "b", 1000 + rep);
        for (const auto& v : report.variables) {
            if (v.degenerate) continue;
            ++total;
            if (v.t.p_value < 0.01) ++fired;
        }
    }
    CHECK(total > 350);
    // ~1% nominal; allow generous sampling slack.
    CHECK(fired <= total / 20);
}

TEST_CASE("coherence: perfect copying gives the diagonal table") {
    ScoredProfile profile;
    profile.profile_id = "p";
    for (int i = 0; i < 20; ++i) {
        ScoredPost pos;
        pos.post_id = "pos" + std::to_string(i);
        pos.label = MoodLabel::positive;
        pos.comments.push_back({"c", {10.0, 0.0}, MoodLabel::positive});
        profile.posts.push_back(pos);
        ScoredPost neg;
        neg.post_id = "neg" + std::to_string(i);
        neg.label = MoodLabel::negative;
        neg.comments.push_back({"c", {0.0, 10.0}, MoodLabel::negative});
        profile.posts.push_back(neg);
    }
    CoherenceResult r = coherence(profile, CoherenceUnit::comment, 4.0);
    REQUIRE(r.determinate);
    CHECK(r.table.counts == std::vector<std::vector<std::int64_t>>{{20, 0}, {0, 20}});
    CHECK(r.chi2 == Approx(40.0));
    CHECK(r.highly_empathetic);
    CHECK(r.empathy_score == Approx(40.0));
    CHECK(r.n_observations == 40);
}

TEST_CASE("coherence: neutral posts and comments never contribute") {
    ScoredProfile profile;
    profile.profile_id = "p";
    ScoredPost post;
    post.post_id = "a";
    post.label = MoodLabel::positive;
    post.comments.push_back({"c1", {5.0, 0.0}, MoodLabel::positive});
    post.comments.push_back({"c2", {0.0, 0.0}, MoodLabel::neutral});
    post.comments.push_back({"c3", {0.0, 5.0}, MoodLabel::negative});
    profile.posts.push_back(post);
    ScoredPost neutral_post;
    neutral_post.post_id = "b";
    neutral_post.label = MoodLabel::neutral;
    neutral_post.comments.push_back({"c4", {9.0, 0.0}, MoodLabel::positive});
    profile.posts.push_back(neutral_post);
    ScoredPost neg;
    neg.post_id = "c";
    neg.label = MoodLabel::negative;
    neg.comments.push_back({"c5", {0.0, 3.0}, MoodLabel::negative});
    profile.posts.push_back(neg);

    CoherenceResult r = coherence(profile, CoherenceUnit::comment, 4.0);
    // Only c1, c3 (under post a) and c5 (under post c) count.
    CHECK(r.n_observations == 3);
    CHECK(r.table.counts[0][0] + r.table.counts[0][1] == 2);
    CHECK(r.table.counts[1][1] == 1);
}

TEST_CASE("coherence: single-mood profiles are indeterminate") {
    ScoredProfile profile;
    profile.profile_id = "p";
    for (int i = 0; i < 5; ++i) {
        ScoredPost post;
        post.post_id = std::to_string(i);
        post.label = MoodLabel::positive;
        post.comments.push_back({"c", {4.0, 0.0}, MoodLabel::positive});
        profile.posts.push_back(post);
    }
    CoherenceResult r = coherence(profile, CoherenceUnit::comment, 4.0);
    CHECK_FALSE(r.determinate);
}

TEST_CASE("coherence is covariant under swapping the labels") {
    Corpus corpus = generate_contagion_corpus({.n_profiles = 8,
                                               .posts_per_profile = 40,
                                               .comments_per_post_mean = 2.0,
                                               .p_positive_post = 0.6,
                                               .coupling = 0.5,
                                               .seed = 61});
    ScoredCorpus scored = score_planted(corpus);
    for (auto& profile : scored.profiles) {
        CoherenceResult before = coherence(profile, CoherenceUnit::comment, 4.0);
        for (auto& post : profile.posts) {
            auto flip = [](MoodLabel l) {
                return l == MoodLabel::positive   ? MoodLabel::negative
                       : l == MoodLabel::negative ? MoodLabel::positive
                                                  : MoodLabel::neutral;
            };
            post.label = flip(post.label);
            for (auto& comment : post.comments) comment.label = flip(comment.label);
        }
        CoherenceResult after = coherence(profile, CoherenceUnit::comment, 4.0);
        CHECK(before.determinate == after.determinate);
        if (before.determinate) CHECK(after.chi2 == Approx(before.chi2).epsilon(1e-12));
    }
}

TEST_CASE("post_mean unit counts one observation per post") {
    ScoredProfile profile;
    profile.profile_id = "p";
    ScoredPost post;
    post.post_id = "a";
    post.label = MoodLabel::positive;
    // Two positive comments, one (stronger) negative: mean is positive.
    post.comments.push_back({"c1", {30.0, 0.0}, MoodLabel::positive});
    post.comments.push_back({"c2", {30.0, 0.0}, MoodLabel::positive});
    post.comments.push_back({"c3", {0.0, 45.0}, MoodLabel::negative});
    profile.posts.push_back(post);
    ScoredPost other = post;
    other.post_id = "b";
    other.label = MoodLabel::negative;
    other.comments = {{"c4", {0.0, 9.0}, MoodLabel::negative}};
    profile.posts.push_back(other);

    CoherenceResult by_comment = coherence(profile, CoherenceUnit::comment, 4.0);
    CHECK(by_comment.n_observations == 4);
    CoherenceResult by_post = coherence(profile, CoherenceUnit::post_mean, 4.0);
    CHECK(by_post.n_observations == 2);
    // Post a's averaged comment mood: (20, 15) -> positive.
    CHECK(by_post.table.counts[0][0] == 1);
    CHECK(by_post.table.counts[1][1] == 1);
}

TEST_CASE("pooled coherence aggregates across profiles") {
    Corpus corpus = generate_contagion_corpus({.n_profiles = 10,
                                               .posts_per_profile = 30,
                                               .comments_per_post_mean = 2.0,
                                               .p_positive_post = 0.5,
                                               .coupling = 1.0,
                                               .seed = 71});
    ScoredCorpus scored = score_planted(corpus);
    CoherenceResult pooled =
        pooled_coherence(scored.profiles, CoherenceUnit::comment, 4.0);
    REQUIRE(pooled.determinate);
    CHECK(pooled.profile_id == "__pooled__");
    CHECK(pooled.table.counts[0][1] == 0);
    CHECK(pooled.table.counts[1][0] == 0);
    CHECK(pooled.chi2 == Approx(static_cast<double>(pooled.n_observations)));

    std::int64_t per_profile_total = 0;
    for (const auto& profile : scored.profiles)
        per_profile_total +=
            coherence(profile, CoherenceUnit::comment, 4.0).n_observations;
    CHECK(pooled.n_observations == per_profile_total);
}

TEST_CASE("empathy split: high-coupling profiles separate from low") {
    ContagionConfig low_cfg{.n_profiles = 12,
                            .posts_per_profile = 40,
                            .comments_per_post_mean = 2.0,
                            .p_positive_post = 0.5,
                            .coupling = 0.05,
                            .seed = 81,
                            .p_neutral_post = 0.0,
                            .words_per_post = 8,
                            .words_per_comment = 6,
                            .sexual_word_rate = 0.01};
    ContagionConfig high_cfg = low_cfg;
    high_cfg.coupling = 0.95;
    high_cfg.posts_per_profile = 80;
    high_cfg.words_per_post = 16;
    high_cfg.sexual_word_rate = 0.15;
    high_cfg.id_prefix = "h";
    high_cfg.seed = 82;

    Corpus corpus = generate_contagion_corpus(low_cfg);
    Corpus high = generate_contagion_corpus(high_cfg);
    corpus.insert(corpus.end(), high.begin(), high.end());

    ScoredCorpus scored = score_planted(corpus);
    std::vector<CoherenceResult> results;
    for (const auto& profile : scored.profiles)
        results.push_back(coherence(profile, CoherenceUnit::comment, 4.0));
    auto variables = collect_profile_variables(corpus, fixtures::micro_lexicon(),
                                               fixtures::default_bindings());
    EmpathyReport report = empathy_split_and_compare(results, variables,
                                                     fixtures::micro_lexicon());

    // The high-coupling profiles live in the high half of the split.
    std::size_t high_in_high = 0;
    for (const auto& id : report.split.high)
        if (id.front() == 'h') ++high_in_high;
    CHECK(high_in_high >= report.split.high.size() - 2);

    const VariableComparison* wall_posts = nullptr;
    for (const auto& cmp : report.metric_comparisons)
        if (cmp.variable == "wall_posts") wall_posts = &cmp;
    REQUIRE(wall_posts != nullptr);
    REQUIRE_FALSE(wall_posts->degenerate);
    CHECK(wall_posts->group_a.name == "low");
    CHECK(wall_posts->t.statistic < 0.0);  // high posts more
    CHECK(wall_posts->t.p_value < 0.01);

    REQUIRE(report.sp_comparison.has_value());
    REQUIRE_FALSE(report.sp_comparison->degenerate);
    CHECK(report.sp_comparison->t.statistic < 0.0);  // high scores higher
    CHECK(report.sp_comparison->t.p_value < 0.01);

    const CorrelationEntry* sp_corr = nullptr;
    for (const auto& c : report.correlations)
        if (c.variable == "self_presentation") sp_corr = &c;
    REQUIRE(sp_corr != nullptr);
    REQUIRE_FALSE(sp_corr->degenerate);
    CHECK(sp_corr->r.statistic > 0.0);

    REQUIRE(report.gender_comparison.has_value());
}

TEST_CASE("empathy split needs four determinate profiles") {
    std::vector<CoherenceResult> results(3);
    for (int i = 0; i < 3; ++i) {
        results[i].profile_id = "p" + std::to_string(i);
        results[i].determinate = true;
        results[i].chi2 = i;
    }
    std::vector<ProfileVariables> variables(3);
    for (int i = 0; i < 3; ++i) variables[i].profile_id = "p" + std::to_string(i);
    CHECK_THROWS_AS(
        empathy_split_and_compare(results, variables, fixtures::micro_lexicon()),
        DegenerateDataError);
}

TEST_CASE("identical chi2 everywhere reports a degenerate split") {
    std::vector<CoherenceResult> results(6);
    std::vector<ProfileVariables> variables(6);
    for (int i = 0; i < 6; ++i) {
        results[i].profile_id = "p" + std::to_string(i);
        results[i].determinate = true;
        results[i].chi2 = 5.0;
        variables[i].profile_id = "p" + std::to_string(i);
        variables[i].features.word_count = 10 + i;
        variables[i].features.category_pct.assign(
            fixtures::micro_lexicon().categories().size(), 0.0);
    }
    EmpathyReport report =
        empathy_split_and_compare(results, variables, fixtures::micro_lexicon());
    CHECK(report.split.degenerate);
    CHECK(report.split.high.empty());
    bool warned = false;
    for (const auto& w : report.warnings)
        if (w.find("degenerate median split") != std::string::npos) warned = true;
    CHECK(warned);
}
