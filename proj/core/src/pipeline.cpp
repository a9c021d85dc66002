#include "moodco/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "moodco/csv.hpp"
#include "moodco/errors.hpp"

namespace moodco {

// --- criterion sample ------------------------------------------------------

std::array<std::size_t, 3> CriterionSample::label_counts() const {
    std::array<std::size_t, 3> counts{0, 0, 0};
    for (const auto& post : posts) {
        switch (post.label) {
            case MoodLabel::negative: ++counts[0]; break;
            case MoodLabel::positive: ++counts[1]; break;
            case MoodLabel::neutral: ++counts[2]; break;
        }
    }
    return counts;
}

bool CriterionSample::balanced() const {
    auto c = label_counts();
    return c[0] == c[1] && c[1] == c[2] && c[0] > 0;
}

namespace {

MoodLabel parse_label(const std::string& s, const std::string& where) {
    if (s == "positive") return MoodLabel::positive;
    if (s == "negative") return MoodLabel::negative;
    if (s == "neutral") return MoodLabel::neutral;
    throw DataError(where + ": unknown label '" + s + "'");
}

}  // namespace

CriterionSample load_criterion_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open criterion file: " + path.string());
    auto rows = csv::read_all(in, path.string());
    if (rows.empty() || rows[0] != std::vector<std::string>{"text", "label"})
        throw DataError(path.string() + ": expected 'text,label' header");
    CriterionSample sample;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2)
            throw DataError(path.string() + ": row " + std::to_string(i + 1) +
                            " does not have 2 fields");
        sample.posts.push_back(
            {rows[i][0], parse_label(rows[i][1], path.string() + ": row " +
                                                     std::to_string(i + 1))});
    }
    return sample;
}

void save_criterion_csv(const CriterionSample& sample, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open criterion file for writing: " + path.string());
    csv::write_row(out, {"text", "label"});
    for (const auto& post : sample.posts)
        csv::write_row(out, {post.text, to_string(post.label)});
}

// --- feature selection -------------------------------------------------------

namespace {

struct CandidateFeature {
    std::string name;
    // Pulls the feature value out of an analyzed post.
    double (*builtin_get)(const FeatureVector&) = nullptr;
    CategoryId category = 0;

    double value(const FeatureVector& fv) const {
        if (builtin_get) return builtin_get(fv);
        return category < fv.category_pct.size() ? fv.category_pct[category] : 0.0;
    }
};

std::vector<CandidateFeature> candidate_features(const Lexicon& lexicon) {
    std::vector<CandidateFeature> out;
    for (std::size_t c = 0; c < lexicon.categories().size(); ++c)
        out.push_back({lexicon.categories()[c], nullptr, static_cast<CategoryId>(c)});
    out.push_back({"numerals_pct", [](const FeatureVector& fv) { return fv.numerals_pct; }, 0});
    out.push_back(
        {"question_marks_pct", [](const FeatureVector& fv) { return fv.question_marks_pct; }, 0});
    out.push_back({"commas_pct", [](const FeatureVector& fv) { return fv.commas_pct; }, 0});
    out.push_back(
        {"six_letter_pct", [](const FeatureVector& fv) { return fv.six_letter_pct; }, 0});
    return out;
}

constexpr std::array<MoodLabel, 3> kConditionOrder = {MoodLabel::negative, MoodLabel::positive,
                                                      MoodLabel::neutral};

ConditionTriple to_triple(const std::vector<double>& by_condition) {
    return {by_condition[0], by_condition[1], by_condition[2]};
}

}  // namespace

SelectedPredictors select_features(const CriterionSample& sample,
                                   std::span<const FeatureVector> features,
                                   const Lexicon& lexicon, double alpha) {
    if (features.size() != sample.posts.size())
        throw DataError("select_features: one feature vector per criterion post required");
    if (!sample.balanced()) {
        auto c = sample.label_counts();
        throw DataError("criterion sample is not balanced (negative/positive/neutral = " +
                        std::to_string(c[0]) + "/" + std::to_string(c[1]) + "/" +
                        std::to_string(c[2]) + ")");
    }
    if (sample.label_counts()[0] < 2)
        throw DataError("criterion sample needs at least 2 posts per label");

    SelectedPredictors out;
    for (const CandidateFeature& feature : candidate_features(lexicon)) {
        std::array<std::vector<double>, 3> groups;
        for (std::size_t i = 0; i < sample.posts.size(); ++i) {
            const double v = feature.value(features[i]);
            for (std::size_t g = 0; g < 3; ++g)
                if (sample.posts[i].label == kConditionOrder[g]) groups[g].push_back(v);
        }
        std::vector<std::vector<double>> group_vec(groups.begin(), groups.end());

        TestResult anova;
        std::vector<std::vector<TestResult>> pairwise;
        try {
            anova = oneway_anova(group_vec);
            pairwise = scheffe_pairwise(group_vec);
        } catch (const DegenerateDataError& e) {
            out.skipped.push_back(feature.name + ": " + e.what());
            continue;
        }
        if (!(anova.p_value < alpha)) continue;

        // The discriminated condition must differ from BOTH others under
        // Scheffe; otherwise the feature cannot be attributed to a mood
        // (the paper drops such categories despite a significant F).
        std::vector<std::size_t> candidates;
        for (std::size_t g = 0; g < 3; ++g) {
            bool separated = true;
            for (std::size_t h = 0; h < 3; ++h)
                if (h != g && !(pairwise[g][h].p_value < alpha)) separated = false;
            if (separated) candidates.push_back(g);
        }
        if (candidates.empty()) continue;

        std::vector<double> means;
        for (const auto& g : group_vec) means.push_back(mean(g));
        std::vector<double> z = zscores(means);

        std::size_t target = candidates[0];
        for (std::size_t g : candidates)
            if (std::fabs(z[g]) > std::fabs(z[target])) target = g;

        SelectedPredictor predictor;
        predictor.feature = feature.name;
        predictor.anova = anova;
        predictor.target_mood = kConditionOrder[target];
        predictor.sign = z[target] > 0 ? '+' : '-';
        predictor.z_by_condition = to_triple(z);
        predictor.group_means = to_triple(means);
        out.predictors.push_back(std::move(predictor));
    }

    std::sort(out.predictors.begin(), out.predictors.end(),
              [](const SelectedPredictor& a, const SelectedPredictor& b) {
                  if (a.anova.statistic != b.anova.statistic)
                      return a.anova.statistic > b.anova.statistic;
                  return a.feature < b.feature;
              });
    return out;
}

// --- corpus scoring ----------------------------------------------------------

namespace {

ScoredProfile score_profile(const Profile& profile, const Lexicon& lexicon,
                            const CategoryBindings& bindings, TiePolicy tie_policy) {
    ScoredProfile sp;
    sp.profile_id = profile.profile_id;
    for (const Post* post : eligible_posts(profile, /*require_comments=*/true)) {
        ScoredPost scored;
        scored.post_id = post->post_id;
        scored.likes = post->likes;
        scored.scores = mood_scores(analyze_text(post->text, lexicon), bindings);
        scored.label = classify_mood(scored.scores, tie_policy);
        double pos_sum = 0.0, neg_sum = 0.0;
        for (const Comment& comment : post->comments) {
            ScoredComment sc;
            sc.comment_id = comment.comment_id;
            sc.scores = mood_scores(analyze_text(comment.text, lexicon), bindings);
            sc.label = classify_mood(sc.scores, tie_policy);
            pos_sum += sc.scores.positive;
            neg_sum += sc.scores.negative;
            scored.comments.push_back(std::move(sc));
        }
        if (!scored.comments.empty()) {
            scored.comment_pos_mean = pos_sum / static_cast<double>(scored.comments.size());
            scored.comment_neg_mean = neg_sum / static_cast<double>(scored.comments.size());
        }
        sp.posts.push_back(std::move(scored));
    }
    return sp;
}

void run_parallel(std::size_t n_items, int jobs, const std::function<void(std::size_t)>& work);

}  // namespace

ScoredCorpus score_corpus(const Corpus& corpus, const Lexicon& lexicon,
                          const CategoryBindings& bindings, TiePolicy tie_policy, int jobs) {
    ScoredCorpus out;
    out.profiles.resize(corpus.size());

    run_parallel(corpus.size(), jobs, [&](std::size_t i) {
        out.profiles[i] = score_profile(corpus[i], lexicon, bindings, tie_policy);
    });

    ScoreSummary& s = out.summary;
    s.posts_total = total_posts(corpus);
    s.comments_total = total_comments(corpus);
    for (const ScoredProfile& profile : out.profiles) {
        s.posts_eligible += static_cast<std::int64_t>(profile.posts.size());
        for (const ScoredPost& post : profile.posts) {
            switch (post.label) {
                case MoodLabel::positive: ++s.posts_positive; break;
                case MoodLabel::negative: ++s.posts_negative; break;
                case MoodLabel::neutral: ++s.posts_neutral; break;
            }
            s.comments_scored += static_cast<std::int64_t>(post.comments.size());
            for (const ScoredComment& comment : post.comments) {
                switch (comment.label) {
                    case MoodLabel::positive: ++s.comments_positive; break;
                    case MoodLabel::negative: ++s.comments_negative; break;
                    case MoodLabel::neutral: ++s.comments_neutral; break;
                }
            }
        }
    }
    return out;
}

namespace {

void run_parallel(std::size_t n_items, int jobs, const std::function<void(std::size_t)>& work) {
    const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(n_items)));
    if (n_threads == 1) {
        for (std::size_t i = 0; i < n_items; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n_items) return;
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

// --- post-group comparisons -----------------------------------------------

PostObservation observe(const ScoredPost& post) {
    return {static_cast<double>(post.likes), static_cast<double>(post.comments.size()),
            post.comment_pos_mean, post.comment_neg_mean};
}

namespace {

struct VariableAccessor {
    std::string name;
    double PostObservation::*member;
};

const std::array<VariableAccessor, 4> kCompareVariables = {{
    {"likes", &PostObservation::likes},
    {"n_comments", &PostObservation::n_comments},
    {"comment_pos_score", &PostObservation::comment_pos_score},
    {"comment_neg_score", &PostObservation::comment_neg_score},
}};

GroupStats group_stats(const std::string& name, const std::vector<double>& values) {
    return {name, values.size(), mean(values), sample_sd(values)};
}

}  // namespace

PostGroupReport compare_post_groups(std::span<const PostObservation> group_a,
                                    std::span<const PostObservation> group_b,
                                    const std::string& group_a_name,
                                    const std::string& group_b_name, std::uint64_t seed) {
    if (group_a.empty() || group_b.empty())
        throw DegenerateDataError("compare_post_groups: empty group");

    PostGroupReport report;
    report.group_a_name = group_a_name;
    report.group_b_name = group_b_name;
    report.n_a_original = group_a.size();
    report.n_b_original = group_b.size();
    report.seed = seed;
    report.n_balanced = std::min(group_a.size(), group_b.size());

    // Balance by resampling the larger group down to the smaller's size.
    std::vector<PostObservation> a(group_a.begin(), group_a.end());
    std::vector<PostObservation> b(group_b.begin(), group_b.end());
    if (a.size() > b.size()) {
        a = bootstrap_balance(a, b.size(), seed);
    } else if (b.size() > a.size()) {
        b = bootstrap_balance(b, a.size(), seed);
    }

    for (const VariableAccessor& var : kCompareVariables) {
        std::vector<double> va, vb;
        va.reserve(a.size());
        vb.reserve(b.size());
        for (const auto& o : a) va.push_back(o.*(var.member));
        for (const auto& o : b) vb.push_back(o.*(var.member));
        VariableComparison cmp;
        cmp.variable = var.name;
        cmp.group_a = group_stats(group_a_name, va);
        cmp.group_b = group_stats(group_b_name, vb);
        try {
            cmp.t = t_test_independent(va, vb, /*pooled=*/true);
        } catch (const DegenerateDataError& e) {
            cmp.degenerate = true;
            cmp.note = e.what();
        }
        report.variables.push_back(std::move(cmp));
    }
    return report;
}

// --- per-profile coherence -------------------------------------------------

namespace {

// Row/col order fixed: positive first, then negative.
std::size_t mood_index(MoodLabel label) { return label == MoodLabel::positive ? 0 : 1; }

ContingencyTable empty_mood_table() {
    ContingencyTable t;
    t.row_labels = {"positive", "negative"};
    t.col_labels = {"positive", "negative"};
    t.counts = {{0, 0}, {0, 0}};
    return t;
}

void accumulate_coherence(const ScoredProfile& profile, CoherenceUnit unit,
                          TiePolicy tie_policy, ContingencyTable& table) {
    for (const ScoredPost& post : profile.posts) {
        if (post.label == MoodLabel::neutral) continue;
        if (unit == CoherenceUnit::comment) {
            for (const ScoredComment& comment : post.comments) {
                if (comment.label == MoodLabel::neutral) continue;
                ++table.counts[mood_index(post.label)][mood_index(comment.label)];
            }
        } else {
            // Average the non-neutral comments' scores, then label the mean.
            double pos = 0.0, neg = 0.0;
            std::int64_t n = 0;
            for (const ScoredComment& comment : post.comments) {
                if (comment.label == MoodLabel::neutral) continue;
                pos += comment.scores.positive;
                neg += comment.scores.negative;
                ++n;
            }
            if (n == 0) continue;  // neutral comments are non-evidence
            MoodLabel avg = classify_mood({pos / static_cast<double>(n),
                                           neg / static_cast<double>(n)},
                                          tie_policy);
            if (avg == MoodLabel::neutral) continue;
            ++table.counts[mood_index(post.label)][mood_index(avg)];
        }
    }
}

CoherenceResult finish_coherence(std::string profile_id, ContingencyTable table,
                                 double empathy_threshold) {
    CoherenceResult result;
    result.profile_id = std::move(profile_id);
    result.table = std::move(table);
    result.n_observations = result.table.total();
    try {
        TestResult chi = chi_square(result.table);
        result.determinate = true;
        result.chi2 = chi.statistic;
        result.df = chi.df1;
        result.p = chi.p_value;
        result.empathy_score = chi.statistic;
        result.highly_empathetic = chi.statistic >= empathy_threshold;
    } catch (const DegenerateDataError&) {
        result.determinate = false;
    }
    return result;
}

}  // namespace

CoherenceResult coherence(const ScoredProfile& profile, CoherenceUnit unit,
                          double empathy_threshold, TiePolicy tie_policy) {
    ContingencyTable table = empty_mood_table();
    accumulate_coherence(profile, unit, tie_policy, table);
    return finish_coherence(profile.profile_id, std::move(table), empathy_threshold);
}

CoherenceResult pooled_coherence(std::span<const ScoredProfile> profiles, CoherenceUnit unit,
                                 double empathy_threshold, TiePolicy tie_policy) {
    ContingencyTable table = empty_mood_table();
    for (const ScoredProfile& profile : profiles)
        accumulate_coherence(profile, unit, tie_policy, table);
    return finish_coherence("__pooled__", std::move(table), empathy_threshold);
}

// --- empathy split -----------------------------------------------------------

std::vector<ProfileVariables> collect_profile_variables(const Corpus& corpus,
                                                        const Lexicon& lexicon,
                                                        const CategoryBindings& bindings,
                                                        const SelfPresentationModel& model) {
    std::vector<ProfileVariables> out;
    out.reserve(corpus.size());
    for (const Profile& profile : corpus) {
        ProfileVariables pv;
        pv.profile_id = profile.profile_id;
        pv.gender = profile.gender;
        pv.metrics = profile.metrics;
        pv.features = analyze_profile(profile, lexicon);
        out.push_back(std::move(pv));
    }

    if (out.size() >= 2 && bindings.sexual_category()) {
        const CategoryId sexual = *bindings.sexual_category();
        std::vector<double> wc, sx;
        for (const auto& pv : out) {
            wc.push_back(static_cast<double>(pv.features.word_count));
            sx.push_back(sexual < pv.features.category_pct.size()
                             ? pv.features.category_pct[sexual]
                             : 0.0);
        }
        SelfPresentationStats stats{mean(wc), population_sd(wc), mean(sx), population_sd(sx)};
        if (stats.word_count_sd > 0.0 && stats.sexual_sd > 0.0) {
            for (auto& pv : out)
                pv.sp_score = self_presentation_score(pv.features, sexual, model, stats);
        }
    }
    return out;
}

namespace {

using ValueGetter = std::function<std::optional<double>(const ProfileVariables&)>;

VariableComparison compare_variable(const std::string& name,
                                    const std::vector<const ProfileVariables*>& low,
                                    const std::vector<const ProfileVariables*>& high,
                                    const ValueGetter& get) {
    VariableComparison cmp;
    cmp.variable = name;
    std::vector<double> lo, hi;
    for (const auto* pv : low)
        if (auto v = get(*pv)) lo.push_back(*v);
    for (const auto* pv : high)
        if (auto v = get(*pv)) hi.push_back(*v);
    cmp.group_a = group_stats("low", lo);
    cmp.group_b = group_stats("high", hi);
    try {
        if (lo.size() != low.size() || hi.size() != high.size())
            throw DegenerateDataError("variable missing for some profiles");
        cmp.t = t_test_independent(lo, hi, /*pooled=*/true);
    } catch (const DegenerateDataError& e) {
        cmp.degenerate = true;
        cmp.note = e.what();
    }
    return cmp;
}

CorrelationEntry correlate(const std::string& name,
                           const std::vector<const ProfileVariables*>& profiles,
                           const std::vector<double>& chi2s, const ValueGetter& get) {
    CorrelationEntry entry;
    entry.variable = name;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        if (auto v = get(*profiles[i])) {
            xs.push_back(chi2s[i]);
            ys.push_back(*v);
        }
    }
    try {
        if (xs.size() != profiles.size())
            throw DegenerateDataError("variable missing for some profiles");
        entry.r = pearson_r(xs, ys);
    } catch (const DegenerateDataError& e) {
        entry.degenerate = true;
        entry.note = e.what();
    }
    return entry;
}

std::vector<std::pair<std::string, ValueGetter>> metric_getters() {
    auto metric = [](const std::string& name,
                     std::int64_t FacebookMetrics::*member) -> std::pair<std::string, ValueGetter> {
        return {name, [member](const ProfileVariables& pv) -> std::optional<double> {
                    if (!pv.metrics) return std::nullopt;
                    return static_cast<double>((*pv.metrics).*member);
                }};
    };
    return {
        metric("friends", &FacebookMetrics::friends),
        metric("followed_people", &FacebookMetrics::followed_people),
        metric("visited_places", &FacebookMetrics::visited_places),
        metric("famous_quotes", &FacebookMetrics::famous_quotes),
        metric("pages_with_likes", &FacebookMetrics::pages_with_likes),
        metric("complete_activity", &FacebookMetrics::complete_activity),
        metric("wall_posts", &FacebookMetrics::wall_posts),
        metric("profile_picture_edits", &FacebookMetrics::profile_picture_edits),
        metric("personal_photos", &FacebookMetrics::personal_photos),
        metric("photos", &FacebookMetrics::photos),
        metric("videos", &FacebookMetrics::videos),
        metric("likes", &FacebookMetrics::likes),
        metric("activities_with_like", &FacebookMetrics::activities_with_like),
        metric("wall_posts_with_comments", &FacebookMetrics::wall_posts_with_comments),
        metric("comments", &FacebookMetrics::comments),
        metric("wall_posts_length", &FacebookMetrics::wall_posts_length),
        metric("wall_posts_average_length", &FacebookMetrics::wall_posts_average_length),
    };
}

std::vector<std::pair<std::string, ValueGetter>> liwc_getters(const Lexicon& lexicon) {
    std::vector<std::pair<std::string, ValueGetter>> out;
    out.emplace_back("word_count", [](const ProfileVariables& pv) -> std::optional<double> {
        return static_cast<double>(pv.features.word_count);
    });
    for (std::size_t c = 0; c < lexicon.categories().size(); ++c) {
        out.emplace_back(lexicon.categories()[c],
                         [c](const ProfileVariables& pv) -> std::optional<double> {
                             return c < pv.features.category_pct.size()
                                        ? std::optional<double>(pv.features.category_pct[c])
                                        : std::nullopt;
                         });
    }
    out.emplace_back("question_marks_pct", [](const ProfileVariables& pv) {
        return std::optional<double>(pv.features.question_marks_pct);
    });
    out.emplace_back("commas_pct", [](const ProfileVariables& pv) {
        return std::optional<double>(pv.features.commas_pct);
    });
    out.emplace_back("numerals_pct", [](const ProfileVariables& pv) {
        return std::optional<double>(pv.features.numerals_pct);
    });
    out.emplace_back("six_letter_pct", [](const ProfileVariables& pv) {
        return std::optional<double>(pv.features.six_letter_pct);
    });
    return out;
}

}  // namespace

EmpathyReport empathy_split_and_compare(std::span<const CoherenceResult> coherence_results,
                                        std::span<const ProfileVariables> profiles,
                                        const Lexicon& lexicon) {
    std::map<std::string, const ProfileVariables*> by_id;
    for (const auto& pv : profiles) by_id[pv.profile_id] = &pv;

    EmpathyReport report;
    std::map<std::string, double> chi2_by_id;
    for (const CoherenceResult& cr : coherence_results) {
        if (!cr.determinate) {
            report.indeterminate.push_back(cr.profile_id);
            continue;
        }
        if (!by_id.count(cr.profile_id))
            throw DataError("empathy split: no profile variables for '" + cr.profile_id + "'");
        chi2_by_id[cr.profile_id] = cr.chi2;
    }
    if (chi2_by_id.size() < 4)
        throw DegenerateDataError("empathy split needs at least 4 determinate profiles");

    report.split = median_split(chi2_by_id);
    if (report.split.degenerate)
        report.warnings.push_back("degenerate median split: all profiles on one side");

    std::vector<const ProfileVariables*> low, high, determinate;
    std::vector<double> chi2s;
    for (const auto& id : report.split.low) low.push_back(by_id.at(id));
    for (const auto& id : report.split.high) high.push_back(by_id.at(id));
    for (const auto& [id, chi2] : chi2_by_id) {
        determinate.push_back(by_id.at(id));
        chi2s.push_back(chi2);
    }

    for (const auto& [name, get] : metric_getters()) {
        report.metric_comparisons.push_back(compare_variable(name, low, high, get));
        report.correlations.push_back(correlate(name, determinate, chi2s, get));
    }
    for (const auto& [name, get] : liwc_getters(lexicon)) {
        report.liwc_comparisons.push_back(compare_variable(name, low, high, get));
        report.correlations.push_back(correlate(name, determinate, chi2s, get));
    }

    ValueGetter sp_get = [](const ProfileVariables& pv) { return pv.sp_score; };
    report.sp_comparison = compare_variable("self_presentation", low, high, sp_get);
    report.correlations.push_back(correlate("self_presentation", determinate, chi2s, sp_get));

    // Empathy by gender: t over chi2 with groups (female, male).
    {
        std::vector<double> female, male;
        for (std::size_t i = 0; i < determinate.size(); ++i) {
            if (determinate[i]->gender == Gender::female) female.push_back(chi2s[i]);
            if (determinate[i]->gender == Gender::male) male.push_back(chi2s[i]);
        }
        VariableComparison cmp;
        cmp.variable = "empathy_by_gender";
        cmp.group_a = group_stats("female", female);
        cmp.group_b = group_stats("male", male);
        try {
            if (female.size() < 2 || male.size() < 2)
                throw DegenerateDataError("fewer than 2 profiles in a gender group");
            cmp.t = t_test_independent(female, male, /*pooled=*/true);
        } catch (const DegenerateDataError& e) {
            cmp.degenerate = true;
            cmp.note = e.what();
        }
        report.gender_comparison = std::move(cmp);
    }

    for (const auto& cmp : report.metric_comparisons)
        if (cmp.degenerate) report.warnings.push_back(cmp.variable + " skipped: " + cmp.note);
    for (const auto& cmp : report.liwc_comparisons)
        if (cmp.degenerate) report.warnings.push_back(cmp.variable + " skipped: " + cmp.note);
    if (report.sp_comparison && report.sp_comparison->degenerate)
        report.warnings.push_back("self_presentation skipped: " + report.sp_comparison->note);

    return report;
}

}  // namespace moodco
