// moodco - batch CLI for the mood-indicator / emotional-coherence pipeline.
//
// Subcommands: score, select-features, coherence, compare-posts, generate,
// features-dump. Configuration comes from a key=value file (--config or
// $MOODCO_CONFIG) with CLI flags taking precedence. Exit codes: 0 success,
// 1 configuration error, 2 data/statistics error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "moodco/config.hpp"
#include "moodco/corpus.hpp"
#include "moodco/errors.hpp"
#include "moodco/generator.hpp"
#include "moodco/lexicon.hpp"
#include "moodco/mood.hpp"
#include "moodco/pipeline.hpp"
#include "moodco/report.hpp"
#include "moodco/rng.hpp"

namespace {

using namespace moodco;

struct CliOverrides {
    std::optional<std::string> config_path;
    std::optional<std::string> lexicon, bindings, corpus, output_dir;
    std::optional<std::uint64_t> seed;
    std::optional<double> alpha, empathy_threshold;
    std::optional<std::string> tie_policy, coherence_unit;
    std::optional<int> jobs;
    std::string format = "json";
};

void add_common_options(CLI::App* cmd, CliOverrides& o) {
    cmd->add_option("--config", o.config_path, "key=value config file (or $MOODCO_CONFIG)");
    cmd->add_option("--lexicon", o.lexicon, "lexicon file");
    cmd->add_option("--bindings", o.bindings, "category bindings file");
    cmd->add_option("--corpus", o.corpus, "JSONL corpus file");
    cmd->add_option("--output-dir", o.output_dir, "directory for reports");
    cmd->add_option("--seed", o.seed, "PRNG seed; fully determines stochastic output");
    cmd->add_option("--alpha", o.alpha, "significance level for feature selection");
    cmd->add_option("--empathy-threshold", o.empathy_threshold,
                    "chi2 cut for the highly-empathetic flag");
    cmd->add_option("--tie-policy", o.tie_policy, "neutral|positive|negative");
    cmd->add_option("--coherence-unit", o.coherence_unit, "comment|post_mean");
    cmd->add_option("--jobs", o.jobs, "worker threads for per-profile stages");
    cmd->add_option("--format", o.format, "json|csv (csv adds flattened files)")
        ->check(CLI::IsMember({"json", "csv"}));
}

RunConfig build_config(const CliOverrides& o) {
    RunConfig cfg;
    std::optional<std::string> config_path = o.config_path;
    if (!config_path) {
        if (const char* env = std::getenv("MOODCO_CONFIG"); env && *env)
            config_path = std::string(env);
    }
    if (config_path) cfg.apply(parse_kv_file(*config_path));
    if (o.lexicon) cfg.lexicon_path = *o.lexicon;
    if (o.bindings) cfg.bindings_path = *o.bindings;
    if (o.corpus) cfg.corpus_path = *o.corpus;
    if (o.output_dir) cfg.output_dir = *o.output_dir;
    if (o.seed) cfg.seed = *o.seed;
    if (o.alpha) cfg.alpha = *o.alpha;
    if (o.empathy_threshold) cfg.empathy_threshold = *o.empathy_threshold;
    if (o.tie_policy) cfg.tie_policy = parse_tie_policy(*o.tie_policy);
    if (o.coherence_unit) cfg.coherence_unit = parse_coherence_unit(*o.coherence_unit);
    if (o.jobs) cfg.jobs = *o.jobs;
    cfg.validate();
    return cfg;
}

void require_readable(const std::filesystem::path& path, const char* role) {
    if (path.empty())
        throw ConfigError(std::string(role) + " path not set (flag or config file)");
    if (!std::filesystem::exists(path))
        throw ConfigError(std::string(role) + " file not found: " + path.string());
}

struct LoadedInputs {
    Lexicon lexicon;
    CategoryBindings bindings;
};

LoadedInputs load_lexicon_and_bindings(const RunConfig& cfg) {
    require_readable(cfg.lexicon_path, "lexicon");
    if (!cfg.bindings_path.empty()) require_readable(cfg.bindings_path, "bindings");
    LoadedInputs in{Lexicon::load(cfg.lexicon_path), {}};
    in.bindings = cfg.bindings_path.empty()
                      ? CategoryBindings::resolve_defaults(in.lexicon)
                      : CategoryBindings::load(cfg.bindings_path, in.lexicon);
    return in;
}

std::filesystem::path out_path(const RunConfig& cfg, const char* name) {
    return cfg.output_dir / name;
}

int cmd_score(const RunConfig& cfg, const std::string& format) {
    auto in = load_lexicon_and_bindings(cfg);
    require_readable(cfg.corpus_path, "corpus");
    Corpus corpus = load_corpus(cfg.corpus_path);
    ScoredCorpus scored = score_corpus(corpus, in.lexicon, in.bindings, cfg.tie_policy, cfg.jobs);

    atomic_write(out_path(cfg, "scores.csv"), scores_csv(scored));
    Json summary{{"corpus", cfg.corpus_path.string()},
                 {"tie_policy", to_string(cfg.tie_policy)},
                 {"summary", to_json(scored.summary)}};
    atomic_write(out_path(cfg, "score_summary.json"), summary.dump(2) + "\n");
    (void)format;
    std::cout << "wrote " << out_path(cfg, "scores.csv").string() << " and "
              << out_path(cfg, "score_summary.json").string() << "\n";
    return 0;
}

int cmd_select_features(const RunConfig& cfg, const std::string& criterion_path,
                        const std::string& format) {
    auto in = load_lexicon_and_bindings(cfg);
    require_readable(criterion_path, "criterion");
    CriterionSample sample = load_criterion_csv(criterion_path);
    std::vector<FeatureVector> features;
    features.reserve(sample.posts.size());
    for (const auto& post : sample.posts)
        features.push_back(analyze_text(post.text, in.lexicon));
    SelectedPredictors selected = select_features(sample, features, in.lexicon, cfg.alpha);

    Json doc{{"criterion", criterion_path},
             {"alpha", cfg.alpha},
             {"n_posts", sample.posts.size()},
             {"selection", to_json(selected)}};
    atomic_write(out_path(cfg, "selected_features.json"), doc.dump(2) + "\n");
    (void)format;
    std::cout << "wrote " << out_path(cfg, "selected_features.json").string() << " ("
              << selected.predictors.size() << " predictors)\n";
    return 0;
}

int cmd_coherence(const RunConfig& cfg, const std::string& format) {
    auto in = load_lexicon_and_bindings(cfg);
    require_readable(cfg.corpus_path, "corpus");
    Corpus corpus = load_corpus(cfg.corpus_path);
    if (corpus.empty()) throw DataError("corpus has no profiles");
    ScoredCorpus scored = score_corpus(corpus, in.lexicon, in.bindings, cfg.tie_policy, cfg.jobs);

    std::vector<CoherenceResult> results(scored.profiles.size());
    for (std::size_t i = 0; i < scored.profiles.size(); ++i)
        results[i] = coherence(scored.profiles[i], cfg.coherence_unit, cfg.empathy_threshold,
                               cfg.tie_policy);
    CoherenceResult pooled = pooled_coherence(scored.profiles, cfg.coherence_unit,
                                              cfg.empathy_threshold, cfg.tie_policy);

    Json per_profile = Json::array();
    for (const auto& r : results) per_profile.push_back(to_json(r));

    Json doc{{"corpus", cfg.corpus_path.string()},
             {"coherence_unit", to_string(cfg.coherence_unit)},
             {"empathy_threshold", cfg.empathy_threshold},
             {"profiles", std::move(per_profile)},
             {"pooled", to_json(pooled)}};

    // The split comparison needs enough determinate profiles; report the
    // shortfall instead of failing the whole run.
    try {
        auto variables = collect_profile_variables(corpus, in.lexicon, in.bindings);
        EmpathyReport report = empathy_split_and_compare(results, variables, in.lexicon);
        doc["empathy_split"] = to_json(report);
    } catch (const DegenerateDataError& e) {
        doc["empathy_split"] = Json{{"skipped", e.what()}};
    }

    atomic_write(out_path(cfg, "coherence.json"), doc.dump(2) + "\n");
    if (format == "csv")
        atomic_write(out_path(cfg, "coherence.csv"), coherence_csv(results));
    std::cout << "wrote " << out_path(cfg, "coherence.json").string() << " ("
              << results.size() << " profiles)\n";
    return 0;
}

int cmd_compare_posts(const RunConfig& cfg, const std::string& format) {
    auto in = load_lexicon_and_bindings(cfg);
    require_readable(cfg.corpus_path, "corpus");
    Corpus corpus = load_corpus(cfg.corpus_path);
    ScoredCorpus scored = score_corpus(corpus, in.lexicon, in.bindings, cfg.tie_policy, cfg.jobs);

    std::vector<PostObservation> positive, negative, neutral, emotional;
    for (const auto& profile : scored.profiles) {
        for (const auto& post : profile.posts) {
            PostObservation obs = observe(post);
            switch (post.label) {
                case MoodLabel::positive: positive.push_back(obs); break;
                case MoodLabel::negative: negative.push_back(obs); break;
                case MoodLabel::neutral: neutral.push_back(obs); break;
            }
            if (post.label != MoodLabel::neutral) emotional.push_back(obs);
        }
    }

    PostGroupReport pos_neg = compare_post_groups(negative, positive, "negative", "positive",
                                                  Rng::derive(cfg.seed, 0));
    PostGroupReport neu_emo = compare_post_groups(neutral, emotional, "neutral", "emotional",
                                                  Rng::derive(cfg.seed, 1));

    Json doc{{"corpus", cfg.corpus_path.string()},
             {"seed", cfg.seed},
             {"negative_vs_positive", to_json(pos_neg)},
             {"neutral_vs_emotional", to_json(neu_emo)}};
    atomic_write(out_path(cfg, "compare_posts.json"), doc.dump(2) + "\n");
    if (format == "csv") {
        atomic_write(out_path(cfg, "compare_posts.csv"),
                     comparisons_csv(pos_neg) + comparisons_csv(neu_emo));
    }
    std::cout << "wrote " << out_path(cfg, "compare_posts.json").string() << "\n";
    return 0;
}

int cmd_generate(const RunConfig& cfg, const ContagionConfig& gen_cfg,
                 const std::string& out_file) {
    Corpus corpus = generate_contagion_corpus(gen_cfg);
    std::ostringstream buf;
    write_corpus(corpus, buf);
    std::filesystem::path target =
        out_file.empty() ? out_path(cfg, "corpus.jsonl") : std::filesystem::path(out_file);
    atomic_write(target, buf.str());
    std::cout << "wrote " << target.string() << " (" << corpus.size() << " profiles, "
              << total_posts(corpus) << " posts, " << total_comments(corpus)
              << " comments)\n";
    return 0;
}

int cmd_features_dump(const RunConfig& cfg) {
    auto in = load_lexicon_and_bindings(cfg);
    require_readable(cfg.corpus_path, "corpus");
    Corpus corpus = load_corpus(cfg.corpus_path);
    atomic_write(out_path(cfg, "features.csv"), features_csv(corpus, in.lexicon));
    std::cout << "wrote " << out_path(cfg, "features.csv").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexicon-based mood scoring and emotional-coherence analysis"};
    app.require_subcommand(1);

    CliOverrides o;
    std::string criterion_path;
    std::string generate_out;
    ContagionConfig gen_cfg;

    CLI::App* score = app.add_subcommand("score", "score every eligible post and comment");
    add_common_options(score, o);

    CLI::App* select =
        app.add_subcommand("select-features", "ANOVA + Scheffe feature selection");
    add_common_options(select, o);
    select->add_option("--criterion", criterion_path, "criterion sample CSV (text,label)")
        ->required();

    CLI::App* coher = app.add_subcommand(
        "coherence", "per-profile post/comment mood coherence and empathy split");
    add_common_options(coher, o);

    CLI::App* compare = app.add_subcommand(
        "compare-posts", "bootstrap-balanced group comparisons over post variables");
    add_common_options(compare, o);

    CLI::App* gen = app.add_subcommand("generate", "emit a synthetic contagion corpus");
    add_common_options(gen, o);
    gen->add_option("--n-profiles", gen_cfg.n_profiles, "profiles to generate");
    gen->add_option("--posts-per-profile", gen_cfg.posts_per_profile, "posts per profile");
    gen->add_option("--comments-mean", gen_cfg.comments_per_post_mean,
                    "Poisson mean of comments per post");
    gen->add_option("--p-positive", gen_cfg.p_positive_post,
                    "positive share among emotional posts");
    gen->add_option("--coupling", gen_cfg.coupling,
                    "probability a comment copies its post's mood");
    gen->add_option("--p-neutral", gen_cfg.p_neutral_post, "neutral share of posts");
    gen->add_option("--words-per-post", gen_cfg.words_per_post, "post length in words");
    gen->add_option("--words-per-comment", gen_cfg.words_per_comment,
                    "comment length in words");
    gen->add_option("--sexual-word-rate", gen_cfg.sexual_word_rate,
                    "chance a filler slot carries a sexual-category word");
    gen->add_option("--likes-mean-neutral", gen_cfg.likes_mean_neutral,
                    "Poisson likes mean for neutral posts");
    gen->add_option("--likes-mean-emotional", gen_cfg.likes_mean_emotional,
                    "Poisson likes mean for emotional posts");
    gen->add_option("--comments-boost-emotional", gen_cfg.comments_boost_emotional,
                    "extra comment-count mean for emotional posts");
    gen->add_option("--id-prefix", gen_cfg.id_prefix, "profile id prefix");
    gen->add_option("--out", generate_out, "corpus output path (default <output-dir>/corpus.jsonl)");

    CLI::App* dump = app.add_subcommand("features-dump", "per-post feature vectors as CSV");
    add_common_options(dump, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        RunConfig cfg = build_config(o);
        if (score->parsed()) return cmd_score(cfg, o.format);
        if (select->parsed()) return cmd_select_features(cfg, criterion_path, o.format);
        if (coher->parsed()) return cmd_coherence(cfg, o.format);
        if (compare->parsed()) return cmd_compare_posts(cfg, o.format);
        if (gen->parsed()) {
            gen_cfg.seed = cfg.seed;
            return cmd_generate(cfg, gen_cfg, generate_out);
        }
        if (dump->parsed()) return cmd_features_dump(cfg);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
