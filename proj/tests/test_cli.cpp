#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "moodco/corpus.hpp"
#include "moodco/generator.hpp"
#include "moodco/pipeline.hpp"
#include "moodco/report.hpp"
#include "support/fixtures.hpp"

using namespace moodco;

namespace {

#ifndef MOODCO_CLI_PATH
#error "MOODCO_CLI_PATH must be defined by the build"
#endif

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const fixtures::TempDir& tmp, const std::string& args,
                  const std::string& env = "") {
    const auto out_file = tmp.file("stdout.txt");
    const auto err_file = tmp.file("stderr.txt");
    std::string command = env + " \"" + MOODCO_CLI_PATH "\" " + args + " > \"" +
                          out_file.string() + "\" 2> \"" + err_file.string() + "\"";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = fixtures::slurp(out_file);
    result.err = fixtures::slurp(err_file);
    return result;
}

std::string common_flags(const fixtures::TempDir& tmp) {
    return "--lexicon \"" + fixtures::micro_lexicon_path().string() + "\" --bindings \"" +
           fixtures::bindings_path().string() + "\" --output-dir \"" + tmp.path().string() +
           "\"";
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("score: tiny fixture writes one CSV row per post and comment") {
    fixtures::TempDir tmp;
    Corpus corpus;
    corpus.push_back(fixtures::profile(
        "p1", {fixtures::post("a", "ti odio", {fixtures::comment("c1", "davvero brutto")}),
               fixtures::post("b", "tavolo", {fixtures::comment("c2", "gioia"),
                                              fixtures::comment("c3", "boh")})}));
    save_corpus(corpus, tmp.file("corpus.jsonl"));

    RunResult r = run_cli(tmp, "score " + common_flags(tmp) + " --corpus \"" +
                                   tmp.file("corpus.jsonl").string() + "\"");
    CHECK(r.exit_code == 0);
    const std::string csv = fixtures::slurp(tmp.file("scores.csv"));
    // header + 2 posts + 3 comments
    CHECK(count_lines(csv) == 6);
    CHECK(csv.find("post,p1,a,,0,100,negative") != std::string::npos);
    CHECK(fixtures::slurp(tmp.file("score_summary.json")).find("\"eligible\": 2") !=
          std::string::npos);
}

TEST_CASE("score: missing lexicon file exits 1 and names the path") {
    fixtures::TempDir tmp;
    RunResult r = run_cli(tmp, "score --lexicon /no/such/lexicon.tsv --corpus whatever");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("/no/such/lexicon.tsv") != std::string::npos);
}

TEST_CASE("score: malformed corpus exits 2 with the line number") {
    fixtures::TempDir tmp;
    tmp.write("corpus.jsonl", "{\"type\":\"junk\"}\n");
    RunResult r = run_cli(tmp, "score " + common_flags(tmp) + " --corpus \"" +
                                   tmp.file("corpus.jsonl").string() + "\"");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("corpus.jsonl:1") != std::string::npos);
}

TEST_CASE("generate is byte-deterministic per seed and honors counts") {
    fixtures::TempDir tmp;
    const std::string flags = common_flags(tmp) +
                              " --n-profiles 4 --posts-per-profile 6 --seed 99 --out \"" +
                              tmp.file("a.jsonl").string() + "\"";
    CHECK(run_cli(tmp, "generate " + flags).exit_code == 0);
    std::string first = fixtures::slurp(tmp.file("a.jsonl"));
    const std::string flags_b = common_flags(tmp) +
                                " --n-profiles 4 --posts-per-profile 6 --seed 99 --out \"" +
                                tmp.file("b.jsonl").string() + "\"";
    CHECK(run_cli(tmp, "generate " + flags_b).exit_code == 0);
    CHECK(first == fixtures::slurp(tmp.file("b.jsonl")));

    Corpus corpus = load_corpus(tmp.file("a.jsonl"));
    CHECK(corpus.size() == 4);
    CHECK(total_posts(corpus) == 24);

    RunResult bad = run_cli(tmp, "generate " + common_flags(tmp) + " --coupling 1.5");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("coherence report carries one entry per profile") {
    fixtures::TempDir tmp;
    CHECK(run_cli(tmp, "generate " + common_flags(tmp) +
                           " --n-profiles 10 --posts-per-profile 25 --coupling 0.9 "
                           "--comments-mean 2 --seed 5")
              .exit_code == 0);
    RunResult r = run_cli(tmp, "coherence " + common_flags(tmp) + " --corpus \"" +
                                   tmp.file("corpus.jsonl").string() +
                                   "\" --empathy-threshold 4 --format csv");
    CHECK(r.exit_code == 0);
    const std::string json = fixtures::slurp(tmp.file("coherence.json"));
    std::size_t entries = 0, at = 0;
    while ((at = json.find("\"profile_id\"", at)) != std::string::npos) {
        ++entries;
        at += 10;
    }
    CHECK(entries == 11);  // 10 profiles + the pooled table
    CHECK(json.find("\"empathy_split\"") != std::string::npos);
    // CSV flattening: header + 10 rows.
    CHECK(count_lines(fixtures::slurp(tmp.file("coherence.csv"))) == 11);
}

TEST_CASE("coherence on an empty corpus exits 2") {
    fixtures::TempDir tmp;
    tmp.write("corpus.jsonl", "");
    RunResult r = run_cli(tmp, "coherence " + common_flags(tmp) + " --corpus \"" +
                                   tmp.file("corpus.jsonl").string() + "\"");
    CHECK(r.exit_code == 2);
}

TEST_CASE("select-features: planted criterion file, table-shaped JSON") {
    fixtures::TempDir tmp;
    CriterionSample sample = planted_criterion_sample({.per_label = 48, .seed = 12});
    save_criterion_csv(sample, tmp.file("criterion.csv"));
    RunResult r = run_cli(tmp, "select-features " + common_flags(tmp) + " --criterion \"" +
                                   tmp.file("criterion.csv").string() + "\"");
    CHECK(r.exit_code == 0);
    const std::string json = fixtures::slurp(tmp.file("selected_features.json"));
    CHECK(json.find("\"feature\": \"negative_emotion\"") != std::string::npos);
    CHECK(json.find("\"condition\": \"negative\"") != std::string::npos);
    CHECK(json.find("\"sign\": \"-\"") != std::string::npos);  // numerals

    // Unbalanced criterion: drop one row -> data error.
    sample.posts.pop_back();
    save_criterion_csv(sample, tmp.file("unbalanced.csv"));
    RunResult bad = run_cli(tmp, "select-features " + common_flags(tmp) + " --criterion \"" +
                                     tmp.file("unbalanced.csv").string() + "\"");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("compare-posts writes both balanced comparisons") {
    fixtures::TempDir tmp;
    CHECK(run_cli(tmp, "generate " + common_flags(tmp) +
                           " --n-profiles 12 --posts-per-profile 40 --coupling 0.8 "
                           "--p-neutral 0.3 --comments-mean 2 --seed 31")
              .exit_code == 0);
    RunResult r = run_cli(tmp, "compare-posts " + common_flags(tmp) + " --corpus \"" +
                                   tmp.file("corpus.jsonl").string() + "\" --seed 7");
    CHECK(r.exit_code == 0);
    const std::string json = fixtures::slurp(tmp.file("compare_posts.json"));
    CHECK(json.find("\"negative_vs_positive\"") != std::string::npos);
    CHECK(json.find("\"neutral_vs_emotional\"") != std::string::npos);
    CHECK(json.find("\"comment_neg_score\"") != std::string::npos);
}

TEST_CASE("features-dump: one row per text post") {
    fixtures::TempDir tmp;
    Corpus corpus;
    corpus.push_back(fixtures::profile(
        "p1", {fixtures::post("a", "ti odio"), fixtures::post("b", "ciao, tutto bene?"),
               fixtures::post("ph", "", {}, PostKind::photo)}));
    save_corpus(corpus, tmp.file("corpus.jsonl"));
    RunResult r = run_cli(tmp, "features-dump " + common_flags(tmp) + " --corpus \"" +
                                   tmp.file("corpus.jsonl").string() + "\"");
    CHECK(r.exit_code == 0);
    const std::string csv = fixtures::slurp(tmp.file("features.csv"));
    CHECK(count_lines(csv) == 3);  // header + 2 text posts
    CHECK(csv.find("negative_emotion") != std::string::npos);
}

TEST_CASE("config file provides defaults, flags win, MOODCO_CONFIG is the fallback") {
    fixtures::TempDir tmp;
    Corpus corpus;
    corpus.push_back(fixtures::profile(
        "p1", {fixtures::post("a", "ti odio", {fixtures::comment("c1", "ok")})}));
    save_corpus(corpus, tmp.file("corpus.jsonl"));
    tmp.write("run.conf", "lexicon = " + fixtures::micro_lexicon_path().string() +
                              "\ncorpus = " + tmp.file("corpus.jsonl").string() +
                              "\noutput_dir = " + tmp.path().string() + "\nseed = 123\n");

    RunResult via_flag = run_cli(tmp, "score --config \"" + tmp.file("run.conf").string() + "\"");
    CHECK(via_flag.exit_code == 0);

    RunResult via_env =
        run_cli(tmp, "score", "MOODCO_CONFIG=\"" + tmp.file("run.conf").string() + "\"");
    CHECK(via_env.exit_code == 0);

    // A flag overrides the file: point the corpus at a missing path.
    RunResult overridden = run_cli(tmp, "score --config \"" + tmp.file("run.conf").string() +
                                            "\" --corpus /no/such/corpus.jsonl");
    CHECK(overridden.exit_code == 1);

    RunResult unknown_key = run_cli(
        tmp, "score --config \"" +
                 tmp.write("bad.conf", "lexicon = x\nwhat = no\n").string() + "\"");
    CHECK(unknown_key.exit_code == 1);
}

TEST_CASE("pipeline composition: CLI equals the library on the same seed") {
    fixtures::TempDir tmp;
    ContagionConfig cfg{.n_profiles = 8,
                        .posts_per_profile = 30,
                        .comments_per_post_mean = 2.0,
                        .p_positive_post = 0.55,
                        .coupling = 0.7,
                        .seed = 424242};
    CHECK(run_cli(tmp, "generate " + common_flags(tmp) +
                           " --n-profiles 8 --posts-per-profile 30 --comments-mean 2 "
                           "--p-positive 0.55 --coupling 0.7 --seed 424242")
              .exit_code == 0);

    Corpus via_lib = generate_contagion_corpus(cfg);
    Corpus via_cli = load_corpus(tmp.file("corpus.jsonl"));
    CHECK(via_cli == via_lib);

    CHECK(run_cli(tmp, "score " + common_flags(tmp) + " --corpus \"" +
                           tmp.file("corpus.jsonl").string() + "\"")
              .exit_code == 0);
    ScoredCorpus scored = score_corpus(via_lib, fixtures::micro_lexicon(),
                                       fixtures::default_bindings());
    CHECK(fixtures::slurp(tmp.file("scores.csv")) == scores_csv(scored));
}
