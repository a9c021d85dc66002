#include <benchmark/benchmark.h>

#include <sstream>

#include "moodco/corpus.hpp"
#include "moodco/generator.hpp"
#include "moodco/lexicon.hpp"
#include "moodco/mood.hpp"
#include "moodco/pipeline.hpp"
#include "moodco/stats.hpp"
#include "moodco/text_features.hpp"

using namespace moodco;

namespace {

const Lexicon& micro_lexicon() {
    static Lexicon lex = Lexicon::load(MOODCO_DATA_DIR "/micro_lexicon.tsv");
    return lex;
}

const CategoryBindings& bindings() {
    static CategoryBindings b = CategoryBindings::resolve_defaults(micro_lexicon());
    return b;
}

const std::string kSample =
    "oggi sono molto triste e piango sempre, 3 ore perse? "
    "che bella giornata amore mio, la famiglia hanno tutto";

}  // namespace

static void BM_Tokenize(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tokenize(kSample));
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * kSample.size()));
}
BENCHMARK(BM_Tokenize);

static void BM_Categorize(benchmark::State& state) {
    const Lexicon& lex = micro_lexicon();
    std::vector<CategoryId> out;
    for (auto _ : state) {
        lex.categorize_into("felicità", out);
        benchmark::DoNotOptimize(out);
        lex.categorize_into("tavolo", out);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_Categorize);

static void BM_AnalyzeText(benchmark::State& state) {
    const Lexicon& lex = micro_lexicon();
    for (auto _ : state) benchmark::DoNotOptimize(analyze_text(kSample, lex));
}
BENCHMARK(BM_AnalyzeText);

static void BM_ChiSquare(benchmark::State& state) {
    ContingencyTable table{{}, {}, {{321, 144}, {130, 291}}};
    for (auto _ : state) benchmark::DoNotOptimize(chi_square(table));
}
BENCHMARK(BM_ChiSquare);

static void BM_BootstrapBalance(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bootstrap_indices(n + 1070, n, 7));
}
BENCHMARK(BM_BootstrapBalance)->Arg(3392);

static void BM_GenerateAndScore(benchmark::State& state) {
    ContagionConfig cfg{.n_profiles = 10,
                        .posts_per_profile = 50,
                        .comments_per_post_mean = 2.0,
                        .p_positive_post = 0.5,
                        .coupling = 0.6,
                        .seed = 1};
    for (auto _ : state) {
        Corpus corpus = generate_contagion_corpus(cfg);
        benchmark::DoNotOptimize(score_corpus(corpus, micro_lexicon(), bindings()));
    }
}
BENCHMARK(BM_GenerateAndScore)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
