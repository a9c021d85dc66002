#ifndef MOODCO_STATS_HPP
#define MOODCO_STATS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "moodco/errors.hpp"
#include "moodco/rng.hpp"

namespace moodco {

struct TestResult {
    double statistic = 0.0;
    double df1 = 0.0;  // the only df for chi-square / t / r
    double df2 = 0.0;  // denominator df for F-type statistics
    double p_value = 1.0;
};

// Labeled counts matrix (post mood x comment mood in the pipeline).
struct ContingencyTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::int64_t>> counts;  // rows x cols

    std::int64_t total() const;
    // Drops all-zero rows and columns (labels follow the counts).
    ContingencyTable pruned() const;
};

struct MedianSplit {
    std::vector<std::string> low;   // score <= median, sorted by id
    std::vector<std::string> high;  // score >  median, sorted by id
    double median = 0.0;
    bool degenerate = false;  // one side empty (e.g. all scores equal)
};

// --- descriptive helpers -------------------------------------------------

double mean(std::span<const double> values);
double population_sd(std::span<const double> values);  // n denominator
double sample_sd(std::span<const double> values);      // n-1 denominator

// --- tests ----------------------------------------------------------------

// Classic between/within F with df (k-1, N-k). Each group needs >= 2
// values; zero within-group variance is reported as an error rather than
// an infinite F.
TestResult oneway_anova(std::span<const std::vector<double>> groups);

// Scheffe post-hoc. Entry (i,j) carries the squared standardized mean
// difference S2 = (mi-mj)^2 / (MSW (1/ni + 1/nj)); the pair is significant
// at alpha iff S2 > (k-1) F_crit(alpha; k-1, N-k), equivalently iff the
// stored p-value (upper F tail of S2/(k-1)) is below alpha. For k = 2 the
// statistic equals the pooled t squared.
std::vector<std::vector<TestResult>> scheffe_pairwise(
    std::span<const std::vector<double>> groups);

// (x - mean) / sd with the population (n) denominator.
std::vector<double> zscores(std::span<const double> values);

// Pearson chi-square on the pruned table; no continuity correction.
TestResult chi_square(const ContingencyTable& table);

// Independent-samples t. Pooled-variance Student t by default with
// df = na+nb-2; Welch with the Satterthwaite df when pooled == false.
// Sign convention: t = (mean(a) - mean(b)) / SE.
TestResult t_test_independent(std::span<const double> a, std::span<const double> b,
                              bool pooled = true);

// Sample correlation; statistic is r itself, p via the t transform with
// df = n-2.
TestResult pearson_r(std::span<const double> x, std::span<const double> y);

// target_n indices drawn uniformly with replacement from [0, n_source).
std::vector<std::size_t> bootstrap_indices(std::size_t n_source, std::size_t target_n,
                                           std::uint64_t seed);

template <typename T>
std::vector<T> bootstrap_balance(const std::vector<T>& source, std::size_t target_n,
                                 std::uint64_t seed) {
    std::vector<std::size_t> idx = bootstrap_indices(source.size(), target_n, seed);
    std::vector<T> out;
    out.reserve(target_n);
    for (std::size_t i : idx) out.push_back(source[i]);
    return out;
}

// Even n: median is the midpoint of the middle two. Ids at or below the
// median go low, strictly above go high.
MedianSplit median_split(const std::map<std::string, double>& scores);

}  // namespace moodco

#endif  // MOODCO_STATS_HPP
