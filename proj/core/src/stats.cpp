#include "moodco/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "moodco/distributions.hpp"

namespace moodco {

std::int64_t ContingencyTable::total() const {
    std::int64_t n = 0;
    for (const auto& row : counts)
        for (std::int64_t c : row) n += c;
    return n;
}

ContingencyTable ContingencyTable::pruned() const {
    const std::size_t rows = counts.size();
    const std::size_t cols = rows ? counts[0].size() : 0;
    std::vector<bool> keep_row(rows, false), keep_col(cols, false);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (counts[i][j] != 0) keep_row[i] = keep_col[j] = true;

    ContingencyTable out;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!keep_row[i]) continue;
        out.row_labels.push_back(i < row_labels.size() ? row_labels[i] : std::string{});
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < cols; ++j)
            if (keep_col[j]) row.push_back(counts[i][j]);
        out.counts.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < cols; ++j)
        if (keep_col[j])
            out.col_labels.push_back(j < col_labels.size() ? col_labels[j] : std::string{});
    return out;
}

double mean(std::span<const double> values) {
    double s = 0.0;
    for (double v : values) s += v;
    return values.empty() ? 0.0 : s / static_cast<double>(values.size());
}

namespace {

double sum_sq_dev(std::span<const double> values, double m) {
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return ss;
}

}  // namespace

double population_sd(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return std::sqrt(sum_sq_dev(values, mean(values)) / static_cast<double>(values.size()));
}

double sample_sd(std::span<const double> values) {
    if (values.size() < 2) return 0.0;
    return std::sqrt(sum_sq_dev(values, mean(values)) /
                     static_cast<double>(values.size() - 1));
}

namespace {

struct AnovaParts {
    std::size_t k = 0, n_total = 0;
    std::vector<double> group_means;
    std::vector<std::size_t> group_sizes;
    double ss_between = 0.0, ss_within = 0.0;
};

AnovaParts anova_parts(std::span<const std::vector<double>> groups) {
    AnovaParts parts;
    parts.k = groups.size();
    if (parts.k < 2) throw DegenerateDataError("ANOVA needs at least 2 groups");
    double grand_sum = 0.0;
    for (const auto& g : groups) {
        if (g.size() < 2)
            throw DegenerateDataError("ANOVA group with fewer than 2 values");
        parts.group_sizes.push_back(g.size());
        parts.n_total += g.size();
        double m = mean(g);
        parts.group_means.push_back(m);
        grand_sum += m * static_cast<double>(g.size());
        parts.ss_within += sum_sq_dev(g, m);
    }
    const double grand_mean = grand_sum / static_cast<double>(parts.n_total);
    for (std::size_t i = 0; i < parts.k; ++i) {
        const double d = parts.group_means[i] - grand_mean;
        parts.ss_between += static_cast<double>(parts.group_sizes[i]) * d * d;
    }
    return parts;
}

}  // namespace

TestResult oneway_anova(std::span<const std::vector<double>> groups) {
    AnovaParts parts = anova_parts(groups);
    if (parts.ss_within <= 0.0) {
        if (parts.ss_between <= 0.0)
            throw DegenerateDataError("ANOVA on constant data");
        throw DegenerateDataError("ANOVA with zero within-group variance (F would be infinite)");
    }
    const double df1 = static_cast<double>(parts.k - 1);
    const double df2 = static_cast<double>(parts.n_total - parts.k);
    const double f = (parts.ss_between / df1) / (parts.ss_within / df2);
    return {f, df1, df2, dist::f_sf(f, df1, df2)};
}

std::vector<std::vector<TestResult>> scheffe_pairwise(
    std::span<const std::vector<double>> groups) {
    AnovaParts parts = anova_parts(groups);
    if (parts.ss_within <= 0.0)
        throw DegenerateDataError("Scheffe test with zero within-group variance");
    const double df1 = static_cast<double>(parts.k - 1);
    const double df2 = static_cast<double>(parts.n_total - parts.k);
    const double ms_within = parts.ss_within / df2;

    std::vector<std::vector<TestResult>> matrix(
        parts.k, std::vector<TestResult>(parts.k, TestResult{0.0, df1, df2, 1.0}));
    for (std::size_t i = 0; i < parts.k; ++i) {
        for (std::size_t j = i + 1; j < parts.k; ++j) {
            const double diff = parts.group_means[i] - parts.group_means[j];
            const double se2 =
                ms_within * (1.0 / static_cast<double>(parts.group_sizes[i]) +
                             1.0 / static_cast<double>(parts.group_sizes[j]));
            const double s2 = diff * diff / se2;
            const double p = dist::f_sf(s2 / df1, df1, df2);
            matrix[i][j] = matrix[j][i] = TestResult{s2, df1, df2, p};
        }
    }
    return matrix;
}

std::vector<double> zscores(std::span<const double> values) {
    if (values.size() < 2) throw DegenerateDataError("zscores need at least 2 values");
    const double m = mean(values);
    const double sd = population_sd(values);
    if (sd <= 0.0) throw DegenerateDataError("zscores on constant values");
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back((v - m) / sd);
    return out;
}

TestResult chi_square(const ContingencyTable& table) {
    ContingencyTable t = table.pruned();
    const std::size_t rows = t.counts.size();
    const std::size_t cols = rows ? t.counts[0].size() : 0;
    if (rows < 2 || cols < 2)
        throw DegenerateDataError("contingency table smaller than 2x2 after pruning");

    std::vector<double> row_sum(rows, 0.0), col_sum(cols, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (t.counts[i][j] < 0) throw DataError("negative count in contingency table");
            const double v = static_cast<double>(t.counts[i][j]);
            row_sum[i] += v;
            col_sum[j] += v;
            total += v;
        }
    }
    double chi2 = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double expected = row_sum[i] * col_sum[j] / total;
            const double d = static_cast<double>(t.counts[i][j]) - expected;
            chi2 += d * d / expected;
        }
    }
    const double df = static_cast<double>((rows - 1) * (cols - 1));
    return {chi2, df, 0.0, dist::chi_square_sf(chi2, df)};
}

TestResult t_test_independent(std::span<const double> a, std::span<const double> b,
                              bool pooled) {
    if (a.size() < 2 || b.size() < 2)
        throw DegenerateDataError("t-test group with fewer than 2 values");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = mean(a);
    const double mb = mean(b);
    const double va = sum_sq_dev(a, ma) / (na - 1.0);
    const double vb = sum_sq_dev(b, mb) / (nb - 1.0);

    double se2, df;
    if (pooled) {
        const double sp2 = ((na - 1.0) * va + (nb - 1.0) * vb) / (na + nb - 2.0);
        se2 = sp2 * (1.0 / na + 1.0 / nb);
        df = na + nb - 2.0;
    } else {
        se2 = va / na + vb / nb;
        const double num = se2 * se2;
        const double den = (va / na) * (va / na) / (na - 1.0) +
                           (vb / nb) * (vb / nb) / (nb - 1.0);
        df = den > 0.0 ? num / den : na + nb - 2.0;
    }
    if (se2 <= 0.0) {
        if (ma == mb) throw DegenerateDataError("t-test on two identical constant groups");
        const double t = ma > mb ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
        return {t, df, 0.0, 0.0};
    }
    const double t = (ma - mb) / std::sqrt(se2);
    return {t, df, 0.0, dist::student_t_two_sided_p(t, df)};
}

TestResult pearson_r(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DataError("pearson_r: length mismatch");
    if (x.size() < 3) throw DegenerateDataError("pearson_r needs at least 3 pairs");
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0)
        throw DegenerateDataError("pearson_r on a constant variable");
    double r = sxy / std::sqrt(sxx * syy);
    r = std::clamp(r, -1.0, 1.0);
    const double df = static_cast<double>(x.size() - 2);
    double p;
    if (1.0 - r * r <= 0.0) {
        p = 0.0;
    } else {
        const double t = r * std::sqrt(df / (1.0 - r * r));
        p = dist::student_t_two_sided_p(t, df);
    }
    return {r, df, 0.0, p};
}

std::vector<std::size_t> bootstrap_indices(std::size_t n_source, std::size_t target_n,
                                           std::uint64_t seed) {
    if (n_source == 0) throw DegenerateDataError("bootstrap from an empty source");
    Rng rng(seed);
    std::vector<std::size_t> out;
    out.reserve(target_n);
    for (std::size_t i = 0; i < target_n; ++i)
        out.push_back(static_cast<std::size_t>(rng.uniform_index(n_source)));
    return out;
}

MedianSplit median_split(const std::map<std::string, double>& scores) {
    if (scores.size() < 2) throw DegenerateDataError("median_split needs at least 2 ids");
    std::vector<double> values;
    values.reserve(scores.size());
    for (const auto& [id, v] : scores) values.push_back(v);
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    MedianSplit split;
    split.median = (n % 2 == 1) ? values[n / 2]
                                : (values[n / 2 - 1] + values[n / 2]) / 2.0;
    for (const auto& [id, v] : scores)
        (v <= split.median ? split.low : split.high).push_back(id);
    split.degenerate = split.low.empty() || split.high.empty();
    return split;
}

}  // namespace moodco
