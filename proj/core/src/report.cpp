#include "moodco/report.hpp"

#include <fstream>
#include <sstream>

#include "moodco/csv.hpp"
#include "moodco/errors.hpp"

namespace moodco {

Json to_json(const TestResult& r) {
    Json j{{"statistic", r.statistic}, {"df", r.df1}, {"p_value", r.p_value}};
    if (r.df2 != 0.0) j["df2"] = r.df2;
    return j;
}

Json to_json(const GroupStats& g) {
    return Json{{"group", g.name}, {"n", g.n}, {"mean", g.mean}, {"sd", g.sd}};
}

Json to_json(const VariableComparison& c) {
    Json j{{"variable", c.variable},
           {"group_order", Json::array({c.group_a.name, c.group_b.name})},
           {"groups", Json::array({to_json(c.group_a), to_json(c.group_b)})}};
    if (c.degenerate) {
        j["degenerate"] = true;
        j["note"] = c.note;
    } else {
        j["t"] = to_json(c.t);
    }
    return j;
}

Json to_json(const PostGroupReport& r) {
    Json vars = Json::array();
    for (const auto& v : r.variables) vars.push_back(to_json(v));
    return Json{{"group_a", r.group_a_name},
                {"group_b", r.group_b_name},
                {"n_a_original", r.n_a_original},
                {"n_b_original", r.n_b_original},
                {"n_balanced", r.n_balanced},
                {"seed", r.seed},
                {"variables", std::move(vars)}};
}

Json to_json(const ContingencyTable& t) {
    return Json{{"rows", t.row_labels}, {"cols", t.col_labels}, {"counts", t.counts}};
}

Json to_json(const CoherenceResult& r) {
    Json j{{"profile_id", r.profile_id},
           {"determinate", r.determinate},
           {"n_observations", r.n_observations},
           {"table", to_json(r.table)}};
    if (r.determinate) {
        j["chi2"] = r.chi2;
        j["df"] = r.df;
        j["p_value"] = r.p;
        j["empathy_score"] = r.empathy_score;
        j["highly_empathetic"] = r.highly_empathetic;
    }
    return j;
}

Json to_json(const ScoreSummary& s) {
    return Json{{"posts",
                 Json{{"total", s.posts_total},
                      {"eligible", s.posts_eligible},
                      {"non_neutral", s.posts_non_neutral()},
                      {"positive", s.posts_positive},
                      {"negative", s.posts_negative},
                      {"neutral", s.posts_neutral}}},
                {"comments",
                 Json{{"total", s.comments_total},
                      {"scored", s.comments_scored},
                      {"non_neutral", s.comments_non_neutral()},
                      {"positive", s.comments_positive},
                      {"negative", s.comments_negative},
                      {"neutral", s.comments_neutral}}}};
}

namespace {

Json to_json(const ConditionTriple& t) {
    return Json{{"negative", t.negative}, {"positive", t.positive}, {"neutral", t.neutral}};
}

}  // namespace

Json to_json(const SelectedPredictors& s) {
    Json preds = Json::array();
    for (const auto& p : s.predictors) {
        preds.push_back(Json{{"feature", p.feature},
                             {"F", p.anova.statistic},
                             {"df", Json::array({p.anova.df1, p.anova.df2})},
                             {"p_value", p.anova.p_value},
                             {"condition", to_string(p.target_mood)},
                             {"sign", std::string(1, p.sign)},
                             {"z_by_condition", to_json(p.z_by_condition)},
                             {"group_means", to_json(p.group_means)}});
    }
    return Json{{"predictors", std::move(preds)}, {"skipped", s.skipped}};
}

Json to_json(const EmpathyReport& r) {
    Json metrics = Json::array();
    for (const auto& c : r.metric_comparisons) metrics.push_back(to_json(c));
    Json liwc = Json::array();
    for (const auto& c : r.liwc_comparisons) liwc.push_back(to_json(c));
    Json corrs = Json::array();
    for (const auto& c : r.correlations) {
        Json j{{"variable", c.variable}};
        if (c.degenerate) {
            j["degenerate"] = true;
            j["note"] = c.note;
        } else {
            j["r"] = c.r.statistic;
            j["df"] = c.r.df1;
            j["p_value"] = c.r.p_value;
        }
        corrs.push_back(std::move(j));
    }
    Json j{{"split",
            Json{{"median", r.split.median},
                 {"low", r.split.low},
                 {"high", r.split.high},
                 {"degenerate", r.split.degenerate}}},
           {"indeterminate", r.indeterminate},
           {"facebook_variables", std::move(metrics)},
           {"liwc_variables", std::move(liwc)}};
    if (r.sp_comparison) j["self_presentation"] = to_json(*r.sp_comparison);
    if (r.gender_comparison) j["gender"] = to_json(*r.gender_comparison);
    j["correlations"] = std::move(corrs);
    j["warnings"] = r.warnings;
    return j;
}

std::string scores_csv(const ScoredCorpus& scored) {
    std::ostringstream out;
    csv::write_row(out, {"record", "profile_id", "post_id", "comment_id", "positive_score",
                         "negative_score", "label", "likes", "n_comments"});
    for (const ScoredProfile& profile : scored.profiles) {
        for (const ScoredPost& post : profile.posts) {
            csv::write_row(out, {"post", profile.profile_id, post.post_id, "",
                                 csv::format_double(post.scores.positive),
                                 csv::format_double(post.scores.negative), to_string(post.label),
                                 std::to_string(post.likes),
                                 std::to_string(post.comments.size())});
            for (const ScoredComment& comment : post.comments) {
                csv::write_row(out, {"comment", profile.profile_id, post.post_id,
                                     comment.comment_id,
                                     csv::format_double(comment.scores.positive),
                                     csv::format_double(comment.scores.negative),
                                     to_string(comment.label), "", ""});
            }
        }
    }
    return out.str();
}

std::string features_csv(const Corpus& corpus, const Lexicon& lexicon) {
    std::ostringstream out;
    std::vector<std::string> header = {"profile_id", "post_id", "word_count",
                                       "numerals_pct", "question_marks_pct", "commas_pct",
                                       "six_letter_pct"};
    for (const std::string& c : lexicon.categories()) header.push_back(c);
    csv::write_row(out, header);
    for (const Profile& profile : corpus) {
        for (const Post* post : eligible_posts(profile, /*require_comments=*/false)) {
            FeatureVector fv = analyze_text(post->text, lexicon);
            std::vector<std::string> row = {profile.profile_id,
                                            post->post_id,
                                            std::to_string(fv.word_count),
                                            csv::format_double(fv.numerals_pct),
                                            csv::format_double(fv.question_marks_pct),
                                            csv::format_double(fv.commas_pct),
                                            csv::format_double(fv.six_letter_pct)};
            for (double pct : fv.category_pct) row.push_back(csv::format_double(pct));
            csv::write_row(out, row);
        }
    }
    return out.str();
}

namespace {

void comparison_rows(std::ostringstream& out, const std::string& context,
                     const VariableComparison& c) {
    csv::write_row(out, {context, c.variable, c.group_a.name, std::to_string(c.group_a.n),
                         csv::format_double(c.group_a.mean), csv::format_double(c.group_a.sd),
                         c.group_b.name, std::to_string(c.group_b.n),
                         csv::format_double(c.group_b.mean), csv::format_double(c.group_b.sd),
                         c.degenerate ? "" : csv::format_double(c.t.statistic),
                         c.degenerate ? "" : csv::format_double(c.t.df1),
                         c.degenerate ? "" : csv::format_double(c.t.p_value),
                         c.degenerate ? c.note : ""});
}

}  // namespace

std::string comparisons_csv(const PostGroupReport& report) {
    std::ostringstream out;
    csv::write_row(out, {"comparison", "variable", "group_a", "n_a", "mean_a", "sd_a",
                         "group_b", "n_b", "mean_b", "sd_b", "t", "df", "p_value", "note"});
    const std::string context = report.group_a_name + "_vs_" + report.group_b_name;
    for (const auto& v : report.variables) comparison_rows(out, context, v);
    return out.str();
}

std::string coherence_csv(std::span<const CoherenceResult> results) {
    std::ostringstream out;
    csv::write_row(out, {"profile_id", "determinate", "n_observations", "chi2", "df",
                         "p_value", "empathy_score", "highly_empathetic"});
    for (const auto& r : results) {
        if (r.determinate) {
            csv::write_row(out, {r.profile_id, "true", std::to_string(r.n_observations),
                                 csv::format_double(r.chi2), csv::format_double(r.df),
                                 csv::format_double(r.p), csv::format_double(r.empathy_score),
                                 r.highly_empathetic ? "true" : "false"});
        } else {
            csv::write_row(out, {r.profile_id, "false", std::to_string(r.n_observations), "",
                                 "", "", "", ""});
        }
    }
    return out.str();
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    std::filesystem::create_directories(dir);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw DataError("I/O failure while writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace moodco
