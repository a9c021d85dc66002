#ifndef MOODCO_REPORT_HPP
#define MOODCO_REPORT_HPP

#include <filesystem>
#include <span>
#include <string>

#include <json.hpp>

#include "moodco/pipeline.hpp"

namespace moodco {

// Reports are machine-first JSON mirroring the table structures of the
// analyses: every test carries its statistic, df, p, and the group
// means/SDs with the group order spelled out. ordered_json keeps field
// order (and therefore bytes) stable across runs.
using Json = nlohmann::ordered_json;

Json to_json(const TestResult& r);
Json to_json(const GroupStats& g);
Json to_json(const VariableComparison& c);
Json to_json(const PostGroupReport& r);
Json to_json(const ContingencyTable& t);
Json to_json(const CoherenceResult& r);
Json to_json(const ScoreSummary& s);
Json to_json(const SelectedPredictors& s);
Json to_json(const EmpathyReport& r);

// Scores CSV: one row per eligible post and one per comment, stable
// column order.
std::string scores_csv(const ScoredCorpus& scored);

// Feature-dump CSV: one row per text-kind post.
std::string features_csv(const Corpus& corpus, const Lexicon& lexicon);

// CSV flattening of the comparison-style reports (--format csv).
std::string comparisons_csv(const PostGroupReport& report);
std::string coherence_csv(std::span<const CoherenceResult> results);

// Writes via a temp file in the target directory plus rename, so readers
// never observe a truncated report.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace moodco

#endif  // MOODCO_REPORT_HPP
