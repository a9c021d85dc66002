#ifndef MOODCO_CONFIG_HPP
#define MOODCO_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>

#include "moodco/mood.hpp"

namespace moodco {

// `key = value` text, '#' comments. Used for the run config and the
// category-bindings file.
std::map<std::string, std::string> parse_kv(std::istream& in,
                                            const std::string& origin = "<stream>");
std::map<std::string, std::string> parse_kv_file(const std::filesystem::path& path);

enum class CoherenceUnit { comment, post_mean };
const char* to_string(CoherenceUnit unit);
const char* to_string(TiePolicy policy);

// Everything a batch run needs. Flags override file values; the config
// file path itself may come from the MOODCO_CONFIG environment variable.
struct RunConfig {
    std::filesystem::path lexicon_path;
    std::filesystem::path bindings_path;  // empty -> default bindings
    std::filesystem::path corpus_path;
    std::filesystem::path output_dir = ".";
    std::uint64_t seed = 1;
    double alpha = 0.01;
    double empathy_threshold = 4.0;
    TiePolicy tie_policy = TiePolicy::neutral;
    CoherenceUnit coherence_unit = CoherenceUnit::comment;
    int jobs = 1;

    // Parses/merges recognized keys; unknown keys are configuration errors.
    void apply(const std::map<std::string, std::string>& kv);
    void validate() const;  // ranges only; path existence is checked by the CLI
};

TiePolicy parse_tie_policy(const std::string& s);
CoherenceUnit parse_coherence_unit(const std::string& s);

}  // namespace moodco

#endif  // MOODCO_CONFIG_HPP
