#include "moodco/config.hpp"

#include <charconv>
#include <fstream>

#include "moodco/errors.hpp"

namespace moodco {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double out = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
    }
}

}  // namespace

std::map<std::string, std::string> parse_kv(std::istream& in, const std::string& origin) {
    std::map<std::string, std::string> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
        if (out.count(key))
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": duplicate key '" +
                              key + "'");
        out[key] = value;
    }
    return out;
}

std::map<std::string, std::string> parse_kv_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    return parse_kv(in, path.string());
}

const char* to_string(CoherenceUnit unit) {
    return unit == CoherenceUnit::comment ? "comment" : "post_mean";
}

const char* to_string(TiePolicy policy) {
    switch (policy) {
        case TiePolicy::neutral: return "neutral";
        case TiePolicy::positive: return "positive";
        case TiePolicy::negative: return "negative";
    }
    return "neutral";
}

TiePolicy parse_tie_policy(const std::string& s) {
    if (s == "neutral") return TiePolicy::neutral;
    if (s == "positive") return TiePolicy::positive;
    if (s == "negative") return TiePolicy::negative;
    throw ConfigError("tie_policy must be neutral|positive|negative, got '" + s + "'");
}

CoherenceUnit parse_coherence_unit(const std::string& s) {
    if (s == "comment") return CoherenceUnit::comment;
    if (s == "post_mean") return CoherenceUnit::post_mean;
    throw ConfigError("coherence_unit must be comment|post_mean, got '" + s + "'");
}

void RunConfig::apply(const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "lexicon") lexicon_path = value;
        else if (key == "bindings") bindings_path = value;
        else if (key == "corpus") corpus_path = value;
        else if (key == "output_dir") output_dir = value;
        else if (key == "seed") seed = parse_u64(key, value);
        else if (key == "alpha") alpha = parse_double(key, value);
        else if (key == "empathy_threshold") empathy_threshold = parse_double(key, value);
        else if (key == "tie_policy") tie_policy = parse_tie_policy(value);
        else if (key == "coherence_unit") coherence_unit = parse_coherence_unit(value);
        else if (key == "jobs") jobs = static_cast<int>(parse_u64(key, value));
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

void RunConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ConfigError("alpha must lie in (0,1)");
    if (!(empathy_threshold > 0.0))
        throw ConfigError("empathy_threshold must be positive");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
}

}  // namespace moodco
