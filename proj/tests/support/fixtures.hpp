// Shared helpers for the test binaries: shipped-data paths, temp dirs, and
// tiny in-memory corpora.
#ifndef MOODCO_TESTS_FIXTURES_HPP
#define MOODCO_TESTS_FIXTURES_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "moodco/corpus.hpp"
#include "moodco/lexicon.hpp"
#include "moodco/mood.hpp"

namespace fixtures {

#ifndef MOODCO_DATA_DIR
#error "MOODCO_DATA_DIR must be defined by the build"
#endif

inline std::filesystem::path data_dir() { return MOODCO_DATA_DIR; }
inline std::filesystem::path micro_lexicon_path() { return data_dir() / "micro_lexicon.tsv"; }
inline std::filesystem::path bindings_path() { return data_dir() / "bindings.conf"; }

inline const moodco::Lexicon& micro_lexicon() {
    static moodco::Lexicon lex = moodco::Lexicon::load(micro_lexicon_path());
    return lex;
}

inline const moodco::CategoryBindings& default_bindings() {
    static moodco::CategoryBindings b =
        moodco::CategoryBindings::resolve_defaults(micro_lexicon());
    return b;
}

// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        std::mt19937_64 rng(std::random_device{}());
        for (;;) {
            path_ = base / ("moodco_test_" + std::to_string(rng()));
            if (std::filesystem::create_directory(path_)) break;
        }
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        std::filesystem::path p = file(name);
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline moodco::Comment comment(std::string id, std::string text) {
    return {std::move(id), std::move(text)};
}

inline moodco::Post post(std::string id, std::string text,
                         std::vector<moodco::Comment> comments = {},
                         moodco::PostKind kind = moodco::PostKind::text,
                         std::int64_t likes = 0) {
    moodco::Post p;
    p.post_id = std::move(id);
    p.kind = kind;
    p.text = std::move(text);
    p.likes = likes;
    p.comments = std::move(comments);
    return p;
}

inline moodco::Profile profile(std::string id, std::vector<moodco::Post> posts,
                               moodco::Gender gender = moodco::Gender::unspecified) {
    moodco::Profile p;
    p.profile_id = std::move(id);
    p.gender = gender;
    p.posts = std::move(posts);
    return p;
}

}  // namespace fixtures

#endif  // MOODCO_TESTS_FIXTURES_HPP
