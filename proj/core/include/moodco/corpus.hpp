#ifndef MOODCO_CORPUS_HPP
#define MOODCO_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace moodco {

enum class Gender { female, male, unspecified };

enum class PostKind { text, photo, video, music, famous_quote, other };

const char* to_string(Gender g);
const char* to_string(PostKind k);

// Observation-grid counts kept per profile. All counts are >= 0;
// wall_posts_with_comments <= wall_posts and the average length must be
// consistent with the totals.
struct FacebookMetrics {
    std::int64_t friends = 0;
    std::int64_t followed_people = 0;
    std::int64_t visited_places = 0;
    std::int64_t famous_quotes = 0;
    std::int64_t pages_with_likes = 0;
    std::int64_t complete_activity = 0;
    std::int64_t wall_posts = 0;
    std::int64_t profile_picture_edits = 0;
    std::int64_t personal_photos = 0;
    std::int64_t photos = 0;
    std::int64_t videos = 0;
    std::int64_t likes = 0;
    std::int64_t activities_with_like = 0;
    std::int64_t wall_posts_with_comments = 0;
    std::int64_t comments = 0;
    std::int64_t wall_posts_length = 0;          // characters
    std::int64_t wall_posts_average_length = 0;  // round(length / wall_posts)

    bool operator==(const FacebookMetrics&) const = default;
};

struct Comment {
    std::string comment_id;
    std::string text;

    bool operator==(const Comment&) const = default;
};

struct Post {
    std::string post_id;
    PostKind kind = PostKind::text;
    std::string text;
    std::int64_t likes = 0;
    std::optional<std::int64_t> timestamp;  // epoch seconds, optional
    std::vector<Comment> comments;

    bool operator==(const Post&) const = default;
};

struct Profile {
    std::string profile_id;
    Gender gender = Gender::unspecified;
    std::optional<FacebookMetrics> metrics;
    std::vector<Post> posts;

    bool operator==(const Profile&) const = default;
};

using Corpus = std::vector<Profile>;

// Reads a JSON-Lines corpus. Any malformed record rejects the whole file
// with the offending line number. Record shapes:
//   {"type":"header","profiles":N,"posts":N,"comments":N}      (optional)
//   {"type":"profile","profile_id":"p01","gender":"female","metrics":{...}}
//   {"type":"post","profile_id":"p01","post_id":"p01-0007","kind":"text",
//    "text":"...","likes":12,"comments":[{"comment_id":"c1","text":"..."}]}
Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(std::istream& in, const std::string& origin = "<stream>");

// JSONL writers; emit one profile record followed by its post records,
// prefixed by a header record with corpus totals. Field-for-field
// round-trips through load_corpus.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

// Step-1 filter: posts with kind=text; with require_comments also drops
// posts that received no comments. Input order preserved.
std::vector<const Post*> eligible_posts(const Profile& profile, bool require_comments);

std::int64_t total_posts(const Corpus& corpus);
std::int64_t total_comments(const Corpus& corpus);

}  // namespace moodco

#endif  // MOODCO_CORPUS_HPP
