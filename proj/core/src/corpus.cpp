#include "moodco/corpus.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "moodco/errors.hpp"

namespace moodco {

using nlohmann::json;

const char* to_string(Gender g) {
    switch (g) {
        case Gender::female: return "female";
        case Gender::male: return "male";
        case Gender::unspecified: return "unspecified";
    }
    return "unspecified";
}

const char* to_string(PostKind k) {
    switch (k) {
        case PostKind::text: return "text";
        case PostKind::photo: return "photo";
        case PostKind::video: return "video";
        case PostKind::music: return "music";
        case PostKind::famous_quote: return "famous_quote";
        case PostKind::other: return "other";
    }
    return "other";
}

namespace {

struct Loc {
    const std::string& origin;
    std::size_t line;
    std::string str() const { return origin + ":" + std::to_string(line); }
};

[[noreturn]] void fail(const Loc& loc, const std::string& msg) {
    throw DataError(loc.str() + ": " + msg);
}

Gender parse_gender(const std::string& s, const Loc& loc) {
    if (s == "female") return Gender::female;
    if (s == "male") return Gender::male;
    if (s == "unspecified") return Gender::unspecified;
    fail(loc, "unknown gender '" + s + "'");
}

PostKind parse_kind(const std::string& s, const Loc& loc) {
    if (s == "text") return PostKind::text;
    if (s == "photo") return PostKind::photo;
    if (s == "video") return PostKind::video;
    if (s == "music") return PostKind::music;
    if (s == "famous_quote") return PostKind::famous_quote;
    if (s == "other") return PostKind::other;
    // Unknown kinds are a hard error: coercing them to `other` would
    // silently corrupt the eligibility filter.
    fail(loc, "unknown post kind '" + s + "'");
}

std::int64_t get_count(const json& j, const char* key, const Loc& loc) {
    if (!j.contains(key)) fail(loc, std::string("metrics missing key '") + key + "'");
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(loc, std::string("metrics key '") + key + "' not an integer");
    std::int64_t n = v.get<std::int64_t>();
    if (n < 0) fail(loc, std::string("metrics key '") + key + "' negative");
    return n;
}

FacebookMetrics parse_metrics(const json& j, const Loc& loc) {
    if (!j.is_object()) fail(loc, "metrics must be an object");
    FacebookMetrics m;
    m.friends = get_count(j, "friends", loc);
    m.followed_people = get_count(j, "followed_people", loc);
    m.visited_places = get_count(j, "visited_places", loc);
    m.famous_quotes = get_count(j, "famous_quotes", loc);
    m.pages_with_likes = get_count(j, "pages_with_likes", loc);
    m.complete_activity = get_count(j, "complete_activity", loc);
    m.wall_posts = get_count(j, "wall_posts", loc);
    m.profile_picture_edits = get_count(j, "profile_picture_edits", loc);
    m.personal_photos = get_count(j, "personal_photos", loc);
    m.photos = get_count(j, "photos", loc);
    m.videos = get_count(j, "videos", loc);
    m.likes = get_count(j, "likes", loc);
    m.activities_with_like = get_count(j, "activities_with_like", loc);
    m.wall_posts_with_comments = get_count(j, "wall_posts_with_comments", loc);
    m.comments = get_count(j, "comments", loc);
    m.wall_posts_length = get_count(j, "wall_posts_length", loc);
    m.wall_posts_average_length = get_count(j, "wall_posts_average_length", loc);
    if (m.wall_posts_with_comments > m.wall_posts)
        fail(loc, "wall_posts_with_comments exceeds wall_posts");
    if (m.wall_posts > 0) {
        auto expected = static_cast<std::int64_t>(std::llround(
            static_cast<double>(m.wall_posts_length) / static_cast<double>(m.wall_posts)));
        if (m.wall_posts_average_length != expected)
            fail(loc, "wall_posts_average_length inconsistent with wall_posts_length");
    }
    return m;
}

std::string get_string(const json& j, const char* key, const Loc& loc) {
    if (!j.contains(key) || !j.at(key).is_string())
        fail(loc, std::string("missing or non-string '") + key + "'");
    return j.at(key).get<std::string>();
}

json metrics_to_json(const FacebookMetrics& m) {
    return json{{"friends", m.friends},
                {"followed_people", m.followed_people},
                {"visited_places", m.visited_places},
                {"famous_quotes", m.famous_quotes},
                {"pages_with_likes", m.pages_with_likes},
                {"complete_activity", m.complete_activity},
                {"wall_posts", m.wall_posts},
                {"profile_picture_edits", m.profile_picture_edits},
                {"personal_photos", m.personal_photos},
                {"photos", m.photos},
                {"videos", m.videos},
                {"likes", m.likes},
                {"activities_with_like", m.activities_with_like},
                {"wall_posts_with_comments", m.wall_posts_with_comments},
                {"comments", m.comments},
                {"wall_posts_length", m.wall_posts_length},
                {"wall_posts_average_length", m.wall_posts_average_length}};
}

struct HeaderCounts {
    std::optional<std::int64_t> profiles, posts, comments;
    std::string where;
};

}  // namespace

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open corpus file: " + path.string());
    return parse_corpus(in, path.string());
}

Corpus parse_corpus(std::istream& in, const std::string& origin) {
    Corpus corpus;
    std::unordered_map<std::string, std::size_t> profile_index;
    std::optional<HeaderCounts> header;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        Loc loc{origin, line_no};
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::parse_error& e) {
            fail(loc, std::string("malformed JSON: ") + e.what());
        }
        if (!rec.is_object()) fail(loc, "record is not a JSON object");
        std::string type = get_string(rec, "type", loc);

        if (type == "header") {
            if (header) fail(loc, "duplicate header record");
            if (!corpus.empty()) fail(loc, "header must precede all records");
            HeaderCounts h{{}, {}, {}, loc.str()};
            for (auto [key, dst] : {std::pair{"profiles", &h.profiles},
                                    std::pair{"posts", &h.posts},
                                    std::pair{"comments", &h.comments}}) {
                if (rec.contains(key)) {
                    if (!rec.at(key).is_number_integer() || rec.at(key).get<std::int64_t>() < 0)
                        fail(loc, std::string("header key '") + key + "' not a count");
                    *dst = rec.at(key).get<std::int64_t>();
                }
            }
            header = h;
            continue;
        }

        if (type == "profile") {
            Profile p;
            p.profile_id = get_string(rec, "profile_id", loc);
            if (p.profile_id.empty()) fail(loc, "empty profile_id");
            if (profile_index.count(p.profile_id))
                fail(loc, "duplicate profile_id '" + p.profile_id + "'");
            p.gender = parse_gender(get_string(rec, "gender", loc), loc);
            if (rec.contains("metrics") && !rec.at("metrics").is_null())
                p.metrics = parse_metrics(rec.at("metrics"), loc);
            profile_index.emplace(p.profile_id, corpus.size());
            corpus.push_back(std::move(p));
            continue;
        }

        if (type == "post") {
            std::string owner = get_string(rec, "profile_id", loc);
            auto it = profile_index.find(owner);
            if (it == profile_index.end())
                fail(loc, "post references unknown profile_id '" + owner + "'");
            Profile& profile = corpus[it->second];

            Post post;
            post.post_id = get_string(rec, "post_id", loc);
            if (post.post_id.empty()) fail(loc, "empty post_id");
            for (const Post& existing : profile.posts)
                if (existing.post_id == post.post_id)
                    fail(loc, "duplicate post_id '" + post.post_id + "' in profile '" + owner + "'");
            post.kind = parse_kind(get_string(rec, "kind", loc), loc);
            if (rec.contains("text")) {
                if (!rec.at("text").is_string()) fail(loc, "'text' must be a string");
                post.text = rec.at("text").get<std::string>();
            }
            if (rec.contains("likes")) {
                if (!rec.at("likes").is_number_integer() || rec.at("likes").get<std::int64_t>() < 0)
                    fail(loc, "'likes' must be a non-negative integer");
                post.likes = rec.at("likes").get<std::int64_t>();
            }
            if (rec.contains("timestamp") && !rec.at("timestamp").is_null()) {
                if (!rec.at("timestamp").is_number_integer())
                    fail(loc, "'timestamp' must be an integer");
                post.timestamp = rec.at("timestamp").get<std::int64_t>();
            }
            if (!profile.posts.empty() && post.timestamp && profile.posts.back().timestamp &&
                *post.timestamp < *profile.posts.back().timestamp)
                fail(loc, "posts out of timestamp order in profile '" + owner + "'");
            if (rec.contains("comments")) {
                if (!rec.at("comments").is_array()) fail(loc, "'comments' must be an array");
                std::unordered_set<std::string> comment_ids;
                for (const json& cj : rec.at("comments")) {
                    if (!cj.is_object()) fail(loc, "comment is not an object");
                    Comment c;
                    c.comment_id = get_string(cj, "comment_id", loc);
                    if (c.comment_id.empty()) fail(loc, "empty comment_id");
                    if (!comment_ids.insert(c.comment_id).second)
                        fail(loc, "duplicate comment_id '" + c.comment_id + "' in post '" +
                                      post.post_id + "'");
                    c.text = get_string(cj, "text", loc);
                    post.comments.push_back(std::move(c));
                }
            }
            profile.posts.push_back(std::move(post));
            continue;
        }

        fail(loc, "unknown record type '" + type + "'");
    }
    if (in.bad()) throw DataError(origin + ": I/O failure while reading");

    if (header) {
        auto check = [&](const char* what, std::optional<std::int64_t> declared,
                         std::int64_t actual) {
            if (declared && *declared != actual)
                throw DataError(header->where + ": header declares " +
                                std::to_string(*declared) + " " + what + ", corpus has " +
                                std::to_string(actual));
        };
        check("profiles", header->profiles, static_cast<std::int64_t>(corpus.size()));
        check("posts", header->posts, total_posts(corpus));
        check("comments", header->comments, total_comments(corpus));
    }
    return corpus;
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
    json header{{"type", "header"},
                {"profiles", static_cast<std::int64_t>(corpus.size())},
                {"posts", total_posts(corpus)},
                {"comments", total_comments(corpus)}};
    out << header.dump() << '\n';
    for (const Profile& p : corpus) {
        json pj{{"type", "profile"}, {"profile_id", p.profile_id}, {"gender", to_string(p.gender)}};
        if (p.metrics) pj["metrics"] = metrics_to_json(*p.metrics);
        out << pj.dump() << '\n';
        for (const Post& post : p.posts) {
            json cj = json::array();
            for (const Comment& c : post.comments)
                cj.push_back(json{{"comment_id", c.comment_id}, {"text", c.text}});
            json postj{{"type", "post"},     {"profile_id", p.profile_id},
                       {"post_id", post.post_id}, {"kind", to_string(post.kind)},
                       {"text", post.text},  {"likes", post.likes},
                       {"comments", std::move(cj)}};
            if (post.timestamp) postj["timestamp"] = *post.timestamp;
            out << postj.dump() << '\n';
        }
    }
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open corpus file for writing: " + path.string());
    write_corpus(corpus, out);
    out.flush();
    if (!out) throw DataError("I/O failure while writing corpus: " + path.string());
}

std::vector<const Post*> eligible_posts(const Profile& profile, bool require_comments) {
    std::vector<const Post*> out;
    for (const Post& post : profile.posts) {
        if (post.kind != PostKind::text) continue;
        if (require_comments && post.comments.empty()) continue;
        out.push_back(&post);
    }
    return out;
}

std::int64_t total_posts(const Corpus& corpus) {
    std::int64_t n = 0;
    for (const Profile& p : corpus) n += static_cast<std::int64_t>(p.posts.size());
    return n;
}

std::int64_t total_comments(const Corpus& corpus) {
    std::int64_t n = 0;
    for (const Profile& p : corpus)
        for (const Post& post : p.posts) n += static_cast<std::int64_t>(post.comments.size());
    return n;
}

}  // namespace moodco
