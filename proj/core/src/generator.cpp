#include "moodco/generator.hpp"

#include <cmath>

#include "moodco/errors.hpp"
#include "moodco/rng.hpp"

namespace moodco {

namespace pools {

// Kept in lockstep with data/micro_lexicon.tsv; a unit test re-derives the
// category sets of every pool word from the shipped file.
const std::vector<std::string> positive_emotion = {"amore", "bella", "gioia",
                                                   "fantastico", "sorriso"};
const std::vector<std::string> positive_feeling = {"adoro", "piace", "contento",
                                                   "entusiasmo"};
const std::vector<std::string> family = {"famiglia", "mamma", "fratello", "sorella", "zia"};
const std::vector<std::string> negative_emotion = {"paura", "male", "schifo", "orribile"};
const std::vector<std::string> swear = {"cazzo", "merda", "vaffanculo"};
const std::vector<std::string> anger = {"arrabbiato", "furioso"};
const std::vector<std::string> sadness = {"lacrime", "lacrima"};
const std::vector<std::string> third_person_plural = {"hanno", "vanno", "fanno", "stanno",
                                                      "dicono"};
const std::vector<std::string> sexual = {"sesso", "sexy", "bacio"};
const std::vector<std::string> filler = {"tavolo",   "strada",  "finestra", "treno",
                                         "libro",    "montagna", "pranzo",  "domani",
                                         "ieri",     "quando",  "dove",     "città",
                                         "piazza",   "mercato", "ombrello", "bottiglia",
                                         "quaderno", "lavagna"};

}  // namespace pools

namespace {

const std::string& pick(const std::vector<std::string>& pool, Rng& rng) {
    return pool[rng.uniform_index(pool.size())];
}

void append_word(std::string& text, const std::string& word) {
    if (!text.empty()) text.push_back(' ');
    text += word;
}

// Two mood words make the planted label unambiguous: ~25% category rate
// against a zero opposite score.
std::string emotional_text(MoodLabel mood, int n_words, double sexual_rate, Rng& rng) {
    std::string text;
    int slots = std::max(n_words, mood == MoodLabel::neutral ? 1 : 3);
    if (mood == MoodLabel::positive) {
        append_word(text, pick(pools::positive_emotion, rng));
        append_word(text, pick(rng.bernoulli(0.5) ? pools::positive_feeling : pools::family,
                               rng));
        slots -= 2;
    } else if (mood == MoodLabel::negative) {
        append_word(text, pick(pools::negative_emotion, rng));
        const double which = rng.uniform01();
        append_word(text, pick(which < 0.4   ? pools::swear
                               : which < 0.7 ? pools::anger
                                             : pools::sadness,
                               rng));
        slots -= 2;
    }
    for (int i = 0; i < slots; ++i) {
        if (sexual_rate > 0.0 && rng.bernoulli(sexual_rate))
            append_word(text, pick(pools::sexual, rng));
        else
            append_word(text, pick(pools::filler, rng));
    }
    return text;
}

MoodLabel draw_mood(const ContagionConfig& cfg, Rng& rng) {
    if (cfg.p_neutral_post > 0.0 && rng.bernoulli(cfg.p_neutral_post))
        return MoodLabel::neutral;
    return rng.bernoulli(cfg.p_positive_post) ? MoodLabel::positive : MoodLabel::negative;
}

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError(std::string(name) + " must lie in [0,1]");
}

}  // namespace

void ContagionConfig::validate() const {
    if (n_profiles == 0) throw ConfigError("n_profiles must be positive");
    if (posts_per_profile == 0) throw ConfigError("posts_per_profile must be positive");
    check_probability(p_positive_post, "p_positive_post");
    check_probability(coupling, "coupling");
    check_probability(p_neutral_post, "p_neutral_post");
    check_probability(sexual_word_rate, "sexual_word_rate");
    if (comments_per_post_mean < 0.0)
        throw ConfigError("comments_per_post_mean must be >= 0");
    if (words_per_post < 1 || words_per_comment < 1)
        throw ConfigError("words per post/comment must be >= 1");
    if (likes_mean_neutral < 0.0 || likes_mean_emotional < 0.0)
        throw ConfigError("likes means must be >= 0");
    if (comments_boost_emotional < 0.0)
        throw ConfigError("comments_boost_emotional must be >= 0");
    if (id_prefix.empty()) throw ConfigError("id_prefix must be non-empty");
}

Corpus generate_contagion_corpus(const ContagionConfig& cfg) {
    cfg.validate();
    Corpus corpus;
    corpus.reserve(cfg.n_profiles);

    char id_buf[64];
    for (std::size_t pi = 0; pi < cfg.n_profiles; ++pi) {
        Rng rng(Rng::derive(cfg.seed, pi));
        Profile profile;
        std::snprintf(id_buf, sizeof(id_buf), "%s%04zu", cfg.id_prefix.c_str(), pi);
        profile.profile_id = id_buf;
        profile.gender = pi % 2 == 0 ? Gender::female : Gender::male;

        FacebookMetrics m;
        std::int64_t text_chars = 0;

        for (std::size_t qi = 0; qi < cfg.posts_per_profile; ++qi) {
            Post post;
            std::snprintf(id_buf, sizeof(id_buf), "%s-%05zu", profile.profile_id.c_str(), qi);
            post.post_id = id_buf;
            post.kind = PostKind::text;

            const MoodLabel mood = draw_mood(cfg, rng);
            const bool emotional = mood != MoodLabel::neutral;
            post.text = emotional_text(mood, cfg.words_per_post, cfg.sexual_word_rate, rng);
            post.likes =
                rng.poisson(emotional ? cfg.likes_mean_emotional : cfg.likes_mean_neutral);

            const double comment_mean =
                cfg.comments_per_post_mean + (emotional ? cfg.comments_boost_emotional : 0.0);
            const std::int64_t n_comments = rng.poisson(comment_mean);
            for (std::int64_t ci = 0; ci < n_comments; ++ci) {
                Comment comment;
                std::snprintf(id_buf, sizeof(id_buf), "%s-c%03lld", post.post_id.c_str(),
                              static_cast<long long>(ci));
                comment.comment_id = id_buf;
                const MoodLabel comment_mood =
                    rng.bernoulli(cfg.coupling) ? mood : draw_mood(cfg, rng);
                comment.text =
                    emotional_text(comment_mood, cfg.words_per_comment, 0.0, rng);
                post.comments.push_back(std::move(comment));
            }

            text_chars += static_cast<std::int64_t>(post.text.size());
            m.wall_posts += 1;
            m.complete_activity += 1;
            m.comments += n_comments;
            m.likes += post.likes;
            if (post.likes > 0) m.activities_with_like += 1;
            if (n_comments > 0) m.wall_posts_with_comments += 1;
            profile.posts.push_back(std::move(post));
        }

        m.wall_posts_length = text_chars;
        m.wall_posts_average_length =
            m.wall_posts > 0
                ? static_cast<std::int64_t>(std::llround(
                      static_cast<double>(text_chars) / static_cast<double>(m.wall_posts)))
                : 0;
        // Observation-grid fields with no planted role; drawn anyway so the
        // split comparisons have variance to chew on.
        m.friends = 200 + rng.poisson(400.0);
        m.followed_people = rng.poisson(12.0);
        m.visited_places = rng.poisson(30.0);
        m.famous_quotes = rng.poisson(20.0);
        m.pages_with_likes = rng.poisson(200.0);
        m.profile_picture_edits = rng.poisson(10.0);
        m.personal_photos = rng.poisson(40.0);
        m.photos = rng.poisson(100.0);
        m.videos = rng.poisson(15.0);
        profile.metrics = m;
        corpus.push_back(std::move(profile));
    }
    return corpus;
}

CriterionSample planted_criterion_sample(const CriterionPlantConfig& cfg) {
    if (cfg.per_label == 0) throw ConfigError("per_label must be positive");
    if (cfg.words_per_text < 6) throw ConfigError("words_per_text must be >= 6");

    Rng rng(cfg.seed);
    CriterionSample sample;

    auto numeral = [&rng] { return std::to_string(rng.uniform_index(90) + 10); };

    for (std::size_t i = 0; i < cfg.per_label; ++i) {
        // Negative: one word from each negative predictor pool, a
        // third-person plural verb, and never a numeral.
        {
            std::string text;
            append_word(text, pick(pools::negative_emotion, rng));
            append_word(text, pick(pools::swear, rng));
            append_word(text, pick(pools::anger, rng));
            if (rng.bernoulli(0.5)) append_word(text, pick(pools::sadness, rng));
            append_word(text, pick(pools::third_person_plural, rng));
            while (std::count(text.begin(), text.end(), ' ') + 1 < cfg.words_per_text)
                append_word(text, pick(pools::filler, rng));
            sample.posts.push_back({std::move(text), MoodLabel::negative});
        }
        // Positive: positive feeling/emotion/family words, question marks,
        // and numerals at the same moderate rate as neutral posts.
        {
            std::string text;
            append_word(text, pick(pools::positive_feeling, rng));
            append_word(text, pick(pools::positive_emotion, rng));
            if (rng.bernoulli(0.5)) append_word(text, pick(pools::family, rng));
            if (rng.bernoulli(0.4)) append_word(text, numeral());
            while (std::count(text.begin(), text.end(), ' ') + 1 < cfg.words_per_text)
                append_word(text, pick(pools::filler, rng));
            text += rng.bernoulli(0.5) ? "??" : "?";
            sample.posts.push_back({std::move(text), MoodLabel::positive});
        }
        // Neutral: fillers and the occasional numeral.
        {
            std::string text;
            if (rng.bernoulli(0.4)) append_word(text, numeral());
            while (std::count(text.begin(), text.end(), ' ') + 1 < cfg.words_per_text)
                append_word(text, pick(pools::filler, rng));
            sample.posts.push_back({std::move(text), MoodLabel::neutral});
        }
    }
    return sample;
}

}  // namespace moodco
