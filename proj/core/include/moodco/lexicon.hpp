#ifndef MOODCO_LEXICON_HPP
#define MOODCO_LEXICON_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace moodco {

// Index into Lexicon::categories(). Stable for the lifetime of the lexicon.
using CategoryId = std::uint32_t;

// A category dictionary with LIWC-style suffix wildcards. Patterns are
// lowercase words, optionally ending in a single '*' that matches any
// (possibly empty) suffix. A token can hit several patterns; hits are
// unioned and each category counts at most once per token.
//
// Immutable after load; categorize() is safe to call concurrently.
class Lexicon {
public:
    // One parsed dictionary line: pattern plus the categories it maps to.
    struct Entry {
        std::string pattern;      // without the trailing '*'
        bool wildcard = false;
        std::vector<CategoryId> categories;  // sorted, unique
    };

    Lexicon() = default;

    const std::vector<std::string>& categories() const { return category_names_; }
    std::optional<CategoryId> find_category(std::string_view name) const;
    const std::string& category_name(CategoryId id) const { return category_names_[id]; }
    std::size_t size() const { return n_entries_; }

    // Union of categories over the exact-match entry and every wildcard
    // entry whose prefix matches. `token` must be lowercased with no
    // surrounding punctuation. Returns a sorted, unique list.
    std::vector<CategoryId> categorize(std::string_view token) const;

    // Appends matches to `out` (sorted unique on return). Avoids an
    // allocation per token in the hot scoring path.
    void categorize_into(std::string_view token, std::vector<CategoryId>& out) const;

    static Lexicon load(const std::filesystem::path& path);
    static Lexicon parse(std::istream& in, const std::string& origin = "<stream>");

private:
    struct Node {
        // Children as (byte, node) pairs, sorted by byte. Lexicon files are
        // small enough that binary search beats a per-node hash map.
        std::vector<std::pair<unsigned char, std::uint32_t>> children;
        std::int32_t exact_set = -1;     // index into category_sets_
        std::int32_t wildcard_set = -1;  // pattern ending in '*' at this node
    };

    std::uint32_t child(std::uint32_t node, unsigned char byte) const;
    std::uint32_t ensure_child(std::uint32_t node, unsigned char byte);
    void insert(const Entry& entry, const std::string& origin, std::size_t line_no);
    CategoryId declare_category(std::string_view name, const std::string& origin,
                                std::size_t line_no);

    std::vector<Node> nodes_{1, Node{}};  // nodes_[0] is the root
    std::vector<std::vector<CategoryId>> category_sets_;
    std::vector<std::string> category_names_;
    std::size_t n_entries_ = 0;
};

}  // namespace moodco

#endif  // MOODCO_LEXICON_HPP
