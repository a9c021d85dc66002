#include "moodco/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "moodco/errors.hpp"
#include "moodco/text_features.hpp"

namespace moodco {

namespace {

std::string location(const std::string& origin, std::size_t line_no) {
    return origin + ":" + std::to_string(line_no);
}

bool valid_category_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (!(std::islower(static_cast<unsigned char>(c)) ||
              std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

std::optional<CategoryId> Lexicon::find_category(std::string_view name) const {
    for (std::size_t i = 0; i < category_names_.size(); ++i)
        if (category_names_[i] == name) return static_cast<CategoryId>(i);
    return std::nullopt;
}

std::uint32_t Lexicon::child(std::uint32_t node, unsigned char byte) const {
    const auto& kids = nodes_[node].children;
    auto it = std::lower_bound(kids.begin(), kids.end(), byte,
                               [](const auto& kv, unsigned char b) { return kv.first < b; });
    if (it != kids.end() && it->first == byte) return it->second;
    return 0;  // root is never a child, so 0 doubles as "no child"
}

std::uint32_t Lexicon::ensure_child(std::uint32_t node, unsigned char byte) {
    auto& kids = nodes_[node].children;
    auto it = std::lower_bound(kids.begin(), kids.end(), byte,
                               [](const auto& kv, unsigned char b) { return kv.first < b; });
    if (it != kids.end() && it->first == byte) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_[node].children.insert(
        nodes_[node].children.begin() + (it - nodes_[node].children.begin()),
        {byte, id});
    return id;
}

void Lexicon::insert(const Entry& entry, const std::string& origin, std::size_t line_no) {
    std::uint32_t node = 0;
    for (unsigned char byte : entry.pattern) node = ensure_child(node, byte);
    std::int32_t& slot = entry.wildcard ? nodes_[node].wildcard_set : nodes_[node].exact_set;
    if (slot != -1)
        throw DataError(location(origin, line_no) + ": duplicate pattern '" + entry.pattern +
                        (entry.wildcard ? "*" : "") + "'");
    slot = static_cast<std::int32_t>(category_sets_.size());
    category_sets_.push_back(entry.categories);
    ++n_entries_;
}

CategoryId Lexicon::declare_category(std::string_view name, const std::string& origin,
                                     std::size_t line_no) {
    if (!valid_category_name(name))
        throw DataError(location(origin, line_no) + ": invalid category name '" +
                        std::string(name) + "'");
    if (find_category(name))
        throw DataError(location(origin, line_no) + ": duplicate category '" +
                        std::string(name) + "'");
    category_names_.emplace_back(name);
    return static_cast<CategoryId>(category_names_.size() - 1);
}

std::vector<CategoryId> Lexicon::categorize(std::string_view token) const {
    std::vector<CategoryId> out;
    categorize_into(token, out);
    return out;
}

void Lexicon::categorize_into(std::string_view token, std::vector<CategoryId>& out) const {
    out.clear();
    std::uint32_t node = 0;
    // Wildcard sets fire at every prefix of the token, including the whole
    // token ("felic*" matches both "felic" and "felicità").
    if (nodes_[0].wildcard_set != -1) {
        const auto& set = category_sets_[nodes_[0].wildcard_set];
        out.insert(out.end(), set.begin(), set.end());
    }
    bool complete = true;
    for (unsigned char byte : token) {
        node = child(node, byte);
        if (node == 0) {
            complete = false;
            break;
        }
        if (nodes_[node].wildcard_set != -1) {
            const auto& set = category_sets_[nodes_[node].wildcard_set];
            out.insert(out.end(), set.begin(), set.end());
        }
    }
    if (complete && nodes_[node].exact_set != -1) {
        const auto& set = category_sets_[nodes_[node].exact_set];
        out.insert(out.end(), set.begin(), set.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open lexicon file: " + path.string());
    return parse(in, path.string());
}

Lexicon Lexicon::parse(std::istream& in, const std::string& origin) {
    Lexicon lex;
    std::string line;
    std::size_t line_no = 0;
    bool saw_entry = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        if (sv.rfind("%categories", 0) == 0) {
            if (saw_entry)
                throw DataError(location(origin, line_no) +
                                ": %categories header after first entry");
            std::string_view rest = trim(sv.substr(std::string_view("%categories").size()));
            if (rest.empty())
                throw DataError(location(origin, line_no) + ": empty %categories header");
            for (auto name : split(rest, ','))
                lex.declare_category(trim(name), origin, line_no);
            continue;
        }
        auto tab = sv.find('\t');
        if (tab == std::string_view::npos)
            throw DataError(location(origin, line_no) + ": expected 'pattern<TAB>categories'");
        std::string_view pattern = trim(sv.substr(0, tab));
        std::string_view cats = trim(sv.substr(tab + 1));
        if (pattern.empty())
            throw DataError(location(origin, line_no) + ": empty pattern");
        Entry entry;
        if (pattern.back() == '*') {
            entry.wildcard = true;
            pattern.remove_suffix(1);
        }
        if (pattern.empty())
            throw DataError(location(origin, line_no) + ": bare '*' pattern");
        if (pattern.find('*') != std::string_view::npos)
            throw DataError(location(origin, line_no) + ": '*' only allowed in final position");
        // Tokens arrive case-folded, so patterns are folded the same way.
        entry.pattern = unicode::fold_case_utf8(pattern);
        if (cats.empty())
            throw DataError(location(origin, line_no) + ": entry with no categories");
        for (auto name : split(cats, ',')) {
            auto trimmed = trim(name);
            auto id = lex.find_category(trimmed);
            if (!id)
                throw DataError(location(origin, line_no) + ": category '" +
                                std::string(trimmed) + "' not declared in %categories header");
            entry.categories.push_back(*id);
        }
        std::sort(entry.categories.begin(), entry.categories.end());
        entry.categories.erase(std::unique(entry.categories.begin(), entry.categories.end()),
                               entry.categories.end());
        lex.insert(entry, origin, line_no);
        saw_entry = true;
    }
    return lex;
}

}  // namespace moodco
