#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pertcheck/core/error.hpp"
#include "pertcheck/core/io.hpp"
#include "pertcheck/core/strings.hpp"
#include "pertcheck/textkit/token.hpp"

namespace pertcheck::textkit {

enum class Relation { Synonym, Antonym, Sibling };

// Read-only lexical resource bundle. Loaded once from a directory of
// tab-separated files and safely shareable across threads afterwards.
//
// Directory layout:
//   synsets.tsv         word <tab> pos <tab> synonym
//   antonyms.tsv        word <tab> pos <tab> antonym
//   hypernyms.tsv       word <tab> pos <tab> hypernym
//   gender.tsv          word <tab> counterpart     (both directions listed)
//   contractions.tsv    expansion <tab> contraction
//   stopwords.txt       one word per line
//   verb_agreement.tsv  form <tab> disagreeing form
//   gazetteer_person.txt  name <tab> gender (m/f/u)
//   gazetteer_place.txt   one name per line
// pos is one of n/v/a/r; files are UTF-8 with # comments.
class Lexicon {
public:
    static Lexicon load(const std::string& dir);

    // Case-insensitive relation lookups; results are sorted and never
    // contain the query word. An empty result signals that a perturbation
    // relying on the relation is inapplicable.
    std::vector<std::string> related_words(std::string_view word, Pos pos, Relation rel) const;

    std::vector<std::string> synonyms(std::string_view word, Pos pos) const;
    std::vector<std::string> antonyms_of(std::string_view word) const;
    std::vector<std::string> siblings(std::string_view word, Pos pos) const;

    bool has_word(std::string_view word) const {
        return pos_index_.count(to_lower(word)) > 0;
    }
    // Possible WordNet-style categories for a surface form: subset of "nvar".
    std::string pos_candidates(std::string_view word) const {
        auto it = pos_index_.find(to_lower(word));
        return it == pos_index_.end() ? std::string() : it->second;
    }

    std::optional<std::string> gender_counterpart(std::string_view word) const {
        return find_in(gender_, to_lower(word));
    }
    std::optional<std::string> contraction_of(std::string_view expansion) const {
        return find_in(contract_, to_lower(expansion));
    }
    std::optional<std::string> expansion_of(std::string_view contraction) const {
        return find_in(expand_, to_lower(contraction));
    }
    std::optional<std::string> agreement_swap(std::string_view verb) const {
        return find_in(agreement_, to_lower(verb));
    }

    bool is_stopword(std::string_view word) const { return stopwords_.count(to_lower(word)) > 0; }

    bool is_person_name(std::string_view name) const { return persons_.count(to_lower(name)) > 0; }
    bool is_place_name(std::string_view name) const { return places_.count(to_lower(name)) > 0; }
    // 'm', 'f' or 'u' when the name is known.
    std::optional<char> person_gender(std::string_view name) const {
        auto it = persons_.find(to_lower(name));
        if (it == persons_.end()) return std::nullopt;
        return it->second;
    }
    // Deterministic name pool for name perturbations.
    const std::vector<std::string>& person_names() const { return person_list_; }

    const std::unordered_map<std::string, std::string>& contractions_by_expansion() const {
        return contract_;
    }
    const std::unordered_map<std::string, std::string>& expansions_by_contraction() const {
        return expand_;
    }
    const std::unordered_map<std::string, std::string>& agreement_table() const { return agreement_; }

    std::size_t synset_entry_count() const { return synsets_.size(); }

private:
    static std::optional<std::string> find_in(const std::unordered_map<std::string, std::string>& m,
                                              const std::string& key) {
        auto it = m.find(key);
        if (it == m.end()) return std::nullopt;
        return it->second;
    }

    static char pos_char(Pos pos) {
        switch (pos) {
            case Pos::Noun: return 'n';
            case Pos::Verb: return 'v';
            case Pos::Adj: return 'a';
            case Pos::Adv: return 'r';
            default: return 'n';
        }
    }

    static std::string key(std::string_view word, char pc) {
        std::string k = to_lower(word);
        k += '\x1f';
        k += pc;
        return k;
    }

    // word+pos -> sorted synonym list
    std::unordered_map<std::string, std::vector<std::string>> synsets_;
    // word -> sorted antonym list
    std::unordered_map<std::string, std::vector<std::string>> antonyms_;
    // word+pos -> hypernym labels
    std::unordered_map<std::string, std::vector<std::string>> hypernyms_;
    // hypernym label+pos -> sorted co-hyponym list
    std::unordered_map<std::string, std::vector<std::string>> children_;
    // surface form -> subset of "nvar"
    std::unordered_map<std::string, std::string> pos_index_;

    std::unordered_map<std::string, std::string> gender_;
    std::unordered_map<std::string, std::string> contract_;  // expansion -> contraction
    std::unordered_map<std::string, std::string> expand_;    // contraction -> expansion
    std::unordered_map<std::string, std::string> agreement_;
    std::unordered_set<std::string> stopwords_;
    std::unordered_map<std::string, char> persons_;
    std::unordered_set<std::string> places_;
    std::vector<std::string> person_list_;
};

namespace detail {

inline void add_sorted_unique(std::vector<std::string>& v, const std::string& s) {
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) v.insert(it, s);
}

inline void require_file(const std::string& path) {
    if (!std::filesystem::exists(path)) throw ParseError(path, 0, "missing lexicon file");
}

} // namespace detail

inline Lexicon Lexicon::load(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ParseError(dir, 0, "lexicon directory not found");
    Lexicon lex;

    auto mark_pos = [&lex](const std::string& word, char pc) {
        std::string& s = lex.pos_index_[word];
        if (s.find(pc) == std::string::npos) s += pc;
    };
    auto check_pos = [](const std::string& path, std::size_t line, const std::string& p) {
        if (p.size() != 1 || std::string("nvar").find(p[0]) == std::string::npos)
            throw ParseError(path, line, "bad pos tag '" + p + "'");
        return p[0];
    };

    std::string path = dir + "/synsets.tsv";
    detail::require_file(path);
    for_each_tsv_row(path, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 3) throw ParseError(path, line, "expected 3 fields");
        char pc = check_pos(path, line, f[1]);
        std::string w = to_lower(f[0]), syn = to_lower(f[2]);
        if (w == syn)
            throw InvariantViolation(path + ":" + std::to_string(line) + ": '" + w +
                                     "' listed as its own synonym");
        detail::add_sorted_unique(lex.synsets_[key(w, pc)], syn);
        mark_pos(w, pc);
    });

    path = dir + "/antonyms.tsv";
    detail::require_file(path);
    for_each_tsv_row(path, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 3) throw ParseError(path, line, "expected 3 fields");
        check_pos(path, line, f[1]);
        std::string w = to_lower(f[0]), ant = to_lower(f[2]);
        if (w == ant)
            throw InvariantViolation(path + ":" + std::to_string(line) + ": '" + w +
                                     "' listed as its own antonym");
        detail::add_sorted_unique(lex.antonyms_[w], ant);
    });

    path = dir + "/hypernyms.tsv";
    detail::require_file(path);
    for_each_tsv_row(path, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 3) throw ParseError(path, line, "expected 3 fields");
        char pc = check_pos(path, line, f[1]);
        std::string w = to_lower(f[0]), parent = to_lower(f[2]);
        detail::add_sorted_unique(lex.hypernyms_[key(w, pc)], parent);
        detail::add_sorted_unique(lex.children_[key(parent, pc)], w);
        mark_pos(w, pc);
    });

    path = dir + "/gender.tsv";
    detail::require_file(path);
    for_each_tsv_row(path, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 2) throw ParseError(path, line, "expected 2 fields");
        std::string a = to_lower(f[0]), b = to_lower(f[1]);
        auto [it, fresh] = lex.gender_.emplace(a, b);
        if (!fresh && it->second != b)
            throw InvariantViolation(path + ":" + std::to_string(line) + ": conflicting entries for '" + a + "'");
    });
    for (const auto& [a, b] : lex.gender_) {
        auto it = lex.gender_.find(b);
        if (it == lex.gender_.end() || it->second != a)
            throw InvariantViolation(dir + "/gender.tsv: pair '" + a + "' -> '" + b +
                                     "' has no inverse entry");
    }

    path = dir + "/contractions.tsv";
    detail::require_file(path);
    for_each_tsv_row(path, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 2) throw ParseError(path, line, "expected 2 fields");
        std::string expansion = to_lower(f[0]), contraction = to_lower(f[1]);
        if (!lex.contract_.emplace(expansion, contraction).second)
            throw InvariantViolation(path + ":" + std::to_string(line) + ": duplicate expansion '" + expansion + "'");
        if (!lex.expand_.emplace(contraction, expansion).second)
            throw InvariantViolation(path + ":" + std::to_string(line) + ": duplicate contraction '" + contraction + "'");
    });

    path = dir + "/stopwords.txt";
    detail::require_file(path);
    for_each_tsv_row(path, [&](std::size_t, const std::vector<std::string>& f) {
        lex.stopwords_.insert(to_lower(f[0]));
    });

    path = dir + "/verb_agreement.tsv";
    detail::require_file(path);
    for_each_tsv_row(path, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 2) throw ParseError(path, line, "expected 2 fields");
        lex.agreement_[to_lower(f[0])] = to_lower(f[1]);
    });

    path = dir + "/gazetteer_person.txt";
    detail::require_file(path);
    for_each_tsv_row(path, [&](std::size_t line, const std::vector<std::string>& f) {
        char g = 'u';
        if (f.size() >= 2 && !f[1].empty()) g = ascii_lower(f[1][0]);
        if (g != 'm' && g != 'f' && g != 'u') throw ParseError(path, line, "gender must be m, f or u");
        std::string low = to_lower(f[0]);
        if (lex.persons_.emplace(low, g).second) lex.person_list_.push_back(capitalize(low));
    });
    std::sort(lex.person_list_.begin(), lex.person_list_.end());

    path = dir + "/gazetteer_place.txt";
    detail::require_file(path);
    for_each_tsv_row(path, [&](std::size_t, const std::vector<std::string>& f) {
        lex.places_.insert(to_lower(f[0]));
    });

    return lex;
}

inline std::vector<std::string> Lexicon::synonyms(std::string_view word, Pos pos) const {
    auto it = synsets_.find(key(word, pos_char(pos)));
    return it == synsets_.end() ? std::vector<std::string>() : it->second;
}

inline std::vector<std::string> Lexicon::antonyms_of(std::string_view word) const {
    auto it = antonyms_.find(to_lower(word));
    return it == antonyms_.end() ? std::vector<std::string>() : it->second;
}

inline std::vector<std::string> Lexicon::siblings(std::string_view word, Pos pos) const {
    const char pc = pos_char(pos);
    std::string low = to_lower(word);
    auto hyp = hypernyms_.find(key(low, pc));
    if (hyp == hypernyms_.end()) return {};

    std::set<std::string> exclude{low};
    for (const auto& s : synonyms(low, pos)) exclude.insert(s);

    std::set<std::string> out;
    for (const auto& parent : hyp->second) {
        auto kids = children_.find(key(parent, pc));
        if (kids == children_.end()) continue;
        for (const auto& k : kids->second)
            if (!exclude.count(k)) out.insert(k);
    }
    return std::vector<std::string>(out.begin(), out.end());
}

inline std::vector<std::string> Lexicon::related_words(std::string_view word, Pos pos,
                                                       Relation rel) const {
    switch (rel) {
        case Relation::Synonym: return synonyms(word, pos);
        case Relation::Antonym: return antonyms_of(word);
        case Relation::Sibling: return siblings(word, pos);
    }
    return {};
}

} // namespace pertcheck::textkit
