#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pertcheck/core/strings.hpp"
#include "pertcheck/textkit/lexicon.hpp"
#include "pertcheck/textkit/token.hpp"
#include "pertcheck/textkit/tokenizer.hpp"

namespace pertcheck::textkit {

namespace closed {

inline const std::unordered_map<std::string, Pos>& word_classes() {
    static const std::unordered_map<std::string, Pos> m = [] {
        std::unordered_map<std::string, Pos> w;
        auto add = [&w](std::initializer_list<const char*> words, Pos p) {
            for (const char* s : words) w.emplace(s, p);
        };
        add({"the", "a", "an", "this", "that", "these", "those", "my", "your", "his",
             "her", "its", "our", "their", "some", "any", "no", "every", "each", "all",
             "both", "many", "much", "several", "few", "another", "such", "same"},
            Pos::Det);
        add({"i", "you", "he", "she", "it", "we", "they", "me", "him", "us", "them",
             "mine", "yours", "hers", "ours", "theirs", "myself", "yourself", "himself",
             "herself", "itself", "ourselves", "themselves", "someone", "somebody",
             "anyone", "anybody", "everyone", "everybody", "nobody", "something",
             "anything", "everything", "nothing"},
            Pos::Pron);
        add({"in", "on", "at", "by", "for", "with", "from", "of", "to", "about", "under",
             "over", "into", "through", "between", "against", "during", "without",
             "within", "above", "below", "near", "behind", "beside", "around", "across",
             "along", "past", "toward", "towards", "off", "onto", "upon", "among",
             "despite", "until", "since", "per", "except", "before", "after", "beyond"},
            Pos::Adp);
        add({"am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
             "had", "do", "does", "did", "will", "would", "can", "could", "shall",
             "should", "may", "might", "must", "cannot", "don't", "doesn't", "didn't",
             "isn't", "aren't", "wasn't", "weren't", "can't", "couldn't", "won't",
             "wouldn't", "shouldn't", "hasn't", "haven't", "hadn't", "mustn't", "ain't",
             "'re", "'ve", "'ll", "'d", "'m", "'s"},
            Pos::Aux);
        add({"who", "whom", "whose", "what", "which", "when", "where", "why", "how",
             "whatever", "whenever", "wherever", "whoever"},
            Pos::Wh);
        add({"one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
             "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
             "seventeen", "eighteen", "nineteen", "twenty", "thirty", "forty", "fifty",
             "sixty", "seventy", "eighty", "ninety", "hundred", "thousand", "million",
             "billion", "trillion", "zero"},
            Pos::Num);
        add({"and", "or", "but", "because", "if", "while", "although", "though",
             "unless", "nor", "yet", "whether", "yes", "oh", "hi", "hello", "please",
             "ok", "okay", "hey", "wow", "hmm"},
            Pos::Other);
        add({"not", "n't", "so", "very", "too", "also", "just", "only", "now", "then",
             "here", "there", "never", "always", "often", "again", "still", "already",
             "soon", "quite", "rather", "even", "once", "twice", "together", "away",
             "back", "up", "down", "out", "later", "today", "tomorrow", "yesterday",
             "maybe", "perhaps", "really", "almost", "ever", "instead", "sometimes",
             "usually", "finally", "recently", "indeed", "however", "meanwhile",
             "anyway", "everywhere", "somewhere", "anywhere", "nowhere", "well",
             "outside", "inside", "upstairs", "downstairs", "abroad", "sometime"},
            Pos::Adv);
        // irregular verb forms that inflection stripping cannot reach
        add({"went", "made", "saw", "took", "got", "gave", "came", "knew", "thought",
             "found", "told", "became", "left", "felt", "put", "brought", "began",
             "kept", "held", "wrote", "stood", "heard", "meant", "set", "met", "ran",
             "paid", "sat", "spoke", "lay", "led", "grew", "lost", "fell", "sent",
             "built", "understood", "drew", "broke", "spent", "rose", "drove",
             "bought", "wore", "chose", "ate", "flew", "slept", "won", "taught",
             "caught", "sold", "threw", "forgot", "rode", "sang", "drank", "swam",
             "said", "done", "gone", "seen", "taken", "given", "known", "written",
             "spoken", "broken", "chosen", "eaten", "fallen", "forgotten", "driven",
             "drawn", "grown", "thrown", "flown", "risen", "worn", "sung", "drunk",
             "born", "torn", "shown", "hidden", "bitten", "beaten", "stolen", "begun",
             "gotten", "frozen", "forgiven", "blew", "lit"},
            Pos::Verb);
        // irregular plurals
        add({"children", "men", "women", "feet", "teeth", "mice", "geese", "oxen",
             "wives", "knives", "shelves", "loaves", "thieves", "wolves", "calves",
             "halves", "scarves", "elves"},
            Pos::Noun);
        return w;
    }();
    return m;
}

inline const std::vector<std::string>& wh_words() {
    static const std::vector<std::string> w = {"what", "who", "when", "where", "why", "which", "how"};
    return w;
}

} // namespace closed

namespace detail {

// Possible WordNet categories for a surface form, after undoing common
// inflections. Returns a subset of "nvar".
inline std::string lexical_candidates(const Lexicon& lex, const std::string& low) {
    std::string cands = lex.pos_candidates(low);
    auto merge_from = [&](const std::string& lemma, std::string_view keep) {
        for (char pc : lex.pos_candidates(lemma))
            if (keep.find(pc) != std::string_view::npos && cands.find(pc) == std::string::npos)
                cands += pc;
    };
    std::size_t n = low.size();
    if (n > 3 && ends_with(low, "ies")) merge_from(low.substr(0, n - 3) + "y", "nv");
    if (n > 2 && ends_with(low, "es")) merge_from(low.substr(0, n - 2), "nv");
    if (n > 1 && low.back() == 's' && !ends_with(low, "ss")) merge_from(low.substr(0, n - 1), "nv");
    if (n > 4 && ends_with(low, "ing")) {
        merge_from(low.substr(0, n - 3), "v");
        merge_from(low.substr(0, n - 3) + "e", "v");
        if (n > 5 && low[n - 4] == low[n - 5]) merge_from(low.substr(0, n - 4), "v");
    }
    if (n > 3 && ends_with(low, "ed")) {
        merge_from(low.substr(0, n - 2), "v");
        merge_from(low.substr(0, n - 1), "v");
        if (n > 4 && low[n - 3] == low[n - 4]) merge_from(low.substr(0, n - 3), "v");
    }
    if (n > 3 && (ends_with(low, "er") || ends_with(low, "est"))) {
        std::size_t cut = ends_with(low, "er") ? 2 : 3;
        merge_from(low.substr(0, n - cut), "a");
        merge_from(low.substr(0, n - cut) + "e", "a");
    }
    return cands;
}

inline Pos suffix_guess(const std::string& low, std::string_view original) {
    static const std::vector<std::pair<std::string_view, Pos>> rules = {
        {"ly", Pos::Adv},     {"ing", Pos::Verb},   {"tion", Pos::Noun}, {"sion", Pos::Noun},
        {"ment", Pos::Noun},  {"ness", Pos::Noun},  {"ity", Pos::Noun},  {"ance", Pos::Noun},
        {"ence", Pos::Noun},  {"ship", Pos::Noun},  {"hood", Pos::Noun}, {"ism", Pos::Noun},
        {"ous", Pos::Adj},    {"ful", Pos::Adj},    {"less", Pos::Adj},  {"ish", Pos::Adj},
        {"ive", Pos::Adj},    {"able", Pos::Adj},   {"ible", Pos::Adj},  {"ize", Pos::Verb},
        {"ise", Pos::Verb},   {"ify", Pos::Verb},   {"ed", Pos::Verb},
    };
    for (const auto& [suf, pos] : rules)
        if (low.size() > suf.size() + 1 && ends_with(low, suf)) return pos;
    if (starts_upper(original)) return Pos::Noun;
    if (low.size() > 3 && low.back() == 's') return Pos::Noun;
    return Pos::Other;
}

} // namespace detail

// Deterministic coarse tagger: closed-class lists, lexicon category lookup
// with inflection stripping, local disambiguation, then suffix rules for
// unknown words. Same input always yields the same tags.
inline TaggedSentence pos_tag(const std::vector<Token>& tokens, const Lexicon& lex) {
    TaggedSentence out;
    out.tokens = tokens;

    // Whether the running clause already has a main verb; clauses restart
    // at punctuation, conjunctions and WH words.
    bool clause_has_verb = false;

    for (std::size_t i = 0; i < out.tokens.size(); ++i) {
        Token& tok = out.tokens[i];
        const std::string low = to_lower(tok.text);
        tok.is_stopword = lex.is_stopword(low);

        bool has_alnum = false, has_digit = false;
        for (char c : tok.text) {
            if (is_ascii_alpha(c) || is_ascii_digit(c)) has_alnum = true;
            if (is_ascii_digit(c)) has_digit = true;
        }
        if (!has_alnum) {
            tok.pos = Pos::Punct;
            clause_has_verb = false;
            continue;
        }
        if (has_digit) {
            tok.pos = Pos::Num;
            continue;
        }
        if (auto it = closed::word_classes().find(low); it != closed::word_classes().end()) {
            tok.pos = it->second;
            if (tok.pos == Pos::Verb || tok.pos == Pos::Aux) clause_has_verb = true;
            if (tok.pos == Pos::Wh || tok.pos == Pos::Other) clause_has_verb = false;
            continue;
        }

        std::string cands = detail::lexical_candidates(lex, low);
        const bool n = cands.find('n') != std::string::npos;
        const bool v = cands.find('v') != std::string::npos;
        const bool a = cands.find('a') != std::string::npos;
        const bool r = cands.find('r') != std::string::npos;

        Pos prev = i > 0 ? out.tokens[i - 1].pos : Pos::Other;
        bool at_start = i == 0 || out.tokens[i - 1].pos == Pos::Punct;

        auto next_is_nounish = [&]() {
            if (i + 1 >= tokens.size()) return false;
            const std::string nlow = to_lower(tokens[i + 1].text);
            if (closed::word_classes().count(nlow)) return false;
            std::string nc = detail::lexical_candidates(lex, nlow);
            return nc.find('n') != std::string::npos || starts_upper(tokens[i + 1].text);
        };

        const std::string prev_low = i > 0 ? to_lower(out.tokens[i - 1].text) : std::string();
        const bool participle = ends_with(low, "ed") || ends_with(low, "ing");

        if (cands.empty()) {
            tok.pos = detail::suffix_guess(low, tok.text);
        } else if (a && !n && !v) {
            tok.pos = Pos::Adj;
        } else if (r && !n && !v && !a) {
            tok.pos = Pos::Adv;
        } else if (n && !v) {
            // noun/adjective ambiguity
            tok.pos = (a && (next_is_nounish() || prev == Pos::Adv || prev == Pos::Aux ||
                             prev == Pos::Verb))
                          ? Pos::Adj
                          : Pos::Noun;
        } else if (v && !n) {
            // verb/adjective ambiguity; participles after an auxiliary stay verbs
            tok.pos = (a && (prev == Pos::Det || prev == Pos::Adv || next_is_nounish() ||
                             (prev == Pos::Aux && !participle)))
                          ? Pos::Adj
                          : Pos::Verb;
        } else {
            // noun/verb ambiguity
            if (prev_low == "to") {
                tok.pos = Pos::Verb;
            } else if (a && (prev == Pos::Adv || (prev == Pos::Aux && !participle) ||
                             (next_is_nounish() &&
                              (prev == Pos::Det || prev == Pos::Adj || prev == Pos::Num ||
                               prev == Pos::Verb)))) {
                tok.pos = Pos::Adj;
            } else if (prev == Pos::Det || prev == Pos::Adj || prev == Pos::Num ||
                       prev == Pos::Adp) {
                tok.pos = Pos::Noun;
            } else if (prev == Pos::Wh) {
                tok.pos = (prev_low == "what" || prev_low == "which" || prev_low == "whose")
                              ? Pos::Noun
                              : Pos::Verb;
            } else if (prev == Pos::Pron || prev == Pos::Aux || prev == Pos::Adv) {
                tok.pos = Pos::Verb;
            } else if (prev == Pos::Noun) {
                if (starts_upper(tok.text) && !at_start)
                    tok.pos = Pos::Noun;  // proper-name compounds
                else if (participle)
                    tok.pos = Pos::Verb;
                else
                    tok.pos = clause_has_verb ? Pos::Noun : Pos::Verb;
            } else if (at_start && i + 1 < tokens.size()) {
                // imperative openers: "Make the most of ..."
                const std::string nlow = to_lower(tokens[i + 1].text);
                auto it = closed::word_classes().find(nlow);
                tok.pos = (it != closed::word_classes().end() &&
                           (it->second == Pos::Det || it->second == Pos::Pron))
                              ? Pos::Verb
                              : Pos::Noun;
            } else {
                tok.pos = Pos::Noun;
            }
        }
        if (tok.pos == Pos::Verb || tok.pos == Pos::Aux) clause_has_verb = true;
    }

    if (!out.tokens.empty()) {
        const Token& last = out.tokens.back();
        if (last.pos == Pos::Punct && !last.text.empty() &&
            (last.text[0] == '.' || last.text[0] == '!' || last.text[0] == '?'))
            out.terminal_punct = out.tokens.size() - 1;
    }
    return out;
}

inline TaggedSentence tag_text(std::string_view text, const Lexicon& lex) {
    return pos_tag(tokenize(text), lex);
}

} // namespace pertcheck::textkit
