#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pertcheck/core/strings.hpp"
#include "pertcheck/textkit/token.hpp"

namespace pertcheck::textkit {

namespace detail {

// Abbreviations whose trailing period does not end a sentence and stays
// attached to the token. Stored lowercase.
inline const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> set = {
        "dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "jr.", "sr.",
        "vs.", "etc.", "e.g.", "i.e.", "inc.", "ltd.", "co.", "no.",
        "fig.", "gen.", "capt.", "sgt.", "rev.", "hon.", "a.m.", "p.m.",
    };
    return set;
}

// Clitics split off their host word: We're -> We 're. The n't family is
// kept attached (don't stays one token) so that negation and agreement
// tables can match whole surface forms.
inline bool is_clitic_suffix(std::string_view s) {
    static const std::array<std::string_view, 6> clitics = {"s", "re", "ll", "ve", "d", "m"};
    std::string low = to_lower(s);
    for (auto c : clitics)
        if (low == c) return true;
    return false;
}

inline bool is_word_char(char c) { return is_ascii_alpha(c) || is_ascii_digit(c); }

} // namespace detail

// Splits text into tokens carrying byte spans into the source. Guarantees:
// spans are strictly increasing and non-overlapping, the bytes between
// consecutive spans are whitespace, and each token's text equals the
// source slice, so detokenize() reproduces the input byte-for-byte.
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    auto push = [&](std::size_t b, std::size_t e) {
        Token t;
        t.text = std::string(text.substr(b, e - b));
        t.begin = b;
        t.end = e;
        tokens.push_back(std::move(t));
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (is_ascii_space(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (is_ascii_digit(c)) {
            // Digit run; , and . stay inside when flanked by digits (1,500 / 3.5).
            ++i;
            while (i < n) {
                if (is_ascii_digit(text[i])) {
                    ++i;
                } else if ((text[i] == ',' || text[i] == '.') && i + 1 < n &&
                           is_ascii_digit(text[i + 1]) && is_ascii_digit(text[i - 1])) {
                    i += 2;
                } else {
                    break;
                }
            }
            push(start, i);
        } else if (is_ascii_alpha(c)) {
            ++i;
            while (i < n && detail::is_word_char(text[i])) ++i;
            // Internal hyphen: keep hyphenated words whole.
            while (i < n && text[i] == '-' && i + 1 < n && is_ascii_alpha(text[i + 1])) {
                i += 2;
                while (i < n && detail::is_word_char(text[i])) ++i;
            }
            // Apostrophe handling.
            if (i < n && text[i] == '\'' && i + 1 < n && is_ascii_alpha(text[i + 1])) {
                std::size_t suf_start = i + 1;
                std::size_t j = suf_start;
                while (j < n && is_ascii_alpha(text[j])) ++j;
                std::string_view suffix = text.substr(suf_start, j - suf_start);
                if (to_lower(suffix) == "t" && text[i - 1] == 'n') {
                    // ...n't stays attached.
                    i = j;
                    push(start, i);
                } else if (detail::is_clitic_suffix(suffix)) {
                    push(start, i);  // host word
                    push(i, j);      // 're / 's / ...
                    i = j;
                } else {
                    // o'clock and friends: keep whole.
                    i = j;
                    push(start, i);
                }
                continue;
            }
            // Abbreviation period or acronym pattern (U.S., e.g., J.K).
            if (i < n && text[i] == '.') {
                std::string with_dot = to_lower(text.substr(start, i - start + 1));
                if (detail::abbreviations().count(with_dot)) {
                    ++i;
                    push(start, i);
                    continue;
                }
                if (i - start == 1 && i + 1 < n && is_ascii_alpha(text[i + 1])) {
                    // Alternating letter-dot run.
                    while (i < n && text[i] == '.' && i + 1 < n && is_ascii_alpha(text[i + 1])) {
                        i += 2;
                        while (i < n && is_ascii_alpha(text[i])) ++i;
                    }
                    if (i < n && text[i] == '.' && i - start > 1) ++i;
                    push(start, i);
                    continue;
                }
            }
            push(start, i);
        } else {
            // Punctuation: maximal run of the same character (handles ... and !!).
            ++i;
            while (i < n && text[i] == c && (c == '.' || c == '!' || c == '?' || c == '-')) ++i;
            push(start, i);
        }
    }
    return tokens;
}

// Rebuilds the source from tokens and their recorded whitespace gaps.
inline std::string detokenize(const std::vector<Token>& tokens, std::string_view source) {
    std::string out;
    std::size_t prev_end = 0;
    for (const Token& t : tokens) {
        out.append(source.substr(prev_end, t.begin - prev_end));
        out.append(t.text);
        prev_end = t.end;
    }
    out.append(source.substr(prev_end));
    return out;
}

// Joins token texts into a fresh sentence with conventional spacing:
// no space before closing punctuation or clitics, none after openers.
inline std::string join_tokens(const std::vector<std::string>& texts) {
    std::string out;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        const std::string& t = texts[i];
        if (t.empty()) continue;
        bool glue = out.empty();
        char c = t[0];
        if (c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':' ||
            c == ')' || c == ']' || c == '}' || c == '\'')
            glue = true;
        if (!out.empty()) {
            char p = out.back();
            if (p == '(' || p == '[' || p == '{') glue = true;
        }
        if (!glue) out += ' ';
        out += t;
    }
    return out;
}

inline std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.text);
    return out;
}

namespace detail {

inline bool sentence_boundary(std::string_view text, std::size_t dot) {
    char c = text[dot];
    if (c == '.') {
        // Look back at the word the period closes.
        std::size_t w = dot;
        while (w > 0 && (is_ascii_alpha(text[w - 1]) || text[w - 1] == '.')) --w;
        std::string word = to_lower(text.substr(w, dot - w + 1));
        if (abbreviations().count(word)) return false;
        // Single-letter initials (J. K. Rowling).
        if (dot - w == 1 && is_ascii_alpha(text[w]) && text[w] >= 'A' && text[w] <= 'Z') return false;
    }
    // Needs whitespace then a capital or digit (an optional quote may intervene).
    std::size_t j = dot + 1;
    while (j < text.size() && (text[j] == '"' || text[j] == '\'' || text[j] == ')')) ++j;
    if (j >= text.size()) return false;
    if (!is_ascii_space(text[j])) return false;
    while (j < text.size() && is_ascii_space(text[j])) ++j;
    if (j >= text.size()) return false;
    char next = text[j];
    if (next == '"' || next == '\'' || next == '(') {
        ++j;
        if (j >= text.size()) return false;
        next = text[j];
    }
    return (next >= 'A' && next <= 'Z') || is_ascii_digit(next);
}

} // namespace detail

// Splits text into sentences on ./!/? followed by whitespace and a capital,
// suppressing abbreviation periods. Trailing whitespace stays with the
// preceding sentence so that concatenating the pieces reproduces the input.
inline std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if ((c == '.' || c == '!' || c == '?') && detail::sentence_boundary(text, i)) {
            std::size_t end = i + 1;
            while (end < text.size() && (text[end] == '"' || text[end] == '\'' || text[end] == ')'))
                ++end;
            while (end < text.size() && is_ascii_space(text[end])) ++end;
            out.emplace_back(text.substr(start, end - start));
            start = end;
            i = end - 1;
        }
    }
    if (start < text.size()) out.emplace_back(text.substr(start));
    return out;
}

} // namespace pertcheck::textkit
