#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pertcheck/core/error.hpp"
#include "pertcheck/core/strings.hpp"

namespace pertcheck::textkit {

namespace detail {

inline const std::array<std::string_view, 20>& ones_words() {
    static const std::array<std::string_view, 20> w = {
        "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
        "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
        "seventeen", "eighteen", "nineteen"};
    return w;
}

inline const std::array<std::string_view, 10>& tens_words() {
    static const std::array<std::string_view, 10> w = {
        "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};
    return w;
}

inline void append_under_1000(std::uint64_t v, std::vector<std::string>& parts) {
    if (v >= 100) {
        parts.emplace_back(ones_words()[v / 100]);
        parts.emplace_back("hundred");
        v %= 100;
        if (v == 0) return;
    }
    if (v >= 20) {
        parts.emplace_back(tens_words()[v / 10]);
        v %= 10;
        if (v == 0) return;
    }
    if (v > 0) parts.emplace_back(ones_words()[v]);
}

} // namespace detail

// Long-form lowercase English cardinal: no "and", no hyphens, words joined
// by single spaces ("127" -> "one hundred twenty seven"). Accepts an
// optional thousands-separated digit string; anything else is a ValueError.
inline std::string number_to_words(std::string_view numeral) {
    std::string digits;
    for (char c : numeral) {
        if (is_ascii_digit(c)) {
            digits += c;
        } else if (c == ',') {
            continue;  // thousands separator
        } else {
            throw ValueError("not a number: '" + std::string(numeral) + "'");
        }
    }
    if (digits.empty()) throw ValueError("not a number: '" + std::string(numeral) + "'");
    if (digits.size() > 15) throw ValueError("numeral too large: '" + std::string(numeral) + "'");

    std::uint64_t value = 0;
    for (char c : digits) value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value == 0) return "zero";

    static const std::array<std::string_view, 5> scales = {"", "thousand", "million", "billion", "trillion"};
    std::array<std::uint64_t, 5> groups{};
    int ngroups = 0;
    while (value > 0) {
        groups[ngroups++] = value % 1000;
        value /= 1000;
    }
    std::vector<std::string> parts;
    for (int g = ngroups - 1; g >= 0; --g) {
        if (groups[g] == 0) continue;
        detail::append_under_1000(groups[g], parts);
        if (g > 0) parts.emplace_back(scales[g]);
    }
    return join(parts, " ");
}

} // namespace pertcheck::textkit
