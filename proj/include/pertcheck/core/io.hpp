#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pertcheck/core/error.hpp"
#include "pertcheck/core/rng.hpp"
#include "pertcheck/core/strings.hpp"

namespace pertcheck {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::string body = read_file(path);
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == '\n') {
            std::string_view line(body.data() + start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (i > start || i < body.size()) lines.emplace_back(line);
            start = i + 1;
        }
    }
    return lines;
}

inline std::string file_hash_hex(const std::string& path) {
    std::uint64_t h = fnv1a64(read_file(path));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

// Iterates the data rows of a #-commented, tab-separated file.
// Calls fn(line_number, fields) for every non-empty, non-comment line.
template <typename Fn>
void for_each_tsv_row(const std::string& path, Fn&& fn) {
    auto lines = read_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = trim(lines[i]);
        if (line.empty() || line[0] == '#') continue;
        fn(i + 1, split(line, '\t'));
    }
}

} // namespace pertcheck
