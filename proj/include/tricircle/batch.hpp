#pragma once

#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "tricircle/common.hpp"

namespace tricircle {

struct BatchRow {
    double a = 0.0;
    double b = 0.0;
};

struct BatchParseResult {
    std::vector<BatchRow> rows;
    std::size_t warnings = 0;              // rows skipped for domain reasons
    std::vector<std::string> messages;     // one per warning
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline double parse_number(std::string_view field, std::size_t line_no) {
    field = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line_no, "malformed number '" + std::string(field) + "'");
    return value;
}

}  // namespace detail

/// CSV with header `a,b`; blank lines ignored. Malformed rows raise ParseError
/// with their 1-based line number; rows with nonpositive or non-finite legs
/// are skipped and counted as warnings.
inline BatchParseResult parse_batch(std::istream& in) {
    BatchParseResult result;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = detail::trim(line);
        if (text.empty()) continue;
        if (!header_seen) {
            if (text != "a,b") throw ParseError(line_no, "expected header 'a,b'");
            header_seen = true;
            continue;
        }
        const std::size_t comma = text.find(',');
        if (comma == std::string_view::npos)
            throw ParseError(line_no, "expected two comma-separated fields");
        if (text.find(',', comma + 1) != std::string_view::npos)
            throw ParseError(line_no, "expected exactly two fields");
        const double a = detail::parse_number(text.substr(0, comma), line_no);
        const double b = detail::parse_number(text.substr(comma + 1), line_no);
        if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
            ++result.warnings;
            result.messages.push_back("line " + std::to_string(line_no) +
                                      ": legs must be positive; row skipped");
            continue;
        }
        result.rows.push_back({a, b});
    }
    return result;
}

}  // namespace tricircle
