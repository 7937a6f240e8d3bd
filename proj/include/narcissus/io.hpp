#pragma once

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "ssyt.hpp"

// Plain-text documents. A profile document is a header line holding n
// followed by n lines, line i being voter i's ranking (most preferred first).
// A tableau document is a header line holding m followed by m rows, row i
// with m-i+1 entries. Entries are whitespace separated; lines whose first
// non-blank character is '#' are comments, and blank lines are ignored.

namespace narcissus {

enum class ParseErrorKind {
    malformed_integer,
    not_a_permutation,
    count_mismatch,
    bad_row_length,
    invalid_tableau,
};

inline const char* to_string(ParseErrorKind kind) noexcept {
    switch (kind) {
        case ParseErrorKind::malformed_integer: return "malformed-integer";
        case ParseErrorKind::not_a_permutation: return "not-a-permutation";
        case ParseErrorKind::count_mismatch: return "count-mismatch";
        case ParseErrorKind::bad_row_length: return "bad-row-length";
        case ParseErrorKind::invalid_tableau: return "invalid-tableau";
    }
    return "unknown";
}

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, int line, int column, const std::string& detail)
        : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                            to_string(kind) + ": " + detail),
          kind_(kind),
          line_(line),
          column_(column) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    ParseErrorKind kind_;
    int line_;
    int column_;
};

namespace detail {

struct Token {
    long long value;
    int column;
};

struct NumberLine {
    int line;
    std::vector<Token> tokens;
    // first token that failed to parse as an integer, if any
    int bad_column = 0;
    std::string bad_word;

    void require_well_formed() const {
        if (bad_column != 0) {
            throw ParseError(ParseErrorKind::malformed_integer, line, bad_column, "'" + bad_word + "' is not an integer");
        }
    }
};

/// Splits text into non-comment, non-blank lines of integers; line and
/// column numbers are 1-based and refer to the original text. Malformed
/// tokens are recorded, not thrown, so errors surface in document order.
inline std::vector<NumberLine> tokenize(std::string_view text) {
    std::vector<NumberLine> out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        NumberLine parsed{line_no, {}, 0, {}};
        std::size_t k = 0;
        bool comment = false;
        bool any = false;
        while (k < line.size()) {
            if (line[k] == ' ' || line[k] == '\t') {
                ++k;
                continue;
            }
            if (!any && line[k] == '#') {
                comment = true;
                break;
            }
            any = true;
            std::size_t stop = k;
            while (stop < line.size() && line[stop] != ' ' && line[stop] != '\t') ++stop;
            std::string_view word = line.substr(k, stop - k);
            long long value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc() || ptr != word.data() + word.size()) {
                if (parsed.bad_column == 0) {
                    parsed.bad_column = static_cast<int>(k) + 1;
                    parsed.bad_word = std::string(word);
                }
            } else {
                parsed.tokens.push_back({value, static_cast<int>(k) + 1});
            }
            k = stop;
        }
        if (!comment && any) out.push_back(std::move(parsed));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

inline int read_header(const std::vector<NumberLine>& lines, const char* what) {
    if (lines.empty()) throw ParseError(ParseErrorKind::count_mismatch, 1, 1, std::string("missing ") + what + " header");
    const auto& header = lines.front();
    header.require_well_formed();
    if (header.tokens.size() != 1) {
        throw ParseError(ParseErrorKind::count_mismatch, header.line, header.tokens[1].column,
                         std::string("header must hold only the ") + what);
    }
    if (header.tokens[0].value < 1 || header.tokens[0].value > 100000) {
        throw ParseError(ParseErrorKind::malformed_integer, header.line, header.tokens[0].column,
                         std::string(what) + " must be a positive integer");
    }
    return static_cast<int>(header.tokens[0].value);
}

/// Count check run after the body lines have been validated in order.
inline void require_line_count(const std::vector<NumberLine>& lines, int expected, const char* what) {
    const int got = static_cast<int>(lines.size()) - 1;
    if (got == expected) return;
    const int line = got > expected ? lines[expected + 1].line : lines.back().line + 1;
    throw ParseError(ParseErrorKind::count_mismatch, line, 1,
                     "expected " + std::to_string(expected) + " " + what + ", found " + std::to_string(got));
}

}  // namespace detail

inline PreferenceProfile parse_profile(std::string_view text) {
    const auto lines = detail::tokenize(text);
    const int n = detail::read_header(lines, "voter count");
    const int available = std::min<int>(n, static_cast<int>(lines.size()) - 1);

    std::vector<std::vector<Alternative>> rankings;
    for (int v = 1; v <= available; ++v) {
        const auto& line = lines[v];
        line.require_well_formed();
        if (static_cast<int>(line.tokens.size()) != n) {
            throw ParseError(ParseErrorKind::not_a_permutation, line.line, line.tokens.front().column,
                             "ranking has " + std::to_string(line.tokens.size()) + " entries, expected " +
                                 std::to_string(n));
        }
        std::vector<bool> seen(n + 1, false);
        std::vector<Alternative> r;
        for (const auto& tok : line.tokens) {
            if (tok.value < 1 || tok.value > n || seen[tok.value]) {
                throw ParseError(ParseErrorKind::not_a_permutation, line.line, tok.column,
                                 "ranking is not a permutation of 1.." + std::to_string(n));
            }
            seen[tok.value] = true;
            r.push_back(static_cast<Alternative>(tok.value));
        }
        rankings.push_back(std::move(r));
    }
    detail::require_line_count(lines, n, "rankings");
    return PreferenceProfile::from_rankings(rankings);
}

inline Ssyt parse_tableau(std::string_view text) {
    const auto lines = detail::tokenize(text);
    const int m = detail::read_header(lines, "tableau order");
    const int available = std::min<int>(m, static_cast<int>(lines.size()) - 1);

    TableauRows rows;
    for (int i = 1; i <= available; ++i) {
        const auto& line = lines[i];
        line.require_well_formed();
        if (static_cast<int>(line.tokens.size()) != m - i + 1) {
            throw ParseError(ParseErrorKind::bad_row_length, line.line, line.tokens.front().column,
                             "row " + std::to_string(i) + " needs " + std::to_string(m - i + 1) + " entries");
        }
        std::vector<int> row;
        for (const auto& tok : line.tokens) {
            if (tok.value < 1 || tok.value > m) {
                throw ParseError(ParseErrorKind::invalid_tableau, line.line, tok.column,
                                 "entry outside 1.." + std::to_string(m));
            }
            row.push_back(static_cast<int>(tok.value));
        }
        rows.push_back(std::move(row));
    }
    detail::require_line_count(lines, m, "rows");
    if (!validate_ssyt(rows)) {
        // point at the first cell that breaks row or column monotonicity
        for (int i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                const bool row_bad = j > 0 && rows[i][j - 1] > rows[i][j];
                const bool col_bad = i > 0 && rows[i - 1][j] >= rows[i][j];
                if (row_bad || col_bad) {
                    throw ParseError(ParseErrorKind::invalid_tableau, lines[i + 1].line, lines[i + 1].tokens[j].column,
                                     row_bad ? "row is not weakly increasing" : "column is not strictly increasing");
                }
            }
        }
    }
    return Ssyt(std::move(rows));
}

/// Comma- or whitespace-separated permutation, e.g. "1,2,3,4".
inline Axis parse_axis(std::string_view text) {
    std::string normalized(text);
    for (char& c : normalized) {
        if (c == ',') c = ' ';
    }
    const auto lines = detail::tokenize(normalized);
    if (lines.size() != 1) throw ParseError(ParseErrorKind::count_mismatch, 1, 1, "axis must be a single list");
    lines[0].require_well_formed();
    std::vector<int> seq;
    for (const auto& tok : lines[0].tokens) seq.push_back(static_cast<int>(tok.value));
    try {
        return Axis(std::move(seq));
    } catch (const Error&) {
        throw ParseError(ParseErrorKind::not_a_permutation, 1, 1, "axis is not a permutation of 1..n");
    }
}

inline std::string format_profile(const PreferenceProfile& p) {
    std::string s = std::to_string(p.size()) + "\n";
    for (const auto& order : p.orders()) {
        bool first = true;
        for (Alternative a : order.ranking()) {
            if (!first) s += ' ';
            first = false;
            s += std::to_string(a);
        }
        s += '\n';
    }
    return s;
}

inline std::string format_tableau(const Ssyt& t) {
    std::string s = std::to_string(t.order()) + "\n";
    for (const auto& row : t.rows()) {
        bool first = true;
        for (int v : row) {
            if (!first) s += ' ';
            first = false;
            s += std::to_string(v);
        }
        s += '\n';
    }
    return s;
}

}  // namespace narcissus
