#pragma once

#include <optional>
#include <vector>

#include "big_count.hpp"
#include "error.hpp"
#include "stream.hpp"

namespace narcissus {

using TableauRows = std::vector<std::vector<int>>;

/// Shape and filling rules for a staircase tableau of order m:
///   m rows, row i with m-i+1 entries in 1..m,
///   rows weakly increasing, columns strictly increasing.
inline bool validate_ssyt(const TableauRows& rows) {
    const int m = static_cast<int>(rows.size());
    if (m < 1) return false;
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[i].size()) != m - i) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const int v = rows[i][j];
            if (v < 1 || v > m) return false;
            if (j > 0 && rows[i][j - 1] > v) return false;
            if (i > 0 && rows[i - 1][j] >= v) return false;
        }
    }
    return true;
}

/// Semi-standard Young tableau of staircase shape. Always valid.
class Ssyt {
public:
    explicit Ssyt(TableauRows rows) : rows_(std::move(rows)) {
        detail::require(validate_ssyt(rows_), ErrorCode::invalid_argument, "not a semi-standard staircase tableau");
    }

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    const TableauRows& rows() const noexcept { return rows_; }

    /// T(i, j), 1-based; unchecked.
    int at(int i, int j) const noexcept { return rows_[i - 1][j - 1]; }

    friend bool operator==(const Ssyt&, const Ssyt&) = default;
    friend auto operator<=>(const Ssyt&, const Ssyt&) = default;

private:
    TableauRows rows_;
};

struct HookTable {
    int order;
    TableauRows lengths;
    TableauRows contents;
};

/// h(i,j) = 2(m-i-j)+3 and c(i,j) = m-i+j on the staircase of order m.
inline HookTable hook_table(int m) {
    detail::require(m >= 1, ErrorCode::invalid_argument, "order must be at least 1");
    HookTable t{m, {}, {}};
    for (int i = 1; i <= m; ++i) {
        std::vector<int> h, c;
        for (int j = 1; j <= m - i + 1; ++j) {
            h.push_back(2 * (m - i - j) + 3);
            c.push_back(m - i + j);
        }
        t.lengths.push_back(std::move(h));
        t.contents.push_back(std::move(c));
    }
    return t;
}

/// Hook-content formula: product of c(i,j)/h(i,j) over all cells, in exact
/// rational arithmetic.
inline BigCount count_ssyt_hook_formula(int m) {
    const HookTable t = hook_table(m);
    Fraction product(1, 1);
    for (int i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < t.lengths[i].size(); ++j) product *= Fraction(t.contents[i][j], t.lengths[i][j]);
    }
    detail::require(product.is_integral(), ErrorCode::internal_error, "hook-content product is not integral");
    return product.numerator();
}

/// 2^C(m,2).
inline BigCount count_ssyt_closed(int m) {
    detail::require(m >= 1, ErrorCode::invalid_argument, "order must be at least 1");
    return power_of_two(choose_two(static_cast<unsigned long long>(m)));
}

/// Every tableau of order m, lexicographic in row-major reading.
///
/// Column strictness within 1..m bounds cell (i,j) by i+j-1, and any prefix
/// that respects those bounds extends to a full tableau by filling each later
/// cell with max(left, above+1). Advancing therefore bumps the last cell
/// below its bound and refills everything after it minimally.
class SsytEnumerator {
public:
    using value_type = Ssyt;

    explicit SsytEnumerator(int m) {
        detail::require(m >= 1, ErrorCode::invalid_argument, "order must be at least 1");
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= m - i + 1; ++j) cells_.push_back({i, j});
        }
        rows_.resize(m);
        for (int i = 0; i < m; ++i) rows_[i].assign(m - i, 0);
        fill_from(0);
    }

    std::optional<Ssyt> next() {
        if (done_) return std::nullopt;
        if (!started_) {
            started_ = true;
            return Ssyt(rows_);
        }
        for (int k = static_cast<int>(cells_.size()) - 1; k >= 0; --k) {
            auto [i, j] = cells_[k];
            int& v = rows_[i - 1][j - 1];
            if (v < i + j - 1) {
                ++v;
                fill_from(k + 1);
                return Ssyt(rows_);
            }
        }
        done_ = true;
        return std::nullopt;
    }

private:
    struct Cell {
        int i, j;
    };

    void fill_from(std::size_t first) {
        for (std::size_t k = first; k < cells_.size(); ++k) {
            auto [i, j] = cells_[k];
            int v = 1;
            if (j > 1) v = std::max(v, rows_[i - 1][j - 2]);
            if (i > 1) v = std::max(v, rows_[i - 2][j - 1] + 1);
            rows_[i - 1][j - 1] = v;
        }
    }

    std::vector<Cell> cells_;
    TableauRows rows_;
    bool started_ = false;
    bool done_ = false;
};

inline Stream<SsytEnumerator> enumerate_ssyt(int m) { return Stream<SsytEnumerator>(SsytEnumerator(m)); }

}  // namespace narcissus
