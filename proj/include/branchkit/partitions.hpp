#pragma once

#include <algorithm>
#include <vector>

#include "weights.hpp"

namespace branchkit {

namespace detail {

template <class F>
void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& cur, F& f) {
    if (remaining == 0) {
        f(Partition(cur));
        return;
    }
    if (rows_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, rows_left - 1, cur, f);
        cur.pop_back();
    }
}

} // namespace detail

/// Partitions of `size` with at most max_rows rows, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int size, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto push = [&](Partition p) { out.push_back(std::move(p)); };
    detail::partitions_rec(size, size, max_rows, cur, push);
    return out;
}

/// All partitions with size <= max_size and at most max_rows rows, graded-lex ascending.
inline std::vector<Partition> partitions_up_to(int max_size, int max_rows) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        auto ps = partitions_of(s, max_rows);
        std::sort(ps.begin(), ps.end());
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

/// All nu contained in outer with at most max_rows rows, graded-lex ascending.
inline std::vector<Partition> partitions_inside(const Partition& outer, int max_rows) {
    std::vector<Partition> out;
    const int rows = std::min(outer.length(), max_rows);
    std::vector<int> cur(static_cast<std::size_t>(rows), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == rows) {
            out.emplace_back(cur);
            return;
        }
        const int cap = i == 0 ? outer[0] : std::min(outer[i], cur[static_cast<std::size_t>(i - 1)]);
        for (int v = 0; v <= cap; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

// lambda = a*omega_1 + omega_k: one long first row, every other row of length 1.
inline bool is_hook(const Partition& p) { return p[1] <= 1; }

// lambda = a*omega_k: all rows equal.
inline bool is_rectangle(const Partition& p) {
    return std::all_of(p.rows().begin(), p.rows().end(), [&](int r) { return r == p[0]; });
}

} // namespace branchkit
