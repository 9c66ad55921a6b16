#pragma once

// Restriction of sl(2n) irreducibles to sp(2n): the dominant restricted
// path count, the Sundaram tableau count, the character oracle, and the
// explicit bijection between the first two for shapes with at most three
// rows.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "characters.hpp"
#include "error.hpp"
#include "partitions.hpp"
#include "tableau.hpp"
#include "weights.hpp"

namespace branchkit {

enum class Method { paths, sundaram, character };

inline const char* method_name(Method m) {
    switch (m) {
    case Method::paths: return "paths";
    case Method::sundaram: return "sundaram";
    case Method::character: return "character";
    }
    return "?";
}

inline Method parse_method(std::string_view s) {
    if (s == "paths") return Method::paths;
    if (s == "sundaram") return Method::sundaram;
    if (s == "character") return Method::character;
    throw invalid_input("unknown method '" + std::string(s) + "' (paths|sundaram|character)");
}

struct BranchResult {
    Rank n;
    Partition lambda;
    Method method;
    Decomposition multiplicities; // nu_hat -> multiplicity, zero entries omitted
};

// ---------------------------------------------------------------------------
// Dominant restricted tableaux

/// Tableaux in SSYT(lambda, 2n) whose restricted word path stays dominant.
/// Cells are filled in reading order so dominance prunes the search.
/// A full column of height 2n is allowed; it restricts to a closed loop.
inline std::vector<Tableau> domres(const Partition& lambda, Rank n) {
    if (lambda.length() > 2 * n.get())
        throw invalid_input("partition has " + std::to_string(lambda.length()) + " rows, more than 2n = " +
                            std::to_string(2 * n.get()));
    const int nrows = lambda.length();
    const int top = 2 * n.get();
    const Partition cols = lambda.conjugate();
    Tableau::Rows rows(static_cast<std::size_t>(nrows));
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < nrows; ++r) {
        rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[r]), 0);
        for (int c = lambda[r] - 1; c >= 0; --c) cells.emplace_back(r, c);
    }
    std::vector<int> mu(static_cast<std::size_t>(n.get()), 0);
    std::vector<Tableau> out;
    auto at = [&](int r, int c) -> int& { return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
    std::function<void(std::size_t)> step = [&](std::size_t k) {
        if (k == cells.size()) {
            out.emplace_back(Tableau::unchecked, Type::A, n, lambda, Partition{}, rows);
            return;
        }
        const auto [r, c] = cells[k];
        const int lo = r > 0 ? at(r - 1, c) + 1 : 1;
        int hi = top - (cols[c] - r - 1);
        if (c + 1 < lambda[r]) hi = std::min(hi, at(r, c + 1));
        for (int v = lo; v <= hi; ++v) {
            const int letter = res_letter(v, n);
            const auto idx = static_cast<std::size_t>(std::abs(letter) - 1);
            bool ok;
            if (letter > 0) {
                ++mu[idx];
                ok = idx == 0 || mu[idx - 1] >= mu[idx];
            } else {
                --mu[idx];
                ok = idx + 1 < mu.size() ? mu[idx] >= mu[idx + 1] : mu[idx] >= 0;
            }
            if (ok) {
                at(r, c) = v;
                step(k + 1);
            }
            mu[idx] += letter > 0 ? -1 : 1;
        }
    };
    step(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Endpoint of the restricted path of t, as a dominant C_n weight.
inline Partition restricted_endpoint(const Tableau& t, Rank n) {
    const auto e = endpoint(res_word(word(t), n));
    if (!is_dominant_C(e)) throw invalid_input("restricted endpoint is not dominant");
    return Partition(e.coords());
}

inline std::vector<Tableau> domres_nu(const Partition& lambda, const Partition& nu_hat, Rank n) {
    require_c_highest(nu_hat, n);
    std::vector<Tableau> out;
    for (auto& t : domres(lambda, n))
        if (restricted_endpoint(t, n) == nu_hat) out.push_back(std::move(t));
    return out;
}

// ---------------------------------------------------------------------------
// The three branching computations

inline BranchResult branch_paths(const Partition& lambda, Rank n) {
    BranchResult res{n, lambda, Method::paths, {}};
    for (const auto& t : domres(lambda, n)) ++res.multiplicities[restricted_endpoint(t, n)];
    return res;
}

/// N_{lambda,nu} = sum over even eta of the Sundaram tableau counts of
/// shape lambda/nu and weight eta.
inline BranchResult branch_sundaram(const Partition& lambda, Rank n) {
    check_rows_fit(lambda, Type::A, n);
    BranchResult res{n, lambda, Method::sundaram, {}};
    for (const auto& nu : partitions_inside(lambda, n.get())) {
        std::int64_t count = 0;
        for (const auto& t : enumerate_lr(lambda, nu, n)) {
            const auto eta = lr_weight(t);
            if (eta.is_even() && is_sundaram(t, eta, n)) ++count;
        }
        if (count > 0) res.multiplicities[nu] = count;
    }
    return res;
}

inline BranchResult branch_character(const Partition& lambda, Rank n) {
    check_rows_fit(lambda, Type::A, n);
    return {n, lambda, Method::character, decompose_C(restrict_char(char_A(lambda, n), n), n)};
}

inline BranchResult branch(const Partition& lambda, Rank n, Method m) {
    switch (m) {
    case Method::paths: return branch_paths(lambda, n);
    case Method::sundaram: return branch_sundaram(lambda, n);
    case Method::character: return branch_character(lambda, n);
    }
    throw invalid_input("unknown method");
}

/// Sum of mult(nu) * dim L(nu) over the result.
inline std::int64_t branched_dimension(const BranchResult& r) {
    std::int64_t total = 0;
    for (const auto& [nu, k] : r.multiplicities) total += k * weyl_dim(nu, Type::C, r.n);
    return total;
}

// Scope covered by the proven cases: n <= 2, at most three rows, hooks and
// rectangles.
inline bool in_proven_scope(const Partition& lambda, Rank n) {
    return n.get() <= 2 || lambda.length() <= 3 || is_hook(lambda) || is_rectangle(lambda);
}

struct Discrepancy {
    Partition nu;
    std::int64_t paths = 0;
    std::int64_t sundaram = 0;
    std::int64_t character = 0;
};

struct ConjectureReport {
    Rank n;
    Partition lambda;
    BranchResult paths;
    BranchResult sundaram;
    BranchResult character;
    bool agree = true;
    std::vector<Discrepancy> discrepancies;
};

inline ConjectureReport check_conjecture(const Partition& lambda, Rank n) {
    ConjectureReport rep{n, lambda, branch_paths(lambda, n), branch_sundaram(lambda, n), branch_character(lambda, n),
                         true, {}};
    std::set<Partition, GradedLexLess> keys;
    for (const auto* r : {&rep.paths, &rep.sundaram, &rep.character})
        for (const auto& [nu, k] : r->multiplicities) keys.insert(nu);
    auto get = [](const BranchResult& r, const Partition& nu) -> std::int64_t {
        const auto it = r.multiplicities.find(nu);
        return it == r.multiplicities.end() ? 0 : it->second;
    };
    for (const auto& nu : keys) {
        Discrepancy d{nu, get(rep.paths, nu), get(rep.sundaram, nu), get(rep.character, nu)};
        if (d.paths != d.sundaram || d.paths != d.character) {
            rep.agree = false;
            rep.discrepancies.push_back(std::move(d));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Column census and the bijection for shapes with at most three rows

/// Columns of a dominant restricted tableau with at most three rows are
/// [1], [1,2] or one of the four counted templates:
///   m1: [1,2,2n]   m2: [1,2,2n-1]   m3: [1,2n]   m4: [1,2,3]
/// For n = 2 the m2 and m4 templates coincide, so m2 = m4.
struct ColumnCounts {
    int m1 = 0;
    int m2 = 0;
    int m3 = 0;
    int m4 = 0;
    int m() const noexcept { return m1 + m2 + m3; }
    friend bool operator==(const ColumnCounts&, const ColumnCounts&) = default;
};

inline bool phi_in_scope(const Partition& lambda, Rank n) {
    return lambda.length() <= 3 && lambda.length() <= n.a_rank();
}

inline ColumnCounts column_census(const Tableau& t, Rank n) {
    if (t.type() != Type::A || t.is_skew()) throw invalid_input("column_census expects a straight type A tableau");
    if (!phi_in_scope(t.outer(), n)) throw invalid_input("column_census needs a shape with at most three rows");
    if (!is_dominant_word(res_word(word(t), n))) throw invalid_input("column_census: tableau is not in domres");
    const int top = 2 * n.get();
    using Col = std::vector<int>;
    ColumnCounts cc;
    for (int c = 0; c < t.outer()[0]; ++c) {
        const Col col = t.column(c);
        if (col == Col{1} || col == Col{1, 2}) continue;
        bool matched = false;
        if (col == Col{1, 2, top}) cc.m1 += 1, matched = true;
        if (col == Col{1, 2, top - 1}) cc.m2 += 1, matched = true;
        if (col == Col{1, top}) cc.m3 += 1, matched = true;
        if (col == Col{1, 2, 3}) cc.m4 += 1, matched = true;
        if (!matched) throw invalid_input("column_census: column outside the admissible templates");
    }
    const auto& lam = t.outer();
    if (cc.m1 > lam[0] - lam[1]) throw internal_error("column_census: m1 exceeds lambda_1 - lambda_2");
    return cc;
}

struct PhiImage {
    Partition eta;
    Tableau lr;
    friend bool operator==(const PhiImage& a, const PhiImage& b) { return a.eta == b.eta && a.lr == b.lr; }
    friend bool operator<(const PhiImage& a, const PhiImage& b) {
        if (a.eta != b.eta) return a.eta < b.eta;
        return a.lr < b.lr;
    }
};

/// domres(lambda, nu) -> LR(lambda/eta_T, nu): row 1 of the skew shape gets
/// 1s, row 2 gets 2s, row 3 gets (from the right) m4 threes, m1 twos, then 1s.
inline PhiImage phi(const Tableau& t, Rank n) {
    const ColumnCounts cc = column_census(t, n);
    const Partition& lam = t.outer();
    const int m = cc.m();
    if (m > lam[1]) throw internal_error("phi: eta has more columns than lambda_2");
    const Partition eta{m, m};
    if (eta != eta_of(t, n)) throw internal_error("phi: census disagrees with eta_of");
    Tableau::Rows rows;
    if (lam.length() >= 1) rows.emplace_back(static_cast<std::size_t>(lam[0] - m), 1);
    if (lam.length() >= 2) rows.emplace_back(static_cast<std::size_t>(lam[1] - m), 2);
    if (lam.length() >= 3) {
        const int threes = n.get() == 2 ? 0 : cc.m4;
        const int ones = lam[2] - threes - cc.m1;
        if (ones < 0) throw internal_error("phi: third row overfull");
        std::vector<int> row(static_cast<std::size_t>(ones), 1);
        row.insert(row.end(), static_cast<std::size_t>(cc.m1), 2);
        row.insert(row.end(), static_cast<std::size_t>(threes), 3);
        rows.push_back(std::move(row));
    }
    PhiImage img{eta, Tableau(Type::A, n, lam, eta, std::move(rows))};
    if (!is_lr(img.lr, restricted_endpoint(t, n))) throw internal_error("phi: image is not an LR tableau of weight nu");
    return img;
}

/// Inverse of phi: solve for the column census from the number of 1s, 2s
/// and 3s in l and the number of columns of eta, then rebuild the tableau.
inline Tableau phi_inverse(const Tableau& l, const Partition& eta, Rank n) {
    const Partition& lam = l.outer();
    if (l.type() != Type::A) throw invalid_input("phi_inverse expects a type A tableau");
    if (!phi_in_scope(lam, n)) throw invalid_input("phi_inverse needs a shape with at most three rows");
    if (l.inner() != eta) throw invalid_input("phi_inverse: tableau's inner shape differs from eta");
    if (!eta.is_even() || eta.length() > 2) throw invalid_input("phi_inverse: eta must be an even shape (b,b)");
    const Partition nu = lr_weight(l);
    if (!is_lr(l, nu) || nu.length() > n.get()) throw invalid_input("phi_inverse: not an LR tableau with nu of <= n rows");

    int l1 = 0, l2 = 0, l3 = 0;
    for (const auto& row : l.rows())
        for (int v : row) (v == 1 ? l1 : v == 2 ? l2 : l3) += 1;
    const int lam1 = lam[0], lam2 = lam[1], lam3 = lam[2];
    const int m = eta[0];
    if (m < lam1 - l1 || m < lam2 - l2 || lam1 + lam2 < m + l1 + l2)
        throw invalid_input("phi_inverse: census system has no non-negative solution");
    ColumnCounts cc;
    cc.m2 = m - lam1 + l1;
    cc.m3 = lam1 + lam2 - l1 - l2 - m;
    cc.m1 = l2 - lam2 + m;
    cc.m4 = n.get() == 2 ? cc.m2 : l3;

    const int top = 2 * n.get();
    Tableau::Rows rows;
    if (lam.length() >= 1) rows.emplace_back(static_cast<std::size_t>(lam1), 1);
    if (lam.length() >= 2) {
        std::vector<int> row(static_cast<std::size_t>(lam2 - cc.m3), 2);
        row.insert(row.end(), static_cast<std::size_t>(cc.m3), top);
        rows.push_back(std::move(row));
    }
    if (lam.length() >= 3) {
        const int threes = n.get() == 2 ? 0 : cc.m4;
        if (threes + cc.m2 + cc.m1 != lam3) throw invalid_input("phi_inverse: third row does not match the census");
        std::vector<int> row(static_cast<std::size_t>(threes), 3);
        row.insert(row.end(), static_cast<std::size_t>(cc.m2), top - 1);
        row.insert(row.end(), static_cast<std::size_t>(cc.m1), top);
        rows.push_back(std::move(row));
    } else if (cc.m1 + cc.m2 != 0) {
        throw invalid_input("phi_inverse: census needs a third row");
    }
    Tableau t(Type::A, n, lam, Partition{}, std::move(rows));
    if (!is_dominant_word(res_word(word(t), n))) throw invalid_input("phi_inverse: rebuilt tableau is not in domres");
    return t;
}

// ---------------------------------------------------------------------------
// Bijection audit

struct BijectionRow {
    Partition nu;
    std::int64_t domres_count = 0;
    std::int64_t lr_union_count = 0;  // sum over even eta of |LR(lambda/eta, nu)|
    std::int64_t lrs_union_count = 0; // same with the Sundaram condition
};

struct BijectionReport {
    BijectionReport(Rank rank, Partition lam) : n(rank), lambda(std::move(lam)) {}

    Rank n;
    Partition lambda;
    bool in_scope = false;
    std::vector<BijectionRow> rows;
    bool counts_equal = true;     // domres vs LR union, every nu
    bool lrs_counts_equal = true; // domres vs LRS union, every nu
    // Only meaningful when in_scope.
    bool phi_injective = false;
    bool phi_into_union = false;
    bool phi_surjective = false;
    bool inverse_left = false;  // phi_inverse(phi(t)) == t
    bool inverse_right = false; // phi(phi_inverse(l)) == l
    std::vector<std::string> problems;

    bool bijective() const {
        return in_scope && phi_injective && phi_into_union && phi_surjective && inverse_left && inverse_right;
    }
    // Outside the proven scope only the counts are compared, and not asserted.
    bool ok() const { return !in_scope || (counts_equal && bijective()); }
};

inline BijectionReport bijection_check(const Partition& lambda, Rank n) {
    check_rows_fit(lambda, Type::A, n);
    BijectionReport rep(n, lambda);
    rep.in_scope = phi_in_scope(lambda, n);

    std::map<Partition, std::vector<Tableau>, GradedLexLess> dom;
    for (auto& t : domres(lambda, n)) dom[restricted_endpoint(t, n)].push_back(std::move(t));

    std::map<Partition, std::vector<PhiImage>, GradedLexLess> lr_union;
    std::map<Partition, std::int64_t, GradedLexLess> lrs_count;
    for (const auto& eta : partitions_inside(lambda, lambda.length())) {
        if (!eta.is_even()) continue;
        for (auto& l : enumerate_lr(lambda, eta, n)) {
            const auto nu = lr_weight(l);
            if (nu.length() > n.get()) continue;
            if (is_sundaram(l, nu, n)) ++lrs_count[nu];
            lr_union[nu].push_back(PhiImage{eta, std::move(l)});
        }
    }

    std::set<Partition, GradedLexLess> keys;
    for (const auto& [nu, v] : dom) keys.insert(nu);
    for (const auto& [nu, v] : lr_union) keys.insert(nu);
    for (const auto& nu : keys) {
        BijectionRow row{nu};
        if (auto it = dom.find(nu); it != dom.end()) row.domres_count = static_cast<std::int64_t>(it->second.size());
        if (auto it = lr_union.find(nu); it != lr_union.end())
            row.lr_union_count = static_cast<std::int64_t>(it->second.size());
        if (auto it = lrs_count.find(nu); it != lrs_count.end()) row.lrs_union_count = it->second;
        if (row.domres_count != row.lr_union_count) rep.counts_equal = false;
        if (row.domres_count != row.lrs_union_count) rep.lrs_counts_equal = false;
        rep.rows.push_back(std::move(row));
    }
    if (!rep.in_scope) return rep;

    rep.phi_injective = rep.phi_into_union = rep.phi_surjective = rep.inverse_left = rep.inverse_right = true;
    auto note = [&](bool& flag, const std::string& msg) {
        flag = false;
        rep.problems.push_back(msg);
    };
    for (const auto& nu : keys) {
        const auto& ts = dom[nu];
        const auto& ls = lr_union[nu];
        const std::set<PhiImage> target(ls.begin(), ls.end());
        std::set<PhiImage> image;
        for (const auto& t : ts) {
            try {
                auto img = phi(t, n);
                if (!target.contains(img)) note(rep.phi_into_union, "phi(" + to_string(t) + ") lands outside the LR union");
                if (!image.insert(img).second) note(rep.phi_injective, "phi not injective at " + to_string(t));
                if (phi_inverse(img.lr, img.eta, n) != t)
                    note(rep.inverse_left, "phi_inverse(phi(t)) != t for " + to_string(t));
            } catch (const error& e) {
                note(rep.phi_into_union, "phi(" + to_string(t) + ") failed: " + e.what());
            }
        }
        if (image != target) note(rep.phi_surjective, "phi image differs from the LR union for nu=" + to_string(nu));
        for (const auto& img : ls) {
            try {
                const auto t = phi_inverse(img.lr, img.eta, n);
                if (!(phi(t, n) == img)) note(rep.inverse_right, "phi(phi_inverse(l)) != l for " + to_string(img.lr));
            } catch (const error& e) {
                note(rep.inverse_right, "phi_inverse(" + to_string(img.lr) + ") failed: " + e.what());
            }
        }
    }
    return rep;
}

} // namespace branchkit
