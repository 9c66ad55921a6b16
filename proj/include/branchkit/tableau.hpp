#pragma once

// Letters, words, (skew) semistandard tableaux and their word paths.
//
// Letters are plain ints. Type A letters are 1..2n with the usual order.
// Type C letters are +v for v and -v for v-bar (1 <= v <= n), ordered
// 1 < 2 < ... < n < n-bar < ... < 1-bar.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "weights.hpp"

namespace branchkit {

// Strict order on letters of the given alphabet.
inline bool letter_less(Type t, int a, int b) noexcept {
    if (t == Type::A) return a < b;
    if ((a > 0) != (b > 0)) return a > 0;
    return a < b;
}

inline bool letter_valid(Type t, Rank n, int v) noexcept {
    if (t == Type::A) return v >= 1 && v <= 2 * n.get();
    return v != 0 && v >= -n.get() && v <= n.get();
}

inline std::string letter_to_string(int v) {
    return v > 0 ? std::to_string(v) : std::to_string(-v) + "~";
}

struct Word {
    Type alphabet = Type::A;
    Rank rank{1};
    std::vector<int> letters;

    Word(Type t, Rank n, std::vector<int> ls) : alphabet(t), rank(n), letters(std::move(ls)) {
        for (int v : letters)
            if (!letter_valid(t, n, v))
                throw invalid_input("letter " + letter_to_string(v) + " outside the alphabet");
    }
    std::size_t size() const noexcept { return letters.size(); }
    friend bool operator==(const Word&, const Word&) = default;
};

/// Straight or skew tableau. rows()[r] lists the filled cells of row r,
/// i.e. columns inner[r] .. outer[r]-1.
class Tableau {
public:
    using Rows = std::vector<std::vector<int>>;

    Tableau(Type t, Rank n, Partition outer, Partition inner, Rows rows)
        : type_(t), rank_(n), outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
        validate();
    }

    // Straight shape read off the row lengths.
    static Tableau straight(Type t, Rank n, Rows rows) {
        std::vector<int> lens;
        for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
        return Tableau(t, n, Partition(std::move(lens)), Partition{}, std::move(rows));
    }

    struct unchecked_t {};
    static constexpr unchecked_t unchecked{};
    Tableau(unchecked_t, Type t, Rank n, Partition outer, Partition inner, Rows rows)
        : type_(t), rank_(n), outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {}

    Type type() const noexcept { return type_; }
    Rank rank() const noexcept { return rank_; }
    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    const Rows& rows() const noexcept { return rows_; }
    int row_count() const noexcept { return outer_.length(); }
    bool is_skew() const noexcept { return !inner_.empty(); }

    bool is_blank(int r, int c) const noexcept { return c < inner_[r]; }
    // Entry at (row, column), 0-based; 0 for a blank cell.
    int at(int r, int c) const {
        if (r >= row_count() || c >= outer_[r]) throw invalid_input("cell outside the tableau");
        return is_blank(r, c) ? 0 : rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner_[r])];
    }
    // Filled entries of column c, top to bottom.
    std::vector<int> column(int c) const {
        std::vector<int> out;
        for (int r = 0; r < row_count() && c < outer_[r]; ++r)
            if (!is_blank(r, c)) out.push_back(at(r, c));
        return out;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.type_ == b.type_ && a.rank_ == b.rank_ && a.outer_ == b.outer_ &&
               a.inner_ == b.inner_ && a.rows_ == b.rows_;
    }
    // Lexicographic on (outer, inner, row-major entries); for comparing
    // tableaux of one alphabet and rank.
    friend bool operator<(const Tableau& a, const Tableau& b) {
        if (a.outer_ != b.outer_) return a.outer_ < b.outer_;
        if (a.inner_ != b.inner_) return a.inner_ < b.inner_;
        const auto flat = [](const Rows& rs) {
            std::vector<int> f;
            for (const auto& r : rs) f.insert(f.end(), r.begin(), r.end());
            return f;
        };
        const auto fa = flat(a.rows_), fb = flat(b.rows_);
        return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                            [&](int x, int y) { return letter_less(a.type_, x, y); });
    }

private:
    void validate() const {
        if (!outer_.contains(inner_)) throw invalid_input("inner shape not contained in outer shape");
        if (static_cast<int>(rows_.size()) != outer_.length())
            throw invalid_input("row count does not match the outer shape");
        for (int r = 0; r < row_count(); ++r) {
            const auto& row = rows_[static_cast<std::size_t>(r)];
            if (static_cast<int>(row.size()) != outer_[r] - inner_[r])
                throw invalid_input("row " + std::to_string(r + 1) + " has the wrong number of entries");
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (!letter_valid(type_, rank_, row[i]))
                    throw invalid_input("letter " + letter_to_string(row[i]) + " outside the alphabet");
                if (i > 0 && letter_less(type_, row[i], row[i - 1]))
                    throw invalid_input("rows must weakly increase");
            }
            if (r == 0) continue;
            for (int c = inner_[r]; c < outer_[r]; ++c)
                if (!is_blank(r - 1, c) && !letter_less(type_, at(r - 1, c), at(r, c)))
                    throw invalid_input("columns must strictly increase");
        }
    }

    Type type_;
    Rank rank_;
    Partition outer_;
    Partition inner_;
    Rows rows_;
};

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

// Backtracking over all semistandard fillings of outer/inner with letters
// 1..max_letter, cells in row-major order, smallest letter first. The
// visiting order is therefore lexicographic on row-major entries.
template <class F>
void for_each_skew_filling(const Partition& outer, const Partition& inner, int max_letter, F&& visit) {
    const int nrows = outer.length();
    Tableau::Rows rows(static_cast<std::size_t>(nrows));
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < nrows; ++r) {
        rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer[r] - inner[r]), 0);
        for (int c = inner[r]; c < outer[r]; ++c) cells.emplace_back(r, c);
    }
    const Partition cols = outer.conjugate();
    auto get = [&](int r, int c) -> int& {
        return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner[r])];
    };
    const std::size_t total = cells.size();
    std::function<void(std::size_t)> step = [&](std::size_t k) {
        if (k == total) {
            visit(static_cast<const Tableau::Rows&>(rows));
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 1;
        if (c > inner[r]) lo = std::max(lo, get(r, c - 1));
        if (r > 0 && c >= inner[r - 1]) lo = std::max(lo, get(r - 1, c) + 1);
        const int hi = max_letter - (cols[c] - r - 1);
        for (int v = lo; v <= hi; ++v) {
            get(r, c) = v;
            step(k + 1);
        }
    };
    step(0);
}

} // namespace detail

inline Rank rank_for_letters(int max_letter) { return Rank(std::max(1, (max_letter + 1) / 2)); }

/// All semistandard Young tableaux of a straight shape, letters 1..max_letter,
/// lexicographic on row-major entries. The tableaux carry rank ceil(max_letter/2).
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_letter) {
    std::vector<Tableau> out;
    if (shape.length() > max_letter) return out;
    const Rank n = rank_for_letters(max_letter);
    detail::for_each_skew_filling(shape, Partition{}, max_letter, [&](const Tableau::Rows& rows) {
        out.emplace_back(Tableau::unchecked, Type::A, n, shape, Partition{}, rows);
    });
    return out;
}

inline std::vector<Tableau> enumerate_skew_semistandard(const Partition& outer, const Partition& inner,
                                                        int max_letter) {
    if (!outer.contains(inner)) throw invalid_input("inner shape is not contained in outer shape");
    std::vector<Tableau> out;
    const Partition cols = outer.conjugate();
    // A column longer than the alphabet admits no filling.
    for (int c = 0; c < outer[0]; ++c)
        if (cols[c] - inner.conjugate()[c] > max_letter) return out;
    const Rank n = rank_for_letters(std::max(1, max_letter));
    detail::for_each_skew_filling(outer, inner, max_letter, [&](const Tableau::Rows& rows) {
        out.emplace_back(Tableau::unchecked, Type::A, n, outer, inner, rows);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Words and paths

/// Rows read right to left, top to bottom; blank cells skipped.
inline Word word(const Tableau& t) {
    std::vector<int> ls;
    for (const auto& row : t.rows()) ls.insert(ls.end(), row.rbegin(), row.rend());
    return Word(t.type(), t.rank(), std::move(ls));
}

// v <= n stays, n < v <= 2n becomes (2n-v+1)-bar.
inline int res_letter(int v, Rank n) {
    if (v < 1 || v > 2 * n.get()) throw invalid_input("letter " + std::to_string(v) + " out of range for restriction");
    return v <= n.get() ? v : -(2 * n.get() - v + 1);
}

inline Word res_word(const Word& w, Rank n) {
    if (w.alphabet != Type::A) throw invalid_input("res_word expects a type A word");
    std::vector<int> ls;
    ls.reserve(w.size());
    for (int v : w.letters) ls.push_back(res_letter(v, n));
    return Word(Type::C, n, std::move(ls));
}

inline Tableau res_tableau(const Tableau& t, Rank n) {
    if (t.type() != Type::A) throw invalid_input("res_tableau expects a type A tableau");
    Tableau::Rows rows = t.rows();
    for (auto& row : rows)
        for (auto& v : row) v = res_letter(v, n);
    return Tableau(Type::C, n, t.outer(), t.inner(), std::move(rows));
}

/// Prefix weights of the word path, one per letter.
struct PathTrace {
    Type type;
    std::vector<std::vector<int>> prefix_weights;

    std::vector<int> endpoint(std::size_t dim) const {
        return prefix_weights.empty() ? std::vector<int>(dim, 0) : prefix_weights.back();
    }
};

inline PathTrace path_trace(const Word& w) {
    const std::size_t dim = static_cast<std::size_t>(w.rank.dim(w.alphabet));
    PathTrace p{w.alphabet, {}};
    p.prefix_weights.reserve(w.size());
    std::vector<int> cur(dim, 0);
    for (int v : w.letters) {
        if (v > 0) ++cur[static_cast<std::size_t>(v - 1)];
        else --cur[static_cast<std::size_t>(-v - 1)];
        p.prefix_weights.push_back(cur);
    }
    return p;
}

/// Every prefix weight lies in the dominant chamber. Checking prefixes is
/// enough: each step moves one coordinate linearly.
inline bool is_dominant_word(const Word& w) {
    const auto trace = path_trace(w);
    for (const auto& p : trace.prefix_weights) {
        const bool ok = w.alphabet == Type::A ? is_dominant_A(EpsWeightA(p)) : is_dominant_C(EpsWeightC(p));
        if (!ok) return false;
    }
    return true;
}

inline EpsWeightA content(const Word& w) {
    if (w.alphabet != Type::A) throw invalid_input("content expects a type A word");
    return EpsWeightA(path_trace(w).endpoint(static_cast<std::size_t>(w.rank.dim(Type::A))));
}

inline EpsWeightC endpoint(const Word& w) {
    if (w.alphabet != Type::C) throw invalid_input("endpoint expects a type C word");
    return EpsWeightC(path_trace(w).endpoint(static_cast<std::size_t>(w.rank.dim(Type::C))));
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson and Sundaram tableaux

namespace detail {

// Lattice (Yamanouchi) condition on a type A word over an unbounded
// alphabet: every prefix has at least as many k as k+1.
inline bool is_lattice(const std::vector<int>& letters, std::vector<int>* content_out = nullptr) {
    std::vector<int> cnt;
    for (int v : letters) {
        if (v < 1) return false;
        if (static_cast<int>(cnt.size()) < v) cnt.resize(static_cast<std::size_t>(v), 0);
        ++cnt[static_cast<std::size_t>(v - 1)];
        if (v > 1 && cnt[static_cast<std::size_t>(v - 1)] > cnt[static_cast<std::size_t>(v - 2)]) return false;
    }
    if (content_out) *content_out = std::move(cnt);
    return true;
}

} // namespace detail

/// Semistandard skew tableau whose word is dominant of weight eta.
inline bool is_lr(const Tableau& t, const Partition& eta) {
    if (t.type() != Type::A) return false;
    std::vector<int> cnt;
    if (!detail::is_lattice(word(t).letters, &cnt)) return false;
    return Partition(cnt) == eta;
}

/// LR tableau with the extra condition: 2i+1 never strictly below row n+i,
/// for 0 <= i <= floor(l(eta)/2). Rows are 1-based from the top.
inline bool is_sundaram(const Tableau& t, const Partition& eta, Rank n) {
    if (!is_lr(t, eta)) return false;
    const int imax = eta.length() / 2;
    for (int r = 0; r < t.row_count(); ++r) {
        const int row1 = r + 1;
        for (int v : t.rows()[static_cast<std::size_t>(r)]) {
            if (v % 2 == 0) continue;
            const int i = (v - 1) / 2;
            if (i <= imax && row1 > n.get() + i) return false;
        }
    }
    return true;
}

/// Every semistandard filling of outer/inner whose word is a lattice word,
/// of any weight. Letters are bounded by the number of rows of outer, since
/// a letter k in a lattice tableau needs a k-1 strictly above it.
/// Cells are filled in reading order so the lattice condition prunes early;
/// the result is sorted lexicographically.
inline std::vector<Tableau> enumerate_lr(const Partition& outer, const Partition& inner, Rank n) {
    if (!outer.contains(inner)) throw invalid_input("inner shape is not contained in outer shape");
    const int nrows = outer.length();
    const int max_letter = std::max(1, nrows);
    Tableau::Rows rows(static_cast<std::size_t>(nrows));
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < nrows; ++r) {
        rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer[r] - inner[r]), 0);
        for (int c = outer[r] - 1; c >= inner[r]; --c) cells.emplace_back(r, c);
    }
    auto get = [&](int r, int c) -> int& {
        return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner[r])];
    };
    std::vector<int> cnt(static_cast<std::size_t>(max_letter + 1), 0);
    std::vector<Tableau> out;
    std::function<void(std::size_t)> step = [&](std::size_t k) {
        if (k == cells.size()) {
            out.emplace_back(Tableau::unchecked, Type::A, n, outer, inner, rows);
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 1;
        if (r > 0 && c >= inner[r - 1] && c < outer[r - 1]) lo = get(r - 1, c) + 1;
        int hi = max_letter;
        if (c + 1 < outer[r]) hi = std::min(hi, get(r, c + 1));
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && cnt[static_cast<std::size_t>(v)] + 1 > cnt[static_cast<std::size_t>(v - 1)]) continue;
            ++cnt[static_cast<std::size_t>(v)];
            get(r, c) = v;
            step(k + 1);
            --cnt[static_cast<std::size_t>(v)];
        }
    };
    step(0);
    for (const auto& t : out)
        for (const auto& row : t.rows())
            for (int v : row)
                if (!letter_valid(Type::A, n, v))
                    throw invalid_input("rank too small for the letters of an LR tableau of this shape");
    std::sort(out.begin(), out.end());
    return out;
}

inline Partition lr_weight(const Tableau& t) {
    std::vector<int> cnt;
    detail::is_lattice(word(t).letters, &cnt);
    return Partition(cnt);
}

inline Rank lr_rank(const Partition& lambda) { return rank_for_letters(std::max(1, lambda.length())); }

/// c^lambda_{nu,eta}: number of LR tableaux of shape lambda/nu and weight eta.
inline std::int64_t lr_coeff(const Partition& lambda, const Partition& nu, const Partition& eta) {
    if (!lambda.contains(nu)) throw invalid_input("lr_coeff: nu is not contained in lambda");
    if (lambda.size() != nu.size() + eta.size()) return 0;
    std::int64_t count = 0;
    for (const auto& t : enumerate_lr(lambda, nu, lr_rank(lambda)))
        if (lr_weight(t) == eta) ++count;
    return count;
}

/// c^lambda_{nu,eta}(S): the same count restricted to n-symplectic Sundaram tableaux.
inline std::int64_t lrs_coeff(const Partition& lambda, const Partition& nu, const Partition& eta, Rank n) {
    if (!lambda.contains(nu)) throw invalid_input("lrs_coeff: nu is not contained in lambda");
    if (lambda.size() != nu.size() + eta.size()) return 0;
    std::int64_t count = 0;
    for (const auto& t : enumerate_lr(lambda, nu, lr_rank(lambda)))
        if (lr_weight(t) == eta && is_sundaram(t, eta, n)) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Even shape attached to a tableau with dominant restricted word

/// Blank cells per column of res(t): each barred l in a column is blanked
/// together with the unbarred l of the same column.
inline std::vector<int> eta_blank_counts(const Tableau& t, Rank n) {
    if (t.type() != Type::A || t.is_skew()) throw invalid_input("eta_of expects a straight type A tableau");
    const Tableau rt = res_tableau(t, n);
    if (!is_dominant_word(word(rt))) throw invalid_input("eta_of: restricted word is not dominant");
    const int ncols = t.outer()[0];
    std::vector<int> blanks(static_cast<std::size_t>(ncols), 0);
    for (int c = 0; c < ncols; ++c) {
        const auto col = rt.column(c);
        for (int v : col) {
            if (v > 0) continue;
            if (std::find(col.begin(), col.end(), -v) == col.end())
                throw internal_error("eta_of: barred letter without a partner in its column");
            blanks[static_cast<std::size_t>(c)] += 2;
        }
    }
    return blanks;
}

/// Partition whose column lengths are the per-column blank counts, sorted.
inline Partition eta_of(const Tableau& t, Rank n) {
    auto blanks = eta_blank_counts(t, n);
    std::sort(blanks.begin(), blanks.end(), std::greater<>());
    return Partition(std::move(blanks)).conjugate();
}

// ---------------------------------------------------------------------------
// Text formats. Tableau: rows split by '/', entries by spaces, bars as '~',
// blank skew cells as '.'. Words: space separated letters.

inline std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += letter_to_string(w.letters[i]);
    }
    return out;
}

inline std::string to_string(const Tableau& t) {
    std::string out;
    for (int r = 0; r < t.row_count(); ++r) {
        if (r) out += '/';
        for (int c = 0; c < t.outer()[r]; ++c) {
            if (c) out += ' ';
            out += t.is_blank(r, c) ? std::string(".") : letter_to_string(t.at(r, c));
        }
    }
    return out;
}

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline int parse_letter(const std::string& tok, Type t) {
    std::string digits = tok;
    bool bar = false;
    if (!digits.empty() && digits.back() == '~') {
        bar = true;
        digits.pop_back();
    }
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw invalid_input("bad letter '" + tok + "'");
    if (bar && t == Type::A) throw invalid_input("barred letter '" + tok + "' in a type A word");
    const int v = std::stoi(digits);
    return bar ? -v : v;
}

} // namespace detail

/// Parses a word. A single token made only of digits is split into one
/// letter per digit when every letter of the alphabet is one digit (2n <= 9),
/// so "121223341" and "1 2 1 2 2 3 3 4 1" are the same word.
inline Word parse_word(std::string_view s, Type t, Rank n) {
    auto toks = detail::split_ws(s);
    if (toks.size() == 1 && toks[0].size() > 1 && 2 * n.get() <= 9 &&
        std::all_of(toks[0].begin(), toks[0].end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        std::vector<std::string> chars;
        for (char ch : toks[0]) chars.emplace_back(1, ch);
        toks = std::move(chars);
    }
    std::vector<int> ls;
    for (const auto& tok : toks) ls.push_back(detail::parse_letter(tok, t));
    return Word(t, n, std::move(ls));
}

inline Tableau parse_tableau(std::string_view s, Type t, Rank n) {
    Tableau::Rows rows;
    std::vector<int> outer, inner;
    if (!detail::split_ws(s).empty()) {
        std::size_t start = 0;
        while (true) {
            const auto slash = s.find('/', start);
            const auto toks = detail::split_ws(s.substr(start, slash == std::string_view::npos ? slash : slash - start));
            std::vector<int> row;
            int blanks = 0;
            for (const auto& tok : toks) {
                if (tok == ".") {
                    if (!row.empty()) throw invalid_input("blank cell after a filled cell");
                    ++blanks;
                } else {
                    row.push_back(detail::parse_letter(tok, t));
                }
            }
            outer.push_back(static_cast<int>(toks.size()));
            inner.push_back(blanks);
            rows.push_back(std::move(row));
            if (slash == std::string_view::npos) break;
            start = slash + 1;
        }
    }
    return Tableau(t, n, Partition(outer), Partition(inner), std::move(rows));
}

} // namespace branchkit
