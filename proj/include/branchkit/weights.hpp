#pragma once

// Weight lattices of A_{2n-1} (sl(2n)) and C_n (sp(2n)), the folding
// restriction between them, dominance tests and Weyl dimensions.
//
// Type-A weights are kept in gl coordinates (tableau contents); two
// coordinate vectors differing by a constant describe the same sl weight.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace branchkit {

enum class Type { A, C };

inline char type_char(Type t) { return t == Type::A ? 'A' : 'C'; }

/// Symplectic rank n >= 1. The type-A side has rank 2n-1.
class Rank {
public:
    explicit Rank(int n) : n_(n) {
        if (n < 1) throw invalid_input("rank must be >= 1, got " + std::to_string(n));
    }
    int get() const noexcept { return n_; }
    int a_rank() const noexcept { return 2 * n_ - 1; }
    // number of eps coordinates
    int dim(Type t) const noexcept { return t == Type::A ? 2 * n_ : n_; }
    int fundamental_count(Type t) const noexcept { return t == Type::A ? 2 * n_ - 1 : n_; }
    friend bool operator==(Rank, Rank) = default;

private:
    int n_;
};

/// Weakly decreasing list of row lengths, trailing zeros dropped.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}
    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 0) throw invalid_input("partition has a negative row");
            if (i > 0 && rows_[i] > rows_[i - 1])
                throw invalid_input("partition rows must weakly decrease");
        }
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    }

    const std::vector<int>& rows() const noexcept { return rows_; }
    int length() const noexcept { return static_cast<int>(rows_.size()); }
    bool empty() const noexcept { return rows_.empty(); }
    int size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }
    // Row i (0-based); zero past the last row.
    int operator[](int i) const noexcept {
        return i < length() ? rows_[static_cast<std::size_t>(i)] : 0;
    }

    Partition conjugate() const {
        std::vector<int> cols(rows_.empty() ? 0 : static_cast<std::size_t>(rows_[0]), 0);
        for (int r : rows_)
            for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
        return Partition(std::move(cols));
    }

    // Componentwise containment of Young diagrams.
    bool contains(const Partition& other) const noexcept {
        if (other.length() > length()) return false;
        for (int i = 0; i < other.length(); ++i)
            if (other[i] > (*this)[i]) return false;
        return true;
    }

    // Every column has even length, i.e. rows pair up: p1=p2, p3=p4, ...
    bool is_even() const noexcept {
        for (int i = 0; i < length(); i += 2)
            if ((*this)[i] != (*this)[i + 1]) return false;
        return true;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> rows_;
};

/// Total size first, then lexicographic on rows.
struct GradedLexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Coefficients over the fundamental weights of type A (2n-1 entries) or C (n).
template <Type T>
class FundamentalWeight {
public:
    FundamentalWeight(Rank n, std::vector<int> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != n.fundamental_count(T))
            throw invalid_input(std::string("type ") + type_char(T) + " weight needs " +
                                std::to_string(n.fundamental_count(T)) + " coefficients");
    }
    Rank rank() const noexcept { return n_; }
    const std::vector<int>& coeffs() const noexcept { return coeffs_; }
    bool is_dominant() const noexcept {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](int a) { return a >= 0; });
    }
    friend bool operator==(const FundamentalWeight&, const FundamentalWeight&) = default;

private:
    Rank n_;
    std::vector<int> coeffs_;
};

using FundamentalWeightA = FundamentalWeight<Type::A>;
using FundamentalWeightC = FundamentalWeight<Type::C>;

/// Coordinates in the eps basis: 2n entries for A, n for C.
template <Type T>
class EpsWeight {
public:
    EpsWeight() = default;
    explicit EpsWeight(std::vector<int> coords) : coords_(std::move(coords)) {}
    EpsWeight(std::initializer_list<int> coords) : coords_(coords) {}
    static EpsWeight zero(Rank n) {
        return EpsWeight(std::vector<int>(static_cast<std::size_t>(n.dim(T)), 0));
    }

    const std::vector<int>& coords() const noexcept { return coords_; }
    std::vector<int>& coords() noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    int operator[](std::size_t i) const { return coords_[i]; }

    EpsWeight& operator+=(const EpsWeight& o) {
        if (o.size() != size()) throw invalid_input("weight length mismatch");
        for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    friend EpsWeight operator+(EpsWeight a, const EpsWeight& b) { return a += b; }
    friend auto operator<=>(const EpsWeight&, const EpsWeight&) = default;

private:
    std::vector<int> coords_;
};

using EpsWeightA = EpsWeight<Type::A>;
using EpsWeightC = EpsWeight<Type::C>;

// rows[j] = a_j + a_{j+1} + ...
template <Type T>
Partition partition_of_weight(const FundamentalWeight<T>& w) {
    if (!w.is_dominant()) throw invalid_input("partition_of_weight: weight is not dominant");
    const auto& a = w.coeffs();
    std::vector<int> rows(a.size(), 0);
    int acc = 0;
    for (std::size_t j = a.size(); j-- > 0;) {
        acc += a[j];
        rows[j] = acc;
    }
    return Partition(std::move(rows));
}

inline void check_rows_fit(const Partition& p, Type t, Rank n) {
    if (p.length() > n.fundamental_count(t))
        throw invalid_input("partition has " + std::to_string(p.length()) +
                            " rows, more than rank " +
                            std::to_string(n.fundamental_count(t)) + " of type " +
                            type_char(t));
}

template <Type T>
FundamentalWeight<T> weight_of_partition(const Partition& p, Rank n) {
    check_rows_fit(p, T, n);
    std::vector<int> a(static_cast<std::size_t>(n.fundamental_count(T)));
    for (int i = 0; i < static_cast<int>(a.size()); ++i) a[static_cast<std::size_t>(i)] = p[i] - p[i + 1];
    return FundamentalWeight<T>(n, std::move(a));
}

/// Partition padded with zeros to an eps vector of the given type.
template <Type T>
EpsWeight<T> eps_of_partition(const Partition& p, Rank n) {
    if (p.length() > n.dim(T)) throw invalid_input("partition too long for eps coordinates");
    std::vector<int> c(static_cast<std::size_t>(n.dim(T)), 0);
    for (int i = 0; i < p.length(); ++i) c[static_cast<std::size_t>(i)] = p[i];
    return EpsWeight<T>(std::move(c));
}

/// Folding restriction: mu_hat_j = mu_j - mu_{2n+1-j}.
inline EpsWeightC res_weight(const EpsWeightA& w, Rank n) {
    const int m = 2 * n.get();
    if (static_cast<int>(w.size()) != m)
        throw invalid_input("res_weight: expected " + std::to_string(m) + " coordinates");
    std::vector<int> out(static_cast<std::size_t>(n.get()));
    for (int j = 0; j < n.get(); ++j)
        out[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)] - w[static_cast<std::size_t>(m - 1 - j)];
    return EpsWeightC(std::move(out));
}

inline bool is_dominant_A(const EpsWeightA& w) noexcept {
    return std::is_sorted(w.coords().rbegin(), w.coords().rend());
}

inline bool is_dominant_C(const EpsWeightC& w) noexcept {
    if (w.size() == 0) return true;
    return is_dominant_A(EpsWeightA(w.coords())) && w.coords().back() >= 0;
}

namespace detail {

// Exact product of fractions; every partial result is reduced so that the
// running value stays a small rational.
class ExactProduct {
public:
    void times(std::int64_t num, std::int64_t den) {
        reduce_into(num, den);
        if (__builtin_mul_overflow(num_, num, &num_) || __builtin_mul_overflow(den_, den, &den_))
            throw guard_exceeded("Weyl dimension overflows 64-bit arithmetic");
        const auto g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }
    std::int64_t value() const {
        if (den_ != 1) throw internal_error("Weyl dimension is not an integer");
        return num_;
    }

private:
    void reduce_into(std::int64_t& num, std::int64_t& den) {
        auto g = std::gcd(num, den_);
        num /= g;
        den_ /= g;
        g = std::gcd(num_, den);
        num_ /= g;
        den /= g;
    }
    std::int64_t num_ = 1;
    std::int64_t den_ = 1;
};

} // namespace detail

/// Dimension of the irreducible module with highest weight given by the
/// partition p, by the product over positive roots.
inline std::int64_t weyl_dim(const Partition& p, Type t, Rank n) {
    check_rows_fit(p, t, n);
    detail::ExactProduct prod;
    if (t == Type::A) {
        const int m = 2 * n.get();
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) prod.times(p[i] - p[j] + j - i, j - i);
    } else {
        const int k = n.get();
        // rho = (n, n-1, ..., 1)
        auto shifted = [&](int i) { return p[i] + (k - i); };
        auto rho = [&](int i) { return k - i; };
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                prod.times(shifted(i) - shifted(j), rho(i) - rho(j));
                prod.times(shifted(i) + shifted(j), rho(i) + rho(j));
            }
            prod.times(shifted(i), rho(i));
        }
    }
    return prod.value();
}

template <Type T>
std::int64_t weyl_dim(const FundamentalWeight<T>& w) {
    if (!w.is_dominant()) throw invalid_input("weyl_dim: weight is not dominant");
    return weyl_dim(partition_of_weight(w), T, w.rank());
}

// ---------------------------------------------------------------------------
// Text formats: partitions "4,1" (empty partition ""), weights "A:3,1,0".

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
    std::vector<int> out;
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty()) return out;
    while (true) {
        const auto comma = s.find(',');
        auto tok = trim(s.substr(0, comma));
        if (tok.empty()) throw invalid_input(std::string(what) + ": empty entry");
        std::size_t pos = 0;
        const bool neg = tok.front() == '-';
        if (neg) ++pos;
        if (pos == tok.size()) throw invalid_input(std::string(what) + ": bad integer '" + std::string(tok) + "'");
        long long v = 0;
        for (; pos < tok.size(); ++pos) {
            const char ch = tok[pos];
            if (ch < '0' || ch > '9')
                throw invalid_input(std::string(what) + ": bad integer '" + std::string(tok) + "'");
            v = v * 10 + (ch - '0');
            if (v > 1'000'000) throw invalid_input(std::string(what) + ": integer too large");
        }
        out.push_back(static_cast<int>(neg ? -v : v));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

inline std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace detail

inline Partition parse_partition(std::string_view s) {
    return Partition(detail::parse_int_list(s, "partition"));
}

inline std::string to_string(const Partition& p) { return detail::join_ints(p.rows()); }

template <Type T>
std::string to_string(const FundamentalWeight<T>& w) {
    return std::string(1, type_char(T)) + ":" + detail::join_ints(w.coeffs());
}

template <Type T>
std::string to_string(const EpsWeight<T>& w) {
    return "(" + detail::join_ints(w.coords()) + ")";
}

/// Parses "A:3,1,0" or "C:1,1" and returns the weight's type plus its
/// coefficient list; the caller pairs it with a rank.
inline std::pair<Type, std::vector<int>> parse_weight(std::string_view s) {
    if (s.size() < 2 || s[1] != ':' || (s[0] != 'A' && s[0] != 'C'))
        throw invalid_input("weight must look like 'A:3,1,0' or 'C:1,1'");
    return {s[0] == 'A' ? Type::A : Type::C, detail::parse_int_list(s.substr(2), "weight")};
}

} // namespace branchkit
