#pragma once

// Exact characters: type A from Gelfand-Tsetlin patterns, type C from
// Freudenthal's multiplicity recursion, and decomposition of a C_n
// character into irreducibles by peeling off highest weights.
//
// Nothing here touches the tableau code; this is the independent oracle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "error.hpp"
#include "weights.hpp"

namespace branchkit {

struct Character {
    Type type = Type::A;
    Rank rank{1};
    std::map<std::vector<int>, std::int64_t> weights;

    std::int64_t mass() const {
        std::int64_t m = 0;
        for (const auto& [w, k] : weights) m += k;
        return m;
    }
    std::int64_t mult(const std::vector<int>& w) const {
        const auto it = weights.find(w);
        return it == weights.end() ? 0 : it->second;
    }
    friend bool operator==(const Character&, const Character&) = default;
};

using Decomposition = std::map<Partition, std::int64_t, GradedLexLess>;

// Upper bound on the number of candidate weights a character computation
// may touch.
inline constexpr std::int64_t kMaxCharacterWeights = 4'000'000;

namespace detail {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        if (__builtin_mul_overflow(r, n - k + i, &r)) return INT64_MAX;
        r /= i;
    }
    return r;
}

// Character of the gl(k) module with highest weight mu (at most k rows),
// as a map from k-coordinate contents to multiplicities. Branching to
// gl(k-1) runs over partitions interlacing mu.
class GtCharacters {
public:
    const std::map<std::vector<int>, std::int64_t>& of(int k, const Partition& mu) {
        const auto key = std::make_pair(k, mu);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::map<std::vector<int>, std::int64_t> out;
        if (mu.length() <= k) {
            if (k == 1) {
                out[{mu[0]}] = 1;
            } else {
                std::vector<int> nu(static_cast<std::size_t>(k - 1), 0);
                interlacing(mu, k, 0, nu, out);
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    void interlacing(const Partition& mu, int k, int i, std::vector<int>& nu,
                     std::map<std::vector<int>, std::int64_t>& out) {
        if (i == k - 1) {
            const Partition sub(nu);
            const int last = mu.size() - sub.size();
            for (const auto& [w, m] : of(k - 1, sub)) {
                auto ext = w;
                ext.push_back(last);
                out[ext] += m;
            }
            return;
        }
        for (int v = mu[i + 1]; v <= mu[i]; ++v) {
            nu[static_cast<std::size_t>(i)] = v;
            interlacing(mu, k, i + 1, nu, out);
        }
    }

    std::map<std::pair<int, Partition>, std::map<std::vector<int>, std::int64_t>> memo_;
};

} // namespace detail

/// Character of the sl(2n) module L(lambda) in gl coordinates: the
/// multiplicity of mu is the number of semistandard tableaux of shape
/// lambda with content mu (Kostka number).
inline Character char_A(const Partition& lambda, Rank n) {
    const int m = 2 * n.get();
    if (lambda.length() > m) throw invalid_input("char_A: lambda has more than 2n rows");
    if (detail::binomial(lambda.size() + m - 1, m - 1) > kMaxCharacterWeights)
        throw guard_exceeded("char_A: too many weights for lambda=" + to_string(lambda));
    detail::GtCharacters gt;
    return Character{Type::A, n, gt.of(m, lambda)};
}

/// Weightwise push-forward along res_weight.
inline Character restrict_char(const Character& c, Rank n) {
    if (c.type != Type::A) throw invalid_input("restrict_char expects a type A character");
    Character out{Type::C, n, {}};
    for (const auto& [w, k] : c.weights) out.weights[res_weight(EpsWeightA(w), n).coords()] += k;
    return out;
}

/// Positive roots of C_n in eps coordinates: e_i - e_j, e_i + e_j (i<j), 2e_i.
struct RootSystemC {
    Rank n;
    std::vector<std::vector<int>> positive_roots;
    std::vector<int> rho;

    explicit RootSystemC(Rank rank) : n(rank) {
        const int k = rank.get();
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                std::vector<int> minus(static_cast<std::size_t>(k), 0), plus(static_cast<std::size_t>(k), 0);
                minus[static_cast<std::size_t>(i)] = 1;
                minus[static_cast<std::size_t>(j)] = -1;
                plus[static_cast<std::size_t>(i)] = 1;
                plus[static_cast<std::size_t>(j)] = 1;
                positive_roots.push_back(std::move(minus));
                positive_roots.push_back(std::move(plus));
            }
            std::vector<int> longr(static_cast<std::size_t>(k), 0);
            longr[static_cast<std::size_t>(i)] = 2;
            positive_roots.push_back(std::move(longr));
        }
        rho.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) rho[static_cast<std::size_t>(i)] = k - i;
    }
};

namespace detail {

inline std::int64_t dot(const std::vector<int>& a, const std::vector<int>& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
    return s;
}

// Weyl group of C_n acts by signed permutations.
inline std::vector<int> dominant_rep(std::vector<int> w) {
    for (auto& x : w) x = std::abs(x);
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

// For dominant mu: highest - mu lies in the positive root cone.
inline bool below(const std::vector<int>& mu, const std::vector<int>& highest) {
    int partial = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        partial += highest[i] - mu[i];
        if (partial < 0) return false;
    }
    return partial % 2 == 0;
}

} // namespace detail

/// Freudenthal recursion for one highest weight, memoized over dominant weights.
class FreudenthalC {
public:
    FreudenthalC(const Partition& highest, Rank n) : roots_(n), highest_(eps_of_partition<Type::C>(highest, n).coords()) {
        std::vector<int> hr(highest_.size());
        for (std::size_t i = 0; i < hr.size(); ++i) hr[i] = highest_[i] + roots_.rho[i];
        norm_highest_ = detail::dot(hr, hr);
    }

    std::int64_t mult(const std::vector<int>& weight) {
        if (weight.size() != highest_.size()) throw invalid_input("freudenthal: weight has the wrong length");
        return mult_dominant(detail::dominant_rep(weight));
    }

    const std::vector<int>& highest() const noexcept { return highest_; }

private:
    std::int64_t mult_dominant(const std::vector<int>& mu) {
        if (mu == highest_) return 1;
        if (!detail::below(mu, highest_)) return 0;
        if (auto it = memo_.find(mu); it != memo_.end()) return it->second;
        std::vector<int> shifted(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) shifted[i] = mu[i] + roots_.rho[i];
        const std::int64_t lhs = norm_highest_ - detail::dot(shifted, shifted);
        if (lhs <= 0) throw internal_error("freudenthal: non-positive Casimir difference");
        std::int64_t rhs = 0;
        for (const auto& alpha : roots_.positive_roots) {
            std::vector<int> w = mu;
            while (true) {
                for (std::size_t i = 0; i < w.size(); ++i) w[i] += alpha[i];
                const auto rep = detail::dominant_rep(w);
                if (!detail::below(rep, highest_)) break;
                rhs += mult_dominant(rep) * detail::dot(w, alpha);
            }
        }
        rhs *= 2;
        if (rhs % lhs != 0) throw internal_error("freudenthal: non-integral multiplicity");
        const std::int64_t m = rhs / lhs;
        memo_.emplace(mu, m);
        return m;
    }

    RootSystemC roots_;
    std::vector<int> highest_;
    std::int64_t norm_highest_ = 0;
    std::map<std::vector<int>, std::int64_t> memo_;
};

inline void require_c_highest(const Partition& nu_hat, Rank n) {
    if (nu_hat.length() > n.get())
        throw invalid_input("C_n highest weight must have at most n rows, got " + to_string(nu_hat));
}

inline std::int64_t freudenthal_mult(const Partition& nu_hat, const EpsWeightC& mu_hat, Rank n) {
    require_c_highest(nu_hat, n);
    FreudenthalC f(nu_hat, n);
    return f.mult(mu_hat.coords());
}

namespace detail {

// Dominant weights mu_1 >= ... >= mu_n >= 0 of L(highest).
inline void dominant_weights_below(const std::vector<int>& highest, std::size_t i, int cap, std::vector<int>& cur,
                                   std::vector<std::vector<int>>& out) {
    if (i == cur.size()) {
        if (below(cur, highest)) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= cap; ++v) {
        cur[i] = v;
        dominant_weights_below(highest, i + 1, v, cur, out);
    }
}

// Distinct signed permutations of a dominant weight.
inline std::vector<std::vector<int>> orbit(std::vector<int> mu) {
    std::vector<std::vector<int>> out;
    std::sort(mu.begin(), mu.end());
    do {
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < mu.size(); ++i)
            if (mu[i] != 0) nz.push_back(i);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nz.size()); ++mask) {
            auto w = mu;
            for (std::size_t b = 0; b < nz.size(); ++b)
                if (mask >> b & 1) w[nz[b]] = -w[nz[b]];
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(mu.begin(), mu.end()));
    return out;
}

} // namespace detail

inline Character char_C(const Partition& nu_hat, Rank n) {
    require_c_highest(nu_hat, n);
    const auto top = eps_of_partition<Type::C>(nu_hat, n).coords();
    const int cap = top.empty() ? 0 : top[0];
    if (detail::binomial(cap + n.get(), n.get()) > kMaxCharacterWeights)
        throw guard_exceeded("char_C: too many weights for " + to_string(nu_hat));
    std::vector<std::vector<int>> dominant;
    std::vector<int> cur(static_cast<std::size_t>(n.get()), 0);
    detail::dominant_weights_below(top, 0, cap, cur, dominant);
    FreudenthalC f(nu_hat, n);
    Character out{Type::C, n, {}};
    for (const auto& mu : dominant) {
        const auto m = f.mult(mu);
        if (m == 0) continue;
        for (auto& w : detail::orbit(mu)) out.weights.emplace(std::move(w), m);
    }
    return out;
}

namespace detail {

inline bool is_dominant_c(const std::vector<int>& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return w.empty() || w.back() >= 0;
}

// total degree, then lexicographic
inline bool graded_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    const auto sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa < sb;
    return a < b;
}

} // namespace detail

/// Peels irreducible C_n characters off c, highest weight first.
inline Decomposition decompose_C(const Character& c, Rank n) {
    if (c.type != Type::C) throw invalid_input("decompose_C expects a type C character");
    auto rest = c.weights;
    Decomposition out;
    while (true) {
        const std::vector<int>* top = nullptr;
        for (const auto& [w, k] : rest) {
            if (k < 0) throw internal_error("decompose_C: negative multiplicity, input is not a character");
            if (k > 0 && detail::is_dominant_c(w) && (!top || detail::graded_lex_less(*top, w))) top = &w;
        }
        if (!top) break;
        const Partition hw(*top);
        const std::int64_t k = rest.at(*top);
        out[hw] += k;
        for (const auto& [w, m] : char_C(hw, n).weights) {
            auto& slot = rest[w];
            slot -= k * m;
            if (slot < 0) throw internal_error("decompose_C: negative multiplicity, input is not a character");
        }
        std::erase_if(rest, [](const auto& kv) { return kv.second == 0; });
    }
    if (!rest.empty()) throw internal_error("decompose_C: leftover weights with no dominant representative");
    return out;
}

/// Sum of k * char_C(nu) over a decomposition.
inline Character expand_C(const Decomposition& d, Rank n) {
    Character out{Type::C, n, {}};
    for (const auto& [nu, k] : d)
        for (const auto& [w, m] : char_C(nu, n).weights) out.weights[w] += k * m;
    return out;
}

} // namespace branchkit
