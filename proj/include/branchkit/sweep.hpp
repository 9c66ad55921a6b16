#pragma once

// Exhaustive conjecture sweeps over all dominant lambda in a range, spread
// over a worker pool. Results are stored by input position, so the report
// does not depend on scheduling.

#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "branching.hpp"
#include "json_io.hpp"
#include "partitions.hpp"

namespace branchkit {

enum class Format { text, json, csv };

inline Format parse_format(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw invalid_input("unknown format '" + std::string(s) + "' (text|json|csv)");
}

inline constexpr int kGuardMaxRank = 4;
inline constexpr int kGuardMaxSize = 12;

struct SweepConfig {
    int n_min = 2;
    int n_max = 2;
    int max_size = 6;
    std::optional<int> max_rows; // defaults to 2n-1
    bool strict = false;
    int threads = 1;
    Format format = Format::text;
    bool unguarded = false;
};

inline void validate(const SweepConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw invalid_input("bad n range");
    if (cfg.max_size < 0) throw invalid_input("max-size must be >= 0");
    if (cfg.max_rows && *cfg.max_rows < 0) throw invalid_input("max-rows must be >= 0");
    if (cfg.threads < 1) throw invalid_input("threads must be >= 1");
    if (cfg.unguarded) return;
    if (cfg.n_max > kGuardMaxRank)
        throw guard_exceeded("n > " + std::to_string(kGuardMaxRank) + " needs --unguarded");
    if (cfg.max_size > kGuardMaxSize)
        throw guard_exceeded("max-size > " + std::to_string(kGuardMaxSize) + " needs --unguarded");
}

enum class SweepStatus { agree, disagree, skipped };

inline const char* status_name(SweepStatus s) {
    switch (s) {
    case SweepStatus::agree: return "agree";
    case SweepStatus::disagree: return "disagree";
    case SweepStatus::skipped: return "skipped";
    }
    return "?";
}

struct SweepEntry {
    int n = 0;
    Partition lambda;
    bool proven = false;
    SweepStatus status = SweepStatus::skipped;
    std::string skip_reason;
    std::optional<ConjectureReport> report;
    double seconds = 0;
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    double seconds = 0;

    int count(SweepStatus s) const {
        int k = 0;
        for (const auto& e : entries) k += e.status == s;
        return k;
    }
    int proven_disagreements() const {
        int k = 0;
        for (const auto& e : entries) k += e.status == SweepStatus::disagree && e.proven;
        return k;
    }
    // 0 all good, 1 a disagreement that matters under the given strictness
    int exit_code(bool strict) const {
        if (proven_disagreements() > 0) return 1;
        if (strict && count(SweepStatus::disagree) > 0) return 1;
        return 0;
    }
};

inline std::vector<SweepEntry> sweep_instances(const SweepConfig& cfg) {
    std::vector<SweepEntry> out;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const Rank rank(n);
        const int rows = std::min(cfg.max_rows.value_or(rank.a_rank()), rank.a_rank());
        for (auto& lam : partitions_up_to(cfg.max_size, rows)) {
            SweepEntry e;
            e.n = n;
            e.proven = in_proven_scope(lam, rank);
            e.lambda = std::move(lam);
            out.push_back(std::move(e));
        }
    }
    return out;
}

inline SweepReport run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    SweepReport rep;
    rep.entries = sweep_instances(cfg);
    const auto start = std::chrono::steady_clock::now();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rep.entries.size(); i = next++) {
            auto& e = rep.entries[i];
            const auto t0 = std::chrono::steady_clock::now();
            try {
                e.report = check_conjecture(e.lambda, Rank(e.n));
                e.status = e.report->agree ? SweepStatus::agree : SweepStatus::disagree;
            } catch (const guard_exceeded& ex) {
                e.status = SweepStatus::skipped;
                e.skip_reason = ex.what();
            }
            e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const int nthreads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(rep.entries.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Rendering. Timing is left out so output is byte-identical across runs.

inline std::string render_text(const SweepReport& rep) {
    std::ostringstream os;
    for (const auto& e : rep.entries) {
        os << "n=" << e.n << " lambda=" << to_string(e.lambda) << ' ' << status_name(e.status)
           << (e.proven ? " [proven]" : " [open]");
        if (e.status == SweepStatus::skipped) os << " (" << e.skip_reason << ')';
        os << '\n';
        if (e.report)
            for (const auto& d : e.report->discrepancies)
                os << "  nu=" << to_string(d.nu) << " paths=" << d.paths << " sundaram=" << d.sundaram
                   << " character=" << d.character << '\n';
    }
    os << "summary: " << rep.entries.size() << " instances, " << rep.count(SweepStatus::agree) << " agree, "
       << rep.count(SweepStatus::disagree) << " disagree, " << rep.count(SweepStatus::skipped)
       << " skipped; disagreements in proven scope: " << rep.proven_disagreements() << '\n';
    return os.str();
}

inline ordered_json to_json(const SweepReport& rep) {
    ordered_json j;
    auto arr = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json x;
        x["n"] = e.n;
        x["lambda"] = to_string(e.lambda);
        x["status"] = status_name(e.status);
        x["proven"] = e.proven;
        if (e.status == SweepStatus::skipped) x["reason"] = e.skip_reason;
        if (e.report) {
            x["multiplicities"] = multiplicities_json(e.report->paths.multiplicities);
            auto d = ordered_json::array();
            for (const auto& w : e.report->discrepancies)
                d.push_back({{"nu", to_string(w.nu)},
                             {"paths", w.paths},
                             {"sundaram", w.sundaram},
                             {"character", w.character}});
            x["discrepancies"] = std::move(d);
        }
        arr.push_back(std::move(x));
    }
    j["instances"] = std::move(arr);
    j["totals"] = {{"instances", rep.entries.size()},
                   {"agree", rep.count(SweepStatus::agree)},
                   {"disagree", rep.count(SweepStatus::disagree)},
                   {"skipped", rep.count(SweepStatus::skipped)},
                   {"proven_disagreements", rep.proven_disagreements()}};
    return j;
}

// n, lambda, nu, mult_paths, mult_sundaram, mult_character, agree
inline std::string render_csv(const SweepReport& rep) {
    std::ostringstream os;
    os << "n,lambda,nu,mult_paths,mult_sundaram,mult_character,agree\n";
    for (const auto& e : rep.entries) {
        if (!e.report) continue;
        const auto& r = *e.report;
        std::set<Partition, GradedLexLess> keys;
        for (const auto* b : {&r.paths, &r.sundaram, &r.character})
            for (const auto& [nu, k] : b->multiplicities) keys.insert(nu);
        auto get = [](const BranchResult& b, const Partition& nu) -> std::int64_t {
            const auto it = b.multiplicities.find(nu);
            return it == b.multiplicities.end() ? 0 : it->second;
        };
        for (const auto& nu : keys) {
            const auto p = get(r.paths, nu), s = get(r.sundaram, nu), c = get(r.character, nu);
            os << e.n << ",\"" << to_string(e.lambda) << "\",\"" << to_string(nu) << "\"," << p << ',' << s << ','
               << c << ',' << (p == s && p == c ? "true" : "false") << '\n';
        }
    }
    return os.str();
}

inline std::string render(const SweepReport& rep, Format f) {
    switch (f) {
    case Format::text: return render_text(rep);
    case Format::json: return to_json(rep).dump(2) + "\n";
    case Format::csv: return render_csv(rep);
    }
    return {};
}

} // namespace branchkit
