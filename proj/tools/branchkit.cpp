// branchkit: command line front end.
//
// Exit codes: 0 success/agreement, 1 mathematical disagreement,
// 2 usage error, 3 resource guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "branchkit/branchkit.hpp"
#include "branchkit/json_io.hpp"
#include "branchkit/sweep.hpp"

namespace bk = branchkit;

namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Output {
    std::string path;
    std::ostringstream buf;

    int flush(int code) {
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path);
            if (!f) {
                std::cerr << "error: cannot write " << path << '\n';
                return kExitUsage;
            }
            f << buf.str();
        }
        return code;
    }
};

void guard_instance(const bk::Partition& lambda, int n, bool unguarded) {
    if (unguarded) return;
    if (n > bk::kGuardMaxRank)
        throw bk::guard_exceeded("n > " + std::to_string(bk::kGuardMaxRank) + " needs --unguarded");
    if (lambda.size() > bk::kGuardMaxSize)
        throw bk::guard_exceeded("|lambda| > " + std::to_string(bk::kGuardMaxSize) + " needs --unguarded");
}

std::string branch_table(const bk::BranchResult& r) {
    std::ostringstream os;
    os << "n=" << r.n.get() << " lambda=" << bk::to_string(r.lambda) << " method=" << bk::method_name(r.method) << '\n';
    for (const auto& [nu, k] : r.multiplicities) os << "  (" << bk::to_string(nu) << ") x " << k << '\n';
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Branching sl(2n) -> sp(2n): dominant restricted paths, Sundaram tableaux and a character oracle"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    app.footer(
        "Formats:\n"
        "  partition   comma-separated rows, e.g. \"4,1\"; empty partition \"\"\n"
        "  weight      type-prefixed fundamental coefficients, e.g. \"A:3,1,0\", \"C:1,1\"\n"
        "  word        space-separated letters, bars as '~', e.g. \"1 2 2~ 1~\"\n"
        "  tableau     rows split by '/', entries by spaces, '~' bars, '.' blank skew cells\n"
        "  branch JSON {\"n\",\"lambda\",\"method\",\"multiplicities\":[{\"nu\",\"mult\"}]}\n"
        "  check CSV   n,lambda,nu,mult_paths,mult_sundaram,mult_character,agree\n"
        "Exit codes: 0 ok, 1 disagreement, 2 usage error, 3 resource guard.");

    Output out;
    int n = 2;
    std::string lambda_s, nu_s, eta_s, word_s, weight_s, method_s = "paths", type_s = "A", format_s = "text";
    bool json = false, csv = false, unguarded = false, strict = false, list = false, sundaram = false,
         dump_char = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out.path, "Write output to this file instead of stdout");
        sub->add_flag("--unguarded", unguarded, "Lift the n <= 4, |lambda| <= 12 guards");
    };

    auto* restrict_cmd = app.add_subcommand("restrict-word", "Restrict a type A word to the C_n alphabet");
    restrict_cmd->add_option("--n", n, "Symplectic rank n")->required();
    restrict_cmd->add_option("word", word_s, "Word, e.g. \"1 2 1 2 2 3 3 4 1\" or 121223341")->required();
    add_common(restrict_cmd);

    auto* domres_cmd = app.add_subcommand("domres", "List tableaux whose restricted word path is dominant");
    domres_cmd->add_option("--n", n, "Symplectic rank n")->required();
    domres_cmd->add_option("--lambda", lambda_s, "Shape lambda")->required();
    domres_cmd->add_option("--nu", nu_s, "Only tableaux whose restricted endpoint is nu");
    domres_cmd->add_option("--format", format_s, "text|json");
    domres_cmd->add_flag("--json", json, "Same as --format json");
    add_common(domres_cmd);

    auto* branch_cmd = app.add_subcommand("branch", "Branching multiplicities of L(lambda)");
    branch_cmd->add_option("--n", n, "Symplectic rank n")->required();
    branch_cmd->add_option("--lambda", lambda_s, "Shape lambda")->required();
    branch_cmd->add_option("--method", method_s, "paths|sundaram|character");
    branch_cmd->add_option("--format", format_s, "text|json");
    branch_cmd->add_flag("--json", json, "Same as --format json");
    branch_cmd->add_flag("--dump-character", dump_char, "Also print the restricted character as JSON");
    add_common(branch_cmd);

    bk::SweepConfig cfg;
    std::optional<int> n_single, max_rows;
    auto* check_cmd = app.add_subcommand("check", "Compare all three methods over every lambda in a range");
    check_cmd->add_option("--n", n_single, "Single rank n (same as --n-min n --n-max n)");
    check_cmd->add_option("--n-min", cfg.n_min, "Smallest rank");
    check_cmd->add_option("--n-max", cfg.n_max, "Largest rank");
    check_cmd->add_option("--max-size", cfg.max_size, "Largest |lambda|");
    check_cmd->add_option("--max-rows", max_rows, "Row bound (default 2n-1)");
    check_cmd->add_flag("--strict", strict, "Fail on disagreement outside the proven scope too");
    check_cmd->add_option("--threads", cfg.threads, "Worker count")->envname("BRANCHKIT_THREADS");
    check_cmd->add_option("--format", format_s, "text|json|csv");
    check_cmd->add_flag("--json", json, "Same as --format json");
    check_cmd->add_flag("--csv", csv, "Same as --format csv");
    add_common(check_cmd);

    auto* bij_cmd = app.add_subcommand("bijection", "Audit the explicit bijection for one lambda");
    bij_cmd->add_option("--n", n, "Symplectic rank n")->required();
    bij_cmd->add_option("--lambda", lambda_s, "Shape lambda")->required();
    bij_cmd->add_flag("--strict", strict, "Treat count mismatches outside the proven scope as failures");
    bij_cmd->add_option("--format", format_s, "text|json");
    bij_cmd->add_flag("--json", json, "Same as --format json");
    add_common(bij_cmd);

    auto* lr_cmd = app.add_subcommand("lr", "Count or list LR (or Sundaram) tableaux of shape lambda/nu");
    lr_cmd->add_option("--lambda", lambda_s, "Outer shape")->required();
    lr_cmd->add_option("--nu", nu_s, "Inner shape");
    lr_cmd->add_option("--eta", eta_s, "Weight; omit to list every weight");
    lr_cmd->add_flag("--sundaram", sundaram, "Keep only n-symplectic Sundaram tableaux (needs --n)");
    lr_cmd->add_option("--n", n, "Symplectic rank for --sundaram");
    lr_cmd->add_flag("--list", list, "Print the tableaux");
    lr_cmd->add_option("--format", format_s, "text|json");
    lr_cmd->add_flag("--json", json, "Same as --format json");
    add_common(lr_cmd);

    auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension of an irreducible module");
    dim_cmd->add_option("--n", n, "Symplectic rank n")->required();
    dim_cmd->add_option("--weight", weight_s, "Fundamental coefficients, e.g. A:1,1,0");
    dim_cmd->add_option("--lambda", lambda_s, "Highest weight as a partition");
    dim_cmd->add_option("--type", type_s, "A or C (with --lambda)");
    add_common(dim_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (json) format_s = "json";
        if (csv) format_s = "csv";
        const bk::Format fmt = bk::parse_format(format_s);

        if (*restrict_cmd) {
            const bk::Rank rank(n);
            const auto w = bk::parse_word(word_s, bk::Type::A, rank);
            out.buf << bk::to_string(bk::res_word(w, rank)) << '\n';
            return out.flush(0);
        }

        if (*domres_cmd) {
            const bk::Rank rank(n);
            const auto lambda = bk::parse_partition(lambda_s);
            guard_instance(lambda, n, unguarded);
            const auto ts = domres_cmd->count("--nu") ? bk::domres_nu(lambda, bk::parse_partition(nu_s), rank)
                                                      : bk::domres(lambda, rank);
            if (fmt == bk::Format::json) {
                bk::ordered_json j;
                j["n"] = n;
                j["lambda"] = bk::to_string(lambda);
                if (domres_cmd->count("--nu")) j["nu"] = nu_s;
                auto arr = bk::ordered_json::array();
                for (const auto& t : ts)
                    arr.push_back({{"tableau", bk::to_string(t)},
                                   {"endpoint", bk::to_string(bk::restricted_endpoint(t, rank))}});
                j["tableaux"] = std::move(arr);
                j["count"] = ts.size();
                out.buf << j.dump(2) << '\n';
            } else {
                for (const auto& t : ts) out.buf << bk::to_string(t) << '\n';
                out.buf << "count: " << ts.size() << '\n';
            }
            return out.flush(0);
        }

        if (*branch_cmd) {
            const bk::Rank rank(n);
            const auto lambda = bk::parse_partition(lambda_s);
            guard_instance(lambda, n, unguarded);
            const auto method = bk::parse_method(method_s);
            const auto r = bk::branch(lambda, rank, method);
            if (fmt == bk::Format::json) out.buf << bk::to_json(r).dump() << '\n';
            else out.buf << branch_table(r);
            if (dump_char)
                out.buf << bk::to_json(bk::restrict_char(bk::char_A(lambda, rank), rank)).dump() << '\n';
            return out.flush(0);
        }

        if (*check_cmd) {
            if (n_single) cfg.n_min = cfg.n_max = *n_single;
            cfg.max_rows = max_rows;
            cfg.strict = strict;
            cfg.unguarded = unguarded;
            cfg.format = fmt;
            const auto rep = bk::run_sweep(cfg);
            out.buf << bk::render(rep, fmt);
            std::cerr << "elapsed: " << rep.seconds << " s\n";
            return out.flush(rep.exit_code(strict));
        }

        if (*bij_cmd) {
            const bk::Rank rank(n);
            const auto lambda = bk::parse_partition(lambda_s);
            guard_instance(lambda, n, unguarded);
            const auto rep = bk::bijection_check(lambda, rank);
            if (fmt == bk::Format::json) {
                out.buf << bk::to_json(rep).dump(2) << '\n';
            } else {
                out.buf << "n=" << n << " lambda=" << bk::to_string(lambda)
                        << (rep.in_scope ? " (proven scope)" : " (outside proven scope, counts only)") << '\n';
                for (const auto& row : rep.rows)
                    out.buf << "  nu=" << bk::to_string(row.nu) << " domres=" << row.domres_count
                            << " lr_union=" << row.lr_union_count << " lrs_union=" << row.lrs_union_count << '\n';
                for (const auto& p : rep.problems) out.buf << "  problem: " << p << '\n';
                if (rep.in_scope) out.buf << (rep.ok() ? "bijective" : "NOT bijective") << '\n';
                else out.buf << "counts " << (rep.lrs_counts_equal ? "match" : "differ") << " (LRS union)\n";
            }
            const bool fail = !rep.ok() || (strict && !rep.in_scope && !rep.lrs_counts_equal);
            return out.flush(fail ? kExitDisagree : 0);
        }

        if (*lr_cmd) {
            const auto lambda = bk::parse_partition(lambda_s);
            const auto nu = bk::parse_partition(nu_s);
            guard_instance(lambda, 1, unguarded);
            const std::optional<bk::Partition> eta =
                lr_cmd->count("--eta") ? std::optional(bk::parse_partition(eta_s)) : std::nullopt;
            const bk::Rank rank(n);
            std::vector<bk::Tableau> kept;
            for (auto& t : bk::enumerate_lr(lambda, nu, bk::lr_rank(lambda))) {
                const auto w = bk::lr_weight(t);
                if (eta && w != *eta) continue;
                if (sundaram && !bk::is_sundaram(t, w, rank)) continue;
                kept.push_back(std::move(t));
            }
            if (fmt == bk::Format::json) {
                bk::ordered_json j;
                j["lambda"] = bk::to_string(lambda);
                j["nu"] = bk::to_string(nu);
                if (eta) j["eta"] = bk::to_string(*eta);
                j["sundaram"] = sundaram;
                if (sundaram) j["n"] = n;
                j["count"] = kept.size();
                if (list) {
                    auto arr = bk::ordered_json::array();
                    for (const auto& t : kept)
                        arr.push_back({{"tableau", bk::to_string(t)}, {"weight", bk::to_string(bk::lr_weight(t))}});
                    j["tableaux"] = std::move(arr);
                }
                out.buf << j.dump(2) << '\n';
            } else {
                if (list)
                    for (const auto& t : kept)
                        out.buf << bk::to_string(t) << "  weight=" << bk::to_string(bk::lr_weight(t)) << '\n';
                out.buf << "count: " << kept.size() << '\n';
            }
            return out.flush(0);
        }

        if (*dim_cmd) {
            const bk::Rank rank(n);
            std::int64_t d = 0;
            if (!weight_s.empty()) {
                const auto [type, coeffs] = bk::parse_weight(weight_s);
                d = type == bk::Type::A ? bk::weyl_dim(bk::FundamentalWeightA(rank, coeffs))
                                        : bk::weyl_dim(bk::FundamentalWeightC(rank, coeffs));
            } else if (dim_cmd->count("--lambda")) {
                if (type_s != "A" && type_s != "C") throw bk::invalid_input("--type must be A or C");
                d = bk::weyl_dim(bk::parse_partition(lambda_s), type_s == "A" ? bk::Type::A : bk::Type::C, rank);
            } else {
                throw bk::invalid_input("dim needs --weight or --lambda");
            }
            out.buf << d << '\n';
            return out.flush(0);
        }
    } catch (const bk::invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bk::guard_exceeded& e) {
        std::cerr << "guard: " << e.what() << '\n';
        return kExitGuard;
    } catch (const bk::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitDisagree;
    }
    return kExitUsage;
}
