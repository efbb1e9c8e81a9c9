// Command-line front end: builds the standard families, certifies the
// differential axioms, and runs the full verification pipeline on
// diffposet-hasse v1 files.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffposet/chains.hpp"
#include "diffposet/constructions.hpp"
#include "diffposet/fundamental.hpp"
#include "diffposet/hasse_io.hpp"
#include "diffposet/poset.hpp"
#include "diffposet/smith.hpp"
#include "diffposet/spectra.hpp"
#include "diffposet/verify.hpp"

using namespace diffposet;
using nlohmann::json;

namespace {

constexpr int exit_verification_failed = 1;
constexpr int exit_bad_input = 2;

// "1..4" or "1,2,5,11" or a single value.
std::vector<int> parse_k_list(const std::string& text)
{
    std::vector<int> ks;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        for (int k = lo; k <= hi; ++k)
            ks.push_back(k);
    } else {
        std::istringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            ks.push_back(std::stoi(item));
    }
    if (ks.empty())
        throw CLI::ValidationError("--k", "empty k list");
    for (int k : ks)
        if (k < 1)
            throw CLI::ValidationError("--k", "k values must be >= 1");
    return ks;
}

GradedPoset load(const std::string& path)
{
    try {
        return parse_hasse_file(path);
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        std::exit(exit_bad_input);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        std::exit(exit_bad_input);
    }
}

int resolve_r_or_die(const GradedPoset& poset, int r_flag)
{
    if (r_flag > 0)
        return r_flag;
    if (poset.declared_r())
        return *poset.declared_r();
    return infer_r(poset);
}

std::string chain_text(const GradedPoset& poset, const std::vector<int>& chain)
{
    std::ostringstream out;
    for (int n = 0; n < static_cast<int>(chain.size()); ++n) {
        if (n)
            out << "  ";
        out << n << ':' << chain[static_cast<std::size_t>(n)];
        if (poset.has_labels())
            out << '=' << poset.label(n, chain[static_cast<std::size_t>(n)]);
    }
    return out.str();
}

void print_record(const VerifyRecord& rec, bool as_json)
{
    if (as_json) {
        json j{{"check", rec.check}, {"pass", rec.pass}};
        if (rec.n >= 0)
            j["n"] = rec.n;
        if (rec.k >= 0)
            j["k"] = rec.k;
        if (!rec.detail.empty())
            j["detail"] = rec.detail;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << (rec.pass ? "[PASS] " : "[FAIL] ") << rec.check;
    if (rec.n >= 0)
        std::cout << " n=" << rec.n;
    if (rec.k >= 0)
        std::cout << " k=" << rec.k;
    if (!rec.detail.empty())
        std::cout << ": " << rec.detail;
    std::cout << "\n";
}

int run_smith_selftest(int count, unsigned long seed, bool as_json)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    int failures = 0;
    for (int trial = 0; trial < count; ++trial) {
        DenseIntMatrix a(5, 5);
        do {
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    a.at(i, j) = entry(rng);
        } while (det_bareiss(a) == 0);

        const Int via_smith = smith_form(a).last_entry();
        const Int via_inverse = last_entry_via_inverse(a);
        const bool pass = via_smith == via_inverse;
        if (!pass)
            ++failures;
        if (as_json)
            std::cout << json{{"check", "smith-oracle"},
                              {"trial", trial},
                              {"smith", via_smith.get_str()},
                              {"inverse", via_inverse.get_str()},
                              {"pass", pass}}
                             .dump()
                      << "\n";
    }
    if (!as_json)
        std::cout << count << " random matrices: SNF last entry vs inverse oracle, "
                  << (failures == 0 ? "all agree" : std::to_string(failures) + " DISAGREE")
                  << " (seed " << seed << ")\n";
    return failures == 0 ? 0 : exit_verification_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact certification toolkit for differential posets"};
    app.require_subcommand(1);

    // build
    std::string family = "young";
    std::string factors = "young,young";
    int ranks = 8;
    std::string out_path;
    auto* build = app.add_subcommand("build", "construct a standard family and write it out");
    build->add_option("--family", family, "young | yf | product")->required();
    build->add_option("--factors", factors, "comma list of factor families (product only)");
    build->add_option("--ranks", ranks, "top rank N")->required();
    build->add_option("--out", out_path, "output file (default: stdout)");

    // check
    std::string in_path;
    int r_flag = 0;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "certify the differential-poset axioms");
    check->add_option("--in", in_path, "diffposet-hasse v1 file")->required();
    check->add_option("--r", r_flag, "override the differential parameter");
    check->add_flag("--json", check_json, "line-delimited structured records");

    // chains
    bool chains_json = false;
    auto* chains = app.add_subcommand("chains", "find and print the distinguished chain pair");
    chains->add_option("--in", in_path, "diffposet-hasse v1 file")->required();
    chains->add_option("--r", r_flag, "override the differential parameter");
    chains->add_flag("--json", chains_json, "line-delimited structured records");

    // fundamental
    int n_arg = -1;
    int k_arg = 1;
    bool as_json = false;
    auto* fundamental =
        app.add_subcommand("fundamental", "fundamental vector, identity residual and multiplier");
    fundamental->add_option("--in", in_path)->required();
    fundamental->add_option("--n", n_arg, "rank")->required();
    fundamental->add_option("--k", k_arg, "shift k >= 1")->required();
    fundamental->add_flag("--json", as_json, "line-delimited structured records");
    fundamental->add_option("--r", r_flag, "override the differential parameter");

    // smith
    int selftest_count = 0;
    unsigned long seed = 12345;
    auto* smith = app.add_subcommand("smith", "Smith form of DU_n + kI and the divisibility bound");
    smith->add_option("--in", in_path);
    smith->add_option("--n", n_arg, "rank");
    smith->add_option("--k", k_arg, "shift k >= 1");
    smith->add_flag("--json", as_json);
    smith->add_option("--selftest", selftest_count,
                      "cross-check the SNF last entry against the inverse oracle on this many "
                      "seeded random 5x5 matrices");
    smith->add_option("--seed", seed, "seed for --selftest");
    smith->add_option("--r", r_flag, "override the differential parameter");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "determinant factorization of DU_n + tI");
    spectrum->add_option("--in", in_path)->required();
    spectrum->add_option("--n", n_arg, "rank")->required();
    spectrum->add_flag("--json", as_json);
    spectrum->add_option("--r", r_flag, "override the differential parameter");

    // certify-growth
    bool all_ranks = false;
    auto* growth = app.add_subcommand("certify-growth", "strict rank-growth certificates");
    growth->add_option("--in", in_path)->required();
    growth->add_option("--n", n_arg, "rank (2 <= n <= top-1)");
    growth->add_flag("--all", all_ranks, "certify every rank 2..top-1");
    growth->add_flag("--json", as_json);
    growth->add_option("--r", r_flag, "override the differential parameter");

    // verify-all
    std::string k_list = "1..3";
    int n_min = 0;
    int n_max = -1;
    auto* verify = app.add_subcommand("verify-all", "full verification pipeline");
    verify->add_option("--in", in_path)->required();
    verify->add_option("--k", k_list, "k values, e.g. 1..3 or 1,2,5");
    verify->add_option("--n-min", n_min, "first rank checked");
    verify->add_option("--n-max", n_max, "last rank checked (default: top-1)");
    verify->add_option("--r", r_flag, "override the differential parameter");
    verify->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            FamilySpec spec;
            if (family == "young") {
                spec = FamilySpec::young(ranks);
            } else if (family == "yf") {
                spec = FamilySpec::young_fibonacci(ranks);
            } else if (family == "product") {
                std::vector<FamilySpec> parts;
                std::istringstream ss(factors);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (item == "young")
                        parts.push_back(FamilySpec::young(ranks));
                    else if (item == "yf")
                        parts.push_back(FamilySpec::young_fibonacci(ranks));
                    else
                        throw CLI::ValidationError("--factors", "unknown factor '" + item + "'");
                }
                spec = FamilySpec::product(std::move(parts), ranks);
            } else {
                throw CLI::ValidationError("--family", "unknown family '" + family + "'");
            }
            const GradedPoset poset = build_family(spec);
            if (out_path.empty())
                write_hasse(std::cout, poset);
            else
                write_hasse_file(out_path, poset);
            return 0;
        }

        if (check->parsed()) {
            const GradedPoset poset = load(in_path);
            const int r = resolve_r_or_die(poset, r_flag);
            const AxiomReport report = check_axioms(poset, r);
            if (check_json) {
                for (const auto& rank : report.ranks) {
                    json j{{"check", "axioms"},
                           {"rank", rank.rank},
                           {"matrix_ok", rank.matrix_ok},
                           {"covering_counts_ok", rank.d1_ok},
                           {"common_covers_ok", rank.d2_ok},
                           {"pass", rank.ok()}};
                    if (!rank.counterexamples.empty())
                        j["counterexamples"] = rank.counterexamples;
                    std::cout << j.dump() << "\n";
                }
                std::cout << json{{"check", "axioms-summary"},
                                  {"r", r},
                                  {"highest_rank_verified", report.highest_rank_verified},
                                  {"unchecked_boundary_rank", poset.top_rank()},
                                  {"pass", report.all_ok}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << report.summary();
            }
            return report.all_ok ? 0 : exit_verification_failed;
        }

        if (chains->parsed()) {
            const GradedPoset poset = load(in_path);
            const int r = resolve_r_or_die(poset, r_flag);
            const ChainPair pair = find_chain_pair(poset, r);
            const ChainCheck checked = verify_chain_pair(poset, pair, r);
            if (chains_json) {
                auto chain_json = [&](const std::vector<int>& chain) {
                    json arr = json::array();
                    for (int n = 0; n < static_cast<int>(chain.size()); ++n) {
                        json e{{"rank", n}, {"index", chain[static_cast<std::size_t>(n)]}};
                        if (poset.has_labels())
                            e["label"] = poset.label(n, chain[static_cast<std::size_t>(n)]);
                        arr.push_back(std::move(e));
                    }
                    return arr;
                };
                std::cout << json{{"check", "chain-pair"},
                                  {"lead", chain_json(pair.lead)},
                                  {"witness", chain_json(pair.witness)},
                                  {"pass", checked.ok}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "lead chain:    " << chain_text(poset, pair.lead) << "\n";
                std::cout << "witness chain: " << chain_text(poset, pair.witness) << "\n";
            }
            if (!checked.ok) {
                for (const auto& v : checked.violations)
                    std::cout << (chains_json ? "" : "violation: ") << v << "\n";
                return exit_verification_failed;
            }
            return 0;
        }

        if (fundamental->parsed()) {
            const GradedPoset poset = load(in_path);
            const ChainPair pair = find_chain_pair(poset, resolve_r_or_die(poset, r_flag));
            const RankVector v = fundamental_vector(poset, pair, n_arg, k_arg);
            const IdentityCheck identity = verify_fundamental_identity(poset, pair, n_arg, k_arg);
            const Int multiplier = minimal_integral_multiplier(v);
            if (as_json) {
                json coeffs = json::array();
                for (int i = 0; i < v.size(); ++i)
                    coeffs.push_back(v[i].get_str());
                std::cout << json{{"check", "fundamental"},
                                  {"n", n_arg},
                                  {"k", k_arg},
                                  {"coefficients", coeffs},
                                  {"identity_holds", identity.ok},
                                  {"multiplier", multiplier.get_str()}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "v(n=" << n_arg << ", k=" << k_arg << "):\n";
                for (int i = 0; i < v.size(); ++i)
                    if (v[i] != 0)
                        std::cout << "  " << poset.describe(n_arg, i) << ": " << v[i] << "\n";
                std::cout << "(DU + kI) v = chain basis vector: "
                          << (identity.ok ? "holds exactly" : "FAILS") << "\n";
                std::cout << "minimal integral multiplier: " << multiplier << "\n";
            }
            return identity.ok ? 0 : exit_verification_failed;
        }

        if (smith->parsed()) {
            if (selftest_count > 0)
                return run_smith_selftest(selftest_count, seed, as_json);
            if (in_path.empty() || n_arg < 0) {
                std::cerr << "smith needs --in and --n (or --selftest)\n";
                return exit_bad_input;
            }
            const GradedPoset poset = load(in_path);
            const ChainPair pair = find_chain_pair(poset, resolve_r_or_die(poset, r_flag));
            const SmithDecomposition smith_dec =
                smith_form(du_matrix(poset, n_arg).plus_scaled_identity(k_arg));
            const DivisibilityReport rep = check_divisibility_bound(poset, pair, n_arg, k_arg);
            if (as_json) {
                json diag = json::array();
                for (const Int& d : smith_dec.diagonal)
                    diag.push_back(d.get_str());
                std::cout << json{{"check", "smith"},
                                  {"n", n_arg},
                                  {"k", k_arg},
                                  {"diagonal", diag},
                                  {"bound", rep.bound.get_str()},
                                  {"bound_divides", rep.divides},
                                  {"inverse_oracle", rep.inverse_oracle.get_str()},
                                  {"oracle_match", rep.oracle_match},
                                  {"multiplier", rep.multiplier.get_str()},
                                  {"pass", rep.ok()}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "diagonal:";
                for (const Int& d : smith_dec.diagonal)
                    std::cout << ' ' << d;
                std::cout << "\n" << rep.summary() << "\n";
            }
            return rep.ok() ? 0 : exit_verification_failed;
        }

        if (spectrum->parsed()) {
            const GradedPoset poset = load(in_path);
            const int r = resolve_r_or_die(poset, r_flag);
            const CharPolyCheck check_result = char_poly_factor_check(poset, n_arg, r);
            const SpectrumFactorization fact = spectrum_factorization(poset, n_arg, r);
            if (as_json) {
                json direct = json::array();
                for (const Int& c : check_result.direct)
                    direct.push_back(c.get_str());
                json factors = json::array();
                for (const auto& f : fact.factors)
                    factors.push_back({{"root", f.first.get_str()}, {"multiplicity", f.second}});
                std::cout << json{{"check", "spectrum"},
                                  {"n", n_arg},
                                  {"coefficients", direct},
                                  {"factors", factors},
                                  {"pass", check_result.ok}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "det(DU_" << n_arg << " + tI) coefficients (low to high):";
                for (const Int& c : check_result.direct)
                    std::cout << ' ' << c;
                std::cout << "\nfactorization:";
                for (const auto& f : fact.factors)
                    std::cout << " (t+" << f.first << ")^" << f.second;
                std::cout << "\nidentity " << (check_result.ok ? "holds exactly" : "FAILS") << "\n";
            }
            return check_result.ok ? 0 : exit_verification_failed;
        }

        if (growth->parsed()) {
            const GradedPoset poset = load(in_path);
            const int r = resolve_r_or_die(poset, r_flag);
            std::vector<int> targets;
            if (all_ranks)
                for (int n = 2; n < poset.top_rank(); ++n)
                    targets.push_back(n);
            else if (n_arg >= 0)
                targets.push_back(n_arg);
            else {
                std::cerr << "certify-growth needs --n or --all\n";
                return exit_bad_input;
            }
            bool all_ok = true;
            for (int n : targets) {
                const GrowthCertificate cert = certify_strict_growth(poset, r, n);
                all_ok = all_ok && cert.ok();
                if (as_json)
                    std::cout << json{{"check", "growth-certificate"},
                                      {"n", cert.n},
                                      {"prime", cert.prime},
                                      {"k", cert.k},
                                      {"last_entry", cert.last_entry.get_str()},
                                      {"det", cert.det_direct.get_str()},
                                      {"delta_direct", cert.delta_direct},
                                      {"pass", cert.ok()}}
                                     .dump()
                              << "\n";
                else
                    std::cout << cert.summary() << "\n";
            }
            return all_ok ? 0 : exit_verification_failed;
        }

        if (verify->parsed()) {
            const GradedPoset poset = load(in_path);
            VerifyOptions opts;
            opts.ks = parse_k_list(k_list);
            opts.n_min = n_min;
            opts.n_max = n_max;
            if (r_flag > 0)
                opts.r_override = r_flag;
            const VerifyResult result = verify_all(poset, opts);
            for (const auto& rec : result.records)
                print_record(rec, as_json);
            if (as_json)
                std::cout << json{{"check", "verify-all"}, {"pass", result.all_pass}}.dump()
                          << "\n";
            else
                std::cout << (result.all_pass ? "all checks passed" : "SOME CHECKS FAILED")
                          << "\n";
            return result.exit_status();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return 0;
}
