#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "derilab/report.hpp"
#include "derilab/suites.hpp"

using namespace derilab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRange = 2;
constexpr int kExitOracle = 3;

struct CommonOpts {
    std::string out;
    std::string format = "json";
    int workers = 0;
    std::string cache_dir;
    std::uint64_t seed = 0;
};

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("DERILAB_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

std::string resolve_cache(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("DERILAB_CACHE")) return env;
    return "";
}

void emit(const CommonOpts& opts, const Json& doc) {
    std::string text = opts.format == "csv" ? results_csv(doc.at("results")) : doc.dump(2) + "\n";
    if (opts.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opts.out);
        if (!f) throw std::runtime_error("cannot open output file " + opts.out);
        f << text;
    }
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "output path (default: stdout)");
    cmd->add_option("--format", opts.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--workers", opts.workers, "worker threads (default: DERILAB_WORKERS or cores)");
    cmd->add_option("--cache-dir", opts.cache_dir, "result cache directory (default: DERILAB_CACHE)");
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::uint32_t(std::stoul(item)));
    if (out.empty()) throw range_error("no primes given");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"derilab: graded derivation Lie algebras, spiders, and exact linear algebra"};
    app.require_subcommand(1);

    // ---- h1
    auto* h1 = app.add_subcommand("h1", "weight-graded abelianization of a derivation algebra");
    CommonOpts h1o;
    std::string h1_algebra = "assoc", h1_mode = "plus", h1_ring = "z", h1_parts, h1_primes;
    int h1_n = 0, h1_g = 0, h1_k = 1;
    bool h1_heavy = false;
    h1->add_option("--algebra", h1_algebra, "assoc|lie|symp|lie-symp")->required();
    h1->add_option("--n", h1_n, "rank of the free module (assoc, lie)");
    h1->add_option("--g", h1_g, "genus (symp, lie-symp)");
    h1->add_option("--k", h1_k, "weight")->required();
    h1->add_option("--mode", h1_mode, "plus|full")->check(CLI::IsMember({"plus", "full"}));
    h1->add_option("--ring", h1_ring, "z|q|modp")->check(CLI::IsMember({"z", "q", "modp"}));
    h1->add_option("--partitions", h1_parts, "override partitions, e.g. \"2,1;1,2\"");
    h1->add_option("--primes", h1_primes, "comma-separated primes for modp");
    h1->add_flag("--heavy", h1_heavy, "allow runs above the heavy-size gate");
    add_common(h1, h1o);

    // ---- verify
    auto* verify = app.add_subcommand("verify", "run a property suite");
    CommonOpts vo;
    std::string v_suite;
    int v_g = 6;
    verify->add_option("--suite", v_suite, "identities|traces|spiders|slides|mirror")->required();
    verify->add_option("--seed", vo.seed, "random seed (required)")->required();
    verify->add_option("--g", v_g, "genus for spider suites");
    add_common(verify, vo);

    // ---- reduce-spider
    auto* reduce = app.add_subcommand("reduce-spider", "rewrite a spider into standard form");
    CommonOpts ro;
    std::string r_spider;
    int r_g = 0;
    reduce->add_option("--g", r_g, "genus")->required();
    reduce->add_option("--spider", r_spider, "comma-separated signed colors")->required();
    add_common(reduce, ro);

    // ---- dims
    auto* dims = app.add_subcommand("dims", "dimension tables for graded pieces");
    CommonOpts dko;
    std::string d_algebra = "symp";
    int d_n = 0, d_g = 0, d_k = 1;
    dims->add_option("--algebra", d_algebra, "assoc|lie|symp|lie-symp")->required();
    dims->add_option("--n", d_n, "rank");
    dims->add_option("--g", d_g, "genus");
    dims->add_option("--k", d_k, "degree")->required();
    add_common(dims, dko);

    // ---- generation-profile
    auto* prof = app.add_subcommand("generation-profile", "which partition subsets already span");
    CommonOpts po;
    std::string p_algebra = "assoc";
    int p_n = 0, p_g = 0, p_maxk = 3;
    prof->add_option("--algebra", p_algebra, "assoc|lie|symp")->required();
    prof->add_option("--n", p_n, "rank");
    prof->add_option("--g", p_g, "genus");
    prof->add_option("--max-k", p_maxk, "largest weight")->required();
    add_common(prof, po);

    CLI11_PARSE(app, argc, argv);

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    try {
        if (*h1) {
            AlgebraKind kind = parse_algebra(h1_algebra);
            int size = (kind == AlgebraKind::Symp || kind == AlgebraKind::LieSymp) ? h1_g : h1_n;
            if (size <= 0) throw range_error("missing --n or --g for the chosen algebra");
            H1Request req;
            req.kind = kind;
            req.size = size;
            req.k = h1_k;
            req.mode = h1_mode == "plus" ? Mode::Plus : Mode::Full;
            req.ring = parse_ring(h1_ring);
            if (!h1_primes.empty()) req.primes = parse_primes(h1_primes);
            if (!h1_parts.empty()) req.partitions = parse_partitions(h1_parts);
            req.workers = resolve_workers(h1o.workers);
            req.cache_dir = resolve_cache(h1o.cache_dir);

            // a row space this large is a deliberate long run
            long long probe_dim = make_model(kind, size)->row_dim(h1_k);
            if (probe_dim >= 20000 && !h1_heavy)
                throw range_error("this configuration has row dimension " +
                                  std::to_string(probe_dim) + " and is gated; rerun with --heavy");

            H1Report rep = h1_weight(req);
            Json config{{"subcommand", "h1"},   {"algebra", h1_algebra}, {"size", size},
                        {"k", h1_k},            {"mode", h1_mode},       {"ring", h1_ring},
                        {"workers", req.workers}};
            Json results = Json::array({h1_report_json(rep)});
            emit(h1o,
                 report_document(config, results, elapsed(), 1, rep.prime_disagreement ? 1 : 0));
            return rep.prime_disagreement ? kExitOracle : kExitOk;
        }

        if (*verify) {
            SuiteResult res = run_suite(v_suite, vo.seed, v_g);
            Json config{{"subcommand", "verify"}, {"suite", v_suite}, {"seed", vo.seed}, {"g", v_g}};
            Json row{{"suite", res.name},
                     {"checks", res.checks},
                     {"failures", res.failures},
                     {"failing_cases", res.failing_cases}};
            emit(vo, report_document(config, Json::array({row}), elapsed(), res.checks,
                                     res.failures));
            return res.passed() ? kExitOk : kExitOracle;
        }

        if (*reduce) {
            ColorWord colors = parse_color_word(r_spider);
            Spider s(colors, r_g);
            ReductionCertificate cert = reduce_to_standard(s, r_g);
            bool audited = audit_certificate(cert);
            bool all_standard = true;
            for (const auto& st : cert.remainder)
                if (!is_standard_form(chord_diagram_of(st.s, cert.g))) all_standard = false;
            Json config{{"subcommand", "reduce-spider"}, {"g", r_g}, {"spider", r_spider}};
            Json row = certificate_json(cert);
            row["audit_passed"] = audited;
            row["standard_form_remainders"] = all_standard;
            emit(ro, report_document(config, Json::array({row}), elapsed(), 1, audited ? 0 : 1));
            return audited ? kExitOk : kExitOracle;
        }

        if (*dims) {
            AlgebraKind kind = parse_algebra(d_algebra);
            int size = (kind == AlgebraKind::Symp || kind == AlgebraKind::LieSymp) ? d_g : d_n;
            if (size <= 0) throw range_error("missing --n or --g for the chosen algebra");
            Json row{{"algebra", d_algebra}, {"size", size}, {"k", d_k}};
            switch (kind) {
                case AlgebraKind::Assoc:
                    row["dim"] = make_model(kind, size)->module_dim(d_k);
                    break;
                case AlgebraKind::Lie:
                    row["dim"] = make_model(kind, size)->module_dim(d_k);
                    row["witt"] = witt_dimension(size, d_k + 1);
                    break;
                case AlgebraKind::Symp: {
                    row["dim"] = a_dimension(size, d_k);
                    if (d_k == 1) {
                        long long n2g = 2 * size;
                        row["sym3_dim"] = (n2g + 2) * (n2g + 1) * n2g / 6;
                        row["wedge3_dim"] = n2g * (n2g - 1) * (n2g - 2) / 6;
                    }
                    break;
                }
                case AlgebraKind::LieSymp:
                    row["dim"] = make_model(kind, size)->module_dim(d_k);
                    break;
            }
            Json config{{"subcommand", "dims"}, {"algebra", d_algebra}, {"size", size}, {"k", d_k}};
            emit(dko, report_document(config, Json::array({row}), elapsed(), 1, 0));
            return kExitOk;
        }

        if (*prof) {
            AlgebraKind kind = parse_algebra(p_algebra);
            int size = kind == AlgebraKind::Symp ? p_g : p_n;
            if (size <= 0) throw range_error("missing --n or --g for the chosen algebra");
            auto rows = generation_profile(kind, size, p_maxk, kDefaultPrimes,
                                           resolve_workers(po.workers));
            Json results = Json::array();
            for (const auto& r : rows) {
                Json jr{{"k", r.k}, {"dim", r.dim}, {"monotone", r.monotone}};
                for (const auto& [label, rank] : r.ranks) jr["rank " + label] = rank;
                results.push_back(std::move(jr));
            }
            Json config{{"subcommand", "generation-profile"},
                        {"algebra", p_algebra},
                        {"size", size},
                        {"max_k", p_maxk}};
            emit(po, report_document(config, results, elapsed(), (long long)rows.size(), 0));
            return kExitOk;
        }
    } catch (const range_error& e) {
        std::cerr << "range guard: " << e.what() << "\n";
        return kExitRange;
    } catch (const oracle_error& e) {
        std::cerr << "oracle disagreement: " << e.what() << "\n";
        return kExitOracle;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
