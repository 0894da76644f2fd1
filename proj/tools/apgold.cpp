// apgold: certificate-producing verifier for sums of consecutive terms of
// prime-headed arithmetic progressions.

#include "apg/certstore.hpp"
#include "apg/conjectures.hpp"
#include "apg/primality.hpp"
#include "apg/progression.hpp"
#include "apg/sylvester.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <variant>

namespace {

using namespace apg;

constexpr int kExitOk = 0;
constexpr int kExitUnresolved = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    SearchPolicy policy;
    int workers = 0;
    std::string store;
    std::string format = "human";
    bool resume = false;
};

void add_policy_flags(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--q-bound", g.policy.q_bound, "prime search cap per divisor");
    cmd->add_option("--k-max", g.policy.k_max, "witness search cap");
    cmd->add_flag_callback(
        "--require-increasing",
        [&g] { g.policy.ordering = PairOrdering::RequireIncreasing; },
        "demand p < q in emitted pairs");
    cmd->add_flag("--allow-equal", g.policy.allow_equal, "permit p = q pairs");
    cmd->add_flag("--positive-terms", g.policy.require_positive_terms,
                  "demand all summed terms positive");
    bool no_adaptive = false;
    cmd->add_flag_callback(
        "--no-adaptive", [&g] { g.policy.adaptive = false; },
        "disable adaptive bound doubling");
    (void)no_adaptive;
    cmd->add_option("--workers", g.workers,
                    "parallel workers (default: APG_WORKERS or hardware)");
    cmd->add_option("--store", g.store, "certificate store path (JSONL)");
    cmd->add_option("--format", g.format, "human | jsonl | csv")
        ->check(CLI::IsMember({"human", "jsonl", "csv"}));
}

int resolve_workers(const GlobalOpts& g) {
    if (g.workers > 0) return g.workers;
    if (const char* env = std::getenv("APG_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void print_terms(std::ostream& os, int64_t p, int64_t q, uint64_t count) {
    PrimePair pair{p, q};
    os << "terms:";
    uint64_t shown = std::min<uint64_t>(count, 8);
    for (uint64_t i = 1; i <= shown; ++i) os << ' ' << term(pair, i);
    if (count > shown) os << " ...";
}

void print_certificate(const AnyCertificate& cert, const std::string& format,
                       const std::string& policy_fp) {
    if (format == "jsonl") {
        std::cout << to_json_line(make_record(cert, policy_fp), false) << '\n';
        return;
    }
    if (auto* r = std::get_if<RepresentationCertificate>(&cert)) {
        uint64_t count = (r->variant == RepVariant::Even)  ? 2 * r->n
                         : (r->variant == RepVariant::Odd) ? 2 * r->n + 1
                                                           : r->n;
        std::cout << r->a << " = sum of " << count << " terms of A(" << r->p
                  << "," << r->q << ")  ";
        print_terms(std::cout, r->p, r->q, count);
        std::cout << '\n';
    } else {
        auto& w = std::get<WitnessCertificate>(cert);
        std::cout << "n=" << w.n << "  k=" << w.k << "  p=" << w.p
                  << "  q=" << w.q << '\n';
    }
}

int run_range(RangeMode mode, uint64_t from, uint64_t to, GlobalOpts& g) {
    if (g.resume && !g.store.empty()) {
        uint64_t done = resume_point(g.store, mode);
        if (done >= from) from = done + 1;
    }
    RangeSummary s = verify_range(mode, from, to, g.policy, resolve_workers(g));

    for (const auto& cert : s.certificates) {
        if (g.format != "csv")
            print_certificate(cert, g.format, g.policy.fingerprint());
        if (!g.store.empty()) append(make_record(cert, g.policy.fingerprint()), g.store);
    }
    std::cerr << range_mode_name(mode) << " [" << s.lo << "," << s.hi
              << "]: resolved=" << s.resolved << " unresolved=" << s.unresolved;
    if (mode == RangeMode::WitnessEven || mode == RangeMode::WitnessOdd)
        std::cerr << " max_k=" << s.max_witness_k;
    std::cerr << '\n';
    for (uint64_t v : s.unresolved_values)
        std::cerr << "  " << v
                  << ": unresolved (bounds exhausted -- not a counterexample)\n";
    return s.unresolved == 0 ? kExitOk : kExitUnresolved;
}

RangeMode parse_rep_mode(const std::string& s) {
    if (s == "even") return RangeMode::Even;
    if (s == "odd") return RangeMode::Odd;
    return RangeMode::Unified;
}

int cmd_classify(uint64_t a, uint64_t min_m) {
    SylvesterClassification c = classify_base(a, min_m);
    if (auto* r = std::get_if<Representable>(&c)) {
        std::cout << a << " = S_{" << r->n << "," << r->m
                  << "}(2,3): " << r->n << " consecutive terms starting at "
                  << r->m + 2 << '\n';
    } else if (auto* p2 = std::get_if<PowerOfTwo>(&c)) {
        std::cout << a << " omitted: power of two 2^" << p2->u << '\n';
    } else if (auto* mf = std::get_if<MersennePrimeForm>(&c)) {
        uint64_t mp = (uint64_t(2) << mf->u) - 1;
        std::cout << a << " omitted, exceptional: 2^" << mf->u << "*(2^"
                  << mf->u + 1 << "-1), Mersenne prime " << mp << '\n';
        std::cout << "  note: " << a << " = 1+2+...+" << mp << '\n';
    } else if (auto* ff = std::get_if<FermatPrimeForm>(&c)) {
        uint64_t fp = (uint64_t(2) << ff->u) + 1;
        std::cout << a << " omitted, exceptional: 2^" << ff->u << "*(2^"
                  << ff->u + 1 << "+1), Fermat prime " << fp << '\n';
        std::cout << "  note: " << a << " = 1+2+...+" << fp - 1 << '\n';
    } else {
        std::cout << a << " not representable with m >= " << min_m << '\n';
    }
    return kExitOk;
}

int cmd_omitted(uint64_t to) {
    PropositionReport rep = proposition_report(to);
    auto dump = [](const char* label, const std::vector<uint64_t>& v) {
        std::cout << label << " (" << v.size() << "):";
        for (uint64_t a : v) std::cout << ' ' << a;
        std::cout << '\n';
    };
    dump("powers-of-two", rep.powers_of_two);
    dump("mersenne-forms", rep.mersenne_forms);
    dump("fermat-forms", rep.fermat_forms);
    dump("unexplained", rep.unexplained);
    return rep.unexplained.empty() ? kExitOk : kExitUnresolved;
}

int cmd_check_store(const std::string& path) {
    uint64_t ok = 0, bad = 0;
    for (const auto& rec : load_store(path)) {
        AnyCertificate cert = rec.to_certificate();
        bool pass = std::visit([](const auto& c) { return verify_certificate(c); },
                               cert);
        if (pass) {
            ++ok;
        } else {
            ++bad;
            std::cerr << "FAILED: " << to_json_line(rec, false) << '\n';
        }
    }
    std::cout << "verified " << ok << "/" << ok + bad << " certificates\n";
    return bad == 0 ? kExitOk : kExitUnresolved;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goldbach-style verification for prime-headed arithmetic progressions"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::string mode_arg;
    uint64_t from = 0, to = 0, a = 0, min_m = 0, p_arg = 3;
    std::string path;

    auto* verify = app.add_subcommand("verify", "certify a range of targets");
    verify->add_option("mode", mode_arg, "even | odd | unified")
        ->required()
        ->check(CLI::IsMember({"even", "odd", "unified"}));
    verify->add_option("--from", from)->required();
    verify->add_option("--to", to)->required();
    verify->add_flag("--resume", g.resume, "continue from the store's resume point");
    add_policy_flags(verify, g);

    auto* witness = app.add_subcommand("witness", "search Eq-identity witnesses");
    witness->add_option("mode", mode_arg, "even | odd")
        ->required()
        ->check(CLI::IsMember({"even", "odd"}));
    witness->add_option("--from", from)->required();
    witness->add_option("--to", to)->required();
    add_policy_flags(witness, g);

    auto* classify = app.add_subcommand("classify", "Sylvester classification of a");
    classify->add_option("a", a)->required();
    classify->add_option("--min-m", min_m, "minimum window offset (default 0)");

    auto* twin = app.add_subcommand("twin", "twin-progression representability");
    twin->add_option("--p", p_arg, "odd prime p of A(p, p+2)")->required();
    twin->add_option("a", a)->required();

    auto* omitted = app.add_subcommand("omitted", "omitted values + family report");
    omitted->add_option("--to", to)->required();

    auto* decompose = app.add_subcommand("decompose", "consecutive-integer run");
    decompose->add_option("a", a)->required();

    auto* goldbach = app.add_subcommand("goldbach", "classical two-prime pair");
    goldbach->add_option("a", a)->required();

    auto* check = app.add_subcommand("check-store", "re-verify all certificates");
    check->add_option("path", path)->required();

    auto* report = app.add_subcommand("report", "CSV summary of a store");
    report->add_option("path", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed())
            return run_range(parse_rep_mode(mode_arg), from, to, g);
        if (witness->parsed())
            return run_range(mode_arg == "even" ? RangeMode::WitnessEven
                                                : RangeMode::WitnessOdd,
                             from, to, g);
        if (classify->parsed()) return cmd_classify(a, min_m);
        if (twin->parsed()) {
            auto r = classify_twin(static_cast<int64_t>(p_arg), a);
            if (r) {
                std::cout << a << " = S_{" << r->n << "," << r->m << "}(" << p_arg
                          << "," << p_arg + 2 << ")\n";
                return kExitOk;
            }
            std::cout << a << " not representable over A(" << p_arg << ","
                      << p_arg + 2 << ") with n >= 2\n";
            return kExitUnresolved;
        }
        if (omitted->parsed()) return cmd_omitted(to);
        if (decompose->parsed()) {
            auto run = consecutive_decomposition(a);
            if (!run) {
                std::cout << a << " is a power of two: no consecutive run\n";
                return kExitOk;
            }
            std::cout << a << " = " << run->start << " + ... + "
                      << run->start + run->length - 1 << " (" << run->length
                      << " terms)\n";
            return kExitOk;
        }
        if (goldbach->parsed()) {
            auto pair = goldbach_pair(a);
            if (!pair) {
                std::cerr << a << ": no pair found (classical Goldbach counterexample?!)\n";
                return kExitUnresolved;
            }
            std::cout << a << " = " << pair->first << " + " << pair->second << '\n';
            return kExitOk;
        }
        if (check->parsed()) return cmd_check_store(path);
        if (report->parsed()) {
            std::cout << summarize(path);
            return kExitOk;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
