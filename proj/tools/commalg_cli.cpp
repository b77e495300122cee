#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "commalg/bs.hpp"
#include "commalg/pcomm.hpp"
#include "commalg/schreier.hpp"
#include "commalg/search.hpp"

using json = nlohmann::ordered_json;
using namespace commalg;

namespace {

std::string case_name(const BSCase& c) {
    switch (c.kind) {
        case BSCaseKind::ResiduallyFinite:
            return "residually finite";
        case BSCaseKind::SamePrime:
            return "same prime";
        case BSCaseKind::DifferentPrimeDivisors:
            return "different prime divisors";
        case BSCaseKind::SamePrimeDivisors:
            return "same prime divisors";
    }
    return "?";
}

std::string case_details(const BSCase& c) {
    std::string out;
    switch (c.kind) {
        case BSCaseKind::ResiduallyFinite:
            return "";
        case BSCaseKind::SamePrime:
            out = "p=" + std::to_string(c.p) + " k=" + std::to_string(c.k_exp) +
                  " l=" + std::to_string(c.l_exp);
            break;
        case BSCaseKind::DifferentPrimeDivisors:
            out = "p=" + std::to_string(c.p) +
                  (c.unit_m_over_p ? " (m/p = 1)" : " (m/p != 1)");
            break;
        case BSCaseKind::SamePrimeDivisors:
            out = "k=" + std::to_string(c.k_div) + " p=" + std::to_string(c.p);
            break;
    }
    out += " oriented (m,n)=(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
    if (c.swapped) out += " [swapped]";
    if (c.negated) out += " [negated]";
    return out;
}

int run_classify(int m, int n) {
    BSCase c = classify(m, n);
    std::cout << case_name(c);
    if (auto d = case_details(c); !d.empty()) std::cout << ": " << d;
    std::cout << '\n';
    return 0;
}

int run_gamma(int m, int n) {
    std::cout << print(gamma_word(classify(m, n))) << '\n';
    return 0;
}

int run_basis(int m, int n, int which, bool dump) {
    FreeBasis basis = paper_basis(m, n, which);
    for (const Word& w : basis.elements()) std::cout << print(w) << '\n';
    if (dump) {
        std::cout << "# subgroup graph (" << basis.subgroup().index() << " states)\n";
        dump_table(basis.subgroup(), std::cout);
    }
    return 0;
}

int run_verify(int m, int n, bool as_json, bool dump, std::optional<std::uint64_t> seed,
               std::optional<int> degree_bound, int jobs) {
    BSCase c = classify(m, n);
    if (c.kind == BSCaseKind::ResiduallyFinite) {
        if (as_json) {
            json out;
            out["m"] = m;
            out["n"] = n;
            out["case"] = case_name(c);
            std::cout << out.dump() << '\n';
        } else {
            std::cout << "BS(" << m << "," << n << ") is residually finite; nothing to verify\n";
        }
        return 0;
    }
    auto t0 = std::chrono::steady_clock::now();
    Word gamma = gamma_word(c);
    Commensurator phi = build_phi();
    Commensurator psi = seed ? build_psi_random(c, *seed) : build_psi(c);
    bool relator_ok = verify_relator(phi, psi, c.m, c.n);
    Witness w = witness_nontriviality(c, phi, psi);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    std::optional<RFSpotCheckReport> rf;
    if (degree_bound) rf = rf_spot_check(c.m, c.n, gamma, *degree_bound, jobs);

    if (as_json) {
        json out;
        out["m"] = m;
        out["n"] = n;
        out["case"] = case_name(c);
        out["gamma"] = print(gamma);
        out["relator_verified"] = relator_ok;
        out["witness"] = {{"x", print(w.x)}, {"lhs", print(w.lhs)}, {"rhs", print(w.rhs)}};
        out["basis_sizes"] = {c.m * c.n + 1, c.m * c.n + 1};
        if (rf) {
            out["rf_spot_check"] = {{"degree_bound", rf->degree_bound},
                                    {"relator_pairs", rf->relator_pairs},
                                    {"gamma_always_trivial", rf->gamma_always_trivial}};
        }
        std::cout << out.dump() << '\n';
        std::cerr << "elapsed: " << ms << " ms\n";
    } else {
        std::cout << "case:    " << case_name(c) << " (" << case_details(c) << ")\n";
        std::cout << "gamma:   " << print(gamma) << '\n';
        std::cout << "relator: " << (relator_ok ? "verified" : "FAILED") << '\n';
        std::cout << "witness: x = " << print(w.x) << '\n';
        std::cout << "         Phi(" << print(multiply(w.w1, w.w2)) << ")(x) = " << print(w.lhs)
                  << '\n';
        std::cout << "         Phi(" << print(multiply(w.w2, w.w1)) << ")(x) = " << print(w.rhs)
                  << '\n';
        std::cerr << "elapsed: " << ms << " ms\n";
        if (rf) {
            std::cout << "rf spot check (degree <= " << rf->degree_bound
                      << "): " << rf->relator_pairs << " relator pairs, gamma "
                      << (rf->gamma_always_trivial ? "trivial in all images"
                                                   : "NON-TRIVIAL in some image")
                      << '\n';
        }
        if (dump) {
            std::cout << "# domain graph (" << psi.domain().index() << " states)\n";
            dump_table(psi.domain(), std::cout);
            std::cout << "# codomain graph (" << psi.codomain().index() << " states)\n";
            dump_table(psi.codomain(), std::cout);
        }
    }
    return relator_ok ? 0 : 1;
}

int run_search(int m, int n, int window, int jobs) {
    BSCase c = classify(m, n);
    Word gamma = gamma_word(c);
    SearchReport report = search_witnesses(m, n, AssignmentWindow{window}, gamma, jobs);
    std::cout << "window " << window << ": " << report.witness_count << " witnesses out of "
              << report.total << " candidates\n";
    for (const auto& perm : report.failures)
        std::cout << "failure: " << cycle_notation(perm) << '\n';
    return report.witness_count > 0 ? 0 : 1;
}

int run_pcheck(int m, int n, int p) {
    BSCase c = classify(m, n);
    if (c.kind == BSCaseKind::ResiduallyFinite) {
        std::cout << "residually finite case; no psi to check\n";
        return 1;
    }
    Commensurator phi = build_phi();
    Commensurator psi = build_psi(c);
    auto describe = [&](const char* name, const SubgroupGraph& h) {
        bool ppow = is_p_power_index(h, p);
        auto cert = is_subnormal(h);
        std::cout << name << ": index " << h.index() << ", p-power index: "
                  << (ppow ? "yes" : "no") << ", subnormal: "
                  << (cert ? "yes (chain length " + std::to_string(cert->length()) + ")"
                           : "no")
                  << '\n';
    };
    describe("domain(psi)  ", psi.domain());
    describe("codomain(psi)", psi.codomain());
    std::cout << "in_comm_p(psi, " << p << ") = " << (in_comm_p(psi, p) ? "true" : "false")
              << '\n';
    std::cout << "in_comm_p(phi, " << p << ") = " << (in_comm_p(phi, p) ? "true" : "false")
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Baumslag-Solitar images in the abstract commensurator of F_2"};
    app.require_subcommand(1);

    int m = 0, n = 0, p = 2, which = 1, window = 6, jobs = 1;
    bool as_json = false, dump = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> degree_bound;

    auto* classify_cmd = app.add_subcommand("classify", "classify (m,n) by residual finiteness and prime structure");
    classify_cmd->add_option("m", m)->required();
    classify_cmd->add_option("n", n)->required();

    auto* gamma_cmd = app.add_subcommand("gamma", "print Meskin's word for (m,n)");
    gamma_cmd->add_option("m", m)->required();
    gamma_cmd->add_option("n", n)->required();

    auto* basis_cmd = app.add_subcommand("basis", "print the basis table of Delta_1 or Delta_2");
    basis_cmd->add_option("m", m)->required();
    basis_cmd->add_option("n", n)->required();
    basis_cmd->add_option("--which", which)->check(CLI::Range(1, 2));
    basis_cmd->add_flag("--dump-graph", dump);

    auto* verify_cmd = app.add_subcommand("verify", "build Phi, verify the relator and the witness");
    verify_cmd->add_option("m", m)->required();
    verify_cmd->add_option("n", n)->required();
    verify_cmd->add_flag("--json", as_json);
    verify_cmd->add_flag("--dump-graph", dump);
    verify_cmd->add_option("--seed", seed, "random completion of g instead of table order");
    verify_cmd->add_option("--degree-bound", degree_bound,
                           "also run the finite-quotient spot check up to this degree");
    verify_cmd->add_option("--jobs", jobs);

    auto* search_cmd = app.add_subcommand("search", "enumerate completions of psi over a window of targets");
    search_cmd->add_option("m", m)->required();
    search_cmd->add_option("n", n)->required();
    search_cmd->add_option("--window", window);
    search_cmd->add_option("--jobs", jobs);

    auto* pcheck_cmd = app.add_subcommand("pcheck", "Comm_p predicates for the case's psi and phi");
    pcheck_cmd->add_option("m", m)->required();
    pcheck_cmd->add_option("n", n)->required();
    pcheck_cmd->add_option("p", p)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(m, n);
        if (gamma_cmd->parsed()) return run_gamma(m, n);
        if (basis_cmd->parsed()) return run_basis(m, n, which, dump);
        if (verify_cmd->parsed()) return run_verify(m, n, as_json, dump, seed, degree_bound, jobs);
        if (search_cmd->parsed()) return run_search(m, n, window, jobs);
        if (pcheck_cmd->parsed()) return run_pcheck(m, n, p);
    } catch (const NoWitnessFound& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
