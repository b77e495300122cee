#include "commalg/search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace commalg {

namespace {

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Permutation of 0..w-1 with the given rank in the factorial number system.
std::vector<int> unrank_permutation(std::int64_t rank, int w) {
    std::vector<int> pool(static_cast<std::size_t>(w));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(w));
    for (int i = w; i >= 1; --i) {
        std::int64_t f = factorial(i - 1);
        auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

struct SearchContext {
    BSCase bscase;
    FreeBasis domain_basis;
    std::vector<Word> sources;  // S_Delta1 minus the pinned A^m (table order)
    std::vector<Word> targets;  // S_Delta2 minus the pinned A^n (table order)
    Word a_m_image;             // A^n
    SubgroupGraph codomain;
    int window;

    SearchContext(int m, int n, int window_size)
        : bscase(classify(m, n)),
          domain_basis(paper_basis(bscase.m, bscase.n, 1)),
          a_m_image(Alphabet::upper2()),
          codomain(kernel_graph(Alphabet::upper2(),
                                FiniteAbelianTarget::pi2(bscase.m, bscase.n))),
          window(window_size) {
        if (bscase.kind == BSCaseKind::ResiduallyFinite)
            throw ResiduallyFiniteCase("search requires a non-RF case");
        std::vector<Word> table2 = paper_basis_words(bscase.m, bscase.n, 2);
        sources = domain_basis.elements();
        sources.pop_back();  // A^m is pinned
        a_m_image = table2.back();
        table2.pop_back();
        targets = std::move(table2);
        if (window < 1) throw Error("window size must be >= 1");
        if (window > static_cast<int>(targets.size()))
            throw Error("window size " + std::to_string(window) + " exceeds the " +
                        std::to_string(targets.size()) + " non-distinguished positions");
    }

    Commensurator candidate(const std::vector<int>& perm) const {
        std::vector<Word> images;
        images.reserve(sources.size() + 1);
        for (std::size_t i = 0; i < sources.size(); ++i) {
            std::size_t j = i < perm.size() ? static_cast<std::size_t>(perm[i]) : i;
            images.push_back(targets[j]);
        }
        images.push_back(a_m_image);
        return Commensurator::from_basis_map(domain_basis, std::move(images), codomain);
    }
};

}  // namespace

std::vector<Commensurator> enumerate_assignments(int m, int n, const AssignmentWindow& window) {
    SearchContext ctx(m, n, window.size);
    std::vector<Commensurator> out;
    std::int64_t total = factorial(window.size);
    out.reserve(static_cast<std::size_t>(total));
    for (std::int64_t r = 0; r < total; ++r)
        out.push_back(ctx.candidate(unrank_permutation(r, window.size)));
    return out;
}

SearchReport search_witnesses(int m, int n, const AssignmentWindow& window, const Word& gamma,
                              int jobs) {
    SearchContext ctx(m, n, window.size);
    const Commensurator phi = build_phi();
    const std::vector<Word> table2 = paper_basis_words(ctx.bscase.m, ctx.bscase.n, 2);
    const std::int64_t total = factorial(window.size);
    const int workers = std::max(1, jobs);

    std::vector<std::int64_t> counts(static_cast<std::size_t>(workers), 0);
    std::vector<std::vector<std::int64_t>> fails(static_cast<std::size_t>(workers));
    auto run = [&](int wid) {
        for (std::int64_t r = wid; r < total; r += workers) {
            std::vector<int> perm = unrank_permutation(r, window.size);
            Commensurator psi = ctx.candidate(perm);
            Commensurator image = evaluate(gamma, phi, psi);
            bool moved = false;
            for (const Word& x : table2) {
                if (!membership(x, image.domain())) continue;
                if (image.apply(x) != x) {
                    moved = true;
                    break;
                }
            }
            if (moved)
                ++counts[static_cast<std::size_t>(wid)];
            else
                fails[static_cast<std::size_t>(wid)].push_back(r);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    SearchReport report;
    report.total = total;
    std::vector<std::int64_t> fail_ranks;
    for (int w = 0; w < workers; ++w) {
        report.witness_count += counts[static_cast<std::size_t>(w)];
        fail_ranks.insert(fail_ranks.end(), fails[static_cast<std::size_t>(w)].begin(),
                          fails[static_cast<std::size_t>(w)].end());
    }
    std::sort(fail_ranks.begin(), fail_ranks.end());
    for (std::int64_t r : fail_ranks)
        report.failures.push_back(unrank_permutation(r, window.size));
    return report;
}

std::string cycle_notation(const std::vector<int>& perm) {
    std::ostringstream out;
    std::vector<bool> seen(perm.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == static_cast<int>(i)) continue;
        any = true;
        out << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            first = false;
            out << j + 1;
            j = static_cast<std::size_t>(perm[j]);
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

}  // namespace commalg
