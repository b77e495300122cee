#include "commalg/bs.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace commalg {

Word BSPresentation::relator() const {
    const Word a = Word::generator(alphabet, 0);
    const Word b = Word::generator(alphabet, 1);
    return multiply(multiply(invert(a), pow(b, m)), multiply(a, pow(b, -n)));
}

namespace {

std::vector<int> prime_factors(int v) {
    std::vector<int> out;
    for (int p = 2; p * p <= v; ++p)
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) v /= p;
        }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

BSCase classify(int m, int n) {
    if (m == 0 || n == 0) throw ZeroParameter("BS(m,n) requires m, n != 0");
    BSCase c{};
    if (std::abs(m) == std::abs(n) || std::abs(m) == 1 || std::abs(n) == 1) {
        c.kind = BSCaseKind::ResiduallyFinite;
        c.m = m;
        c.n = n;
        return c;
    }
    if ((m < 0) != (n < 0))
        throw MixedSigns("BS(" + std::to_string(m) + "," + std::to_string(n) +
                         "): mixed signs with |m| != |n| are outside the normalized regime "
                         "handled by the construction");
    if (m < 0) {
        // BS(m,n) ~ BS(-m,-n) by inverting b.
        m = -m;
        n = -n;
        c.negated = true;
    }
    int lo = std::min(m, n), hi = std::max(m, n);
    auto set_orientation = [&](int mm, int nn) {
        c.m = mm;
        c.n = nn;
        c.swapped = (mm != m);  // relative to the sign-normalized input
    };

    std::vector<int> plo = prime_factors(lo), phi = prime_factors(hi);
    if (plo.size() == 1 && phi.size() == 1 && plo[0] == phi[0]) {
        c.kind = BSCaseKind::SamePrime;
        c.p = plo[0];
        set_orientation(lo, hi);
        int v = lo;
        while (v > 1) {
            v /= c.p;
            ++c.k_exp;
        }
        v = hi;
        while (v > 1) {
            v /= c.p;
            ++c.l_exp;
        }
        return c;
    }
    if (plo != phi) {
        c.kind = BSCaseKind::DifferentPrimeDivisors;
        // Orient so some prime divides m but not n, preferring m < n.
        for (auto [mm, nn] : {std::pair{lo, hi}, std::pair{hi, lo}}) {
            for (int p : prime_factors(mm))
                if (nn % p != 0) {
                    c.p = p;
                    set_orientation(mm, nn);
                    c.unit_m_over_p = (mm / p == 1);
                    return c;
                }
        }
        throw Error("classify: no separating prime found");  // unreachable
    }
    // Same prime divisor sets, not powers of one prime.
    c.kind = BSCaseKind::SamePrimeDivisors;
    int k = std::gcd(lo, hi);
    // Orient so m/k > 1; m/k and n/k are coprime, so any prime of m/k works.
    int mm = lo, nn = hi;
    if (lo / k == 1) std::swap(mm, nn);
    c.k_div = k;
    c.p = prime_factors(mm / k).front();
    set_orientation(mm, nn);
    return c;
}

Word gamma_word(const BSCase& c) {
    if (c.kind == BSCaseKind::ResiduallyFinite)
        throw ResiduallyFiniteCase("gamma is defined only for the non-RF cases");
    const Alphabet bs = Alphabet::bs();
    const Word a = Word::generator(bs, 0);
    const Word b = Word::generator(bs, 1);
    switch (c.kind) {
        case BSCaseKind::SamePrime:
            // [a^-1, b, b^(p^k)], left-normed, with p^k = m.
            return commutator(invert(a), b, pow(b, c.m));
        case BSCaseKind::DifferentPrimeDivisors:
            return commutator(conjugate(b, a), pow(b, c.m / c.p));
        case BSCaseKind::SamePrimeDivisors:
            return commutator(conjugate(pow(b, c.k_div), a), pow(b, c.m / c.p));
        default:
            throw Error("unreachable");
    }
}

Commensurator build_phi() {
    return Commensurator::inner(Word::generator(Alphabet::upper2(), 0));
}

namespace {

// Index of [A,B^j]^(A^i) in a basis table whose commutator block has `cols`
// columns; b_block(i) and a_power index the two trailing blocks.
struct TableIndex {
    int rows, cols;  // j in 1..rows-1, i in 0..cols-1
    int comm(int j, int i) const {
        if (j < 1 || j > rows - 1 || i < 0 || i > cols - 1)
            throw AssignmentCollision("table position [A,B^" + std::to_string(j) + "]^(A^" +
                                      std::to_string(i) + ") outside the basis table");
        return (j - 1) * cols + i;
    }
    int b_block(int i) const {
        if (i < 0 || i > cols - 1)
            throw AssignmentCollision("table position (B-power)^(A^" + std::to_string(i) +
                                      ") outside the basis table");
        return (rows - 1) * cols + i;
    }
    int a_power() const { return (rows - 1) * cols + cols; }
};

/// The case's special assignments as (source, target) index pairs into the
/// S_Delta1 and S_Delta2 tables; the distinguished A^m -> A^n comes first.
std::vector<std::pair<int, int>> special_assignments(const BSCase& c) {
    TableIndex t1{c.n, c.m};  // S_Delta1: j up to n-1, conjugates up to A^(m-1)
    TableIndex t2{c.m, c.n};  // S_Delta2: j up to m-1, conjugates up to A^(n-1)
    std::vector<std::pair<int, int>> out;
    out.emplace_back(t1.a_power(), t2.a_power());
    switch (c.kind) {
        case BSCaseKind::SamePrime:
            out.emplace_back(t1.comm(1, 0), t2.comm(1, 1));      // [A,B] -> [A,B]^A
            out.emplace_back(t1.comm(1, 1), t2.comm(1, c.m));    // [A,B]^A -> [A,B]^(A^(p^k))
            out.emplace_back(t1.comm(2, 1), t2.comm(1, 0));      // [A,B^2]^A -> [A,B]
            out.emplace_back(t1.comm(2, 0), t2.b_block(0));      // [A,B^2] -> B^m
            break;
        case BSCaseKind::DifferentPrimeDivisors: {
            const int q = c.m / c.p;
            if (q != 1) {
                out.emplace_back(t1.comm(1, 0), t2.comm(1, q));  // [A,B] -> [A,B]^(A^(m/p))
                out.emplace_back(t1.comm(1, 1), t2.comm(1, 1));  // [A,B]^A -> [A,B]^A
            } else {
                out.emplace_back(t1.comm(1, 0), t2.comm(1, 1));  // [A,B] -> [A,B]^A
                out.emplace_back(t1.comm(1, 1), t2.comm(1, 2));  // [A,B]^A -> [A,B]^(A^2)
            }
            out.emplace_back(t1.comm(2, 0), t2.comm(1, 0));      // [A,B^2] -> [A,B]
            out.emplace_back(t1.comm(2, 1), t2.b_block(0));      // [A,B^2]^A -> B^m
            break;
        }
        case BSCaseKind::SamePrimeDivisors: {
            const int q = c.m / c.p;
            const int k = c.k_div;
            out.emplace_back(t1.comm(1, 0), t2.comm(1, q));      // [A,B] -> [A,B]^(A^(m/p))
            out.emplace_back(t1.comm(1, k), t2.b_block(0));      // [A,B]^(A^k) -> B^m
            out.emplace_back(t1.comm(2, 0), t2.comm(1, 0));      // [A,B^2] -> [A,B]
            out.emplace_back(t1.comm(2, k), t2.comm(2, 0));      // [A,B^2]^(A^k) -> [A,B^2]
            break;
        }
        default:
            throw ResiduallyFiniteCase("psi is defined only for the non-RF cases");
    }
    std::set<int> sources, targets;
    for (auto [s, t] : out) {
        if (!sources.insert(s).second)
            throw AssignmentCollision("special assignments collide on a source position");
        if (!targets.insert(t).second)
            throw AssignmentCollision("special assignments collide on a target position");
    }
    return out;
}

Commensurator assemble_psi(const BSCase& c, const std::vector<int>& completion) {
    FreeBasis basis1 = paper_basis(c.m, c.n, 1);
    std::vector<Word> targets = paper_basis_words(c.m, c.n, 2);
    auto specials = special_assignments(c);

    std::vector<int> image_of(targets.size(), -1);
    std::set<int> used_targets;
    for (auto [s, t] : specials) {
        image_of[static_cast<std::size_t>(s)] = t;
        used_targets.insert(t);
    }
    std::vector<int> free_sources, free_targets;
    for (int i = 0; i < static_cast<int>(targets.size()); ++i) {
        if (image_of[static_cast<std::size_t>(i)] < 0) free_sources.push_back(i);
        if (!used_targets.count(i)) free_targets.push_back(i);
    }
    if (completion.size() != free_sources.size())
        throw Error("completion permutation has the wrong size");
    std::vector<bool> hit(free_targets.size(), false);
    for (std::size_t i = 0; i < free_sources.size(); ++i) {
        int pos = completion[i];
        if (pos < 0 || pos >= static_cast<int>(free_targets.size()) ||
            hit[static_cast<std::size_t>(pos)])
            throw Error("completion is not a permutation");
        hit[static_cast<std::size_t>(pos)] = true;
        image_of[static_cast<std::size_t>(free_sources[i])] =
            free_targets[static_cast<std::size_t>(pos)];
    }
    std::vector<Word> images;
    images.reserve(targets.size());
    for (int t : image_of) images.push_back(targets[static_cast<std::size_t>(t)]);

    SubgroupGraph delta2 = kernel_graph(Alphabet::upper2(), FiniteAbelianTarget::pi2(c.m, c.n));
    return Commensurator::from_basis_map(std::move(basis1), std::move(images), delta2);
}

}  // namespace

int free_completion_size(const BSCase& c) {
    return c.m * c.n + 1 - static_cast<int>(special_assignments(c).size());
}

Commensurator build_psi(const BSCase& c) {
    std::vector<int> id(static_cast<std::size_t>(free_completion_size(c)));
    std::iota(id.begin(), id.end(), 0);
    return assemble_psi(c, id);
}

Commensurator build_psi(const BSCase& c, const std::vector<int>& completion) {
    return assemble_psi(c, completion);
}

Commensurator build_psi_random(const BSCase& c, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(free_completion_size(c)));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return assemble_psi(c, perm);
}

Commensurator evaluate(const Word& bs_word, const Commensurator& phi,
                       const Commensurator& psi) {
    if (bs_word.alphabet() != Alphabet::bs())
        throw AlphabetMismatch("evaluate: expected a word over {a, b}");
    Commensurator acc = Commensurator::identity(phi.alphabet());
    for (const Syllable& s : bs_word.syllables()) {
        const Commensurator& gen = s.gen == 0 ? psi : phi;
        Commensurator factor = s.exp > 0 ? gen : invert(gen);
        std::int64_t k = std::abs(s.exp);
        for (std::int64_t i = 0; i < k; ++i) acc = compose(acc, factor);
    }
    return acc;
}

bool verify_relator(const Commensurator& phi, const Commensurator& psi, int m, int n) {
    Commensurator lhs = compose(psi, compose(pow(phi, m), invert(psi)));
    return equal(lhs, pow(phi, n));
}

std::pair<Word, Word> witness_split(const BSCase& c) {
    const Alphabet bs = Alphabet::bs();
    const Word a = Word::generator(bs, 0);
    const Word b = Word::generator(bs, 1);
    switch (c.kind) {
        case BSCaseKind::SamePrime:
            // gamma is conjugate to a commutator of these two halves.
            return {multiply(multiply(a, invert(b)), invert(a)), pow(b, c.m)};
        case BSCaseKind::DifferentPrimeDivisors:
            return {conjugate(b, a), pow(b, c.m / c.p)};
        case BSCaseKind::SamePrimeDivisors:
            return {conjugate(pow(b, c.k_div), a), pow(b, c.m / c.p)};
        default:
            throw ResiduallyFiniteCase("witness is defined only for the non-RF cases");
    }
}

Witness witness_nontriviality(const BSCase& c) {
    return witness_nontriviality(c, build_phi(), build_psi(c));
}

Witness witness_nontriviality(const BSCase& c, const Commensurator& phi,
                              const Commensurator& psi) {
    auto [w1, w2] = witness_split(c);
    Commensurator lhs = evaluate(multiply(w1, w2), phi, psi);
    Commensurator rhs = evaluate(multiply(w2, w1), phi, psi);
    SubgroupGraph common = intersect(lhs.domain(), rhs.domain());
    for (const Word& x : paper_basis_words(c.m, c.n, 2)) {
        if (!membership(x, common)) continue;
        Word li = lhs.apply(x);
        Word ri = rhs.apply(x);
        if (li != ri) return Witness{x, li, ri, w1, w2};
    }
    throw NoWitnessFound("Phi(w1 w2) and Phi(w2 w1) agree on every tested basis element");
}

namespace {

using Perm = std::vector<int>;

Perm perm_identity(int d) {
    Perm p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Apply q first, then p.
Perm perm_mul(const Perm& p, const Perm& q) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = p[static_cast<std::size_t>(q[i])];
    return out;
}

Perm perm_inv(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return out;
}

Perm perm_pow(const Perm& p, std::int64_t e) {
    Perm base = e < 0 ? perm_inv(p) : p;
    std::int64_t k = std::abs(e);
    Perm acc = perm_identity(static_cast<int>(p.size()));
    for (std::int64_t i = 0; i < k; ++i) acc = perm_mul(acc, base);
    return acc;
}

Perm eval_word(const Word& w, const Perm& pa, const Perm& pb) {
    Perm acc = perm_identity(static_cast<int>(pa.size()));
    for (const Syllable& s : w.syllables()) {
        const Perm& g = s.gen == 0 ? pa : pb;
        acc = perm_mul(acc, perm_pow(g, s.exp));
    }
    return acc;
}

}  // namespace

RFSpotCheckReport rf_spot_check(int m, int n, const Word& gamma, int degree_bound, int jobs) {
    if (degree_bound > 6) throw Error("rf_spot_check: degree bound capped at 6");
    RFSpotCheckReport report;
    report.degree_bound = degree_bound;
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Perm> all;
        Perm p = perm_identity(d);
        do {
            all.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));

        int workers = std::max(1, jobs);
        std::vector<std::int64_t> pair_counts(static_cast<std::size_t>(workers), 0);
        std::vector<std::optional<std::pair<Perm, Perm>>> bad(static_cast<std::size_t>(workers));
        auto run = [&](int wid) {
            for (std::size_t ia = static_cast<std::size_t>(wid); ia < all.size();
                 ia += static_cast<std::size_t>(workers)) {
                const Perm& pa = all[ia];
                Perm pa_inv = perm_inv(pa);
                for (const Perm& pb : all) {
                    // sigma_a^-1 sigma_b^m sigma_a = sigma_b^n
                    Perm lhs = perm_mul(perm_mul(pa_inv, perm_pow(pb, m)), pa);
                    if (lhs != perm_pow(pb, n)) continue;
                    ++pair_counts[static_cast<std::size_t>(wid)];
                    if (eval_word(gamma, pa, pb) != perm_identity(d) &&
                        !bad[static_cast<std::size_t>(wid)])
                        bad[static_cast<std::size_t>(wid)] = std::pair{pa, pb};
                }
            }
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
            for (auto& t : threads) t.join();
        }
        for (int w = 0; w < workers; ++w) {
            report.relator_pairs += pair_counts[static_cast<std::size_t>(w)];
            if (bad[static_cast<std::size_t>(w)] && report.gamma_always_trivial) {
                report.gamma_always_trivial = false;
                report.counterexample_degree = d;
                report.counterexample_a = bad[static_cast<std::size_t>(w)]->first;
                report.counterexample_b = bad[static_cast<std::size_t>(w)]->second;
            }
        }
    }
    return report;
}

}  // namespace commalg
