#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "commalg/bs.hpp"
#include "commalg/error.hpp"
#include "test_util.hpp"

using namespace commalg;

namespace {
const Alphabet AB = Alphabet::upper2();
const Alphabet ab = Alphabet::bs();

Word w(const std::string& s) { return parse(s, AB); }
Word wb(const std::string& s) { return parse(s, ab); }
}  // namespace

TEST_CASE("presentation relator") {
    CHECK(BSPresentation{2, 4}.relator() == wb("a^-1 b^2 a b^-4"));
    CHECK(BSPresentation{3, 2}.relator() == wb("a^-1 b^3 a b^-2"));
}

TEST_CASE("classification") {
    BSCase c24 = classify(2, 4);
    CHECK(c24.kind == BSCaseKind::SamePrime);
    CHECK(c24.m == 2);
    CHECK(c24.n == 4);
    CHECK(c24.p == 2);
    CHECK(c24.k_exp == 1);
    CHECK(c24.l_exp == 2);
    CHECK_FALSE(c24.swapped);
    CHECK_FALSE(c24.negated);

    BSCase c42 = classify(4, 2);
    CHECK(c42.kind == BSCaseKind::SamePrime);
    CHECK(c42.m == 2);
    CHECK(c42.n == 4);
    CHECK(c42.swapped);

    BSCase cneg = classify(-2, -4);
    CHECK(cneg.kind == BSCaseKind::SamePrime);
    CHECK(cneg.negated);
    CHECK(cneg.m == 2);

    BSCase c23 = classify(2, 3);
    CHECK(c23.kind == BSCaseKind::DifferentPrimeDivisors);
    CHECK(c23.m == 2);
    CHECK(c23.n == 3);
    CHECK(c23.p == 2);
    CHECK(c23.unit_m_over_p);

    BSCase c64 = classify(6, 4);
    CHECK(c64.kind == BSCaseKind::DifferentPrimeDivisors);
    CHECK(c64.m == 6);
    CHECK(c64.n == 4);
    CHECK(c64.p == 3);
    CHECK_FALSE(c64.unit_m_over_p);
    CHECK_FALSE(c64.swapped);

    BSCase c1218 = classify(12, 18);
    CHECK(c1218.kind == BSCaseKind::SamePrimeDivisors);
    CHECK(c1218.m == 12);
    CHECK(c1218.n == 18);
    CHECK(c1218.k_div == 6);
    CHECK(c1218.p == 2);

    CHECK(classify(3, 3).kind == BSCaseKind::ResiduallyFinite);
    CHECK(classify(1, 5).kind == BSCaseKind::ResiduallyFinite);
    CHECK(classify(5, -5).kind == BSCaseKind::ResiduallyFinite);
    CHECK(classify(-7, -7).kind == BSCaseKind::ResiduallyFinite);

    CHECK_THROWS_AS((void)classify(0, 5), ZeroParameter);
    CHECK_THROWS_AS((void)classify(3, 0), ZeroParameter);
    CHECK_THROWS_AS((void)classify(2, -3), MixedSigns);
    CHECK_THROWS_AS((void)classify(-4, 6), MixedSigns);
}

TEST_CASE("classification is symmetric in (m, n) up to orientation") {
    for (int m = 2; m <= 12; ++m)
        for (int n = 2; n <= 12; ++n) {
            BSCase lhs = classify(m, n), rhs = classify(n, m);
            CHECK(lhs.kind == rhs.kind);
            if (lhs.kind != BSCaseKind::ResiduallyFinite) {
                CHECK(lhs.m == rhs.m);
                CHECK(lhs.n == rhs.n);
                CHECK(lhs.p == rhs.p);
            }
        }
}

TEST_CASE("gamma words") {
    CHECK(gamma_word(classify(2, 4)) == commutator(wb("a^-1"), wb("b"), wb("b^2")));
    CHECK(gamma_word(classify(2, 4)) == wb("b^-1 a b a^-1 b^-2 a b^-1 a^-1 b^3"));
    CHECK(gamma_word(classify(2, 3)) == commutator(wb("a b a^-1"), wb("b")));
    CHECK(gamma_word(classify(6, 4)) == commutator(wb("a b a^-1"), wb("b^2")));
    CHECK(gamma_word(classify(12, 18)) == commutator(wb("a b^6 a^-1"), wb("b^6")));
    CHECK_THROWS_AS((void)gamma_word(classify(3, 3)), ResiduallyFiniteCase);
}

TEST_CASE("phi is conjugation by A") {
    Commensurator phi = build_phi();
    CHECK(phi.apply(w("A^-1 B^-1 A B")) == conjugate(w("A^-1 B^-1 A B"), w("A")));
    CHECK(phi.domain().index() == 1);
}

TEST_CASE("psi carries the special assignments, same-prime case") {
    Commensurator psi = build_psi(classify(2, 4));
    CHECK(psi.domain().index() == 8);
    CHECK(psi.codomain().index() == 8);
    CHECK(psi.apply(w("A^2")) == w("A^4"));
    CHECK(psi.apply(commutator(w("A"), w("B"))) == conjugate(commutator(w("A"), w("B")), w("A")));
    CHECK(psi.apply(conjugate(commutator(w("A"), w("B")), w("A"))) ==
          conjugate(commutator(w("A"), w("B")), w("A^2")));
    CHECK(psi.apply(commutator(w("A"), w("B^2"))) == w("B^2"));
    CHECK(psi.apply(conjugate(commutator(w("A"), w("B^2")), w("A"))) ==
          commutator(w("A"), w("B")));
}

TEST_CASE("psi special assignments, different-prime-divisors cases") {
    // m/p = 1.
    Commensurator psi23 = build_psi(classify(2, 3));
    CHECK(psi23.apply(w("A^2")) == w("A^3"));
    CHECK(psi23.apply(commutator(w("A"), w("B"))) ==
          conjugate(commutator(w("A"), w("B")), w("A")));
    CHECK(psi23.apply(conjugate(commutator(w("A"), w("B")), w("A"))) ==
          conjugate(commutator(w("A"), w("B")), w("A^2")));
    CHECK(psi23.apply(commutator(w("A"), w("B^2"))) == commutator(w("A"), w("B")));
    CHECK(psi23.apply(conjugate(commutator(w("A"), w("B^2")), w("A"))) == w("B^2"));

    // m/p = 2.
    Commensurator psi64 = build_psi(classify(6, 4));
    CHECK(psi64.apply(w("A^6")) == w("A^4"));
    CHECK(psi64.apply(commutator(w("A"), w("B"))) ==
          conjugate(commutator(w("A"), w("B")), w("A^2")));
    CHECK(psi64.apply(conjugate(commutator(w("A"), w("B")), w("A"))) ==
          conjugate(commutator(w("A"), w("B")), w("A")));
    CHECK(psi64.apply(conjugate(commutator(w("A"), w("B^2")), w("A"))) == w("B^6"));
}

TEST_CASE("psi special assignments, same-prime-divisors case") {
    BSCase c = classify(12, 18);
    Commensurator psi = build_psi(c);
    CHECK(psi.apply(w("A^12")) == w("A^18"));
    CHECK(psi.apply(commutator(w("A"), w("B"))) ==
          conjugate(commutator(w("A"), w("B")), w("A^6")));
    CHECK(psi.apply(conjugate(commutator(w("A"), w("B")), w("A^6"))) == w("B^12"));
    CHECK(psi.apply(commutator(w("A"), w("B^2"))) == commutator(w("A"), w("B")));
    CHECK(psi.apply(conjugate(commutator(w("A"), w("B^2")), w("A^6"))) ==
          commutator(w("A"), w("B^2")));
}

TEST_CASE("some same-prime-divisor orientations have no collision-free table") {
    CHECK_THROWS_AS((void)build_psi(classify(12, 6)), AssignmentCollision);
}

TEST_CASE("relator verification") {
    CHECK(verify_relator(build_phi(), build_psi(classify(2, 4)), 2, 4));
    CHECK(verify_relator(build_phi(), build_psi(classify(2, 3)), 2, 3));
    CHECK(verify_relator(build_phi(), build_psi(classify(6, 4)), 6, 4));

    // Wrong exponents must fail.
    CHECK_FALSE(verify_relator(build_phi(), build_psi(classify(2, 4)), 2, 6));
    CHECK_FALSE(verify_relator(build_phi(), build_psi(classify(2, 4)), 4, 2));

    // A basis bijection that scrambles the table (reversed order) is a valid
    // commensurator but not a solution of the relator.
    std::vector<Word> reversed = paper_basis_words(2, 4, 2);
    std::reverse(reversed.begin(), reversed.end());
    SubgroupGraph d2 = kernel_graph(AB, FiniteAbelianTarget::pi2(2, 4));
    Commensurator broken =
        Commensurator::from_basis_map(paper_basis(2, 4, 1), reversed, d2);
    CHECK_FALSE(verify_relator(build_phi(), broken, 2, 4));
}

TEST_CASE("relator holds for every completion of the free positions") {
    BSCase c = classify(2, 4);
    Commensurator phi = build_phi();
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Commensurator psi = build_psi_random(c, seed);
        CHECK(verify_relator(phi, psi, 2, 4));
    }
    CHECK(free_completion_size(c) == 4);
}

TEST_CASE("evaluate is a monoid homomorphism into composition") {
    Commensurator phi = build_phi();
    Commensurator psi = build_psi(classify(2, 3));
    CHECK(is_identity(evaluate(Word(ab), phi, psi)));
    CHECK(equal(evaluate(wb("b"), phi, psi), phi));
    CHECK(equal(evaluate(wb("a"), phi, psi), psi));
    CHECK(equal(evaluate(wb("b^3"), phi, psi), pow(phi, 3)));
    CHECK(equal(evaluate(wb("a b"), phi, psi), compose(psi, phi)));
    CHECK(equal(evaluate(wb("a^-1 a b"), phi, psi), phi));
    Word u = wb("a b^-1"), v = wb("b a^-1");
    CHECK(equal(evaluate(multiply(u, v), phi, psi),
                compose(evaluate(u, phi, psi), evaluate(v, phi, psi))));
}

TEST_CASE("witness against triviality, same-prime case") {
    Witness wit = witness_nontriviality(classify(2, 4));
    CHECK(wit.x == commutator(w("A"), w("B")));
    CHECK(wit.lhs == conjugate(commutator(w("A"), w("B")), w("A")));
    CHECK(wit.rhs == conjugate(w("B^2"), w("A^2")));
    CHECK(wit.lhs != wit.rhs);
    auto [w1, w2] = witness_split(classify(2, 4));
    CHECK(w1 == wb("a b^-1 a^-1"));
    CHECK(w2 == wb("b^2"));
    // The split halves multiply to a conjugate of a commutator whose
    // commutator is the witness pair's difference.
    CHECK(wit.w1 == w1);
    CHECK(wit.w2 == w2);
}

TEST_CASE("witness against triviality, other cases") {
    Witness w23 = witness_nontriviality(classify(2, 3));
    CHECK(w23.x == commutator(w("A"), w("B")));
    CHECK(w23.lhs == conjugate(commutator(w("A"), w("B")), w("A^2")));
    CHECK(w23.rhs == conjugate(w("B^2"), w("A")));

    Witness w64 = witness_nontriviality(classify(6, 4));
    CHECK(w64.x == commutator(w("A"), w("B")));
    CHECK(w64.lhs == conjugate(commutator(w("A"), w("B")), w("A")));
    CHECK(w64.rhs == conjugate(w("B^6"), w("A^2")));

    CHECK_THROWS_AS((void)witness_nontriviality(classify(2, 2)), ResiduallyFiniteCase);
}

TEST_CASE("finite-quotient spot check") {
    // Pairs with sigma_a^-1 sigma_b^2 sigma_a = sigma_b^3 force sigma_b = 1
    // for degree <= 3: degree 1 gives 1 pair, degree 2 gives 2 (sigma_b = 1,
    // sigma_a free), degree 3 gives 6. Hand count: 9.
    auto report = rf_spot_check(2, 3, gamma_word(classify(2, 3)), 3);
    CHECK(report.degree_bound == 3);
    CHECK(report.relator_pairs == 9);
    CHECK(report.gamma_always_trivial);

    auto parallel = rf_spot_check(2, 3, gamma_word(classify(2, 3)), 3, 4);
    CHECK(parallel.relator_pairs == report.relator_pairs);
    CHECK(parallel.gamma_always_trivial == report.gamma_always_trivial);

    // Control: b itself is not in the kernel of every finite image of
    // BS(2,2), so the check must report a counterexample.
    auto control = rf_spot_check(2, 2, wb("b"), 2);
    CHECK_FALSE(control.gamma_always_trivial);
    CHECK(control.counterexample_degree == 2);

    CHECK_THROWS_AS((void)rf_spot_check(2, 3, wb("b"), 7), Error);
}
