#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "commalg/comm.hpp"
#include "commalg/error.hpp"
#include "test_util.hpp"

using namespace commalg;
using testutil::random_word;

namespace {
const Alphabet AB = Alphabet::upper2();

Word w(const std::string& s) { return parse(s, AB); }

// g : Delta_1 -> Delta_2 for (m, n), sending the i-th element of the first
// table to the i-th element of the second.
Commensurator table_map(int m, int n) {
    SubgroupGraph d2 = kernel_graph(AB, FiniteAbelianTarget::pi2(m, n));
    return Commensurator::from_basis_map(paper_basis(m, n, 1), paper_basis_words(m, n, 2), d2);
}

// Random element of the subgroup underlying `basis`.
Word random_element(std::mt19937_64& rng, const FreeBasis& basis, int len) {
    return basis.expand(random_word(rng, basis.basis_alphabet(), len));
}
}  // namespace

TEST_CASE("inner representatives") {
    Commensurator ca = Commensurator::inner(w("A"));
    CHECK(ca.domain().index() == 1);
    CHECK(ca.codomain().index() == 1);
    CHECK(ca.apply(w("A^-1 B^-1 A B")) == w("B^-1 A B A^-1"));
    CHECK(ca.apply(w("A")) == w("A"));
    CHECK(ca.apply(Word(AB)).is_identity());

    CHECK(is_identity(Commensurator::inner(Word(AB))));
    CHECK(is_identity(Commensurator::identity(AB)));
    CHECK_FALSE(is_identity(ca));

    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        Word u = random_word(rng, AB, 6), v = random_word(rng, AB, 6);
        CHECK(ca.apply(multiply(u, v)) == multiply(ca.apply(u), ca.apply(v)));
        CHECK(ca.apply(u) == conjugate(u, w("A")));
    }
}

TEST_CASE("from_basis_map validation") {
    SubgroupGraph d2 = kernel_graph(AB, FiniteAbelianTarget::pi2(2, 3));
    Commensurator g = table_map(2, 3);
    CHECK(g.domain().index() == 6);
    CHECK(g.codomain().index() == 6);
    CHECK(g.apply(w("A^2")) == w("A^3"));
    // B^3 is the 5th table entry; its image is the 5th entry (B^2)^A.
    CHECK(g.apply(w("B^3")) == w("A B^2 A^-1"));

    // An image outside the codomain.
    std::vector<Word> bad = paper_basis_words(2, 3, 2);
    bad[0] = w("B^3");  // in Delta_1, not Delta_2
    CHECK_THROWS_AS((void)Commensurator::from_basis_map(paper_basis(2, 3, 1), bad, d2),
                    NotInSubgroup);

    // Repeated image: not a basis of the codomain.
    std::vector<Word> repeated = paper_basis_words(2, 3, 2);
    repeated[1] = repeated[0];
    CHECK_THROWS_AS((void)Commensurator::from_basis_map(paper_basis(2, 3, 1), repeated, d2),
                    GeneratesProperSubgroup);

    CHECK_THROWS_AS((void)g.apply(w("A")), NotInDomain);
    CHECK_THROWS_AS((void)g.apply(w("B")), NotInDomain);
}

TEST_CASE("apply is multiplicative on the domain") {
    std::mt19937_64 rng(71);
    Commensurator g = table_map(2, 4);
    FreeBasis basis = paper_basis(2, 4, 1);
    for (int trial = 0; trial < 100; ++trial) {
        Word u = random_element(rng, basis, 4), v = random_element(rng, basis, 4);
        CHECK(g.apply(multiply(u, v)) == multiply(g.apply(u), g.apply(v)));
        CHECK(g.apply(invert(u)) == invert(g.apply(u)));
    }
}

TEST_CASE("invert is a structural swap") {
    Commensurator g = table_map(2, 3);
    Commensurator ginv = invert(g);
    CHECK(ginv.domain() == g.codomain());
    CHECK(ginv.codomain() == g.domain());
    CHECK(ginv.apply(w("A^3")) == w("A^2"));

    std::mt19937_64 rng(73);
    FreeBasis basis = paper_basis(2, 3, 1);
    for (int trial = 0; trial < 80; ++trial) {
        Word u = random_element(rng, basis, 4);
        CHECK(ginv.apply(g.apply(u)) == u);
    }
    CHECK(equal(invert(ginv), g));
    CHECK(equal(invert(Commensurator::inner(w("A"))), Commensurator::inner(w("A^-1"))));
}

TEST_CASE("compose") {
    Commensurator ca = Commensurator::inner(w("A"));
    CHECK(equal(compose(ca, ca), Commensurator::inner(w("A^2"))));
    CHECK(equal(compose(ca, Commensurator::inner(w("A^-1"))), Commensurator::identity(AB)));

    Commensurator g = table_map(2, 3);
    // Left domain restriction: psi after an inner map still has domain
    // Delta_1 because Delta_1 is normal.
    Commensurator comp = compose(g, ca);
    CHECK(comp.domain() == g.domain());
    CHECK(comp.apply(w("A^2")) == g.apply(w("A^2")));
    CHECK(comp.apply(w("B^3")) == g.apply(conjugate(w("B^3"), w("A"))));

    CHECK(is_identity(compose(invert(g), g)));
    CHECK(is_identity(compose(g, invert(g))));

    // Associativity up to class equality.
    Commensurator lhs = compose(compose(g, ca), ca);
    Commensurator rhs = compose(g, compose(ca, ca));
    CHECK(equal(lhs, rhs));
}

TEST_CASE("pow") {
    Commensurator ca = Commensurator::inner(w("A"));
    CHECK(equal(pow(ca, 3), Commensurator::inner(w("A^3"))));
    CHECK(equal(pow(ca, -2), Commensurator::inner(w("A^-2"))));
    CHECK(is_identity(pow(ca, 0)));
    Commensurator g = table_map(2, 3);
    CHECK(is_identity(compose(pow(g, 1), pow(g, -1))));
}

TEST_CASE("class equality ignores the choice of representative domain") {
    // The identity restricted to Delta_1 is still the identity class.
    FreeBasis basis = paper_basis(2, 3, 1);
    SubgroupGraph d1 = basis.subgroup();
    Commensurator restricted =
        Commensurator::from_basis_map(paper_basis(2, 3, 1), basis.elements(), d1);
    CHECK(equal(restricted, Commensurator::identity(AB)));
    CHECK(is_identity(restricted));

    // Restricting a representative does not change its class.
    Commensurator ca = Commensurator::inner(w("A"));
    Commensurator ca_restricted = compose(ca, restricted);
    CHECK(ca_restricted.domain().index() == 6);
    CHECK(equal(ca_restricted, ca));
    CHECK_FALSE(equal(ca_restricted, Commensurator::inner(w("B"))));
    CHECK_FALSE(equal(restricted, ca));
}

TEST_CASE("equal distinguishes genuinely different maps") {
    Commensurator g23 = table_map(2, 3);
    Commensurator g24 = table_map(2, 4);
    CHECK(equal(g23, g23));
    CHECK_FALSE(equal(g23, Commensurator::identity(AB)));
    CHECK_FALSE(equal(g24, Commensurator::inner(w("A"))));
}
