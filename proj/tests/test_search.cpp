#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "commalg/error.hpp"
#include "commalg/search.hpp"

using namespace commalg;

namespace {
const Alphabet AB = Alphabet::upper2();

Word w(const std::string& s) { return parse(s, AB); }
}  // namespace

TEST_CASE("enumeration size and pinning") {
    auto one = enumerate_assignments(2, 4, AssignmentWindow{1});
    CHECK(one.size() == 1);
    auto six = enumerate_assignments(2, 4, AssignmentWindow{3});
    CHECK(six.size() == 6);
    std::set<std::vector<Word>> distinct;
    for (const Commensurator& c : six) {
        CHECK(c.apply(w("A^2")) == w("A^4"));
        CHECK(c.domain().index() == 8);
        CHECK(c.codomain().index() == 8);
        distinct.insert(c.images());
    }
    CHECK(distinct.size() == 6);
    // Rank 0 is the in-order completion: the identity window permutation.
    CHECK(six.front().images() == one.front().images());
}

TEST_CASE("window validation") {
    CHECK_THROWS_AS((void)enumerate_assignments(2, 4, AssignmentWindow{0}), Error);
    // (2,4) has 8 non-distinguished positions.
    CHECK_THROWS_AS((void)enumerate_assignments(2, 4, AssignmentWindow{9}), Error);
    CHECK(enumerate_assignments(2, 4, AssignmentWindow{8}).size() == 40320);
    CHECK_THROWS_AS((void)enumerate_assignments(2, 2, AssignmentWindow{1}), ResiduallyFiniteCase);
}

TEST_CASE("small search finds witnesses and accounts for every candidate") {
    Word gamma = gamma_word(classify(2, 4));
    SearchReport report = search_witnesses(2, 4, AssignmentWindow{3}, gamma);
    CHECK(report.total == 6);
    CHECK(report.witness_count + static_cast<std::int64_t>(report.failures.size()) == 6);
    CHECK(report.witness_count >= 1);
}

TEST_CASE("search is deterministic across thread counts") {
    Word gamma = gamma_word(classify(2, 4));
    SearchReport serial = search_witnesses(2, 4, AssignmentWindow{4}, gamma, 1);
    SearchReport parallel = search_witnesses(2, 4, AssignmentWindow{4}, gamma, 4);
    CHECK(serial.total == parallel.total);
    CHECK(serial.witness_count == parallel.witness_count);
    CHECK(serial.failures == parallel.failures);
}

TEST_CASE("reported failures really fix every tested basis element") {
    Word gamma = gamma_word(classify(2, 4));
    SearchReport report = search_witnesses(2, 4, AssignmentWindow{3}, gamma);
    std::vector<Commensurator> candidates = enumerate_assignments(2, 4, AssignmentWindow{3});
    Commensurator phi = build_phi();
    std::vector<Word> table2 = paper_basis_words(2, 4, 2);
    // Failures are reported as window permutations; rebuild each candidate
    // and re-run the triviality test from scratch.
    for (const std::vector<int>& perm : report.failures) {
        std::vector<Word> images;
        // Match the enumeration: perm reorders the window positions only.
        std::set<std::vector<Word>> pool;
        for (const Commensurator& c : candidates) pool.insert(c.images());
        // find the candidate whose window ordering equals perm
        bool found = false;
        for (const Commensurator& c : candidates) {
            bool match = true;
            for (std::size_t i = 0; i < perm.size() && match; ++i)
                match = (c.images()[i] == table2[static_cast<std::size_t>(perm[i])]);
            if (!match) continue;
            found = true;
            Commensurator image = evaluate(gamma, phi, c);
            for (const Word& x : table2) {
                if (!membership(x, image.domain())) continue;
                CHECK(image.apply(x) == x);
            }
        }
        CHECK(found);
    }
}

TEST_CASE("cycle notation") {
    CHECK(cycle_notation({0, 1, 2}) == "()");
    CHECK(cycle_notation({1, 0, 2}) == "(1 2)");
    CHECK(cycle_notation({1, 0, 3, 4, 2}) == "(1 2)(3 4 5)");
    CHECK(cycle_notation({}) == "()");
}
