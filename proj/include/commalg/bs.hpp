#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "commalg/comm.hpp"

namespace commalg {

struct BSPresentation {
    int m, n;
    Alphabet alphabet = Alphabet::bs();
    /// Reduced relator a^-1 b^m a b^-n.
    Word relator() const;
};

enum class BSCaseKind {
    ResiduallyFinite,
    SamePrime,               // m = p^k, n = p^l, k < l
    DifferentPrimeDivisors,  // p | m, p does not divide n
    SamePrimeDivisors,       // k | m, k | n; p | m/k, p does not divide n/k
};

/// Classification of (m, n) with the orientation actually used by the
/// construction (2 <= m, n after sign normalization; swapped records
/// whether the oriented (m, n) exchanges the sign-normalized input).
struct BSCase {
    BSCaseKind kind;
    int m = 0, n = 0;
    int p = 0;
    int k_exp = 0, l_exp = 0;  // SamePrime: m = p^k_exp, n = p^l_exp
    int k_div = 0;             // SamePrimeDivisors: the common divisor k
    bool unit_m_over_p = false;  // DifferentPrimeDivisors: m/p == 1
    bool swapped = false;
    bool negated = false;
};

BSCase classify(int m, int n);

/// Meskin's word for the case, reduced, over {a, b}.
Word gamma_word(const BSCase& c);

/// phi = inner conjugation by A.
Commensurator build_phi();

/// psi = g : Delta_1 -> Delta_2 with g(A^m) = A^n, the case's special
/// assignments, and remaining basis elements matched in table order.
Commensurator build_psi(const BSCase& c);
/// Same, but the remaining (non-special) elements are matched through the
/// given permutation of the remaining-target list.
Commensurator build_psi(const BSCase& c, const std::vector<int>& completion);
/// Seeded random bijective completion of the non-special part.
Commensurator build_psi_random(const BSCase& c, std::uint64_t seed);

/// Number of non-special basis positions available to completions.
int free_completion_size(const BSCase& c);

/// Substitute a -> psi, b -> phi and compose right-to-left.
Commensurator evaluate(const Word& bs_word, const Commensurator& phi,
                       const Commensurator& psi);

/// Decide psi o phi^m o psi^-1 = phi^n on a basis of the common domain.
bool verify_relator(const Commensurator& phi, const Commensurator& psi, int m, int n);

struct Witness {
    Word x;    // basis element separating the two sides
    Word lhs;  // Phi(w1 w2)(x)
    Word rhs;  // Phi(w2 w1)(x)
    Word w1, w2;
};

Witness witness_nontriviality(const BSCase& c);
Witness witness_nontriviality(const BSCase& c, const Commensurator& phi,
                              const Commensurator& psi);

/// The two halves of the non-commuting pair checked by the witness.
std::pair<Word, Word> witness_split(const BSCase& c);

struct RFSpotCheckReport {
    int degree_bound = 0;
    std::int64_t relator_pairs = 0;  // pairs satisfying the BS relator, all degrees
    bool gamma_always_trivial = true;
    int counterexample_degree = 0;
    std::vector<int> counterexample_a, counterexample_b;
};

/// Exhaustively enumerate pairs of permutations of each degree <= bound
/// satisfying the relator, and test whether gamma dies in every such image.
RFSpotCheckReport rf_spot_check(int m, int n, const Word& gamma, int degree_bound,
                                int jobs = 1);

}  // namespace commalg
