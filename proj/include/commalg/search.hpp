#pragma once

#include <cstdint>
#include <vector>

#include "commalg/bs.hpp"

namespace commalg {

/// The block of non-distinguished basis positions being permuted by the
/// assignment search (the distinguished A^m/A^n pair is always pinned).
struct AssignmentWindow {
    int size = 6;  // permute the first six non-distinguished positions
};

struct SearchReport {
    std::int64_t total = 0;
    std::int64_t witness_count = 0;
    /// Permutations (as images of 0..w-1) whose psi fixes every tested
    /// basis element under Phi(gamma).
    std::vector<std::vector<int>> failures;
};

/// Enumerate the completions reachable through the window: for each
/// permutation of the first `window` non-distinguished target positions,
/// the commensurator pinning A^m -> A^n and matching the rest in order.
std::vector<Commensurator> enumerate_assignments(int m, int n, const AssignmentWindow& window);

/// Exhaustive experiment: for every candidate psi, test Phi(gamma) on
/// the first basis element of the codomain table and, when it is fixed,
/// sweep all basis elements before declaring a failure.
SearchReport search_witnesses(int m, int n, const AssignmentWindow& window, const Word& gamma,
                              int jobs = 1);

/// One-line cycle notation for a window permutation, e.g. "(1 2)(3 4 5)".
std::string cycle_notation(const std::vector<int>& perm);

}  // namespace commalg
