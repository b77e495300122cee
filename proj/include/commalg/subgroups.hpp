#pragma once

#include <iosfwd>
#include <vector>

#include "commalg/words.hpp"

namespace commalg {

/// Homomorphism to a finite abelian product Z/m1 x ... x Z/mk, given by
/// exponent-sum images of each free generator.
struct FiniteAbelianTarget {
    std::vector<int> moduli;                  // each >= 1
    std::vector<std::vector<int>> gen_images; // one residue vector per generator

    FiniteAbelianTarget(std::vector<int> moduli, std::vector<std::vector<int>> gen_images);

    /// pi_1 : F_2 -> Z/m x Z/n with A -> (1,0), B -> (0,1).
    static FiniteAbelianTarget pi1(int m, int n);
    /// pi_2 : F_2 -> Z/m x Z/n with A -> (0,1), B -> (1,0).
    static FiniteAbelianTarget pi2(int m, int n);
};

std::vector<int> project(const Word& w, const FiniteAbelianTarget& t);

/// Finite-index subgroup of F_k as a complete, folded, basepointed coset
/// table. States are canonically renumbered by breadth-first order from the
/// basepoint (state 0), so equality is direct table comparison.
class SubgroupGraph {
public:
    /// Index-1 subgroup (the whole group).
    static SubgroupGraph whole_group(const Alphabet& alphabet);
    /// Coset table from one permutation per generator, based at `basepoint`.
    /// Restricts to the basepoint's orbit under the generated group.
    static SubgroupGraph from_permutations(const Alphabet& alphabet,
                                           const std::vector<std::vector<int>>& perms,
                                           int basepoint);

    const Alphabet& alphabet() const { return alpha_; }
    int index() const { return static_cast<int>(fwd_.front().size()); }
    int basepoint() const { return 0; }

    /// Successor of `state` under generator `gen` (exponent +1).
    int step(int state, int gen) const { return fwd_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(state)]; }
    int step_back(int state, int gen) const { return bwd_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(state)]; }
    int trace(int state, const Word& w) const;

    /// The generator permutations, acting as step().
    const std::vector<std::vector<int>>& permutations() const { return fwd_; }

    bool operator==(const SubgroupGraph& other) const {
        return alpha_ == other.alpha_ && fwd_ == other.fwd_;
    }
    bool operator!=(const SubgroupGraph& other) const { return !(*this == other); }

private:
    SubgroupGraph(Alphabet alphabet, std::vector<std::vector<int>> fwd);

    Alphabet alpha_;
    std::vector<std::vector<int>> fwd_;  // [gen][state] -> state
    std::vector<std::vector<int>> bwd_;  // inverse permutations
};

SubgroupGraph kernel_graph(const Alphabet& alphabet, const FiniteAbelianTarget& t);
bool membership(const Word& w, const SubgroupGraph& h);
/// Basepoint component of the fiber product.
SubgroupGraph intersect(const SubgroupGraph& h1, const SubgroupGraph& h2);
bool is_normal(const SubgroupGraph& h);
/// The same subgroup graph re-basepointed at trace(basepoint, w); this
/// represents the conjugate subgroup w H w^-1 ... traced through w.
SubgroupGraph rebase(const SubgroupGraph& h, const Word& w);

/// Table format: one line per state, columns = successor per generator.
void dump_table(const SubgroupGraph& h, std::ostream& out);

}  // namespace commalg
