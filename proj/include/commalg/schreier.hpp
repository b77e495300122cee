#pragma once

#include <optional>
#include <vector>

#include "commalg/subgroups.hpp"
#include "commalg/words.hpp"

namespace commalg {

/// Result of Stallings-folding a wedge of basepointed loops. Edges carry
/// annotations over a separate letter alphabet (one letter per input loop):
/// for any basepoint loop, the annotation product expands to the loop's
/// label. Geometry is always valid; annotations are only meaningful when no
/// fold ever merged two parallel edges (no rank drop), which holds whenever
/// the input loops freely generate the subgroup they span.
class FoldedCore {
public:
    FoldedCore(const Alphabet& ambient, const std::vector<Word>& loops,
               const Alphabet& letter_alphabet);

    bool rank_dropped() const { return rank_dropped_; }
    bool complete() const;
    int vertex_count() const { return static_cast<int>(fwd_.front().size()); }

    /// The folded graph as a canonical coset table; requires completeness.
    SubgroupGraph graph() const;

    /// Trace w from the basepoint and concatenate edge annotations; the
    /// result expands to w. Throws NotInSubgroup if the trace leaves the
    /// graph or does not return to the basepoint.
    Word rewrite(const Word& w) const;

private:
    struct Arrow {
        int target = -1;
        Word ann;
        Arrow() : ann(Alphabet({"?"})) {}
    };

    Alphabet ambient_;
    Alphabet letters_;
    bool rank_dropped_ = false;
    int base_ = 0;
    std::vector<std::vector<Arrow>> fwd_;  // [gen][vertex]
    std::vector<std::vector<Arrow>> bwd_;  // inverse arrows; ann is for backward traversal
};

/// Ordered free generating set of a finite-index subgroup, together with a
/// rewriting core mapping subgroup elements to words over basis letters
/// x1..xr (indexed by position).
class FreeBasis {
public:
    const SubgroupGraph& subgroup() const { return subgroup_; }
    const std::vector<Word>& elements() const { return elements_; }
    const Alphabet& basis_alphabet() const { return letters_; }
    int size() const { return static_cast<int>(elements_.size()); }

    /// Express w (an element of the subgroup) as a word over basis letters.
    Word rewrite(const Word& w) const { return core_.rewrite(w); }
    /// Substitute basis elements back into a word over basis letters.
    Word expand(const Word& basis_word) const { return substitute(basis_word, elements_); }

    friend FreeBasis verify_basis(const std::vector<Word>& candidate, const SubgroupGraph& h);

private:
    FreeBasis(SubgroupGraph subgroup, std::vector<Word> elements, Alphabet letters,
              FoldedCore core)
        : subgroup_(std::move(subgroup)),
          elements_(std::move(elements)),
          letters_(std::move(letters)),
          core_(std::move(core)) {}

    SubgroupGraph subgroup_;
    std::vector<Word> elements_;
    Alphabet letters_;
    FoldedCore core_;
};

/// Check that `candidate` is a free basis of H: every word lies in H, the
/// count matches the Nielsen-Schreier rank index*(rank-1)+1, and the folded
/// wedge of loops reproduces H's graph exactly. Throws NotInSubgroup,
/// WrongCount, or GeneratesProperSubgroup.
FreeBasis verify_basis(const std::vector<Word>& candidate, const SubgroupGraph& h);

/// A Schreier basis of an arbitrary finite-index subgroup graph, from a
/// breadth-first spanning tree (one generator per non-tree edge).
FreeBasis schreier_basis(const SubgroupGraph& h);

/// The standard basis table of Delta_1 (which = 1) or Delta_2 (which = 2)
/// for parameters (m, n): commutator block [A,B^j]^(A^i), then the B-power
/// block, then the A-power, with (m, n) exchanged in exponents for which = 2.
FreeBasis paper_basis(int m, int n, int which);

/// The table words alone, without building or verifying the subgroup.
std::vector<Word> paper_basis_words(int m, int n, int which);

/// Subgroup generated by `words` as a coset table; the generated subgroup
/// must have finite index (the fold must come out complete).
SubgroupGraph span_graph(const Alphabet& alphabet, const std::vector<Word>& words);

}  // namespace commalg
