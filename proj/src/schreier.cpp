#include "commalg/schreier.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace commalg {

namespace {

struct Edge {
    int u, v, gen;
    Word ann;  // annotation for forward (u -> v) traversal
    bool alive = true;
};

struct Half {
    int gen;
    bool forward;
    int edge;
    int target;
};

/// Mutable wedge-of-loops graph with Stallings folding. Edge annotations are
/// maintained so that the annotation product along any basepoint loop
/// expands to the loop's label (valid as long as no fold drops rank).
struct Folder {
    Alphabet ambient;
    Alphabet letters;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incident;  // vertex -> edge ids (may hold stale entries)
    std::vector<bool> vertex_alive;
    int base = 0;
    bool rank_dropped = false;

    Folder(const Alphabet& ambient_in, const std::vector<Word>& loops,
           const Alphabet& letters_in)
        : ambient(ambient_in), letters(letters_in) {
        new_vertex();  // base = 0
        for (std::size_t i = 0; i < loops.size(); ++i) add_loop(loops[i], static_cast<int>(i));
        fold();
    }

    int new_vertex() {
        incident.emplace_back();
        vertex_alive.push_back(true);
        return static_cast<int>(incident.size()) - 1;
    }

    void attach(int e) {
        incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].u)].push_back(e);
        incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].v)].push_back(e);
    }

    void add_loop(const Word& w, int letter) {
        if (w.alphabet() != ambient) throw AlphabetMismatch("fold: loop alphabet mismatch");
        const std::int64_t len = w.length();
        if (len == 0) return;  // identity contributes no edges
        Word epsilon(letters);
        Word mark = Word::generator(letters, letter);
        int cur = base;
        std::int64_t pos = 0;
        for (const Syllable& s : w.syllables()) {
            std::int64_t k = std::abs(s.exp);
            bool positive = s.exp > 0;
            for (std::int64_t i = 0; i < k; ++i) {
                ++pos;
                int next = pos == len ? base : new_vertex();
                const Word& a = pos == len ? mark : epsilon;
                int e = static_cast<int>(edges.size());
                if (positive)
                    edges.push_back({cur, next, s.gen, a});
                else
                    edges.push_back({next, cur, s.gen, invert(a)});
                attach(e);
                cur = next;
            }
        }
    }

    std::vector<Half> halves(int u) {
        std::vector<Half> out;
        auto& list = incident[static_cast<std::size_t>(u)];
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](int e) {
                                      const Edge& ed = edges[static_cast<std::size_t>(e)];
                                      return !ed.alive || (ed.u != u && ed.v != u);
                                  }),
                   list.end());
        for (int e : list) {
            const Edge& ed = edges[static_cast<std::size_t>(e)];
            if (ed.u == u) out.push_back({ed.gen, true, e, ed.v});
            if (ed.v == u) out.push_back({ed.gen, false, e, ed.u});
        }
        return out;
    }

    /// Merge vertex `gone` into `keep`, premultiplying annotations so the
    /// loop invariant is preserved: d is the basis word for theta(keep) *
    /// theta(gone)^-1.
    void merge_vertex(int keep, int gone, const Word& d) {
        Word dinv = invert(d);
        for (int e : incident[static_cast<std::size_t>(gone)]) {
            Edge& ed = edges[static_cast<std::size_t>(e)];
            if (!ed.alive) continue;
            if (ed.u == gone && ed.v == gone) {
                ed.ann = multiply(multiply(d, ed.ann), dinv);
                ed.u = ed.v = keep;
            } else if (ed.u == gone) {
                ed.ann = multiply(d, ed.ann);
                ed.u = keep;
            } else if (ed.v == gone) {
                ed.ann = multiply(ed.ann, dinv);
                ed.v = keep;
            } else {
                continue;  // stale entry
            }
            incident[static_cast<std::size_t>(keep)].push_back(e);
        }
        incident[static_cast<std::size_t>(gone)].clear();
        vertex_alive[static_cast<std::size_t>(gone)] = false;
    }

    void fold() {
        std::deque<int> work;
        for (std::size_t v = 0; v < incident.size(); ++v) work.push_back(static_cast<int>(v));
        while (!work.empty()) {
            int u = work.front();
            work.pop_front();
            if (!vertex_alive[static_cast<std::size_t>(u)]) continue;
            bool changed = true;
            while (changed && vertex_alive[static_cast<std::size_t>(u)]) {
                changed = false;
                auto hs = halves(u);
                for (std::size_t i = 0; i < hs.size() && !changed; ++i)
                    for (std::size_t j = i + 1; j < hs.size() && !changed; ++j) {
                        if (hs[i].gen != hs[j].gen || hs[i].forward != hs[j].forward ||
                            hs[i].edge == hs[j].edge)
                            continue;
                        fold_pair(u, hs[i], hs[j], work);
                        changed = true;
                    }
            }
        }
    }

    Word from_u_annotation(const Half& h) const {
        const Word& a = edges[static_cast<std::size_t>(h.edge)].ann;
        return h.forward ? a : invert(a);
    }

    void fold_pair(int u, const Half& h1, const Half& h2, std::deque<int>& work) {
        int w1 = h1.target, w2 = h2.target;
        if (w1 == w2) {
            // Parallel edges: geometric rank drop; annotations are no longer
            // meaningful, which only happens for non-basis input sets.
            rank_dropped = true;
            edges[static_cast<std::size_t>(h2.edge)].alive = false;
            work.push_back(u);
            return;
        }
        const Half* keep_half = &h1;
        const Half* gone_half = &h2;
        if (w2 == base) std::swap(keep_half, gone_half);
        int keep = keep_half->target;
        int gone = gone_half->target;
        Word d = multiply(invert(from_u_annotation(*keep_half)), from_u_annotation(*gone_half));
        merge_vertex(keep, gone, d);
        // The gone-side edge is now a parallel duplicate of the kept one.
        edges[static_cast<std::size_t>(gone_half->edge)].alive = false;
        work.push_back(keep);
        if (u != gone) work.push_back(u);
    }
};

}  // namespace

FoldedCore::FoldedCore(const Alphabet& ambient, const std::vector<Word>& loops,
                       const Alphabet& letter_alphabet)
    : ambient_(ambient), letters_(letter_alphabet) {
    Folder folder(ambient, loops, letter_alphabet);
    rank_dropped_ = folder.rank_dropped;

    // Compact alive vertices.
    std::vector<int> dense(folder.incident.size(), -1);
    int count = 0;
    for (std::size_t v = 0; v < folder.incident.size(); ++v)
        if (folder.vertex_alive[v]) dense[v] = count++;
    base_ = dense[static_cast<std::size_t>(folder.base)];

    fwd_.assign(static_cast<std::size_t>(ambient.rank()),
                std::vector<Arrow>(static_cast<std::size_t>(count)));
    bwd_.assign(static_cast<std::size_t>(ambient.rank()),
                std::vector<Arrow>(static_cast<std::size_t>(count)));
    for (const Edge& e : folder.edges) {
        if (!e.alive) continue;
        int u = dense[static_cast<std::size_t>(e.u)];
        int v = dense[static_cast<std::size_t>(e.v)];
        Arrow& f = fwd_[static_cast<std::size_t>(e.gen)][static_cast<std::size_t>(u)];
        f.target = v;
        f.ann = e.ann;
        Arrow& b = bwd_[static_cast<std::size_t>(e.gen)][static_cast<std::size_t>(v)];
        b.target = u;
        b.ann = invert(e.ann);
    }
}

bool FoldedCore::complete() const {
    for (const auto& table : fwd_)
        for (const Arrow& a : table)
            if (a.target < 0) return false;
    return true;
}

SubgroupGraph FoldedCore::graph() const {
    if (!complete()) throw Error("folded graph is not complete (infinite index)");
    std::vector<std::vector<int>> perms(fwd_.size(),
                                        std::vector<int>(fwd_.front().size()));
    for (std::size_t g = 0; g < fwd_.size(); ++g)
        for (std::size_t v = 0; v < fwd_[g].size(); ++v) perms[g][v] = fwd_[g][v].target;
    return SubgroupGraph::from_permutations(ambient_, perms, base_);
}

Word FoldedCore::rewrite(const Word& w) const {
    if (w.alphabet() != ambient_) throw AlphabetMismatch("rewrite: alphabet mismatch");
    int state = base_;
    std::vector<Syllable> acc;
    for (const Syllable& s : w.syllables()) {
        std::int64_t k = std::abs(s.exp);
        const auto& table = s.exp > 0 ? fwd_ : bwd_;
        for (std::int64_t i = 0; i < k; ++i) {
            const Arrow& a = table[static_cast<std::size_t>(s.gen)][static_cast<std::size_t>(state)];
            if (a.target < 0) throw NotInSubgroup(print(w));
            acc.insert(acc.end(), a.ann.syllables().begin(), a.ann.syllables().end());
            state = a.target;
        }
    }
    if (state != base_) throw NotInSubgroup(print(w));
    return Word::reduce(letters_, acc);
}

FreeBasis verify_basis(const std::vector<Word>& candidate, const SubgroupGraph& h) {
    for (const Word& w : candidate)
        if (!membership(w, h)) throw NotInSubgroup(print(w));
    const std::size_t expected =
        static_cast<std::size_t>(h.index()) * static_cast<std::size_t>(h.alphabet().rank() - 1) + 1;
    if (candidate.size() != expected) throw WrongCount(expected, candidate.size());
    Alphabet letters = Alphabet::basis_letters(static_cast<int>(candidate.size()));
    FoldedCore core(h.alphabet(), candidate, letters);
    if (core.rank_dropped() || !core.complete() || core.graph() != h)
        throw GeneratesProperSubgroup("candidate set generates a proper subgroup of the target");
    return FreeBasis(h, candidate, std::move(letters), std::move(core));
}

FreeBasis schreier_basis(const SubgroupGraph& h) {
    const int n = h.index();
    const int rank = h.alphabet().rank();
    // Breadth-first spanning tree from the basepoint; h is canonically
    // numbered, so states are discovered in id order.
    std::vector<Word> transversal(static_cast<std::size_t>(n), Word(h.alphabet()));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<bool>> in_tree(static_cast<std::size_t>(rank),
                                           std::vector<bool>(static_cast<std::size_t>(n), false));
    seen[0] = true;
    std::vector<int> order{0};
    for (std::size_t head = 0; head < order.size(); ++head) {
        int s = order[head];
        for (int g = 0; g < rank; ++g) {
            int t = h.step(s, g);
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                in_tree[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)] = true;
                transversal[static_cast<std::size_t>(t)] =
                    multiply(transversal[static_cast<std::size_t>(s)],
                             Word::generator(h.alphabet(), g));
                order.push_back(t);
            }
        }
        for (int g = 0; g < rank; ++g) {
            int t = h.step_back(s, g);
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                in_tree[static_cast<std::size_t>(g)][static_cast<std::size_t>(t)] = true;
                transversal[static_cast<std::size_t>(t)] =
                    multiply(transversal[static_cast<std::size_t>(s)],
                             Word::generator(h.alphabet(), g, -1));
                order.push_back(t);
            }
        }
    }
    std::vector<Word> gens;
    for (int s = 0; s < n; ++s)
        for (int g = 0; g < rank; ++g) {
            if (in_tree[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)]) continue;
            int t = h.step(s, g);
            Word w = multiply(multiply(transversal[static_cast<std::size_t>(s)],
                                       Word::generator(h.alphabet(), g)),
                              invert(transversal[static_cast<std::size_t>(t)]));
            gens.push_back(std::move(w));
        }
    return verify_basis(gens, h);
}

std::vector<Word> paper_basis_words(int m, int n, int which) {
    if (m < 2 || n < 2) throw Error("paper_basis: need m, n >= 2");
    if (which != 1 && which != 2) throw Error("paper_basis: which must be 1 or 2");
    const Alphabet f2 = Alphabet::upper2();
    const Word A = Word::generator(f2, 0);
    const Word B = Word::generator(f2, 1);
    // For Delta_2 the roles of m and n in the exponents are exchanged.
    const int rows = which == 1 ? n : m;  // B-exponent runs 1..rows-1, block is B^rows
    const int cols = which == 1 ? m : n;  // A-conjugation exponent runs 0..cols-1, tail is A^cols
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= rows - 1; ++j)
        for (int i = 0; i <= cols - 1; ++i)
            out.push_back(conjugate(commutator(A, pow(B, j)), pow(A, i)));
    for (int i = 0; i <= cols - 1; ++i) out.push_back(conjugate(pow(B, rows), pow(A, i)));
    out.push_back(pow(A, cols));
    return out;
}

FreeBasis paper_basis(int m, int n, int which) {
    const Alphabet f2 = Alphabet::upper2();
    FiniteAbelianTarget t =
        which == 1 ? FiniteAbelianTarget::pi1(m, n) : FiniteAbelianTarget::pi2(m, n);
    SubgroupGraph delta = kernel_graph(f2, t);
    return verify_basis(paper_basis_words(m, n, which), delta);
}

SubgroupGraph span_graph(const Alphabet& alphabet, const std::vector<Word>& words) {
    FoldedCore core(alphabet, words, Alphabet::basis_letters(static_cast<int>(words.size())));
    return core.graph();
}

}  // namespace commalg
