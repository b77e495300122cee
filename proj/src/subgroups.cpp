#include "commalg/subgroups.hpp"

#include <map>
#include <ostream>
#include <queue>

namespace commalg {

FiniteAbelianTarget::FiniteAbelianTarget(std::vector<int> moduli_in,
                                         std::vector<std::vector<int>> gen_images_in)
    : moduli(std::move(moduli_in)), gen_images(std::move(gen_images_in)) {
    for (int m : moduli)
        if (m < 1) throw Error("moduli must be >= 1");
    for (auto& img : gen_images) {
        if (img.size() != moduli.size()) throw Error("image vector dimension mismatch");
        for (std::size_t i = 0; i < img.size(); ++i) {
            img[i] %= moduli[i];
            if (img[i] < 0) img[i] += moduli[i];
        }
    }
}

FiniteAbelianTarget FiniteAbelianTarget::pi1(int m, int n) {
    return FiniteAbelianTarget({m, n}, {{1, 0}, {0, 1}});
}

FiniteAbelianTarget FiniteAbelianTarget::pi2(int m, int n) {
    return FiniteAbelianTarget({m, n}, {{0, 1}, {1, 0}});
}

std::vector<int> project(const Word& w, const FiniteAbelianTarget& t) {
    if (static_cast<std::size_t>(w.alphabet().rank()) != t.gen_images.size())
        throw AlphabetMismatch("project: rank does not match target");
    std::vector<int> acc(t.moduli.size(), 0);
    for (const Syllable& s : w.syllables()) {
        const auto& img = t.gen_images[static_cast<std::size_t>(s.gen)];
        for (std::size_t i = 0; i < acc.size(); ++i) {
            std::int64_t v = acc[i] + s.exp % t.moduli[i] * img[i];
            v %= t.moduli[i];
            if (v < 0) v += t.moduli[i];
            acc[i] = static_cast<int>(v);
        }
    }
    return acc;
}

namespace {

std::vector<std::vector<int>> invert_tables(const std::vector<std::vector<int>>& fwd) {
    std::vector<std::vector<int>> bwd(fwd.size(), std::vector<int>(fwd.front().size(), -1));
    for (std::size_t g = 0; g < fwd.size(); ++g)
        for (std::size_t s = 0; s < fwd[g].size(); ++s) {
            if (bwd[g][static_cast<std::size_t>(fwd[g][s])] != -1)
                throw Error("transition table is not a permutation");
            bwd[g][static_cast<std::size_t>(fwd[g][s])] = static_cast<int>(s);
        }
    return bwd;
}

/// BFS renumbering from `basepoint`, restricted to its component:
/// neighbor order is fwd gen0, fwd gen1, ..., then bwd gen0, bwd gen1, ...
std::vector<std::vector<int>> canonical_tables(const std::vector<std::vector<int>>& fwd,
                                               int basepoint) {
    auto bwd = invert_tables(fwd);
    const std::size_t n = fwd.front().size();
    std::vector<int> number(n, -1);
    std::vector<int> order;
    order.reserve(n);
    number[static_cast<std::size_t>(basepoint)] = 0;
    order.push_back(basepoint);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int s = order[head];
        for (const std::vector<std::vector<int>>* table :
             {&fwd, const_cast<const std::vector<std::vector<int>>*>(&bwd)})
            for (std::size_t g = 0; g < fwd.size(); ++g) {
                int t = (*table)[g][static_cast<std::size_t>(s)];
                if (number[static_cast<std::size_t>(t)] < 0) {
                    number[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                    order.push_back(t);
                }
            }
    }
    std::vector<std::vector<int>> out(fwd.size(), std::vector<int>(order.size()));
    for (std::size_t g = 0; g < fwd.size(); ++g)
        for (std::size_t i = 0; i < order.size(); ++i)
            out[g][i] = number[static_cast<std::size_t>(fwd[g][static_cast<std::size_t>(order[i])])];
    return out;
}

}  // namespace

SubgroupGraph::SubgroupGraph(Alphabet alphabet, std::vector<std::vector<int>> fwd)
    : alpha_(std::move(alphabet)), fwd_(std::move(fwd)), bwd_(invert_tables(fwd_)) {}

SubgroupGraph SubgroupGraph::whole_group(const Alphabet& alphabet) {
    std::vector<std::vector<int>> fwd(static_cast<std::size_t>(alphabet.rank()),
                                      std::vector<int>{0});
    return SubgroupGraph(alphabet, std::move(fwd));
}

SubgroupGraph SubgroupGraph::from_permutations(const Alphabet& alphabet,
                                               const std::vector<std::vector<int>>& perms,
                                               int basepoint) {
    if (static_cast<int>(perms.size()) != alphabet.rank())
        throw AlphabetMismatch("from_permutations: need one permutation per generator");
    return SubgroupGraph(alphabet, canonical_tables(perms, basepoint));
}

int SubgroupGraph::trace(int state, const Word& w) const {
    if (w.alphabet() != alpha_) throw AlphabetMismatch("trace: alphabet mismatch");
    for (const Syllable& s : w.syllables()) {
        std::int64_t k = s.exp < 0 ? -s.exp : s.exp;
        // Reduce the exponent modulo the cycle length through `state`,
        // so huge powers stay cheap.
        const auto& table = s.exp > 0 ? fwd_ : bwd_;
        int cur = state;
        std::int64_t cycle = 0;
        do {
            cur = table[static_cast<std::size_t>(s.gen)][static_cast<std::size_t>(cur)];
            ++cycle;
        } while (cur != state && cycle < k);
        if (cur == state) k %= cycle;
        for (std::int64_t i = 0; i < k; ++i)
            state = table[static_cast<std::size_t>(s.gen)][static_cast<std::size_t>(state)];
    }
    return state;
}

SubgroupGraph kernel_graph(const Alphabet& alphabet, const FiniteAbelianTarget& t) {
    if (static_cast<std::size_t>(alphabet.rank()) != t.gen_images.size())
        throw AlphabetMismatch("kernel_graph: rank does not match target");
    // States are the reachable residue tuples; transitions add the
    // generator's image. Basepoint is the zero tuple.
    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> states;
    std::vector<int> zero(t.moduli.size(), 0);
    id[zero] = 0;
    states.push_back(zero);
    std::vector<std::vector<int>> fwd(static_cast<std::size_t>(alphabet.rank()));
    for (std::size_t head = 0; head < states.size(); ++head) {
        for (int g = 0; g < alphabet.rank(); ++g) {
            std::vector<int> next = states[head];
            const auto& img = t.gen_images[static_cast<std::size_t>(g)];
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = (next[i] + img[i]) % t.moduli[i];
            auto [it, inserted] = id.emplace(next, static_cast<int>(states.size()));
            if (inserted) states.push_back(next);
            fwd[static_cast<std::size_t>(g)].resize(states.size() > fwd[static_cast<std::size_t>(g)].size()
                                                        ? states.size()
                                                        : fwd[static_cast<std::size_t>(g)].size());
            fwd[static_cast<std::size_t>(g)][head] = it->second;
        }
    }
    for (auto& table : fwd) table.resize(states.size());
    // Re-walk to fill any slots grown after their row was visited.
    for (std::size_t s = 0; s < states.size(); ++s)
        for (int g = 0; g < alphabet.rank(); ++g) {
            std::vector<int> next = states[s];
            const auto& img = t.gen_images[static_cast<std::size_t>(g)];
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = (next[i] + img[i]) % t.moduli[i];
            fwd[static_cast<std::size_t>(g)][s] = id.at(next);
        }
    return SubgroupGraph::from_permutations(alphabet, fwd, 0);
}

bool membership(const Word& w, const SubgroupGraph& h) {
    return h.trace(h.basepoint(), w) == h.basepoint();
}

SubgroupGraph intersect(const SubgroupGraph& h1, const SubgroupGraph& h2) {
    if (h1.alphabet() != h2.alphabet()) throw AlphabetMismatch("intersect: alphabet mismatch");
    const int n2 = h2.index();
    auto pack = [n2](int a, int b) { return a * n2 + b; };
    std::map<int, int> id;
    std::vector<std::pair<int, int>> states{{0, 0}};
    id[pack(0, 0)] = 0;
    std::vector<std::vector<int>> fwd(static_cast<std::size_t>(h1.alphabet().rank()));
    for (std::size_t head = 0; head < states.size(); ++head) {
        auto [a, b] = states[head];
        for (int g = 0; g < h1.alphabet().rank(); ++g) {
            int na = h1.step(a, g);
            int nb = h2.step(b, g);
            auto [it, inserted] = id.emplace(pack(na, nb), static_cast<int>(states.size()));
            if (inserted) states.emplace_back(na, nb);
            fwd[static_cast<std::size_t>(g)].push_back(it->second);
        }
    }
    // states were discovered under forward edges only; the tables so far are
    // row-per-head in discovery order, which is exactly state order.
    std::vector<std::vector<int>> tables(fwd.size(), std::vector<int>(states.size()));
    for (std::size_t g = 0; g < fwd.size(); ++g)
        for (std::size_t s = 0; s < states.size(); ++s) tables[g][s] = fwd[g][s];
    return SubgroupGraph::from_permutations(h1.alphabet(), tables, 0);
}

SubgroupGraph rebase(const SubgroupGraph& h, const Word& w) {
    int base = h.trace(h.basepoint(), w);
    return SubgroupGraph::from_permutations(h.alphabet(), h.permutations(), base);
}

bool is_normal(const SubgroupGraph& h) {
    for (int g = 0; g < h.alphabet().rank(); ++g) {
        Word gen = Word::generator(h.alphabet(), g);
        if (rebase(h, gen) != h) return false;
    }
    return true;
}

void dump_table(const SubgroupGraph& h, std::ostream& out) {
    for (int s = 0; s < h.index(); ++s) {
        for (int g = 0; g < h.alphabet().rank(); ++g) {
            if (g) out << ' ';
            out << h.step(s, g);
        }
        out << '\n';
    }
}

}  // namespace commalg
