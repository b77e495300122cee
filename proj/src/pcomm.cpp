#include "commalg/pcomm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace commalg {

namespace {

constexpr std::size_t kQuotientCap = 100000;

using Perm = std::vector<int>;

/// The finite quotient F_k / core(H): the permutation group generated by
/// H's coset action, with a preimage word recorded per element.
struct Quotient {
    std::vector<Perm> elements;  // elements[0] = identity
    std::vector<Word> words;
    std::map<Perm, int> id;

    // Element composition matching word concatenation: apply e1 then e2.
    Perm mul_perm(const Perm& p1, const Perm& p2) const {
        Perm out(p1.size());
        for (std::size_t s = 0; s < p1.size(); ++s)
            out[s] = p2[static_cast<std::size_t>(p1[s])];
        return out;
    }
    int mul(int e1, int e2) const {
        return id.at(mul_perm(elements[static_cast<std::size_t>(e1)],
                              elements[static_cast<std::size_t>(e2)]));
    }
    int inv(int e) const {
        const Perm& p = elements[static_cast<std::size_t>(e)];
        Perm out(p.size());
        for (std::size_t s = 0; s < p.size(); ++s)
            out[static_cast<std::size_t>(p[s])] = static_cast<int>(s);
        return id.at(out);
    }

    explicit Quotient(const SubgroupGraph& h) {
        Perm identity(static_cast<std::size_t>(h.index()));
        std::iota(identity.begin(), identity.end(), 0);
        elements.push_back(identity);
        words.emplace_back(h.alphabet());
        id[identity] = 0;
        for (std::size_t head = 0; head < elements.size(); ++head) {
            for (int g = 0; g < h.alphabet().rank(); ++g) {
                Perm next = mul_perm(elements[head], h.permutations()[static_cast<std::size_t>(g)]);
                if (id.emplace(next, static_cast<int>(elements.size())).second) {
                    elements.push_back(next);
                    words.push_back(multiply(words[head], Word::generator(h.alphabet(), g)));
                    if (elements.size() > kQuotientCap)
                        throw QuotientTooLarge("coset action quotient exceeds the desk-scale cap");
                }
            }
        }
    }

    /// Elements fixing the basepoint: the image of H itself.
    std::vector<int> stabilizer() const {
        std::vector<int> out;
        for (std::size_t e = 0; e < elements.size(); ++e)
            if (elements[e][0] == 0) out.push_back(static_cast<int>(e));
        return out;
    }

    std::vector<int> close_subgroup(std::vector<int> gens) const {
        std::vector<bool> in(elements.size(), false);
        std::vector<int> members{0};
        in[0] = true;
        for (int g : gens)
            if (!in[static_cast<std::size_t>(g)]) {
                in[static_cast<std::size_t>(g)] = true;
                members.push_back(g);
            }
        for (std::size_t head = 0; head < members.size(); ++head)
            for (int g : gens) {
                int prod = mul(members[head], g);
                if (!in[static_cast<std::size_t>(prod)]) {
                    in[static_cast<std::size_t>(prod)] = true;
                    members.push_back(prod);
                }
            }
        std::sort(members.begin(), members.end());
        return members;
    }

    /// Normal closure of `sub` inside `k` (both as sorted element sets).
    std::vector<int> normal_closure(const std::vector<int>& sub,
                                    const std::vector<int>& k) const {
        std::vector<int> gens;
        for (int x : k)
            for (int h : sub) gens.push_back(mul(mul(x, h), inv(x)));
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        return close_subgroup(std::move(gens));
    }

    /// Coset graph of the preimage in F_k of the subgroup `k` of the quotient.
    SubgroupGraph coset_graph(const Alphabet& alphabet,
                              const std::vector<std::vector<int>>& gen_perms,
                              const std::vector<int>& k) const {
        auto coset_rep = [&](int x) {
            int best = mul(k.front(), x);
            for (int h : k) best = std::min(best, mul(h, x));
            return best;
        };
        std::map<int, int> state_of;
        std::vector<int> reps{coset_rep(0)};
        state_of[reps[0]] = 0;
        std::vector<std::vector<int>> fwd(gen_perms.size());
        for (std::size_t head = 0; head < reps.size(); ++head)
            for (std::size_t g = 0; g < gen_perms.size(); ++g) {
                int next = coset_rep(id.at(mul_perm(elements[static_cast<std::size_t>(reps[head])],
                                                    gen_perms[g])));
                auto [it, inserted] = state_of.emplace(next, static_cast<int>(reps.size()));
                if (inserted) reps.push_back(next);
                fwd[g].push_back(it->second);
            }
        return SubgroupGraph::from_permutations(alphabet, fwd, 0);
    }
};

}  // namespace

bool is_p_power_index(const SubgroupGraph& h, int p) {
    if (p < 2) throw Error("is_p_power_index: p must be a prime >= 2");
    int idx = h.index();
    while (idx % p == 0) idx /= p;
    return idx == 1;
}

std::optional<SubnormalCertificate> is_subnormal(const SubgroupGraph& h) {
    Quotient q(h);
    std::vector<int> whole(q.elements.size());
    std::iota(whole.begin(), whole.end(), 0);
    std::vector<int> target = q.stabilizer();

    std::vector<std::vector<int>> chain{whole};
    while (chain.back() != target) {
        std::vector<int> next = q.normal_closure(target, chain.back());
        if (next == chain.back()) return std::nullopt;  // stabilized above H
        chain.push_back(std::move(next));
    }
    SubnormalCertificate cert;
    for (const auto& k : chain)
        cert.chain.push_back(q.coset_graph(h.alphabet(), h.permutations(), k));
    return cert;
}

bool validate_certificate(const SubnormalCertificate& cert) {
    if (cert.chain.empty()) return false;
    const SubgroupGraph& h = cert.chain.back();
    if (cert.chain.front() != SubgroupGraph::whole_group(h.alphabet())) return false;
    Quotient q(h);
    // Identify each chain subgroup inside the quotient by testing the
    // recorded preimage words against the chain graphs.
    std::vector<std::vector<bool>> in(cert.chain.size(),
                                      std::vector<bool>(q.elements.size(), false));
    for (std::size_t i = 0; i < cert.chain.size(); ++i)
        for (std::size_t e = 0; e < q.elements.size(); ++e)
            in[i][e] = membership(q.words[e], cert.chain[i]);
    for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
        for (std::size_t e = 0; e < q.elements.size(); ++e) {
            if (in[i + 1][e] && !in[i][e]) return false;  // not even nested
            if (!in[i][e]) continue;
            for (std::size_t f = 0; f < q.elements.size(); ++f) {
                if (!in[i + 1][f]) continue;
                int conj = q.mul(q.mul(static_cast<int>(e), static_cast<int>(f)),
                                 q.inv(static_cast<int>(e)));
                if (!in[i + 1][static_cast<std::size_t>(conj)]) return false;
            }
        }
    }
    return true;
}

bool in_comm_p(const Commensurator& c, int p) {
    return is_p_power_index(c.domain(), p) && is_p_power_index(c.codomain(), p) &&
           is_subnormal(c.domain()).has_value() && is_subnormal(c.codomain()).has_value();
}

}  // namespace commalg
