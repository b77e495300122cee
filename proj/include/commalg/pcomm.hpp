#pragma once

#include <optional>
#include <vector>

#include "commalg/comm.hpp"
#include "commalg/subgroups.hpp"

namespace commalg {

/// Descending normal-closure chain from the whole group down to H, each
/// subgroup normal in its predecessor.
struct SubnormalCertificate {
    std::vector<SubgroupGraph> chain;  // chain.front() = whole group, chain.back() = H
    int length() const { return static_cast<int>(chain.size()) - 1; }
};

bool is_p_power_index(const SubgroupGraph& h, int p);

/// Decide subnormality inside the finite quotient by the core of H (the
/// kernel of the coset permutation action), via the descending chain
/// G >= H^G >= H^(H^G) >= ...; exact, not heuristic. Returns the chain on
/// success, nothing when the chain stabilizes above H.
std::optional<SubnormalCertificate> is_subnormal(const SubgroupGraph& h);

/// Re-check each consecutive normality in a returned chain.
bool validate_certificate(const SubnormalCertificate& cert);

/// Representative-level membership in Comm_p: domain and codomain both have
/// p-power index and are subnormal.
bool in_comm_p(const Commensurator& c, int p);

}  // namespace commalg
