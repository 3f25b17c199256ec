#ifndef MQ_CANONICAL_HPP
#define MQ_CANONICAL_HPP

#include <compare>
#include <vector>

#include "mq/setting.hpp"

namespace mq {

/// Total-order key; equal keys iff the settings are isomorphic as marked
/// quiver settings (dimension and loop-marking labels included).
struct CanonicalForm {
    std::vector<long long> key;

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// Brute-force minimization over vertex permutations, pruned by the
/// per-vertex invariant (alpha, in-degree, out-degree, plain, marked).
/// Throws resource_error when k exceeds the bound.
CanonicalForm canonical_form(const MarkedQuiverSetting& s, int k_bound = 10);

bool settings_isomorphic(const MarkedQuiverSetting& a, const MarkedQuiverSetting& b,
                         int k_bound = 10);

/// Relabels vertices by the permutation (new index i holds old vertex perm[i]).
MarkedQuiverSetting permute_setting(const MarkedQuiverSetting& s, const std::vector<int>& perm);

} // namespace mq

#endif
