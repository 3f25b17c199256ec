#ifndef MQ_SETTING_HPP
#define MQ_SETTING_HPP

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mq/errors.hpp"

namespace mq {

/// Directed multigraph whose loops may carry markings. Off-diagonal arrow
/// counts live in `arrows`; loops are stored per vertex, split into plain and
/// marked, so a marking can never sit on an arrow between distinct vertices.
struct MarkedQuiver {
    int k = 0;
    std::vector<std::vector<int>> arrows; // arrows[i][j] = #arrows v_i -> v_j, diagonal kept at 0
    std::vector<int> plain_loops;
    std::vector<int> marked_loops;

    int loops(int v) const { return plain_loops[v] + marked_loops[v]; }
    int total_marked() const;
    int total_arrows() const; // off-diagonal arrows plus all loops
    int out_arrows(int v) const; // excludes loops
    int in_arrows(int v) const;  // excludes loops
};

using DimVec = std::vector<int>;

struct MarkedQuiverSetting {
    MarkedQuiver quiver;
    DimVec alpha;

    int k() const { return quiver.k; }
};

/// Morita setting (d_1,...,d_k), positive integers.
using MoritaSetting = std::vector<int>;

/// Validates counts and shapes, then normalizes: vertices with alpha_v = 0 are
/// deleted together with their incident arrows.
MarkedQuiverSetting make_setting(MarkedQuiver quiver, DimVec alpha);

/// Convenience constructor from an arrow list [(from,to,count)], 0-based.
MarkedQuiverSetting make_setting(int k, DimVec alpha,
                                 const std::vector<std::array<int, 3>>& arrow_list,
                                 const std::vector<std::array<int, 3>>& loop_list = {});

/// Euler matrix of the underlying quiver: E[i][j] = delta_ij - #(v_i -> v_j),
/// markings forgotten (both loop kinds count on the diagonal).
std::vector<std::vector<long long>> euler_matrix(const MarkedQuiver& q);

/// chi_Q(a, b) = a^T E b.
long long euler_form(const MarkedQuiverSetting& s, const std::vector<long long>& a,
                     const std::vector<long long>& b);
long long euler_form(const MarkedQuiverSetting& s, const DimVec& a, const DimVec& b);

/// chi_Q(alpha, eps_v) resp. chi_Q(eps_v, alpha) for the setting's own alpha.
long long chi_alpha_eps(const MarkedQuiverSetting& s, int v);
long long chi_eps_alpha(const MarkedQuiverSetting& s, int v);

bool is_connected(const MarkedQuiverSetting& s);

/// Every vertex reaches every other along directed arrows. Simple
/// representations with full support only exist on strongly connected
/// quivers, so order-induced settings always satisfy this.
bool is_strongly_connected(const MarkedQuiverSetting& s);

/// True iff the underlying quiver is a single oriented cycle through all
/// vertices with one arrow per edge (type A~_{k-1}); k >= 2 only.
bool is_oriented_cycle(const MarkedQuiver& q);

/// Whether alpha is the dimension vector of a simple representation.
/// Throws validation_error if the support is disconnected.
bool is_simple_dimvec(const MarkedQuiverSetting& s);

/// dim R^alpha_{Q*} = 1 - chi(alpha,alpha) - #marked loops.
long long central_dimension(const MarkedQuiverSetting& s);

/// Bergman-Small total n = sum e_i d_i.
long long bergman_small_total(const DimVec& alpha, const MoritaSetting& beta);

// JSON document form: {"k":int,"dims":[...],"arrows":[[from,to,count]],
// "loops":[[vertex,plain,marked]]}, vertices 1-based, arrows sorted by (from,to).
nlohmann::json setting_to_json(const MarkedQuiverSetting& s);
MarkedQuiverSetting setting_from_json(const nlohmann::json& j);

} // namespace mq

#endif
