#ifndef MQ_STABILITY_HPP
#define MQ_STABILITY_HPP

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mq/mckay.hpp"
#include "mq/representation.hpp"

namespace mq {

using StabilityVector = std::vector<long long>;

/// theta . alpha = 0.
bool check_theta(const StabilityVector& theta, const DimVec& alpha);

enum class Stability { Stable, SemistableNotStable, Unstable };

const char* stability_name(Stability s);

/// Complete oracle for thin representations (all alpha_v <= 1): proper
/// subrepresentations are exactly the arrow-closed vertex subsets; the
/// verdict is read off the minimum of theta . dim over them (Stable when
/// every one is positive, Unstable when some are negative).
Stability thin_stability_oracle(const Representation& rep, const StabilityVector& theta);

/// Rectangular grid L of path linear combinations whose evaluation at a
/// representation is the square matrix defining D(V) = det L(V). Grid rows
/// run over the theta-positive vertices (l*t_i copies each) then the zero
/// vertices (l_mid copies); columns over the zero vertices (l_mid copies)
/// then the theta-negative vertices (-l*t_j copies).
struct SemiInvariantScheme {
    LabeledQuiver quiver;
    DimVec alpha;
    StabilityVector theta;
    long long l = 1;
    std::vector<long long> l_mid; // one entry per theta-zero vertex, vertex order
    std::vector<std::vector<PathLinComb>> blocks;

    std::vector<int> row_vertices; // derived: vertex index per grid row
    std::vector<int> col_vertices; // derived: vertex index per grid column
};

/// Computes the grid layout and validates every block's endpoints.
SemiInvariantScheme make_scheme(LabeledQuiver quiver, DimVec alpha, StabilityVector theta,
                                long long l, std::vector<long long> l_mid,
                                std::vector<std::vector<PathLinComb>> blocks);

Matrix evaluate_L(const SemiInvariantScheme& scheme, const Representation& rep);

Rational evaluate_D(const SemiInvariantScheme& scheme, const Representation& rep);

/// chi_theta(g)^l = (prod_v det(g_v)^{t_v})^l.
Rational theta_character(const SemiInvariantScheme& scheme, const std::vector<Matrix>& g);

/// Exact check of det L(g.V) = chi_theta(g)^l det L(V) for one g.
bool semi_invariance_check(const SemiInvariantScheme& scheme, const Representation& rep,
                           const std::vector<Matrix>& g);

/// Runs the check for `trials` random invertible rational g; trials run in
/// parallel. Returns true iff every identity holds exactly.
bool semi_invariance_trials(const SemiInvariantScheme& scheme, const Representation& rep,
                            int trials, std::uint64_t seed);

/// The localized quiver: the base quiver plus one arrow per cell of N (the
/// formal inverse of L), numbered column-major as n1, n2, ...; the arrow for
/// cell (r,c) runs from the grid-row-c vertex of L to the grid-column-r
/// vertex of L.
struct ExtendedQuiver {
    LabeledQuiver quiver;
    int base_arrows = 0;
    int n_rows = 0, n_cols = 0;            // grid shape of N
    std::vector<std::pair<int, int>> cells; // (r,c) per new arrow, column-major
};

ExtendedQuiver build_extended_quiver(const SemiInvariantScheme& scheme);

/// Unique extension over the localized quiver: slices N(V) = L(V)^{-1} into
/// the new-arrow blocks. Throws when det L(V) = 0 (the representation lies
/// outside the chart).
Representation extend_representation(const SemiInvariantScheme& scheme, const Representation& rep);

/// New-arrow matrices of the extension, in n1, n2, ... order.
std::vector<Matrix> extension_blocks(const SemiInvariantScheme& scheme, const Representation& rep);

/// Presentation of the localized order: the base relations followed by the
/// entries of N.L minus the column-vertex idempotent diagonal (I1) and of
/// L.N minus the row-vertex idempotent diagonal (I2), both row-major,
/// identically-zero entries skipped.
QuiverPresentation localization_presentation(const QuiverPresentation& base,
                                             const SemiInvariantScheme& scheme);

/// I1 and I2 alone (same order as in localization_presentation).
std::pair<std::vector<PathLinComb>, std::vector<PathLinComb>> localization_relations(
    const SemiInvariantScheme& scheme, const ExtendedQuiver& ext);

// Scheme document: {"theta":[int], "l":int, "l_mid":[int], "blocks":
// [[[{"coef":"p/q","path":[arrow ids, 1-based]}]]]} over a separately
// supplied quiver.
nlohmann::json scheme_to_json(const SemiInvariantScheme& scheme);
SemiInvariantScheme scheme_from_json(const nlohmann::json& j, const LabeledQuiver& quiver,
                                     const DimVec& alpha);

nlohmann::json presentation_to_json(const QuiverPresentation& pres);
QuiverPresentation presentation_from_json(const nlohmann::json& j);

} // namespace mq

#endif
