#ifndef MQ_REPRESENTATION_HPP
#define MQ_REPRESENTATION_HPP

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mq/matrix.hpp"
#include "mq/paths.hpp"

namespace mq {

/// Exact rational matrices assigned to the arrows of a labeled quiver; the
/// arrow a: v_i -> v_j carries an alpha_j x alpha_i matrix. Arrows flagged
/// as marked loops must be trace-zero.
struct Representation {
    LabeledQuiver quiver;
    DimVec alpha;
    std::vector<Matrix> matrices;    // one per arrow id
    std::vector<bool> marked_loops;  // one per arrow id
};

/// Validates shapes and the trace-zero condition on marked loops.
Representation make_representation(LabeledQuiver quiver, DimVec alpha,
                                   std::vector<Matrix> matrices,
                                   std::vector<bool> marked_loops = {});

/// Product of arrow matrices along the path, in matrix order (the last arrow
/// applied multiplies on the left); the empty path evaluates to the identity.
Matrix evaluate_path(const Representation& rep, const Path& p);

/// Evaluates the formal combination (an alpha_target x alpha_source matrix).
Matrix evaluate_plc(const Representation& rep, const PathLinComb& c);

/// Throws when any relation evaluates to a nonzero matrix.
void validate_relations(const Representation& rep, const std::vector<PathLinComb>& relations);

/// Base change by invertible per-vertex blocks: M_a -> g_tgt M_a g_src^{-1}.
Representation transform(const Representation& rep, const std::vector<Matrix>& g);

bool is_thin(const Representation& rep);

// JSON form: {"k", "dims", "arrows":[{"from","to","label","marked","matrix":
// [["p/q",...],...]}]}; vertices 1-based in files.
nlohmann::json representation_to_json(const Representation& rep);
Representation representation_from_json(const nlohmann::json& j);

} // namespace mq

#endif
