#ifndef MQ_MCKAY_HPP
#define MQ_MCKAY_HPP

#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mq/cyclotomic.hpp"
#include "mq/paths.hpp"
#include "mq/setting.hpp"

namespace mq {

/// Exact character data of a finite group. The first class is the identity
/// class (size 1) and the first row is the trivial character; all values
/// share one cyclotomic order. Row orthogonality is validated on build.
struct CharacterTable {
    long long group_order = 0;
    std::vector<long long> class_sizes;
    std::vector<std::vector<Cyclotomic>> chars;
    std::vector<int> degrees; // chars[i][0], checked integral positive
};

/// Normalizes value orders to a common one and validates all invariants.
CharacterTable make_character_table(long long order, std::vector<long long> class_sizes,
                                    std::vector<std::vector<Cyclotomic>> chars);

/// (1/|G|) sum_c |c| a_c conj(b_c); must come out rational.
Rational character_inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& a,
                                 const std::vector<Cyclotomic>& b);

/// Character table of Z_n (classes in residue order, rows chi_j(c) = zeta^{jc}).
CharacterTable cyclic_group_table(int n);

/// Character of the representation with the given cyclic weights.
std::vector<Cyclotomic> cyclic_weight_character(int n, const std::vector<int>& weights);

/// McKay quiver setting: alpha_i = deg R_i, #(v_i -> v_j) = multiplicity of
/// R_i in V (x) R_j. Diagonal multiplicities become plain loops.
MarkedQuiverSetting mckay_quiver(const CharacterTable& t, const std::vector<Cyclotomic>& chi_V);

/// Labeled quiver with its dimension vector and formal relations.
struct QuiverPresentation {
    LabeledQuiver quiver;
    DimVec alpha;
    std::vector<PathLinComb> relations;
};

/// Preprojective relations of a double quiver: one relation per vertex v,
/// sum of a a* over pairs with target(a) = v minus a* a over pairs with
/// source(a) = v. `pairing` lists (arrow, dual arrow) ids covering every
/// arrow exactly once.
QuiverPresentation moment_relations(const LabeledQuiver& q, const DimVec& alpha,
                                    const std::vector<std::pair<int, int>>& pairing);

/// McKay presentation of a cyclic skew-group algebra: Z_n acting on C^d by
/// the given weights. Arrows per coordinate p go v_c -> v_{c+w_p}; the
/// relations are the commutator matrix entries, one per vertex and
/// coordinate pair.
QuiverPresentation abelian_skew_relations(int n, const std::vector<int>& weights);

nlohmann::json character_table_to_json(const CharacterTable& t);
CharacterTable character_table_from_json(const nlohmann::json& j);

} // namespace mq

#endif
