#ifndef MQ_INVARIANTS_HPP
#define MQ_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mq/representation.hpp"

namespace mq {

/// Closed oriented path up to rotation. Arrows are in application order and
/// the stored rotation minimizes the printed word; cycles print in
/// application order (first arrow applied first), unlike open paths.
struct CyclicWord {
    std::vector<int> arrows;
    bool primitive = true;

    bool operator==(const CyclicWord&) const = default;
};

std::string cycle_string(const LabeledQuiver& q, const CyclicWord& c);

/// Labels a plain setting's arrows a, b, c, ... (in (from, to) order, loops
/// at their vertex position) so cycle enumeration can name generators.
LabeledQuiver label_setting(const MarkedQuiverSetting& s);

/// All cyclic words of length <= max_len up to rotation, sorted by (length,
/// printed word). Proper powers of shorter cycles are dropped unless
/// `include_powers` (traces of powers are only redundant for thin dims).
std::vector<CyclicWord> enumerate_cycles(const LabeledQuiver& q, int max_len,
                                         bool include_powers = false);

/// Degree bound (sum alpha)^2 + 1 used when no explicit bound is given.
int default_cycle_bound(const DimVec& alpha);

/// Trace of the arrow-matrix product along the cycle; rotation invariant.
Rational evaluate_trace(const Representation& rep, const CyclicWord& c);

/// Polynomial in named cycles: sum of coef * product of cycle names.
struct CyclePoly {
    struct Term {
        Rational coef;
        std::vector<std::string> cycles;
    };
    std::vector<Term> terms;
};

/// Checks the polynomial vanishes at `trials` random exact representations
/// of the quiver (entries are small rationals). On failure, stores a
/// description of the first failing sample when `first_failure` is given.
bool verify_relation(const LabeledQuiver& q, const DimVec& alpha,
                     const std::map<std::string, CyclicWord>& named, const CyclePoly& poly,
                     int trials, std::uint64_t seed, std::string* first_failure = nullptr);

/// Path-generator table of the block order: entry (i,j) lists paths
/// v_j -> v_i of length <= max_len that do not factor as an already-listed
/// path composed with an already-listed cycle; diagonal entries start with
/// the idempotent (empty path).
struct BlockGenerators {
    int k = 0;
    MoritaSetting beta;
    std::vector<std::vector<std::vector<Path>>> entries; // [i][j]
};

BlockGenerators block_order_generators(const LabeledQuiver& q, const MoritaSetting& beta,
                                       int max_len);

} // namespace mq

#endif
