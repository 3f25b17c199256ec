#ifndef MQ_REDUCTION_HPP
#define MQ_REDUCTION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mq/setting.hpp"

namespace mq {

enum class MoveKind { VertexRemoval, SmallLoopRemoval, BigLoopRemoval };
enum class Player { Left, Right, Both };

struct ReductionMove {
    MoveKind kind;
    int vertex;
    Player player;
    bool loop_marked = false; // loop-removal moves only

    bool operator==(const ReductionMove&) const = default;
};

struct ReductionTrace {
    std::vector<ReductionMove> moves;
    long long z = 0;
};

/// All moves legal for the given player (Both = union of Left and Right).
std::vector<ReductionMove> legal_moves(const MarkedQuiverSetting& s, Player player);

/// Applies one legal move; returns the new setting and the z increment.
/// Throws validation_error naming the violated condition for illegal moves.
std::pair<MarkedQuiverSetting, long long> apply_move(const MarkedQuiverSetting& s,
                                                     const ReductionMove& move);

bool is_zero_setting(const MarkedQuiverSetting& s);

struct Deterministic {};
struct Seeded { std::uint64_t seed; };

/// Plays moves until none is legal. Deterministic picks the least move under
/// (vertex, kind V < l < L, plain before marked, Left before Right); Seeded
/// picks uniformly with the given seed. Always terminates.
std::pair<MarkedQuiverSetting, ReductionTrace> reduce_to_zero(const MarkedQuiverSetting& s,
                                                              Deterministic);
std::pair<MarkedQuiverSetting, ReductionTrace> reduce_to_zero(const MarkedQuiverSetting& s,
                                                              Seeded seeded);

/// Runs `trials` random maximal reductions and checks they all reach
/// isomorphic zero settings with equal z. Trials run in parallel.
bool verify_confluence(const MarkedQuiverSetting& s, int trials, std::uint64_t seed);

nlohmann::json trace_to_json(const ReductionTrace& trace, const MarkedQuiverSetting& final);

} // namespace mq

#endif
