#include "mq/reduction.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include <nlohmann/json.hpp>

#include "mq/canonical.hpp"

namespace mq {

namespace {

bool vertex_removal_eligible(const MarkedQuiverSetting& s, int v) {
    return s.k() >= 2 && s.quiver.loops(v) == 0;
}

// Returns (eligible, target vertex) for the Left variant; dual for Right.
std::pair<bool, int> big_loop_pattern(const MarkedQuiverSetting& s, int v, bool left) {
    const auto& q = s.quiver;
    if (q.loops(v) != 1 || s.alpha[v] < 2) return {false, -1};
    int count = 0, other = -1;
    for (int w = 0; w < q.k; ++w) {
        if (w == v) continue;
        int c = left ? q.arrows[v][w] : q.arrows[w][v];
        if (c > 0) {
            count += c;
            other = w;
        }
    }
    if (count != 1 || s.alpha[other] != 1) return {false, -1};
    return {true, other};
}

} // namespace

std::vector<ReductionMove> legal_moves(const MarkedQuiverSetting& s, Player player) {
    std::vector<ReductionMove> out;
    const bool left = player == Player::Left || player == Player::Both;
    const bool right = player == Player::Right || player == Player::Both;
    for (int v = 0; v < s.k(); ++v) {
        if (vertex_removal_eligible(s, v)) {
            if (left && chi_alpha_eps(s, v) >= 0)
                out.push_back({MoveKind::VertexRemoval, v, Player::Left});
            if (right && chi_eps_alpha(s, v) >= 0)
                out.push_back({MoveKind::VertexRemoval, v, Player::Right});
        }
        if (s.alpha[v] == 1) {
            if (s.quiver.plain_loops[v] > 0)
                out.push_back({MoveKind::SmallLoopRemoval, v, Player::Both, false});
            if (s.quiver.marked_loops[v] > 0)
                out.push_back({MoveKind::SmallLoopRemoval, v, Player::Both, true});
        }
        bool marked = s.quiver.marked_loops[v] == 1;
        if (left && big_loop_pattern(s, v, true).first)
            out.push_back({MoveKind::BigLoopRemoval, v, Player::Left, marked});
        if (right && big_loop_pattern(s, v, false).first)
            out.push_back({MoveKind::BigLoopRemoval, v, Player::Right, marked});
    }
    return out;
}

std::pair<MarkedQuiverSetting, long long> apply_move(const MarkedQuiverSetting& s,
                                                     const ReductionMove& move) {
    const int v = move.vertex;
    if (v < 0 || v >= s.k()) throw validation_error("move vertex out of range");
    MarkedQuiver q = s.quiver;
    DimVec alpha = s.alpha;

    switch (move.kind) {
    case MoveKind::VertexRemoval: {
        if (q.loops(v) != 0)
            throw validation_error("vertex removal: vertex carries loops");
        if (s.k() < 2)
            throw validation_error("vertex removal: would empty the quiver");
        if (move.player == Player::Left && chi_alpha_eps(s, v) < 0)
            throw validation_error("vertex removal: chi(alpha, eps_v) < 0");
        if (move.player == Player::Right && chi_eps_alpha(s, v) < 0)
            throw validation_error("vertex removal: chi(eps_v, alpha) < 0");
        // compose arrows through v; u == w yields plain loops
        for (int u = 0; u < q.k; ++u) {
            if (u == v || q.arrows[u][v] == 0) continue;
            for (int w = 0; w < q.k; ++w) {
                if (w == v || q.arrows[v][w] == 0) continue;
                int c = q.arrows[u][v] * q.arrows[v][w];
                if (u == w)
                    q.plain_loops[u] += c;
                else
                    q.arrows[u][w] += c;
            }
        }
        for (int u = 0; u < q.k; ++u) {
            q.arrows[u][v] = 0;
            q.arrows[v][u] = 0;
        }
        alpha[v] = 0; // make_setting drops the vertex
        return {make_setting(std::move(q), std::move(alpha)), 0};
    }
    case MoveKind::SmallLoopRemoval: {
        if (alpha[v] != 1)
            throw validation_error("small loop removal: vertex dimension is not 1");
        int& count = move.loop_marked ? q.marked_loops[v] : q.plain_loops[v];
        if (count == 0)
            throw validation_error("small loop removal: no such loop");
        --count;
        return {make_setting(std::move(q), std::move(alpha)), move.loop_marked ? 0 : 1};
    }
    case MoveKind::BigLoopRemoval: {
        bool left = move.player == Player::Left;
        if (move.player == Player::Both)
            throw validation_error("big loop removal: player must be Left or Right");
        auto [ok, other] = big_loop_pattern(s, v, left);
        if (!ok)
            throw validation_error("big loop removal: pattern conditions not met");
        bool marked = q.marked_loops[v] == 1;
        if (marked != move.loop_marked)
            throw validation_error("big loop removal: loop marking mismatch");
        q.plain_loops[v] = 0;
        q.marked_loops[v] = 0;
        if (left)
            q.arrows[v][other] = alpha[v];
        else
            q.arrows[other][v] = alpha[v];
        long long z = marked ? alpha[v] - 1 : alpha[v];
        return {make_setting(std::move(q), std::move(alpha)), z};
    }
    }
    throw validation_error("unknown move kind");
}

bool is_zero_setting(const MarkedQuiverSetting& s) {
    return legal_moves(s, Player::Both).empty();
}

namespace {

int kind_rank(MoveKind k) {
    switch (k) {
    case MoveKind::VertexRemoval: return 0;
    case MoveKind::SmallLoopRemoval: return 1;
    case MoveKind::BigLoopRemoval: return 2;
    }
    return 3;
}

int player_rank(Player p) {
    switch (p) {
    case Player::Left: return 0;
    case Player::Right: return 1;
    case Player::Both: return 2;
    }
    return 3;
}

auto move_key(const ReductionMove& m) {
    return std::tuple(m.vertex, kind_rank(m.kind), m.loop_marked ? 1 : 0, player_rank(m.player));
}

std::pair<MarkedQuiverSetting, ReductionTrace> play(const MarkedQuiverSetting& start,
                                                    bool deterministic, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MarkedQuiverSetting cur = start;
    ReductionTrace trace;
    for (;;) {
        auto moves = legal_moves(cur, Player::Both);
        if (moves.empty()) break;
        ReductionMove pick;
        if (deterministic) {
            pick = *std::min_element(moves.begin(), moves.end(),
                                     [](const ReductionMove& a, const ReductionMove& b) {
                                         return move_key(a) < move_key(b);
                                     });
        } else {
            std::uniform_int_distribution<size_t> dist(0, moves.size() - 1);
            pick = moves[dist(rng)];
        }
        auto [next, dz] = apply_move(cur, pick);
        cur = std::move(next);
        trace.moves.push_back(pick);
        trace.z += dz;
    }
    return {cur, trace};
}

} // namespace

std::pair<MarkedQuiverSetting, ReductionTrace> reduce_to_zero(const MarkedQuiverSetting& s,
                                                              Deterministic) {
    return play(s, true, 0);
}

std::pair<MarkedQuiverSetting, ReductionTrace> reduce_to_zero(const MarkedQuiverSetting& s,
                                                              Seeded seeded) {
    return play(s, false, seeded.seed);
}

bool verify_confluence(const MarkedQuiverSetting& s, int trials, std::uint64_t seed) {
    if (trials < 2) throw validation_error("verify_confluence needs trials >= 2");
    std::vector<CanonicalForm> forms(trials);
    std::vector<long long> zs(trials);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        auto [zero, trace] = reduce_to_zero(s, Seeded{seed + (std::uint64_t)t});
        forms[t] = canonical_form(zero);
        zs[t] = trace.z;
    }
    for (int t = 1; t < trials; ++t)
        if (!(forms[t] == forms[0]) || zs[t] != zs[0]) return false;
    return true;
}

static const char* kind_name(MoveKind k) {
    switch (k) {
    case MoveKind::VertexRemoval: return "vertex";
    case MoveKind::SmallLoopRemoval: return "loop";
    case MoveKind::BigLoopRemoval: return "big-loop";
    }
    return "?";
}

static const char* player_name(Player p) {
    switch (p) {
    case Player::Left: return "left";
    case Player::Right: return "right";
    case Player::Both: return "both";
    }
    return "?";
}

nlohmann::json trace_to_json(const ReductionTrace& trace, const MarkedQuiverSetting& final) {
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& m : trace.moves)
        moves.push_back({{"kind", kind_name(m.kind)},
                         {"vertex", m.vertex + 1},
                         {"player", player_name(m.player)},
                         {"marked", m.loop_marked}});
    return {{"moves", moves}, {"z", trace.z}, {"zero_setting", setting_to_json(final)}};
}

} // namespace mq
