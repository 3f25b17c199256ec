#include <doctest.h>

#include "helpers.hpp"
#include "mq/canonical.hpp"
#include "mq/reduction.hpp"

using namespace mq;

TEST_CASE("zero settings have no legal moves") {
    CHECK(is_zero_setting(mqtest::conifold()));
    CHECK(is_zero_setting(mqtest::triangle()));
    CHECK(is_zero_setting(make_setting(1, {1}, {})));
    CHECK(legal_moves(mqtest::conifold(), Player::Both).empty());
}

TEST_CASE("vertex removal composes arrows through the vertex") {
    // oriented 2-cycle of thin vertices; removing either vertex leaves a
    // plain loop at the other
    auto s = make_setting(2, {1, 1}, {{0, 1, 1}, {1, 0, 1}});
    auto moves = legal_moves(s, Player::Both);
    CHECK(moves.size() == 4); // both vertices, both players

    auto [next, dz] = apply_move(s, {MoveKind::VertexRemoval, 0, Player::Left});
    CHECK(dz == 0);
    CHECK(next.k() == 1);
    CHECK(next.quiver.plain_loops[0] == 1);

    // the loop at the thin vertex then removes with z = 1
    auto [zero, dz2] = apply_move(next, {MoveKind::SmallLoopRemoval, 0, Player::Both, false});
    CHECK(dz2 == 1);
    CHECK(is_zero_setting(zero));
    CHECK(central_dimension(s) == central_dimension(zero) + dz + dz2);
}

TEST_CASE("vertex removal with multiplicities and distinct endpoints") {
    // v1 -> v0, v0 -> v2 x3: removing v0 yields 3 arrows v1 -> v2
    auto s = make_setting(3, {1, 1, 1}, {{1, 0, 1}, {0, 2, 3}, {2, 1, 1}});
    auto [next, dz] = apply_move(s, {MoveKind::VertexRemoval, 0, Player::Left});
    CHECK(dz == 0);
    CHECK(next.k() == 2);
    CHECK(next.quiver.arrows[0][1] == 3); // old v1 -> old v2
}

TEST_CASE("small loop removal bookkeeping") {
    auto s = make_setting(1, {1}, {}, {{0, 1, 1}});
    auto [s1, z_plain] = apply_move(s, {MoveKind::SmallLoopRemoval, 0, Player::Both, false});
    CHECK(z_plain == 1);
    auto [s2, z_marked] = apply_move(s1, {MoveKind::SmallLoopRemoval, 0, Player::Both, true});
    CHECK(z_marked == 0);
    CHECK(is_zero_setting(s2));
    CHECK_THROWS_AS(apply_move(make_setting(1, {2}, {}, {{0, 1, 0}}),
                               ReductionMove{MoveKind::SmallLoopRemoval, 0, Player::Both, false}),
                    validation_error);
}

TEST_CASE("big loop removal replaces the loop by parallel arrows") {
    // dim-2 vertex with one plain loop and a single out-arrow to a thin vertex
    auto s = make_setting(2, {2, 1}, {{0, 1, 1}, {1, 0, 2}}, {{0, 1, 0}});
    auto moves = legal_moves(s, Player::Left);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].kind == MoveKind::BigLoopRemoval);
    CHECK_FALSE(moves[0].loop_marked);

    auto [next, z] = apply_move(s, moves[0]);
    CHECK(z == 2); // alpha_v for a plain big loop
    CHECK(next.quiver.loops(0) == 0);
    CHECK(next.quiver.arrows[0][1] == 2);
    CHECK(central_dimension(s) == central_dimension(next) + z);

    // marked variant: z drops to alpha_v - 1
    auto m = make_setting(2, {2, 1}, {{0, 1, 1}, {1, 0, 2}}, {{0, 0, 1}});
    auto mm = legal_moves(m, Player::Left);
    REQUIRE(mm.size() == 1);
    CHECK(mm[0].loop_marked);
    auto [mnext, mz] = apply_move(m, mm[0]);
    CHECK(mz == 1);
    CHECK(central_dimension(m) == central_dimension(mnext) + mz);
}

TEST_CASE("illegal moves name their violated condition") {
    auto coni = mqtest::conifold();
    CHECK_THROWS_WITH_AS(apply_move(coni, {MoveKind::VertexRemoval, 0, Player::Left}),
                         "vertex removal: chi(alpha, eps_v) < 0", validation_error);
    auto looped = make_setting(2, {1, 1}, {{0, 1, 1}, {1, 0, 1}}, {{0, 1, 0}});
    CHECK_THROWS_WITH_AS(apply_move(looped, {MoveKind::VertexRemoval, 0, Player::Left}),
                         "vertex removal: vertex carries loops", validation_error);
    CHECK_THROWS_AS(apply_move(coni, {MoveKind::BigLoopRemoval, 0, Player::Left}),
                    validation_error);
}

TEST_CASE("deterministic reduction is reproducible") {
    auto s = mqtest::random_simple_setting(42);
    auto [z1, t1] = reduce_to_zero(s, Deterministic{});
    auto [z2, t2] = reduce_to_zero(s, Deterministic{});
    CHECK(t1.moves == t2.moves);
    CHECK(t1.z == t2.z);
    CHECK(canonical_form(z1) == canonical_form(z2));
    CHECK(is_zero_setting(z1));
}

TEST_CASE("dimension conservation along every reduction path") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto s = mqtest::random_simple_setting(seed);
        for (std::uint64_t order = 0; order < 3; ++order) {
            // replay move by move to check each step conserves dimension
            auto [zero, trace] = reduce_to_zero(s, Seeded{order});
            auto cur = s;
            for (const auto& m : trace.moves) {
                auto [next, dz] = apply_move(cur, m);
                CHECK(central_dimension(cur) == central_dimension(next) + dz);
                cur = std::move(next);
            }
            CHECK(is_zero_setting(cur));
            CHECK(central_dimension(s) == central_dimension(zero) + trace.z);
        }
    }
}

TEST_CASE("random reduction orders agree on the normal form") {
    auto s = make_setting(4, {1, 2, 1, 2},
                          {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}, {1, 0, 1}, {2, 1, 1}});
    CHECK(verify_confluence(s, 16, 7));
}
