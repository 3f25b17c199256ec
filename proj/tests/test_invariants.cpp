#include <doctest.h>

#include "helpers.hpp"
#include "mq/invariants.hpp"

using namespace mq;

namespace {

std::vector<std::string> cycle_words(const LabeledQuiver& q, const std::vector<CyclicWord>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(cycle_string(q, c));
    return out;
}

} // namespace

TEST_CASE("labeling a plain setting") {
    auto q = label_setting(mqtest::conifold());
    REQUIRE(q.arrows.size() == 4);
    CHECK(q.arrows[0].label == "a");
    CHECK(q.arrows[0].from == 0);
    CHECK(q.arrows[1].label == "b");
    CHECK(q.arrows[2].label == "c");
    CHECK(q.arrows[2].from == 1);
    CHECK(q.arrows[3].label == "d");

    // single-vertex settings with few arrows use coordinate-style letters
    auto l = label_setting(make_setting(1, {2}, {}, {{0, 2, 0}}));
    CHECK(l.arrows[0].label == "x");
    CHECK(l.arrows[1].label == "y");
}

TEST_CASE("cycle enumeration on the doubled 2-cycle") {
    auto q = label_setting(mqtest::conifold());
    auto cycles = enumerate_cycles(q, 2);
    CHECK(cycle_words(q, cycles) == std::vector<std::string>{"ac", "ad", "bc", "bd"});
    for (const auto& c : cycles) CHECK(c.primitive);

    // longer even cycles revisit vertices; they appear under a larger bound
    auto longer = enumerate_cycles(q, 4);
    CHECK(longer.size() > 4);
}

TEST_CASE("powers of shorter cycles are recognized") {
    LabeledQuiver q;
    q.k = 1;
    q.add_arrow(0, 0, "x");
    auto with = enumerate_cycles(q, 3, true);
    REQUIRE(with.size() == 3); // x, xx, xxx
    CHECK(with[0].primitive);
    CHECK_FALSE(with[1].primitive);
    CHECK_FALSE(with[2].primitive);
    auto without = enumerate_cycles(q, 3);
    CHECK(cycle_words(q, without) == std::vector<std::string>{"x"});
}

TEST_CASE("cycle generators of the order-3 triangle") {
    auto pres = mqtest::triangle_presentation();
    auto cycles = enumerate_cycles(pres.quiver, 3);
    // y1y3y2 is the application-order spelling of the composition y1.y2.y3
    CHECK(cycle_words(pres.quiver, cycles) ==
          std::vector<std::string>{"x1y1", "x2y2", "x3y3", "x1x2x3", "y1y3y2"});
}

TEST_CASE("default cycle bound") {
    CHECK(default_cycle_bound({1, 1}) == 5);
    CHECK(default_cycle_bound({1, 1, 1}) == 10);
}

TEST_CASE("trace evaluation is rotation invariant") {
    auto q = label_setting(mqtest::conifold());
    std::vector<Matrix> mats;
    int val = 2;
    for (int a = 0; a < 4; ++a) {
        Matrix m(1, 1);
        m(0, 0) = val++;
        mats.push_back(std::move(m));
    }
    auto rep = make_representation(q, {1, 1}, std::move(mats));
    CyclicWord w1{{0, 2}, true}; // a then c
    CyclicWord w2{{2, 0}, true}; // c then a
    CHECK(evaluate_trace(rep, w1) == evaluate_trace(rep, w2));
    CHECK(evaluate_trace(rep, w1) == 2 * 4);
}

TEST_CASE("relation verification on the doubled 2-cycle") {
    auto q = label_setting(mqtest::conifold());
    auto cycles = enumerate_cycles(q, 2);
    std::map<std::string, CyclicWord> named;
    for (const auto& c : cycles) named[cycle_string(q, c)] = c;

    // (ac)(bd) = (ad)(bc) identically on thin representations
    CyclePoly good{{{1, {"ac", "bd"}}, {-1, {"ad", "bc"}}}};
    CHECK(verify_relation(q, {1, 1}, named, good, 100, 17));

    CyclePoly bad{{{1, {"ac"}}, {-1, {"ad"}}}};
    std::string failure;
    CHECK_FALSE(verify_relation(q, {1, 1}, named, bad, 100, 17, &failure));
    CHECK(failure.find("sample") != std::string::npos);
    CHECK(failure.find("->") != std::string::npos);

    CyclePoly unknown{{{1, {"zz"}}}};
    CHECK_THROWS_AS(verify_relation(q, {1, 1}, named, unknown, 10, 0), validation_error);
}

TEST_CASE("single relation of the triangle invariants") {
    auto pres = mqtest::triangle_presentation();
    auto cycles = enumerate_cycles(pres.quiver, 3);
    std::map<std::string, CyclicWord> named;
    for (const auto& c : cycles) named[cycle_string(pres.quiver, c)] = c;
    CyclePoly rel{{{1, {"x1y1", "x2y2", "x3y3"}}, {-1, {"x1x2x3", "y1y3y2"}}}};
    CHECK(verify_relation(pres.quiver, pres.alpha, named, rel, 100, 23));
}

TEST_CASE("block order generators") {
    // one vertex, one loop: the idempotent and the loop generate
    LabeledQuiver one;
    one.k = 1;
    one.add_arrow(0, 0, "x");
    auto gen1 = block_order_generators(one, {2}, 2);
    REQUIRE(gen1.entries[0][0].size() == 2);
    CHECK(path_string(one, gen1.entries[0][0][0]) == "v1");
    CHECK(path_string(one, gen1.entries[0][0][1]) == "x");

    // doubled 2-cycle: arrows generate the off-diagonal entries
    auto q = label_setting(mqtest::conifold());
    auto gen = block_order_generators(q, {1, 1}, 2);
    auto words = [&](int i, int j) {
        std::vector<std::string> out;
        for (const auto& p : gen.entries[i][j]) out.push_back(path_string(q, p));
        return out;
    };
    CHECK(words(1, 0) == std::vector<std::string>{"a", "b"});
    CHECK(words(0, 1) == std::vector<std::string>{"c", "d"});
    CHECK(words(0, 0)[0] == "v1");

    CHECK_THROWS_AS(block_order_generators(q, {1}, 2), validation_error);
    CHECK_THROWS_AS(block_order_generators(q, {1, 0}, 2), validation_error);
}

TEST_CASE("triangle block generators match the two-step paths") {
    auto pres = mqtest::triangle_presentation();
    auto gen = block_order_generators(pres.quiver, {1, 1, 1}, 2);
    auto words = [&](int i, int j) {
        std::vector<std::string> out;
        for (const auto& p : gen.entries[i][j]) out.push_back(path_string(pres.quiver, p));
        return out;
    };
    CHECK(words(0, 1) == std::vector<std::string>{"y1", "x3x2"});
    CHECK(words(0, 2) == std::vector<std::string>{"x3", "y1y2"});
    CHECK(words(1, 0) == std::vector<std::string>{"x1", "y2y3"});
    CHECK(words(1, 2) == std::vector<std::string>{"y2", "x1x3"});
    CHECK(words(2, 0) == std::vector<std::string>{"y3", "x2x1"});
    CHECK(words(2, 1) == std::vector<std::string>{"x2", "y3y1"});
}
