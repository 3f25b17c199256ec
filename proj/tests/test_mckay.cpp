#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "mq/canonical.hpp"
#include "mq/mckay.hpp"

using namespace mq;

namespace {

CharacterTable symmetric3_table() {
    auto r = [](int order, int v) { return Cyclotomic::from_rational(order, v); };
    return make_character_table(6, {1, 3, 2},
                                {{r(1, 1), r(1, 1), r(1, 1)},
                                 {r(1, 1), r(1, -1), r(1, 1)},
                                 {r(1, 2), r(1, 0), r(1, -1)}});
}

} // namespace

TEST_CASE("character table validation") {
    CHECK_NOTHROW(symmetric3_table());
    CHECK_NOTHROW(cyclic_group_table(7));

    auto r = [](int v) { return Cyclotomic::from_rational(1, v); };
    // rows that are not orthogonal are rejected
    CHECK_THROWS_AS(make_character_table(2, {1, 1}, {{r(1), r(1)}, {r(1), r(1)}}),
                    validation_error);
    // first row must be the trivial character
    CHECK_THROWS_AS(make_character_table(2, {1, 1}, {{r(1), r(-1)}, {r(1), r(1)}}),
                    validation_error);
    CHECK_THROWS_AS(make_character_table(3, {1, 1}, {{r(1), r(1)}, {r(1), r(-1)}}),
                    validation_error);
}

TEST_CASE("character inner products") {
    auto t = cyclic_group_table(5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            CHECK(character_inner_product(t, t.chars[i], t.chars[j]) == (i == j ? 1 : 0));
}

TEST_CASE("cyclic weight quivers") {
    // order 3, weights (1,2): triangle with single arrows both ways, thin dims
    auto t = cyclic_group_table(3);
    auto s = mckay_quiver(t, cyclic_weight_character(3, {1, 2}));
    CHECK(s.alpha == DimVec{1, 1, 1});
    CHECK(settings_isomorphic(s, mqtest::triangle()));
    CHECK(central_dimension(s) == 4);

    // order 2, weights (1,1): conifold shape
    auto coni = mckay_quiver(cyclic_group_table(2), cyclic_weight_character(2, {1, 1}));
    CHECK(settings_isomorphic(coni, mqtest::conifold()));

    // trivial group: d plain loops on one vertex
    auto loops = mckay_quiver(cyclic_group_table(1), cyclic_weight_character(1, {0, 0, 0}));
    CHECK(loops.k() == 1);
    CHECK(loops.quiver.plain_loops[0] == 3);
}

TEST_CASE("weighted column sums count the acting dimension") {
    // sum_i #(i -> j) alpha_i = dim(V) * alpha_j, loops included
    auto check_columns = [](const MarkedQuiverSetting& s, int dim_v) {
        for (int j = 0; j < s.k(); ++j) {
            long long sum = (long long)s.quiver.loops(j) * s.alpha[j];
            for (int i = 0; i < s.k(); ++i) sum += (long long)s.quiver.arrows[i][j] * s.alpha[i];
            CHECK(sum == (long long)dim_v * s.alpha[j]);
        }
    };
    check_columns(mckay_quiver(cyclic_group_table(3), cyclic_weight_character(3, {1, 1, 2})), 3);
    check_columns(mckay_quiver(cyclic_group_table(4), cyclic_weight_character(4, {1, 3})), 2);
    auto s3 = symmetric3_table();
    check_columns(mckay_quiver(s3, s3.chars[2]), 2);
}

TEST_CASE("nonabelian quiver structure") {
    // tensoring with the 2-dimensional representation links it to both
    // 1-dimensional ones and to itself
    auto t = symmetric3_table();
    auto s = mckay_quiver(t, t.chars[2]);
    CHECK(s.alpha == DimVec{1, 1, 2});
    CHECK(s.quiver.arrows[2][0] == 1);
    CHECK(s.quiver.arrows[2][1] == 1);
    CHECK(s.quiver.arrows[0][2] == 1);
    CHECK(s.quiver.arrows[1][2] == 1);
    CHECK(s.quiver.plain_loops[2] == 1);
    CHECK(s.quiver.arrows[0][1] == 0);
}

TEST_CASE("non-integral multiplicities are rejected") {
    auto t = cyclic_group_table(2);
    std::vector<Cyclotomic> bogus{Cyclotomic::from_rational(2, Rational(1) / 2),
                                  Cyclotomic::from_rational(2, Rational(1) / 2)};
    CHECK_THROWS_AS(mckay_quiver(t, bogus), validation_error);
}

TEST_CASE("skew-group relations for the order-3 cyclic action") {
    auto pres = mqtest::triangle_presentation();
    CHECK(pres.alpha == DimVec{1, 1, 1});
    REQUIRE(pres.relations.size() == 3);
    CHECK(plc_string(pres.quiver, pres.relations[0]) == "x3y3-y1x1");
    CHECK(plc_string(pres.quiver, pres.relations[1]) == "x1y1-y2x2");
    CHECK(plc_string(pres.quiver, pres.relations[2]) == "x2y2-y3x3");
}

TEST_CASE("skew-group relations for the trivial group") {
    auto pres = abelian_skew_relations(1, {0, 0});
    REQUIRE(pres.relations.size() == 1);
    CHECK(plc_string(pres.quiver, pres.relations[0]) == "xy-yx");
}

TEST_CASE("moment relations of a double quiver") {
    LabeledQuiver q;
    q.k = 2;
    q.add_arrow(0, 1, "a");
    q.add_arrow(1, 0, "b");
    auto pres = moment_relations(q, {1, 1}, {{0, 1}});
    REQUIRE(pres.relations.size() == 2);
    CHECK(plc_string(q, pres.relations[0]) == "-ba");
    CHECK(plc_string(q, pres.relations[1]) == "ab");

    CHECK_THROWS_AS(moment_relations(q, {1, 1}, {{0, 0}}), validation_error);
    CHECK_THROWS_AS(moment_relations(q, {1, 1}, std::vector<std::pair<int, int>>{}),
                    validation_error);
}

TEST_CASE("character table JSON round trip") {
    auto t = cyclic_group_table(4);
    auto back = character_table_from_json(character_table_to_json(t));
    CHECK(back.group_order == 4);
    CHECK(back.degrees == t.degrees);
    for (size_t i = 0; i < t.chars.size(); ++i)
        for (size_t c = 0; c < t.chars[i].size(); ++c)
            CHECK(back.chars[i][c] == t.chars[i][c]);
}
