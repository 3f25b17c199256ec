#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "mq/representation.hpp"

using namespace mq;

namespace {

LabeledQuiver two_vertex_quiver() {
    LabeledQuiver q;
    q.k = 2;
    q.add_arrow(0, 1, "a");
    q.add_arrow(1, 0, "b");
    return q;
}

Matrix mat(std::vector<std::vector<Rational>> rows) {
    Matrix m((int)rows.size(), (int)rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m((int)r, (int)c) = rows[r][c];
    return m;
}

} // namespace

TEST_CASE("shape validation") {
    auto q = two_vertex_quiver();
    // a: v0 -> v1 needs an alpha_1 x alpha_0 matrix
    CHECK_NOTHROW(make_representation(q, {1, 2}, {mat({{1}, {2}}), mat({{3, 4}})}));
    CHECK_THROWS_AS(make_representation(q, {1, 2}, {mat({{1, 2}}), mat({{3}, {4}})}),
                    validation_error);
    CHECK_THROWS_AS(make_representation(q, {1, 2}, {mat({{1}, {2}})}), validation_error);
}

TEST_CASE("marked loops must be trace zero") {
    LabeledQuiver q;
    q.k = 1;
    q.add_arrow(0, 0, "m");
    auto traceless = mat({{2, 1}, {3, -2}});
    CHECK_NOTHROW(make_representation(q, {2}, {traceless}, {true}));
    CHECK_THROWS_AS(make_representation(q, {2}, {mat({{1, 0}, {0, 0}})}, {true}),
                    validation_error);
    // the same matrix is fine on a plain loop
    CHECK_NOTHROW(make_representation(q, {2}, {mat({{1, 0}, {0, 0}})}, {false}));
}

TEST_CASE("path evaluation multiplies in matrix order") {
    auto q = two_vertex_quiver();
    auto rep = make_representation(q, {1, 2}, {mat({{1}, {2}}), mat({{3, 4}})});
    // b after a: 1x1 matrix (3,4).(1,2)^T = 11
    Path ba{0, 0, {0, 1}};
    CHECK(evaluate_path(rep, ba)(0, 0) == 11);
    // a after b: 2x2 outer product
    Path ab{1, 1, {1, 0}};
    auto m = evaluate_path(rep, ab);
    CHECK(m(0, 0) == 3);
    CHECK(m(0, 1) == 4);
    CHECK(m(1, 0) == 6);
    CHECK(m(1, 1) == 8);
    // empty path is the identity
    CHECK(evaluate_path(rep, empty_path(1))(0, 1) == 0);
    CHECK(evaluate_path(rep, empty_path(1))(1, 1) == 1);
}

TEST_CASE("linear combinations and relation validation") {
    auto q = two_vertex_quiver();
    auto rep = make_representation(q, {1, 1}, {mat({{2}}), mat({{3}})});
    // ba - 6 e_0 vanishes at this representation
    auto rel = plc_add(plc_from_path(Path{0, 0, {0, 1}}), plc_from_path(empty_path(0), -6));
    CHECK(evaluate_plc(rep, rel)(0, 0) == 0);
    CHECK_NOTHROW(validate_relations(rep, {rel}));
    auto bad = plc_add(plc_from_path(Path{0, 0, {0, 1}}), plc_from_path(empty_path(0), -5));
    CHECK_THROWS_AS(validate_relations(rep, {bad}), validation_error);
}

TEST_CASE("base change preserves traces of cycles") {
    auto q = two_vertex_quiver();
    auto rep = make_representation(q, {1, 2}, {mat({{1}, {2}}), mat({{3, 4}})});
    std::vector<Matrix> g{mat({{5}}), mat({{1, 1}, {0, 1}})};
    auto moved = transform(rep, g);
    Path cycle{0, 0, {0, 1}};
    CHECK(evaluate_path(moved, cycle)(0, 0) == evaluate_path(rep, cycle)(0, 0));
    CHECK_FALSE(is_thin(moved));
    CHECK(is_thin(make_representation(q, {1, 1}, {mat({{2}}), mat({{3}})})));
}

TEST_CASE("representation JSON round trip") {
    auto q = two_vertex_quiver();
    auto rep = make_representation(
        q, {1, 2}, {mat({{Rational(1) / 3}, {2}}), mat({{3, Rational(-4) / 7}})});
    auto back = representation_from_json(representation_to_json(rep));
    CHECK(back.alpha == rep.alpha);
    REQUIRE(back.matrices.size() == 2);
    CHECK(back.matrices[0](0, 0) == Rational(1) / 3);
    CHECK(back.matrices[1](0, 1) == Rational(-4) / 7);
    CHECK(back.quiver.arrows[0].label == "a");
}
