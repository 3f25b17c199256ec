#include <doctest.h>

#include "helpers.hpp"
#include "mq/canonical.hpp"
#include "mq/classify.hpp"

using namespace mq;

TEST_CASE("smooth list membership") {
    CHECK(smooth_local_type(make_setting(1, {1}, {})).smooth);
    CHECK(smooth_local_type(make_setting(1, {5}, {}, {{0, 1, 0}})).smooth);
    CHECK(smooth_local_type(make_setting(1, {5}, {}, {{0, 0, 1}})).smooth);
    CHECK(smooth_local_type(make_setting(1, {2}, {}, {{0, 2, 0}})).smooth);
    CHECK(smooth_local_type(make_setting(1, {2}, {}, {{0, 1, 1}})).smooth);
    CHECK(smooth_local_type(make_setting(1, {2}, {}, {{0, 0, 2}})).smooth);

    // two loops on a dim-3 vertex is singular, as is the conifold
    CHECK_FALSE(smooth_local_type(make_setting(1, {3}, {}, {{0, 2, 0}})).smooth);
    CHECK_FALSE(smooth_local_type(mqtest::conifold()).smooth);
}

TEST_CASE("smoothness is read off the reduced setting") {
    // oriented 2-cycle reduces to the bare vertex
    auto s = make_setting(2, {1, 1}, {{0, 1, 1}, {1, 0, 1}});
    auto res = smooth_local_type(s);
    CHECK(res.smooth);
    CHECK(res.zero_setting.k() == 1);
    CHECK(central_dimension(res.zero_setting) == 0);
}

TEST_CASE("no singular settings in dimension 2") {
    CHECK(enumerate_zero_settings(2).empty());
}

TEST_CASE("dimension 3: the conifold alone") {
    auto list = enumerate_zero_settings(3);
    REQUIRE(list.size() == 1);
    CHECK(settings_isomorphic(list[0], mqtest::conifold()));
    auto rec = known_singularity(list[0]);
    REQUIRE(rec.has_value());
    CHECK(rec->name == "conifold");
    CHECK(rec->presentation == "(xy-uv)");
}

TEST_CASE("dimension 4: exactly three singular settings") {
    auto list = enumerate_zero_settings(4);
    REQUIRE(list.size() == 3);
    int named = 0;
    bool saw_t32 = false, saw_mixed = false, saw_t222 = false;
    for (const auto& s : list) {
        auto rec = known_singularity(s);
        REQUIRE(rec.has_value());
        ++named;
        if (rec->name == "T(3,2)") saw_t32 = true;
        if (rec->name == "mixed 3-cycle") saw_mixed = true;
        if (rec->name == "T(2,2,2)") saw_t222 = true;
    }
    CHECK(named == 3);
    CHECK(saw_t32);
    CHECK(saw_mixed);
    CHECK(saw_t222);
}

TEST_CASE("serial and parallel enumeration agree") {
    for (long long d : {2, 3, 4, 5}) {
        auto a = enumerate_zero_settings_serial(d);
        auto b = enumerate_zero_settings(d);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i)
            CHECK(canonical_form(a[i]) == canonical_form(b[i]));
    }
}

TEST_CASE("isolated type detection and its dimension formula") {
    auto t32 = make_setting(2, {1, 1}, {{0, 1, 3}, {1, 0, 2}});
    auto iso = detect_isolated(t32);
    REQUIRE(iso.has_value());
    CHECK(iso->multiplicities == std::vector<int>{3, 2});
    CHECK(isolated_dimension(*iso) == 4); // 3 + 2 - 2 + 1

    auto t2222 = make_setting(4, {1, 1, 1, 1},
                              {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}});
    auto iso4 = detect_isolated(t2222);
    REQUIRE(iso4.has_value());
    CHECK(iso4->multiplicities == std::vector<int>{2, 2, 2, 2});
    CHECK(isolated_dimension(*iso4) == 5);

    // the mixed 3-cycle is not an oriented-cycle type
    CHECK_FALSE(detect_isolated(mqtest::triangle()).has_value());
    // multiplicity 1 somewhere makes the vertex removable, hence not a type
    CHECK_FALSE(detect_isolated(make_setting(2, {1, 1}, {{0, 1, 3}, {1, 0, 1}})).has_value());
}

TEST_CASE("dimension 5 isolated family") {
    auto list = enumerate_zero_settings(5);
    std::vector<IsolatedType> found;
    for (const auto& s : list)
        if (auto iso = detect_isolated(s)) {
            CHECK(isolated_dimension(*iso) == 5);
            found.push_back(*iso);
        }
    REQUIRE(found.size() == 4);
    auto has = [&](std::vector<int> m) {
        for (const auto& t : found)
            if (t.multiplicities == m) return true;
        return false;
    };
    CHECK(has({4, 2}));
    CHECK(has({3, 3}));
    CHECK(has({3, 2, 2}));
    CHECK(has({2, 2, 2, 2}));
}
