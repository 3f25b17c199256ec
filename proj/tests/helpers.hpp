#ifndef MQ_TEST_HELPERS_HPP
#define MQ_TEST_HELPERS_HPP

#include <map>
#include <random>
#include <string>

#include "mq/mckay.hpp"
#include "mq/representation.hpp"
#include "mq/setting.hpp"

namespace mqtest {

/// Two dim-1 vertices with 2 arrows each direction.
inline mq::MarkedQuiverSetting conifold() {
    return mq::make_setting(2, {1, 1}, {{0, 1, 2}, {1, 0, 2}});
}

/// Three dim-1 vertices, single arrows both ways around the triangle.
inline mq::MarkedQuiverSetting triangle() {
    return mq::make_setting(3, {1, 1, 1},
                            {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {1, 0, 1}, {2, 1, 1}, {0, 2, 1}});
}

/// Labeled triangle with relations (the order-3 cyclic skew-group quiver).
inline mq::QuiverPresentation triangle_presentation() {
    return mq::abelian_skew_relations(3, {1, 2});
}

/// Thin representation over a labeled quiver from scalar values by label.
inline mq::Representation thin_rep(const mq::LabeledQuiver& q,
                                   const std::map<std::string, mq::Rational>& values) {
    std::vector<mq::Matrix> mats;
    for (const auto& arr : q.arrows) {
        mq::Matrix m(1, 1);
        auto it = values.find(arr.label);
        if (it != values.end()) m(0, 0) = it->second;
        mats.push_back(std::move(m));
    }
    return mq::make_representation(q, mq::DimVec(q.k, 1), std::move(mats));
}

/// Random connected setting with simple dimension vector: k <= 5, dims <= 3,
/// at most 8 arrows. Rejection-sampled, deterministic per seed.
inline mq::MarkedQuiverSetting random_simple_setting(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        std::uniform_int_distribution<int> kd(1, 5);
        int k = kd(rng);
        mq::DimVec alpha(k);
        std::uniform_int_distribution<int> dd(1, 3);
        for (int& a : alpha) a = dd(rng);
        std::uniform_int_distribution<int> arrow_count(k == 1 ? 1 : k, 8);
        int n_arrows = arrow_count(rng);
        std::vector<std::array<int, 3>> arrows, loops;
        std::uniform_int_distribution<int> vd(0, k - 1), md(0, 3);
        for (int a = 0; a < n_arrows; ++a) {
            int from = vd(rng), to = vd(rng);
            if (from == to) {
                bool marked = md(rng) == 0 && alpha[from] > 1;
                loops.push_back({from, marked ? 0 : 1, marked ? 1 : 0});
            } else {
                arrows.push_back({from, to, 1});
            }
        }
        auto s = mq::make_setting(k, alpha, arrows, loops);
        if (!mq::is_strongly_connected(s)) continue;
        if (!mq::is_simple_dimvec(s)) continue;
        return s;
    }
}

} // namespace mqtest

#endif
