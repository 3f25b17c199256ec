#include "mq/mckay.hpp"

#include <numeric>

#include <nlohmann/json.hpp>

namespace mq {

CharacterTable make_character_table(long long order, std::vector<long long> class_sizes,
                                    std::vector<std::vector<Cyclotomic>> chars) {
    if (order < 1) throw validation_error("group order must be positive");
    if (class_sizes.empty()) throw validation_error("character table needs classes");
    if (chars.size() != class_sizes.size())
        throw validation_error("character table must be square (one row per class)");
    long long size_sum = 0;
    for (long long s : class_sizes) {
        if (s < 1) throw validation_error("class sizes must be positive");
        size_sum += s;
    }
    if (size_sum != order) throw validation_error("class sizes do not sum to the group order");
    if (class_sizes[0] != 1) throw validation_error("first class must be the identity class");

    int common = 1;
    for (const auto& row : chars) {
        if (row.size() != class_sizes.size())
            throw validation_error("character row length mismatch");
        for (const auto& v : row) common = (int)std::lcm((long long)common, (long long)v.order());
    }
    for (auto& row : chars)
        for (auto& v : row) v = v.to_order(common);

    CharacterTable t;
    t.group_order = order;
    t.class_sizes = std::move(class_sizes);
    t.chars = std::move(chars);

    for (const auto& v : t.chars[0])
        if (!(v == Cyclotomic::from_rational(common, 1)))
            throw validation_error("first character row must be trivial");
    for (const auto& row : t.chars) {
        Rational deg = row[0].rational_value();
        if (deg <= 0 || deg.get_den() != 1)
            throw validation_error("character degrees must be positive integers");
        t.degrees.push_back((int)deg.get_num().get_si());
    }
    for (size_t i = 0; i < t.chars.size(); ++i)
        for (size_t j = i; j < t.chars.size(); ++j) {
            Rational ip = character_inner_product(t, t.chars[i], t.chars[j]);
            if (ip != (i == j ? 1 : 0))
                throw validation_error("character rows fail orthogonality");
        }
    return t;
}

Rational character_inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& a,
                                 const std::vector<Cyclotomic>& b) {
    if (a.size() != t.class_sizes.size() || b.size() != t.class_sizes.size())
        throw validation_error("character row length mismatch");
    int common = 1;
    for (const auto& v : a) common = (int)std::lcm((long long)common, (long long)v.order());
    for (const auto& v : b) common = (int)std::lcm((long long)common, (long long)v.order());
    Cyclotomic sum(common);
    for (size_t c = 0; c < a.size(); ++c)
        sum = sum + a[c].to_order(common) * b[c].to_order(common).conj() *
                        Rational((long)t.class_sizes[c]);
    if (!sum.is_rational())
        throw validation_error("character inner product is not rational");
    return sum.rational_value() / Rational((long)t.group_order);
}

CharacterTable cyclic_group_table(int n) {
    if (n < 1) throw validation_error("cyclic group order must be positive");
    std::vector<long long> sizes(n, 1);
    std::vector<std::vector<Cyclotomic>> chars(n);
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < n; ++c)
            chars[j].push_back(Cyclotomic::zeta_power(n, (long long)j * c));
    return make_character_table(n, std::move(sizes), std::move(chars));
}

std::vector<Cyclotomic> cyclic_weight_character(int n, const std::vector<int>& weights) {
    std::vector<Cyclotomic> chi;
    for (int c = 0; c < n; ++c) {
        Cyclotomic v(n);
        for (int w : weights) v = v + Cyclotomic::zeta_power(n, (long long)w * c);
        chi.push_back(v);
    }
    return chi;
}

MarkedQuiverSetting mckay_quiver(const CharacterTable& t, const std::vector<Cyclotomic>& chi_V) {
    if (chi_V.size() != t.class_sizes.size())
        throw validation_error("acting character has wrong length");
    const int k = (int)t.chars.size();
    int common = 1;
    for (const auto& v : chi_V) common = (int)std::lcm((long long)common, (long long)v.order());
    for (const auto& row : t.chars)
        for (const auto& v : row) common = (int)std::lcm((long long)common, (long long)v.order());

    MarkedQuiver q;
    q.k = k;
    q.arrows.assign(k, std::vector<int>(k, 0));
    q.plain_loops.assign(k, 0);
    q.marked_loops.assign(k, 0);
    for (int j = 0; j < k; ++j) {
        std::vector<Cyclotomic> prod;
        for (size_t c = 0; c < chi_V.size(); ++c)
            prod.push_back(chi_V[c].to_order(common) * t.chars[j][c].to_order(common));
        for (int i = 0; i < k; ++i) {
            Rational m = character_inner_product(t, prod, t.chars[i]);
            if (m < 0 || m.get_den() != 1)
                throw validation_error("non-integral multiplicity in character data");
            int count = (int)m.get_num().get_si();
            if (i == j)
                q.plain_loops[i] += count;
            else
                q.arrows[i][j] = count;
        }
    }
    return make_setting(std::move(q), DimVec(t.degrees));
}

QuiverPresentation moment_relations(const LabeledQuiver& q, const DimVec& alpha,
                                    const std::vector<std::pair<int, int>>& pairing) {
    std::vector<int> used(q.arrows.size(), 0);
    for (auto [a, astar] : pairing) {
        if (a < 0 || astar < 0 || a >= (int)q.arrows.size() || astar >= (int)q.arrows.size())
            throw validation_error("pairing references unknown arrow");
        if (q.arrows[a].from != q.arrows[astar].to || q.arrows[a].to != q.arrows[astar].from)
            throw validation_error("paired arrows must reverse each other");
        ++used[a];
        ++used[astar];
    }
    for (int u : used)
        if (u != 1) throw validation_error("pairing must cover every arrow exactly once");

    QuiverPresentation pres{q, alpha, {}};
    for (int v = 0; v < q.k; ++v) {
        PathLinComb rel = plc_zero(v, v);
        for (auto [a, astar] : pairing)
            if (q.arrows[a].to == v)
                rel = plc_add(rel, plc_from_path(concat(q, arrow_path(q, astar), arrow_path(q, a))));
        for (auto [a, astar] : pairing)
            if (q.arrows[a].from == v)
                rel = plc_add(rel, plc_from_path(concat(q, arrow_path(q, a), arrow_path(q, astar)), -1));
        pres.relations.push_back(std::move(rel));
    }
    return pres;
}

QuiverPresentation abelian_skew_relations(int n, const std::vector<int>& weights) {
    if (n < 1) throw validation_error("cyclic group order must be positive");
    const int d = (int)weights.size();
    if (d < 1) throw validation_error("need at least one acting coordinate");

    static const char* letters[] = {"x", "y", "z", "s", "t", "u", "w"};
    if (d > 7) throw validation_error("at most 7 acting coordinates supported");

    auto mod = [n](long long v) { return (int)(((v % n) + n) % n); };
    // In the two-coordinate case with opposite weights the second family is
    // the dual of the first, and its arrows are named after their targets.
    bool dual = d == 2 && n > 1 && mod(weights[0] + weights[1]) == 0;

    LabeledQuiver q;
    q.k = n;
    std::vector<std::vector<int>> id(d, std::vector<int>(n));
    for (int p = 0; p < d; ++p)
        for (int c = 0; c < n; ++c) {
            int tgt = mod(c + weights[p]);
            std::string label = letters[p];
            if (n > 1) label += std::to_string((dual && p == 1 ? tgt : c) + 1);
            id[p][c] = q.add_arrow(c, tgt, std::move(label));
        }

    QuiverPresentation pres{q, DimVec(n, 1), {}};
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < d; ++p)
            for (int r = p + 1; r < d; ++r) {
                Path one = concat(q, arrow_path(q, id[r][c]),
                                  arrow_path(q, id[p][mod(c + weights[r])]));
                Path two = concat(q, arrow_path(q, id[p][c]),
                                  arrow_path(q, id[r][mod(c + weights[p])]));
                pres.relations.push_back(plc_add(plc_from_path(one), plc_from_path(two, -1)));
            }
    return pres;
}

nlohmann::json character_table_to_json(const CharacterTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.chars) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(cyclotomic_to_json(v));
        rows.push_back(r);
    }
    return {{"order", t.group_order}, {"classes", t.class_sizes}, {"chars", rows}};
}

CharacterTable character_table_from_json(const nlohmann::json& j) {
    if (!j.contains("order") || !j.contains("classes") || !j.contains("chars"))
        throw validation_error("character table document needs 'order', 'classes', 'chars'");
    std::vector<std::vector<Cyclotomic>> chars;
    for (const auto& row : j.at("chars")) {
        std::vector<Cyclotomic> r;
        for (const auto& v : row) r.push_back(cyclotomic_from_json(v));
        chars.push_back(std::move(r));
    }
    return make_character_table(j.at("order").get<long long>(),
                                j.at("classes").get<std::vector<long long>>(), std::move(chars));
}

} // namespace mq
