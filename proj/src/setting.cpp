#include "mq/setting.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <nlohmann/json.hpp>

namespace mq {

int MarkedQuiver::total_marked() const {
    return std::accumulate(marked_loops.begin(), marked_loops.end(), 0);
}

int MarkedQuiver::total_arrows() const {
    int n = 0;
    for (int i = 0; i < k; ++i) {
        n += plain_loops[i] + marked_loops[i];
        for (int j = 0; j < k; ++j)
            if (i != j) n += arrows[i][j];
    }
    return n;
}

int MarkedQuiver::out_arrows(int v) const {
    int n = 0;
    for (int j = 0; j < k; ++j)
        if (j != v) n += arrows[v][j];
    return n;
}

int MarkedQuiver::in_arrows(int v) const {
    int n = 0;
    for (int i = 0; i < k; ++i)
        if (i != v) n += arrows[i][v];
    return n;
}

static void validate_shape(const MarkedQuiver& q, const DimVec& alpha) {
    if (q.k < 1) throw validation_error("quiver must have at least one vertex");
    if ((int)alpha.size() != q.k) throw validation_error("dimension vector length mismatch");
    if ((int)q.arrows.size() != q.k || (int)q.plain_loops.size() != q.k ||
        (int)q.marked_loops.size() != q.k)
        throw validation_error("quiver table sizes inconsistent with k");
    for (int i = 0; i < q.k; ++i) {
        if ((int)q.arrows[i].size() != q.k) throw validation_error("adjacency row length mismatch");
        if (q.arrows[i][i] != 0)
            throw validation_error("diagonal adjacency must be zero; loops are stored separately");
        if (q.plain_loops[i] < 0 || q.marked_loops[i] < 0)
            throw validation_error("negative loop count");
        for (int j = 0; j < q.k; ++j)
            if (q.arrows[i][j] < 0) throw validation_error("negative arrow count");
    }
    for (int v : alpha)
        if (v < 0) throw validation_error("negative dimension");
}

MarkedQuiverSetting make_setting(MarkedQuiver quiver, DimVec alpha) {
    validate_shape(quiver, alpha);
    std::vector<int> keep;
    for (int v = 0; v < quiver.k; ++v)
        if (alpha[v] > 0) keep.push_back(v);
    if (keep.empty()) throw validation_error("setting has total dimension zero");
    if ((int)keep.size() != quiver.k) {
        MarkedQuiver q2;
        q2.k = (int)keep.size();
        q2.arrows.assign(q2.k, std::vector<int>(q2.k, 0));
        q2.plain_loops.resize(q2.k);
        q2.marked_loops.resize(q2.k);
        DimVec a2(q2.k);
        for (int i = 0; i < q2.k; ++i) {
            a2[i] = alpha[keep[i]];
            q2.plain_loops[i] = quiver.plain_loops[keep[i]];
            q2.marked_loops[i] = quiver.marked_loops[keep[i]];
            for (int j = 0; j < q2.k; ++j)
                if (i != j) q2.arrows[i][j] = quiver.arrows[keep[i]][keep[j]];
        }
        quiver = std::move(q2);
        alpha = std::move(a2);
    }
    return MarkedQuiverSetting{std::move(quiver), std::move(alpha)};
}

MarkedQuiverSetting make_setting(int k, DimVec alpha,
                                 const std::vector<std::array<int, 3>>& arrow_list,
                                 const std::vector<std::array<int, 3>>& loop_list) {
    MarkedQuiver q;
    q.k = k;
    q.arrows.assign(k, std::vector<int>(k, 0));
    q.plain_loops.assign(k, 0);
    q.marked_loops.assign(k, 0);
    for (auto [from, to, count] : arrow_list) {
        if (from < 0 || from >= k || to < 0 || to >= k)
            throw validation_error("arrow endpoint out of range");
        if (from == to)
            throw validation_error("use the loop list for loops");
        q.arrows[from][to] += count;
    }
    for (auto [v, plain, marked] : loop_list) {
        if (v < 0 || v >= k) throw validation_error("loop vertex out of range");
        q.plain_loops[v] += plain;
        q.marked_loops[v] += marked;
    }
    return make_setting(std::move(q), std::move(alpha));
}

std::vector<std::vector<long long>> euler_matrix(const MarkedQuiver& q) {
    std::vector<std::vector<long long>> e(q.k, std::vector<long long>(q.k, 0));
    for (int i = 0; i < q.k; ++i)
        for (int j = 0; j < q.k; ++j) {
            long long arrows = (i == j) ? q.loops(i) : q.arrows[i][j];
            e[i][j] = (i == j ? 1 : 0) - arrows;
        }
    return e;
}

long long euler_form(const MarkedQuiverSetting& s, const std::vector<long long>& a,
                     const std::vector<long long>& b) {
    if ((int)a.size() != s.k() || (int)b.size() != s.k())
        throw validation_error("euler_form: vector length mismatch");
    auto e = euler_matrix(s.quiver);
    long long out = 0;
    for (int i = 0; i < s.k(); ++i)
        for (int j = 0; j < s.k(); ++j)
            out += a[i] * e[i][j] * b[j];
    return out;
}

long long euler_form(const MarkedQuiverSetting& s, const DimVec& a, const DimVec& b) {
    return euler_form(s, std::vector<long long>(a.begin(), a.end()),
                      std::vector<long long>(b.begin(), b.end()));
}

long long chi_alpha_eps(const MarkedQuiverSetting& s, int v) {
    std::vector<long long> eps(s.k(), 0);
    eps[v] = 1;
    return euler_form(s, std::vector<long long>(s.alpha.begin(), s.alpha.end()), eps);
}

long long chi_eps_alpha(const MarkedQuiverSetting& s, int v) {
    std::vector<long long> eps(s.k(), 0);
    eps[v] = 1;
    return euler_form(s, eps, std::vector<long long>(s.alpha.begin(), s.alpha.end()));
}

bool is_connected(const MarkedQuiverSetting& s) {
    const auto& q = s.quiver;
    if (q.k == 1) return true;
    std::vector<bool> seen(q.k, false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int w = 0; w < q.k; ++w) {
            if (w == v || seen[w]) continue;
            if (q.arrows[v][w] > 0 || q.arrows[w][v] > 0) {
                seen[w] = true;
                todo.push(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_strongly_connected(const MarkedQuiverSetting& s) {
    const auto& q = s.quiver;
    if (q.k == 1) return true;
    auto reach = [&](bool forward) {
        std::vector<bool> seen(q.k, false);
        std::queue<int> todo;
        todo.push(0);
        seen[0] = true;
        while (!todo.empty()) {
            int v = todo.front();
            todo.pop();
            for (int w = 0; w < q.k; ++w) {
                if (w == v || seen[w]) continue;
                if ((forward ? q.arrows[v][w] : q.arrows[w][v]) > 0) {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    };
    return reach(true) && reach(false);
}

bool is_oriented_cycle(const MarkedQuiver& q) {
    if (q.k < 2) return false;
    for (int v = 0; v < q.k; ++v) {
        if (q.loops(v) > 0) return false;
        if (q.out_arrows(v) != 1 || q.in_arrows(v) != 1) return false;
    }
    // single cycle covering all vertices
    int v = 0, steps = 0;
    do {
        int next = -1;
        for (int w = 0; w < q.k; ++w)
            if (w != v && q.arrows[v][w] == 1) next = w;
        v = next;
        ++steps;
    } while (v != 0 && steps <= q.k);
    return v == 0 && steps == q.k;
}

bool is_simple_dimvec(const MarkedQuiverSetting& s) {
    if (!is_connected(s))
        throw validation_error("simplicity undefined: support is disconnected");
    if (s.k() == 1)
        return s.alpha[0] == 1 || s.quiver.loops(0) >= 1;
    if (is_oriented_cycle(s.quiver))
        return std::all_of(s.alpha.begin(), s.alpha.end(), [](int a) { return a == 1; });
    for (int v = 0; v < s.k(); ++v)
        if (chi_alpha_eps(s, v) > 0 || chi_eps_alpha(s, v) > 0) return false;
    return true;
}

long long central_dimension(const MarkedQuiverSetting& s) {
    return 1 - euler_form(s, s.alpha, s.alpha) - s.quiver.total_marked();
}

long long bergman_small_total(const DimVec& alpha, const MoritaSetting& beta) {
    if (alpha.size() != beta.size())
        throw validation_error("bergman_small_total: length mismatch");
    long long n = 0;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (beta[i] <= 0) throw validation_error("Morita setting entries must be positive");
        n += (long long)alpha[i] * beta[i];
    }
    return n;
}

nlohmann::json setting_to_json(const MarkedQuiverSetting& s) {
    nlohmann::json j;
    j["k"] = s.k();
    j["dims"] = s.alpha;
    auto arrows = nlohmann::json::array();
    for (int i = 0; i < s.k(); ++i)
        for (int jj = 0; jj < s.k(); ++jj)
            if (i != jj && s.quiver.arrows[i][jj] > 0)
                arrows.push_back({i + 1, jj + 1, s.quiver.arrows[i][jj]});
    j["arrows"] = arrows;
    auto loops = nlohmann::json::array();
    for (int v = 0; v < s.k(); ++v)
        if (s.quiver.loops(v) > 0)
            loops.push_back({v + 1, s.quiver.plain_loops[v], s.quiver.marked_loops[v]});
    j["loops"] = loops;
    return j;
}

MarkedQuiverSetting setting_from_json(const nlohmann::json& j) {
    if (!j.contains("k") || !j.contains("dims"))
        throw validation_error("setting document needs 'k' and 'dims'");
    int k = j.at("k").get<int>();
    DimVec dims = j.at("dims").get<DimVec>();
    std::vector<std::array<int, 3>> arrows, loops;
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows")) {
            if (a.size() != 3) throw validation_error("arrow entries are [from,to,count]");
            arrows.push_back({a[0].get<int>() - 1, a[1].get<int>() - 1, a[2].get<int>()});
        }
    if (j.contains("loops"))
        for (const auto& l : j.at("loops")) {
            if (l.size() != 3) throw validation_error("loop entries are [vertex,plain,marked]");
            loops.push_back({l[0].get<int>() - 1, l[1].get<int>(), l[2].get<int>()});
        }
    return make_setting(k, dims, arrows, loops);
}

} // namespace mq
