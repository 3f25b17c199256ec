#include "mq/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mq/canonical.hpp"

namespace mq {

std::string smooth_list_match(const MarkedQuiverSetting& zero) {
    if (zero.k() != 1) return "";
    int a = zero.alpha[0];
    int p = zero.quiver.plain_loops[0];
    int m = zero.quiver.marked_loops[0];
    if (a == 1 && p == 0 && m == 0) return "bare vertex";
    if (p == 1 && m == 0) return "one plain loop";
    if (p == 0 && m == 1) return "one marked loop";
    if (a == 2 && p == 2 && m == 0) return "two plain loops";
    if (a == 2 && p == 1 && m == 1) return "plain and marked loop";
    if (a == 2 && p == 0 && m == 2) return "two marked loops";
    return "";
}

SmoothResult smooth_local_type(const MarkedQuiverSetting& s) {
    auto [zero, trace] = reduce_to_zero(s, Deterministic{});
    std::string matched = smooth_list_match(zero);
    return SmoothResult{!matched.empty(), std::move(matched), std::move(zero)};
}

namespace {

struct VertexProfile {
    int a, plain, marked;

    auto tie() const { return std::tuple(a, plain, marked); }
    bool operator<(const VertexProfile& o) const { return tie() < o.tie(); }
};

// Lower bound on the central dimension excess contributed by one vertex of a
// zero setting on >= 2 vertices (the counting theorem's per-vertex terms).
long long contribution(const VertexProfile& v) {
    long long a = v.a;
    int l = v.plain + v.marked;
    if (l == 0) return a;
    if (l == 1) return v.marked ? 2 * a - 1 : 2 * a;
    return (l - 1) * a * a + a - v.marked;
}

using Profile = std::vector<VertexProfile>;

// Non-decreasing vertex profiles with total contribution <= budget; loops
// only at dimension >= 2 (a dim-1 vertex with a loop admits a loop removal,
// so it cannot occur in a zero setting).
void gen_profiles(int k, long long budget, const VertexProfile& floor_opt, Profile& cur,
                  std::vector<Profile>& out) {
    if ((int)cur.size() == k) {
        out.push_back(cur);
        return;
    }
    long long rest = k - (int)cur.size() - 1; // each later vertex contributes >= 1
    for (int a = 1; a <= budget - rest; ++a) {
        auto try_opt = [&](VertexProfile v) {
            if (v < floor_opt) return;
            long long c = contribution(v);
            if (c + rest > budget) return;
            cur.push_back(v);
            gen_profiles(k, budget - c, v, cur, out);
            cur.pop_back();
        };
        try_opt({a, 0, 0});
        if (a >= 2) {
            try_opt({a, 0, 1});
            try_opt({a, 1, 0});
            for (int l = 2;; ++l) {
                // minimal contribution for l loops is attained all-marked
                if ((long long)(l - 1) * a * a + a - l + rest > budget) break;
                for (int m = 0; m <= l; ++m)
                    try_opt({a, l - m, m});
            }
        }
    }
}

struct CandidateSink {
    long long d;
    std::vector<std::pair<CanonicalForm, MarkedQuiverSetting>> found;

    void offer(const MarkedQuiverSetting& s) {
        if (!is_connected(s)) return;
        if (!is_zero_setting(s)) return;
        if (!is_simple_dimvec(s)) return;
        if (central_dimension(s) != d) return;
        if (!smooth_list_match(s).empty()) return;
        found.emplace_back(canonical_form(s), s);
    }
};

// Fills the off-diagonal arrow matrix cell by cell (row major), spending the
// weighted budget exactly. A loop-free vertex of a zero setting must have
// weighted in- and out-degree strictly above its dimension (otherwise a
// vertex removal is legal), which prunes rows early; columns are checked at
// the end, and the full zero-setting test runs on every surviving matrix.
struct MatrixSearch {
    const Profile& prof;
    int k;
    long long d;
    std::vector<std::vector<int>> arrows;
    CandidateSink& sink;

    MatrixSearch(const Profile& p, long long d_, CandidateSink& s)
        : prof(p), k((int)p.size()), d(d_), arrows(p.size(), std::vector<int>(p.size(), 0)),
          sink(s) {}

    bool loop_free(int v) const { return prof[v].plain + prof[v].marked == 0; }

    long long rows_min_after(int row) const {
        long long need = 0;
        for (int r = row + 1; r < k; ++r)
            if (loop_free(r)) need += (long long)prof[r].a * (prof[r].a + 1);
        return need;
    }

    void finish(long long) {
        for (int j = 0; j < k; ++j) {
            if (!loop_free(j)) continue;
            long long in_w = 0;
            for (int i = 0; i < k; ++i)
                if (i != j) in_w += (long long)arrows[i][j] * prof[i].a;
            if (in_w <= prof[j].a) return;
        }
        MarkedQuiver q;
        q.k = k;
        q.arrows = arrows;
        q.plain_loops.resize(k);
        q.marked_loops.resize(k);
        DimVec alpha(k);
        for (int v = 0; v < k; ++v) {
            alpha[v] = prof[v].a;
            q.plain_loops[v] = prof[v].plain;
            q.marked_loops[v] = prof[v].marked;
        }
        sink.offer(make_setting(std::move(q), std::move(alpha)));
    }

    void fill(int i, int j, long long budget) {
        if (j == i) {
            fill(i, j + 1, budget);
            return;
        }
        if (j == k) {
            if (loop_free(i)) {
                long long out_w = 0;
                for (int c = 0; c < k; ++c)
                    if (c != i) out_w += (long long)arrows[i][c] * prof[c].a;
                if (out_w <= prof[i].a) return;
            }
            if (i + 1 == k) {
                if (budget == 0) finish(budget);
                return;
            }
            if (rows_min_after(i) > budget) return;
            fill(i + 1, 0, budget);
            return;
        }
        long long w = (long long)prof[i].a * prof[j].a;
        for (long long c = 0; c * w <= budget; ++c) {
            arrows[i][j] = (int)c;
            fill(i, j + 1, budget - c * w);
        }
        arrows[i][j] = 0;
    }

    void run() {
        long long s = d - 1;
        long long min_rows = 0;
        for (int v = 0; v < k; ++v) {
            int l = prof[v].plain + prof[v].marked;
            s += (long long)prof[v].a * prof[v].a * (1 - l) + prof[v].marked;
            if (loop_free(v)) min_rows += (long long)prof[v].a * (prof[v].a + 1);
        }
        if (s < 0 || min_rows > s) return;
        fill(0, 0, s);
    }
};

// Single vertex, dimension >= 2 with >= 2 loops: always a zero setting, and
// singular exactly when it is outside the smooth list.
void sweep_single_vertex(long long d, CandidateSink& sink) {
    for (int a = 2; (long long)a * a <= d - 1 + 2L * (d + 2); ++a)
        for (int l = 2; (long long)(l - 1) * a * a + 0 <= d - 1 + l; ++l)
            for (int m = 0; m <= l; ++m)
                if (1 + (long long)a * a * (l - 1) - m == d)
                    sink.offer(make_setting(1, {a}, {}, {{0, l - m, m}}));
}

std::vector<MarkedQuiverSetting> run_enumeration(long long d, int k_max, bool parallel) {
    if (d < 2) throw validation_error("enumeration needs central dimension >= 2");
    int cap = (int)std::min<long long>(d - 1, k_max < 0 ? d - 1 : k_max);

    std::vector<Profile> profiles;
    for (int k = 2; k <= cap; ++k) {
        Profile cur;
        gen_profiles(k, d - 1, VertexProfile{0, 0, 0}, cur, profiles);
    }

    std::vector<std::pair<CanonicalForm, MarkedQuiverSetting>> all;
    if (parallel) {
#pragma omp parallel
        {
            CandidateSink local{d, {}};
#pragma omp for schedule(dynamic)
            for (int p = 0; p < (int)profiles.size(); ++p)
                MatrixSearch(profiles[p], d, local).run();
#pragma omp critical
            all.insert(all.end(), std::make_move_iterator(local.found.begin()),
                       std::make_move_iterator(local.found.end()));
        }
    } else {
        CandidateSink sink{d, {}};
        for (const auto& prof : profiles) MatrixSearch(prof, d, sink).run();
        all = std::move(sink.found);
    }

    if (k_max < 0 || k_max >= 1) {
        CandidateSink sink{d, {}};
        sweep_single_vertex(d, sink);
        all.insert(all.end(), std::make_move_iterator(sink.found.begin()),
                   std::make_move_iterator(sink.found.end()));
    }

    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<MarkedQuiverSetting> out;
    for (auto& [form, s] : all)
        if (out.empty() || !(form == canonical_form(out.back()))) out.push_back(std::move(s));
    return out;
}

} // namespace

std::vector<MarkedQuiverSetting> enumerate_zero_settings(long long d, int k_max) {
    return run_enumeration(d, k_max, true);
}

std::vector<MarkedQuiverSetting> enumerate_zero_settings_serial(long long d, int k_max) {
    return run_enumeration(d, k_max, false);
}

long long isolated_dimension(const IsolatedType& t) {
    return std::accumulate(t.multiplicities.begin(), t.multiplicities.end(), 0LL) - t.l + 1;
}

std::optional<IsolatedType> detect_isolated(const MarkedQuiverSetting& s) {
    auto [z, trace] = reduce_to_zero(s, Deterministic{});
    const auto& q = z.quiver;
    if (q.k < 2) return std::nullopt;
    for (int v = 0; v < q.k; ++v) {
        if (z.alpha[v] != 1 || q.loops(v) > 0) return std::nullopt;
        int out_nbrs = 0, in_nbrs = 0;
        for (int w = 0; w < q.k; ++w) {
            if (w == v) continue;
            if (q.arrows[v][w] > 0) ++out_nbrs;
            if (q.arrows[w][v] > 0) ++in_nbrs;
        }
        if (out_nbrs != 1 || in_nbrs != 1) return std::nullopt;
    }
    // walk the unique out-neighbor chain; it must close into one full cycle
    std::vector<int> mult;
    int v = 0, steps = 0;
    do {
        int next = -1;
        for (int w = 0; w < q.k; ++w)
            if (w != v && q.arrows[v][w] > 0) next = w;
        mult.push_back(q.arrows[v][next]);
        v = next;
        ++steps;
    } while (v != 0 && steps <= q.k);
    if (v != 0 || steps != q.k) return std::nullopt;
    std::sort(mult.rbegin(), mult.rend());
    return IsolatedType{q.k, std::move(mult)};
}

const std::vector<SingularityRecord>& singularity_database() {
    static const std::vector<SingularityRecord> db = [] {
        std::vector<SingularityRecord> v;
        v.push_back({"conifold", 3,
                     make_setting(2, {1, 1}, {{0, 1, 2}, {1, 0, 2}}),
                     "(xy-uv)"});
        v.push_back({"T(3,2)", 4,
                     make_setting(2, {1, 1}, {{0, 1, 3}, {1, 0, 2}}),
                     "(ae-bd, af-cd, bf-ce)"});
        v.push_back({"mixed 3-cycle", 4,
                     make_setting(3, {1, 1, 1},
                                  {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {1, 0, 1}, {2, 1, 1}, {0, 2, 1}}),
                     "(x4x5-x1x2x3)"});
        v.push_back({"T(2,2,2)", 4,
                     make_setting(3, {1, 1, 1}, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}}),
                     "2x2 minors of a generic 2x4 matrix"});
        return v;
    }();
    return db;
}

std::optional<SingularityRecord> known_singularity(const MarkedQuiverSetting& s) {
    auto [z, trace] = reduce_to_zero(s, Deterministic{});
    if (z.k() > 3) return std::nullopt;
    auto form = canonical_form(z);
    for (const auto& rec : singularity_database())
        if (rec.setting.k() == z.k() && form == canonical_form(rec.setting)) return rec;
    return std::nullopt;
}

} // namespace mq
