#include "mq/invariants.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mq {

std::string cycle_string(const LabeledQuiver& q, const CyclicWord& c) {
    std::string out;
    for (int a : c.arrows) out += q.arrows[a].label;
    return out;
}

LabeledQuiver label_setting(const MarkedQuiverSetting& s) {
    LabeledQuiver q;
    q.k = s.k();
    int total = s.quiver.total_arrows();
    const char* loop_letters = "xyzuvw";
    int counter = 0;
    auto next_label = [&](bool loop) {
        std::string label;
        if (s.k() == 1 && total <= 6)
            label = std::string(1, loop_letters[counter]);
        else if (total <= 26)
            label = std::string(1, (char)('a' + counter));
        else
            label = "a" + std::to_string(counter + 1);
        ++counter;
        return label;
    };
    for (int i = 0; i < s.k(); ++i)
        for (int j = 0; j < s.k(); ++j) {
            int count = (i == j) ? s.quiver.loops(i) : s.quiver.arrows[i][j];
            for (int c = 0; c < count; ++c) q.add_arrow(i, j, next_label(i == j));
        }
    return q;
}

namespace {

std::vector<int> canonical_rotation(const LabeledQuiver& q, const std::vector<int>& arrows) {
    std::vector<int> best = arrows;
    std::string best_str;
    for (int a : arrows) best_str += q.arrows[a].label;
    std::vector<int> cur = arrows;
    for (size_t r = 1; r < arrows.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        std::string s;
        for (int a : cur) s += q.arrows[a].label;
        if (s < best_str) {
            best_str = s;
            best = cur;
        }
    }
    return best;
}

bool is_primitive(const std::vector<int>& arrows) {
    const size_t n = arrows.size();
    for (size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (size_t i = p; i < n && periodic; ++i)
            if (arrows[i] != arrows[i % p]) periodic = false;
        if (periodic) return false;
    }
    return true;
}

void closed_walks(const LabeledQuiver& q, int start, int at, int max_len, std::vector<int>& cur,
                  std::set<std::vector<int>>& found) {
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].from != at) continue;
        cur.push_back((int)a);
        if (q.arrows[a].to == start) found.insert(canonical_rotation(q, cur));
        if ((int)cur.size() < max_len)
            closed_walks(q, start, q.arrows[a].to, max_len, cur, found);
        cur.pop_back();
    }
}

} // namespace

std::vector<CyclicWord> enumerate_cycles(const LabeledQuiver& q, int max_len, bool include_powers) {
    if (max_len < 1) throw validation_error("cycle length bound must be positive");
    std::set<std::vector<int>> found;
    for (int v = 0; v < q.k; ++v) {
        std::vector<int> cur;
        closed_walks(q, v, v, max_len, cur, found);
    }
    std::vector<CyclicWord> out;
    for (const auto& arrows : found) {
        bool prim = is_primitive(arrows);
        if (!prim && !include_powers) continue;
        out.push_back(CyclicWord{arrows, prim});
    }
    std::sort(out.begin(), out.end(), [&](const CyclicWord& a, const CyclicWord& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        return cycle_string(q, a) < cycle_string(q, b);
    });
    return out;
}

int default_cycle_bound(const DimVec& alpha) {
    int total = 0;
    for (int a : alpha) total += a;
    return total * total + 1;
}

Rational evaluate_trace(const Representation& rep, const CyclicWord& c) {
    if (c.arrows.empty()) throw validation_error("empty cyclic word");
    int base = rep.quiver.arrows[c.arrows.front()].from;
    return evaluate_path(rep, Path{base, base, c.arrows}).trace();
}

bool verify_relation(const LabeledQuiver& q, const DimVec& alpha,
                     const std::map<std::string, CyclicWord>& named, const CyclePoly& poly,
                     int trials, std::uint64_t seed, std::string* first_failure) {
    if (trials < 1) throw validation_error("need at least one trial");
    for (const auto& term : poly.terms)
        for (const auto& name : term.cycles)
            if (!named.count(name))
                throw validation_error("unknown cycle name '" + name + "'");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    for (int t = 0; t < trials; ++t) {
        std::vector<Matrix> mats;
        for (const auto& arr : q.arrows) {
            Matrix m(alpha[arr.to], alpha[arr.from]);
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    m(i, j) = Rational(num(rng), den(rng));
            mats.push_back(std::move(m));
        }
        Representation rep = make_representation(q, alpha, std::move(mats));
        std::map<std::string, Rational> values;
        for (const auto& [name, cycle] : named) values[name] = evaluate_trace(rep, cycle);
        Rational sum = 0;
        for (const auto& term : poly.terms) {
            Rational prod = term.coef;
            for (const auto& name : term.cycles) prod *= values[name];
            sum += prod;
        }
        if (sum != 0) {
            if (first_failure) {
                std::string desc = "sample " + std::to_string(t) + ":";
                for (size_t a = 0; a < rep.quiver.arrows.size(); ++a) {
                    desc += " " + rep.quiver.arrows[a].label + "=";
                    desc += rep.matrices[a].rows() == 1 && rep.matrices[a].cols() == 1
                                ? rational_to_string(rep.matrices[a](0, 0))
                                : std::string("[matrix]");
                }
                desc += " -> " + rational_to_string(sum);
                *first_failure = desc;
            }
            return false;
        }
    }
    return true;
}

namespace {

void paths_of_length(const LabeledQuiver& q, int from, int len, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.push_back(cur);
        return;
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].from != from) continue;
        cur.push_back((int)a);
        paths_of_length(q, q.arrows[a].to, len - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

BlockGenerators block_order_generators(const LabeledQuiver& q, const MoritaSetting& beta,
                                       int max_len) {
    if ((int)beta.size() != q.k) throw validation_error("Morita setting length mismatch");
    for (int b : beta)
        if (b < 1) throw validation_error("Morita setting entries must be positive");
    if (max_len < 1) throw validation_error("path length bound must be positive");

    BlockGenerators gen;
    gen.k = q.k;
    gen.beta = beta;
    gen.entries.assign(q.k, std::vector<std::vector<Path>>(q.k));
    for (int v = 0; v < q.k; ++v) gen.entries[v][v].push_back(empty_path(v));

    // arrow sequences of listed nonempty paths, per entry, for factor lookup
    std::vector<std::vector<std::set<std::vector<int>>>> listed(
        q.k, std::vector<std::set<std::vector<int>>>(q.k));

    for (int len = 1; len <= max_len; ++len)
        for (int j = 0; j < q.k; ++j) {
            std::vector<std::vector<int>> walks;
            std::vector<int> cur;
            paths_of_length(q, j, len, cur, walks);
            // deterministic candidate order within the length
            std::sort(walks.begin(), walks.end(), [&](const auto& a, const auto& b) {
                std::string sa, sb;
                for (auto it = a.rbegin(); it != a.rend(); ++it) sa += q.arrows[*it].label;
                for (auto it = b.rbegin(); it != b.rend(); ++it) sb += q.arrows[*it].label;
                return sa < sb;
            });
            for (const auto& arrows : walks) {
                int i = q.arrows[arrows.back()].to;
                bool factors = false;
                for (int t = 1; t < len && !factors; ++t) {
                    std::vector<int> head(arrows.begin(), arrows.begin() + t);
                    std::vector<int> tail(arrows.begin() + t, arrows.end());
                    // head a listed cycle at the source, tail a listed path
                    if (q.arrows[head.back()].to == j && listed[j][j].count(head) &&
                        listed[i][j].count(tail))
                        factors = true;
                    // tail a listed cycle at the target, head a listed path
                    if (!factors && q.arrows[head.back()].to == i && listed[i][i].count(tail) &&
                        listed[i][j].count(head))
                        factors = true;
                }
                if (factors) continue;
                gen.entries[i][j].push_back(Path{j, i, arrows});
                listed[i][j].insert(arrows);
            }
        }
    return gen;
}

} // namespace mq
