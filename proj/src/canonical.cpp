#include "mq/canonical.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace mq {

MarkedQuiverSetting permute_setting(const MarkedQuiverSetting& s, const std::vector<int>& perm) {
    const int k = s.k();
    if ((int)perm.size() != k) throw validation_error("permutation length mismatch");
    MarkedQuiver q;
    q.k = k;
    q.arrows.assign(k, std::vector<int>(k, 0));
    q.plain_loops.resize(k);
    q.marked_loops.resize(k);
    DimVec alpha(k);
    for (int i = 0; i < k; ++i) {
        alpha[i] = s.alpha[perm[i]];
        q.plain_loops[i] = s.quiver.plain_loops[perm[i]];
        q.marked_loops[i] = s.quiver.marked_loops[perm[i]];
        for (int j = 0; j < k; ++j)
            if (i != j) q.arrows[i][j] = s.quiver.arrows[perm[i]][perm[j]];
    }
    return make_setting(std::move(q), std::move(alpha));
}

namespace {

using Invariant = std::array<int, 5>;

Invariant vertex_invariant(const MarkedQuiverSetting& s, int v) {
    return {s.alpha[v], s.quiver.in_arrows(v), s.quiver.out_arrows(v),
            s.quiver.plain_loops[v], s.quiver.marked_loops[v]};
}

std::vector<long long> encode(const MarkedQuiverSetting& s, const std::vector<int>& perm) {
    const int k = s.k();
    std::vector<long long> enc;
    enc.reserve(size_t(k) * (k + 3));
    for (int i = 0; i < k; ++i) enc.push_back(s.alpha[perm[i]]);
    for (int i = 0; i < k; ++i) enc.push_back(s.quiver.plain_loops[perm[i]]);
    for (int i = 0; i < k; ++i) enc.push_back(s.quiver.marked_loops[perm[i]]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            enc.push_back(i == j ? 0 : s.quiver.arrows[perm[i]][perm[j]]);
    return enc;
}

// Visits every arrangement that keeps the invariant-class blocks in order.
void min_over_blocks(const MarkedQuiverSetting& s, std::vector<std::vector<int>>& blocks,
                     size_t depth, std::vector<int>& perm, std::vector<long long>& best) {
    if (depth == blocks.size()) {
        auto enc = encode(s, perm);
        if (best.empty() || enc < best) best = std::move(enc);
        return;
    }
    auto& block = blocks[depth];
    std::sort(block.begin(), block.end());
    do {
        size_t base = perm.size();
        perm.insert(perm.end(), block.begin(), block.end());
        min_over_blocks(s, blocks, depth + 1, perm, best);
        perm.resize(base);
    } while (std::next_permutation(block.begin(), block.end()));
}

} // namespace

CanonicalForm canonical_form(const MarkedQuiverSetting& s, int k_bound) {
    const int k = s.k();
    if (k > k_bound)
        throw resource_error("canonical_form: vertex count exceeds bound");

    std::vector<std::pair<Invariant, int>> tagged;
    for (int v = 0; v < k; ++v) tagged.emplace_back(vertex_invariant(s, v), v);
    std::sort(tagged.begin(), tagged.end());

    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < k; ++v) {
        if (v == 0 || tagged[v].first != tagged[v - 1].first) blocks.emplace_back();
        blocks.back().push_back(tagged[v].second);
    }

    std::vector<int> perm;
    std::vector<long long> best;
    min_over_blocks(s, blocks, 0, perm, best);

    CanonicalForm form;
    form.key.push_back(k);
    for (const auto& [inv, v] : tagged)
        for (int x : inv) form.key.push_back(x);
    form.key.insert(form.key.end(), best.begin(), best.end());
    return form;
}

bool settings_isomorphic(const MarkedQuiverSetting& a, const MarkedQuiverSetting& b, int k_bound) {
    if (a.k() != b.k()) return false;
    return canonical_form(a, k_bound) == canonical_form(b, k_bound);
}

} // namespace mq
