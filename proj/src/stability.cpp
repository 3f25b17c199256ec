#include "mq/stability.hpp"

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

namespace mq {

bool check_theta(const StabilityVector& theta, const DimVec& alpha) {
    if (theta.size() != alpha.size())
        throw validation_error("stability vector length mismatch");
    long long dot = 0;
    for (size_t i = 0; i < theta.size(); ++i) dot += theta[i] * alpha[i];
    return dot == 0;
}

const char* stability_name(Stability s) {
    switch (s) {
    case Stability::Stable: return "stable";
    case Stability::SemistableNotStable: return "semistable-not-stable";
    case Stability::Unstable: return "unstable";
    }
    return "?";
}

Stability thin_stability_oracle(const Representation& rep, const StabilityVector& theta) {
    if (!is_thin(rep))
        throw validation_error("stability oracle supports thin representations only");
    if (!check_theta(theta, rep.alpha))
        throw validation_error("stability vector must pair to zero with the dimensions");
    const int k = rep.quiver.k;
    std::vector<int> support;
    for (int v = 0; v < k; ++v)
        if (rep.alpha[v] == 1) support.push_back(v);
    const int n = (int)support.size();
    if (n > 25) throw resource_error("thin oracle: too many support vertices");

    bool any_nonneg_zero = false, any_negative = false, any_subrep = false;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        auto in = [&](int v) {
            for (int i = 0; i < n; ++i)
                if (support[i] == v) return (mask >> i & 1u) != 0;
            return false;
        };
        bool closed = true;
        for (size_t a = 0; a < rep.quiver.arrows.size() && closed; ++a) {
            const auto& arr = rep.quiver.arrows[a];
            Matrix zero(rep.matrices[a].rows(), rep.matrices[a].cols());
            if (rep.matrices[a] == zero) continue;
            if (in(arr.from) && !in(arr.to)) closed = false;
        }
        if (!closed) continue;
        any_subrep = true;
        long long dot = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) dot += theta[support[i]];
        if (dot < 0) any_negative = true;
        else if (dot == 0) any_nonneg_zero = true;
    }
    if (any_negative) return Stability::Unstable;
    if (any_subrep && any_nonneg_zero) return Stability::SemistableNotStable;
    return Stability::Stable;
}

SemiInvariantScheme make_scheme(LabeledQuiver quiver, DimVec alpha, StabilityVector theta,
                                long long l, std::vector<long long> l_mid,
                                std::vector<std::vector<PathLinComb>> blocks) {
    if (l < 1) throw validation_error("scheme weight l must be positive");
    if ((int)alpha.size() != quiver.k || theta.size() != alpha.size())
        throw validation_error("scheme vector length mismatch");
    if (!check_theta(theta, alpha))
        throw validation_error("scheme requires theta . alpha = 0");

    SemiInvariantScheme s;
    s.quiver = std::move(quiver);
    s.alpha = std::move(alpha);
    s.theta = std::move(theta);
    s.l = l;
    size_t zero_count = 0;
    for (long long t : s.theta)
        if (t == 0) ++zero_count;
    if (l_mid.empty()) l_mid.assign(zero_count, 0);
    if (l_mid.size() != zero_count)
        throw validation_error("one middle multiplicity per theta-zero vertex required");
    for (long long m : l_mid)
        if (m < 0) throw validation_error("negative middle multiplicity");
    s.l_mid = std::move(l_mid);

    size_t zi = 0;
    for (int v = 0; v < s.quiver.k; ++v) {
        if (s.theta[v] > 0)
            for (long long c = 0; c < l * s.theta[v]; ++c) s.row_vertices.push_back(v);
        else if (s.theta[v] == 0)
            ++zi;
    }
    zi = 0;
    for (int v = 0; v < s.quiver.k; ++v)
        if (s.theta[v] == 0) {
            for (long long c = 0; c < s.l_mid[zi]; ++c) {
                s.row_vertices.push_back(v);
                s.col_vertices.push_back(v);
            }
            ++zi;
        }
    for (int v = 0; v < s.quiver.k; ++v)
        if (s.theta[v] < 0)
            for (long long c = 0; c < -l * s.theta[v]; ++c) s.col_vertices.push_back(v);

    if (blocks.size() != s.row_vertices.size())
        throw validation_error("block grid row count mismatch");
    for (size_t r = 0; r < blocks.size(); ++r) {
        if (blocks[r].size() != s.col_vertices.size())
            throw validation_error("block grid column count mismatch");
        for (size_t c = 0; c < blocks[r].size(); ++c) {
            const auto& b = blocks[r][c];
            if (b.source != s.col_vertices[c] || b.target != s.row_vertices[r])
                throw validation_error("block endpoints disagree with the grid layout");
            validate_plc(s.quiver, b);
        }
    }
    s.blocks = std::move(blocks);
    return s;
}

namespace {

std::vector<int> block_offsets(const std::vector<int>& vertices, const DimVec& alpha) {
    std::vector<int> off(vertices.size() + 1, 0);
    for (size_t i = 0; i < vertices.size(); ++i) off[i + 1] = off[i] + alpha[vertices[i]];
    return off;
}

} // namespace

Matrix evaluate_L(const SemiInvariantScheme& scheme, const Representation& rep) {
    if (rep.quiver.k != scheme.quiver.k || rep.alpha != scheme.alpha)
        throw validation_error("scheme and representation disagree on the setting");
    auto roff = block_offsets(scheme.row_vertices, scheme.alpha);
    auto coff = block_offsets(scheme.col_vertices, scheme.alpha);
    if (roff.back() != coff.back())
        throw validation_error("scheme does not assemble to a square matrix");
    Matrix out(roff.back(), coff.back());
    for (size_t r = 0; r < scheme.row_vertices.size(); ++r)
        for (size_t c = 0; c < scheme.col_vertices.size(); ++c) {
            Matrix b = evaluate_plc(rep, scheme.blocks[r][c]);
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j)
                    out(roff[r] + i, coff[c] + j) = b(i, j);
        }
    return out;
}

Rational evaluate_D(const SemiInvariantScheme& scheme, const Representation& rep) {
    return evaluate_L(scheme, rep).determinant();
}

Rational theta_character(const SemiInvariantScheme& scheme, const std::vector<Matrix>& g) {
    if ((int)g.size() != scheme.quiver.k)
        throw validation_error("one block per vertex required");
    Rational chi = 1;
    for (int v = 0; v < scheme.quiver.k; ++v) {
        Rational det = g[v].determinant();
        if (det == 0) throw validation_error("singular group block");
        chi *= rational_pow(det, scheme.theta[v]);
    }
    return rational_pow(chi, scheme.l);
}

bool semi_invariance_check(const SemiInvariantScheme& scheme, const Representation& rep,
                           const std::vector<Matrix>& g) {
    Rational lhs = evaluate_D(scheme, transform(rep, g));
    Rational rhs = theta_character(scheme, g) * evaluate_D(scheme, rep);
    return lhs == rhs;
}

bool semi_invariance_trials(const SemiInvariantScheme& scheme, const Representation& rep,
                            int trials, std::uint64_t seed) {
    if (trials < 1) throw validation_error("need at least one trial");
    std::vector<char> ok(trials, 0);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + (std::uint64_t)t);
        std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
        std::vector<Matrix> g;
        for (int v = 0; v < scheme.quiver.k; ++v) {
            Matrix m(scheme.alpha[v], scheme.alpha[v]);
            do {
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j)
                        m(i, j) = Rational(num(rng), den(rng));
            } while (m.determinant() == 0);
            g.push_back(std::move(m));
        }
        ok[t] = semi_invariance_check(scheme, rep, g) ? 1 : 0;
    }
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

ExtendedQuiver build_extended_quiver(const SemiInvariantScheme& scheme) {
    ExtendedQuiver ext;
    ext.quiver = scheme.quiver;
    ext.base_arrows = (int)scheme.quiver.arrows.size();
    ext.n_rows = (int)scheme.col_vertices.size();
    ext.n_cols = (int)scheme.row_vertices.size();
    int counter = 1;
    for (int c = 0; c < ext.n_cols; ++c)
        for (int r = 0; r < ext.n_rows; ++r) {
            ext.quiver.add_arrow(scheme.row_vertices[c], scheme.col_vertices[r],
                                 "n" + std::to_string(counter++));
            ext.cells.emplace_back(r, c);
        }
    return ext;
}

std::vector<Matrix> extension_blocks(const SemiInvariantScheme& scheme, const Representation& rep) {
    Matrix L = evaluate_L(scheme, rep);
    if (L.determinant() == 0)
        throw validation_error("representation lies outside the chart (det L = 0)");
    Matrix N = L.inverse();
    auto roff = block_offsets(scheme.col_vertices, scheme.alpha); // N row blocks
    auto coff = block_offsets(scheme.row_vertices, scheme.alpha); // N column blocks
    std::vector<Matrix> out;
    for (size_t c = 0; c < scheme.row_vertices.size(); ++c)
        for (size_t r = 0; r < scheme.col_vertices.size(); ++r) {
            Matrix b(scheme.alpha[scheme.col_vertices[r]], scheme.alpha[scheme.row_vertices[c]]);
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j)
                    b(i, j) = N(roff[r] + i, coff[c] + j);
            out.push_back(std::move(b));
        }
    return out;
}

Representation extend_representation(const SemiInvariantScheme& scheme, const Representation& rep) {
    ExtendedQuiver ext = build_extended_quiver(scheme);
    std::vector<Matrix> mats = rep.matrices;
    std::vector<bool> marked = rep.marked_loops;
    for (auto& b : extension_blocks(scheme, rep)) {
        mats.push_back(std::move(b));
        marked.push_back(false);
    }
    return make_representation(ext.quiver, rep.alpha, std::move(mats), std::move(marked));
}

std::pair<std::vector<PathLinComb>, std::vector<PathLinComb>> localization_relations(
    const SemiInvariantScheme& scheme, const ExtendedQuiver& ext) {
    const auto& q = ext.quiver;
    // new-arrow combinations indexed by N grid cell
    std::vector<std::vector<PathLinComb>> ncell(
        ext.n_rows, std::vector<PathLinComb>(ext.n_cols, plc_zero(0, 0)));
    for (size_t a = 0; a < ext.cells.size(); ++a) {
        auto [r, c] = ext.cells[a];
        ncell[r][c] = plc_from_path(arrow_path(q, ext.base_arrows + (int)a));
    }
    auto lift = [&](const PathLinComb& b) { return b; }; // arrow ids are shared

    std::vector<PathLinComb> I1, I2;
    // N.L: (#L-cols) x (#L-cols); diagonal subtracts the column-vertex idempotent
    for (int r = 0; r < ext.n_rows; ++r)
        for (int c = 0; c < ext.n_rows; ++c) {
            PathLinComb e = plc_zero(scheme.col_vertices[c], scheme.col_vertices[r]);
            for (int s = 0; s < ext.n_cols; ++s)
                e = plc_add(e, plc_compose(q, ncell[r][s], lift(scheme.blocks[s][c])));
            if (r == c)
                e = plc_add(e, plc_from_path(empty_path(scheme.col_vertices[r]), -1));
            if (!e.is_zero()) I1.push_back(std::move(e));
        }
    // L.N: (#L-rows) x (#L-rows); diagonal subtracts the row-vertex idempotent
    for (int r = 0; r < ext.n_cols; ++r)
        for (int c = 0; c < ext.n_cols; ++c) {
            PathLinComb e = plc_zero(scheme.row_vertices[c], scheme.row_vertices[r]);
            for (int s = 0; s < ext.n_rows; ++s)
                e = plc_add(e, plc_compose(q, lift(scheme.blocks[r][s]), ncell[s][c]));
            if (r == c)
                e = plc_add(e, plc_from_path(empty_path(scheme.row_vertices[r]), -1));
            if (!e.is_zero()) I2.push_back(std::move(e));
        }
    return {std::move(I1), std::move(I2)};
}

QuiverPresentation localization_presentation(const QuiverPresentation& base,
                                             const SemiInvariantScheme& scheme) {
    if (base.quiver.k != scheme.quiver.k)
        throw validation_error("base presentation and scheme disagree on the quiver");
    ExtendedQuiver ext = build_extended_quiver(scheme);
    auto [I1, I2] = localization_relations(scheme, ext);
    QuiverPresentation out{ext.quiver, scheme.alpha, base.relations};
    out.relations.insert(out.relations.end(), std::make_move_iterator(I1.begin()),
                         std::make_move_iterator(I1.end()));
    out.relations.insert(out.relations.end(), std::make_move_iterator(I2.begin()),
                         std::make_move_iterator(I2.end()));
    return out;
}

nlohmann::json scheme_to_json(const SemiInvariantScheme& scheme) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& row : scheme.blocks) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& b : row) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& t : b.terms) {
                nlohmann::json path = nlohmann::json::array();
                for (int a : t.arrows) path.push_back(a + 1);
                terms.push_back({{"coef", rational_to_string(t.coef)}, {"path", path}});
            }
            jr.push_back(terms);
        }
        blocks.push_back(jr);
    }
    return {{"theta", scheme.theta}, {"l", scheme.l}, {"l_mid", scheme.l_mid}, {"blocks", blocks}};
}

SemiInvariantScheme scheme_from_json(const nlohmann::json& j, const LabeledQuiver& quiver,
                                     const DimVec& alpha) {
    if (!j.contains("theta") || !j.contains("l") || !j.contains("blocks"))
        throw validation_error("scheme document needs 'theta', 'l', 'blocks'");
    StabilityVector theta = j.at("theta").get<StabilityVector>();
    long long l = j.at("l").get<long long>();
    std::vector<long long> l_mid;
    if (j.contains("l_mid")) l_mid = j.at("l_mid").get<std::vector<long long>>();

    // grid endpoints are recomputed by make_scheme; parse terms with unknown
    // endpoints first, then infer them from the layout
    SemiInvariantScheme layout = make_scheme(quiver, alpha, theta, l, l_mid, [&] {
        // build an all-zero grid of the right shape to learn the layout
        SemiInvariantScheme probe;
        probe.quiver = quiver;
        probe.alpha = alpha;
        probe.theta = theta;
        probe.l = l;
        size_t zc = 0;
        for (long long t : theta)
            if (t == 0) ++zc;
        std::vector<long long> lm = l_mid.empty() ? std::vector<long long>(zc, 0) : l_mid;
        std::vector<int> rows, cols;
        for (int v = 0; v < quiver.k; ++v)
            if (theta[v] > 0)
                for (long long c = 0; c < l * theta[v]; ++c) rows.push_back(v);
        size_t zi = 0;
        for (int v = 0; v < quiver.k; ++v)
            if (theta[v] == 0) {
                for (long long c = 0; c < lm[zi]; ++c) {
                    rows.push_back(v);
                    cols.push_back(v);
                }
                ++zi;
            }
        for (int v = 0; v < quiver.k; ++v)
            if (theta[v] < 0)
                for (long long c = 0; c < -l * theta[v]; ++c) cols.push_back(v);

        const auto& jb = j.at("blocks");
        if (jb.size() != rows.size()) throw validation_error("block grid row count mismatch");
        std::vector<std::vector<PathLinComb>> blocks;
        for (size_t r = 0; r < jb.size(); ++r) {
            if (jb[r].size() != cols.size())
                throw validation_error("block grid column count mismatch");
            std::vector<PathLinComb> row;
            for (size_t c = 0; c < cols.size(); ++c) {
                PathLinComb b = plc_zero(cols[c], rows[r]);
                for (const auto& jt : jb[r][c]) {
                    Rational coef = rational_from_string(jt.at("coef").get<std::string>());
                    std::vector<int> arrows;
                    for (const auto& a : jt.at("path")) arrows.push_back(a.get<int>() - 1);
                    b = plc_add(b, plc_from_path(Path{cols[c], rows[r], arrows}, coef));
                }
                row.push_back(std::move(b));
            }
            blocks.push_back(std::move(row));
        }
        return blocks;
    }());
    return layout;
}

nlohmann::json presentation_to_json(const QuiverPresentation& pres) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : pres.quiver.arrows)
        arrows.push_back({{"from", a.from + 1}, {"to", a.to + 1}, {"label", a.label}});
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& r : pres.relations) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : r.terms) {
            nlohmann::json path = nlohmann::json::array();
            for (int a : t.arrows) path.push_back(a + 1);
            terms.push_back({{"coef", rational_to_string(t.coef)}, {"path", path}});
        }
        rels.push_back({{"source", r.source + 1},
                        {"target", r.target + 1},
                        {"terms", terms},
                        {"text", plc_string(pres.quiver, r)}});
    }
    return {{"k", pres.quiver.k}, {"dims", pres.alpha}, {"arrows", arrows}, {"relations", rels}};
}

QuiverPresentation presentation_from_json(const nlohmann::json& j) {
    if (!j.contains("k") || !j.contains("dims") || !j.contains("arrows"))
        throw validation_error("presentation document needs 'k', 'dims', 'arrows'");
    QuiverPresentation pres;
    pres.quiver.k = j.at("k").get<int>();
    pres.alpha = j.at("dims").get<DimVec>();
    if ((int)pres.alpha.size() != pres.quiver.k)
        throw validation_error("dimension vector length mismatch");
    for (const auto& a : j.at("arrows")) {
        std::string label = a.value("label", "");
        if (label.empty()) label = "a" + std::to_string(pres.quiver.arrows.size() + 1);
        pres.quiver.add_arrow(a.at("from").get<int>() - 1, a.at("to").get<int>() - 1, label);
    }
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) {
            PathLinComb c = plc_zero(r.at("source").get<int>() - 1, r.at("target").get<int>() - 1);
            for (const auto& jt : r.at("terms")) {
                Rational coef = rational_from_string(jt.at("coef").get<std::string>());
                std::vector<int> arrows;
                for (const auto& a : jt.at("path")) arrows.push_back(a.get<int>() - 1);
                c = plc_add(c, plc_from_path(Path{c.source, c.target, arrows}, coef));
            }
            validate_plc(pres.quiver, c);
            pres.relations.push_back(std::move(c));
        }
    return pres;
}

} // namespace mq
