#include "mq/representation.hpp"

#include <nlohmann/json.hpp>

namespace mq {

Representation make_representation(LabeledQuiver quiver, DimVec alpha,
                                   std::vector<Matrix> matrices,
                                   std::vector<bool> marked_loops) {
    if ((int)alpha.size() != quiver.k)
        throw validation_error("dimension vector length mismatch");
    for (int a : alpha)
        if (a < 0) throw validation_error("negative dimension");
    if (matrices.size() != quiver.arrows.size())
        throw validation_error("one matrix per arrow required");
    if (marked_loops.empty()) marked_loops.assign(quiver.arrows.size(), false);
    if (marked_loops.size() != quiver.arrows.size())
        throw validation_error("one marking flag per arrow required");
    for (size_t a = 0; a < matrices.size(); ++a) {
        const auto& arr = quiver.arrows[a];
        if (matrices[a].rows() != alpha[arr.to] || matrices[a].cols() != alpha[arr.from])
            throw validation_error("matrix shape mismatch for arrow '" + arr.label + "'");
        if (marked_loops[a]) {
            if (arr.from != arr.to)
                throw validation_error("marking on a non-loop arrow '" + arr.label + "'");
            if (matrices[a].trace() != 0)
                throw validation_error("marked loop '" + arr.label + "' is not trace-zero");
        }
    }
    return Representation{std::move(quiver), std::move(alpha), std::move(matrices),
                          std::move(marked_loops)};
}

Matrix evaluate_path(const Representation& rep, const Path& p) {
    validate_path(rep.quiver, p);
    Matrix acc = Matrix::identity(rep.alpha[p.source]);
    for (int a : p.arrows) acc = rep.matrices[a] * acc;
    return acc;
}

Matrix evaluate_plc(const Representation& rep, const PathLinComb& c) {
    Matrix acc(rep.alpha[c.target], rep.alpha[c.source]);
    for (const auto& t : c.terms)
        acc = acc + evaluate_path(rep, Path{c.source, c.target, t.arrows}) * t.coef;
    return acc;
}

void validate_relations(const Representation& rep, const std::vector<PathLinComb>& relations) {
    for (size_t i = 0; i < relations.size(); ++i) {
        Matrix v = evaluate_plc(rep, relations[i]);
        Matrix zero(v.rows(), v.cols());
        if (!(v == zero))
            throw validation_error("representation violates relation " + std::to_string(i + 1));
    }
}

Representation transform(const Representation& rep, const std::vector<Matrix>& g) {
    if ((int)g.size() != rep.quiver.k)
        throw validation_error("one block per vertex required");
    std::vector<Matrix> ginv;
    for (int v = 0; v < rep.quiver.k; ++v) {
        if (g[v].rows() != rep.alpha[v] || g[v].cols() != rep.alpha[v])
            throw validation_error("block shape mismatch at vertex " + std::to_string(v + 1));
        ginv.push_back(g[v].inverse());
    }
    Representation out = rep;
    for (size_t a = 0; a < rep.matrices.size(); ++a) {
        const auto& arr = rep.quiver.arrows[a];
        out.matrices[a] = g[arr.to] * rep.matrices[a] * ginv[arr.from];
    }
    return out;
}

bool is_thin(const Representation& rep) {
    for (int a : rep.alpha)
        if (a > 1) return false;
    return true;
}

nlohmann::json representation_to_json(const Representation& rep) {
    nlohmann::json arrows = nlohmann::json::array();
    for (size_t a = 0; a < rep.quiver.arrows.size(); ++a) {
        const auto& arr = rep.quiver.arrows[a];
        nlohmann::json mat = nlohmann::json::array();
        for (int r = 0; r < rep.matrices[a].rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < rep.matrices[a].cols(); ++c)
                row.push_back(rational_to_string(rep.matrices[a](r, c)));
            mat.push_back(row);
        }
        arrows.push_back({{"from", arr.from + 1},
                          {"to", arr.to + 1},
                          {"label", arr.label},
                          {"marked", (bool)rep.marked_loops[a]},
                          {"matrix", mat}});
    }
    return {{"k", rep.quiver.k}, {"dims", rep.alpha}, {"arrows", arrows}};
}

Representation representation_from_json(const nlohmann::json& j) {
    if (!j.contains("k") || !j.contains("dims") || !j.contains("arrows"))
        throw validation_error("representation document needs 'k', 'dims', 'arrows'");
    LabeledQuiver q;
    q.k = j.at("k").get<int>();
    DimVec dims = j.at("dims").get<DimVec>();
    if ((int)dims.size() != q.k) throw validation_error("dimension vector length mismatch");
    std::vector<Matrix> mats;
    std::vector<bool> marked;
    for (const auto& a : j.at("arrows")) {
        int from = a.at("from").get<int>() - 1;
        int to = a.at("to").get<int>() - 1;
        std::string label = a.value("label", "");
        if (label.empty()) label = "a" + std::to_string(q.arrows.size() + 1);
        q.add_arrow(from, to, label);
        marked.push_back(a.value("marked", false));
        const auto& mj = a.at("matrix");
        Matrix m((int)mj.size(), mj.empty() ? 0 : (int)mj[0].size());
        for (int r = 0; r < m.rows(); ++r) {
            if ((int)mj[r].size() != m.cols())
                throw validation_error("ragged matrix rows");
            for (int c = 0; c < m.cols(); ++c)
                m(r, c) = rational_from_string(mj[r][c].get<std::string>());
        }
        mats.push_back(std::move(m));
    }
    return make_representation(std::move(q), std::move(dims), std::move(mats), std::move(marked));
}

} // namespace mq
