#include "mq/paths.hpp"

#include <algorithm>

namespace mq {

int LabeledQuiver::add_arrow(int from, int to, std::string label) {
    if (from < 0 || from >= k || to < 0 || to >= k)
        throw validation_error("arrow endpoint out of range");
    arrows.push_back({from, to, std::move(label)});
    return (int)arrows.size() - 1;
}

int LabeledQuiver::arrow_by_label(const std::string& label) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label) return (int)i;
    return -1;
}

std::string LabeledQuiver::vertex_name(int v) const {
    return "v" + std::to_string(v + 1);
}

Path empty_path(int v) { return Path{v, v, {}}; }

Path arrow_path(const LabeledQuiver& q, int arrow) {
    if (arrow < 0 || arrow >= (int)q.arrows.size())
        throw validation_error("arrow id out of range");
    return Path{q.arrows[arrow].from, q.arrows[arrow].to, {arrow}};
}

void validate_path(const LabeledQuiver& q, const Path& p) {
    if (p.source < 0 || p.source >= q.k || p.target < 0 || p.target >= q.k)
        throw validation_error("path endpoint out of range");
    int at = p.source;
    for (int a : p.arrows) {
        if (a < 0 || a >= (int)q.arrows.size())
            throw validation_error("path uses unknown arrow");
        if (q.arrows[a].from != at)
            throw validation_error("path arrows are not composable");
        at = q.arrows[a].to;
    }
    if (at != p.target) throw validation_error("path does not end at its target");
}

Path concat(const LabeledQuiver& q, const Path& first, const Path& then) {
    if (first.target != then.source)
        throw validation_error("path concatenation endpoint mismatch");
    Path out{first.source, then.target, first.arrows};
    out.arrows.insert(out.arrows.end(), then.arrows.begin(), then.arrows.end());
    validate_path(q, out);
    return out;
}

std::string path_string(const LabeledQuiver& q, const Path& p) {
    if (p.arrows.empty()) return q.vertex_name(p.source);
    std::string out;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
        out += q.arrows[*it].label;
    return out;
}

PathLinComb plc_zero(int source, int target) { return PathLinComb{source, target, {}}; }

PathLinComb plc_from_path(const Path& p, const Rational& coef) {
    PathLinComb c{p.source, p.target, {}};
    if (coef != 0) c.terms.push_back({coef, p.arrows});
    return c;
}

void validate_plc(const LabeledQuiver& q, const PathLinComb& c) {
    for (const auto& t : c.terms)
        validate_path(q, Path{c.source, c.target, t.arrows});
}

namespace {

void add_term(PathLinComb& c, const Rational& coef, const std::vector<int>& arrows) {
    if (coef == 0) return;
    for (auto it = c.terms.begin(); it != c.terms.end(); ++it)
        if (it->arrows == arrows) {
            it->coef += coef;
            if (it->coef == 0) c.terms.erase(it);
            return;
        }
    c.terms.push_back({coef, arrows});
}

} // namespace

PathLinComb plc_add(const PathLinComb& a, const PathLinComb& b) {
    if (a.source != b.source || a.target != b.target)
        throw validation_error("path combination endpoint mismatch");
    PathLinComb out = a;
    for (const auto& t : b.terms) add_term(out, t.coef, t.arrows);
    return out;
}

PathLinComb plc_scale(const PathLinComb& a, const Rational& r) {
    PathLinComb out{a.source, a.target, {}};
    for (const auto& t : a.terms) add_term(out, t.coef * r, t.arrows);
    return out;
}

PathLinComb plc_compose(const LabeledQuiver& q, const PathLinComb& a, const PathLinComb& b) {
    if (b.target != a.source)
        throw validation_error("path combination composition mismatch");
    PathLinComb out{b.source, a.target, {}};
    for (const auto& tb : b.terms)
        for (const auto& ta : a.terms) {
            std::vector<int> arrows = tb.arrows;
            arrows.insert(arrows.end(), ta.arrows.begin(), ta.arrows.end());
            validate_path(q, Path{out.source, out.target, arrows});
            add_term(out, ta.coef * tb.coef, arrows);
        }
    return out;
}

std::string plc_string(const LabeledQuiver& q, const PathLinComb& c) {
    if (c.terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c.terms.size(); ++i) {
        const auto& t = c.terms[i];
        Rational coef = t.coef;
        if (coef < 0) {
            out += "-";
            coef = -coef;
        } else if (i > 0) {
            out += "+";
        }
        if (coef != 1) out += rational_to_string(coef) + "*";
        out += path_string(q, Path{c.source, c.target, t.arrows});
    }
    return out;
}

} // namespace mq
