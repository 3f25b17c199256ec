#ifndef MQ_PATHS_HPP
#define MQ_PATHS_HPP

#include <string>
#include <vector>

#include "mq/rational.hpp"
#include "mq/setting.hpp"

namespace mq {

struct LabeledArrow {
    int from, to;
    std::string label;
};

/// Directed multigraph with named arrows; the carrier for presentations,
/// representations, and path arithmetic. Vertices print as v1..vk.
struct LabeledQuiver {
    int k = 0;
    std::vector<LabeledArrow> arrows;

    int add_arrow(int from, int to, std::string label);
    int arrow_by_label(const std::string& label) const; // -1 when absent
    std::string vertex_name(int v) const;
};

/// Oriented path; `arrows` in application order (arrows[0] leaves `source`).
/// An empty arrow list is the idempotent at source == target.
struct Path {
    int source, target;
    std::vector<int> arrows;

    bool operator==(const Path&) const = default;
};

Path empty_path(int v);
Path arrow_path(const LabeledQuiver& q, int arrow);

/// Validates chain composability against the quiver.
void validate_path(const LabeledQuiver& q, const Path& p);

/// `first` then `then` (so then.source must equal first.target).
Path concat(const LabeledQuiver& q, const Path& first, const Path& then);

/// Matrix-order rendering: the last arrow applied prints first; the empty
/// path prints as its vertex name.
std::string path_string(const LabeledQuiver& q, const Path& p);

struct PathTerm {
    Rational coef;
    std::vector<int> arrows; // application order
};

/// Formal rational linear combination of parallel paths source -> target.
struct PathLinComb {
    int source, target;
    std::vector<PathTerm> terms; // like terms merged, zero terms dropped

    bool is_zero() const { return terms.empty(); }
};

PathLinComb plc_zero(int source, int target);
PathLinComb plc_from_path(const Path& p, const Rational& coef = 1);

void validate_plc(const LabeledQuiver& q, const PathLinComb& c);

PathLinComb plc_add(const PathLinComb& a, const PathLinComb& b);
PathLinComb plc_scale(const PathLinComb& a, const Rational& r);

/// Matrix-order product a∘b: apply b first (b.target must equal a.source).
PathLinComb plc_compose(const LabeledQuiver& q, const PathLinComb& a, const PathLinComb& b);

/// Terms print in stored order as "+"/"-"-joined monomials without spaces,
/// e.g. "n1x1+n3y3-v1"; rational coefficients other than ±1 print as "p/q*".
std::string plc_string(const LabeledQuiver& q, const PathLinComb& c);

} // namespace mq

#endif
