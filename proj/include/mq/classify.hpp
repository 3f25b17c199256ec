#ifndef MQ_CLASSIFY_HPP
#define MQ_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mq/reduction.hpp"
#include "mq/setting.hpp"

namespace mq {

/// Result of reducing a setting and matching the zero setting against the
/// canonical smooth list (bare dim-1 vertex; dim-k vertex with one loop,
/// plain or marked; dim-2 vertex with two loops in any marking combination).
struct SmoothResult {
    bool smooth;
    std::string matched; // smooth-list entry name, empty when singular
    MarkedQuiverSetting zero_setting;
};

/// Tests a zero setting for smooth-list membership (name, or empty).
std::string smooth_list_match(const MarkedQuiverSetting& zero);

SmoothResult smooth_local_type(const MarkedQuiverSetting& s);

/// All singular zero settings of central dimension d, up to isomorphism,
/// in deterministic (canonical-form) order. k_max < 0 means the counting
/// bound's own cap (vertex contributions already limit k to d-1).
std::vector<MarkedQuiverSetting> enumerate_zero_settings(long long d, int k_max = -1);

/// Single-threaded reference for the enumeration (kept for testing and the
/// benchmark target); must agree with the parallel version exactly.
std::vector<MarkedQuiverSetting> enumerate_zero_settings_serial(long long d, int k_max = -1);

/// Oriented cycle of l >= 2 dim-1 vertices with arrow multiplicities
/// (k_1,...,k_l); classifies isolated central singularities.
struct IsolatedType {
    int l;
    std::vector<int> multiplicities; // sorted descending

    bool operator==(const IsolatedType&) const = default;
};

/// d = sum k_i - l + 1 for the type.
long long isolated_dimension(const IsolatedType& t);

/// Reduces to the zero setting and pattern-matches the thin-cycle shape.
std::optional<IsolatedType> detect_isolated(const MarkedQuiverSetting& s);

struct SingularityRecord {
    std::string name;
    long long dimension;
    MarkedQuiverSetting setting;
    std::string presentation;
};

/// Built-in database of the central singularities in dimension <= 4.
const std::vector<SingularityRecord>& singularity_database();

/// Reduces to the zero setting and matches it against the database.
std::optional<SingularityRecord> known_singularity(const MarkedQuiverSetting& s);

} // namespace mq

#endif
