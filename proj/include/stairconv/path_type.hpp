#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stairconv/errors.hpp"
#include "stairconv/geometry.hpp"

namespace stairconv {

/// The type of a stair-path qp is T = { j : q_j < p_j }. Swapping the
/// endpoints complements T, and reflecting the first coordinate toggles
/// membership of 1, so every type has a normalized representative with
/// 1 not in T and d not in T; there are 2^(d-2) of those per dimension.
struct PathType {
    int dim = 0;
    uint32_t members = 0;  // bit j (1-based) set  <=>  j in T

    bool contains(int j) const { return (members >> j) & 1u; }
    bool empty() const { return members == 0; }

    int max_member() const {
        for (int j = dim; j >= 1; --j) {
            if (contains(j)) return j;
        }
        return 0;
    }

    int count() const {
        int n = 0;
        for (int j = 1; j <= dim; ++j) n += contains(j) ? 1 : 0;
        return n;
    }

    PathType complemented() const {
        PathType out{dim, 0};
        for (int j = 1; j <= dim; ++j) {
            if (!contains(j)) out.members |= (1u << j);
        }
        return out;
    }

    bool normalized() const { return !contains(1) && !contains(dim); }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int j = 1; j <= dim; ++j) {
            if (contains(j)) {
                if (!first) s += ",";
                s += std::to_string(j);
                first = false;
            }
        }
        s += "}";
        return s;
    }

    friend bool operator==(const PathType&, const PathType&) = default;
};

inline PathType make_path_type(int d, std::initializer_list<int> js) {
    PathType t{d, 0};
    for (int j : js) {
        if (j < 1 || j > d) throw DomainError("type member outside 1..d");
        t.members |= (1u << j);
    }
    return t;
}

/// T = { j : q_j < p_j }. Coordinate ties are rejected (they have measure
/// zero and would make the type ill-defined).
inline PathType path_type_of(const Point& q, const Point& p) {
    require_same_dim(q, p);
    PathType t{dim_of(q), 0};
    for (int j = 1; j <= t.dim; ++j) {
        if (q[j - 1] == p[j - 1]) {
            throw SharedCoordinateError("q and p agree in coordinate " + std::to_string(j));
        }
        if (q[j - 1] < p[j - 1]) t.members |= (1u << j);
    }
    return t;
}

/// All 2^(d-2) normalized types: the subsets of {2..d-1}.
inline std::vector<PathType> enumerate_types(int d) {
    if (d < 2) throw DomainError("type enumeration requires dimension >= 2");
    int n_inner = d - 2;
    std::vector<PathType> out;
    out.reserve(1u << n_inner);
    for (uint32_t mask = 0; mask < (1u << n_inner); ++mask) {
        PathType t{d, 0};
        for (int k = 0; k < n_inner; ++k) {
            if ((mask >> k) & 1u) t.members |= (1u << (k + 2));
        }
        out.push_back(t);
    }
    return out;
}

struct PathConfig {
    Point q;
    Point p;
    PathType type;
};

/// Reduces an arbitrary configuration to its normalized representative:
/// first, if d in T, swap q and p and complement T; then, if 1 in T,
/// reflect the first coordinate (q_1 -> 1-q_1, p_1 -> 1-p_1), which toggles
/// membership of 1. Both reductions leave the stabbing measure unchanged.
inline PathConfig normalize_type(const PathType& T, const Point& q, const Point& p) {
    require_same_dim(q, p);
    int d = dim_of(q);
    if (T.dim != d) throw DimensionMismatchError("type dimension mismatch");
    if (path_type_of(q, p) != T) {
        throw DomainError("sign pattern of (q,p) inconsistent with type " + T.to_string());
    }
    PathConfig cfg{q, p, T};
    if (cfg.type.contains(d)) {
        std::swap(cfg.q, cfg.p);
        cfg.type = cfg.type.complemented();
    }
    if (cfg.type.contains(1)) {
        cfg.q[0] = 1.0 - cfg.q[0];
        cfg.p[0] = 1.0 - cfg.p[0];
        cfg.type.members &= ~(1u << 1);
    }
    return cfg;
}

/// Extends a normalized configuration until both endpoints touch the
/// boundary of the unit cube: p_d becomes 0, and q_{max T} becomes 0 when
/// T is nonempty, else q_1 becomes 1.
inline PathConfig extend_to_boundary(const PathConfig& cfg) {
    int d = dim_of(cfg.q);
    if (cfg.type.dim != d || cfg.type.contains(d)) {
        throw DomainError("extend_to_boundary requires a normalized configuration");
    }
    PathConfig out = cfg;
    out.p[d - 1] = 0.0;
    if (!cfg.type.empty()) {
        out.q[cfg.type.max_member() - 1] = 0.0;
    } else {
        out.q[0] = 1.0;
    }
    return out;
}

}  // namespace stairconv
