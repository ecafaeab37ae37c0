#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "stairconv/errors.hpp"

namespace stairconv {

/// A point is a d-tuple of scalars; the dimension is the tuple length.
/// The last coordinate of a point is its "height".
template <class S>
using PointT = std::vector<S>;

using Point = PointT<double>;

template <class S>
using PointSetT = std::vector<PointT<S>>;

using PointSet = PointSetT<double>;

template <class S>
inline int dim_of(const PointT<S>& p) {
    return static_cast<int>(p.size());
}

template <class S>
inline void require_same_dim(const PointT<S>& a, const PointT<S>& b) {
    if (a.size() != b.size() || a.empty()) {
        throw DimensionMismatchError("points must have equal positive dimension");
    }
}

inline void require_finite(const Point& p) {
    for (double c : p) {
        if (!std::isfinite(c)) throw DomainError("non-finite coordinate");
    }
}

inline void require_unit_box(const Point& p) {
    require_finite(p);
    for (double c : p) {
        if (c < 0.0 || c > 1.0) throw DomainError("coordinate outside [0,1]");
    }
}

inline void require_open_unit_box(const Point& p) {
    require_finite(p);
    for (double c : p) {
        if (c <= 0.0 || c >= 1.0) {
            throw DomainError("coordinate outside the open unit cube");
        }
    }
}

template <class S>
inline std::string point_to_string(const PointT<S>& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

/// One closed axis-parallel segment; exactly one coordinate differs
/// between the two endpoints.
template <class S>
struct SegmentT {
    PointT<S> a;
    PointT<S> b;
};

using Segment = SegmentT<double>;

}  // namespace stairconv
