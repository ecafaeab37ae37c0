#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <algorithm>
#include <vector>

#include "stairconv/geometry.hpp"
#include "stairconv/rng.hpp"

namespace stairconv::oracle {

/// Membership in a stair-convex hull via the horizontal-slice recursion:
/// the slice of the hull at height y is the (d-1)-dimensional hull of the
/// projections of the generators at height <= y, provided some generator
/// reaches height y at all. Independent of the type-counting implementation.
template <class S>
bool in_stconv_slice(const PointSetT<S>& X, const PointT<S>& a) {
    if (X.empty()) return false;
    int d = dim_of(a);
    if (d == 1) {
        S lo = X.front()[0], hi = X.front()[0];
        for (const auto& x : X) {
            lo = std::min(lo, x[0]);
            hi = std::max(hi, x[0]);
        }
        return lo <= a[0] && a[0] <= hi;
    }
    bool some_at_or_above = false;
    PointSetT<S> below;
    for (const auto& x : X) {
        if (x[static_cast<size_t>(d) - 1] >= a[static_cast<size_t>(d) - 1]) some_at_or_above = true;
        if (x[static_cast<size_t>(d) - 1] <= a[static_cast<size_t>(d) - 1]) {
            below.push_back(PointT<S>(x.begin(), x.end() - 1));
        }
    }
    if (!some_at_or_above) return false;
    PointT<S> abar(a.begin(), a.end() - 1);
    return in_stconv_slice(below, abar);
}

/// Is w on the axis-parallel closed segment [u, v]?
inline bool on_segment(const Point& w, const Point& u, const Point& v) {
    int vary = -1;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] != v[i]) {
            if (vary >= 0) return false;  // not axis-parallel
            vary = static_cast<int>(i);
        }
    }
    for (size_t i = 0; i < u.size(); ++i) {
        if (static_cast<int>(i) == vary) {
            if (w[i] < std::min(u[i], v[i]) || w[i] > std::max(u[i], v[i])) return false;
        } else if (w[i] != u[i]) {
            return false;
        }
    }
    return true;
}

inline Point random_point(Xoshiro256& rng, int d) {
    Point p(static_cast<size_t>(d));
    for (auto& c : p) c = rng.uniform01();
    return p;
}

/// Random points with pairwise distinct coordinates on every axis (ties have
/// probability ~0 for doubles; the check keeps the tests honest anyway).
inline PointSet random_generic_set(Xoshiro256& rng, int count, int d) {
    for (;;) {
        PointSet pts;
        for (int i = 0; i < count; ++i) pts.push_back(random_point(rng, d));
        bool ok = true;
        for (size_t i = 0; i < pts.size() && ok; ++i) {
            for (size_t j = i + 1; j < pts.size() && ok; ++j) {
                for (int c = 0; c < d; ++c) {
                    if (pts[i][static_cast<size_t>(c)] == pts[j][static_cast<size_t>(c)]) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) return pts;
    }
}

}  // namespace stairconv::oracle
