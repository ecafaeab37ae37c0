#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <vector>

#include "stairconv/errors.hpp"
#include "stairconv/geometry.hpp"

namespace stairconv {

// Stair-convexity primitives. A stair-path between two points rises in the
// last coordinate first, then connects the remaining coordinates recursively;
// a stair-convex set contains the stair-path between any two of its points.
// All predicates here assume generic inputs: no two points of an instance
// share a value on any axis. Ties are a hard error, never perturbed, so that
// the exact-rational instantiations of these templates stay exact.

template <class S>
struct StairPathT {
    PointT<S> a;
    PointT<S> b;
    std::vector<SegmentT<S>> segments;
};

using StairPath = StairPathT<double>;

namespace detail {

template <class S>
void stair_vertices(PointT<S> u, PointT<S> v, int k, std::vector<PointT<S>>& out) {
    if (k == 1) {
        out.push_back(u);
        out.push_back(v);
        return;
    }
    if (u[k - 1] <= v[k - 1]) {
        PointT<S> u2 = u;
        u2[k - 1] = v[k - 1];
        out.push_back(u);
        stair_vertices(std::move(u2), std::move(v), k - 1, out);
    } else {
        std::vector<PointT<S>> rev;
        stair_vertices(std::move(v), std::move(u), k, rev);
        out.insert(out.end(), rev.rbegin(), rev.rend());
    }
}

}  // namespace detail

/// Builds the stair-path between a and b: at most d axis-parallel closed
/// segments; zero-length legs are dropped. The vertex chain runs from a to b.
template <class S>
StairPathT<S> stair_path(const PointT<S>& a, const PointT<S>& b) {
    require_same_dim(a, b);
    std::vector<PointT<S>> verts;
    detail::stair_vertices(a, b, dim_of(a), verts);
    StairPathT<S> path{a, b, {}};
    for (size_t i = 1; i < verts.size(); ++i) {
        if (verts[i] != verts[i - 1]) {
            path.segments.push_back(SegmentT<S>{verts[i - 1], verts[i]});
        }
    }
    return path;
}

/// Type of b with respect to a: 0 if b is below a in every coordinate,
/// otherwise the largest j with b_j > a_j (b must be below a in all later
/// coordinates, which the largest-j rule encodes for tie-free inputs).
template <class S>
int type_of(const PointT<S>& b, const PointT<S>& a) {
    require_same_dim(a, b);
    int d = dim_of(a);
    for (int i = 0; i < d; ++i) {
        if (b[i] == a[i]) {
            throw SharedCoordinateError("points share coordinate on axis " +
                                        std::to_string(i + 1));
        }
    }
    for (int j = d; j >= 1; --j) {
        if (b[j - 1] > a[j - 1]) return j;
    }
    return 0;
}

/// Lebesgue measures of the d+1 type regions of a in the unit cube:
/// v_0 = prod a_i, v_j = (1-a_j) * prod_{i>j} a_i. They partition the cube.
inline std::vector<double> type_region_volumes(const Point& a) {
    if (a.empty()) throw DimensionMismatchError("point must have dimension >= 1");
    require_open_unit_box(a);
    int d = dim_of(a);
    std::vector<double> v(static_cast<size_t>(d) + 1);
    // suffix[j] = prod_{i=j+1..d} a_i (1-based j)
    std::vector<double> suffix(static_cast<size_t>(d) + 1, 1.0);
    for (int j = d - 1; j >= 0; --j) suffix[j] = suffix[j + 1] * a[j];
    v[0] = suffix[0];
    for (int j = 1; j <= d; ++j) v[j] = (1.0 - a[j - 1]) * suffix[j];
    return v;
}

namespace detail {

template <class S>
void require_no_shared_coordinates(const PointSetT<S>& pts) {
    if (pts.empty()) return;
    int d = dim_of(pts.front());
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            for (int c = 0; c < d; ++c) {
                if (pts[i][c] == pts[j][c]) {
                    throw SharedCoordinateError(
                        "points " + point_to_string(pts[i]) + " and " +
                        point_to_string(pts[j]) + " share coordinate on axis " +
                        std::to_string(c + 1));
                }
            }
        }
    }
}

// Decision kernel for two stair-convex hulls with |Y| + |Z| = k + 2 in
// dimension k. Finds the two highest points; if they lie in the same set the
// hulls are disjoint, otherwise the highest point is dropped, everything is
// projected one dimension down and the question repeats. Base case is
// interval overlap on the first axis. `idx`/`side` are scratch and permuted.
template <class S>
bool stair_hulls_meet_exact(const PointT<S>* const* pts, int* idx,
                            const unsigned char* side, int n, int k) {
    if (k == 1) {
        bool have[2] = {false, false};
        const S* mn[2] = {nullptr, nullptr};
        const S* mx[2] = {nullptr, nullptr};
        for (int i = 0; i < n; ++i) {
            const S& c = (*pts[idx[i]])[0];
            int sd = side[idx[i]];
            if (!have[sd]) {
                have[sd] = true;
                mn[sd] = mx[sd] = &c;
            } else {
                if (c < *mn[sd]) mn[sd] = &c;
                if (c > *mx[sd]) mx[sd] = &c;
            }
        }
        if (!have[0] || !have[1]) return false;
        const S& lo = *mn[0] > *mn[1] ? *mn[0] : *mn[1];
        const S& hi = *mx[0] < *mx[1] ? *mx[0] : *mx[1];
        return lo <= hi;  // closed hulls
    }
    int top = 0, sec = -1;
    for (int i = 1; i < n; ++i) {
        const S& c = (*pts[idx[i]])[k - 1];
        if (c > (*pts[idx[top]])[k - 1]) {
            sec = top;
            top = i;
        } else if (sec < 0 || c > (*pts[idx[sec]])[k - 1]) {
            sec = i;
        }
    }
    if (side[idx[top]] == side[idx[sec]]) return false;
    std::swap(idx[top], idx[n - 1]);
    return stair_hulls_meet_exact(pts, idx, side, n - 1, k - 1);
}

template <class S>
bool stair_hulls_meet_exact_size(const PointSetT<S>& Y, const PointSetT<S>& Z) {
    int n = static_cast<int>(Y.size() + Z.size());
    std::vector<const PointT<S>*> pts(static_cast<size_t>(n));
    std::vector<unsigned char> side(static_cast<size_t>(n));
    std::vector<int> idx(static_cast<size_t>(n));
    int at = 0;
    for (const auto& y : Y) {
        pts[at] = &y;
        side[at] = 0;
        idx[at] = at;
        ++at;
    }
    for (const auto& z : Z) {
        pts[at] = &z;
        side[at] = 1;
        idx[at] = at;
        ++at;
    }
    return stair_hulls_meet_exact(pts.data(), idx.data(), side.data(), n,
                                  dim_of(Y.front()));
}

template <class S>
bool for_each_subset(const PointSetT<S>& src, int want, size_t start,
                     PointSetT<S>& cur, const std::function<bool(const PointSetT<S>&)>& fn) {
    if (want == 0) return fn(cur);
    for (size_t i = start; i + static_cast<size_t>(want) <= src.size(); ++i) {
        cur.push_back(src[i]);
        if (for_each_subset(src, want - 1, i + 1, cur, fn)) {
            cur.pop_back();
            return true;
        }
        cur.pop_back();
    }
    return false;
}

}  // namespace detail

/// Membership a in stconv(X): X must contain a point of type j with respect
/// to a for every j = 0..d.
template <class S>
bool point_in_stconv(const PointSetT<S>& X, const PointT<S>& a) {
    if (X.empty()) throw EmptyInputError("empty generator set");
    int d = dim_of(a);
    std::vector<char> seen(static_cast<size_t>(d) + 1, 0);
    for (const auto& x : X) {
        require_same_dim(x, a);
        seen[static_cast<size_t>(type_of(x, a))] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

/// Decides stconv(Y) cap stconv(Z) != empty for tie-free finite sets.
/// With s+t < d+2 the hulls never meet; with s+t = d+2 the highest-point
/// recursion decides; with s+t > d+2 some subset pair of total size d+2
/// must already meet, and plain enumeration over those pairs suffices at
/// the input sizes this artifact uses.
template <class S>
bool stconv_intersect(const PointSetT<S>& Y, const PointSetT<S>& Z) {
    if (Y.empty() || Z.empty()) throw EmptyInputError("empty point set");
    int d = dim_of(Y.front());
    for (const auto& y : Y) {
        if (dim_of(y) != d) throw DimensionMismatchError("ragged point set");
    }
    for (const auto& z : Z) {
        if (dim_of(z) != d) throw DimensionMismatchError("ragged point set");
    }
    PointSetT<S> all = Y;
    all.insert(all.end(), Z.begin(), Z.end());
    detail::require_no_shared_coordinates(all);

    int s = static_cast<int>(Y.size());
    int t = static_cast<int>(Z.size());
    if (s + t < d + 2) return false;
    if (s + t == d + 2) return detail::stair_hulls_meet_exact_size(Y, Z);

    for (int s2 = std::max(1, d + 2 - t); s2 <= std::min(s, d + 1); ++s2) {
        int t2 = d + 2 - s2;
        PointSetT<S> ysub, zsub;
        bool hit = detail::for_each_subset<S>(
            Y, s2, 0, ysub, [&](const PointSetT<S>& ys) {
                PointSetT<S> zcur;
                return detail::for_each_subset<S>(
                    Z, t2, 0, zcur, [&](const PointSetT<S>& zs) {
                        return detail::stair_hulls_meet_exact_size(ys, zs);
                    });
            });
        if (hit) return true;
    }
    return false;
}

/// Does the stair-path between q and p meet the stair-simplex spanned by the
/// d points of Z? This is the elementary event behind the stabbing measures.
template <class S>
bool stab_check(const PointT<S>& q, const PointT<S>& p, const PointSetT<S>& Z) {
    require_same_dim(q, p);
    int d = dim_of(q);
    if (static_cast<int>(Z.size()) != d) {
        throw DimensionMismatchError("stab_check requires exactly d simplex vertices");
    }
    return stconv_intersect<S>(PointSetT<S>{q, p}, Z);
}

}  // namespace stairconv
