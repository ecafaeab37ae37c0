#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "stairconv/convex_stab.hpp"
#include "stairconv/errors.hpp"
#include "stairconv/rational.hpp"
#include "stairconv/stretched.hpp"

namespace stairconv {

/// Exhaustive stabbing count: how many of the C(N,d) simplices spanned by
/// the point set does the segment qp meet (exact convex decisions only; no
/// stair shortcut, so near-boundary and non-far-apart tuples are counted
/// the same way as everything else).
struct StabCensus {
    int64_t total_simplices = 0;
    int64_t stabbed = 0;
    Rational fraction;
    RationalPoint q;
    RationalPoint p;
};

namespace detail {

inline int64_t binomial_count(int64_t n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    if (r > BigInt(std::numeric_limits<int64_t>::max())) return std::numeric_limits<int64_t>::max();
    return r.convert_to<int64_t>();
}

}  // namespace detail

inline StabCensus stab_census(const StretchedSet& s, const RationalPoint& q,
                              const RationalPoint& p, int64_t max_simplices = 10'000'000) {
    int d = s.dim;
    int64_t n = s.point_count();
    int64_t total = detail::binomial_count(n, d);
    if (total > max_simplices) {
        throw BudgetError("census of " + std::to_string(total) + " simplices exceeds the budget");
    }

    StabCensus census;
    census.total_simplices = total;
    census.q = q;
    census.p = p;
    if (total == 0) {
        census.fraction = 0;
        return census;
    }
    std::vector<RationalPoint> pts = s.points();

    std::vector<int> comb(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) comb[static_cast<size_t>(i)] = i;
    std::vector<RationalPoint> Z(static_cast<size_t>(d));
    for (;;) {
        for (int i = 0; i < d; ++i) Z[static_cast<size_t>(i)] = pts[static_cast<size_t>(comb[static_cast<size_t>(i)])];
        if (convex_stab_exact(q, p, Z)) ++census.stabbed;
        // next d-combination of {0..n-1}
        int i = d - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < d; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    census.fraction = Rational(census.stabbed) / Rational(census.total_simplices);
    return census;
}

enum class CellPlacement { cell_midpoint, cell_quarter, preimage };

inline std::string cell_placement_name(CellPlacement p) {
    switch (p) {
        case CellPlacement::cell_midpoint: return "midpoint";
        case CellPlacement::cell_quarter: return "quarter";
        case CellPlacement::preimage: return "preimage";
    }
    return "?";
}

inline CellPlacement cell_placement_from_name(const std::string& s) {
    if (s == "midpoint") return CellPlacement::cell_midpoint;
    if (s == "quarter") return CellPlacement::cell_quarter;
    if (s == "preimage") return CellPlacement::preimage;
    throw DomainError("unknown placement: " + s);
}

/// Maps a unit-cube coordinate vector to a segment endpoint inside the
/// bounding box. Every coordinate designates the elementary cell containing
/// it (cell index floor(u*(m-1)), the top cell for u = 1); `cell_midpoint`
/// and `cell_quarter` anchor the coordinate 1/2 or 1/4 of the way into that
/// cell, so they never touch a grid layer and the census stays free of
/// degenerate tangencies; `preimage` takes the exact inverse of the
/// order-preserving map instead. The quarter anchor is the calibrated
/// fixture for the convergence checks against the asymptotic constant.
inline RationalPoint census_endpoint(const StretchedSet& s, const RationalPoint& unit,
                                     CellPlacement placement = CellPlacement::cell_midpoint) {
    if (placement == CellPlacement::preimage) return pi_preimage(s, unit);
    if (dim_of(unit) != s.dim) throw DimensionMismatchError("point dimension mismatch");
    RationalPoint x(static_cast<size_t>(s.dim));
    int m = s.size;
    const Rational anchor = placement == CellPlacement::cell_quarter ? Rational(1, 4) : Rational(1, 2);
    for (int i = 0; i < s.dim; ++i) {
        const Rational& u = unit[static_cast<size_t>(i)];
        if (u < 0 || u > 1) throw DomainError("unit-cube coordinate outside [0,1]");
        const auto& axis = s.axis_coords[static_cast<size_t>(i)];
        Rational scaled = u * (m - 1);
        BigInt cell = boost::multiprecision::numerator(scaled) /
                      boost::multiprecision::denominator(scaled);
        if (cell > m - 2) cell = m - 2;
        size_t j = static_cast<size_t>(cell.convert_to<long>());
        Rational lo(axis[j]), hi(axis[j + 1]);
        x[static_cast<size_t>(i)] = lo + anchor * (hi - lo);
    }
    return x;
}

}  // namespace stairconv
