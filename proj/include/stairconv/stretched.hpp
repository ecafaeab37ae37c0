#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "stairconv/errors.hpp"
#include "stairconv/geometry.hpp"
#include "stairconv/rational.hpp"

namespace stairconv {

enum class StretchedKind { grid, diagonal, uniform };

inline std::string stretched_kind_name(StretchedKind k) {
    switch (k) {
        case StretchedKind::grid: return "grid";
        case StretchedKind::diagonal: return "diagonal";
        case StretchedKind::uniform: return "uniform";
    }
    return "?";
}

/// An explicit stretched point set with exact integer coordinates.
/// Axis i carries coordinates x_{i,1} < ... < x_{i,m} with x_{i,1} = 1 and
/// x_{i,j+1} = K_i * x_{i,j}, the minimal growth satisfying the dwarfing
/// relation K_i * x <= y; K_1 = 2^d and K_i = 2^d * x_{i-1,m}.
/// The diagonal takes the j-th coordinate on every axis; the uniform set is
/// an evenly spaced integer grid stretched over (approximately) the same
/// bounding box, kept for comparison runs.
struct StretchedSet {
    StretchedKind kind = StretchedKind::grid;
    int dim = 0;
    int size = 0;  // points per axis (grid side m, diagonal length n)
    std::vector<std::vector<BigInt>> axis_coords;  // [dim][size]
    std::vector<BigInt> stretch;                   // K_1..K_d

    int64_t point_count() const {
        if (kind == StretchedKind::diagonal) return size;
        int64_t n = 1;
        for (int i = 0; i < dim; ++i) n *= size;
        return n;
    }

    /// Materializes the point list; grid/uniform points are enumerated in
    /// row-major order of their per-axis indices.
    std::vector<RationalPoint> points() const {
        std::vector<RationalPoint> out;
        if (kind == StretchedKind::diagonal) {
            out.reserve(static_cast<size_t>(size));
            for (int j = 0; j < size; ++j) {
                RationalPoint p(static_cast<size_t>(dim));
                for (int i = 0; i < dim; ++i) p[static_cast<size_t>(i)] = axis_coords[static_cast<size_t>(i)][static_cast<size_t>(j)];
                out.push_back(std::move(p));
            }
            return out;
        }
        int64_t n = point_count();
        out.reserve(static_cast<size_t>(n));
        std::vector<int> idx(static_cast<size_t>(dim), 0);
        for (int64_t c = 0; c < n; ++c) {
            RationalPoint p(static_cast<size_t>(dim));
            for (int i = 0; i < dim; ++i) p[static_cast<size_t>(i)] = axis_coords[static_cast<size_t>(i)][static_cast<size_t>(idx[static_cast<size_t>(i)])];
            out.push_back(std::move(p));
            for (int i = dim - 1; i >= 0; --i) {
                if (++idx[static_cast<size_t>(i)] < size) break;
                idx[static_cast<size_t>(i)] = 0;
            }
        }
        return out;
    }

    const BigInt& axis_min(int i) const { return axis_coords[static_cast<size_t>(i)].front(); }
    const BigInt& axis_max(int i) const { return axis_coords[static_cast<size_t>(i)].back(); }

    bool in_bounding_box(const RationalPoint& x) const {
        for (int i = 0; i < dim; ++i) {
            if (x[static_cast<size_t>(i)] < axis_min(i) || x[static_cast<size_t>(i)] > axis_max(i)) return false;
        }
        return true;
    }
};

inline StretchedSet build_stretched(StretchedKind kind, int d, int size) {
    if (d < 2) throw DomainError("stretched sets require dimension >= 2");
    if (size < 2) throw DomainError("stretched sets require at least 2 points per axis");
    if (size > 64 || d > 8) throw DomainError("set size out of supported range");

    StretchedSet s;
    s.kind = kind;
    s.dim = d;
    s.size = size;
    s.axis_coords.resize(static_cast<size_t>(d));
    s.stretch.resize(static_cast<size_t>(d));

    BigInt two_d = int_pow(BigInt(2), static_cast<unsigned>(d));
    BigInt prev_max = 0;
    for (int i = 0; i < d; ++i) {
        BigInt K = (i == 0) ? two_d : two_d * prev_max;
        s.stretch[static_cast<size_t>(i)] = K;
        auto& axis = s.axis_coords[static_cast<size_t>(i)];
        axis.resize(static_cast<size_t>(size));
        axis[0] = 1;
        for (int j = 1; j < size; ++j) axis[static_cast<size_t>(j)] = axis[static_cast<size_t>(j - 1)] * K;
        prev_max = axis.back();
    }
    if (kind == StretchedKind::uniform) {
        // evenly spaced integers over roughly the stretched bounding box
        for (int i = 0; i < d; ++i) {
            auto& axis = s.axis_coords[static_cast<size_t>(i)];
            BigInt span = axis.back() - 1;
            BigInt step = span / (size - 1);
            if (step < 1) step = 1;
            for (int j = 0; j < size; ++j) axis[static_cast<size_t>(j)] = 1 + step * j;
        }
    }
    return s;
}

/// Order-preserving bijection BB -> [0,1]^d: grid coordinate x_{i,j} maps to
/// (j-1)/(m-1) and each elementary cell is squeezed linearly.
inline RationalPoint pi_map(const StretchedSet& s, const RationalPoint& x) {
    if (dim_of(x) != s.dim) throw DimensionMismatchError("point dimension mismatch");
    if (!s.in_bounding_box(x)) throw DomainError("point outside the bounding box");
    RationalPoint u(static_cast<size_t>(s.dim));
    for (int i = 0; i < s.dim; ++i) {
        const auto& axis = s.axis_coords[static_cast<size_t>(i)];
        const Rational& xi = x[static_cast<size_t>(i)];
        auto it = std::upper_bound(axis.begin(), axis.end(), xi,
                                   [](const Rational& a, const BigInt& b) { return a < Rational(b); });
        size_t j = static_cast<size_t>(it - axis.begin());
        if (j == 0) j = 1;                       // xi == axis.front()
        if (j >= axis.size()) j = axis.size() - 1;  // xi == axis.back()
        Rational lo(axis[j - 1]), hi(axis[j]);
        Rational frac = (xi - lo) / (hi - lo);
        u[static_cast<size_t>(i)] = (Rational(static_cast<int>(j) - 1) + frac) / Rational(s.size - 1);
    }
    return u;
}

/// Exact inverse of pi_map for unit-cube points.
inline RationalPoint pi_preimage(const StretchedSet& s, const RationalPoint& u) {
    if (dim_of(u) != s.dim) throw DimensionMismatchError("point dimension mismatch");
    RationalPoint x(static_cast<size_t>(s.dim));
    for (int i = 0; i < s.dim; ++i) {
        const Rational& ui = u[static_cast<size_t>(i)];
        if (ui < 0 || ui > 1) throw DomainError("unit-cube coordinate outside [0,1]");
        Rational scaled = ui * Rational(s.size - 1);
        BigInt cell = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
        if (cell >= s.size - 1) cell = s.size - 2;  // u == 1 lands in the top cell
        size_t j = static_cast<size_t>(cell.convert_to<long>());
        Rational lo(s.axis_coords[static_cast<size_t>(i)][j]), hi(s.axis_coords[static_cast<size_t>(i)][j + 1]);
        Rational frac = scaled - Rational(static_cast<long>(j));
        x[static_cast<size_t>(i)] = lo + frac * (hi - lo);
    }
    return x;
}

/// Far apart: on every axis the smaller coordinate, multiplied by the axis
/// stretch factor, still does not exceed the larger one.
inline bool far_apart(const RationalPoint& a, const RationalPoint& b, const StretchedSet& s) {
    for (int i = 0; i < s.dim; ++i) {
        const Rational& x = a[static_cast<size_t>(i)];
        const Rational& y = b[static_cast<size_t>(i)];
        const Rational lo = x < y ? x : y;
        const Rational hi = x < y ? y : x;
        if (Rational(s.stretch[static_cast<size_t>(i)]) * lo > hi) return false;
    }
    return true;
}

/// One point per line, coordinates as exact decimal integers, space-separated.
inline void export_points(std::ostream& os, const StretchedSet& s) {
    for (const RationalPoint& p : s.points()) {
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) os << ' ';
            os << boost::multiprecision::numerator(p[i]);
        }
        os << '\n';
    }
}

}  // namespace stairconv
