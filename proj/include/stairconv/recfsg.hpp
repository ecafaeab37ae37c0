#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "stairconv/errors.hpp"
#include "stairconv/geometry.hpp"
#include "stairconv/path_type.hpp"
#include "stairconv/staircore.hpp"

namespace stairconv {

inline constexpr double kFactorial[] = {1,    1,     2,      6,       24,
                                        120,  720,   5040,   40320,   362880,
                                        3628800};

namespace detail {

template <class S>
S ipow(const S& base, int exp) {
    S r(1);
    for (int i = 0; i < exp; ++i) r = r * base;
    return r;
}

// Probability that a random d-point stair-simplex in the unit cube meets the
// stair-path between q and p. At every level x is the endpoint with the
// larger current height and y the other. The first term covers simplices
// lying entirely below x but not below y; the second covers simplices whose
// top vertex is the global top, dropping that vertex and recursing one
// dimension down.
template <class S>
S recfsg_impl(const S* q, const S* p, int k) {
    const S* x = q;
    const S* y = p;
    if (p[k - 1] >= q[k - 1]) {
        x = p;
        y = q;
    }
    if (k == 1) return x[0] - y[0];
    S prod(1);
    for (int i = 1; i <= k - 1; ++i) {
        prod = prod * ipow(y[i - 1], i) * (S(1) - y[i - 1]);
    }
    S lead = S(kFactorial[k]) * (ipow(x[k - 1], k) - ipow(y[k - 1], k)) * prod;
    S rest = S(k) * (S(1) - x[k - 1]) * ipow(x[k - 1], k - 1) *
             recfsg_impl(q, p, k - 1);
    return lead + rest;
}

}  // namespace detail

/// RecFSG_d(q,p) for q,p in [0,1]^d: the stretched-grid stabbing measure.
/// Symmetric in (q,p); the constant that multiplies n^d is recfsg/d!.
template <class S>
S recfsg(const PointT<S>& q, const PointT<S>& p) {
    require_same_dim(q, p);
    for (const S& c : q) {
        if (c < S(0) || c > S(1)) throw DomainError("coordinate outside [0,1]");
    }
    for (const S& c : p) {
        if (c < S(0) || c > S(1)) throw DomainError("coordinate outside [0,1]");
    }
    if (q.size() > 10) throw DomainError("dimension above factorial table");
    return detail::recfsg_impl(q.data(), p.data(), dim_of(q));
}

/// Per-type objective over the 2d-2 free coordinates (boundary-extended
/// configuration), evaluated at scalar type S. Slot layout across q then p:
/// slot i in [0,d) is q_{i+1}, slot d+i is p_{i+1}. Outside the closed sign
/// pattern of T the evaluator returns 0.
template <class S>
std::function<S(std::span<const S>)> make_grid_evaluator(int d, PathType T) {
    if (d < 3) throw DomainError("grid objectives require dimension >= 3");
    if (T.dim != d || !T.normalized()) {
        throw DomainError("grid objective requires a normalized type");
    }
    int fixed_q_slot = T.empty() ? 0 : T.max_member() - 1;  // q_1=1 or q_maxT=0
    S fixed_q_value = T.empty() ? S(1) : S(0);
    double dfact = kFactorial[d];
    return [d, T, fixed_q_slot, fixed_q_value, dfact](std::span<const S> free_vars) -> S {
        PointT<S> q(static_cast<size_t>(d)), p(static_cast<size_t>(d));
        size_t at = 0;
        for (int i = 0; i < d; ++i) {
            if (i == fixed_q_slot) {
                q[static_cast<size_t>(i)] = fixed_q_value;
            } else {
                q[static_cast<size_t>(i)] = free_vars[at++];
            }
        }
        for (int i = 0; i < d - 1; ++i) p[static_cast<size_t>(i)] = free_vars[at++];
        p[static_cast<size_t>(d - 1)] = S(0);
        // feasibility clamp: the closed region where (q,p) realizes type T
        for (int j = 1; j <= d; ++j) {
            const S& qc = q[static_cast<size_t>(j - 1)];
            const S& pc = p[static_cast<size_t>(j - 1)];
            if (T.contains(j) ? (qc > pc) : (pc > qc)) return S(0);
        }
        return detail::recfsg_impl(q.data(), p.data(), d) / S(dfact);
    };
}

/// A box-constrained maximization problem assembled from a boundary-extended
/// grid type. `ordering` lists the (lower slot, higher slot) pairs implied by
/// the type over the combined q/p slot layout.
struct ObjectiveSpec {
    int dim = 0;
    PathType type;
    std::vector<std::pair<int, double>> fixed;      // (slot, value), two entries
    std::vector<int> free_slots;                    // 2d-2 slots, ascending
    std::vector<std::pair<int, int>> ordering;      // value[first] <= value[second]
    std::function<double(std::span<const double>)> evaluator;  // over free vector
};

inline ObjectiveSpec grid_objective(int d, PathType T) {
    ObjectiveSpec spec;
    spec.dim = d;
    spec.type = T;
    spec.evaluator = make_grid_evaluator<double>(d, T);
    int fixed_q_slot = T.empty() ? 0 : T.max_member() - 1;
    double fixed_q_value = T.empty() ? 1.0 : 0.0;
    spec.fixed = {{fixed_q_slot, fixed_q_value}, {2 * d - 1, 0.0}};
    for (int s = 0; s < 2 * d; ++s) {
        if (s != fixed_q_slot && s != 2 * d - 1) spec.free_slots.push_back(s);
    }
    for (int j = 1; j <= d; ++j) {
        int qs = j - 1, ps = d + j - 1;
        if (T.contains(j)) {
            spec.ordering.emplace_back(qs, ps);
        } else {
            spec.ordering.emplace_back(ps, qs);
        }
    }
    return spec;
}

/// Helper for tests and the CLI: assemble the free vector of grid_objective
/// from full q,p coordinates (must respect the fixed slots).
inline std::vector<double> grid_free_vector(int d, PathType T, const Point& q, const Point& p) {
    ObjectiveSpec spec = grid_objective(d, T);
    std::vector<double> full(static_cast<size_t>(2 * d));
    for (int i = 0; i < d; ++i) full[static_cast<size_t>(i)] = q[static_cast<size_t>(i)];
    for (int i = 0; i < d; ++i) full[static_cast<size_t>(d + i)] = p[static_cast<size_t>(i)];
    std::vector<double> free_vars;
    free_vars.reserve(spec.free_slots.size());
    for (int s : spec.free_slots) free_vars.push_back(full[static_cast<size_t>(s)]);
    return free_vars;
}

/// The constant multiplying n^d for a stair-path: recfsg(q,p)/d!.
template <class S>
S grid_constant(const PointT<S>& q, const PointT<S>& p) {
    S value = recfsg<S>(q, p);  // validates dimension and domain
    return value / S(kFactorial[q.size()]);
}

/// Product of the d+1 type-region volumes of a: the point-stabbing (k = 0)
/// objective whose maximum over the cube is (d+1)^-(d+1).
inline double fsl_objective(const Point& a) {
    std::vector<double> v = type_region_volumes(a);
    double prod = 1.0;
    for (double x : v) prod *= x;
    return prod;
}

}  // namespace stairconv
