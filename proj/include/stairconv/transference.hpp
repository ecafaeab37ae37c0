#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "stairconv/convex_stab.hpp"
#include "stairconv/errors.hpp"
#include "stairconv/rng.hpp"
#include "stairconv/staircore.hpp"
#include "stairconv/stretched.hpp"

namespace stairconv {

/// One randomly generated far-apart instance on a stretched grid: a segment
/// (q, p) in the bounding box and a d-subset Z of grid points, with every
/// (endpoint, grid point) pair far apart and no two points of the instance
/// sharing a coordinate value on any axis.
struct TransferenceInstance {
    RationalPoint q;
    RationalPoint p;
    std::vector<RationalPoint> Z;
};

/// Per axis, the endpoints either sit on two distinct grid layers (long
/// segments; the minimal-growth grid makes consecutive layers exactly
/// far apart) or at two generic rational positions inside one elementary
/// cell (a strictly interior point can be far from every layer except the
/// two bounding its cell). The simplex layers avoid the blocked layers,
/// which makes far-apartness hold by construction; it is still verified.
inline TransferenceInstance random_far_apart_instance(const StretchedSet& s, uint64_t seed,
                                                      uint64_t index) {
    int d = s.dim;
    int m = s.size;
    if (m - 2 < d) throw DomainError("grid too small for a far-apart instance");
    Xoshiro256 rng(mix_seed(seed, 0xfa4, index));

    TransferenceInstance inst;
    inst.q.resize(static_cast<size_t>(d));
    inst.p.resize(static_cast<size_t>(d));
    std::vector<std::vector<int>> layer_choice(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        const auto& axis = s.axis_coords[static_cast<size_t>(i)];
        std::vector<int> blocked;
        bool layer_mode = rng.below(2) == 0;
        if (layer_mode) {
            int lq = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
            int lp = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
            while (lp == lq) lp = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
            inst.q[static_cast<size_t>(i)] = axis[static_cast<size_t>(lq)];
            inst.p[static_cast<size_t>(i)] = axis[static_cast<size_t>(lp)];
            blocked = {lq, lp};
        } else {
            int cell = static_cast<int>(rng.below(static_cast<uint64_t>(m - 1)));
            constexpr uint64_t kDen = 1u << 20;
            uint64_t n1 = 1 + rng.below(kDen - 2);
            uint64_t n2 = 1 + rng.below(kDen - 2);
            while (n2 == n1) n2 = 1 + rng.below(kDen - 2);
            Rational lo(axis[static_cast<size_t>(cell)]), hi(axis[static_cast<size_t>(cell) + 1]);
            inst.q[static_cast<size_t>(i)] = lo + Rational(n1, kDen) * (hi - lo);
            inst.p[static_cast<size_t>(i)] = lo + Rational(n2, kDen) * (hi - lo);
            blocked = {cell, cell + 1};
        }
        auto& avail = layer_choice[static_cast<size_t>(i)];
        for (int l = 0; l < m; ++l) {
            if (std::find(blocked.begin(), blocked.end(), l) == blocked.end()) avail.push_back(l);
        }
        for (int k = static_cast<int>(avail.size()) - 1; k > 0; --k) {
            int j = static_cast<int>(rng.below(static_cast<uint64_t>(k + 1)));
            std::swap(avail[static_cast<size_t>(k)], avail[static_cast<size_t>(j)]);
        }
    }
    inst.Z.assign(static_cast<size_t>(d), RationalPoint(static_cast<size_t>(d)));
    for (int v = 0; v < d; ++v) {
        for (int i = 0; i < d; ++i) {
            inst.Z[static_cast<size_t>(v)][static_cast<size_t>(i)] =
                s.axis_coords[static_cast<size_t>(i)][static_cast<size_t>(layer_choice[static_cast<size_t>(i)][static_cast<size_t>(v)])];
        }
    }
    for (const auto& z : inst.Z) {
        if (!far_apart(inst.q, z, s) || !far_apart(inst.p, z, s)) {
            throw DomainError("generated instance is not far apart");  // construction bug guard
        }
    }
    return inst;
}

struct TransferenceReport {
    int64_t instances = 0;
    int64_t intersecting = 0;
    int64_t mismatches = 0;
};

/// Runs `count` random far-apart instances and compares the exact convex
/// decision in the bounding box against the stair decision on the images
/// under the order-preserving map. The two must agree on every instance.
inline TransferenceReport transference_check(const StretchedSet& s, int64_t count, uint64_t seed) {
    TransferenceReport rep;
    for (int64_t i = 0; i < count; ++i) {
        TransferenceInstance inst = random_far_apart_instance(s, seed, static_cast<uint64_t>(i));
        bool convex = convex_stab_exact(inst.q, inst.p, inst.Z);
        PointSetT<Rational> Yu{pi_map(s, inst.q), pi_map(s, inst.p)};
        PointSetT<Rational> Zu;
        Zu.reserve(inst.Z.size());
        for (const auto& z : inst.Z) Zu.push_back(pi_map(s, z));
        bool stair = stconv_intersect<Rational>(Yu, Zu);
        ++rep.instances;
        if (convex) ++rep.intersecting;
        if (convex != stair) ++rep.mismatches;
    }
    return rep;
}

}  // namespace stairconv
