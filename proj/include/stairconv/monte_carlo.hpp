#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <vector>

#include "stairconv/errors.hpp"
#include "stairconv/recfsd.hpp"
#include "stairconv/rng.hpp"
#include "stairconv/staircore.hpp"

namespace stairconv {

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    int64_t samples = 0;
    uint64_t seed = 0;
};

namespace detail {

// Shared scratch for the sampling loops: points 0,1 are the path endpoints,
// points 2..d+1 the simplex vertices. Rebuilding idx per sample is required
// because the decision kernel permutes it.
struct StabScratch {
    std::vector<Point> pts;
    std::vector<const Point*> ptrs;
    std::vector<unsigned char> side;
    std::vector<int> idx;

    StabScratch(const Point& q, const Point& p) {
        int d = dim_of(q);
        pts.assign(static_cast<size_t>(d) + 2, Point(static_cast<size_t>(d)));
        pts[0] = q;
        pts[1] = p;
        ptrs.resize(pts.size());
        side.resize(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            ptrs[i] = &pts[i];
            side[i] = i < 2 ? 0 : 1;
        }
        idx.resize(pts.size());
    }

    bool run(int d) {
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        return stair_hulls_meet_exact<double>(ptrs.data(), idx.data(), side.data(),
                                              static_cast<int>(ptrs.size()), d);
    }
};

inline void require_generic_pair(const Point& q, const Point& p) {
    for (size_t c = 0; c < q.size(); ++c) {
        if (q[c] == p[c]) {
            throw SharedCoordinateError("q and p share coordinate on axis " +
                                        std::to_string(c + 1));
        }
    }
}

// Runs `hit(scratch, rng_for_sample_i)` for every sample index, fanned out in
// contiguous blocks. Hit counts are integers, so the total is identical for
// any worker count; sample i always draws from the generator seeded by
// mix(seed, i).
template <class PerSample>
int64_t count_hits(const Point& q, const Point& p, int64_t samples, uint64_t seed,
                   unsigned threads, const PerSample& hit) {
    if (threads <= 1 || samples < 4096) {
        StabScratch scratch(q, p);
        int64_t hits = 0;
        for (int64_t i = 0; i < samples; ++i) {
            Xoshiro256 rng(mix_seed(seed, static_cast<uint64_t>(i)));
            hits += hit(scratch, rng) ? 1 : 0;
        }
        return hits;
    }
    int64_t block = (samples + threads - 1) / threads;
    std::vector<std::future<int64_t>> futs;
    for (unsigned w = 0; w < threads; ++w) {
        int64_t lo = static_cast<int64_t>(w) * block;
        int64_t hi = std::min(samples, lo + block);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
            StabScratch scratch(q, p);
            int64_t hits = 0;
            for (int64_t i = lo; i < hi; ++i) {
                Xoshiro256 rng(mix_seed(seed, static_cast<uint64_t>(i)));
                hits += hit(scratch, rng) ? 1 : 0;
            }
            return hits;
        }));
    }
    int64_t hits = 0;
    for (auto& f : futs) hits += f.get();
    return hits;
}

}  // namespace detail

/// Monte Carlo estimate of the stretched-grid stabbing measure: the fraction
/// of N stair-simplices with i.i.d. uniform vertices that meet the stair-path
/// qp. Tuples sharing a coordinate with the path (or internally) are redrawn.
/// Bit-reproducible for fixed (q, p, N, seed) regardless of the worker count:
/// sample i always uses the generator seeded by mix(seed, i).
inline McEstimate mc_estimate_recfsg(const Point& q, const Point& p, int64_t samples,
                                     uint64_t seed, unsigned threads = 1) {
    require_same_dim(q, p);
    require_unit_box(q);
    require_unit_box(p);
    detail::require_generic_pair(q, p);
    if (samples < 1) throw BudgetError("sample count must be positive");

    int d = dim_of(q);
    int64_t hits = detail::count_hits(
        q, p, samples, seed, threads, [d](detail::StabScratch& scratch, Xoshiro256& rng) {
            for (;;) {
                for (int v = 0; v < d; ++v) {
                    Point& z = scratch.pts[static_cast<size_t>(v) + 2];
                    for (int c = 0; c < d; ++c) z[static_cast<size_t>(c)] = rng.uniform01();
                }
                bool clash = false;
                for (int c = 0; c < d && !clash; ++c) {
                    for (int a = 0; a < d + 2 && !clash; ++a) {
                        for (int b = a + 1; b < d + 2 && !clash; ++b) {
                            if (a < 2 && b < 2) continue;  // q vs p pre-validated
                            clash = scratch.pts[static_cast<size_t>(a)][static_cast<size_t>(c)] ==
                                    scratch.pts[static_cast<size_t>(b)][static_cast<size_t>(c)];
                        }
                    }
                }
                if (!clash) break;
            }
            return scratch.run(d);
        });
    double r = static_cast<double>(hits) / static_cast<double>(samples);
    return {r, std::sqrt(r * (1.0 - r) / static_cast<double>(samples)), samples, seed};
}

/// Monte Carlo estimate of d! * FSD(q,p) for a condition-satisfying path:
/// each sample sorts d uniforms into an ascending tuple, spans the diagonal
/// stair-simplex on them and tests intersection with the stair-path.
inline McEstimate mc_estimate_fsd(const Point& q, const Point& p, int64_t samples,
                                  uint64_t seed, unsigned threads = 1) {
    require_diagonal_conditions(q, p);
    detail::require_generic_pair(q, p);
    if (samples < 1) throw BudgetError("sample count must be positive");

    int d = dim_of(q);
    std::vector<double> forbidden;
    forbidden.insert(forbidden.end(), q.begin(), q.end());
    forbidden.insert(forbidden.end(), p.begin(), p.end());

    int64_t hits = detail::count_hits(
        q, p, samples, seed, threads,
        [d, &forbidden](detail::StabScratch& scratch, Xoshiro256& rng) {
            thread_local std::vector<double> a;
            a.assign(static_cast<size_t>(d), 0.0);
            for (;;) {
                for (int v = 0; v < d; ++v) a[static_cast<size_t>(v)] = rng.uniform01();
                std::sort(a.begin(), a.end());
                bool clash = false;
                for (int v = 0; v < d && !clash; ++v) {
                    if (v + 1 < d && a[static_cast<size_t>(v)] == a[static_cast<size_t>(v) + 1]) clash = true;
                    for (double f : forbidden) {
                        if (a[static_cast<size_t>(v)] == f) {
                            clash = true;
                            break;
                        }
                    }
                }
                if (!clash) break;
            }
            for (int v = 0; v < d; ++v) {
                Point& z = scratch.pts[static_cast<size_t>(v) + 2];
                for (int c = 0; c < d; ++c) z[static_cast<size_t>(c)] = a[static_cast<size_t>(v)];
            }
            return scratch.run(d);
        });
    double r = static_cast<double>(hits) / static_cast<double>(samples);
    return {r, std::sqrt(r * (1.0 - r) / static_cast<double>(samples)), samples, seed};
}

}  // namespace stairconv
