#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "stairconv/errors.hpp"
#include "stairconv/geometry.hpp"
#include "stairconv/rational.hpp"

namespace stairconv {

// Stretched-diagonal machinery for the ascending sub-type of stair-paths:
//   p_1 <= p_2 <= ... <= p_d,   q_2 <= q_3 <= ... <= q_d <= q_1 = 1,
//   p_i <= q_i for all i.
// RecFSD is undefined outside these conditions; callers get a hard error
// naming the violated inequality.

template <class S>
void require_diagonal_conditions(const PointT<S>& q, const PointT<S>& p) {
    require_same_dim(q, p);
    int d = dim_of(q);
    if (d < 1) throw DimensionMismatchError("dimension must be >= 1");
    std::ostringstream why;
    if (q[0] != S(1)) {
        why << "q_1 = 1 violated (q_1=" << q[0] << ")";
        throw ConditionViolation(why.str());
    }
    for (int i = 1; i + 1 < d; ++i) {
        if (q[i] > q[i + 1]) {
            why << "q_" << (i + 1) << " <= q_" << (i + 2) << " violated (q_" << (i + 1)
                << "=" << q[i] << ", q_" << (i + 2) << "=" << q[i + 1] << ")";
            throw ConditionViolation(why.str());
        }
    }
    if (d >= 2 && q[d - 1] > S(1)) {
        why << "q_" << d << " <= q_1 = 1 violated (q_" << d << "=" << q[d - 1] << ")";
        throw ConditionViolation(why.str());
    }
    for (int i = 0; i + 1 < d; ++i) {
        if (p[i] > p[i + 1]) {
            why << "p_" << (i + 1) << " <= p_" << (i + 2) << " violated (p_" << (i + 1)
                << "=" << p[i] << ", p_" << (i + 2) << "=" << p[i + 1] << ")";
            throw ConditionViolation(why.str());
        }
    }
    for (int i = 0; i < d; ++i) {
        if (p[i] > q[i]) {
            why << "p_i <= q_i violated at i=" << (i + 1) << " (p_" << (i + 1) << "="
                << p[i] << ", q_" << (i + 1) << "=" << q[i] << ")";
            throw ConditionViolation(why.str());
        }
        if (p[i] < S(0) || p[i] > S(1) || q[i] < S(0) || q[i] > S(1)) {
            throw DomainError("coordinate outside [0,1]");
        }
    }
}

namespace detail {

template <class S>
S recfsd_impl(const S* q, const S* p, int k) {
    if (k == 2) return q[1] - p[0];
    // k = d+1 with d = k-1 >= 2
    int d = k - 1;
    S prod = p[0];
    for (int i = 2; i <= d - 1; ++i) prod = prod * (p[i - 1] - p[i - 2]);
    return (q[d - 1] - p[d - 1]) * prod + (q[k - 1] - q[d - 1]) * recfsd_impl(q, p, k - 1);
}

}  // namespace detail

/// RecFSD_d for d >= 2 under the ascending-diagonal conditions.
template <class S>
S recfsd(const PointT<S>& q, const PointT<S>& p) {
    require_diagonal_conditions(q, p);
    if (dim_of(q) < 2) throw DimensionMismatchError("recfsd requires dimension >= 2");
    return detail::recfsd_impl(q.data(), p.data(), dim_of(q));
}

/// FSD_d(q,p) = RecFSD_{d+1}(q x 1, p x 1): the measure of ordered diagonal
/// simplices whose stair hull meets the stair-path qp. The number of
/// diagonal simplices stabbed is FSD * n^d plus lower-order terms.
template <class S>
S fsd(const PointT<S>& q, const PointT<S>& p) {
    require_diagonal_conditions(q, p);
    PointT<S> ql = q, pl = p;
    ql.push_back(S(1));
    pl.push_back(S(1));
    if (dim_of(ql) < 2) throw DimensionMismatchError("fsd requires dimension >= 1");
    return detail::recfsd_impl(ql.data(), pl.data(), dim_of(ql));
}

struct DiagonalPathConfig {
    RationalPoint q;
    RationalPoint p;
    int dim = 0;
};

/// The explicit stair-path witnessing the diagonal lower bound:
/// q = (1, 3/(d+2), ..., (d+1)/(d+2)), p = (1/(d+2), ..., (d-1)/(d+2), (d-1)/(d+2)).
/// fsd on it equals 1/(d+2)^(d-1), exactly.
inline DiagonalPathConfig theorem2_path(int d) {
    if (d < 3) throw DomainError("theorem2_path requires dimension >= 3");
    Rational c(d + 2);
    RationalPoint q(static_cast<size_t>(d)), p(static_cast<size_t>(d));
    q[0] = 1;
    for (int i = 2; i <= d; ++i) q[static_cast<size_t>(i - 1)] = Rational(i + 1) / c;
    for (int i = 1; i <= d - 1; ++i) p[static_cast<size_t>(i - 1)] = Rational(i) / c;
    p[static_cast<size_t>(d - 1)] = Rational(d - 1) / c;
    return {q, p, d};
}

}  // namespace stairconv
