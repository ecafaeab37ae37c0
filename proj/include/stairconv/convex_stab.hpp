#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stairconv/errors.hpp"
#include "stairconv/rational.hpp"

namespace stairconv {

namespace detail {

// An affine form c0 + sum coeffs[v] * var_v, constrained to be >= 0.
struct AffineGe0 {
    Rational c0;
    std::vector<Rational> coeffs;
};

// Fourier-Motzkin feasibility of a conjunction of affine >= 0 constraints
// over nvars real variables. Exact; only usable for the tiny systems the
// degenerate convex-oracle cases produce.
inline bool fourier_motzkin_feasible(std::vector<AffineGe0> cons, int nvars) {
    for (int v = nvars - 1; v >= 0; --v) {
        std::vector<AffineGe0> lower, upper, rest;
        for (auto& c : cons) {
            const Rational& a = c.coeffs[static_cast<size_t>(v)];
            if (a > 0) {
                lower.push_back(std::move(c));
            } else if (a < 0) {
                upper.push_back(std::move(c));
            } else {
                rest.push_back(std::move(c));
            }
        }
        for (const auto& L : lower) {
            for (const auto& U : upper) {
                // alpha > 0 in L, beta < 0 in U; alpha*U - beta*L has no v
                const Rational& alpha = L.coeffs[static_cast<size_t>(v)];
                const Rational& beta = U.coeffs[static_cast<size_t>(v)];
                AffineGe0 combo;
                combo.c0 = alpha * U.c0 - beta * L.c0;
                combo.coeffs.resize(static_cast<size_t>(v), 0);
                for (int j = 0; j < v; ++j) {
                    combo.coeffs[static_cast<size_t>(j)] =
                        alpha * U.coeffs[static_cast<size_t>(j)] - beta * L.coeffs[static_cast<size_t>(j)];
                }
                rest.push_back(std::move(combo));
            }
        }
        for (auto& c : rest) c.coeffs.resize(static_cast<size_t>(v));
        cons = std::move(rest);
    }
    for (const auto& c : cons) {
        if (c.c0 < 0) return false;
    }
    return true;
}

// Feasibility by reduced row echelon form over the rationals plus
// Fourier-Motzkin on whatever variables stay free. Total: handles any rank,
// any degeneracy. The matrix layout is rows = d coordinate equations plus
// the sum-to-one row, columns = lambda_1..lambda_n, t, rhs.
inline bool convex_stab_general(const RationalPoint& q, const RationalPoint& p,
                                const std::vector<RationalPoint>& Z) {
    int d = dim_of(q);
    int n = static_cast<int>(Z.size());
    int nv = n + 1;
    int nrows = d + 1;
    std::vector<std::vector<Rational>> M(static_cast<size_t>(nrows),
                                         std::vector<Rational>(static_cast<size_t>(nv) + 1, Rational(0)));
    for (int c = 0; c < d; ++c) {
        for (int i = 0; i < n; ++i) M[static_cast<size_t>(c)][static_cast<size_t>(i)] = Z[static_cast<size_t>(i)][static_cast<size_t>(c)];
        M[static_cast<size_t>(c)][static_cast<size_t>(n)] = q[static_cast<size_t>(c)] - p[static_cast<size_t>(c)];  // -(p-q)
        M[static_cast<size_t>(c)][static_cast<size_t>(nv)] = q[static_cast<size_t>(c)];
    }
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(d)][static_cast<size_t>(i)] = 1;
    M[static_cast<size_t>(d)][static_cast<size_t>(nv)] = 1;

    std::vector<int> pivot_of_col(static_cast<size_t>(nv), -1);
    int row = 0;
    for (int col = 0; col < nv && row < nrows; ++col) {
        int pr = -1;
        for (int r = row; r < nrows; ++r) {
            if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(M[static_cast<size_t>(pr)], M[static_cast<size_t>(row)]);
        Rational piv = M[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int j = col; j <= nv; ++j) M[static_cast<size_t>(row)][static_cast<size_t>(j)] /= piv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row) continue;
            Rational f = M[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j <= nv; ++j) {
                M[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * M[static_cast<size_t>(row)][static_cast<size_t>(j)];
            }
        }
        pivot_of_col[static_cast<size_t>(col)] = row;
        ++row;
    }
    for (int r = row; r < nrows; ++r) {
        if (M[static_cast<size_t>(r)][static_cast<size_t>(nv)] != 0) return false;  // 0 = nonzero
    }

    std::vector<int> free_cols;
    for (int col = 0; col < nv; ++col) {
        if (pivot_of_col[static_cast<size_t>(col)] < 0) free_cols.push_back(col);
    }

    // express each variable as an affine form over the free variables
    int nf = static_cast<int>(free_cols.size());
    auto var_form = [&](int col) {
        AffineGe0 form;
        form.coeffs.assign(static_cast<size_t>(nf), Rational(0));
        int pr = pivot_of_col[static_cast<size_t>(col)];
        if (pr < 0) {
            for (int k = 0; k < nf; ++k) {
                if (free_cols[static_cast<size_t>(k)] == col) form.coeffs[static_cast<size_t>(k)] = 1;
            }
        } else {
            form.c0 = M[static_cast<size_t>(pr)][static_cast<size_t>(nv)];
            for (int k = 0; k < nf; ++k) {
                form.coeffs[static_cast<size_t>(k)] = -M[static_cast<size_t>(pr)][static_cast<size_t>(free_cols[static_cast<size_t>(k)])];
            }
        }
        return form;
    };

    std::vector<AffineGe0> cons;
    for (int i = 0; i < n; ++i) cons.push_back(var_form(i));  // lambda_i >= 0
    AffineGe0 t_form = var_form(n);
    cons.push_back(t_form);  // t >= 0
    AffineGe0 one_minus_t;
    one_minus_t.c0 = 1 - t_form.c0;
    one_minus_t.coeffs.resize(static_cast<size_t>(nf));
    for (int k = 0; k < nf; ++k) one_minus_t.coeffs[static_cast<size_t>(k)] = -t_form.coeffs[static_cast<size_t>(k)];
    cons.push_back(std::move(one_minus_t));  // 1 - t >= 0

    if (nf == 0) {
        for (const auto& c : cons) {
            if (c.c0 < 0) return false;
        }
        return true;
    }
    return fourier_motzkin_feasible(std::move(cons), nf);
}

// Fast path for the square case |Z| = d: clear denominators row-wise and run
// fraction-free (Bareiss) forward elimination, so the bulk of the work is
// integer multiplication and exact division instead of normalized rational
// arithmetic. Returns nothing when the system is singular; the caller falls
// back to the general routine.
inline std::optional<bool> convex_stab_square(const RationalPoint& q, const RationalPoint& p,
                                              const std::vector<RationalPoint>& Z) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    int d = dim_of(q);
    int m = d + 1;               // rows and unknowns (lambda_1..lambda_d, t)
    int cols = m + 1;            // plus the right-hand side
    std::vector<std::vector<BigInt>> W(static_cast<size_t>(m), std::vector<BigInt>(static_cast<size_t>(cols)));

    std::vector<Rational> row(static_cast<size_t>(cols));
    for (int c = 0; c < d; ++c) {
        for (int i = 0; i < d; ++i) row[static_cast<size_t>(i)] = Z[static_cast<size_t>(i)][static_cast<size_t>(c)];
        row[static_cast<size_t>(d)] = q[static_cast<size_t>(c)] - p[static_cast<size_t>(c)];
        row[static_cast<size_t>(d) + 1] = q[static_cast<size_t>(c)];
        BigInt lcm = 1;
        for (const Rational& x : row) {
            BigInt den = denominator(x);
            lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        }
        for (int j = 0; j < cols; ++j) {
            const Rational& x = row[static_cast<size_t>(j)];
            W[static_cast<size_t>(c)][static_cast<size_t>(j)] = numerator(x) * (lcm / denominator(x));
        }
    }
    for (int i = 0; i < d; ++i) W[static_cast<size_t>(d)][static_cast<size_t>(i)] = 1;
    W[static_cast<size_t>(d)][static_cast<size_t>(d)] = 0;
    W[static_cast<size_t>(d)][static_cast<size_t>(d) + 1] = 1;

    BigInt prev_pivot = 1;
    for (int k = 0; k < m; ++k) {
        int pr = -1;
        for (int r = k; r < m; ++r) {
            if (W[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) return std::nullopt;  // singular; degenerate simplex
        std::swap(W[static_cast<size_t>(pr)], W[static_cast<size_t>(k)]);
        for (int r = k + 1; r < m; ++r) {
            for (int j = k + 1; j < cols; ++j) {
                W[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                    (W[static_cast<size_t>(r)][static_cast<size_t>(j)] * W[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                     W[static_cast<size_t>(r)][static_cast<size_t>(k)] * W[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
                    prev_pivot;
            }
            W[static_cast<size_t>(r)][static_cast<size_t>(k)] = 0;
        }
        prev_pivot = W[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }

    // back substitution on the upper-triangular system
    std::vector<Rational> w(static_cast<size_t>(m));
    for (int k = m - 1; k >= 0; --k) {
        Rational acc(W[static_cast<size_t>(k)][static_cast<size_t>(m)]);
        for (int j = k + 1; j < m; ++j) {
            acc -= Rational(W[static_cast<size_t>(k)][static_cast<size_t>(j)]) * w[static_cast<size_t>(j)];
        }
        w[static_cast<size_t>(k)] = acc / Rational(W[static_cast<size_t>(k)][static_cast<size_t>(k)]);
    }
    for (int i = 0; i < d; ++i) {
        if (w[static_cast<size_t>(i)] < 0) return false;  // lambda_i
    }
    const Rational& t = w[static_cast<size_t>(d)];
    return t >= 0 && t <= 1;
}

}  // namespace detail

/// Exact decision: does the closed segment qp meet conv(Z)? Solves the
/// rational feasibility system
///   exists lambda >= 0, sum lambda = 1, t in [0,1]:
///   sum_i lambda_i z_i = q + t (p - q).
/// Disjoint bounding boxes short-circuit to false; the square nonsingular
/// case runs fraction-free; rank-deficient (affinely degenerate) instances
/// fall back to rational elimination plus Fourier-Motzkin on the free
/// variables.
inline bool convex_stab_exact(const RationalPoint& q, const RationalPoint& p,
                              const std::vector<RationalPoint>& Z) {
    require_same_dim(q, p);
    if (Z.empty()) throw EmptyInputError("empty simplex vertex set");
    int d = dim_of(q);
    int n = static_cast<int>(Z.size());
    for (const auto& z : Z) require_same_dim(z, q);

    // bounding-box rejection: comparisons only, no arithmetic
    for (int c = 0; c < d; ++c) {
        const Rational& zfirst = Z[0][static_cast<size_t>(c)];
        const Rational* zlo = &zfirst;
        const Rational* zhi = &zfirst;
        for (int v = 1; v < n; ++v) {
            const Rational& zc = Z[static_cast<size_t>(v)][static_cast<size_t>(c)];
            if (zc < *zlo) zlo = &zc;
            if (zc > *zhi) zhi = &zc;
        }
        const Rational& slo = q[static_cast<size_t>(c)] < p[static_cast<size_t>(c)]
                                  ? q[static_cast<size_t>(c)]
                                  : p[static_cast<size_t>(c)];
        const Rational& shi = q[static_cast<size_t>(c)] < p[static_cast<size_t>(c)]
                                  ? p[static_cast<size_t>(c)]
                                  : q[static_cast<size_t>(c)];
        if (*zhi < slo || shi < *zlo) return false;
    }

    if (n == d) {
        if (auto decided = detail::convex_stab_square(q, p, Z)) return *decided;
    }
    return detail::convex_stab_general(q, p, Z);
}

}  // namespace stairconv
