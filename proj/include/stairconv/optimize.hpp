#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "stairconv/diag3.hpp"
#include "stairconv/errors.hpp"
#include "stairconv/recfsg.hpp"
#include "stairconv/rng.hpp"

namespace stairconv {

enum class Method { de, nelder_mead, simulated_annealing, random_search };

inline std::string method_name(Method m) {
    switch (m) {
        case Method::de: return "de";
        case Method::nelder_mead: return "nelder_mead";
        case Method::simulated_annealing: return "simulated_annealing";
        case Method::random_search: return "random_search";
    }
    return "?";
}

inline Method method_from_name(const std::string& s) {
    if (s == "de") return Method::de;
    if (s == "nelder_mead") return Method::nelder_mead;
    if (s == "simulated_annealing") return Method::simulated_annealing;
    if (s == "random_search") return Method::random_search;
    throw DomainError("unknown method: " + s);
}

struct OptProblem {
    std::function<double(std::span<const double>)> evaluator;
    std::vector<double> lo;
    std::vector<double> hi;

    int n_vars() const { return static_cast<int>(lo.size()); }
};

struct OptResult {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<double> argmax;
    int64_t evaluations = 0;
    Method method = Method::de;
    uint64_t seed = 0;
    double wall_ms = 0.0;
};

inline OptProblem make_opt_problem(const ObjectiveSpec& spec) {
    int n = static_cast<int>(spec.free_slots.size());
    return OptProblem{spec.evaluator, std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
}

/// Closed-box extension of the point-stabbing product objective; the open-cube
/// domain error of fsl_objective becomes a continuous 0 on the boundary.
inline OptProblem fsl_problem(int d) {
    if (d < 1) throw DomainError("dimension must be >= 1");
    auto eval = [](std::span<const double> a) -> double {
        for (double c : a) {
            if (c <= 0.0 || c >= 1.0) return 0.0;
        }
        return fsl_objective(Point(a.begin(), a.end()));
    };
    return OptProblem{eval, std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)};
}

namespace detail {

/// Reflects a proposal into the closed box; proposals at most one box-width
/// outside need a single fold, anything further falls back to clamping.
inline double reflect_into_box(double x, double lo, double hi) {
    if (lo == hi) return lo;
    for (int it = 0; it < 8 && (x < lo || x > hi); ++it) {
        if (x < lo) x = lo + (lo - x);
        if (x > hi) x = hi - (x - hi);
    }
    return std::clamp(x, lo, hi);
}

class Eval {
public:
    Eval(const OptProblem& prob, int64_t budget) : prob_(prob), budget_(budget) {}

    bool exhausted() const { return count_ >= budget_; }
    int64_t count() const { return count_; }
    double best_value() const { return best_value_; }
    const std::vector<double>& best_point() const { return best_point_; }

    double operator()(const std::vector<double>& x) {
        ++count_;
        double f = prob_.evaluator(x);
        if (!std::isfinite(f)) {
            throw EvaluationError("evaluator returned a non-finite value");
        }
        if (f > best_value_) {
            best_value_ = f;
            best_point_ = x;
        }
        return f;
    }

private:
    const OptProblem& prob_;
    int64_t budget_;
    int64_t count_ = 0;
    double best_value_ = -std::numeric_limits<double>::infinity();
    std::vector<double> best_point_;
};

// rand/1/bin differential evolution, maximizing. The per-member random
// streams are derived from (seed, generation, member), so a parallel
// population evaluation would produce the very same trajectory.
inline void de_maximize(const OptProblem& prob, uint64_t seed, int64_t budget, Eval& ev) {
    int n = prob.n_vars();
    int pop = 20 * n;
    if (budget < pop) throw BudgetError("budget smaller than the population size");

    std::vector<std::vector<double>> xs(pop, std::vector<double>(n));
    std::vector<double> fs(pop);
    for (int i = 0; i < pop; ++i) {
        Xoshiro256 rng(mix_seed(seed, 0, static_cast<uint64_t>(i)));
        for (int j = 0; j < n; ++j) xs[i][j] = rng.uniform(prob.lo[j], prob.hi[j]);
        fs[i] = ev(xs[i]);
    }

    constexpr double kCrossover = 0.9;
    constexpr double kStagnationTol = 1e-12;
    constexpr int kStagnationPatience = 200;

    double last_best = ev.best_value();
    int stagnant = 0;
    std::vector<double> trial(n);
    for (uint64_t gen = 1; !ev.exhausted(); ++gen) {
        Xoshiro256 gen_rng(mix_seed(seed, gen, 0xffffffffULL));
        double weight = 0.5 + 0.5 * gen_rng.uniform01();  // dithered per generation
        for (int i = 0; i < pop && !ev.exhausted(); ++i) {
            Xoshiro256 rng(mix_seed(seed, gen, static_cast<uint64_t>(i)));
            int r1, r2, r3;
            do { r1 = static_cast<int>(rng.below(pop)); } while (r1 == i);
            do { r2 = static_cast<int>(rng.below(pop)); } while (r2 == i || r2 == r1);
            do { r3 = static_cast<int>(rng.below(pop)); } while (r3 == i || r3 == r1 || r3 == r2);
            int j_rand = static_cast<int>(rng.below(n));
            for (int j = 0; j < n; ++j) {
                if (j == j_rand || rng.uniform01() < kCrossover) {
                    double v = xs[r1][j] + weight * (xs[r2][j] - xs[r3][j]);
                    trial[j] = reflect_into_box(v, prob.lo[j], prob.hi[j]);
                } else {
                    trial[j] = xs[i][j];
                }
            }
            double ft = ev(trial);
            if (ft >= fs[i]) {  // accept ties so the population drifts off plateaus
                xs[i] = trial;
                fs[i] = ft;
            }
        }
        if (ev.best_value() > last_best + kStagnationTol) {
            last_best = ev.best_value();
            stagnant = 0;
        } else if (++stagnant >= kStagnationPatience) {
            break;
        }
    }
}

// One Nelder-Mead descent (maximizing) from a given start, budget-capped.
inline void nelder_mead_single(const OptProblem& prob, const std::vector<double>& start,
                               int64_t local_budget, Eval& ev, double f_tol) {
    int n = prob.n_vars();
    int m = n + 1;
    std::vector<std::vector<double>> x(m, start);
    std::vector<double> f(m);
    for (int j = 0; j < n; ++j) {
        double step = 0.05 * (prob.hi[j] - prob.lo[j]);
        if (step == 0.0) step = 0.05;
        x[j + 1][j] = reflect_into_box(start[j] + step, prob.lo[j], prob.hi[j]);
        if (x[j + 1][j] == start[j]) x[j + 1][j] = reflect_into_box(start[j] - step, prob.lo[j], prob.hi[j]);
    }
    int64_t used = 0;
    auto feval = [&](const std::vector<double>& pt) {
        ++used;
        return ev(pt);
    };
    for (int i = 0; i < m; ++i) f[i] = feval(x[i]);

    std::vector<int> ord(m);
    std::vector<double> c(n), xr(n), xe(n), xc(n);
    while (used + 2 <= local_budget && !ev.exhausted()) {
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return f[a] > f[b]; });
        int best = ord[0], lousy = ord[m - 2], worst = ord[m - 1];
        if (f[best] - f[worst] <= f_tol * (std::fabs(f[best]) + 1.0)) break;

        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int i = 0; i < m; ++i) {
                if (i != worst) s += x[i][j];
            }
            c[j] = s / n;
        }
        auto propose = [&](double coef, std::vector<double>& out) {
            for (int j = 0; j < n; ++j) {
                out[j] = reflect_into_box(c[j] + coef * (c[j] - x[worst][j]), prob.lo[j], prob.hi[j]);
            }
        };
        propose(1.0, xr);
        double fr = feval(xr);
        if (fr > f[best]) {
            propose(2.0, xe);
            double fe = feval(xe);
            if (fe > fr) {
                x[worst] = xe;
                f[worst] = fe;
            } else {
                x[worst] = xr;
                f[worst] = fr;
            }
        } else if (fr > f[lousy]) {
            x[worst] = xr;
            f[worst] = fr;
        } else {
            bool shrink = false;
            if (fr > f[worst]) {
                for (int j = 0; j < n; ++j) {
                    xc[j] = reflect_into_box(c[j] + 0.5 * (xr[j] - c[j]), prob.lo[j], prob.hi[j]);
                }
                double fc = feval(xc);
                if (fc >= fr) {
                    x[worst] = xc;
                    f[worst] = fc;
                } else {
                    shrink = true;
                }
            } else {
                for (int j = 0; j < n; ++j) xc[j] = 0.5 * (c[j] + x[worst][j]);
                double fc = feval(xc);
                if (fc > f[worst]) {
                    x[worst] = xc;
                    f[worst] = fc;
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (int i = 0; i < m; ++i) {
                    if (i == best) continue;
                    for (int j = 0; j < n; ++j) x[i][j] = x[best][j] + 0.5 * (x[i][j] - x[best][j]);
                    f[i] = feval(x[i]);
                    if (used + 2 > local_budget || ev.exhausted()) return;
                }
            }
        }
    }
}

// Multistart Nelder-Mead: Latin-hypercube start points, each start gets an
// equal share of the budget. Single-start simplex descent is local; the
// multistart is what makes this usable on the clamped objectives.
inline void nelder_mead_maximize(const OptProblem& prob, uint64_t seed, int64_t budget, Eval& ev) {
    int n = prob.n_vars();
    constexpr int kStarts = 64;
    if (budget < kStarts * (n + 2)) throw BudgetError("budget smaller than the multistart cost");

    std::vector<std::vector<int>> perm(n, std::vector<int>(kStarts));
    for (int j = 0; j < n; ++j) {
        Xoshiro256 rng(mix_seed(seed, 0xabcdef, static_cast<uint64_t>(j)));
        std::iota(perm[j].begin(), perm[j].end(), 0);
        for (int i = kStarts - 1; i > 0; --i) {
            int k = static_cast<int>(rng.below(static_cast<uint64_t>(i + 1)));
            std::swap(perm[j][i], perm[j][k]);
        }
    }
    int64_t share = budget / kStarts;
    for (int s = 0; s < kStarts && !ev.exhausted(); ++s) {
        Xoshiro256 rng(mix_seed(seed, 0x5eed, static_cast<uint64_t>(s)));
        std::vector<double> start(n);
        for (int j = 0; j < n; ++j) {
            double cell = (perm[j][s] + rng.uniform01()) / kStarts;
            start[j] = prob.lo[j] + cell * (prob.hi[j] - prob.lo[j]);
        }
        nelder_mead_single(prob, start, share, ev, 1e-15);
    }
}

inline void simulated_annealing_maximize(const OptProblem& prob, uint64_t seed,
                                         int64_t budget, Eval& ev) {
    int n = prob.n_vars();
    if (budget < 64) throw BudgetError("budget too small for annealing");
    Xoshiro256 rng(mix_seed(seed, 0x5a5a));

    std::vector<double> x(n), cand(n);
    for (int j = 0; j < n; ++j) x[j] = rng.uniform(prob.lo[j], prob.hi[j]);
    double fx = ev(x);

    // temperature scale from a short random probe of the landscape
    double fmin = fx, fmax = fx;
    for (int i = 0; i < 32 && !ev.exhausted(); ++i) {
        for (int j = 0; j < n; ++j) cand[j] = rng.uniform(prob.lo[j], prob.hi[j]);
        double f = ev(cand);
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
        if (f > fx) {
            x = cand;
            fx = f;
        }
    }
    const double t0 = std::max(1e-9, (fmax - fmin) / 3.0);
    constexpr double kCooling = 0.995;
    constexpr int kStagnationLimit = 2000;

    double t = t0;
    double reheat = 1.0;
    int since_best = 0;
    while (!ev.exhausted()) {
        for (int j = 0; j < n; ++j) {
            double scale = 0.1 * (prob.hi[j] - prob.lo[j]);
            cand[j] = reflect_into_box(x[j] + scale * rng.gaussian(), prob.lo[j], prob.hi[j]);
        }
        double before_best = ev.best_value();
        double f = ev(cand);
        double delta = f - fx;
        if (delta >= 0.0 || rng.uniform01() < std::exp(delta / std::max(t, 1e-300))) {
            x = cand;
            fx = f;
        }
        t *= kCooling;
        if (ev.best_value() > before_best) {
            since_best = 0;
        } else if (++since_best >= kStagnationLimit) {
            // re-anneal from the incumbent best at a halved starting temperature
            reheat *= 0.5;
            t = t0 * reheat;
            x = ev.best_point();
            fx = ev.best_value();
            since_best = 0;
        }
    }
}

inline void random_search_maximize(const OptProblem& prob, uint64_t seed,
                                   int64_t budget, Eval& ev) {
    int n = prob.n_vars();
    if (budget < 1) throw BudgetError("budget must be positive");
    std::vector<double> x(n);
    for (int64_t i = 0; !ev.exhausted(); ++i) {
        Xoshiro256 rng(mix_seed(seed, static_cast<uint64_t>(i)));
        for (int j = 0; j < n; ++j) x[j] = rng.uniform(prob.lo[j], prob.hi[j]);
        ev(x);
    }
}

}  // namespace detail

/// Box-constrained global maximization. Deterministic in (method, seed,
/// budget); the returned value is the best over the full evaluation history.
inline OptResult maximize(const OptProblem& prob, Method method, uint64_t seed, int64_t budget) {
    if (prob.n_vars() < 1) throw DomainError("problem must have at least one variable");
    for (int j = 0; j < prob.n_vars(); ++j) {
        if (!(prob.lo[j] <= prob.hi[j])) throw DomainError("invalid box bounds");
    }
    auto t_start = std::chrono::steady_clock::now();
    detail::Eval ev(prob, budget);
    switch (method) {
        case Method::de: detail::de_maximize(prob, seed, budget, ev); break;
        case Method::nelder_mead: detail::nelder_mead_maximize(prob, seed, budget, ev); break;
        case Method::simulated_annealing:
            detail::simulated_annealing_maximize(prob, seed, budget, ev);
            break;
        case Method::random_search: detail::random_search_maximize(prob, seed, budget, ev); break;
    }
    auto t_end = std::chrono::steady_clock::now();
    OptResult res;
    res.value = ev.best_value();
    res.argmax = ev.best_point();
    res.evaluations = ev.count();
    res.method = method;
    res.seed = seed;
    res.wall_ms = std::chrono::duration<double, std::milli>(t_end - t_start).count();
    return res;
}

enum class Family { grid, diag3, fsl };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::grid: return "grid";
        case Family::diag3: return "diag3";
        case Family::fsl: return "fsl";
    }
    return "?";
}

struct TypeResult {
    std::string label;   // "{2,3}" for grid types, "F7" for catalog entries
    PathType type;       // meaningful for grid and diag3
    int objective_id = 0;  // nonzero for diag3
    OptResult result;
};

inline int64_t default_budget(Family family, int d) {
    if (family == Family::grid && d >= 6) return 2'000'000;
    return 200'000;
}

inline unsigned default_thread_count() {
    if (const char* env = std::getenv("STAIRCONV_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// One maximization per normalized grid type (or per catalog objective for
/// the d=3 diagonal). Types may run on parallel workers; the per-type seeds
/// are derived from (seed, index), so results do not depend on scheduling.
inline std::vector<TypeResult> maximize_all_types(int d, Family family, Method method,
                                                  uint64_t seed, int64_t budget_per_type = 0,
                                                  unsigned threads = 0) {
    if (budget_per_type <= 0) budget_per_type = default_budget(family, d);
    if (threads == 0) threads = default_thread_count();

    std::vector<TypeResult> out;
    std::vector<OptProblem> problems;
    if (family == Family::grid) {
        if (d < 3) throw DomainError("grid maximization requires dimension >= 3");
        for (const PathType& t : enumerate_types(d)) {
            out.push_back(TypeResult{t.to_string(), t, 0, {}});
            problems.push_back(make_opt_problem(grid_objective(d, t)));
        }
    } else if (family == Family::diag3) {
        if (d != 3) throw DomainError("the diagonal catalog is dimension 3 only");
        for (const Diag3Objective& f : diag3_catalog()) {
            out.push_back(TypeResult{"F" + std::to_string(f.id), f.type, f.id, {}});
            const Diag3Objective* obj = &f;
            auto eval = [obj](std::span<const double> v) { return obj->evaluate(v); };
            problems.push_back(
                OptProblem{eval, std::vector<double>(4, 0.0), std::vector<double>(4, 1.0)});
        }
    } else {
        throw DomainError("maximize_all_types supports grid and diag3 families");
    }

    auto run_one = [&](size_t i) {
        uint64_t type_seed = mix_seed(seed, 0x7f7e, i + 1);
        out[i].result = maximize(problems[i], method, type_seed, budget_per_type);
    };
    if (threads <= 1 || out.size() <= 1) {
        for (size_t i = 0; i < out.size(); ++i) run_one(i);
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= out.size()) break;
                run_one(i);
            }
        };
        for (unsigned t = 0; t < std::min<unsigned>(threads, out.size()); ++t) {
            futs.push_back(std::async(std::launch::async, worker));
        }
        for (auto& f : futs) f.get();
    }
    return out;
}

inline const TypeResult& best_of(const std::vector<TypeResult>& results) {
    if (results.empty()) throw EmptyInputError("no results");
    const TypeResult* best = &results.front();
    for (const auto& r : results) {
        if (r.result.value > best->result.value) best = &r;
    }
    return *best;
}

/// Local refinement at scalar type S (long double for the extended-precision
/// probes): restarted Nelder-Mead descents with shrinking initial radii,
/// started from x0. Returns the refined (value, argmax).
template <class S>
std::pair<S, std::vector<S>> nelder_mead_refine(
    const std::function<S(std::span<const S>)>& evaluator, const std::vector<S>& lo,
    const std::vector<S>& hi, const std::vector<S>& x0, int rounds = 6,
    int iters_per_round = 4000) {
    int n = static_cast<int>(x0.size());
    int m = n + 1;
    const S eps = std::numeric_limits<S>::epsilon();

    auto clampv = [&](std::vector<S>& v) {
        for (int j = 0; j < n; ++j) v[j] = std::clamp(v[j], lo[j], hi[j]);
    };
    std::vector<S> best_x = x0;
    clampv(best_x);
    S best_f = evaluator(best_x);

    S radius = S(1) / S(64);
    for (int round = 0; round < rounds; ++round, radius /= S(128)) {
        std::vector<std::vector<S>> x(m, best_x);
        std::vector<S> f(m);
        for (int j = 0; j < n; ++j) {
            S step = radius * (hi[j] - lo[j]);
            x[j + 1][j] = best_x[j] + step <= hi[j] ? best_x[j] + step : best_x[j] - step;
            x[j + 1][j] = std::clamp(x[j + 1][j], lo[j], hi[j]);
        }
        for (int i = 0; i < m; ++i) f[i] = evaluator(x[i]);

        std::vector<int> ord(m);
        std::vector<S> c(n), xr(n), xe(n), xc(n);
        for (int it = 0; it < iters_per_round; ++it) {
            std::iota(ord.begin(), ord.end(), 0);
            std::sort(ord.begin(), ord.end(), [&](int a, int b) { return f[a] > f[b]; });
            int best = ord[0], lousy = ord[m - 2], worst = ord[m - 1];
            if (f[best] - f[worst] <= eps * (S(4) + S(4) * (f[best] < 0 ? -f[best] : f[best]))) break;
            for (int j = 0; j < n; ++j) {
                S s = 0;
                for (int i = 0; i < m; ++i) {
                    if (i != worst) s += x[i][j];
                }
                c[j] = s / S(n);
            }
            auto propose = [&](S coef, std::vector<S>& outp) {
                for (int j = 0; j < n; ++j) {
                    outp[j] = std::clamp(c[j] + coef * (c[j] - x[worst][j]), lo[j], hi[j]);
                }
            };
            propose(S(1), xr);
            S fr = evaluator(xr);
            if (fr > f[best]) {
                propose(S(2), xe);
                S fe = evaluator(xe);
                if (fe > fr) {
                    x[worst] = xe;
                    f[worst] = fe;
                } else {
                    x[worst] = xr;
                    f[worst] = fr;
                }
            } else if (fr > f[lousy]) {
                x[worst] = xr;
                f[worst] = fr;
            } else if (fr > f[worst]) {
                for (int j = 0; j < n; ++j) xc[j] = c[j] + (xr[j] - c[j]) / S(2);
                S fc = evaluator(xc);
                if (fc >= fr) {
                    x[worst] = xc;
                    f[worst] = fc;
                } else {
                    for (int i = 0; i < m; ++i) {
                        if (i == best) continue;
                        for (int j = 0; j < n; ++j) x[i][j] = x[best][j] + (x[i][j] - x[best][j]) / S(2);
                        f[i] = evaluator(x[i]);
                    }
                }
            } else {
                for (int j = 0; j < n; ++j) xc[j] = (c[j] + x[worst][j]) / S(2);
                S fc = evaluator(xc);
                if (fc > f[worst]) {
                    x[worst] = xc;
                    f[worst] = fc;
                } else {
                    for (int i = 0; i < m; ++i) {
                        if (i == best) continue;
                        for (int j = 0; j < n; ++j) x[i][j] = x[best][j] + (x[i][j] - x[best][j]) / S(2);
                        f[i] = evaluator(x[i]);
                    }
                }
            }
        }
        for (int i = 0; i < m; ++i) {
            if (f[i] > best_f) {
                best_f = f[i];
                best_x = x[i];
            }
        }
    }
    return {best_f, best_x};
}

}  // namespace stairconv
