#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stairconv/errors.hpp"
#include "stairconv/geometry.hpp"
#include "stairconv/path_type.hpp"

namespace stairconv {

// The fifteen degree-3 polynomials covering every stair-path type of the
// three-dimensional stretched diagonal, each valid on its own chain of
// coordinate inequalities and clamped to 0 outside the closed chain.
//
// Symbols: a configuration is (q1,q2,q3,p1,p2) with p3 = 0 throughout; each
// objective fixes one further coordinate (q1 = 1, q1 = 0, or q2 = 0) and
// varies the remaining four.

enum class Diag3Sym : int { Zero = 0, One = 1, Q1 = 2, Q2 = 3, Q3 = 4, P1 = 5, P2 = 6 };

struct Diag3Vars {
    double q1 = 0, q2 = 0, q3 = 0, p1 = 0, p2 = 0;

    double get(Diag3Sym s) const {
        switch (s) {
            case Diag3Sym::Zero: return 0.0;
            case Diag3Sym::One: return 1.0;
            case Diag3Sym::Q1: return q1;
            case Diag3Sym::Q2: return q2;
            case Diag3Sym::Q3: return q3;
            case Diag3Sym::P1: return p1;
            case Diag3Sym::P2: return p2;
        }
        return 0.0;
    }
};

inline std::string diag3_sym_name(Diag3Sym s) {
    switch (s) {
        case Diag3Sym::Zero: return "0";
        case Diag3Sym::One: return "1";
        case Diag3Sym::Q1: return "q1";
        case Diag3Sym::Q2: return "q2";
        case Diag3Sym::Q3: return "q3";
        case Diag3Sym::P1: return "p1";
        case Diag3Sym::P2: return "p2";
    }
    return "?";
}

struct Diag3Objective {
    int id = 0;                       // 1..15
    PathType type;                    // path-type tag in dimension 3
    Diag3Sym fixed_sym = Diag3Sym::Q1;
    double fixed_value = 1.0;
    std::array<Diag3Sym, 4> free_syms{};  // order of the free vector
    // domain: conjunction of value(first) < value(second), stored in chain order
    std::vector<std::pair<Diag3Sym, Diag3Sym>> domain;
    std::function<double(const Diag3Vars&)> body;

    bool in_closed_domain(const Diag3Vars& v) const {
        for (const auto& [lo, hi] : domain) {
            if (v.get(lo) > v.get(hi)) return false;
        }
        return true;
    }

    Diag3Vars assemble(std::span<const double> free_vars) const {
        Diag3Vars v;
        set(v, fixed_sym, fixed_value);
        for (size_t i = 0; i < free_syms.size(); ++i) set(v, free_syms[i], free_vars[i]);
        return v;
    }

    /// Clamped evaluator over the 4 free variables.
    double evaluate(std::span<const double> free_vars) const {
        Diag3Vars v = assemble(free_vars);
        if (!in_closed_domain(v)) return 0.0;
        return body(v);
    }

    std::string domain_string() const {
        std::string s;
        for (size_t i = 0; i < domain.size(); ++i) {
            if (i) s += ", ";
            s += diag3_sym_name(domain[i].first) + " < " + diag3_sym_name(domain[i].second);
        }
        return s;
    }

private:
    static void set(Diag3Vars& v, Diag3Sym s, double x) {
        switch (s) {
            case Diag3Sym::Q1: v.q1 = x; return;
            case Diag3Sym::Q2: v.q2 = x; return;
            case Diag3Sym::Q3: v.q3 = x; return;
            case Diag3Sym::P1: v.p1 = x; return;
            case Diag3Sym::P2: v.p2 = x; return;
            default: throw DomainError("cannot assign to a constant symbol");
        }
    }
};

/// Full (q, p) coordinates of a catalog configuration (p3 is always 0).
inline std::pair<Point, Point> diag3_config(const Diag3Objective& obj,
                                            std::span<const double> free_vars) {
    Diag3Vars v = obj.assemble(free_vars);
    return {Point{v.q1, v.q2, v.q3}, Point{v.p1, v.p2, 0.0}};
}

inline const std::vector<Diag3Objective>& diag3_catalog() {
    using S = Diag3Sym;
    static const std::vector<Diag3Objective> catalog = [] {
        std::vector<Diag3Objective> c;
        auto chain = [](std::initializer_list<S> syms) {
            std::vector<std::pair<S, S>> out;
            const S* prev = nullptr;
            for (const S& s : syms) {
                if (prev) out.emplace_back(*prev, s);
                prev = &s;
            }
            return out;
        };
        std::array<S, 4> free_q2{S::P1, S::P2, S::Q2, S::Q3};
        std::array<S, 4> free_q1{S::P1, S::P2, S::Q1, S::Q3};

        // T = {} (q1 = 1)
        c.push_back({1, make_path_type(3, {}), S::Q1, 1.0, free_q2,
                     chain({S::Zero, S::P1, S::P2, S::Q2, S::Q3, S::One}),
                     [](const Diag3Vars& v) {
                         return v.p1 * (v.q2 - v.p2) * (1 - v.q3) +
                                v.p1 * (v.p2 - v.p1) * (v.q3 - v.p2) +
                                (v.q2 - v.p1) * (1 - v.q3) * (v.q3 - v.q2);
                     }});
        c.push_back({2, make_path_type(3, {}), S::Q1, 1.0, free_q2,
                     chain({S::Zero, S::P1, S::P2, S::Q3, S::Q2, S::One}),
                     [](const Diag3Vars& v) {
                         return v.p1 * (v.p2 - v.p1) * (v.q3 - v.p2) +
                                v.p1 * (1 - v.q3) * (v.q3 - v.p2);
                     }});
        c.push_back({3, make_path_type(3, {}), S::Q1, 1.0, free_q2,
                     chain({S::Zero, S::P2, S::P1, S::Q3, S::Q2, S::One}),
                     [](const Diag3Vars& v) {
                         return v.p1 * (1 - v.q3) * (v.q3 - v.p1);
                     }});
        c.push_back({4, make_path_type(3, {}), S::Q1, 1.0, free_q2,
                     chain({S::Zero, S::P2, S::P1, S::Q2, S::Q3, S::One}),
                     [](const Diag3Vars& v) {
                         return v.p1 * (v.q2 - v.p1) * (1 - v.q3) +
                                (v.q2 - v.p1) * (1 - v.q3) * (v.q3 - v.q2);
                     }});

        // T = {1} (q1 = 0)
        c.push_back({5, make_path_type(3, {1}), S::Q1, 0.0, free_q2,
                     chain({S::Zero, S::P1, S::P2, S::Q2, S::Q3, S::One}),
                     [](const Diag3Vars& v) {
                         return v.p1 * (v.q2 - v.p2) * (1 - v.q3) +
                                v.p1 * (v.p2 - v.p1) * (v.q3 - v.p2) +
                                v.p1 * (1 - v.q3) * (v.q3 - v.q2);
                     }});
        c.push_back({6, make_path_type(3, {1}), S::Q1, 0.0, free_q2,
                     chain({S::Zero, S::P1, S::P2, S::Q3, S::Q2, S::One}),
                     [](const Diag3Vars& v) {
                         return v.p1 * (v.p2 - v.p1) * (v.q3 - v.p2) +
                                v.p1 * (1 - v.q3) * (v.q3 - v.p2);
                     }});
        c.push_back({7, make_path_type(3, {1}), S::Q1, 0.0, free_q2,
                     chain({S::Zero, S::P2, S::P1, S::Q3, S::Q2, S::One}),
                     [](const Diag3Vars& v) {
                         return v.p1 * (1 - v.q3) * (v.q3 - v.p1);
                     }});
        c.push_back({8, make_path_type(3, {1}), S::Q1, 0.0, free_q2,
                     chain({S::Zero, S::P2, S::P1, S::Q2, S::Q3, S::One}),
                     [](const Diag3Vars& v) {
                         return v.p1 * (v.q2 - v.p1) * (1 - v.q3) +
                                v.p1 * (1 - v.q3) * (v.q3 - v.q2);
                     }});
        {
            Diag3Objective f9{9, make_path_type(3, {1}), S::Q1, 0.0, free_q2,
                              chain({S::Zero, S::P2, S::Q2, S::P1, S::One}),
                              [](const Diag3Vars& v) {
                                  return v.q2 * (1 - v.q3) * (v.q3 - v.q2);
                              }};
            auto extra = chain({S::Zero, S::Q2, S::Q3, S::One});
            f9.domain.insert(f9.domain.end(), extra.begin(), extra.end());
            c.push_back(std::move(f9));
        }

        // T = {2} (q2 = 0)
        c.push_back({10, make_path_type(3, {2}), S::Q2, 0.0, free_q1,
                     chain({S::Zero, S::P1, S::Q1, S::P2, S::Q3, S::One}),
                     [](const Diag3Vars& v) {
                         return (v.p2 - v.q1) * v.q1 * (1 - v.q3) +
                                v.p1 * (v.p2 - v.p1) * (v.q3 - v.p2) +
                                (v.q1 - v.p1) * (1 - v.q3) * (v.q3 - v.p2);
                     }});
        {
            Diag3Objective f11{11, make_path_type(3, {2}), S::Q2, 0.0, free_q1,
                               chain({S::Zero, S::P1, S::P2, S::Q1, S::One}),
                               [](const Diag3Vars& v) {
                                   return v.p1 * (v.p2 - v.p1) * (v.q3 - v.p2) +
                                          (v.p2 - v.p1) * (1 - v.q3) * (v.q3 - v.p2);
                               }};
            auto extra = chain({S::Zero, S::P2, S::Q3, S::One});
            f11.domain.insert(f11.domain.end(), extra.begin(), extra.end());
            c.push_back(std::move(f11));
        }
        c.push_back({12, make_path_type(3, {2}), S::Q2, 0.0, free_q1,
                     chain({S::Zero, S::P1, S::Q1, S::Q3, S::P2, S::One}),
                     [](const Diag3Vars& v) {
                         return v.q1 * (1 - v.q3) * (v.q3 - v.q1);
                     }});

        // T = {1,2} (q2 = 0)
        c.push_back({13, make_path_type(3, {1, 2}), S::Q2, 0.0, free_q1,
                     chain({S::Zero, S::Q1, S::P1, S::P2, S::Q3, S::One}),
                     [](const Diag3Vars& v) {
                         return (v.p2 - v.q1) * v.q1 * (1 - v.q3) +
                                v.p1 * (v.p2 - v.p1) * (v.q3 - v.p2) +
                                (v.p1 - v.q1) * (1 - v.q3) * (v.q3 - v.p2);
                     }});
        {
            Diag3Objective f14{14, make_path_type(3, {1, 2}), S::Q2, 0.0, free_q1,
                               chain({S::Zero, S::Q1, S::P2, S::P1, S::One}),
                               [](const Diag3Vars& v) {
                                   return (v.p2 - v.q1) * v.q1 * (1 - v.q3) +
                                          (v.p2 - v.q1) * (1 - v.q3) * (v.q3 - v.p2);
                               }};
            auto extra = chain({S::Zero, S::P2, S::Q3, S::One});
            f14.domain.insert(f14.domain.end(), extra.begin(), extra.end());
            c.push_back(std::move(f14));
        }
        {
            Diag3Objective f15{15, make_path_type(3, {1, 2}), S::Q2, 0.0, free_q1,
                               chain({S::Zero, S::Q1, S::P1, S::One}),
                               [](const Diag3Vars& v) {
                                   return v.q1 * (1 - v.q3) * (v.q3 - v.q1);
                               }};
            auto extra = chain({S::Zero, S::Q1, S::Q3, S::P2, S::One});
            f15.domain.insert(f15.domain.end(), extra.begin(), extra.end());
            c.push_back(std::move(f15));
        }
        return c;
    }();
    return catalog;
}

}  // namespace stairconv
