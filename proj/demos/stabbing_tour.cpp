// A short tour: evaluate the grid stabbing constant at its known optimum,
// maximize one type from scratch, and confirm the diagonal identity exactly.

#include <cstdio>

#include "stairconv/stairconv.hpp"

using namespace stairconv;

int main() {
    // the three-dimensional grid optimum: a stair-path from (1,1,4/5) to
    // (1/2,1/2,0) meets a 1/25 fraction of all grid simplices
    Point q{1, 1, 0.8}, p{0.5, 0.5, 0};
    std::printf("grid constant at the known optimum: %.12f\n", grid_constant<double>(q, p));

    // rediscover it with differential evolution on the type-{} objective
    auto result = maximize(make_opt_problem(grid_objective(3, make_path_type(3, {}))),
                           Method::de, /*seed=*/0, /*budget=*/200000);
    std::printf("maximized from scratch:             %.12f (%lld evaluations)\n", result.value,
                static_cast<long long>(result.evaluations));

    // the stretched diagonal's best path, exactly
    auto path = theorem2_path(3);
    Rational value = fsd<Rational>(path.q, path.p);
    std::printf("diagonal path value: %lld/%lld\n",
                static_cast<long long>(boost::multiprecision::numerator(value)),
                static_cast<long long>(boost::multiprecision::denominator(value)));

    // and a tiny exact census agreeing in spirit: count stabbed simplices
    auto s = build_stretched(StretchedKind::grid, 2, 3);
    auto census = stab_census(s, census_endpoint(s, {Rational(1), Rational(4, 5)}),
                              census_endpoint(s, {Rational(1, 2), Rational(0)}));
    std::printf("2-d census: %lld of %lld simplices stabbed\n",
                static_cast<long long>(census.stabbed),
                static_cast<long long>(census.total_simplices));
    return 0;
}
