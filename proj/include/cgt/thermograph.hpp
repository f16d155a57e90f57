#pragma once

#include <vector>

#include "cgt/game.hpp"
#include "cgt/numeric.hpp"

namespace cgt {

struct ThermoPoint {
    Rational t;
    Rational value;
};

// Piecewise-linear left/right boundaries of a short game, sampled at their
// breakpoints from t = 0 up to the freezing temperature; both boundaries are
// constant at the mast value from the temperature upward. Left segments have
// slopes in {-1, 0}, right segments in {0, +1}, and left(t) >= right(t).
struct Thermograph {
    std::vector<ThermoPoint> left;
    std::vector<ThermoPoint> right;
    Rational mast;
    Rational temperature;
};

// Thermographic recursion on the canonical form; memoized per game.
const Thermograph& thermograph(Game g);

// Mast value of the thermograph.
Rational mean(Game g);

// Smallest t >= 0 at which the boundaries coincide; numbers get 0.
Rational temperature(Game g);

// Exact game-engine check of n*mean(g) - m <= n*g <= n*mean(g) + m.
// Throws NonDyadicBound when an endpoint is not a dyadic rational.
bool mean_bound_check(Game g, unsigned n, const Rational& m);

}  // namespace cgt
