// Seeded random inputs for the property tests.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "anyons/covergroup.hpp"
#include "anyons/minkowski.hpp"

namespace testgen {

inline constexpr double pi = std::numbers::pi;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double real(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

    anyons::CoverElement cover(double rmax = 0.7)
    {
        const double r = real(0.0, rmax);
        return anyons::make_cover_element(std::polar(r, real(-pi, pi)), real(-2.0 * pi, 2.0 * pi));
    }

    // products of one-parameter lifts, an independent way to reach the group
    anyons::CoverElement word(int length = 3)
    {
        anyons::CoverElement g;
        for (int i = 0; i < length; ++i) {
            g = anyons::compose(g, anyons::lift_rotation(real(-4.0, 4.0)));
            g = anyons::compose(g, anyons::lift_boost1(real(-0.8, 0.8)));
        }
        return g;
    }

    anyons::MomentumPoint momentum(double m, double extent = 1.5)
    {
        return anyons::shell_point(real(-extent, extent), real(-extent, extent), m);
    }

private:
    std::mt19937_64 rng_;
};

template <class F>
void forall(std::uint64_t seed, int n, F&& body)
{
    Gen g(seed);
    for (int i = 0; i < n; ++i)
        body(g);
}

}  // namespace testgen
