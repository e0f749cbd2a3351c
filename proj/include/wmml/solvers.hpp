#pragma once

#include <array>
#include <functional>

namespace wmml {

struct RootResult {
    double root = 0.0;
    double f_at_root = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
RootResult brent_root(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-12, int max_iter = 200);

struct MinimizeResult {
    std::array<double, 2> x{};
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Nelder-Mead in two dimensions followed by a coordinate-descent polish.
MinimizeResult nelder_mead_2d(const std::function<double(const std::array<double, 2>&)>& f,
                              std::array<double, 2> start, double step = 0.25,
                              double tol = 1e-11, int max_iter = 500);

}  // namespace wmml
