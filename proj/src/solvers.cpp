#include "wmml/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wmml {

RootResult brent_root(const std::function<double(double)>& f, double a, double b,
                      double tol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa * fb > 0.0)
        throw std::invalid_argument("brent_root: interval does not bracket a root");
    RootResult res;
    if (fa == 0.0) return {a, 0.0, 0, true};
    if (fb == 0.0) return {b, 0.0, 0, true};
    double c = a, fc = fa, d = b - a, e = d;
    for (int iter = 1; iter <= max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return {b, fb, iter, true};
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    res = {b, fb, max_iter, false};
    return res;
}

MinimizeResult nelder_mead_2d(const std::function<double(const std::array<double, 2>&)>& f,
                              std::array<double, 2> start, double step, double tol,
                              int max_iter) {
    using P = std::array<double, 2>;
    struct V { P x; double fx; };
    std::array<V, 3> s;
    s[0] = {start, f(start)};
    s[1] = {{start[0] + step, start[1]}, 0.0};
    s[1].fx = f(s[1].x);
    s[2] = {{start[0], start[1] + step}, 0.0};
    s[2].fx = f(s[2].x);

    int iter = 0;
    bool converged = false;
    auto order = [&s] {
        std::sort(s.begin(), s.end(), [](const V& a, const V& b) { return a.fx < b.fx; });
    };
    for (; iter < max_iter; ++iter) {
        order();
        if (std::abs(s[2].fx - s[0].fx) <
                tol * (std::abs(s[0].fx) + std::abs(s[2].fx) + 1e-300) &&
            std::abs(s[2].x[0] - s[0].x[0]) + std::abs(s[2].x[1] - s[0].x[1]) < 1e-10) {
            converged = true;
            break;
        }
        const P cen{0.5 * (s[0].x[0] + s[1].x[0]), 0.5 * (s[0].x[1] + s[1].x[1])};
        auto along = [&cen, &s](double t) {
            return P{cen[0] + t * (cen[0] - s[2].x[0]), cen[1] + t * (cen[1] - s[2].x[1])};
        };
        const P xr = along(1.0);
        const double fr = f(xr);
        if (fr < s[0].fx) {
            const P xe = along(2.0);
            const double fe = f(xe);
            s[2] = fe < fr ? V{xe, fe} : V{xr, fr};
        } else if (fr < s[1].fx) {
            s[2] = {xr, fr};
        } else {
            const P xc = along(fr < s[2].fx ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, s[2].fx)) {
                s[2] = {xc, fc};
            } else {
                // shrink toward the best vertex
                for (int i = 1; i < 3; ++i) {
                    s[i].x = {0.5 * (s[i].x[0] + s[0].x[0]),
                              0.5 * (s[i].x[1] + s[0].x[1])};
                    s[i].fx = f(s[i].x);
                }
            }
        }
    }
    order();

    // Coordinate-descent polish around the simplex winner.
    P x = s[0].x;
    double fx = s[0].fx;
    double h = 1e-4;
    for (int round = 0; round < 40 && h > 1e-13; ++round) {
        bool improved = false;
        for (int dim = 0; dim < 2; ++dim) {
            for (double sign : {1.0, -1.0}) {
                P xt = x;
                xt[dim] += sign * h;
                const double ft = f(xt);
                if (ft < fx) {
                    x = xt;
                    fx = ft;
                    improved = true;
                }
            }
        }
        if (!improved) h *= 0.25;
    }
    return {x, fx, iter, converged};
}

}  // namespace wmml
