#pragma once

#include "upsc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace upsc {

/// Brent root bracketing: f(a) and f(b) must have opposite signs (or one be
/// zero). Converges to machine precision; inverse-quadratic/secant steps are
/// safeguarded by bisection so convergence is guaranteed from the bracket.
template <typename F>
double brent_root(F&& f, double a, double b, double abs_tol = 0.0, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw NumericalError("brent_root: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * abs_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return b;

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
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
        b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = f(b);
    }
    return b;
}

template <typename F>
struct MinimizeResult {
    double x;
    double fx;
};

/// Brent scalar minimization on [a, b]: golden-section steps refined by
/// successive parabolic interpolation. Stops when the bracket around the
/// minimizer shrinks below rel_tol*|x| + abs_tol.
template <typename F>
MinimizeResult<F> brent_minimize(F&& f, double a, double b, double rel_tol,
                                 double abs_tol = 1e-30, int max_iter = 300) {
    constexpr double golden = 0.3819660112501051; // 2 - phi
    double x = a + golden * (b - a);
    double w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;

    for (int iter = 0; iter < max_iter; ++iter) {
        const double m = 0.5 * (a + b);
        const double tol = rel_tol * std::abs(x) + abs_tol;
        if (std::abs(x - m) <= 2.0 * tol - 0.5 * (b - a))
            break;

        bool parabolic = false;
        if (std::abs(e) > tol) {
            // trial parabola through x, v, w
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0)
                p = -p;
            q = std::abs(q);
            const double e_old = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) &&
                p < q * (b - x)) {
                d = p / q;
                const double u_trial = x + d;
                if (u_trial - a < 2.0 * tol || b - u_trial < 2.0 * tol)
                    d = std::copysign(tol, m - x);
                parabolic = true;
            }
        }
        if (!parabolic) {
            e = (x < m) ? b - x : a - x;
            d = golden * e;
        }

        const double u = (std::abs(d) >= tol) ? x + d : x + std::copysign(tol, d);
        const double fu = f(u);
        if (fu <= fx) {
            if (u < x)
                b = x;
            else
                a = x;
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if (u < x)
                a = u;
            else
                b = u;
            if (fu <= fw || w == x) {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u;
                fv = fu;
            }
        }
    }
    return {x, fx};
}

} // namespace upsc
