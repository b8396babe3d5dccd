// Copyright 2026 the jbe authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JBE_QUADRATURE_HPP
#define JBE_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

namespace jbe {

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (symmetric half listed).
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
void gk15(const F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * gk_nodes[i]);
        fv[14 - i] = f(c + h * gk_nodes[i]);
    }
    fv[7] = f(c);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 7; ++i) resk += gk_wk[i] * (fv[i] + fv[14 - i]);
    resk += gk_wk[7] * fv[7];
    // Gauss nodes are the odd-indexed Kronrod nodes
    for (int i = 0; i < 3; ++i) resg += gk_wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    resg += gk_wg[3] * fv[7];
    result = resk * h;
    err = std::fabs((resk - resg) * h);
}

template <typename F>
double integrate_rec(const F& f, double a, double b, double tol, int depth) {
    double r, e;
    gk15(f, a, b, r, e);
    if (e <= tol || depth <= 0) return r;
    double m = 0.5 * (a + b);
    return integrate_rec(f, a, m, 0.5 * tol, depth - 1) +
           integrate_rec(f, m, b, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod quadrature of f over [a,b].
template <typename F>
double integrate(const F& f, double a, double b, double tol = 1e-10, int max_depth = 48) {
    if (!(b >= a)) throw std::invalid_argument("integrate: b < a");
    return detail::integrate_rec(f, a, b, tol, max_depth);
}

/// Iterated 2-D quadrature over [ax,bx] x [ay,by].
template <typename F>
double integrate_2d(const F& f, double ax, double bx, double ay, double by,
                    double tol = 1e-9) {
    auto outer = [&](double x) {
        return integrate([&](double y) { return f(x, y); }, ay, by, tol * 0.1);
    };
    return integrate(outer, ax, bx, tol);
}

}  // namespace jbe

#endif  // JBE_QUADRATURE_HPP
