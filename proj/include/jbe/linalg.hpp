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

#ifndef JBE_LINALG_HPP
#define JBE_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "jbe/signed_log.hpp"

namespace jbe {

/// Dense square matrix, row major.
struct Mat {
    int n = 0;
    std::vector<double> a;

    Mat() = default;
    explicit Mat(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct CMat {
    int n = 0;
    std::vector<std::complex<double>> a;

    CMat() = default;
    explicit CMat(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
    std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::complex<double> at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// det(A) as (sign, log|det|) via LU with partial pivoting.
inline SignedLog det_signed_log(Mat m) {
    int n = m.n;
    int sign = 1;
    double logdet = 0.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(m.at(i, k)) > std::fabs(m.at(piv, k))) piv = i;
        if (m.at(piv, k) == 0.0) return SignedLog::zero();
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            sign = -sign;
        }
        double p = m.at(k, k);
        if (p < 0.0) sign = -sign;
        logdet += std::log(std::fabs(p));
        for (int i = k + 1; i < n; ++i) {
            double f = m.at(i, k) / p;
            for (int j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return SignedLog::from_log(logdet, sign);
}

inline double det(const Mat& m) { return det_signed_log(m).value(); }

/// Solve A x = b by LU with partial pivoting (A copied).
inline std::vector<double> lu_solve(Mat m, std::vector<double> b) {
    int n = m.n;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(m.at(i, k)) > std::fabs(m.at(piv, k))) piv = i;
        if (m.at(piv, k) == 0.0) throw std::runtime_error("lu_solve: singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            std::swap(b[piv], b[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            double f = m.at(i, k) / m.at(k, k);
            b[i] -= f * b[k];
            for (int j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= m.at(i, j) * b[j];
        b[i] = s / m.at(i, i);
    }
    return b;
}

/// In-place lower Cholesky of a symmetric positive definite matrix.
/// Returns false if a pivot is not positive.
inline bool cholesky_lower(Mat& m) {
    int n = m.n;
    for (int j = 0; j < n; ++j) {
        double d = m.at(j, j);
        for (int k = 0; k < j; ++k) d -= m.at(j, k) * m.at(j, k);
        if (!(d > 0.0)) return false;
        d = std::sqrt(d);
        m.at(j, j) = d;
        for (int i = j + 1; i < n; ++i) {
            double s = m.at(i, j);
            for (int k = 0; k < j; ++k) s -= m.at(i, k) * m.at(j, k);
            m.at(i, j) = s / d;
        }
        for (int i = 0; i < j; ++i) m.at(i, j) = 0.0;
    }
    return true;
}

inline bool cholesky_lower(CMat& m) {
    int n = m.n;
    for (int j = 0; j < n; ++j) {
        double d = m.at(j, j).real();
        for (int k = 0; k < j; ++k) d -= std::norm(m.at(j, k));
        if (!(d > 0.0)) return false;
        d = std::sqrt(d);
        m.at(j, j) = d;
        for (int i = j + 1; i < n; ++i) {
            std::complex<double> s = m.at(i, j);
            for (int k = 0; k < j; ++k) s -= m.at(i, k) * std::conj(m.at(j, k));
            m.at(i, j) = s / d;
        }
        for (int i = 0; i < j; ++i) m.at(i, j) = 0.0;
    }
    return true;
}

namespace detail {

inline double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Householder reduction of a symmetric matrix to tridiagonal form.
// On exit d holds the diagonal, e the subdiagonal (e[0] unused), and if
// `vectors` the matrix is replaced by the accumulated orthogonal Q.
inline void tred2(Mat& z, std::vector<double>& d, std::vector<double>& e, bool vectors) {
    int n = z.n;
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(z.at(i, k));
            if (scale == 0.0) {
                e[i] = z.at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    z.at(i, k) /= scale;
                    h += z.at(i, k) * z.at(i, k);
                }
                double f = z.at(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z.at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    if (vectors) z.at(j, i) = z.at(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += z.at(j, k) * z.at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += z.at(k, j) * z.at(i, k);
                    e[j] = g / h;
                    f += e[j] * z.at(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = z.at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        z.at(j, k) -= f * e[k] + g * z.at(i, k);
                }
            }
        } else {
            e[i] = z.at(i, l);
        }
        d[i] = h;
    }
    if (vectors) d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        if (vectors) {
            int l = i - 1;
            if (d[i] != 0.0) {
                for (int j = 0; j <= l; ++j) {
                    double g = 0.0;
                    for (int k = 0; k <= l; ++k) g += z.at(i, k) * z.at(k, j);
                    for (int k = 0; k <= l; ++k) z.at(k, j) -= g * z.at(k, i);
                }
            }
            d[i] = z.at(i, i);
            z.at(i, i) = 1.0;
            for (int j = 0; j <= l; ++j) z.at(j, i) = z.at(i, j) = 0.0;
        } else {
            d[i] = z.at(i, i);
        }
    }
}

// Implicit-shift QL iteration on a tridiagonal matrix.  e[0] unused on
// entry; if z is nonnull the rotations are accumulated into its columns.
inline void tqli(std::vector<double>& d, std::vector<double>& e, Mat* z) {
    int n = static_cast<int>(d.size());
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw std::runtime_error("tqli: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < z->n; ++k) {
                            f = z->at(k, i + 1);
                            z->at(k, i + 1) = s * z->at(k, i) + c * f;
                            z->at(k, i) = c * z->at(k, i) - s * f;
                        }
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace detail

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly
/// below x (Sturm count via the shifted LDL^T recurrence).
inline int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
    int count = 0;
    double d = diag[0] - x;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (d == 0.0) d = 1e-300;
        d = (diag[i] - x) - off[i - 1] * off[i - 1] / d;
        if (d < 0.0) ++count;
    }
    return count;
}

/// Smallest eigenvalue of a symmetric tridiagonal matrix by bisection on
/// the Sturm count.  Unconditionally convergent; absolute tolerance
/// 1e-13 * scale where scale is the Gershgorin radius.
inline double smallest_eig_tridiag(const std::vector<double>& diag,
                                   const std::vector<double>& off) {
    const std::size_t n = diag.size();
    if (n == 0) throw std::invalid_argument("smallest_eig_tridiag: empty matrix");
    if (off.size() + 1 != n)
        throw std::invalid_argument("smallest_eig_tridiag: off-diagonal size mismatch");
    if (n == 1) return diag[0];
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(off[i - 1]);
        if (i + 1 < n) r += std::fabs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    double scale = std::max(std::fabs(lo), std::fabs(hi));
    double tol = 1e-13 * std::max(scale, 1e-300);
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sturm_count(diag, off, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

/// All eigenvalues of a symmetric tridiagonal matrix, ascending.
inline std::vector<double> eig_tridiag_all(std::vector<double> diag, std::vector<double> off) {
    if (diag.empty()) return {};
    std::vector<double> e(diag.size(), 0.0);
    for (std::size_t i = 1; i < diag.size(); ++i) e[i] = off[i - 1];
    detail::tqli(diag, e, nullptr);
    std::sort(diag.begin(), diag.end());
    return diag;
}

struct SymEig {
    std::vector<double> values;  // ascending
    Mat vectors;                 // columns, aligned with values (empty unless requested)
};

/// Full symmetric eigendecomposition: Householder reduction followed by
/// implicit-shift QL.  Throws if the input is asymmetric beyond 1e-12
/// relative to its magnitude.
inline SymEig sym_eig_dense(Mat a, bool want_vectors = false) {
    int n = a.n;
    double amax = 1e-300;
    for (double v : a.a) amax = std::max(amax, std::fabs(v));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(a.at(i, j) - a.at(j, i)) > 1e-12 * std::max(amax, 1.0))
                throw std::invalid_argument("sym_eig_dense: matrix is not symmetric");

    std::vector<double> d, e;
    detail::tred2(a, d, e, want_vectors);
    detail::tqli(d, e, want_vectors ? &a : nullptr);

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return d[x] < d[y]; });

    SymEig out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = d[idx[i]];
    if (want_vectors) {
        out.vectors = Mat(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) out.vectors.at(i, j) = a.at(i, idx[j]);
    }
    return out;
}

/// Eigenvalues of the Hermitian matrix H through the real embedding
/// [[Re H, -Im H], [Im H, Re H]]; each eigenvalue of H appears twice.
inline std::vector<double> herm_eig_values(const CMat& h) {
    int n = h.n;
    Mat e(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = h.at(i, j).real(), im = h.at(i, j).imag();
            e.at(i, j) = re;
            e.at(i + n, j + n) = re;
            e.at(i, j + n) = -im;
            e.at(i + n, j) = im;
        }
    std::vector<double> all = sym_eig_dense(std::move(e)).values;
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = 0.5 * (all[2 * i] + all[2 * i + 1]);
    return out;
}

}  // namespace jbe

#endif  // JBE_LINALG_HPP
