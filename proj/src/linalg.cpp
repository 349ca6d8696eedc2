#include "linalg.hpp"

#include <cmath>
#include <cstdlib>

#include "error.hpp"

namespace menuprobe {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) raise(ErrorCode::DimensionMismatch, "dot: size mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double dist2(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) raise(ErrorCode::DimensionMismatch, "dist2: size mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Vec& a, double s) {
    Vec r = a;
    for (double& v : r) v *= s;
    return r;
}

Vec axpy(const Vec& a, double s, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
    return r;
}

Vec matvec(const Mat& m, const Vec& x) {
    if (static_cast<int>(x.size()) != m.cols) raise(ErrorCode::DimensionMismatch, "matvec: size mismatch");
    Vec r(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

Vec matvec_t(const Mat& m, const Vec& x) {
    if (static_cast<int>(x.size()) != m.rows) raise(ErrorCode::DimensionMismatch, "matvec_t: size mismatch");
    Vec r(m.cols, 0.0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[j] += m.at(i, j) * x[i];
    return r;
}

Vec solve_linear(Mat a, Vec b) {
    if (a.rows != a.cols || static_cast<int>(b.size()) != a.rows)
        raise(ErrorCode::DimensionMismatch, "solve_linear: shape mismatch");
    const int n = a.rows;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::fabs(a.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::fabs(a.at(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best < 1e-14) raise(ErrorCode::DegenerateInstance, "solve_linear: singular matrix");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
            std::swap(b[col], b[pivot]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = a.at(r, col) / a.at(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
            b[r] -= f * b[col];
        }
    }
    Vec x(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int j = r + 1; j < n; ++j) s -= a.at(r, j) * x[j];
        x[r] = s / a.at(r, r);
    }
    return x;
}

double smallest_singular_value(const Mat& a) {
    const int d = a.cols;
    if (d == 0) return 0.0;
    // Gram matrix G = A^T A (d x d, symmetric PSD).
    Mat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            double s = 0.0;
            for (int r = 0; r < a.rows; ++r) s += a.at(r, i) * a.at(r, j);
            g.at(i, j) = s;
            g.at(j, i) = s;
        }
    // Cyclic Jacobi sweeps.
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) off += g.at(p, q) * g.at(p, q);
        if (off < 1e-28) break;
        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) {
                const double apq = g.at(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                const double theta = (g.at(q, q) - g.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < d; ++k) {
                    const double gkp = g.at(k, p), gkq = g.at(k, q);
                    g.at(k, p) = c * gkp - s * gkq;
                    g.at(k, q) = s * gkp + c * gkq;
                }
                for (int k = 0; k < d; ++k) {
                    const double gpk = g.at(p, k), gqk = g.at(q, k);
                    g.at(p, k) = c * gpk - s * gqk;
                    g.at(q, k) = s * gpk + c * gqk;
                }
            }
    }
    double min_eig = g.at(0, 0);
    for (int i = 1; i < d; ++i) min_eig = std::min(min_eig, g.at(i, i));
    return std::sqrt(std::max(0.0, min_eig));
}

bool all_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace menuprobe
