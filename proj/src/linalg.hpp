#pragma once

#include <cstddef>
#include <vector>

namespace menuprobe {

using Vec = std::vector<double>;

// Dense row-major matrix. Dimensions in this library are tiny (m, d <= ~16),
// so everything below is plain O(n^3)-or-better scalar code.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0) : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

    double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n);
};

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double dist2(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, double s);
// a + s*b
Vec axpy(const Vec& a, double s, const Vec& b);

Vec matvec(const Mat& m, const Vec& x);
// m^T x
Vec matvec_t(const Mat& m, const Vec& x);

// Solves A x = b by Gaussian elimination with partial pivoting. A must be
// square and nonsingular (throws Error on degeneracy).
Vec solve_linear(Mat a, Vec b);

// Smallest singular value of an arbitrary matrix, via Jacobi eigenvalue
// iteration on A^T A. Adequate for the rank checks on chart matrices.
double smallest_singular_value(const Mat& a);

bool all_finite(const Vec& a);

} // namespace menuprobe
