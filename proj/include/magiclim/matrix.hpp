#pragma once

#include <cstddef>
#include <vector>

#include "magiclim/scalar.hpp"

namespace magiclim {

/// Dense matrix over complex rationals, row-major. Multiplication and the
/// elimination routines skip entries that are literally zero, which keeps
/// the cost near the number of nonzeros for the sparse 0/1 matrices this
/// library mostly handles.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    static Mat identity(std::size_t n);
    static Mat zeros(std::size_t r, std::size_t c) { return Mat(r, c); }
    /// Matrix unit e_{ij} in M_n.
    static Mat unit(std::size_t n, std::size_t i, std::size_t j);
    /// Column vector from entries.
    static Mat col_vec(const std::vector<Scalar>& entries);
    static Mat diag(const std::vector<Scalar>& entries);

    Scalar& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool is_square() const { return rows == cols; }
    bool shape_eq(const Mat& o) const { return rows == o.rows && cols == o.cols; }

    Mat adjoint() const;    // conjugate transpose
    Mat transpose() const;
    Mat conjugate() const;
    Scalar trace() const;

    /// True when every entry is literally zero (mode-independent).
    bool exact_zero() const;
    /// Mode-aware zero test.
    bool is_zero() const;

    /// Self-adjoint idempotent under the active comparison mode.
    bool is_projection() const;

    Mat operator-() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);

    /// Extract column j as a rows x 1 matrix.
    Mat column(std::size_t j) const;

    /// Glue matrices with equal row counts side by side.
    static Mat hstack(const std::vector<Mat>& pieces);
    /// Stack matrices with equal column counts on top of each other.
    static Mat vstack(const std::vector<Mat>& pieces);

    /// Force all entries into the given comparison mode.
    Mat with_mode(NumMode m, double tolerance) const;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Scalar& s, Mat a);

/// Mode-aware entrywise equality (shapes must match).
bool mat_eq(const Mat& a, const Mat& b);
bool operator==(const Mat& a, const Mat& b);
bool operator!=(const Mat& a, const Mat& b);

/// Kronecker product: (r_a r_b) x (c_a c_b), entry ((p,r),(q,s)) = a_pq b_rs.
Mat kron(const Mat& a, const Mat& b);

/// Block-diagonal direct sum of square matrices.
Mat dsum(const std::vector<Mat>& blocks);

}  // namespace magiclim
