#pragma once

#include <cstddef>
#include <vector>

#include "magiclim/matrix.hpp"

namespace magiclim {

/// Reduced row echelon form of a matrix, with pivot bookkeeping.
/// Pivot selection is deterministic: first row with a nonzero entry in the
/// leftmost unresolved column.
struct RowEchelon {
    Mat mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

RowEchelon rref(Mat a);

std::size_t rank(const Mat& a);

/// Canonical nullspace basis of a (as column vectors), one per free column.
std::vector<Mat> nullspace(const Mat& a);

/// Inverse of a square matrix; throws std::invalid_argument when singular.
Mat inverse(const Mat& a);

/// Orthogonal projection onto the column span of all pieces (which must
/// share their row count d). Rational throughout: P = B (B*B)^{-1} B* for
/// an independent column subset B, so no square roots appear.
Mat range_projection(const std::vector<Mat>& pieces);

/// Basis of the joint commutant { X : XG = GX and XG* = G*X for all G },
/// computed as the nullspace of the stacked linear system. Deterministic
/// basis order (free-column order of the RREF).
std::vector<Mat> commutant_basis(const std::vector<Mat>& generators, std::size_t d);

/// Exact positive-semidefiniteness test for a Hermitian matrix, by
/// rational diagonal pivoting (Cholesky-style, no square roots).
/// Precondition h = h*; returns false as well when h is not Hermitian.
bool is_psd(const Mat& h);

/// Membership oracle for the span of a fixed list of equally-shaped
/// matrices. Builds the RREF of the coordinate column stack once.
class SpanIndex {
public:
    explicit SpanIndex(const std::vector<Mat>& basis);

    bool contains(const Mat& m) const;
    std::size_t dim() const { return ech_.rank; }

private:
    std::size_t rows_ = 0, cols_ = 0;  // shape of member matrices
    RowEchelon ech_;                   // RREF of [vec(b_1) | vec(b_2) | ...]
};

/// Flatten a matrix into a column vector (row-major).
Mat vec(const Mat& m);

}  // namespace magiclim
