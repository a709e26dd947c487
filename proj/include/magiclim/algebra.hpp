#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "magiclim/matrix.hpp"

namespace magiclim {

class AlgebraElement;

/// Finite direct sum of full matrix blocks M_{k_1} + ... + M_{k_m}; the
/// general finite-dimensional von Neumann algebra. An empty block list is
/// the zero algebra (dimension 0); blocks of size 0 are not allowed.
class MultiMatrixAlgebra {
public:
    MultiMatrixAlgebra() = default;
    explicit MultiMatrixAlgebra(std::vector<std::size_t> dims);

    static MultiMatrixAlgebra scalars() { return MultiMatrixAlgebra({1}); }
    static MultiMatrixAlgebra trivial() { return MultiMatrixAlgebra(); }
    static MultiMatrixAlgebra full(std::size_t k) { return MultiMatrixAlgebra({k}); }
    /// Commutative algebra of functions on an n-point set.
    static MultiMatrixAlgebra functions(std::size_t n);

    const std::vector<std::size_t>& block_dims() const { return dims_; }
    std::size_t num_blocks() const { return dims_.size(); }
    std::size_t block_dim(std::size_t i) const { return dims_[i]; }
    /// Linear dimension: sum of k_i^2.
    std::size_t dim() const { return dim_; }
    std::size_t center_dim() const { return dims_.size(); }
    /// Coordinate offset of block i (blocks are flattened row-major).
    std::size_t block_offset(std::size_t i) const { return offsets_[i]; }

    AlgebraElement zero() const;
    AlgebraElement identity() const;
    /// Element whose coordinate vector is the c-th unit vector (a matrix
    /// unit of one block).
    AlgebraElement basis_element(std::size_t c) const;
    AlgebraElement element(std::vector<Mat> blocks) const;
    AlgebraElement from_coords(const Mat& column) const;

    bool operator==(const MultiMatrixAlgebra& o) const { return dims_ == o.dims_; }
    bool operator!=(const MultiMatrixAlgebra& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
};

/// Element of a multi-matrix algebra: one square matrix per block.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(MultiMatrixAlgebra algebra, std::vector<Mat> blocks);

    const MultiMatrixAlgebra& algebra() const { return algebra_; }
    const std::vector<Mat>& blocks() const { return blocks_; }
    const Mat& block(std::size_t i) const { return blocks_[i]; }
    Mat& block(std::size_t i) { return blocks_[i]; }

    AlgebraElement adjoint() const;
    bool is_projection() const;
    bool is_zero() const;
    bool exact_zero() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator-() const;

    /// Coordinate column (algebra dim x 1), blocks flattened row-major.
    Mat to_coords() const;

    std::string str() const;

private:
    MultiMatrixAlgebra algebra_;
    std::vector<Mat> blocks_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
/// Blockwise product; blocks that are literally zero on either side are
/// skipped.
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Scalar& s, AlgebraElement a);
bool operator==(const AlgebraElement& a, const AlgebraElement& b);
bool operator!=(const AlgebraElement& a, const AlgebraElement& b);

/// Projection that is the identity on a subset of blocks and zero
/// elsewhere; these are exactly the central projections of a multi-matrix
/// algebra.
class CentralProjection {
public:
    CentralProjection() = default;
    CentralProjection(MultiMatrixAlgebra algebra, std::vector<bool> support);

    static CentralProjection zero(const MultiMatrixAlgebra& a);
    static CentralProjection one(const MultiMatrixAlgebra& a);
    static CentralProjection on_blocks(const MultiMatrixAlgebra& a,
                                       const std::vector<std::size_t>& blocks);

    const MultiMatrixAlgebra& algebra() const { return algebra_; }
    const std::vector<bool>& support() const { return support_; }
    bool covers(std::size_t block) const { return support_[block]; }
    std::vector<std::size_t> support_blocks() const;
    std::size_t support_size() const;

    CentralProjection complement() const;
    bool dominates(const CentralProjection& o) const;

    AlgebraElement to_element() const;
    /// Compress an element: zero out the blocks outside the support.
    AlgebraElement compress(const AlgebraElement& x) const;

    bool operator==(const CentralProjection& o) const {
        return algebra_ == o.algebra_ && support_ == o.support_;
    }
    bool operator!=(const CentralProjection& o) const { return !(*this == o); }

    std::string str() const;

private:
    MultiMatrixAlgebra algebra_;
    std::vector<bool> support_;
};

/// Smallest projection dominating all inputs, computed blockwise from the
/// ranges. Inputs must be projections in one algebra.
AlgebraElement sup_projections(const std::vector<AlgebraElement>& ps);

/// Smallest central projection dominating p: supported exactly on the
/// blocks where p is nonzero.
CentralProjection central_carrier(const AlgebraElement& p);

}  // namespace magiclim
