#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "magiclim/star_hom.hpp"

namespace magiclim {

/// A (x) B as a multi-matrix algebra: one block of size k_i * l_j per pair
/// of factor blocks, ordered lexicographically (left factor outer).
MultiMatrixAlgebra tensor_algebra(const MultiMatrixAlgebra& a, const MultiMatrixAlgebra& b);

/// Coordinate bookkeeping for A (x) B. Every coordinate of the tensor
/// algebra is the elementary tensor of exactly one pair of coordinates of
/// the factors (matrix units of a Kronecker block are pairs of matrix
/// units), so linear maps on the factors act structurally.
class TensorIndex {
public:
    TensorIndex(MultiMatrixAlgebra left, MultiMatrixAlgebra right);

    const MultiMatrixAlgebra& left() const { return left_; }
    const MultiMatrixAlgebra& right() const { return right_; }
    const MultiMatrixAlgebra& product() const { return product_; }

    std::pair<std::size_t, std::size_t> split(std::size_t tensor_coord) const {
        return to_pair_[tensor_coord];
    }
    std::size_t fuse(std::size_t left_coord, std::size_t right_coord) const {
        return from_pair_[left_coord * right_.dim() + right_coord];
    }

private:
    MultiMatrixAlgebra left_, right_, product_;
    std::vector<std::pair<std::size_t, std::size_t>> to_pair_;
    std::vector<std::size_t> from_pair_;
};

/// Elementary tensor a (x) b (blockwise Kronecker products).
AlgebraElement tensor_elem(const TensorIndex& idx, const AlgebraElement& a,
                           const AlgebraElement& b);
AlgebraElement tensor_elem(const AlgebraElement& a, const AlgebraElement& b);

/// Applies f (x) g to an element of f.source (x) g.source without ever
/// materializing the tensor-product matrix. Index structures for the
/// source and target tensor algebras are built once per applier.
class TensorApplier {
public:
    TensorApplier(LinearMap f, LinearMap g);

    const TensorIndex& source_index() const { return src_; }
    const TensorIndex& target_index() const { return dst_; }

    AlgebraElement apply(const AlgebraElement& x) const;

private:
    LinearMap f_, g_;
    TensorIndex src_, dst_;
};

/// Materialized f (x) g as a linear map; use only when the resulting
/// matrix is small.
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);

/// Materialized tensor product of verified maps, with flags derived from
/// the factor flags (no re-verification: the tensor product of
/// *-homomorphisms is a *-homomorphism, and surjectivity/injectivity pass
/// to the tensor product in finite dimension).
StarHom tensor_hom(const StarHom& f, const StarHom& g);

}  // namespace magiclim
