#include "magiclim/tensor.hpp"

#include <stdexcept>

namespace magiclim {

MultiMatrixAlgebra tensor_algebra(const MultiMatrixAlgebra& a, const MultiMatrixAlgebra& b) {
    std::vector<std::size_t> dims;
    dims.reserve(a.num_blocks() * b.num_blocks());
    for (std::size_t i = 0; i < a.num_blocks(); ++i)
        for (std::size_t j = 0; j < b.num_blocks(); ++j)
            dims.push_back(a.block_dim(i) * b.block_dim(j));
    return MultiMatrixAlgebra(dims);
}

TensorIndex::TensorIndex(MultiMatrixAlgebra left, MultiMatrixAlgebra right)
    : left_(std::move(left)), right_(std::move(right)),
      product_(tensor_algebra(left_, right_)) {
    to_pair_.resize(product_.dim());
    from_pair_.resize(left_.dim() * right_.dim());
    std::size_t tc = 0;
    for (std::size_t i = 0; i < left_.num_blocks(); ++i) {
        std::size_t k = left_.block_dim(i);
        for (std::size_t j = 0; j < right_.num_blocks(); ++j) {
            std::size_t l = right_.block_dim(j);
            // Entry ((p,r),(q,s)) of the Kronecker block is the tensor of
            // matrix units e_pq (x) e_rs.
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t r = 0; r < l; ++r)
                    for (std::size_t q = 0; q < k; ++q)
                        for (std::size_t s = 0; s < l; ++s, ++tc) {
                            std::size_t ca = left_.block_offset(i) + p * k + q;
                            std::size_t cb = right_.block_offset(j) + r * l + s;
                            to_pair_[tc] = {ca, cb};
                            from_pair_[ca * right_.dim() + cb] = tc;
                        }
        }
    }
}

AlgebraElement tensor_elem(const TensorIndex& idx, const AlgebraElement& a,
                           const AlgebraElement& b) {
    if (a.algebra() != idx.left() || b.algebra() != idx.right())
        throw std::invalid_argument("tensor_elem: factors not in the index algebras");
    std::vector<Mat> blocks;
    blocks.reserve(idx.product().num_blocks());
    for (std::size_t i = 0; i < a.blocks().size(); ++i)
        for (std::size_t j = 0; j < b.blocks().size(); ++j)
            blocks.push_back(kron(a.block(i), b.block(j)));
    return AlgebraElement(idx.product(), std::move(blocks));
}

AlgebraElement tensor_elem(const AlgebraElement& a, const AlgebraElement& b) {
    TensorIndex idx(a.algebra(), b.algebra());
    return tensor_elem(idx, a, b);
}

namespace {

using SparseCol = std::vector<std::pair<std::size_t, Scalar>>;

std::vector<SparseCol> sparse_columns(const Mat& action) {
    std::vector<SparseCol> cols(action.cols);
    for (std::size_t t = 0; t < action.rows; ++t)
        for (std::size_t s = 0; s < action.cols; ++s) {
            const Scalar& v = action.at(t, s);
            if (!v.exact_zero()) cols[s].emplace_back(t, v);
        }
    return cols;
}

}  // namespace

TensorApplier::TensorApplier(LinearMap f, LinearMap g)
    : f_(std::move(f)), g_(std::move(g)),
      src_(f_.source, g_.source), dst_(f_.target, g_.target) {}

AlgebraElement TensorApplier::apply(const AlgebraElement& x) const {
    if (x.algebra() != src_.product())
        throw std::invalid_argument("TensorApplier: element not in the source tensor algebra");
    Mat cx = x.to_coords();
    Mat out(dst_.product().dim(), 1);
    for (std::size_t tc = 0; tc < cx.rows; ++tc) {
        const Scalar& xv = cx.at(tc, 0);
        if (xv.exact_zero()) continue;
        auto [ca, cb] = src_.split(tc);
        for (std::size_t ta = 0; ta < f_.action.rows; ++ta) {
            const Scalar& fv = f_.action.at(ta, ca);
            if (fv.exact_zero()) continue;
            Scalar xf = xv * fv;
            for (std::size_t tb = 0; tb < g_.action.rows; ++tb) {
                const Scalar& gv = g_.action.at(tb, cb);
                if (gv.exact_zero()) continue;
                out.at(dst_.fuse(ta, tb), 0) += xf * gv;
            }
        }
    }
    return dst_.product().from_coords(out);
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
    TensorIndex src(f.source, g.source);
    TensorIndex dst(f.target, g.target);
    std::vector<SparseCol> fcols = sparse_columns(f.action);
    std::vector<SparseCol> gcols = sparse_columns(g.action);
    Mat m(dst.product().dim(), src.product().dim());
    for (std::size_t tc = 0; tc < src.product().dim(); ++tc) {
        auto [ca, cb] = src.split(tc);
        for (const auto& [ta, fv] : fcols[ca])
            for (const auto& [tb, gv] : gcols[cb]) m.at(dst.fuse(ta, tb), tc) += fv * gv;
    }
    return LinearMap(src.product(), dst.product(), std::move(m));
}

StarHom tensor_hom(const StarHom& f, const StarHom& g) {
    LinearMap m = tensor_map(f, g);
    HomFlags fl;
    fl.star = f.flags.star && g.flags.star;
    fl.multiplicative = f.flags.multiplicative && g.flags.multiplicative;
    fl.antimultiplicative = f.flags.antimultiplicative && g.flags.antimultiplicative;
    fl.unital = f.flags.unital && g.flags.unital;
    fl.surjective = f.flags.surjective && g.flags.surjective;
    fl.injective = f.flags.injective && g.flags.injective;
    return StarHom(std::move(m), fl);
}

}  // namespace magiclim
