#include "magiclim/algebra.hpp"

#include <stdexcept>

#include "magiclim/check.hpp"
#include "magiclim/linalg.hpp"

namespace magiclim {

MultiMatrixAlgebra::MultiMatrixAlgebra(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    offsets_.reserve(dims_.size());
    for (std::size_t k : dims_) {
        if (k == 0) throw std::invalid_argument("block of size 0 is not allowed");
        offsets_.push_back(dim_);
        dim_ += k * k;
    }
}

MultiMatrixAlgebra MultiMatrixAlgebra::functions(std::size_t n) {
    return MultiMatrixAlgebra(std::vector<std::size_t>(n, 1));
}

AlgebraElement MultiMatrixAlgebra::zero() const {
    std::vector<Mat> blocks;
    blocks.reserve(dims_.size());
    for (std::size_t k : dims_) blocks.push_back(Mat::zeros(k, k));
    return AlgebraElement(*this, std::move(blocks));
}

AlgebraElement MultiMatrixAlgebra::identity() const {
    std::vector<Mat> blocks;
    blocks.reserve(dims_.size());
    for (std::size_t k : dims_) blocks.push_back(Mat::identity(k));
    return AlgebraElement(*this, std::move(blocks));
}

AlgebraElement MultiMatrixAlgebra::basis_element(std::size_t c) const {
    if (c >= dim_) throw std::out_of_range("basis index out of range");
    AlgebraElement e = zero();
    for (std::size_t b = 0; b < dims_.size(); ++b) {
        std::size_t k = dims_[b];
        if (c < offsets_[b] + k * k) {
            std::size_t local = c - offsets_[b];
            e.block(b).at(local / k, local % k) = Scalar(1);
            return e;
        }
    }
    throw std::logic_error("unreachable");
}

AlgebraElement MultiMatrixAlgebra::element(std::vector<Mat> blocks) const {
    return AlgebraElement(*this, std::move(blocks));
}

AlgebraElement MultiMatrixAlgebra::from_coords(const Mat& column) const {
    if (column.rows != dim_ || column.cols != 1)
        throw std::invalid_argument("coordinate column has wrong dimension");
    std::vector<Mat> blocks;
    blocks.reserve(dims_.size());
    for (std::size_t b = 0; b < dims_.size(); ++b) {
        std::size_t k = dims_[b];
        Mat m(k, k);
        for (std::size_t t = 0; t < k * k; ++t) m.data[t] = column.at(offsets_[b] + t, 0);
        blocks.push_back(std::move(m));
    }
    return AlgebraElement(*this, std::move(blocks));
}

std::string MultiMatrixAlgebra::str() const {
    if (dims_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) s += "+";
        s += "M" + std::to_string(dims_[i]);
    }
    return s;
}

AlgebraElement::AlgebraElement(MultiMatrixAlgebra algebra, std::vector<Mat> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
    if (blocks_.size() != algebra_.num_blocks())
        throw std::invalid_argument("element block count mismatch");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].rows != algebra_.block_dim(i) || blocks_[i].cols != algebra_.block_dim(i))
            throw std::invalid_argument("element block " + std::to_string(i) + " has wrong shape");
}

AlgebraElement AlgebraElement::adjoint() const {
    std::vector<Mat> blocks;
    blocks.reserve(blocks_.size());
    for (const Mat& b : blocks_) blocks.push_back(b.adjoint());
    return AlgebraElement(algebra_, std::move(blocks));
}

bool AlgebraElement::is_projection() const {
    for (const Mat& b : blocks_)
        if (!b.is_projection()) return false;
    return true;
}

bool AlgebraElement::is_zero() const {
    for (const Mat& b : blocks_)
        if (!b.is_zero()) return false;
    return true;
}

bool AlgebraElement::exact_zero() const {
    for (const Mat& b : blocks_)
        if (!b.exact_zero()) return false;
    return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (algebra_ != o.algebra_) throw std::invalid_argument("element addition algebra mismatch");
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += o.blocks_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (algebra_ != o.algebra_) throw std::invalid_argument("element subtraction algebra mismatch");
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= o.blocks_[i];
    return *this;
}

AlgebraElement AlgebraElement::operator-() const {
    std::vector<Mat> blocks;
    blocks.reserve(blocks_.size());
    for (const Mat& b : blocks_) blocks.push_back(-b);
    return AlgebraElement(algebra_, std::move(blocks));
}

Mat AlgebraElement::to_coords() const {
    Mat c(algebra_.dim(), 1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        std::size_t off = algebra_.block_offset(b);
        for (std::size_t t = 0; t < blocks_[b].data.size(); ++t)
            c.at(off + t, 0) = blocks_[b].data[t];
    }
    return c;
}

std::string AlgebraElement::str() const {
    std::string s = "[";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += "; ";
        for (std::size_t t = 0; t < blocks_[b].data.size(); ++t) {
            if (t) s += ",";
            s += blocks_[b].data[t].str();
        }
    }
    return s + "]";
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra() != b.algebra())
        throw std::invalid_argument("element product algebra mismatch");
    std::vector<Mat> blocks;
    blocks.reserve(a.blocks().size());
    for (std::size_t i = 0; i < a.blocks().size(); ++i) {
        const Mat& x = a.block(i);
        const Mat& y = b.block(i);
        if (x.exact_zero() || y.exact_zero())
            blocks.push_back(Mat::zeros(x.rows, x.rows));
        else
            blocks.push_back(x * y);
    }
    return AlgebraElement(a.algebra(), std::move(blocks));
}

AlgebraElement operator*(const Scalar& s, AlgebraElement a) {
    for (std::size_t i = 0; i < a.blocks().size(); ++i) a.block(i) = s * a.block(i);
    return a;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra() != b.algebra()) return false;
    for (std::size_t i = 0; i < a.blocks().size(); ++i)
        if (!mat_eq(a.block(i), b.block(i))) return false;
    return true;
}

bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

CentralProjection::CentralProjection(MultiMatrixAlgebra algebra, std::vector<bool> support)
    : algebra_(std::move(algebra)), support_(std::move(support)) {
    if (support_.size() != algebra_.num_blocks())
        throw std::invalid_argument("central projection support size mismatch");
}

CentralProjection CentralProjection::zero(const MultiMatrixAlgebra& a) {
    return CentralProjection(a, std::vector<bool>(a.num_blocks(), false));
}

CentralProjection CentralProjection::one(const MultiMatrixAlgebra& a) {
    return CentralProjection(a, std::vector<bool>(a.num_blocks(), true));
}

CentralProjection CentralProjection::on_blocks(const MultiMatrixAlgebra& a,
                                               const std::vector<std::size_t>& blocks) {
    std::vector<bool> s(a.num_blocks(), false);
    for (std::size_t b : blocks) s.at(b) = true;
    return CentralProjection(a, std::move(s));
}

std::vector<std::size_t> CentralProjection::support_blocks() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < support_.size(); ++i)
        if (support_[i]) out.push_back(i);
    return out;
}

std::size_t CentralProjection::support_size() const { return support_blocks().size(); }

CentralProjection CentralProjection::complement() const {
    std::vector<bool> s(support_.size());
    for (std::size_t i = 0; i < support_.size(); ++i) s[i] = !support_[i];
    return CentralProjection(algebra_, std::move(s));
}

bool CentralProjection::dominates(const CentralProjection& o) const {
    for (std::size_t i = 0; i < support_.size(); ++i)
        if (o.support_[i] && !support_[i]) return false;
    return true;
}

AlgebraElement CentralProjection::to_element() const {
    AlgebraElement e = algebra_.zero();
    for (std::size_t i = 0; i < support_.size(); ++i)
        if (support_[i]) e.block(i) = Mat::identity(algebra_.block_dim(i));
    return e;
}

AlgebraElement CentralProjection::compress(const AlgebraElement& x) const {
    if (x.algebra() != algebra_)
        throw std::invalid_argument("central projection compress algebra mismatch");
    AlgebraElement e = x;
    for (std::size_t i = 0; i < support_.size(); ++i)
        if (!support_[i]) e.block(i) = Mat::zeros(algebra_.block_dim(i), algebra_.block_dim(i));
    return e;
}

std::string CentralProjection::str() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t b : support_blocks()) {
        if (!first) s += ",";
        s += std::to_string(b + 1);
        first = false;
    }
    return s + "}";
}

AlgebraElement sup_projections(const std::vector<AlgebraElement>& ps) {
    if (ps.empty()) throw std::invalid_argument("sup_projections of empty list");
    const MultiMatrixAlgebra& a = ps.front().algebra();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].algebra() != a)
            throw VerifyError("sup_projections: inputs live in different algebras",
                              Witness({i}, "operand " + std::to_string(i)));
        if (!ps[i].is_projection())
            throw VerifyError("sup_projections: input is not a projection",
                              Witness({i}, "operand " + std::to_string(i) + " fails p = p* = p^2"));
    }
    AlgebraElement out = a.zero();
    for (std::size_t b = 0; b < a.num_blocks(); ++b) {
        std::vector<Mat> pieces;
        pieces.reserve(ps.size());
        for (const auto& p : ps) pieces.push_back(p.block(b));
        out.block(b) = range_projection(pieces);
    }
    return out;
}

CentralProjection central_carrier(const AlgebraElement& p) {
    if (!p.is_projection())
        throw VerifyError("central_carrier: input is not a projection",
                          Witness("fails p = p* = p^2"));
    std::vector<bool> support(p.algebra().num_blocks());
    for (std::size_t b = 0; b < support.size(); ++b) support[b] = !p.block(b).is_zero();
    return CentralProjection(p.algebra(), std::move(support));
}

}  // namespace magiclim
