#include "magiclim/matrix.hpp"

#include <stdexcept>

namespace magiclim {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
    Mat m(n, n);
    m.at(i, j) = Scalar(1);
    return m;
}

Mat Mat::col_vec(const std::vector<Scalar>& entries) {
    Mat m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

Mat Mat::diag(const std::vector<Scalar>& entries) {
    Mat m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

Mat Mat::adjoint() const {
    Mat m(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j).conj();
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::conjugate() const {
    Mat m(rows, cols);
    for (std::size_t k = 0; k < data.size(); ++k) m.data[k] = data[k].conj();
    return m;
}

Scalar Mat::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows; ++i) t += at(i, i);
    return t;
}

bool Mat::exact_zero() const {
    for (const auto& s : data)
        if (!s.exact_zero()) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& s : data)
        if (!s.is_zero()) return false;
    return true;
}

bool Mat::is_projection() const {
    if (!is_square()) return false;
    return mat_eq(*this, adjoint()) && mat_eq(*this, (*this) * (*this));
}

Mat Mat::operator-() const {
    Mat m(rows, cols);
    for (std::size_t k = 0; k < data.size(); ++k) m.data[k] = -data[k];
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    if (!shape_eq(o)) throw std::invalid_argument("matrix addition shape mismatch");
    for (std::size_t k = 0; k < data.size(); ++k) data[k] += o.data[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (!shape_eq(o)) throw std::invalid_argument("matrix subtraction shape mismatch");
    for (std::size_t k = 0; k < data.size(); ++k) data[k] -= o.data[k];
    return *this;
}

Mat Mat::column(std::size_t j) const {
    Mat c(rows, 1);
    for (std::size_t i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
    return c;
}

Mat Mat::hstack(const std::vector<Mat>& pieces) {
    if (pieces.empty()) return Mat();
    std::size_t r = pieces.front().rows, c = 0;
    for (const auto& p : pieces) {
        if (p.rows != r) throw std::invalid_argument("hstack row mismatch");
        c += p.cols;
    }
    Mat m(r, c);
    std::size_t off = 0;
    for (const auto& p : pieces) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < p.cols; ++j) m.at(i, off + j) = p.at(i, j);
        off += p.cols;
    }
    return m;
}

Mat Mat::vstack(const std::vector<Mat>& pieces) {
    if (pieces.empty()) return Mat();
    std::size_t c = pieces.front().cols, r = 0;
    for (const auto& p : pieces) {
        if (p.cols != c) throw std::invalid_argument("vstack column mismatch");
        r += p.rows;
    }
    Mat m(r, c);
    std::size_t off = 0;
    for (const auto& p : pieces) {
        for (std::size_t i = 0; i < p.rows; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(off + i, j) = p.at(i, j);
        off += p.rows;
    }
    return m;
}

Mat Mat::with_mode(NumMode m, double tolerance) const {
    Mat out(rows, cols);
    for (std::size_t k = 0; k < data.size(); ++k) out.data[k] = data[k].with_mode(m, tolerance);
    return out;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product shape mismatch");
    Mat m(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.exact_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.exact_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    }
    return m;
}

Mat operator*(const Scalar& s, Mat a) {
    for (auto& x : a.data) x *= s;
    return a;
}

bool mat_eq(const Mat& a, const Mat& b) {
    if (!a.shape_eq(b)) return false;
    for (std::size_t k = 0; k < a.data.size(); ++k)
        if (a.data[k] != b.data[k]) return false;
    return true;
}

bool operator==(const Mat& a, const Mat& b) { return mat_eq(a, b); }
bool operator!=(const Mat& a, const Mat& b) { return !mat_eq(a, b); }

Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t p = 0; p < a.rows; ++p)
        for (std::size_t q = 0; q < a.cols; ++q) {
            const Scalar& apq = a.at(p, q);
            if (apq.exact_zero()) continue;
            for (std::size_t r = 0; r < b.rows; ++r)
                for (std::size_t s = 0; s < b.cols; ++s) {
                    const Scalar& brs = b.at(r, s);
                    if (brs.exact_zero()) continue;
                    m.at(p * b.rows + r, q * b.cols + s) = apq * brs;
                }
        }
    return m;
}

Mat dsum(const std::vector<Mat>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw std::invalid_argument("dsum block not square");
        n += b.rows;
    }
    Mat m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows;
    }
    return m;
}

}  // namespace magiclim
