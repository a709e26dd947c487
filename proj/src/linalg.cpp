#include "magiclim/linalg.hpp"

#include <stdexcept>

namespace magiclim {

Mat vec(const Mat& m) {
    Mat v(m.data.size(), 1);
    for (std::size_t k = 0; k < m.data.size(); ++k) v.at(k, 0) = m.data[k];
    return v;
}

RowEchelon rref(Mat a) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t piv = a.rows;
        for (std::size_t r = row; r < a.rows; ++r) {
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == a.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(row, j));
        Scalar p = a.at(row, col);
        for (std::size_t j = col; j < a.cols; ++j)
            if (!a.at(row, j).exact_zero()) a.at(row, j) /= p;
        for (std::size_t r = 0; r < a.rows; ++r) {
            if (r == row) continue;
            Scalar f = a.at(r, col);
            if (f.exact_zero()) continue;
            for (std::size_t j = col; j < a.cols; ++j) {
                const Scalar& prj = a.at(row, j);
                if (prj.exact_zero()) continue;
                a.at(r, j) -= f * prj;
            }
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = out.pivot_cols.size();
    out.mat = std::move(a);
    return out;
}

std::size_t rank(const Mat& a) { return rref(a).rank; }

std::vector<Mat> nullspace(const Mat& a) {
    RowEchelon e = rref(a);
    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t pc : e.pivot_cols) is_pivot[pc] = true;
    std::vector<Mat> basis;
    for (std::size_t f = 0; f < a.cols; ++f) {
        if (is_pivot[f]) continue;
        Mat v(a.cols, 1);
        v.at(f, 0) = Scalar(1);
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
            v.at(e.pivot_cols[k], 0) = -e.mat.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat inverse(const Mat& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = a.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    RowEchelon e = rref(std::move(aug));
    if (e.rank != n || e.pivot_cols.back() >= n)
        throw std::invalid_argument("matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
    return inv;
}

Mat range_projection(const std::vector<Mat>& pieces) {
    if (pieces.empty()) throw std::invalid_argument("range_projection of empty list");
    std::size_t d = pieces.front().rows;
    for (const auto& p : pieces)
        if (p.rows != d) throw std::invalid_argument("range_projection row dimension mismatch");
    Mat v = Mat::hstack(pieces);
    RowEchelon e = rref(v);
    if (e.rank == 0) return Mat::zeros(d, d);
    std::vector<Mat> cols;
    cols.reserve(e.rank);
    for (std::size_t pc : e.pivot_cols) cols.push_back(v.column(pc));
    Mat b = Mat::hstack(cols);
    Mat bstar = b.adjoint();
    Mat gram = bstar * b;
    return b * inverse(gram) * bstar;
}

std::vector<Mat> commutant_basis(const std::vector<Mat>& generators, std::size_t d) {
    for (const auto& g : generators)
        if (g.rows != d || g.cols != d)
            throw std::invalid_argument("commutant generator is not d x d");
    // Unknown X as vec(X) row-major; one equation per (generator law, i, j):
    //   sum_k X_ik L_kj - L_ik X_kj = 0.
    std::vector<Mat> laws;
    for (const auto& g : generators) {
        laws.push_back(g);
        laws.push_back(g.adjoint());
    }
    Mat sys(laws.size() * d * d, d * d);
    std::size_t r = 0;
    for (const auto& l : laws) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j, ++r) {
                for (std::size_t k = 0; k < d; ++k) {
                    if (!l.at(k, j).exact_zero()) sys.at(r, i * d + k) += l.at(k, j);
                    if (!l.at(i, k).exact_zero()) sys.at(r, k * d + j) -= l.at(i, k);
                }
            }
    }
    std::vector<Mat> out;
    for (const Mat& v : nullspace(sys)) {
        Mat x(d, d);
        for (std::size_t k = 0; k < d * d; ++k) x.data[k] = v.at(k, 0);
        out.push_back(std::move(x));
    }
    return out;
}

bool is_psd(const Mat& h) {
    if (!h.is_square()) return false;
    if (!mat_eq(h, h.adjoint())) return false;
    Mat w = h;
    std::vector<std::size_t> active(w.rows);
    for (std::size_t i = 0; i < w.rows; ++i) active[i] = i;
    while (!active.empty()) {
        std::size_t kpos = active.size();
        for (std::size_t t = 0; t < active.size(); ++t) {
            const Scalar& dkk = w.at(active[t], active[t]);
            if (dkk.is_zero()) continue;
            if (sgn(dkk.re) < 0) return false;
            kpos = t;
            break;
        }
        if (kpos == active.size()) {
            // All remaining diagonal entries vanish: PSD iff the rest of the
            // matrix vanishes too.
            for (std::size_t a : active)
                for (std::size_t b : active)
                    if (!w.at(a, b).is_zero()) return false;
            return true;
        }
        std::size_t k = active[kpos];
        Scalar dkk = w.at(k, k);
        for (std::size_t a : active) {
            if (a == k) continue;
            Scalar f = w.at(a, k) / dkk;
            if (f.exact_zero()) continue;
            for (std::size_t b : active) {
                if (b == k) continue;
                w.at(a, b) -= f * w.at(k, b);
            }
        }
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(kpos));
    }
    return true;
}

SpanIndex::SpanIndex(const std::vector<Mat>& basis) {
    if (!basis.empty()) {
        rows_ = basis.front().rows;
        cols_ = basis.front().cols;
    }
    Mat stack(basis.size(), rows_ * cols_);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].rows != rows_ || basis[i].cols != cols_)
            throw std::invalid_argument("SpanIndex basis shape mismatch");
        for (std::size_t k = 0; k < basis[i].data.size(); ++k)
            stack.at(i, k) = basis[i].data[k];
    }
    ech_ = rref(std::move(stack));
}

bool SpanIndex::contains(const Mat& m) const {
    if (m.rows != rows_ || m.cols != cols_) return false;
    std::vector<Scalar> r = m.data;
    for (std::size_t k = 0; k < ech_.pivot_cols.size(); ++k) {
        std::size_t pc = ech_.pivot_cols[k];
        Scalar f = r[pc];
        if (f.exact_zero()) continue;
        for (std::size_t j = pc; j < r.size(); ++j) {
            const Scalar& rowj = ech_.mat.at(k, j);
            if (rowj.exact_zero()) continue;
            r[j] -= f * rowj;
        }
    }
    for (const auto& s : r)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace magiclim
