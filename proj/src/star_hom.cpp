#include "magiclim/star_hom.hpp"

#include <stdexcept>
#include <tuple>

#include "magiclim/linalg.hpp"

namespace magiclim {

LinearMap::LinearMap(MultiMatrixAlgebra src, MultiMatrixAlgebra tgt, Mat a)
    : source(std::move(src)), target(std::move(tgt)), action(std::move(a)) {
    if (action.rows != target.dim() || action.cols != source.dim())
        throw std::invalid_argument("linear map action has wrong shape (" +
                                    std::to_string(action.rows) + "x" +
                                    std::to_string(action.cols) + " for " + source.str() +
                                    " -> " + target.str() + ")");
}

AlgebraElement LinearMap::apply(const AlgebraElement& x) const {
    if (x.algebra() != source) throw std::invalid_argument("apply: element not in source algebra");
    Mat cx = x.to_coords();
    Mat out(target.dim(), 1);
    for (std::size_t s = 0; s < cx.rows; ++s) {
        const Scalar& xs = cx.at(s, 0);
        if (xs.exact_zero()) continue;
        for (std::size_t t = 0; t < action.rows; ++t) {
            const Scalar& ats = action.at(t, s);
            if (ats.exact_zero()) continue;
            out.at(t, 0) += ats * xs;
        }
    }
    return target.from_coords(out);
}

AlgebraElement LinearMap::apply_basis(std::size_t c) const {
    return target.from_coords(action.column(c));
}

LinearMap identity_map(const MultiMatrixAlgebra& a) {
    return LinearMap(a, a, Mat::identity(a.dim()));
}

LinearMap zero_map(const MultiMatrixAlgebra& src, const MultiMatrixAlgebra& tgt) {
    return LinearMap(src, tgt, Mat::zeros(tgt.dim(), src.dim()));
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (g.target != f.source) throw std::invalid_argument("compose: inner target != outer source");
    return LinearMap(g.source, f.target, f.action * g.action);
}

bool map_eq(const LinearMap& f, const LinearMap& g) {
    return f.source == g.source && f.target == g.target && mat_eq(f.action, g.action);
}

namespace {

struct UnitIndex {
    std::size_t block, row, col;
};

std::vector<UnitIndex> unit_table(const MultiMatrixAlgebra& a) {
    std::vector<UnitIndex> table(a.dim());
    std::size_t c = 0;
    for (std::size_t b = 0; b < a.num_blocks(); ++b) {
        std::size_t k = a.block_dim(b);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j, ++c) table[c] = {b, i, j};
    }
    return table;
}

/// Coordinate of the adjoint of basis element c (matrix units: e_ij* = e_ji).
std::size_t adjoint_coord(const MultiMatrixAlgebra& a, const UnitIndex& u) {
    return a.block_offset(u.block) + u.col * a.block_dim(u.block) + u.row;
}

}  // namespace

StarHom verify_star_hom(const MultiMatrixAlgebra& source, const MultiMatrixAlgebra& target,
                        Mat action) {
    return verify_star_hom(LinearMap(source, target, std::move(action)));
}

StarHom verify_star_hom(LinearMap m) {
    const MultiMatrixAlgebra& src = m.source;
    const MultiMatrixAlgebra& tgt = m.target;
    const std::size_t dim = src.dim();
    std::vector<UnitIndex> units = unit_table(src);

    // Cache the image of every basis element once.
    std::vector<AlgebraElement> cols;
    cols.reserve(dim);
    std::vector<bool> col_zero(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        cols.push_back(m.apply_basis(c));
        col_zero[c] = cols[c].exact_zero();
    }

    HomFlags flags;

    // Star preservation: h(e*) = h(e)* on every basis element; the law
    // extends to all elements by conjugate-linearity of the involution.
    flags.star = true;
    std::optional<Witness> star_witness;
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t cadj = adjoint_coord(src, units[c]);
        if (cols[cadj] != cols[c].adjoint()) {
            flags.star = false;
            star_witness = Witness({c}, "h(e*) != h(e)* at basis element " + std::to_string(c));
            break;
        }
    }

    // Product laws on all basis pairs. Matrix units multiply by
    // e_{ij} e_{kl} = [j == k] e_{il} within one block, so the expected
    // image is a cached column or zero.
    flags.multiplicative = true;
    flags.antimultiplicative = true;
    std::optional<Witness> mult_witness, anti_witness;
    const AlgebraElement zero_t = tgt.zero();
    for (std::size_t c1 = 0; c1 < dim && (flags.multiplicative || flags.antimultiplicative);
         ++c1) {
        const UnitIndex& u1 = units[c1];
        for (std::size_t c2 = 0; c2 < dim; ++c2) {
            const UnitIndex& u2 = units[c2];
            const AlgebraElement* expected = &zero_t;
            if (u1.block == u2.block && u1.col == u2.row) {
                std::size_t cp = src.block_offset(u1.block) + u1.row * src.block_dim(u1.block) +
                                 u2.col;
                expected = &cols[cp];
            }
            bool both_nonzero = !col_zero[c1] && !col_zero[c2];
            if (flags.multiplicative) {
                bool ok = both_nonzero ? (cols[c1] * cols[c2] == *expected)
                                       : expected->is_zero();
                if (!ok) {
                    flags.multiplicative = false;
                    mult_witness = Witness({c1, c2}, "h(e_a e_b) != h(e_a) h(e_b) at pair (" +
                                                         std::to_string(c1) + "," +
                                                         std::to_string(c2) + ")");
                }
            }
            if (flags.antimultiplicative) {
                bool ok = both_nonzero ? (cols[c2] * cols[c1] == *expected)
                                       : expected->is_zero();
                if (!ok) {
                    flags.antimultiplicative = false;
                    anti_witness = Witness({c1, c2}, "h(e_a e_b) != h(e_b) h(e_a) at pair (" +
                                                         std::to_string(c1) + "," +
                                                         std::to_string(c2) + ")");
                }
            }
            if (!flags.multiplicative && !flags.antimultiplicative) break;
        }
    }

    if (!flags.star)
        throw VerifyError("verify_star_hom: map does not preserve the involution", *star_witness);
    if (!flags.multiplicative && !flags.antimultiplicative)
        throw VerifyError("verify_star_hom: map is neither multiplicative nor antimultiplicative",
                          mult_witness ? *mult_witness : Witness());

    flags.unital = (m.apply(src.identity()) == tgt.identity());

    std::size_t r = rank(m.action);
    flags.surjective = (r == tgt.dim());
    flags.injective = (r == src.dim());

    StarHom h(std::move(m), flags);

    if (flags.surjective && (flags.multiplicative || flags.antimultiplicative)) {
        // Each minimal central projection of the source maps to a central
        // projection of the target supported on at most one block (its image
        // is a quotient of a full matrix block, hence simple or zero).
        std::vector<BlockAssignment> assignment;
        std::vector<bool> hit(tgt.num_blocks(), false);
        for (std::size_t i = 0; i < src.num_blocks(); ++i) {
            AlgebraElement img =
                h.apply(CentralProjection::on_blocks(src, {i}).to_element());
            std::vector<std::size_t> sup;
            for (std::size_t j = 0; j < tgt.num_blocks(); ++j)
                if (!img.block(j).is_zero()) sup.push_back(j);
            if (sup.empty()) continue;
            if (sup.size() > 1 || !mat_eq(img.block(sup[0]), Mat::identity(tgt.block_dim(sup[0]))))
                throw VerifyError(
                    "verify_star_hom: image of a minimal central projection is not a minimal "
                    "central projection",
                    Witness({i}, "source block " + std::to_string(i)));
            std::size_t j = sup[0];
            if (hit[j] || tgt.block_dim(j) != src.block_dim(i))
                throw VerifyError("verify_star_hom: block normal form violated",
                                  Witness({i, j}, "source block " + std::to_string(i) +
                                                      " vs target block " + std::to_string(j)));
            hit[j] = true;
            assignment.push_back(BlockAssignment{j, i});
        }
        for (std::size_t j = 0; j < tgt.num_blocks(); ++j)
            if (!hit[j])
                throw VerifyError("verify_star_hom: surjection misses a target block",
                                  Witness({j}, "target block " + std::to_string(j)));
        h.block_map = std::move(assignment);
    }

    return h;
}

StarHom compose_hom(const StarHom& f, const StarHom& g) {
    LinearMap m = compose(static_cast<const LinearMap&>(f), static_cast<const LinearMap&>(g));
    HomFlags fl;
    fl.star = f.flags.star && g.flags.star;
    fl.multiplicative = (f.flags.multiplicative && g.flags.multiplicative) ||
                        (f.flags.antimultiplicative && g.flags.antimultiplicative);
    fl.antimultiplicative = (f.flags.multiplicative && g.flags.antimultiplicative) ||
                            (f.flags.antimultiplicative && g.flags.multiplicative);
    fl.unital = f.flags.unital && g.flags.unital;
    fl.surjective = f.flags.surjective && g.flags.surjective;
    fl.injective = f.flags.injective && g.flags.injective;
    return StarHom(std::move(m), fl);
}

CentralProjection kernel_central_projection(const StarHom& h) {
    if (!h.flags.surjective)
        throw VerifyError("kernel_central_projection: map is not verified surjective");
    const MultiMatrixAlgebra& src = h.source;
    std::vector<bool> support(src.num_blocks(), false);
    for (std::size_t i = 0; i < src.num_blocks(); ++i) {
        AlgebraElement img = h.apply(CentralProjection::on_blocks(src, {i}).to_element());
        support[i] = img.is_zero();
    }
    CentralProjection kernel(src, support);

    // The kernel blocks must map to zero coordinatewise...
    for (std::size_t i : kernel.support_blocks()) {
        std::size_t off = src.block_offset(i);
        std::size_t k = src.block_dim(i);
        for (std::size_t t = 0; t < k * k; ++t)
            if (!h.action.column(off + t).is_zero())
                throw VerifyError("kernel_central_projection: kernel block does not map to zero",
                                  Witness({i}, "source block " + std::to_string(i)));
    }
    // ... and the restriction to the complement must be a bijection onto
    // the target.
    CentralProjection comp = kernel.complement();
    std::size_t comp_dim = 0;
    std::vector<Mat> cols;
    for (std::size_t i : comp.support_blocks()) {
        std::size_t off = src.block_offset(i);
        std::size_t k = src.block_dim(i);
        comp_dim += k * k;
        for (std::size_t t = 0; t < k * k; ++t) cols.push_back(h.action.column(off + t));
    }
    if (comp_dim != h.target.dim() ||
        (comp_dim > 0 && rank(Mat::hstack(cols)) != h.target.dim()))
        throw VerifyError(
            "kernel_central_projection: restriction to the kernel complement is not an "
            "isomorphism onto the target");
    if (comp_dim == 0 && h.target.dim() != 0)
        throw VerifyError("kernel_central_projection: kernel is everything but target is nonzero");
    return kernel;
}

MultiMatrixAlgebra support_algebra(const CentralProjection& cp) {
    std::vector<std::size_t> dims;
    for (std::size_t i : cp.support_blocks()) dims.push_back(cp.algebra().block_dim(i));
    return MultiMatrixAlgebra(dims);
}

namespace {
bool commutative(const MultiMatrixAlgebra& a) {
    for (std::size_t k : a.block_dims())
        if (k > 1) return false;
    return true;
}
}  // namespace

StarHom compress_map(const CentralProjection& cp) {
    const MultiMatrixAlgebra& a = cp.algebra();
    MultiMatrixAlgebra sub = support_algebra(cp);
    Mat m(sub.dim(), a.dim());
    std::size_t row = 0;
    for (std::size_t i : cp.support_blocks()) {
        std::size_t off = a.block_offset(i);
        std::size_t k = a.block_dim(i);
        for (std::size_t t = 0; t < k * k; ++t, ++row) m.at(row, off + t) = Scalar(1);
    }
    HomFlags fl;
    fl.star = true;
    fl.multiplicative = true;
    fl.antimultiplicative = commutative(sub);
    fl.unital = true;  // compression onto a central summand carries 1 to 1
    fl.surjective = true;
    fl.injective = (sub.dim() == a.dim());
    return StarHom(LinearMap(a, sub, std::move(m)), fl);
}

StarHom embed_map(const CentralProjection& cp) {
    const MultiMatrixAlgebra& a = cp.algebra();
    MultiMatrixAlgebra sub = support_algebra(cp);
    Mat m(a.dim(), sub.dim());
    std::size_t col = 0;
    for (std::size_t i : cp.support_blocks()) {
        std::size_t off = a.block_offset(i);
        std::size_t k = a.block_dim(i);
        for (std::size_t t = 0; t < k * k; ++t, ++col) m.at(off + t, col) = Scalar(1);
    }
    HomFlags fl;
    fl.star = true;
    fl.multiplicative = true;
    fl.antimultiplicative = commutative(sub);
    fl.unital = (cp.support_size() == a.num_blocks());
    fl.surjective = (sub.dim() == a.dim());
    fl.injective = true;
    return StarHom(LinearMap(sub, a, std::move(m)), fl);
}

StarHom hom_from_block_assignment(const MultiMatrixAlgebra& source,
                                  const MultiMatrixAlgebra& target,
                                  const std::vector<BlockAssignment>& assignment) {
    if (assignment.size() != target.num_blocks())
        throw std::invalid_argument("block assignment must cover every target block");
    Mat m(target.dim(), source.dim());
    std::vector<bool> seen(target.num_blocks(), false);
    for (const auto& a : assignment) {
        if (a.target_block >= target.num_blocks() || a.source_block >= source.num_blocks())
            throw std::invalid_argument("block assignment index out of range");
        if (seen[a.target_block])
            throw std::invalid_argument("block assignment repeats a target block");
        seen[a.target_block] = true;
        std::size_t k = target.block_dim(a.target_block);
        if (source.block_dim(a.source_block) != k)
            throw VerifyError("block assignment dimension mismatch",
                              Witness({a.target_block, a.source_block},
                                      "target block " + std::to_string(a.target_block) +
                                          " vs source block " + std::to_string(a.source_block)));
        std::size_t toff = target.block_offset(a.target_block);
        std::size_t soff = source.block_offset(a.source_block);
        for (std::size_t t = 0; t < k * k; ++t) m.at(toff + t, soff + t) = Scalar(1);
    }
    return verify_star_hom(source, target, std::move(m));
}

}  // namespace magiclim
