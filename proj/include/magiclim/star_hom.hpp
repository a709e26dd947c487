#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "magiclim/algebra.hpp"
#include "magiclim/check.hpp"

namespace magiclim {

/// Linear map between multi-matrix algebras, stored as its matrix with
/// respect to the coordinate bases (so linearity holds by construction).
struct LinearMap {
    MultiMatrixAlgebra source;
    MultiMatrixAlgebra target;
    Mat action;  // target.dim() x source.dim()

    LinearMap() = default;
    LinearMap(MultiMatrixAlgebra src, MultiMatrixAlgebra tgt, Mat a);

    AlgebraElement apply(const AlgebraElement& x) const;
    /// Image of the c-th coordinate basis element (column c).
    AlgebraElement apply_basis(std::size_t c) const;
};

LinearMap identity_map(const MultiMatrixAlgebra& a);
LinearMap zero_map(const MultiMatrixAlgebra& src, const MultiMatrixAlgebra& tgt);
/// f after g (usual composition f(g(x))).
LinearMap compose(const LinearMap& f, const LinearMap& g);
bool map_eq(const LinearMap& f, const LinearMap& g);

/// Verified algebraic properties of a linear map. Flags are set only after
/// the corresponding law has been checked on a full coordinate basis (for
/// star) or on all basis pairs (for the product laws); those checks extend
/// to the whole algebra by linearity.
struct HomFlags {
    bool star = false;
    bool multiplicative = false;
    bool antimultiplicative = false;
    bool unital = false;
    bool surjective = false;
    bool injective = false;
};

/// Normal-form record for surjections: target block j is carried by source
/// block sigma(j) (of the same size). The conjugating unitaries are not
/// computed; all laws are verified without them.
struct BlockAssignment {
    std::size_t target_block;
    std::size_t source_block;
};

/// A linear map together with its verified flags.
struct StarHom : LinearMap {
    HomFlags flags;
    std::optional<std::vector<BlockAssignment>> block_map;

    StarHom() = default;
    StarHom(LinearMap m, HomFlags f) : LinearMap(std::move(m)), flags(f) {}

    bool is_hom() const { return flags.star && flags.multiplicative; }
    bool is_antihom() const { return flags.star && flags.antimultiplicative; }
};

/// Check all laws of a candidate map and return it with flags set. Throws
/// VerifyError (with the violated basis pair as witness) when the map is
/// not star-preserving or is neither multiplicative nor antimultiplicative;
/// a star-preserving antimultiplicative map is returned flagged as an
/// antihomomorphism rather than rejected. For surjective maps that are a
/// homomorphism or antihomomorphism the block_map normal form is computed.
StarHom verify_star_hom(const MultiMatrixAlgebra& source, const MultiMatrixAlgebra& target,
                        Mat action);
StarHom verify_star_hom(LinearMap m);

/// Compose two verified maps; flags follow the composition laws
/// (anti after anti is multiplicative, and so on) without re-verification.
StarHom compose_hom(const StarHom& f, const StarHom& g);

/// Central projection onto the source blocks killed by a verified
/// surjection; checks that h restricted to the complement is a bijection
/// onto the target.
CentralProjection kernel_central_projection(const StarHom& h);

/// The multi-matrix algebra formed by the supported blocks of cp.
MultiMatrixAlgebra support_algebra(const CentralProjection& cp);
/// Coordinate projection A -> support_algebra(cp).
StarHom compress_map(const CentralProjection& cp);
/// Coordinate inclusion support_algebra(cp) -> A.
StarHom embed_map(const CentralProjection& cp);

/// Build the map determined by a block assignment with identity
/// conjugations, then verify it.
StarHom hom_from_block_assignment(const MultiMatrixAlgebra& source,
                                  const MultiMatrixAlgebra& target,
                                  const std::vector<BlockAssignment>& assignment);

}  // namespace magiclim
