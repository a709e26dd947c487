#include "doctest.h"

#include <random>

#include "magiclim/linalg.hpp"
#include "magiclim/matrix.hpp"
#include "magiclim/scalar.hpp"

using namespace magiclim;

namespace {

std::mt19937 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
    return std::mt19937(seq);
}

Scalar random_rational(std::mt19937& g, bool allow_imag = true) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> coin(0, 3);
    mpq_class re(num(g), den(g));
    re.canonicalize();
    mpq_class im(0);
    if (allow_imag && coin(g) == 0) {
        im = mpq_class(num(g), den(g));
        im.canonicalize();
    }
    return Scalar(re, im);
}

Mat random_mat(std::mt19937& g, std::size_t r, std::size_t c, bool allow_imag = true) {
    Mat m(r, c);
    for (auto& x : m.data) x = random_rational(g, allow_imag);
    return m;
}

// Independent projection oracle: unnormalized Gram-Schmidt, P = sum v v*/<v,v>.
// Stays rational because only squared norms are divided by.
Mat gram_schmidt_projection(std::vector<Mat> vecs) {
    std::vector<Mat> ortho;
    for (Mat v : vecs) {
        for (const Mat& u : ortho) {
            Scalar coeff = (u.adjoint() * v).at(0, 0) / (u.adjoint() * u).at(0, 0);
            v -= coeff * u;
        }
        if (!v.exact_zero()) ortho.push_back(v);
    }
    std::size_t d = vecs.front().rows;
    Mat p = Mat::zeros(d, d);
    for (const Mat& u : ortho) {
        Scalar n2 = (u.adjoint() * u).at(0, 0);
        p += (Scalar(1) / n2) * (u * u.adjoint());
    }
    return p;
}

}  // namespace

TEST_CASE("scalar arithmetic and parsing") {
    Scalar a = Scalar::rational("3/4");
    Scalar b = Scalar::rational("-1/2");
    CHECK(a + b == Scalar::rational("1/4"));
    CHECK(a * b == Scalar::rational("-3/8"));
    CHECK((a / b) == Scalar::rational("-3/2"));
    Scalar z(mpq_class(1, 2), mpq_class(1, 3));
    CHECK(z * z.conj() == Scalar(z.norm2()));
    CHECK_THROWS_AS(Scalar::rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::rational("abc"), std::invalid_argument);

    // Float mode: equality is tolerance-based, arithmetic stays exact.
    Scalar f = Scalar::decimal(0.5, 1e-9);
    CHECK(f == Scalar::rational("1/2"));
    Scalar g = f + Scalar::decimal(1e-12, 1e-9);
    CHECK(g == Scalar::rational("1/2"));
    CHECK(Scalar::decimal(0.5, 1e-15) != Scalar::decimal(0.5 + 1e-9, 1e-15));
}

TEST_CASE("kron identities") {
    CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
    CHECK(kron(Mat::unit(2, 0, 0), Mat::unit(2, 0, 0)) == Mat::unit(4, 0, 0));

    // Entrywise expansion oracle on random rational 2x2 inputs.
    auto g = rng_for("kron-oracle");
    for (int rep = 0; rep < 10; ++rep) {
        Mat a = random_mat(g, 2, 2), b = random_mat(g, 2, 2);
        Mat k = kron(a, b);
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = 0; q < 2; ++q)
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t s = 0; s < 2; ++s)
                        CHECK(k.at(p * 2 + r, q * 2 + s) == a.at(p, q) * b.at(r, s));
    }
}

TEST_CASE("kron mixed product and bilinearity") {
    auto g = rng_for("kron-mixed");
    for (int rep = 0; rep < 12; ++rep) {
        Mat a = random_mat(g, 2, 3), b = random_mat(g, 3, 2);
        Mat c = random_mat(g, 3, 2), d = random_mat(g, 2, 3);
        CHECK(kron(a, c) * kron(b, d) == kron(a * b, c * d));
        Mat a2 = random_mat(g, 2, 3);
        CHECK(kron(a + a2, c) == kron(a, c) + kron(a2, c));
    }
}

TEST_CASE("dsum placement and trace") {
    CHECK(dsum({Mat::identity(1), Mat::identity(2)}) == Mat::identity(3));
    auto gs = rng_for("dsum-single");
    Mat a = random_mat(gs, 3, 3);
    CHECK(dsum({a}) == a);

    Mat placed = dsum({Mat::unit(2, 0, 0), Mat::zeros(1, 1)});
    Mat expect(3, 3);
    expect.at(0, 0) = Scalar(1);
    CHECK(placed == expect);

    auto g = rng_for("dsum-trace");
    Mat x = random_mat(g, 2, 2), y = random_mat(g, 3, 3);
    CHECK(dsum({x, y}).trace() == x.trace() + y.trace());
}

TEST_CASE("range_projection basics") {
    CHECK(range_projection({Mat::identity(4)}) == Mat::identity(4));
    CHECK(range_projection({Mat::zeros(3, 2)}) == Mat::zeros(3, 3));

    // span{e_1, e_1+e_2} in dimension 3 -> diag(1,1,0), cross-checked by the
    // Gram-Schmidt oracle.
    Mat e1(3, 1), e12(3, 1);
    e1.at(0, 0) = Scalar(1);
    e12.at(0, 0) = Scalar(1);
    e12.at(1, 0) = Scalar(1);
    Mat p = range_projection({e1, e12});
    Mat frozen(3, 3);
    frozen.at(0, 0) = Scalar(1);
    frozen.at(1, 1) = Scalar(1);
    CHECK(p == frozen);
    CHECK(p == gram_schmidt_projection({e1, e12}));
}

TEST_CASE("range_projection is a projection, fixes projections, monotone") {
    auto g = rng_for("range-props");
    for (int rep = 0; rep < 8; ++rep) {
        Mat v = random_mat(g, 4, 2);
        Mat p = range_projection({v});
        CHECK(p.is_projection());
        CHECK(p * v == v);
        CHECK(range_projection({p}) == p);

        // Monotone: adding vectors can only enlarge the range.
        Mat w = random_mat(g, 4, 1);
        Mat q = range_projection({v, w});
        CHECK(q * p == p);
    }
}

TEST_CASE("range_projection against Gram-Schmidt oracle on random spans") {
    auto g = rng_for("range-oracle");
    for (int rep = 0; rep < 8; ++rep) {
        std::vector<Mat> vecs;
        for (int k = 0; k < 3; ++k) vecs.push_back(random_mat(g, 4, 1));
        Mat p = range_projection({Mat::hstack(vecs)});
        CHECK(p == gram_schmidt_projection(vecs));
    }
}

TEST_CASE("commutant_basis examples") {
    // Commutant of the identity is everything.
    CHECK(commutant_basis({Mat::identity(3)}, 3).size() == 9);

    // {e_11, e_12+e_21} generates M_2; its commutant is the scalars.
    Mat e11 = Mat::unit(2, 0, 0);
    Mat flip = Mat::unit(2, 0, 1) + Mat::unit(2, 1, 0);
    auto c = commutant_basis({e11, flip}, 2);
    REQUIRE(c.size() == 1);
    SpanIndex span(c);
    CHECK(span.contains(Mat::identity(2)));

    // Two diagonal units cut the commutant down to the diagonal algebra.
    Mat d1 = Mat::unit(3, 0, 0), d2 = Mat::unit(3, 1, 1);
    auto diag = commutant_basis({d1, d2}, 3);
    CHECK(diag.size() == 3);
    SpanIndex dspan(diag);
    CHECK(dspan.contains(Mat::unit(3, 2, 2)));
    CHECK(!dspan.contains(Mat::unit(3, 0, 1)));
}

TEST_CASE("commutant elements really commute") {
    auto g = rng_for("commutant-law");
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<Mat> gens = {random_mat(g, 3, 3), random_mat(g, 3, 3)};
        for (const Mat& x : commutant_basis(gens, 3))
            for (const Mat& gen : gens) {
                CHECK(x * gen == gen * x);
                CHECK(x * gen.adjoint() == gen.adjoint() * x);
            }
    }
}

TEST_CASE("bicommutant contains generators (d <= 6)") {
    auto g = rng_for("bicommutant");
    for (std::size_t d = 2; d <= 6; ++d) {
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<Mat> gens;
            for (int k = 0; k < 2; ++k) gens.push_back(random_mat(g, d, d, false));
            auto comm = commutant_basis(gens, d);
            auto bicomm = commutant_basis(comm, d);
            SpanIndex span(bicomm);
            for (const Mat& gen : gens) CHECK(span.contains(gen));
            CHECK(span.contains(Mat::identity(d)));
        }
    }
}

TEST_CASE("rref, nullspace, inverse") {
    auto g = rng_for("rref");
    for (int rep = 0; rep < 6; ++rep) {
        Mat a = random_mat(g, 4, 6);
        auto ns = nullspace(a);
        CHECK(ns.size() == a.cols - rank(a));
        for (const Mat& v : ns) CHECK((a * v).exact_zero());
    }
    for (int rep = 0; rep < 6; ++rep) {
        Mat a = random_mat(g, 4, 4);
        if (rank(a) < 4) continue;
        CHECK(a * inverse(a) == Mat::identity(4));
    }
    Mat sing(2, 2);
    sing.at(0, 0) = Scalar(1);
    CHECK_THROWS_AS(inverse(sing), std::invalid_argument);
}

TEST_CASE("is_psd") {
    CHECK(is_psd(Mat::identity(3)));
    CHECK(is_psd(Mat::zeros(2, 2)));
    Mat neg = Mat::identity(2);
    neg.at(1, 1) = Scalar(-1);
    CHECK(!is_psd(neg));

    // A*A is always PSD; A*A - strictly larger diagonal is not reached here.
    auto g = rng_for("psd");
    for (int rep = 0; rep < 6; ++rep) {
        Mat a = random_mat(g, 3, 3);
        CHECK(is_psd(a.adjoint() * a));
        Mat h = a.adjoint() * a + Mat::identity(3);
        CHECK(is_psd(h));
        CHECK(!is_psd(Mat::zeros(3, 3) - a.adjoint() * a - Mat::identity(3)));
    }

    // Zero diagonal with nonzero off-diagonal entry is not PSD.
    Mat offd(2, 2);
    offd.at(0, 1) = Scalar(1);
    offd.at(1, 0) = Scalar(1);
    CHECK(!is_psd(offd));
}
