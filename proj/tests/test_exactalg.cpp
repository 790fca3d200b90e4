#include <random>

#include "adhm/exactalg.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace adhm;
using namespace adhm::exactalg;

TEST_CASE("scalar arithmetic and text round trip") {
    Scalar a = Scalar::parse("1/2+3/4*I");
    CHECK(a.str() == "1/2+3/4*I");
    CHECK(Scalar::parse("-I").str() == "-I");
    CHECK(Scalar::parse("2*I - 2/4").str() == "-1/2+2*I");
    CHECK(Scalar::parse("0").is_zero());
    CHECK((a * a.inv()) == Scalar(1));
    CHECK((Scalar::I() * Scalar::I()) == Scalar(-1));
    CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
    CHECK_THROWS_AS(Scalar::parse("x"), Error);
    CHECK_THROWS_AS(Scalar(0).inv(), Error);
}

TEST_CASE("rank_kernel basic cases") {
    auto rk = rank_kernel(Matrix::identity(2));
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.dim() == 0);
    auto z = rank_kernel(Matrix::zero(3, 4));
    CHECK(z.rank == 0);
    CHECK(z.kernel.dim() == 4);
}

TEST_CASE("rank_kernel properties on random matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Matrix m = testutil::random_matrix(rng, r, c, t % 3 == 0);
        auto rk = rank_kernel(m);
        CHECK(rk.rank + rk.kernel.dim() == c);
        CHECK((m * rk.kernel.basis()).is_zero());
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("inverse and solve are exact") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Matrix m = testutil::random_matrix(rng, 4, 4, false);
        if (rank(m) < 4) continue;
        Matrix inv = inverse(m);
        CHECK((m * inv) == Matrix::identity(4));
        Matrix b = testutil::random_matrix(rng, 4, 1, false), x;
        REQUIRE(solve(m, b, x));
        CHECK((m * x) == b);
    }
    CHECK_THROWS_AS(inverse(Matrix::zero(2, 2)), Error);
}

TEST_CASE("char_poly examples") {
    // antisymmetric 3x3 with (e,f,g) = (1,2,3)
    Matrix a = Matrix::from_rows({{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}});
    CHECK(char_poly(a) == UPoly({0, 14, 0, 1}));
    CHECK(char_poly(Matrix::identity(2)) == UPoly({1, -2, 1}));
    CHECK(char_poly(Matrix::identity(2)).str() == "t^2 - 2*t + 1");
}

TEST_CASE("char_poly agrees with a determinant oracle and is conjugation invariant") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = 1 + rng() % 4;
        Matrix m = testutil::random_matrix(rng, n, n, true);
        UPoly p = char_poly(m);
        CHECK(p.degree() == static_cast<int>(n));
        for (long x = -2; x <= 2; ++x) {
            Scalar xs = Scalar(x) + Scalar::I() * Scalar(x * x - 1);
            CHECK(p.eval(xs) == testutil::leibniz_det(Matrix::identity(n) * xs - m));
        }
        Matrix g = testutil::random_matrix(rng, n, n, false);
        if (rank(g) == n) CHECK(char_poly(g * m * inverse(g)) == p);
    }
}

TEST_CASE("eigenvalues and generalized eigenspaces") {
    Matrix d = Matrix::from_rows({{3, 0, 0}, {0, 3, 0}, {0, 0, 5}});
    auto ev = eigenvalue_multiset(d);
    CHECK(ev == std::vector<Scalar>{3, 3, 5});
    Matrix d2 = Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    CHECK(generalized_eigenspace(d2, Scalar(1)).dim() == 2);
    // Jordan block: generalized eigenspace bigger than eigenspace
    Matrix j = Matrix::from_rows({{2, 1}, {0, 2}});
    CHECK(generalized_eigenspace(j, Scalar(2)).dim() == 2);
    CHECK(rank_kernel(j - Matrix::identity(2) * Scalar(2)).kernel.dim() == 1);
}

TEST_CASE("roots in Q(i) recover planted spectra") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        std::vector<Scalar> planted;
        std::size_t n = 1 + rng() % 5;
        for (std::size_t k = 0; k < n; ++k) {
            long re = static_cast<long>(rng() % 7) - 3, im = static_cast<long>(rng() % 5) - 2;
            long den = 1 + static_cast<long>(rng() % 3);
            mpq_class qr(re, den), qi(im, den);
            qr.canonicalize();
            qi.canonicalize();
            planted.push_back(Scalar(qr, qi));
        }
        // upper triangular with the planted diagonal, then conjugated
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = planted[i];
            for (std::size_t j = i + 1; j < n; ++j) m(i, j) = Scalar(static_cast<long>(rng() % 3));
        }
        Matrix g = testutil::random_matrix(rng, n, n, true);
        if (rank(g) < n) continue;
        Matrix c = g * m * inverse(g);
        std::vector<Scalar> expect;
        for (std::size_t i = 0; i < n; ++i) expect.push_back(m(i, i));
        std::sort(expect.begin(), expect.end());
        CHECK(eigenvalue_multiset(c) == expect);
    }
}

TEST_CASE("non-split spectrum is reported") {
    Matrix m = Matrix::from_rows({{0, 2}, {1, 0}});  // t^2 - 2
    CHECK_THROWS_AS(eigenvalue_multiset(m), Error);
    Matrix rot = Matrix::from_rows({{0, -1}, {1, 0}});  // roots +-i are fine
    CHECK(eigenvalue_multiset(rot) == std::vector<Scalar>{Scalar(0, -1), Scalar(0, 1)});
}

TEST_CASE("subspace operations") {
    Subspace a(3, Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}}));
    Subspace b(3, Matrix::from_rows({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(a.intersect(b).dim() == 1);
    CHECK(a.sum(b).dim() == 3);
    CHECK(a.intersect(b).contains(Matrix::column({0, 5, 0})));
    CHECK_THROWS_AS(Subspace(2, Matrix::from_rows({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("matrix json round trip") {
    Matrix m = Matrix::from_rows({{Scalar::frac(1, 2), Scalar::I()}, {0, -3}});
    auto j = to_json(m);
    CHECK(j["entries"][1] == "I");
    CHECK(matrix_from_json(j) == m);
}
