#include <random>

#include "adhm/factorization.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace adhm;
using exactalg::Matrix;
using exactalg::Scalar;
namespace fz = adhm::factorization;

namespace {

Matrix upper_with_diag(std::mt19937_64& rng, const std::vector<Scalar>& diag) {
    std::size_t n = diag.size();
    Matrix m = testutil::random_matrix(rng, n, n, true);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) m(r, c) = Scalar();
    for (std::size_t r = 0; r < n; ++r) m(r, r) = diag[r];
    return m;
}

bool is_isometry(const Matrix& g, const forms::BilinearSpace& V) { return g.transpose() * V.gram * g == V.gram; }


}  // namespace

TEST_CASE("Sylvester blocks satisfy their defining equation") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        std::size_t p = 1 + rng() % 3, q = 1 + rng() % 3;
        std::vector<Scalar> dm, dn;
        for (std::size_t r = 0; r < p; ++r) dm.push_back(Scalar(static_cast<long>(rng() % 3)));
        for (std::size_t r = 0; r < q; ++r) dn.push_back(Scalar(-1 - static_cast<long>(rng() % 3), 1));
        Matrix A = upper_with_diag(rng, dm), B = upper_with_diag(rng, dn);
        Matrix rhs = testutil::random_matrix(rng, p, q, true);
        Matrix X = fz::solve_sylvester_block(A, B, rhs);
        CHECK(A * X - X * B == rhs * Scalar(-1));
    }
    Matrix A = Matrix::from_rows({{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(2)}});
    CHECK_THROWS_WITH_AS(fz::solve_sylvester_block(A, Matrix::from_rows({{Scalar(2)}}), Matrix(2, 1)), doctest::Contains("SpectraOverlap"),
                         Error);
}

TEST_CASE("splitting x(I) gives two rank-one blocks that reassemble exactly") {
    auto x = fixtures::x(fixtures::Type::I);
    auto sp = fz::split_by_spectrum(x);
    REQUIRE(sp.partition.supports.size() == 2);
    CHECK(sp.partition.supports[0] == std::vector<Scalar>{Scalar::frac(-1, 2), Scalar::frac(-1, 2)});
    CHECK(sp.partition.supports[1] == std::vector<Scalar>{Scalar::frac(1, 2), Scalar::frac(1, 2)});
    CHECK(sp.partition.eta().str() == "(2,2)");
    CHECK(is_isometry(exactalg::inverse(sp.g), x.setting.V));
    for (auto& b : sp.data.blocks) {
        CHECK(exactalg::rank(b.i) == 1);
        auto s = forms::FramedSetting{forms::BilinearSpace::symplectic(2), x.setting.W, forms::Flavor::SOData, {}};
        CHECK(forms::rho(b.i, s).is_zero());
    }
    auto y = fz::assemble(sp.data, sp.partition);
    auto back = forms::act(exactalg::inverse(sp.g), Matrix::identity(3), y);
    CHECK(back.B1 == x.B1);
    CHECK(back.B2 == x.B2);
    CHECK(back.i == x.i);
    CHECK(fz::stabilizer_product_check(sp.data, sp.partition) == 2);

    // requested grouping that matches the default
    auto sp2 = fz::split_by_spectrum(x, fz::parse_supports("1/2,1/2; -1/2,-1/2"));
    CHECK(sp2.partition.supports.size() == 2);
    CHECK_THROWS_AS(fz::split_by_spectrum(x, fz::parse_supports("1/2,-1/2;1/2,-1/2")), Error);
    CHECK_THROWS_AS(fz::split_by_spectrum(x, fz::parse_supports("1/2,1/2")), Error);
}

TEST_CASE("splitting is rejected for Sp-data") {
    auto s = forms::FramedSetting::make(forms::Flavor::SpData, 2, 2);
    auto x = forms::ADHMDatum::zero(s);
    CHECK_THROWS_WITH_AS(fz::split_by_spectrum(x), doctest::Contains("UnsupportedSetting"), Error);
}

TEST_CASE("random reassemblies satisfy the moment equation") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        auto [bd, ep] = testutil::random_blocks(rng, 2 + rng() % 2);
        auto x = fz::assemble(bd, ep);
        CHECK(forms::moment_map(x).is_zero());
        CHECK(forms::in_p(x.B2, x.setting.V));
        CHECK(exactalg::eigenvalue_multiset(x.B1).size() == x.setting.k());
        if (t % 10 == 0) CHECK(fz::equivariance_check(bd, ep, rng()));
        // splitting the assembled datum recovers blocks of the same shape
        auto sp = fz::split_by_spectrum(x);
        CHECK(sp.partition.supports.size() == bd.blocks.size());
    }
}

TEST_CASE("invalid block data is reported") {
    std::mt19937_64 rng(5);
    auto [bd, ep] = testutil::random_blocks(rng, 2);
    auto bad = bd;
    bad.blocks[0].i = Matrix::from_rows({{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(0)}});
    // i i* is then a nonzero multiple of a rank-one map
    bad.blocks[0].i(1, 0) = Scalar(1);
    CHECK_THROWS_WITH_AS(fz::assemble(bad, ep), doctest::Contains("BlockMomentNonzero"), Error);

    auto overlap = ep;
    overlap.supports[1] = overlap.supports[0];
    CHECK_THROWS_WITH_AS(fz::assemble(bd, overlap), doctest::Contains("SpectraOverlap"), Error);

    auto shape = bd;
    shape.blocks[1].i = Matrix(2, 2);
    CHECK_THROWS_AS(fz::assemble(shape, ep), Error);
}

TEST_CASE("block data JSON round trip") {
    std::mt19937_64 rng(9);
    auto [bd, ep] = testutil::random_blocks(rng, 3);
    auto j = fz::to_json(bd, ep);
    auto [bd2, ep2] = fz::blocks_from_json(nlohmann::json::parse(j.dump()));
    CHECK(ep2.supports == ep.supports);
    REQUIRE(bd2.blocks.size() == 3);
    for (std::size_t n = 0; n < 3; ++n) {
        CHECK(bd2.blocks[n].B1 == bd.blocks[n].B1);
        CHECK(bd2.blocks[n].B2 == bd.blocks[n].B2);
        CHECK(bd2.blocks[n].i == bd.blocks[n].i);
    }
    CHECK_THROWS_WITH_AS(fz::blocks_from_json(nlohmann::json::parse("{\"blocks\": 3}")), doctest::Contains("Parse"), Error);
}
