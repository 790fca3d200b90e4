#include <random>

#include "adhm/forms.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace adhm;
using namespace adhm::exactalg;
using namespace adhm::forms;
namespace fx = adhm::fixtures;

namespace {

Matrix random_in(const std::vector<Matrix>& basis, std::size_t n, std::mt19937_64& rng) {
    Matrix m(n, n);
    for (auto& b : basis) m += b * Scalar(small_int(rng));
    return m;
}

ADHMDatum random_datum(const FramedSetting& s, std::mt19937_64& rng) {
    auto pb = p_basis(s.V);
    return ADHMDatum::make(s, random_in(pb, s.k(), rng), random_in(pb, s.k(), rng),
                           testutil::random_matrix(rng, s.k(), s.N(), true));
}

}  // namespace

TEST_CASE("gram matrices follow the fixed conventions") {
    auto sp = BilinearSpace::symplectic(4);
    CHECK(sp.gram == Matrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
    sp.validate();
    auto o = BilinearSpace::orthogonal(3);
    CHECK(o.gram == Matrix::identity(3));
    auto ow = BilinearSpace::orthogonal(3, GramStyle::Weight);
    ow.validate();
    CHECK(ow.gram == Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK_THROWS_AS(BilinearSpace::symplectic(3), Error);
}

TEST_CASE("right adjoint: defining identity and double adjoint sign") {
    std::mt19937_64 rng(1);
    auto V = BilinearSpace::symplectic(4);
    auto W = BilinearSpace::orthogonal(3);
    auto W2 = BilinearSpace::orthogonal(2, GramStyle::Weight);
    CHECK(right_adjoint(Matrix(4, 3), W, V).is_zero());
    for (int t = 0; t < 10; ++t) {
        Matrix f = testutil::random_matrix(rng, 4, 3, true);  // W -> V
        Matrix fs = right_adjoint(f, W, V);
        Matrix vw = testutil::random_matrix(rng, 3, 1, true), vv = testutil::random_matrix(rng, 4, 1, true);
        // (w, f* v)_W = (f w, v)_V
        CHECK((vw.transpose() * W.gram * fs * vv) == ((f * vw).transpose() * V.gram * vv));
        CHECK(right_adjoint(fs, V, W) == -f);  // opposite epsilon
        Matrix g = testutil::random_matrix(rng, 3, 2, true);  // W2 -> W, same epsilon
        CHECK(right_adjoint(right_adjoint(g, W2, W), W, W2) == g);
    }
    CHECK_THROWS_AS(right_adjoint(Matrix(3, 3), W, V), Error);
}

TEST_CASE("adjoint of a composite reverses order") {
    std::mt19937_64 rng(2);
    auto U = BilinearSpace::orthogonal(2);
    auto V = BilinearSpace::symplectic(4);
    auto W = BilinearSpace::orthogonal(3, GramStyle::Weight);
    for (int t = 0; t < 5; ++t) {
        Matrix i = testutil::random_matrix(rng, 4, 2, true);  // U -> V
        Matrix j = testutil::random_matrix(rng, 3, 4, true);  // V -> W
        CHECK(right_adjoint(j * i, U, W) == right_adjoint(i, U, V) * right_adjoint(j, V, W));
    }
}

TEST_CASE("t/p split and dimensions") {
    auto V = BilinearSpace::symplectic(4);
    auto s = tp_split(Matrix::identity(4), V);
    CHECK(s.t_part.is_zero());
    CHECK(s.p_part == Matrix::identity(4));
    CHECK(tp_split(fx::v(2), V).t_part.is_zero());
    // split the full matrix-unit basis and count
    for (auto [sp, expect_t, expect_p] : {std::tuple{true, 10, 6}, std::tuple{false, 3, 6}}) {
        BilinearSpace W = sp ? V : BilinearSpace::orthogonal(3);
        std::size_t n = W.dim;
        std::vector<Matrix> ts, ps;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Matrix e(n, n);
                e(a, b) = Scalar(1);
                auto sp2 = tp_split(e, W);
                std::vector<Scalar> tv = sp2.t_part.entries(), pv = sp2.p_part.entries();
                ts.push_back(Matrix::column(tv));
                ps.push_back(Matrix::column(pv));
            }
        CHECK(rank(Matrix::hstack(ts)) == static_cast<std::size_t>(expect_t));
        CHECK(rank(Matrix::hstack(ps)) == static_cast<std::size_t>(expect_p));
        CHECK(t_basis(W).size() == static_cast<std::size_t>(expect_t));
        CHECK(p_basis(W).size() == static_cast<std::size_t>(expect_p));
    }
}

TEST_CASE("bracket relations between t and p") {
    for (auto W : {BilinearSpace::symplectic(4), BilinearSpace::orthogonal(3), BilinearSpace::orthogonal(4, GramStyle::Weight)}) {
        auto tb = t_basis(W), pb = p_basis(W);
        for (auto& a : tb) {
            CHECK(in_t(a, W));
            for (auto& b : tb) CHECK(in_t(commutator(a, b), W));
            for (auto& b : pb) CHECK(in_p(commutator(a, b), W));
        }
        for (auto& a : pb) {
            CHECK(in_p(a, W));
            for (auto& b : pb) CHECK(in_t(commutator(a, b), W));
        }
    }
}

TEST_CASE("fixtures lie in p' and satisfy the moment equation") {
    auto V = BilinearSpace::symplectic(4);
    for (int n = 1; n <= 5; ++n) {
        CHECK(in_p(fx::v(n), V));
        CHECK(fx::v(n).trace().is_zero());
    }
    for (auto t : {fx::Type::I, fx::Type::II, fx::Type::III, fx::Type::IV}) {
        auto x = fx::x(t);
        CHECK(moment_map(x).is_zero());
    }
    // standard coordinates of the type-I framing, frozen from an independent computation
    Scalar I = Scalar::I(), h = Scalar::frac(1, 2);
    Matrix expect = Matrix::from_rows({{-I * h, -h, 0}, {I * h, -h, 0}, {-I * h, -h, 0}, {-I * h, h, 0}});
    CHECK(fx::i_map(fx::Type::I) == expect);
    CHECK(moment_map(ADHMDatum::zero(fx::setting_n3k4())).is_zero());
}

TEST_CASE("moment map always lands in t") {
    std::mt19937_64 rng(4);
    for (auto f : {Flavor::SOData, Flavor::SpData})
        for (int t = 0; t < 10; ++t) {
            auto s = FramedSetting::make(f, f == Flavor::SOData ? 3 : 2, f == Flavor::SOData ? 4 : 3);
            auto x = random_datum(s, rng);
            CHECK(tp_split(moment_map(x), s.V).p_part.is_zero());
        }
}

TEST_CASE("bracket table is reproduced entry by entry") {
    auto V = BilinearSpace::symplectic(4);
    for (auto& [ab, m] : fx::bracket_table()) {
        CAPTURE(ab.first);
        CAPTURE(ab.second);
        CHECK(commutator_map(fx::v(ab.first), fx::v(ab.second), V) == m);
    }
    CHECK(commutator_map(fx::v(3), fx::v(3), V).is_zero());
    CHECK_THROWS_AS(commutator_map(Matrix::from_rows({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}), fx::v(1), V),
                    Error);
}

TEST_CASE("wedge bracket map is an isomorphism") {
    Matrix F = wedge_bracket_iso();
    CHECK(F.rows() == 10);
    CHECK(F.cols() == 10);
    CHECK(rank(F) == 10);
    auto V = BilinearSpace::symplectic(4);
    Matrix expect = fx::block2(Matrix(2, 2), fx::blk_I(), -fx::blk_I(), Matrix(2, 2)) * Scalar::frac(1, 2);
    CHECK(F.col(3) == Matrix::column(t_coords(expect, V)));  // column of v1 ^ v5
    // rank-one family (aB, bB) commutes; generic pairs in p' do not
    std::mt19937_64 rng(9);
    std::vector<Matrix> pprime;
    for (int n = 1; n <= 5; ++n) pprime.push_back(fx::v(n));
    for (int t = 0; t < 10; ++t) {
        Matrix B = random_in(pprime, 4, rng);
        CHECK(commutator(B * Scalar(small_int(rng)), B * Scalar(small_int(rng))).is_zero());
    }
}

TEST_CASE("rho and pi on fixtures") {
    auto s = fx::setting_n3k4();
    CHECK(rho(Matrix(4, 3), s).is_zero());
    Matrix r = rho(fx::i_map(fx::Type::I), s);
    CHECK(!r.is_zero());
    CHECK((r * r).is_zero());
    CHECK(in_t(r, s.V));
    CHECK(pi(fx::i_map(fx::Type::I), s).is_zero());
    CHECK(pi(fx::i_map(fx::Type::III), s).is_zero());
    CHECK(pi(fx::i_map(fx::Type::IV), s).is_zero());
    CHECK(!pi(fx::i_map(fx::Type::II), s).is_zero());
}

TEST_CASE("stability table of the fixtures") {
    CHECK(is_stable(fx::x(fx::Type::II)));
    CHECK(is_costable(fx::x(fx::Type::II)));
    for (auto t : {fx::Type::I, fx::Type::III, fx::Type::IV}) CHECK(!is_costable(fx::x(t)));
    auto w = costable_obstruction(fx::x(fx::Type::I));
    CHECK(w.contains(Matrix::column({1, 0, 1, 0})));
    auto z = ADHMDatum::zero(fx::setting_n3k4());
    CHECK(!is_stable(z));
}

TEST_CASE("stability and costability agree on N") {
    std::mt19937_64 rng(21);
    auto s = fx::setting_n3k4();
    auto pb = p_basis(s.V);
    int stable_count = 0;
    for (int t = 0; t < 100; ++t) {
        // sparse data so both outcomes occur
        std::vector<Matrix> sub(pb.begin(), pb.begin() + static_cast<long>(rng() % pb.size()));
        Matrix B1 = random_in(sub, 4, rng), B2 = random_in(sub, 4, rng);
        Matrix i = testutil::random_matrix(rng, 4, 3, true);
        for (std::size_t c = 0; c < 3; ++c)
            if (rng() % 2)
                for (std::size_t r = 0; r < 4; ++r) i(r, c) = Scalar(0);
        auto x = ADHMDatum::make(s, B1, B2, i);
        bool st = is_stable(x);
        CHECK(st == is_costable(x));
        stable_count += st;
    }
    CHECK(stable_count > 0);
    CHECK(stable_count < 100);
}

TEST_CASE("Lie stabilizers") {
    auto zero = ADHMDatum::zero(fx::setting_n3k4());
    CHECK(stabilizer_lie(zero).size() == 10);
    auto st = stabilizer_lie(fx::x(fx::Type::I));
    CHECK(st.size() == 2);
    std::vector<Matrix> cols_a, cols_b;
    for (auto& m : st) cols_a.push_back(Matrix::column(m.entries()));
    for (auto& m : fx::spx_basis()) cols_b.push_back(Matrix::column(m.entries()));
    CHECK(Subspace::span(Matrix::hstack(cols_a)) == Subspace::span(Matrix::hstack(cols_b)));
    CHECK(stabilizer_lie(fx::x(fx::Type::II)).empty());
}

TEST_CASE("stabilizer is conjugation equivariant") {
    std::mt19937_64 rng(31);
    auto x = fx::x(fx::Type::I);
    for (int t = 0; t < 3; ++t) {
        Matrix g = random_isometry(x.setting.V, rng), h = random_isometry(x.setting.W, rng);
        auto y = act(g, h, x);
        CHECK(moment_map(y).is_zero());
        auto sy = stabilizer_lie(y), sx = stabilizer_lie(x);
        std::vector<Matrix> ca, cb;
        for (auto& m : sy) ca.push_back(Matrix::column(m.entries()));
        for (auto& m : sx) cb.push_back(Matrix::column((g * m * inverse(g)).entries()));
        CHECK(Subspace::span(Matrix::hstack(ca)) == Subspace::span(Matrix::hstack(cb)));
    }
}

TEST_CASE("random isometries") {
    std::mt19937_64 rng(5);
    for (auto V : {BilinearSpace::symplectic(4), BilinearSpace::orthogonal(3), BilinearSpace::orthogonal(2, GramStyle::Weight)}) {
        Matrix g = random_isometry(V, rng);
        CHECK(right_adjoint(g, V, V) * g == Matrix::identity(V.dim));
    }
    Matrix g1 = random_isometry(BilinearSpace::symplectic(4), 77), g2 = random_isometry(BilinearSpace::symplectic(4), 77);
    CHECK(g1 == g2);
    Matrix g = random_isometry(BilinearSpace::symplectic(4), 3);
    CHECK(eigenvalue_multiset(g * fx::v(5) * inverse(g)) == eigenvalue_multiset(fx::v(5)));
}

TEST_CASE("commutator of trace-free pairs squares to a scalar") {
    auto V = BilinearSpace::symplectic(4);
    CHECK(scalar_commutator_check(fx::v(2), fx::v(2), V).is_zero());
    CHECK(scalar_commutator_check(fx::B1(fx::Type::I), fx::B2(fx::Type::I), V).is_zero());
    std::mt19937_64 rng(8);
    std::vector<Matrix> pprime;
    for (int n = 1; n <= 5; ++n) pprime.push_back(fx::v(n));
    for (int t = 0; t < 100; ++t)
        CHECK_NOTHROW(scalar_commutator_check(random_in(pprime, 4, rng), random_in(pprime, 4, rng), V));
}

TEST_CASE("spectral fixtures") {
    Scalar h = Scalar::frac(1, 2);
    CHECK(eigenvalue_multiset(fx::v(5)) == std::vector<Scalar>{-h, -h, h, h});
    CHECK(generalized_eigenspace(fx::v(5), h) == Subspace::span(Matrix::from_rows({{1, 0}, {0, 1}, {1, 0}, {0, 1}})));
    CHECK(generalized_eigenspace(fx::v(5), -h) == Subspace::span(Matrix::from_rows({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})));
    CHECK(eigenvalue_multiset(fx::B1(fx::Type::II)) == std::vector<Scalar>{0, 0, 0, 0});
    CHECK(char_poly(fx::B1(fx::Type::II)) == UPoly({0, 0, 0, 0, 1}));
    CHECK(rank(commutator(fx::B1(fx::Type::I), fx::B2(fx::Type::I))) == 2);
}

TEST_CASE("datum json round trip") {
    auto x = fx::x(fx::Type::III);
    auto y = datum_from_json(to_json(x));
    CHECK(y.B1 == x.B1);
    CHECK(y.i == x.i);
    CHECK(y.j == x.j);
    CHECK(fx::named("x_II")["setting"]["flavor"] == "so");
    CHECK_THROWS_AS(fx::named("nope"), Error);
}
