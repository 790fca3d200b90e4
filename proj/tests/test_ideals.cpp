#include <algorithm>
#include <random>

#include "adhm/ideals.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace adhm;
using namespace adhm::ideals;
using adhm::exactalg::Matrix;
using adhm::exactalg::Scalar;

namespace {

Polynomial X(std::size_t v) { return Polynomial::variable(v); }
Polynomial C(long c) { return Polynomial::constant(c); }

Ideal make(std::size_t n, std::vector<Polynomial> gens) {
    Ideal I;
    for (std::size_t v = 0; v < n; ++v) I.vars.push_back("x" + std::to_string(v));
    I.gens = std::move(gens);
    return I;
}

GroebnerOptions over(std::uint32_t p) {
    GroebnerOptions o;
    o.field.prime = p;
    return o;
}

Polynomial times_monomial(const Polynomial& f, const Monomial& m) {
    std::vector<Term> t;
    for (auto& x : f.terms()) t.push_back({x.m * m, x.c});
    return Polynomial(t);
}

// Buchberger's criterion checked directly: every S-polynomial reduces to zero
bool s_pairs_vanish(const GroebnerBasis& G) {
    auto leads = G.leads();
    for (std::size_t a = 0; a < G.basis.size(); ++a)
        for (std::size_t b = a + 1; b < G.basis.size(); ++b) {
            Monomial l = Monomial::lcm(leads[a], leads[b]);
            Polynomial s = times_monomial(G.basis[a], l / leads[a]) - times_monomial(G.basis[b], l / leads[b]);
            if (!normal_form(s, G).is_zero()) return false;
        }
    return true;
}

Scalar eval(const Polynomial& f, const std::vector<Scalar>& x) {
    Scalar s;
    for (auto& t : f.terms()) {
        Scalar m(t.c);
        for (std::size_t v = 0; v < x.size(); ++v)
            for (unsigned e = 0; e < t.m.e[v]; ++e) m *= x[v];
        s += m;
    }
    return s;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
        if (v + 1 == n) {
            cur.e[v] = static_cast<std::uint16_t>(left);
            cur.recompute();
            out.push_back(cur);
            cur.e[v] = 0;
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur.e[v] = static_cast<std::uint16_t>(e);
            rec(v + 1, left - e);
        }
        cur.e[v] = 0;
    };
    if (n == 0) return d == 0 ? std::vector<Monomial>{Monomial{}} : std::vector<Monomial>{};
    rec(0, d);
    return out;
}

// dim of (R/I)_d by exact linear algebra on the span of monomial multiples of generators
long hilbert_function_oracle(const Ideal& I, unsigned d) {
    auto basis = monomials_of_degree(I.nvars(), d);
    std::vector<Matrix> cols;
    for (auto& g : I.gens) {
        if (g.is_zero() || g.degree() > d) continue;
        for (auto& m : monomials_of_degree(I.nvars(), d - g.degree())) {
            Polynomial p = times_monomial(g, m);
            Matrix col(basis.size(), 1);
            for (auto& t : p.terms()) {
                auto it = std::find(basis.begin(), basis.end(), t.m);
                col(static_cast<std::size_t>(it - basis.begin()), 0) = Scalar(t.c);
            }
            cols.push_back(col);
        }
    }
    std::size_t r = cols.empty() ? 0 : exactalg::rank(Matrix::hstack(cols));
    return static_cast<long>(basis.size() - r);
}

long binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
    Polynomial f = X(0) * X(0) - C(2) * X(0) * X(1) + C(1);
    CHECK(f.str({"x", "y"}) == "x^2 - 2*x*y + 1");
    CHECK((f - f).is_zero());
    CHECK(f.degree() == 2);
    CHECK(polynomial_from_json(to_json(f), 2) == f);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"terms":[{"exps":[1,2,3],"coeff":"1"}]})"), 2), Error);
    Ideal I = make(2, {f});
    I.label = "demo";
    Ideal J = ideal_from_json(to_json(I));
    CHECK(J.gens[0] == f);
    CHECK(J.label == "demo");
}

TEST_CASE("monomial orders") {
    Order drl;
    Monomial xy = Monomial::var(0) * Monomial::var(1), z2 = Monomial::var(2, 2), x2 = Monomial::var(0, 2);
    CHECK(drl.compare(x2, xy) > 0);
    CHECK(drl.compare(xy, z2) > 0);  // revlex: smaller power of the last variable wins
    CHECK(drl.compare(Monomial::var(0, 3), x2) > 0);
    Order blk{Order::Block, 1};
    CHECK(blk.compare(Monomial::var(0), Monomial::var(1, 5)) > 0);
}

TEST_CASE("small Groebner bases") {
    CHECK(groebner(make(1, {X(0)})).basis == std::vector<Polynomial>{X(0)});
    auto G = groebner(make(2, {X(0) * X(0), X(0) * X(1)}));
    CHECK(G.basis.size() == 2);
    CHECK(contains(G, X(0) * X(0)));
    CHECK(contains(G, X(0) * X(1)));
    CHECK_FALSE(contains(G, X(0)));
    // x^2 - y, xy - 1 gives a zero-dimensional ideal
    auto H = groebner(make(2, {X(0) * X(0) - X(1), X(0) * X(1) - C(1)}));
    CHECK(krull_dimension(H) == 0);
    CHECK(s_pairs_vanish(H));
    CHECK(groebner(make(2, {X(0), C(1) - X(0)})).is_unit());
    CHECK(krull_dimension(groebner(make(3, {}))) == 3);
    GroebnerOptions tiny;
    tiny.budget = 1;
    auto twisted = make(3, {X(0) * X(1) - X(2) * X(2), X(1) * X(2) - X(0) * X(0), X(0) * X(2) - X(1) * X(1) * X(1)});
    CHECK_THROWS_AS(groebner(twisted, tiny), Error);
}

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("q").prime == 0);
    CHECK(FieldSpec::parse("fp:32003").prime == 32003);
    CHECK(FieldSpec::parse("fp:32003").str() == "fp:32003");
    CHECK_THROWS_AS(FieldSpec::parse("fp:32004"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("r"), Error);
}

TEST_CASE("ideal builders: sizes") {
    auto z = build_ideal("mu", 3, 0, forms::Flavor::SOData);
    CHECK(z.nvars() == 0);
    CHECK(z.gens.empty());
    auto m = build_ideal("mu_traceless", 3, 4, forms::Flavor::SOData);
    CHECK(m.nvars() == 22);
    CHECK(m.gens.size() == 10);
    auto r = build_ideal("rho", 3, 2, forms::Flavor::SOData);
    CHECK(r.nvars() == 6);
    CHECK(r.gens.size() == 3);
    for (auto& g : r.gens) CHECK(g.degree() == 2);
    CHECK(build_ideal("commutator", 2, 4, forms::Flavor::SOData).nvars() == 12);
    CHECK(build_ideal("pi_image_tags", 3, 2, forms::Flavor::SOData).nvars() == 9);
    CHECK_THROWS_AS(build_ideal("nonsense", 3, 2, forms::Flavor::SOData), Error);
    CHECK_THROWS_AS(build_ideal("mu", 8, 6, forms::Flavor::SOData), Error);  // 42 variables
}

TEST_CASE("moment-map ideal agrees with the matrix moment map") {
    std::mt19937_64 rng(23);
    for (auto flavor : {forms::Flavor::SOData, forms::Flavor::SpData})
        for (auto style : {forms::GramStyle::Standard, forms::GramStyle::Weight}) {
            std::size_t N = 2, k = flavor == forms::Flavor::SOData ? 4 : 3;
            auto I = build_ideal("mu", N, k, flavor, {false, style});
            auto s = forms::FramedSetting::make(flavor, N, k, style);
            auto pb = forms::p_basis(s.V);
            for (int t = 0; t < 5; ++t) {
                std::vector<Scalar> x;
                Matrix B1(k, k), B2(k, k);
                for (auto& b : pb) {
                    x.push_back(forms::small_int(rng));
                    B1 += b * x.back();
                }
                for (auto& b : pb) {
                    x.push_back(forms::small_int(rng));
                    B2 += b * x.back();
                }
                Matrix i = testutil::random_matrix(rng, k, N, false);
                for (auto& e : i.entries()) x.push_back(e);
                auto want = forms::t_coords(forms::moment_map(forms::ADHMDatum::make(s, B1, B2, i)), s.V);
                REQUIRE(want.size() == I.gens.size());
                for (std::size_t n = 0; n < want.size(); ++n) CHECK(eval(I.gens[n], x) == want[n]);
            }
            if (style == forms::GramStyle::Weight)
                for (auto& g : I.gens) CHECK(g.is_homogeneous(I.weights));
        }
}

TEST_CASE("Groebner output satisfies Buchberger's criterion and ignores generator order") {
    auto r = build_ideal("rho", 3, 2, forms::Flavor::SOData);
    auto m = build_ideal("commutator", 3, 4, forms::Flavor::SOData, {true});
    for (auto* I : {&r, &m})
        for (std::uint32_t p : {0u, 32003u}) {
            auto G = groebner(*I, over(p));
            CHECK(s_pairs_vanish(G));
            for (auto& g : I->gens) CHECK(contains(G, g));
            Ideal rev = *I;
            std::reverse(rev.gens.begin(), rev.gens.end());
            std::mt19937_64 rng(p + 1);
            std::shuffle(rev.gens.begin() + 1, rev.gens.end(), rng);
            CHECK(groebner(rev, over(p)).basis == G.basis);
            // random combinations are members; a lone variable is not
            Polynomial comb;
            for (auto& g : I->gens) comb = comb + (X(rng() % I->nvars()) + C(forms::small_int(rng))) * g;
            CHECK(contains(G, comb));
            CHECK_FALSE(contains(G, X(0)));
        }
}

TEST_CASE("Hilbert function agrees with a linear-algebra oracle") {
    auto r = build_ideal("rho", 3, 2, forms::Flavor::SOData);
    auto G = groebner(r);
    std::vector<std::vector<int>> unit(r.nvars(), {1, 1});
    auto H = multigraded_hilbert(G, unit, 8);
    for (unsigned d = 0; d <= 4; ++d) CHECK(H.counts[{int(d), int(d)}] == hilbert_function_oracle(r, d));
    // CI of three quadrics in six variables: (1 - t^2)^3 / (1 - t)^6
    for (long d = 0; d <= 4; ++d) {
        long want = 0;
        for (long j = 0; j <= 3 && 2 * j <= d; ++j) want += (j % 2 ? -1 : 1) * binom(3, j) * binom(d - 2 * j + 5, 5);
        CHECK(H.counts[{int(d), int(d)}] == want);
    }
}

TEST_CASE("zero ideal Hilbert counts match the product formula") {
    CHECK(multigraded_hilbert(groebner(make(1, {})), {{2, 0}}, 10).counts.size() == 6);
    for (auto& [deg, c] : multigraded_hilbert(groebner(make(1, {})), {{2, 0}}, 10).counts) CHECK(c == 1);
    // two q1 variables, one q2 variable: coefficient of q1^a q2^b is a+1
    auto H = multigraded_hilbert(groebner(make(3, {})), {{2, 0}, {2, 0}, {0, 2}}, 12);
    for (auto& [deg, c] : H.counts) CHECK(c == deg[0] / 2 + 1);
    auto inh = make(2, {X(0) * X(0) - X(1)});
    CHECK_THROWS_AS(multigraded_hilbert(inh, {{1, 0}, {1, 0}}, 4), Error);
    CHECK_NOTHROW(multigraded_hilbert(inh, {{1, 0}, {2, 0}}, 4));
}

TEST_CASE("dimensions and complete intersections") {
    CHECK(is_complete_intersection(make(2, {X(0), X(1)})));
    CHECK_FALSE(is_complete_intersection(make(2, {X(0) * X(0), X(0) * X(1)})));
    for (std::uint32_t p : {0u, 32003u, 65521u}) {
        auto o = over(p);
        auto r3 = build_ideal("rho", 3, 2, forms::Flavor::SOData);
        CHECK(krull_dimension(groebner(r3, o)) == 3);
        CHECK(is_complete_intersection(r3, o));
        auto m = build_ideal("commutator", 3, 4, forms::Flavor::SOData, {true});
        CHECK(krull_dimension(groebner(m, o)) == 6);
    }
}

TEST_CASE("non-reducedness of complete intersections") {
    CHECK(nonreduced_ci_test(make(1, {X(0) * X(0)})));
    CHECK_FALSE(nonreduced_ci_test(make(1, {X(0)})));
    CHECK_THROWS_AS(nonreduced_ci_test(make(2, {X(0) * X(0), X(0) * X(1)})), Error);
    CHECK(nonreduced_ci_test(build_ideal("rho", 3, 2, forms::Flavor::SOData)));
    CHECK_FALSE(nonreduced_ci_test(build_ideal("rho", 4, 2, forms::Flavor::SOData)));
}

TEST_CASE("elimination and the fat point") {
    auto e = elimination(make(2, {X(0) - X(1)}), {1});
    CHECK(e.gens.empty());
    CHECK(e.vars == std::vector<std::string>{"x1"});
    // twisted cubic: eliminating t from (x - t, y - t^2, z - t^3)
    auto tc = make(4, {X(1) - X(0), X(2) - X(0) * X(0), X(3) - X(0) * X(0) * X(0)});
    auto img = elimination(tc, {1, 2, 3});
    auto G = groebner(img);
    // kept variables renumbered x, y, z -> 0, 1, 2
    CHECK(contains(G, X(1) - X(0) * X(0)));
    CHECK(contains(G, X(2) - X(0) * X(1)));
    CHECK(contains(G, X(0) * X(2) - X(1) * X(1)));
    CHECK_FALSE(contains(G, X(2) - X(1)));
    CHECK(krull_dimension(G) == 1);

    auto tags = build_ideal("pi_image_tags", 3, 2, forms::Flavor::SOData);
    for (std::uint32_t p : {0u, 32003u}) {
        auto fat = elimination(tags, {6, 7, 8}, over(p));
        std::vector<Polynomial> want;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a; b < 3; ++b) want.push_back(X(a) * X(b));
        auto got = groebner(fat, over(p)).basis;
        std::sort(want.begin(), want.end(), [](auto& x, auto& y) { return x.str({}) < y.str({}); });
        std::sort(got.begin(), got.end(), [](auto& x, auto& y) { return x.str({}) < y.str({}); });
        CHECK(got == want);
    }
}

TEST_CASE("radical membership") {
    CHECK(radical_membership(X(0), make(1, {X(0) * X(0)})));
    CHECK_FALSE(radical_membership(C(1), make(1, {X(0) * X(0)})));
    Polynomial quad = X(0) * X(0) + X(1) * X(1) + X(2) * X(2);
    CHECK(radical_membership(quad, make(3, {quad})));
    CHECK_FALSE(radical_membership(X(0), make(3, {quad})));
    // pi image on rho^-1(0) at N = 3 is supported at the origin
    auto tags = build_ideal("pi_image_tags", 3, 2, forms::Flavor::SOData);
    for (std::size_t v = 6; v < 9; ++v) CHECK(radical_membership(X(v), tags));
}

TEST_CASE("orbit image sampling") {
    for (auto& v : sample_orbit_image("zero", 3, 1))
        for (auto& c : v) CHECK(c.is_zero());
    for (auto& v : sample_orbit_image("x_II", 20, 2)) {
        CHECK(v[0].is_zero());
        CHECK(v[1].is_zero());
        CHECK(v[2].is_zero());
        CHECK((v[3] * v[3] + v[4] * v[4] + v[5] * v[5]).is_zero());
        CHECK_FALSE((v[3].is_zero() && v[4].is_zero() && v[5].is_zero()));
    }
    for (auto& v : sample_orbit_image("x_I", 20, 3)) {
        CHECK(v[3].is_zero());
        CHECK(v[4].is_zero());
        CHECK(v[5].is_zero());
        CHECK((v[1] * v[1] + v[0] * v[2]).is_zero());
        CHECK_FALSE((v[0].is_zero() && v[1].is_zero() && v[2].is_zero()));
    }
    // same seed, same samples
    CHECK(sample_orbit_image("x_III", 4, 9) == sample_orbit_image("x_III", 4, 9));
}
