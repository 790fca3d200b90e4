#include "adhm/registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <tuple>

#include "adhm/factorization.hpp"
#include "adhm/kp.hpp"
#include "adhm/partition.hpp"

namespace adhm::registry {

using exactalg::Matrix;
using exactalg::Scalar;
using forms::ADHMDatum;
using forms::Flavor;
namespace fx = fixtures;
using json = nlohmann::json;

namespace {

const std::vector<fx::Type> kTypes{fx::Type::I, fx::Type::II, fx::Type::III, fx::Type::IV};

Matrix flat(const Matrix& m) {
    std::vector<Scalar> v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return Matrix::column(v);
}

Scalar small(std::mt19937_64& rng, long lo, long hi) { return Scalar(lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1))); }

ADHMDatum move_randomly(const ADHMDatum& x, std::mt19937_64& rng) {
    Matrix g = forms::random_isometry(x.setting.V, rng), h = forms::random_isometry(x.setting.W, rng);
    Scalar s = small(rng, -2, 2), t = small(rng, -2, 2), u = small(rng, -2, 2);
    // product of unipotents, determinant 1
    return forms::act_sl2(Scalar(1) + s * t, s + u + s * t * u, t, Scalar(1) + t * u, forms::act(g, h, x));
}

ADHMDatum drop_column(const ADHMDatum& x, std::size_t col) {
    std::vector<Matrix> cols;
    for (std::size_t c = 0; c < x.i.cols(); ++c)
        if (c != col) cols.push_back(x.i.col(c));
    auto s = forms::FramedSetting::make(Flavor::SOData, 2, 4);
    return ADHMDatum::make(s, x.B1, x.B2, Matrix::hstack(cols));
}

// two scalar blocks with isotropic rank-one framings, glued along distinct eigenvalues
ADHMDatum glued_blocks(std::mt19937_64& rng) {
    factorization::BlockData bd;
    factorization::EigenvaluePartition ep;
    bd.W = forms::BilinearSpace::orthogonal(2);
    Scalar a = small(rng, 1, 3), b = -small(rng, 0, 3);
    for (auto& e : {a, b}) {
        Matrix row = Matrix::from_rows({{Scalar(1), rng() % 2 ? Scalar::I() : -Scalar::I()}});
        Matrix col = Matrix::from_rows({{small(rng, -2, 2)}, {small(rng, 1, 3)}});
        Matrix id = Matrix::identity(2);
        bd.blocks.push_back({id * e, id * small(rng, -3, 3), col * row});
        ep.supports.push_back({e, e});
    }
    return factorization::assemble(bd, ep);
}

// i = 0 and B2 a polynomial in B1
ADHMDatum commuting_pair(std::mt19937_64& rng) {
    auto s = forms::FramedSetting::make(Flavor::SOData, 2, 4);
    Matrix B1(4, 4);
    for (auto& P : forms::p_basis(s.V)) B1 += P * small(rng, -2, 2);
    Matrix B2 = B1 * small(rng, -2, 2) + B1 * B1 * small(rng, -1, 1) + Matrix::identity(4) * small(rng, -2, 2);
    return ADHMDatum::make(s, B1, B2, Matrix(4, 2));
}

json orbit_dims_of_fixtures() {
    json out = json::array();
    for (auto t : kTypes) out.push_back(kp::dim_spo_orbit(kp::abdiagram_of(fx::i_map(t), fx::setting_n3k4())) + 3);
    return out;
}

std::string a_run(std::size_t n) {
    std::string s;
    for (std::size_t m = 0; m < n; ++m) s += ",a";
    return s;
}

json rho_summary(std::size_t N, const Context& c) {
    auto I = ideals::build_ideal("rho", N, 2, Flavor::SOData);
    auto G = ideals::groebner(I, c.groebner);
    json j{{"dim", ideals::krull_dimension(G)}, {"ci", ideals::is_complete_intersection(I, c.groebner)}};
    if (j["ci"].get<bool>()) j["nonreduced"] = ideals::nonreduced_ci_test(I, c.groebner);
    return j;
}

long long multichoose(long long p, long long x) {
    if (x == 0) return 1;
    if (p == 0) return 0;
    long long r = 1;
    for (long long j = 1; j <= x; ++j) r = r * (p + x - j) / j;
    return r;
}

// closed product formula: two copies of p(V) at q1, q2 and Hom(W, V) at (q1 q2)^{1/2}
long long ambient_closed(const partition::Setting& s, int d1, int d2) {
    long long p = static_cast<long long>(s.k * (s.k + s.epsilon_V()) / 2), h = static_cast<long long>(s.k * s.N);
    long long total = 0;
    for (int m = 0; m <= std::min(d1, d2); ++m)
        if ((d1 - m) % 2 == 0 && (d2 - m) % 2 == 0) total += multichoose(p, (d1 - m) / 2) * multichoose(p, (d2 - m) / 2) * multichoose(h, m);
    return total;
}

std::string image_class(const std::vector<ideals::ImageTuple>& samples) {
    bool all_first = true, all_second = true;
    for (auto& v : samples) {
        bool first_zero = v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
        bool second_zero = v[3].is_zero() && v[4].is_zero() && v[5].is_zero();
        bool on_first = (v[1] * v[1] + v[0] * v[2]).is_zero();
        bool on_second = (v[3] * v[3] + v[4] * v[4] + v[5] * v[5]).is_zero();
        if (!on_first || !on_second || (!first_zero && !second_zero)) return "off";
        all_first = all_first && !first_zero;
        all_second = all_second && !second_zero;
    }
    return all_first ? "first" : all_second ? "second" : "union";
}

std::vector<LemmaCheck> build() {
    std::vector<LemmaCheck> c;
    c.push_back({"stabilizer.x_I_dim", "the Lie stabilizer of x(I) in sp(4) is 2-dimensional", 2,
                 [](const Context&) { return json(forms::stabilizer_lie(fx::x(fx::Type::I)).size()); }});
    c.push_back({"stabilizer.x_I_span", "the stabilizer of x(I) is spanned by the two corrected generators", true, [](const Context&) {
                     std::vector<Matrix> a, b;
                     for (auto& m : forms::stabilizer_lie(fx::x(fx::Type::I))) a.push_back(flat(m));
                     for (auto& m : fx::spx_basis()) b.push_back(flat(m));
                     return json(exactalg::Subspace::span(Matrix::hstack(a)) == exactalg::Subspace::span(Matrix::hstack(b)));
                 }});
    c.push_back({"brackets.table", "all ten brackets [v_a, v_b] match the tabulated matrices", 10, [](const Context&) {
                     auto V = forms::BilinearSpace::symplectic(4);
                     int ok = 0;
                     for (auto& [ab, m] : fx::bracket_table()) ok += forms::commutator_map(fx::v(ab.first), fx::v(ab.second), V) == m;
                     return json(ok);
                 }});
    c.push_back({"brackets.wedge_iso_rank", "the bracket map from wedge^2 p' to t is an isomorphism", 10,
                 [](const Context&) { return json(exactalg::rank(forms::wedge_bracket_iso())); }});
    c.push_back({"kp.orbit_dims_N3k4", "orbit dimensions of the four fixture types at (N,k) = (3,4), shifted by 3",
                 json::array({12, 12, 11, 9}), [](const Context&) { return orbit_dims_of_fixtures(); }});
    c.push_back({"kp.k2_orbit_dims", "the three k = 2 diagrams have orbit dimensions 2N-3, N, 0 (N = 4, 5; N = 3 lacks the first)",
                 json{{"3", {3, 0}}, {"4", {5, 4, 0}}, {"5", {7, 5, 0}}}, [](const Context&) {
                     json out;
                     for (std::size_t N = 3; N <= 5; ++N) {
                         json row = json::array();
                         if (N >= 4) row.push_back(kp::dim_spo_orbit(kp::AbDiagram::parse("aba,aba" + a_run(N - 4))));
                         row.push_back(kp::dim_spo_orbit(kp::AbDiagram::parse("ab,ba" + a_run(N - 2))));
                         row.push_back(kp::dim_spo_orbit(kp::AbDiagram::parse("b,b" + a_run(N))));
                         out[std::to_string(N)] = row;
                     }
                     return out;
                 }});
    c.push_back({"kp.small_orbit_dims_N3k4", "the diagrams ab,ba,b,b,a and b,b,b,b,a,a,a have orbit dimensions 5 and 0",
                 json::array({5, 0}), [](const Context&) {
                     return json::array({kp::dim_spo_orbit(kp::AbDiagram::parse("ab,ba,b,b,a")),
                                         kp::dim_spo_orbit(kp::AbDiagram::parse("b,b,b,b,a,a,a"))});
                 }});
    c.push_back({"stability.fixtures", "x(II) is stable and costable; x(I), x(III), x(IV) are not costable",
                 json{{"I", {false, false}}, {"II", {true, true}}, {"III", {false, false}}, {"IV", {false, false}}},
                 [](const Context&) {
                     json out;
                     for (auto t : kTypes) out[fx::type_name(t)] = {forms::is_stable(fx::x(t)), forms::is_costable(fx::x(t))};
                     return out;
                 }});
    c.push_back({"stability.no_costable_points_N2k4", "200 seeded points of mu^-1(0) at (N,k) = (2,4) are all non-costable",
                 json{{"points", 200}, {"costable", 0}}, [](const Context& ctx) {
                     auto pts = sample_mu_zero_n2k4(200, ctx.seed);
                     int costable = 0;
                     for (auto& x : pts) costable += forms::is_costable(x);
                     return json{{"points", pts.size()}, {"costable", costable}};
                 }});
    c.push_back({"ideals.rho_N3k2", "rho-ideal at (3,2): dimension 3, complete intersection, not reduced",
                 json{{"dim", 3}, {"ci", true}, {"nonreduced", true}}, [](const Context& ctx) { return rho_summary(3, ctx); }});
    c.push_back({"ideals.rho_N4k2", "rho-ideal at (4,2): dimension 5, complete intersection, reduced",
                 json{{"dim", 5}, {"ci", true}, {"nonreduced", false}}, [](const Context& ctx) { return rho_summary(4, ctx); }});
    c.push_back({"ideals.rho_N5k2", "rho-ideal at (5,2): complete intersection of dimension 7",
                 json{{"dim", 7}, {"ci", true}, {"nonreduced", false}}, [](const Context& ctx) { return rho_summary(5, ctx); }});
    c.push_back({"ideals.not_ci_N2k4", "at (2,4) the commutator and rho pieces have dimensions summing past 10",
                 json{{"commutator_dim", 8}, {"rho_dim", 4}, {"sum", 12}, {"exceeds_expected", true}}, [](const Context& ctx) {
                     int a = ideals::krull_dimension(ideals::groebner(ideals::build_ideal("commutator", 2, 4, Flavor::SOData), ctx.groebner));
                     int b = ideals::krull_dimension(ideals::groebner(ideals::build_ideal("rho", 2, 4, Flavor::SOData), ctx.groebner));
                     return json{{"commutator_dim", a}, {"rho_dim", b}, {"sum", a + b}, {"exceeds_expected", a + b > 10}};
                 }});
    c.push_back({"ideals.fat_point", "the pi-image of rho^-1(0) at (3,2) is cut out by the square of the maximal ideal",
                 json{{"generators", 6}, {"square_of_maximal_ideal", true}}, [](const Context& ctx) {
                     auto tags = ideals::build_ideal("pi_image_tags", 3, 2, Flavor::SOData);
                     auto fat = ideals::elimination(tags, {6, 7, 8}, ctx.groebner);
                     auto G = ideals::groebner(fat, ctx.groebner);
                     bool ok = G.basis.size() == 6;
                     for (std::size_t a = 0; a < 3; ++a)
                         for (std::size_t b = a; b < 3; ++b)
                             ok = ok && ideals::contains(G, ideals::Polynomial::variable(a) * ideals::Polynomial::variable(b));
                     for (std::size_t a = 0; a < 3; ++a) ok = ok && !ideals::contains(G, ideals::Polynomial::variable(a));
                     return json{{"generators", G.basis.size()}, {"square_of_maximal_ideal", ok}};
                 }});
    c.push_back({"factorization.x_I_roundtrip", "x(I) splits into two rank-one blocks at +-1/2 and reassembles exactly",
                 json{{"supports", json::array({json::array({"-1/2", "-1/2"}), json::array({"1/2", "1/2"})})}, {"ranks", {1, 1}}, {"exact", true}}, [](const Context&) {
                     auto x = fx::x(fx::Type::I);
                     auto sp = factorization::split_by_spectrum(x);
                     json sup = json::array(), ranks = json::array();
                     for (auto& z : sp.partition.supports) {
                         json s = json::array();
                         for (auto& a : z) s.push_back(a.str());
                         sup.push_back(s);
                     }
                     for (auto& b : sp.data.blocks) ranks.push_back(exactalg::rank(b.i));
                     auto y = forms::act(exactalg::inverse(sp.g), Matrix::identity(3), factorization::assemble(sp.data, sp.partition));
                     return json{{"supports", sup}, {"ranks", ranks}, {"exact", y.B1 == x.B1 && y.B2 == x.B2 && y.i == x.i}};
                 }});
    c.push_back({"factorization.stabilizer_product", "the reassembled x(I) has a 2-dimensional stabilizer", 2, [](const Context&) {
                     auto sp = factorization::split_by_spectrum(fx::x(fx::Type::I));
                     return json(factorization::stabilizer_product_check(sp.data, sp.partition));
                 }});
    c.push_back({"git.image_sampling", "orbit samples land in the union of the two quadric cones; type I on the first, type II on the second",
                 json{{"x_I", "first"}, {"x_II", "second"}, {"x_III_in_union", true}, {"x_IV_in_union", true}}, [](const Context& ctx) {
                     auto cls = [&](const char* n) { return image_class(ideals::sample_orbit_image(n, 100, ctx.seed)); };
                     return json{{"x_I", cls("x_I")}, {"x_II", cls("x_II")}, {"x_III_in_union", cls("x_III") != "off"},
                                 {"x_IV_in_union", cls("x_IV") != "off"}};
                 }});
    c.push_back({"partition.ambient_formula", "the ambient expansion matches the closed product formula to q-degree 8",
                 json{{"k1_N2_sp", true}, {"k2_N2_sp", true}, {"k2_N3_so", true}}, [](const Context&) {
                     json out;
                     for (auto [name, f, N, k] : {std::tuple{"k1_N2_sp", Flavor::SpData, 2, 1}, std::tuple{"k2_N2_sp", Flavor::SpData, 2, 2},
                                                  std::tuple{"k2_N3_so", Flavor::SOData, 3, 2}}) {
                         partition::Setting s{f, std::size_t(N), std::size_t(k)};
                         auto ser = partition::expand(partition::ambient_character(s), 8).specialize();
                         bool ok = true;
                         for (int d1 = 0; d1 <= 16; ++d1)
                             for (int d2 = 0; d1 + d2 <= 16; ++d2) {
                                 auto it = ser.find({d1, d2});
                                 ok = ok && (it == ser.end() ? 0 : it->second) == ambient_closed(s, d1, d2);
                             }
                         out[name] = ok;
                     }
                     return out;
                 }});
    c.push_back({"partition.koszul_vs_hilbert", "Koszul expansion equals the multigraded Hilbert function for Sp-data (2,1), (2,2)",
                 json{{"1", true}, {"2", true}}, [](const Context& ctx) {
                     json out;
                     for (std::size_t k : {1, 2}) {
                         partition::Setting s{Flavor::SpData, 2, k};
                         auto ser = partition::expand(partition::koszul_character(s), 8);
                         ideals::BuildOptions bo;
                         bo.style = forms::GramStyle::Weight;
                         auto I = ideals::build_ideal("mu", 2, k, Flavor::SpData, bo);
                         auto H = ideals::multigraded_hilbert(I, I.weights, 16, ctx.groebner);
                         std::map<partition::Key, long long> h;
                         for (auto& [key, v] : H.counts)
                             if (v != 0) h[key] = v;
                         out[std::to_string(k)] = h == ser.terms;
                     }
                     return out;
                 }});
    c.push_back({"partition.invariants_vs_oracle", "Weyl integration matches the linear-algebra invariant count for O(1), O(2)",
                 json{{"1", true}, {"2", true}}, [](const Context&) {
                     json out;
                     for (std::size_t k : {1, 2}) {
                         partition::Setting s{Flavor::SpData, 2, k};
                         auto inv = partition::invariant_part(s, partition::weyl_data(s), 4);
                         bool ok = true;
                         for (int d1 = 0; d1 <= 8; ++d1)
                             for (int d2 = 0; d1 + d2 <= 8; ++d2)
                                 for (int t = -std::min(d1, d2); t <= std::min(d1, d2); ++t)
                                     ok = ok && inv.coeff({d1, d2, t}) == partition::brute_force_koszul_invariant(s, {d1, d2, t});
                         out[std::to_string(k)] = ok;
                     }
                     return out;
                 }});
    c.push_back({"partition.o2_low_degree", "O(2) invariants of the Koszul class at q1, q1^2, q1q2 for Sp-data (2,2)",
                 json::array({1, 2, 3}), [](const Context&) {
                     partition::Setting s{Flavor::SpData, 2, 2};
                     auto inv = partition::invariant_part(s, partition::weyl_data(s), 2);
                     return json::array({inv.coeff({2, 0, 0}), inv.coeff({4, 0, 0}), inv.coeff({2, 2, 0})});
                 }});
    return c;
}

}  // namespace

std::vector<ADHMDatum> sample_mu_zero_n2k4(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ADHMDatum> out;
    for (std::size_t m = 0; m < n; ++m) {
        ADHMDatum x;
        switch (m % 4) {
            case 0: x = drop_column(fx::x(fx::Type::I), 2); break;
            case 1: x = drop_column(fx::x(fx::Type::IV), 2); break;
            case 2: x = glued_blocks(rng); break;
            default: x = commuting_pair(rng); break;
        }
        x = move_randomly(x, rng);
        if (!forms::moment_map(x).is_zero()) throw Error(ErrorCode::Internal, "sampled point is off mu^-1(0)");
        out.push_back(std::move(x));
    }
    return out;
}

const std::vector<LemmaCheck>& checks() {
    static const std::vector<LemmaCheck> all = build();
    return all;
}

Report run_check(const std::string& id, const Context& ctx) {
    auto& all = checks();
    auto it = std::find_if(all.begin(), all.end(), [&](const LemmaCheck& c) { return c.id == id; });
    if (it == all.end()) throw Error(ErrorCode::UnknownCheck, id);
    Report r{id, "fail", nullptr, it->expected, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.computed = it->runner(ctx);
        r.status = r.computed == r.expected ? "pass" : "fail";
    } catch (const Error& e) {
        r.status = "error";
        r.error = error_code_name(e.code());
        r.computed = e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<Report> run_all(const std::string& filter, const Context& ctx) {
    std::vector<Report> out;
    for (auto& c : checks())
        if (filter.empty() || fnmatch(filter.c_str(), c.id.c_str(), 0) == 0) out.push_back(run_check(c.id, ctx));
    return out;
}

json to_json(const Report& r, bool with_runtime) {
    json j{{"id", r.id}, {"status", r.status}, {"computed", r.computed}, {"expected", r.expected}};
    if (!r.error.empty()) j["error"] = r.error;
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    return j;
}

int exit_code(const std::vector<Report>& reports) {
    int code = 0;
    for (auto& r : reports) {
        if (r.status == "error" && r.error == error_code_name(ErrorCode::BudgetExceeded)) return 2;
        if (r.status != "pass") code = 1;
    }
    return code;
}

}  // namespace adhm::registry
