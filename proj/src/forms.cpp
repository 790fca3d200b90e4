#include "adhm/forms.hpp"

namespace adhm::forms {

using exactalg::inverse;
using exactalg::rank;
using exactalg::rank_kernel;
using exactalg::rref;

std::string flavor_name(Flavor f) { return f == Flavor::SpData ? "sp" : "so"; }

Flavor parse_flavor(const std::string& s) {
    if (s == "sp" || s == "SpData") return Flavor::SpData;
    if (s == "so" || s == "SOData") return Flavor::SOData;
    throw Error(ErrorCode::InvalidArgument, "unknown flavor '" + s + "' (expected sp or so)");
}

BilinearSpace BilinearSpace::symplectic(std::size_t n) {
    if (n % 2) throw Error(ErrorCode::InvalidArgument, "symplectic space of odd dimension");
    BilinearSpace s;
    s.dim = n;
    s.epsilon = -1;
    s.gram = Matrix(n, n);
    for (std::size_t a = 0; a + 1 < n; a += 2) {
        s.gram(a, a + 1) = Scalar(1);
        s.gram(a + 1, a) = Scalar(-1);
    }
    return s;
}

BilinearSpace BilinearSpace::orthogonal(std::size_t n, GramStyle style) {
    BilinearSpace s;
    s.dim = n;
    s.epsilon = 1;
    if (style == GramStyle::Standard) {
        s.gram = Matrix::identity(n);
        return s;
    }
    s.gram = Matrix(n, n);
    std::size_t a = 0;
    for (; a + 1 < n; a += 2) {
        s.gram(a, a + 1) = Scalar(1);
        s.gram(a + 1, a) = Scalar(1);
    }
    if (a < n) s.gram(a, a) = Scalar(1);
    return s;
}

void BilinearSpace::validate() const {
    if (gram.rows() != dim || gram.cols() != dim) throw Error(ErrorCode::ShapeMismatch, "gram shape");
    if (gram.transpose() != gram * Scalar(epsilon)) throw Error(ErrorCode::InvalidArgument, "gram symmetry");
    if (rank(gram) != dim) throw Error(ErrorCode::InvalidArgument, "degenerate gram");
}

FramedSetting FramedSetting::make(Flavor f, std::size_t N, std::size_t k, GramStyle style) {
    FramedSetting s;
    s.flavor = f;
    s.style = style;
    if (f == Flavor::SOData) {
        s.V = BilinearSpace::symplectic(k);
        s.W = BilinearSpace::orthogonal(N, style);
    } else {
        s.V = BilinearSpace::orthogonal(k, style);
        s.W = BilinearSpace::symplectic(N);
    }
    return s;
}

Matrix right_adjoint(const Matrix& f, const BilinearSpace& src, const BilinearSpace& dst) {
    if (f.rows() != dst.dim || f.cols() != src.dim) throw Error(ErrorCode::ShapeMismatch, "right_adjoint");
    if (f.rows() == 0 || f.cols() == 0) return Matrix(src.dim, dst.dim);
    return inverse(src.gram) * f.transpose() * dst.gram;
}

LieSplit tp_split(const Matrix& X, const BilinearSpace& V) {
    Matrix xs = right_adjoint(X, V, V);
    Scalar half = Scalar::frac(1, 2);
    return {(X - xs) * half, (X + xs) * half};
}

bool in_p(const Matrix& X, const BilinearSpace& V) { return right_adjoint(X, V, V) == X; }
bool in_t(const Matrix& X, const BilinearSpace& V) { return right_adjoint(X, V, V) == -X; }

ADHMDatum ADHMDatum::make(const FramedSetting& s, Matrix B1, Matrix B2, Matrix i) {
    std::size_t k = s.k(), N = s.N();
    if (B1.rows() != k || B1.cols() != k || B2.rows() != k || B2.cols() != k || i.rows() != k || i.cols() != N)
        throw Error(ErrorCode::ShapeMismatch, "ADHM datum shapes");
    if (!in_p(B1, s.V) || !in_p(B2, s.V)) throw Error(ErrorCode::NotInP, "B1, B2 must be self-adjoint");
    ADHMDatum x;
    x.setting = s;
    x.j = right_adjoint(i, s.W, s.V);
    x.B1 = std::move(B1);
    x.B2 = std::move(B2);
    x.i = std::move(i);
    return x;
}

ADHMDatum ADHMDatum::zero(const FramedSetting& s) {
    return make(s, Matrix(s.k(), s.k()), Matrix(s.k(), s.k()), Matrix(s.k(), s.N()));
}

static std::vector<IndexPair> pairs(std::size_t n, bool with_diag) {
    std::vector<IndexPair> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = with_diag ? a : a + 1; b < n; ++b) out.push_back({a, b});
    return out;
}

// t: (GX)^T = -eps GX;  p: (GX)^T = eps GX
std::vector<IndexPair> t_index(const BilinearSpace& V) { return pairs(V.dim, V.epsilon == -1); }
std::vector<IndexPair> p_index(const BilinearSpace& V) { return pairs(V.dim, V.epsilon == 1); }

static std::vector<Matrix> basis_from(const BilinearSpace& V, const std::vector<IndexPair>& idx, int sym) {
    Matrix ginv = inverse(V.gram);
    std::vector<Matrix> out;
    for (auto [a, b] : idx) {
        Matrix s(V.dim, V.dim);
        s(a, b) += Scalar(1);
        if (a != b) s(b, a) += Scalar(sym);
        out.push_back(ginv * s);
    }
    return out;
}

std::vector<Matrix> t_basis(const BilinearSpace& V) { return basis_from(V, t_index(V), -V.epsilon); }
std::vector<Matrix> p_basis(const BilinearSpace& V) { return basis_from(V, p_index(V), V.epsilon); }

std::vector<std::vector<int>> torus_weights(const BilinearSpace& V) {
    std::size_t r = V.dim / 2;
    for (std::size_t a = 0; a < V.dim; ++a)
        for (std::size_t b = 0; b < V.dim; ++b) {
            bool partner = a / 2 == b / 2 && a / 2 < r && a != b;
            bool odd_tail = a == b && a == 2 * r;
            if (!V.gram(a, b).is_zero() && !partner && !odd_tail)
                throw Error(ErrorCode::InvalidArgument, "torus does not act diagonally for this gram matrix");
        }
    std::vector<std::vector<int>> w(V.dim, std::vector<int>(r, 0));
    for (std::size_t a = 0; a < 2 * r; ++a) w[a][a / 2] = a % 2 ? -1 : 1;
    return w;
}

std::vector<Scalar> t_coords(const Matrix& X, const BilinearSpace& V) {
    Matrix gx = V.gram * X;
    std::vector<Scalar> out;
    for (auto [a, b] : t_index(V)) out.push_back(gx(a, b));
    return out;
}

Matrix moment_map(const ADHMDatum& x) { return exactalg::commutator(x.B1, x.B2) + x.i * x.j; }

Matrix commutator_map(const Matrix& B1, const Matrix& B2, const BilinearSpace& V) {
    if (!in_p(B1, V) || !in_p(B2, V)) throw Error(ErrorCode::NotInP, "commutator_map needs B1, B2 in p(V)");
    return exactalg::commutator(B1, B2);
}

Matrix rho(const Matrix& i, const FramedSetting& s) { return i * right_adjoint(i, s.W, s.V); }
Matrix pi(const Matrix& i, const FramedSetting& s) { return right_adjoint(i, s.W, s.V) * i; }

Subspace stable_closure(const ADHMDatum& x) {
    std::size_t k = x.setting.k();
    if (k == 0) return Subspace(0);
    Subspace s = x.i.cols() ? Subspace::span(x.i) : Subspace(k);
    while (true) {
        Subspace next = s.sum(s.image(x.B1)).sum(s.image(x.B2));
        if (next.dim() == s.dim()) return s;
        s = next;
    }
}

Subspace costable_obstruction(const ADHMDatum& x) {
    std::size_t k = x.setting.k();
    if (k == 0) return Subspace(0);
    // T = Ker(A); T ∩ B^{-1}T = Ker([A; A B])
    Matrix a = x.j.rows() ? x.j : Matrix(1, k);
    std::size_t dim = rank_kernel(a).kernel.dim();
    while (true) {
        Matrix stacked = Matrix::vstack({a, a * x.B1, a * x.B2});
        auto e = rref(stacked);
        a = e.pivots.empty() ? Matrix(1, k) : e.r.sub(0, 0, e.pivots.size(), k);
        std::size_t nd = k - e.pivots.size();
        if (nd == dim) break;
        dim = nd;
    }
    return rank_kernel(a).kernel;
}

bool is_stable(const ADHMDatum& x) { return stable_closure(x).dim() == x.setting.k(); }
bool is_costable(const ADHMDatum& x) { return costable_obstruction(x).dim() == 0; }

static Matrix vec(const std::vector<Matrix>& ms) {
    std::vector<Scalar> v;
    for (auto& m : ms) v.insert(v.end(), m.entries().begin(), m.entries().end());
    return Matrix::column(v);
}

std::vector<Matrix> stabilizer_lie(const ADHMDatum& x) {
    auto tb = t_basis(x.setting.V);
    if (tb.empty()) return {};
    std::vector<Matrix> cols;
    for (auto& t : tb) cols.push_back(vec({exactalg::commutator(t, x.B1), exactalg::commutator(t, x.B2), t * x.i}));
    auto ker = rank_kernel(Matrix::hstack(cols)).kernel;
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < ker.dim(); ++c) {
        Matrix xi(x.setting.k(), x.setting.k());
        for (std::size_t l = 0; l < tb.size(); ++l) xi += tb[l] * ker.basis()(l, c);
        if (!exactalg::commutator(xi, x.B1).is_zero() || !exactalg::commutator(xi, x.B2).is_zero() ||
            !(xi * x.i).is_zero())
            throw Error(ErrorCode::Internal, "stabilizer element does not annihilate x");
        out.push_back(std::move(xi));
    }
    return out;
}

Matrix wedge_bracket_iso() {
    BilinearSpace V = BilinearSpace::symplectic(4);
    std::vector<Matrix> cols;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            Matrix br = exactalg::commutator(fixtures::v(a), fixtures::v(b));
            cols.push_back(Matrix::column(t_coords(br, V)));
        }
    return Matrix::hstack(cols);
}

long small_int(std::mt19937_64& rng, long r) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * r + 1)) - r; }

Matrix random_isometry(const BilinearSpace& V, std::mt19937_64& rng) {
    auto tb = t_basis(V);
    Matrix id = Matrix::identity(V.dim);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Matrix a(V.dim, V.dim);
        for (auto& t : tb) a += t * Scalar(small_int(rng));
        Matrix m = id - a;
        if (rank(m) < V.dim) continue;
        Matrix g = (id + a) * inverse(m);
        if (right_adjoint(g, V, V) * g != id) throw Error(ErrorCode::Internal, "Cayley transform is not an isometry");
        return g;
    }
    throw Error(ErrorCode::Internal, "random_isometry: I - A singular on every attempt");
}

Matrix random_isometry(const BilinearSpace& V, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_isometry(V, rng);
}

Scalar scalar_commutator_check(const Matrix& B1, const Matrix& B2, const BilinearSpace& V) {
    if (V.dim != 4 || V.epsilon != -1) throw Error(ErrorCode::InvalidArgument, "needs symplectic C^4");
    if (!in_p(B1, V) || !in_p(B2, V)) throw Error(ErrorCode::NotInP, "B1, B2 must lie in p(V)");
    if (!B1.trace().is_zero() || !B2.trace().is_zero()) throw Error(ErrorCode::InvalidArgument, "B1, B2 must be trace-free");
    Matrix c = exactalg::commutator(B1, B2);
    Matrix sq = c * c;
    Scalar s = sq(0, 0);
    if (sq != Matrix::identity(4) * s) throw Error(ErrorCode::NotScalar, "[B1,B2]^2 is not scalar");
    return s;
}

ADHMDatum act(const Matrix& g, const Matrix& h, const ADHMDatum& x) {
    Matrix gi = inverse(g), hi = inverse(h);
    return ADHMDatum::make(x.setting, g * x.B1 * gi, g * x.B2 * gi, g * x.i * hi);
}

ADHMDatum act_sl2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, const ADHMDatum& x) {
    return ADHMDatum::make(x.setting, x.B1 * a + x.B2 * b, x.B1 * c + x.B2 * d, x.i);
}

nlohmann::json to_json(const ADHMDatum& x) {
    nlohmann::json s = {{"k", x.setting.k()}, {"N", x.setting.N()}, {"flavor", flavor_name(x.setting.flavor)}};
    if (x.setting.style == GramStyle::Weight) s["gram"] = "weight";
    return {{"setting", s},
            {"B1", exactalg::to_json(x.B1)},
            {"B2", exactalg::to_json(x.B2)},
            {"i", exactalg::to_json(x.i)},
            {"j", exactalg::to_json(x.j)}};
}

ADHMDatum datum_from_json(const nlohmann::json& j) {
    try {
        const auto& s = j.at("setting");
        GramStyle style = s.value("gram", std::string("standard")) == "weight" ? GramStyle::Weight : GramStyle::Standard;
        auto st = FramedSetting::make(parse_flavor(s.at("flavor").get<std::string>()), s.at("N").get<std::size_t>(),
                                      s.at("k").get<std::size_t>(), style);
        return ADHMDatum::make(st, exactalg::matrix_from_json(j.at("B1")), exactalg::matrix_from_json(j.at("B2")),
                               exactalg::matrix_from_json(j.at("i")));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

}  // namespace adhm::forms
