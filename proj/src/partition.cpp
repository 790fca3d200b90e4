#include "adhm/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace adhm::partition {

using exactalg::Matrix;
using exactalg::Scalar;
using forms::Flavor;

// ---------- series ----------

long long TruncatedSeries::coeff(const Key& k) const {
    auto it = terms.find(k);
    return it == terms.end() ? 0 : it->second;
}

std::map<std::pair<int, int>, long long> TruncatedSeries::specialize() const {
    std::map<std::pair<int, int>, long long> out;
    for (auto& [k, c] : terms) out[{k[0], k[1]}] += c;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

TruncatedSeries TruncatedSeries::truncate(int dorder) const {
    TruncatedSeries out{std::min(order, dorder), rz, rt, {}};
    for (auto& [k, c] : terms)
        if (k[0] + k[1] <= out.order) out.terms.emplace(k, c);
    return out;
}

bool TruncatedSeries::has_z() const {
    for (auto& [k, c] : terms)
        for (std::size_t a = 0; a < rz; ++a)
            if (k[2 + a] != 0) return true;
    return false;
}

namespace {

std::string half(int d) {
    // exponent -d/2 in the coordinate-function convention
    mpq_class q(-d, 2);
    q.canonicalize();
    return q.get_str();
}

std::string laurent_str(const std::map<std::vector<int>, long long>& poly, std::size_t rz) {
    if (poly.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : poly) {
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (v < rz ? "z" + std::to_string(v + 1) : "t" + std::to_string(v - rz + 1));
            if (e[v] != -1) mono += "^" + std::to_string(-e[v]);
        }
        long long a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mono.empty())
            os << a;
        else if (a == 1)
            os << mono;
        else
            os << a << "*" << mono;
    }
    return os.str();
}

}  // namespace

nlohmann::json TruncatedSeries::to_json() const {
    std::map<std::pair<int, int>, std::map<std::vector<int>, long long>> grouped;
    for (auto& [k, c] : terms) grouped[{k[0], k[1]}][std::vector<int>(k.begin() + 2, k.end())] = c;
    nlohmann::json ts = nlohmann::json::array();
    for (auto& [q, poly] : grouped) ts.push_back({{"q1", half(q.first)}, {"q2", half(q.second)}, {"poly", laurent_str(poly, rz)}});
    return {{"order", order}, {"terms", ts}};
}

// ---------- weights ----------

namespace {

void check_size(const Setting& s) {
    if (s.k > 4 || s.N > 6) throw Error(ErrorCode::UnsupportedSize, "weight tables cover k <= 4 and N <= 6");
    if (s.flavor == Flavor::SOData && s.k % 2) throw Error(ErrorCode::InvalidArgument, "SO-data needs even k");
    if (s.flavor == Flavor::SpData && s.N % 2) throw Error(ErrorCode::InvalidArgument, "Sp-data needs even N");
}

HalfWeight product(const HalfWeight& a, const HalfWeight& b) {
    HalfWeight w = a;
    w.dq1 += b.dq1;
    w.dq2 += b.dq2;
    for (std::size_t c = 0; c < w.z.size(); ++c) w.z[c] += b.z[c];
    for (std::size_t c = 0; c < w.t.size(); ++c) w.t[c] += b.t[c];
    w.sign *= b.sign;
    return w;
}

// Sym^2 (sym) or wedge^2 of the V-eigenvalues, times a q-weight
std::vector<HalfWeight> square(const std::vector<HalfWeight>& v, bool sym, int dq1, int dq2) {
    std::vector<HalfWeight> out;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = sym ? a : a + 1; b < v.size(); ++b) {
            HalfWeight w = product(v[a], v[b]);
            w.dq1 += dq1;
            w.dq2 += dq2;
            out.push_back(std::move(w));
        }
    return out;
}

}  // namespace

std::vector<HalfWeight> torus_V(const Setting& s) {
    std::vector<HalfWeight> v;
    for (std::size_t a = 0; a < s.k; ++a) {
        HalfWeight w{0, 0, std::vector<int>(s.rz(), 0), std::vector<int>(s.rt(), 0), 1};
        if (a < 2 * s.rz()) w.z[a / 2] = a % 2 ? -1 : 1;
        v.push_back(std::move(w));
    }
    return v;
}

std::vector<HalfWeight> weights_of_N(const Setting& s) { return weights_of_N(s, torus_V(s)); }

std::vector<HalfWeight> weights_of_N(const Setting& s, const std::vector<HalfWeight>& v) {
    check_size(s);
    bool sym = s.epsilon_V() == 1;  // p(V) = Sym^2 V for orthogonal V
    auto out = square(v, sym, 2, 0);
    auto b2 = square(v, sym, 0, 2);
    out.insert(out.end(), b2.begin(), b2.end());
    // Hom(W, V) = V (x) W^dual, weight (q1 q2)^{1/2}
    for (auto& va : v)
        for (std::size_t c = 0; c < s.N; ++c) {
            HalfWeight w = va;
            w.dq1 += 1;
            w.dq2 += 1;
            if (c < 2 * s.rt()) w.t[c / 2] -= c % 2 ? -1 : 1;
            out.push_back(std::move(w));
        }
    return out;
}

std::vector<HalfWeight> weights_of_E(const Setting& s) { return weights_of_E(s, torus_V(s)); }

std::vector<HalfWeight> weights_of_E(const Setting& s, const std::vector<HalfWeight>& v) {
    check_size(s);
    // Lie G(V): wedge^2 for orthogonal V, Sym^2 for symplectic V; weight of [B1, B2]
    return square(v, s.epsilon_V() == -1, 2, 2);
}

RationalCharacter koszul_character(const Setting& s) { return koszul_character(s, torus_V(s)); }

RationalCharacter koszul_character(const Setting& s, const std::vector<HalfWeight>& v) {
    return {s.rz(), s.rt(), weights_of_E(s, v), weights_of_N(s, v)};
}

RationalCharacter ambient_character(const Setting& s) { return {s.rz(), s.rt(), {}, weights_of_N(s)}; }

// ---------- expansion ----------

namespace {

Key shifted(const Key& k, const HalfWeight& w) {
    Key out = k;
    out[0] += w.dq1;
    out[1] += w.dq2;
    for (std::size_t c = 0; c < w.z.size(); ++c) out[2 + c] += w.z[c];
    for (std::size_t c = 0; c < w.t.size(); ++c) out[2 + w.z.size() + c] += w.t[c];
    return out;
}

void check_weight(const HalfWeight& w, const RationalCharacter& rc) {
    if (w.z.size() != rc.rz || w.t.size() != rc.rt) throw Error(ErrorCode::ShapeMismatch, "weight vector lengths");
    if (w.dq1 < 0 || w.dq2 < 0 || w.qdeg() == 0)
        throw Error(ErrorCode::InvalidArgument, "weights must have positive q-degree");
}

}  // namespace

TruncatedSeries expand(const RationalCharacter& rc, int order) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
    int D = 2 * order;
    std::vector<std::map<Key, long long>> level(D + 1);
    level[0][Key(2 + rc.rz + rc.rt, 0)] = 1;

    for (auto& w : rc.numerator) {
        check_weight(w, rc);
        // times (1 - w): read low levels before they are overwritten
        for (int d = D - w.qdeg(); d >= 0; --d)
            for (auto& [k, c] : level[d]) level[d + w.qdeg()][shifted(k, w)] -= w.sign * c;
    }
    for (auto& w : rc.denominator) {
        check_weight(w, rc);
        // times sum_n w^n: each level is final by the time it is read
        for (int d = 0; d + w.qdeg() <= D; ++d)
            for (auto& [k, c] : level[d])
                if (c != 0) level[d + w.qdeg()][shifted(k, w)] += w.sign * c;
    }
    TruncatedSeries out{D, rc.rz, rc.rt, {}};
    for (auto& l : level)
        for (auto& [k, c] : l)
            if (c != 0) out.terms.emplace(k, c);
    return out;
}

// ---------- Weyl data ----------

std::string group_name(Group g) {
    switch (g) {
        case Group::Trivial: return "trivial";
        case Group::O1: return "O(1)";
        case Group::O2: return "O(2)";
        case Group::O3: return "O(3)";
        case Group::Sp1: return "Sp(1)";
        case Group::Sp2: return "Sp(2)";
    }
    return "?";
}

Group group_for(const Setting& s) {
    if (s.k == 0) return Group::Trivial;
    if (s.flavor == Flavor::SpData) {
        if (s.k == 1) return Group::O1;
        if (s.k == 2) return Group::O2;
        if (s.k == 3) return Group::O3;
    } else {
        if (s.k == 2) return Group::Sp1;
        if (s.k == 4) return Group::Sp2;
    }
    throw Error(ErrorCode::UnsupportedGroup, "no Weyl table for k = " + std::to_string(s.k));
}

WeylData weyl_data(const Setting& s) {
    WeylData wd;
    wd.group = group_for(s);
    auto torus = torus_V(s);
    auto scaled = [](std::vector<HalfWeight> v, int sign) {
        for (auto& w : v) w.sign *= sign;
        return v;
    };
    auto root = [&](int a, int b) {
        std::vector<int> r(s.rz(), 0);
        r[0] = a;
        if (s.rz() > 1) r[1] = b;
        return r;
    };
    mpq_class half(1, 2);
    switch (wd.group) {
        case Group::Trivial: wd.components.push_back({torus, {}, 1, 1}); break;
        case Group::O1:
            wd.components.push_back({torus, {}, 1, half});
            wd.components.push_back({scaled(torus, -1), {}, 1, half});
            break;
        case Group::O2: {
            wd.components.push_back({torus, {}, 1, half});
            // reflection: eigenvalues +1, -1 and no torus left
            auto refl = torus;
            for (auto& w : refl) std::fill(w.z.begin(), w.z.end(), 0);
            refl[1].sign = -1;
            wd.components.push_back({refl, {}, 1, half});
            break;
        }
        case Group::O3: {
            std::vector<std::vector<int>> roots{root(1, 0), root(-1, 0)};
            wd.components.push_back({torus, roots, 2, half});
            wd.components.push_back({scaled(torus, -1), roots, 2, half});
            break;
        }
        case Group::Sp1: wd.components.push_back({torus, {root(2, 0), root(-2, 0)}, 2, 1}); break;
        case Group::Sp2:
            wd.components.push_back({torus,
                                     {root(2, 0), root(-2, 0), root(0, 2), root(0, -2), root(1, 1), root(-1, -1),
                                      root(1, -1), root(-1, 1)},
                                     8,
                                     1});
            break;
    }
    return wd;
}

TruncatedSeries invariant_part(const Setting& s, const WeylData& wd, int order, bool with_E) {
    if (group_for(s) != wd.group) throw Error(ErrorCode::UnsupportedGroup, "Weyl data does not match the setting");
    std::map<Key, mpq_class> acc;
    for (auto& comp : wd.components) {
        auto rc = koszul_character(s, comp.v_eigen);
        if (!with_E) rc.numerator.clear();
        TruncatedSeries ser = expand(rc, order);
        // Weyl measure as a Laurent polynomial in z
        std::map<std::vector<int>, long long> measure{{std::vector<int>(s.rz(), 0), 1}};
        for (auto& r : comp.roots) {
            std::map<std::vector<int>, long long> next;
            for (auto& [e, c] : measure) {
                next[e] += c;
                auto f = e;
                for (std::size_t a = 0; a < f.size(); ++a) f[a] += r[a];
                next[f] -= c;
            }
            measure = std::move(next);
        }
        mpq_class scale = comp.weight / comp.weyl_order;
        for (auto& [k, c] : ser.terms) {
            // z^e in the series pairs with z^-e in the measure
            std::vector<int> e(k.begin() + 2, k.begin() + 2 + s.rz());
            for (auto& x : e) x = -x;
            auto it = measure.find(e);
            if (it == measure.end() || it->second == 0) continue;
            Key out{k[0], k[1]};
            out.insert(out.end(), k.begin() + 2 + s.rz(), k.end());
            acc[out] += scale * mpq_class(static_cast<long>(c * it->second));
        }
    }
    TruncatedSeries out{2 * order, 0, s.rt(), {}};
    for (auto& [k, q] : acc) {
        q.canonicalize();
        if (q == 0) continue;
        if (q.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral invariant coefficient " + q.get_str());
        out.terms.emplace(k, q.get_num().get_si());
    }
    return out;
}

// ---------- brute-force oracle ----------

namespace {

using Mono = std::vector<int>;
using Wedge = std::vector<std::size_t>;  // sorted indices into the basis of t(V)
using Vec = std::map<std::pair<Wedge, Mono>, Scalar>;

// N and t(V) in explicit torus-diagonal coordinates, with the generators of G(V) acting on both
struct Model {
    forms::FramedSetting fs;
    std::vector<forms::IndexPair> pidx;
    std::vector<Matrix> pb, tb;
    std::vector<Key> weight;                 // (dq1, dq2, z.., t..) of each vector of N
    std::vector<std::vector<int>> tb_z;      // z-weight of each basis vector of t(V)
    std::vector<std::pair<Matrix, Matrix>> lie, finite;  // (on N, on t(V)), columns are images
    std::size_t np = 0, n = 0, rz = 0;

    explicit Model(const Setting& s) {
        fs = forms::FramedSetting::make(s.flavor, s.N, s.k, forms::GramStyle::Weight);
        rz = s.rz();
        pidx = forms::p_index(fs.V);
        pb = forms::p_basis(fs.V);
        tb = forms::t_basis(fs.V);
        np = pb.size();
        n = 2 * np + s.k * s.N;
        auto wv = forms::torus_weights(fs.V), ww = forms::torus_weights(fs.W);
        auto conj_weight = [&](const Matrix& X) {
            std::vector<int> w;
            bool found = false;
            for (std::size_t c = 0; c < X.rows(); ++c)
                for (std::size_t d = 0; d < X.cols(); ++d) {
                    if (X(c, d).is_zero()) continue;
                    std::vector<int> e(rz);
                    for (std::size_t a = 0; a < rz; ++a) e[a] = wv[c][a] - wv[d][a];
                    if (found && e != w) throw Error(ErrorCode::Internal, "basis matrix is not a weight vector");
                    w = e;
                    found = true;
                }
            return w;
        };
        for (int slot = 0; slot < 2; ++slot)
            for (auto& P : pb) {
                Key w{slot == 0 ? 2 : 0, slot == 0 ? 0 : 2};
                auto z = conj_weight(P);
                w.insert(w.end(), z.begin(), z.end());
                w.resize(2 + rz + s.rt(), 0);
                weight.push_back(w);
            }
        for (std::size_t r = 0; r < s.k; ++r)
            for (std::size_t c = 0; c < s.N; ++c) {
                Key w{1, 1};
                for (std::size_t a = 0; a < rz; ++a) w.push_back(wv[r][a]);
                for (std::size_t a = 0; a < s.rt(); ++a) w.push_back(-ww[c][a]);
                weight.push_back(w);
            }
        for (auto& T : tb) tb_z.push_back(conj_weight(T));

        for (auto& xi : tb)
            lie.push_back({on_N([&](const std::array<Matrix, 3>& x) {
                               return std::array<Matrix, 3>{exactalg::commutator(xi, x[0]), exactalg::commutator(xi, x[1]),
                                                            xi * x[2]};
                           }),
                           on_t([&](const Matrix& T) { return exactalg::commutator(xi, T); })});
        Matrix sigma;
        Group g = group_for(s);
        if (g == Group::O1 || g == Group::O3) sigma = Matrix::identity(s.k) * Scalar(-1);
        if (g == Group::O2) sigma = Matrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}});
        if (sigma.rows()) {
            if (sigma.transpose() * fs.V.gram * sigma != fs.V.gram) throw Error(ErrorCode::Internal, "generator is not an isometry");
            Matrix si = exactalg::inverse(sigma);
            finite.push_back({on_N([&](const std::array<Matrix, 3>& x) {
                                  return std::array<Matrix, 3>{sigma * x[0] * si, sigma * x[1] * si, sigma * x[2]};
                              }),
                              on_t([&](const Matrix& T) { return sigma * T * si; })});
        }
    }

    std::array<Matrix, 3> basis(std::size_t d) const {
        std::size_t k = fs.k(), N = fs.N();
        std::array<Matrix, 3> x{Matrix(k, k), Matrix(k, k), Matrix(k, N)};
        if (d < np)
            x[0] = pb[d];
        else if (d < 2 * np)
            x[1] = pb[d - np];
        else
            x[2]((d - 2 * np) / N, (d - 2 * np) % N) = Scalar(1);
        return x;
    }

    std::vector<Scalar> coords(const std::array<Matrix, 3>& x) const {
        std::vector<Scalar> out;
        for (int slot = 0; slot < 2; ++slot) {
            Matrix gx = fs.V.gram * x[slot];
            for (auto [a, b] : pidx) out.push_back(gx(a, b));
        }
        for (std::size_t r = 0; r < fs.k(); ++r)
            for (std::size_t c = 0; c < fs.N(); ++c) out.push_back(x[2](r, c));
        return out;
    }

    Matrix on_N(const std::function<std::array<Matrix, 3>(const std::array<Matrix, 3>&)>& L) const {
        Matrix A(n, n);
        for (std::size_t d = 0; d < n; ++d) {
            auto v = coords(L(basis(d)));
            for (std::size_t c = 0; c < n; ++c) A(c, d) = v[c];
        }
        return A;
    }

    Matrix on_t(const std::function<Matrix(const Matrix&)>& L) const {
        Matrix A(tb.size(), tb.size());
        for (std::size_t d = 0; d < tb.size(); ++d) {
            auto v = forms::t_coords(L(tb[d]), fs.V);
            for (std::size_t c = 0; c < tb.size(); ++c) A(c, d) = v[c];
        }
        return A;
    }
};

// insert basis index l into a sorted wedge; sign 0 if it repeats
std::pair<int, Wedge> wedge_with(const Wedge& J, std::size_t l) {
    if (std::find(J.begin(), J.end(), l) != J.end()) return {0, {}};
    Wedge out = J;
    auto it = std::lower_bound(out.begin(), out.end(), l);
    int sign = (std::distance(it, out.end()) % 2) ? -1 : 1;
    out.insert(it, l);
    return {sign, out};
}

// derivation xi on (wedge of t(V)) (x) Sym(N): Leibniz over every factor
Vec derive(const Wedge& J, const Mono& m, const Matrix& onN, const Matrix& onT) {
    Vec out;
    for (std::size_t r = 0; r < J.size(); ++r) {
        Wedge rest = J;
        rest.erase(rest.begin() + static_cast<long>(r));
        int lead = r % 2 ? -1 : 1;  // move slot r to the front
        for (std::size_t l = 0; l < onT.rows(); ++l) {
            if (onT(l, J[r]).is_zero()) continue;
            auto [sgn, K] = wedge_with(rest, l);
            if (sgn == 0) continue;
            // from the front to its sorted position
            auto pos = static_cast<std::size_t>(std::find(K.begin(), K.end(), l) - K.begin());
            int to_front_sort = pos % 2 ? -1 : 1;
            out[{K, m}] += onT(l, J[r]) * Scalar(lead * to_front_sort);
        }
    }
    for (std::size_t d = 0; d < m.size(); ++d) {
        if (m[d] == 0) continue;
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (onN(c, d).is_zero()) continue;
            Mono t = m;
            t[d] -= 1;
            t[c] += 1;
            out[{J, t}] += onN(c, d) * Scalar(m[d]);
        }
    }
    return out;
}

// group element on (wedge) (x) Sym(N), multiplicatively
Vec transform(const Wedge& J, const Mono& m, const Matrix& onN, const Matrix& onT) {
    std::map<Wedge, Scalar> w{{Wedge{}, Scalar(1)}};
    for (std::size_t j : J) {
        // append the image of T_j on the right
        std::map<Wedge, Scalar> next;
        for (auto& [K, coef] : w)
            for (std::size_t l = 0; l < onT.rows(); ++l) {
                if (onT(l, j).is_zero()) continue;
                auto [sgn, K2] = wedge_with(K, l);
                if (sgn == 0) continue;
                next[K2] += coef * onT(l, j) * Scalar(sgn);
            }
        w = std::move(next);
    }
    std::map<Mono, Scalar> p{{Mono(m.size(), 0), Scalar(1)}};
    for (std::size_t d = 0; d < m.size(); ++d)
        for (int e = 0; e < m[d]; ++e) {
            std::map<Mono, Scalar> next;
            for (auto& [mono, coef] : p)
                for (std::size_t c = 0; c < m.size(); ++c) {
                    if (onN(c, d).is_zero()) continue;
                    Mono t = mono;
                    t[c] += 1;
                    next[t] += coef * onN(c, d);
                }
            p = std::move(next);
        }
    Vec out;
    for (auto& [K, a] : w)
        for (auto& [mono, b] : p)
            if (!(a * b).is_zero()) out[{K, mono}] += a * b;
    return out;
}

std::size_t invariant_dim(const Model& M, const Setting& s, const Key& md, std::size_t wedge, std::size_t max_monomials) {
    std::size_t rt = s.rt();
    // wedges of the requested size with their z-weights
    std::vector<Wedge> wedges;
    std::function<void(std::size_t, Wedge&)> pick = [&](std::size_t from, Wedge& cur) {
        if (cur.size() == wedge) {
            wedges.push_back(cur);
            return;
        }
        for (std::size_t l = from; l < M.tb.size(); ++l) {
            cur.push_back(l);
            pick(l + 1, cur);
            cur.pop_back();
        }
    };
    Wedge tmp;
    pick(0, tmp);

    std::vector<std::pair<Wedge, Mono>> basis;
    Key target = md;
    target[0] -= 2 * static_cast<int>(wedge);
    target[1] -= 2 * static_cast<int>(wedge);
    if (target[0] < 0 || target[1] < 0) return 0;
    for (auto& J : wedges) {
        std::vector<int> zJ(M.rz, 0);
        for (auto l : J)
            for (std::size_t a = 0; a < M.rz; ++a) zJ[a] += M.tb_z[l][a];
        Mono cur(M.n, 0);
        Key acc(2 + M.rz + rt, 0);
        std::function<void(std::size_t)> dfs = [&](std::size_t v) {
            if (v == M.n) {
                if (acc[0] != target[0] || acc[1] != target[1]) return;
                for (std::size_t a = 0; a < M.rz; ++a)
                    if (acc[2 + a] + zJ[a] != 0) return;
                for (std::size_t a = 0; a < rt; ++a)
                    if (acc[2 + M.rz + a] != target[2 + a]) return;
                basis.emplace_back(J, cur);
                if (basis.size() > max_monomials) throw Error(ErrorCode::TooLarge, "monomial space exceeds the limit");
                return;
            }
            dfs(v + 1);
            int added = 0;
            while (true) {
                for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += M.weight[v][c];
                ++cur[v];
                ++added;
                if (acc[0] > target[0] || acc[1] > target[1]) break;
                dfs(v + 1);
            }
            for (std::size_t c = 0; c < acc.size(); ++c) acc[c] -= added * M.weight[v][c];
            cur[v] = 0;
        };
        dfs(0);
    }
    if (basis.empty()) return 0;

    std::map<std::pair<std::size_t, std::pair<Wedge, Mono>>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
    auto add = [&](std::size_t op, std::size_t col, const Vec& v) {
        for (auto& [key, coef] : v) {
            if (coef.is_zero()) continue;
            auto [it, fresh] = row_of.emplace(std::make_pair(op, key), rows.size());
            if (fresh) rows.emplace_back();
            rows[it->second].emplace_back(col, coef);
        }
    };
    for (std::size_t col = 0; col < basis.size(); ++col) {
        auto& [J, m] = basis[col];
        for (std::size_t o = 0; o < M.lie.size(); ++o) add(o, col, derive(J, m, M.lie[o].first, M.lie[o].second));
        for (std::size_t o = 0; o < M.finite.size(); ++o) {
            Vec v = transform(J, m, M.finite[o].first, M.finite[o].second);
            v[{J, m}] -= Scalar(1);
            add(M.lie.size() + o, col, v);
        }
    }
    if (rows.empty()) return basis.size();
    Matrix A(rows.size(), basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto& [c, v] : rows[r]) A(r, c) += v;
    return basis.size() - exactalg::rank(A);
}

void check_multidegree(const Setting& s, const Key& md) {
    check_size(s);
    group_for(s);
    if (md.size() != 2 + s.rt()) throw Error(ErrorCode::ShapeMismatch, "multidegree is (dq1, dq2, t...)");
}

}  // namespace

std::size_t brute_force_invariant_dim(const Setting& s, const Key& md, std::size_t max_monomials) {
    check_multidegree(s, md);
    if (s.k == 0) return md == Key(md.size(), 0) ? 1 : 0;
    return invariant_dim(Model(s), s, md, 0, max_monomials);
}

long long brute_force_koszul_invariant(const Setting& s, const Key& md, std::size_t max_monomials) {
    check_multidegree(s, md);
    if (s.k == 0) return md == Key(md.size(), 0) ? 1 : 0;
    Model M(s);
    long long total = 0;
    for (std::size_t i = 0; i <= M.tb.size(); ++i) {
        long long d = static_cast<long long>(invariant_dim(M, s, md, i, max_monomials));
        total += i % 2 ? -d : d;
    }
    return total;
}

// ---------- generating function ----------

mpq_class instanton_number(Flavor flavor, std::size_t N, std::size_t k) {
    mpq_class n(static_cast<long>(k));
    if (flavor == Flavor::SOData) n /= (N == 3 ? 4 : 2);
    n.canonicalize();
    return n;
}

std::vector<NekrasovTerm> nekrasov_Z(Flavor flavor, std::size_t N, std::size_t k_max, int order) {
    std::vector<NekrasovTerm> out;
    for (std::size_t k = 0; k <= k_max; ++k) {
        if (flavor == Flavor::SOData && k % 2) continue;
        Setting s{flavor, N, k};
        out.push_back({k, instanton_number(flavor, N, k), invariant_part(s, weyl_data(s), order)});
    }
    return out;
}

nlohmann::json to_json(const std::vector<NekrasovTerm>& terms, Flavor flavor, std::size_t N) {
    nlohmann::json ts = nlohmann::json::array();
    for (auto& t : terms) {
        Setting s{flavor, N, t.k};
        ts.push_back({{"k", t.k},
                      {"instanton_number", t.instanton_number.get_str()},
                      {"group", group_name(group_for(s))},
                      {"series", t.series.to_json()}});
    }
    return {{"flavor", forms::flavor_name(flavor)}, {"N", N}, {"terms", ts}};
}

}  // namespace adhm::partition
