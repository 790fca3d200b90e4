#include "adhm/ideals.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace adhm::ideals {

using exactalg::Matrix;
using exactalg::Scalar;

namespace {

const Order kDrl{};

bool term_before(const Term& a, const Term& b) { return kDrl.compare(a.m, b.m) > 0; }

}  // namespace

Polynomial::Polynomial(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    for (auto& t : terms) {
        if (!t_.empty() && t_.back().m == t.m)
            t_.back().c += t.c;
        else
            t_.push_back(t);
        if (sgn(t_.back().c) == 0) t_.pop_back();
    }
}

Polynomial Polynomial::constant(const mpq_class& c) { return Polynomial({{Monomial{}, c}}); }
Polynomial Polynomial::variable(std::size_t v) { return Polynomial({{Monomial::var(v), 1}}); }

std::uint32_t Polynomial::degree() const { return t_.empty() ? 0 : t_.front().m.deg; }

namespace {

std::vector<int> multidegree(const Monomial& m, const std::vector<std::vector<int>>& w) {
    std::vector<int> d(w.empty() ? 0 : w[0].size(), 0);
    for (std::size_t v = 0; v < w.size(); ++v)
        for (std::size_t c = 0; c < d.size(); ++c) d[c] += m.e[v] * w[v][c];
    return d;
}

}  // namespace

bool Polynomial::is_homogeneous(const std::vector<std::vector<int>>& weights) const {
    for (auto& t : t_)
        if (multidegree(t.m, weights) != multidegree(t_.front().m, weights)) return false;
    return true;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t n = 0; n < t_.size(); ++n) {
        const auto& t = t_[n];
        mpq_class c = t.c;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        s += n ? (neg ? " - " : " + ") : (neg ? "-" : "");
        std::string mono;
        for (std::size_t v = 0; v < kMaxVars; ++v) {
            if (!t.m.e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += v < vars.size() ? vars[v] : "x" + std::to_string(v);
            if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
        }
        if (mono.empty())
            s += c.get_str();
        else if (c == 1)
            s += mono;
        else
            s += c.get_str() + "*" + mono;
    }
    return s;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Term> t = a.t_;
    t.insert(t.end(), b.t_.begin(), b.t_.end());
    return Polynomial(t);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + mpq_class(-1) * b; }

Polynomial operator*(const mpq_class& c, const Polynomial& a) {
    if (sgn(c) == 0) return {};
    Polynomial out = a;
    for (auto& t : out.t_) t.c *= c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Term> t;
    t.reserve(a.t_.size() * b.t_.size());
    for (auto& x : a.t_)
        for (auto& y : b.t_) t.push_back({x.m * y.m, x.c * y.c});
    return Polynomial(t);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t n = 0; n < a.t_.size(); ++n)
        if (!(a.t_[n].m == b.t_[n].m) || a.t_[n].c != b.t_[n].c) return false;
    return true;
}

void Ideal::validate() const {
    if (vars.size() > kMaxVars) throw Error(ErrorCode::UnsupportedSize, "at most 32 variables");
    std::uint32_t allowed = vars.size() == 32 ? ~0u : (1u << vars.size()) - 1;
    for (auto& g : gens)
        for (auto& t : g.terms())
            if (t.m.mask & ~allowed) throw Error(ErrorCode::InvalidArgument, "generator uses an undeclared variable");
    if (!weights.empty() && weights.size() != vars.size())
        throw Error(ErrorCode::ShapeMismatch, "one weight vector per variable");
}

int krull_dimension(const GroebnerBasis& G) {
    if (G.is_unit()) return -1;
    std::size_t n = G.vars.size();
    std::vector<std::uint32_t> masks;
    for (auto& m : G.leads()) masks.push_back(m.mask);
    std::size_t best = 0;
    // largest set of variables containing no leading monomial's support
    std::function<void(std::size_t, std::uint32_t, std::size_t)> rec = [&](std::size_t v, std::uint32_t S, std::size_t size) {
        if (size + (n - v) <= best) return;
        if (v == n) {
            best = size;
            return;
        }
        std::uint32_t S2 = S | (1u << v);
        bool ok = true;
        for (auto m : masks)
            if ((m >> v & 1u) && (m & ~S2) == 0) {
                ok = false;
                break;
            }
        if (ok) rec(v + 1, S2, size + 1);
        rec(v + 1, S, size);
    };
    rec(0, 0, 0);
    return static_cast<int>(best);
}

namespace {

std::size_t nonzero_gens(const Ideal& I) {
    return static_cast<std::size_t>(std::count_if(I.gens.begin(), I.gens.end(), [](const Polynomial& p) { return !p.is_zero(); }));
}

}  // namespace

bool is_complete_intersection(const Ideal& I, const GroebnerOptions& opt) {
    GroebnerOptions o = opt;
    o.order = Order{};
    auto G = groebner(I, o);
    int d = krull_dimension(G);
    if (d < 0) return false;
    return I.nvars() - static_cast<std::size_t>(d) == nonzero_gens(I);
}

std::vector<std::vector<Polynomial>> jacobian(const Ideal& I) {
    std::vector<std::vector<Polynomial>> J;
    for (auto& g : I.gens) {
        std::vector<Polynomial> row;
        for (std::size_t v = 0; v < I.nvars(); ++v) {
            std::vector<Term> t;
            for (auto& x : g.terms())
                if (x.m.e[v]) {
                    Monomial m = x.m;
                    --m.e[v];
                    m.recompute();
                    t.push_back({m, x.c * x.m.e[v]});
                }
            row.emplace_back(t);
        }
        J.push_back(row);
    }
    return J;
}

namespace {

Polynomial laplace_det(const std::vector<std::vector<Polynomial>>& m, const std::vector<std::size_t>& rows,
                       std::vector<std::size_t> cols) {
    if (rows.empty()) return Polynomial::constant(1);
    std::size_t r0 = rows[0];
    std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    Polynomial det;
    for (std::size_t n = 0; n < cols.size(); ++n) {
        const Polynomial& entry = m[r0][cols[n]];
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub = cols;
        sub.erase(sub.begin() + static_cast<long>(n));
        Polynomial term = entry * laplace_det(m, rest, sub);
        det = n % 2 ? det - term : det + term;
    }
    return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& m, std::size_t size) {
    std::size_t nr = m.size(), nc = nr ? m[0].size() : 0;
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(nr, size, 0, cur, rs);
    subsets(nc, size, 0, cur, cs);
    std::vector<Polynomial> out;
    for (auto& r : rs)
        for (auto& c : cs) {
            Polynomial d = laplace_det(m, r, c);
            if (!d.is_zero()) out.push_back(d);
        }
    return out;
}

bool nonreduced_ci_test(const Ideal& I, const GroebnerOptions& opt) {
    GroebnerOptions o = opt;
    o.order = Order{};
    auto G = groebner(I, o);
    int d = krull_dimension(G);
    std::size_t c = nonzero_gens(I);
    if (d < 0 || I.nvars() - static_cast<std::size_t>(d) != c)
        throw Error(ErrorCode::NotCI, "ideal '" + I.label + "' is not a complete intersection");
    Ideal sing = I;
    sing.gens.clear();
    for (auto& g : I.gens)
        if (!g.is_zero()) sing.gens.push_back(g);
    Ideal nz = sing;
    for (auto& p : minors(jacobian(nz), c)) sing.gens.push_back(p);
    if (sing.gens.size() == nz.gens.size() && c > 0) return true;  // every minor vanishes identically
    return krull_dimension(groebner(sing, o)) == d;
}

Ideal elimination(const Ideal& I, const std::vector<std::size_t>& keep, const GroebnerOptions& opt) {
    I.validate();
    std::vector<bool> kept(I.nvars(), false);
    for (auto v : keep) {
        if (v >= I.nvars()) throw Error(ErrorCode::InvalidArgument, "keep variable out of range");
        kept[v] = true;
    }
    // new position of each old variable: eliminated ones first
    std::vector<std::size_t> perm(I.nvars());
    std::size_t pos = 0;
    for (std::size_t v = 0; v < I.nvars(); ++v)
        if (!kept[v]) perm[v] = pos++;
    std::size_t nelim = pos;
    std::vector<std::size_t> kept_order;
    for (std::size_t v = 0; v < I.nvars(); ++v)
        if (kept[v]) {
            perm[v] = pos++;
            kept_order.push_back(v);
        }
    auto permute = [&](const Polynomial& p, const std::vector<std::size_t>& map) {
        std::vector<Term> t;
        for (auto& x : p.terms()) {
            Monomial m;
            for (std::size_t v = 0; v < kMaxVars; ++v)
                if (x.m.e[v]) m.e[map[v]] = x.m.e[v];
            m.recompute();
            t.push_back({m, x.c});
        }
        return Polynomial(t);
    };
    Ideal J;
    J.vars.resize(I.nvars());
    for (std::size_t v = 0; v < I.nvars(); ++v) J.vars[perm[v]] = I.vars[v];
    for (auto& g : I.gens) J.gens.push_back(permute(g, perm));
    GroebnerOptions o = opt;
    o.order = Order{Order::Block, nelim};
    auto G = groebner(J, o);

    Ideal out;
    out.label = "elim(" + I.label + ")";
    std::vector<std::size_t> back(kMaxVars, 0);
    for (std::size_t n = 0; n < kept_order.size(); ++n) {
        out.vars.push_back(I.vars[kept_order[n]]);
        back[nelim + n] = n;
    }
    std::uint32_t elim_mask = nelim >= 32 ? ~0u : (1u << nelim) - 1;
    for (auto& g : G.basis) {
        bool pure = true;
        for (auto& t : g.terms())
            if (t.m.mask & elim_mask) pure = false;
        if (pure) out.gens.push_back(permute(g, back));
    }
    if (!I.weights.empty())
        for (auto v : kept_order) out.weights.push_back(I.weights[v]);
    return out;
}

bool radical_membership(const Polynomial& f, const Ideal& I, const GroebnerOptions& opt) {
    Ideal J = I;
    std::size_t t = I.nvars();
    J.vars.push_back("_t");
    J.weights.clear();
    J.gens.push_back(Polynomial::constant(1) - Polynomial::variable(t) * f);
    GroebnerOptions o = opt;
    o.order = Order{};
    return groebner(J, o).is_unit();
}

// ---------- ideal builders ----------

namespace {

using PMat = std::vector<std::vector<Polynomial>>;

PMat pzero(std::size_t r, std::size_t c) { return PMat(r, std::vector<Polynomial>(c)); }

mpq_class rational(const Scalar& s) {
    if (!s.is_real()) throw Error(ErrorCode::Internal, "expected a rational coordinate matrix");
    return s.re();
}

PMat pconst(const Matrix& m) {
    PMat out = pzero(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) out[r][c] = Polynomial::constant(rational(m(r, c)));
    return out;
}

PMat pmul(const PMat& a, const PMat& b) {
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    PMat out = pzero(n, m);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            std::vector<Term> t;
            for (std::size_t s = 0; s < inner; ++s) {
                if (a[r][s].is_zero() || b[s][c].is_zero()) continue;
                auto p = a[r][s] * b[s][c];
                t.insert(t.end(), p.terms().begin(), p.terms().end());
            }
            out[r][c] = Polynomial(t);
        }
    return out;
}

PMat padd(const PMat& a, const PMat& b, int sign = 1) {
    PMat out = a;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c)
            out[r][c] = sign > 0 ? a[r][c] + b[r][c] : a[r][c] - b[r][c];
    return out;
}

PMat ptranspose(const PMat& a) {
    PMat out = pzero(a.empty() ? 0 : a[0].size(), a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c) out[c][r] = a[r][c];
    return out;
}

struct Builder {
    forms::FramedSetting s;
    Ideal I;
    std::vector<std::vector<int>> wv, ww;  // torus weights if requested
    bool weighted = false;
    std::size_t rz = 0, rt = 0;

    std::vector<int> weight(int dq1, int dq2, const std::vector<int>& z, const std::vector<int>& t) const {
        std::vector<int> w{dq1, dq2};
        w.insert(w.end(), z.begin(), z.end());
        w.insert(w.end(), t.begin(), t.end());
        return w;
    }

    void add_var(const std::string& name, std::vector<int> w) {
        I.vars.push_back(name);
        if (weighted) I.weights.push_back(std::move(w));
        if (I.vars.size() > kMaxVars) throw Error(ErrorCode::UnsupportedSize, "more than 32 variables");
    }

    // coordinates along a basis of p (or its trace-free part); returns the matrix of linear forms
    PMat add_p(const std::string& prefix, int dq1, int dq2, bool traceless) {
        auto pb = forms::p_basis(s.V);
        auto pidx = forms::p_index(s.V);
        std::vector<Matrix> basis;
        std::vector<std::vector<int>> wts;
        std::vector<std::string> names;
        auto p_weight = [&](std::size_t n) {
            std::vector<int> z(rz, 0);
            if (weighted)
                for (std::size_t c = 0; c < rz; ++c) z[c] = -(wv[pidx[n].a][c] + wv[pidx[n].b][c]);
            return z;
        };
        if (!traceless) {
            for (std::size_t n = 0; n < pb.size(); ++n) {
                basis.push_back(pb[n]);
                wts.push_back(p_weight(n));
                names.push_back(prefix + "_" + std::to_string(pidx[n].a + 1) + std::to_string(pidx[n].b + 1));
            }
        } else {
            Matrix tr(1, pb.size());
            for (std::size_t n = 0; n < pb.size(); ++n) tr(0, n) = pb[n].trace();
            auto ker = exactalg::rank_kernel(tr).kernel.basis();
            for (std::size_t u = 0; u < ker.cols(); ++u) {
                Matrix m(s.k(), s.k());
                std::size_t first = pb.size();
                for (std::size_t n = 0; n < pb.size(); ++n)
                    if (!ker(n, u).is_zero()) {
                        m += pb[n] * ker(n, u);
                        first = std::min(first, n);
                    }
                basis.push_back(m);
                wts.push_back(p_weight(first));
                names.push_back(prefix + "_p" + std::to_string(u + 1));
            }
        }
        std::size_t off = I.vars.size();
        for (std::size_t n = 0; n < basis.size(); ++n) add_var(names[n], weight(dq1, dq2, wts[n], std::vector<int>(rt, 0)));
        PMat out = pzero(s.k(), s.k());
        for (std::size_t n = 0; n < basis.size(); ++n) {
            PMat m = pconst(basis[n]);
            for (auto& row : m)
                for (auto& e : row)
                    if (!e.is_zero()) e = e * Polynomial::variable(off + n);
            out = padd(out, m);
        }
        return out;
    }

    PMat add_hom() {
        std::size_t off = I.vars.size();
        PMat out = pzero(s.k(), s.N());
        for (std::size_t r = 0; r < s.k(); ++r)
            for (std::size_t c = 0; c < s.N(); ++c) {
                std::vector<int> z(rz, 0), t(rt, 0);
                if (weighted) {
                    z = wv[r];
                    for (std::size_t j = 0; j < rt; ++j) t[j] = -ww[c][j];
                }
                add_var("i_" + std::to_string(r + 1) + std::to_string(c + 1), weight(1, 1, z, t));
                out[r][c] = Polynomial::variable(off + r * s.N() + c);
            }
        return out;
    }

    PMat adjoint(const PMat& i) const {
        // i* = G_W^-1 i^T G_V
        return pmul(pmul(pconst(exactalg::inverse(s.W.gram)), ptranspose(i)), pconst(s.V.gram));
    }

    static std::vector<Polynomial> coords(const PMat& X, const forms::BilinearSpace& V) {
        PMat gx = pmul(pconst(V.gram), X);
        std::vector<Polynomial> out;
        for (auto [a, b] : forms::t_index(V)) out.push_back(gx[a][b]);
        return out;
    }
};

// weight of a polynomial's leading term (used for tag variables)
std::vector<int> lead_weight(const Polynomial& p, const std::vector<std::vector<int>>& w) {
    return multidegree(p.terms().front().m, w);
}

}  // namespace

Ideal build_ideal(const std::string& kind, std::size_t N, std::size_t k, forms::Flavor flavor, const BuildOptions& opt) {
    static const std::vector<std::string> kinds = {"mu", "mu_traceless", "rho", "pi_image_tags", "commutator", "product"};
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
        throw Error(ErrorCode::InvalidArgument, "unknown ideal kind '" + kind + "'");
    if (k > 6 || N > 8) throw Error(ErrorCode::UnsupportedSize, "ideal builders support k <= 6, N <= 8");
    Builder b;
    b.s = forms::FramedSetting::make(flavor, N, k, opt.style);
    b.weighted = opt.style == forms::GramStyle::Weight;
    b.rz = k / 2;
    b.rt = N / 2;
    if (b.weighted) {
        b.wv = forms::torus_weights(b.s.V);
        b.ww = forms::torus_weights(b.s.W);
    }
    Ideal& I = b.I;
    I.label = kind + "(" + forms::flavor_name(flavor) + ",N=" + std::to_string(N) + ",k=" + std::to_string(k) + ")";
    const auto& V = b.s.V;

    if (kind == "rho" || kind == "pi_image_tags") {
        PMat i = b.add_hom();
        PMat ist = b.adjoint(i);
        I.gens = Builder::coords(pmul(i, ist), V);
        if (kind == "pi_image_tags") {
            auto pis = Builder::coords(pmul(ist, i), b.s.W);
            auto tidx = forms::t_index(b.s.W);
            for (std::size_t n = 0; n < pis.size(); ++n) {
                std::size_t v = I.vars.size();
                std::vector<int> w;
                if (b.weighted) w = pis[n].is_zero() ? std::vector<int>(2 + b.rz + b.rt, 0) : lead_weight(pis[n], I.weights);
                b.add_var("y_" + std::to_string(tidx[n].a + 1) + std::to_string(tidx[n].b + 1), w);
                I.gens.push_back(Polynomial::variable(v) - pis[n]);
            }
        }
        return I;
    }

    bool traceless = kind == "mu_traceless" || ((kind == "commutator" || kind == "product") && opt.traceless);
    PMat B1 = b.add_p("B1", 2, 0, traceless);
    PMat B2 = b.add_p("B2", 0, 2, traceless);
    PMat comm = padd(pmul(B1, B2), pmul(B2, B1), -1);
    if (kind == "commutator") {
        I.gens = Builder::coords(comm, V);
        return I;
    }
    PMat i = b.add_hom();
    PMat iis = pmul(i, b.adjoint(i));
    if (kind == "product") {
        I.gens = Builder::coords(comm, V);
        auto r = Builder::coords(iis, V);
        I.gens.insert(I.gens.end(), r.begin(), r.end());
        return I;
    }
    I.gens = Builder::coords(padd(comm, iis), V);
    return I;
}

// ---------- Hilbert counting ----------

MultigradedHilbert multigraded_hilbert(const GroebnerBasis& G, const std::vector<std::vector<int>>& weights, int order) {
    std::size_t n = G.vars.size();
    if (weights.size() != n) throw Error(ErrorCode::ShapeMismatch, "one weight vector per variable");
    for (auto& w : weights)
        if (w.size() < 2 || w[0] + w[1] <= 0)
            throw Error(ErrorCode::InvalidArgument, "every variable needs positive total q-degree");
    MultigradedHilbert H;
    H.order = order;
    if (G.is_unit()) return H;
    auto leads = G.leads();
    std::size_t width = weights.empty() ? 2 : weights[0].size();
    std::vector<int> deg(width, 0);
    Monomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int qdeg) {
        ++H.counts[deg];
        for (std::size_t u = v; u < n; ++u) {
            int q = weights[u][0] + weights[u][1];
            if (qdeg + q > order) continue;
            ++cur.e[u];
            cur.recompute();
            bool standard = true;
            for (auto& l : leads)
                if (l.divides(cur)) {
                    standard = false;
                    break;
                }
            if (standard) {
                for (std::size_t c = 0; c < width; ++c) deg[c] += weights[u][c];
                rec(u, qdeg + q);
                for (std::size_t c = 0; c < width; ++c) deg[c] -= weights[u][c];
            }
            --cur.e[u];
            cur.recompute();
        }
    };
    rec(0, 0);
    return H;
}

MultigradedHilbert multigraded_hilbert(const Ideal& I, const std::vector<std::vector<int>>& weights, int order,
                                       const GroebnerOptions& opt) {
    for (auto& g : I.gens)
        if (!g.is_homogeneous(weights))
            throw Error(ErrorCode::InhomogeneousGenerators, "generator " + g.str(I.vars) + " is not homogeneous");
    GroebnerOptions o = opt;
    o.order = Order{};
    return multigraded_hilbert(groebner(I, o), weights, order);
}

// ---------- invariant images ----------

ImageTuple phi(const forms::ADHMDatum& x) {
    if (x.setting.N() != 3 || x.setting.flavor != forms::Flavor::SOData)
        throw Error(ErrorCode::UnsupportedSize, "the invariant map is defined for SO-data with N = 3");
    Matrix Y = forms::pi(x.i, x.setting);
    return {(x.B1 * x.B1).trace(), Scalar::I() * (x.B1 * x.B2).trace(), (x.B2 * x.B2).trace(), Y(0, 1), Y(0, 2), Y(1, 2)};
}

std::vector<ImageTuple> sample_orbit_image(const std::string& fixture, std::size_t n_samples, std::uint64_t seed) {
    forms::ADHMDatum base = fixture == "zero" ? forms::ADHMDatum::zero(fixtures::setting_n3k4())
                                              : forms::datum_from_json(fixtures::named(fixture));
    std::mt19937_64 rng(seed);
    std::vector<ImageTuple> out;
    for (std::size_t n = 0; n < n_samples; ++n) {
        Matrix g = forms::random_isometry(base.setting.V, rng);
        Matrix h = forms::random_isometry(base.setting.W, rng);
        // upper * lower * upper unipotents generate SL(2) over the integers
        long s = forms::small_int(rng), t = forms::small_int(rng), u = forms::small_int(rng);
        Scalar a(1 + s * t), b(s + u + s * t * u), c(t), d(1 + t * u);
        out.push_back(phi(forms::act_sl2(a, b, c, d, forms::act(g, h, base))));
    }
    return out;
}

// ---------- JSON ----------

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& t : p.terms()) {
        std::vector<int> e;
        std::size_t last = 0;
        for (std::size_t v = 0; v < kMaxVars; ++v)
            if (t.m.e[v]) last = v + 1;
        for (std::size_t v = 0; v < last; ++v) e.push_back(t.m.e[v]);
        terms.push_back({{"exps", e}, {"coeff", t.c.get_str()}});
    }
    return {{"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t nvars) {
    try {
        std::vector<Term> terms;
        for (auto& t : j.at("terms")) {
            auto e = t.at("exps").get<std::vector<int>>();
            if (e.size() > nvars) throw Error(ErrorCode::Parse, "exponent vector longer than the variable list");
            Monomial m;
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] < 0 || e[v] > 0xffff) throw Error(ErrorCode::Parse, "exponent out of range");
                m.e[v] = static_cast<std::uint16_t>(e[v]);
            }
            m.recompute();
            mpq_class c;
            if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0 || sgn(c.get_den()) == 0)
                throw Error(ErrorCode::Parse, "bad coefficient");
            c.canonicalize();
            terms.push_back({m, c});
        }
        return Polynomial(terms);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

nlohmann::json to_json(const Ideal& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (auto& g : I.gens) gens.push_back(to_json(g));
    nlohmann::json j = {{"vars", I.vars}, {"gens", gens}};
    if (!I.label.empty()) j["label"] = I.label;
    if (!I.weights.empty()) j["weights"] = I.weights;
    return j;
}

Ideal ideal_from_json(const nlohmann::json& j) {
    try {
        Ideal I;
        I.vars = j.at("vars").get<std::vector<std::string>>();
        if (I.vars.size() > kMaxVars) throw Error(ErrorCode::UnsupportedSize, "at most 32 variables");
        for (auto& g : j.at("gens")) I.gens.push_back(polynomial_from_json(g, I.vars.size()));
        I.label = j.value("label", std::string());
        if (j.contains("weights")) I.weights = j["weights"].get<std::vector<std::vector<int>>>();
        I.validate();
        return I;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

}  // namespace adhm::ideals
