// Buchberger's algorithm with the Gebauer-Moeller pair criteria, templated on the
// coefficient field (rationals or a prime field).

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "adhm/ideals.hpp"

namespace adhm::ideals {

Monomial Monomial::var(std::size_t v, unsigned power) {
    if (v >= kMaxVars) throw Error(ErrorCode::UnsupportedSize, "at most 32 variables");
    Monomial m;
    m.e[v] = static_cast<std::uint16_t>(power);
    m.recompute();
    return m;
}

void Monomial::recompute() {
    deg = 0;
    mask = 0;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        deg += e[v];
        if (e[v]) mask |= 1u << v;
    }
}

bool Monomial::divides(const Monomial& o) const {
    if (mask & ~o.mask) return false;
    if (deg > o.deg) return false;
    for (std::size_t v = 0; v < kMaxVars; ++v)
        if (e[v] > o.e[v]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        unsigned s = unsigned(e[v]) + o.e[v];
        if (s > 0xffff) throw Error(ErrorCode::TooLarge, "exponent overflow");
        m.e[v] = static_cast<std::uint16_t>(s);
    }
    m.deg = deg + o.deg;
    m.mask = mask | o.mask;
    return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial m;
    for (std::size_t v = 0; v < kMaxVars; ++v) m.e[v] = static_cast<std::uint16_t>(e[v] - o.e[v]);
    m.recompute();
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t v = 0; v < kMaxVars; ++v) m.e[v] = std::max(a.e[v], b.e[v]);
    m.recompute();
    return m;
}

namespace {

int revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t v = hi; v-- > lo;)
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
    return 0;
}

unsigned partial_deg(const Monomial& a, std::size_t lo, std::size_t hi) {
    unsigned d = 0;
    for (std::size_t v = lo; v < hi; ++v) d += a.e[v];
    return d;
}

}  // namespace

int Order::compare(const Monomial& a, const Monomial& b) const {
    if (kind == DegRevLex) {
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        return revlex(a, b, 0, kMaxVars);
    }
    unsigned da = partial_deg(a, 0, nblock), db = partial_deg(b, 0, nblock);
    if (da != db) return da < db ? -1 : 1;
    if (int c = revlex(a, b, 0, nblock)) return c;
    unsigned ra = a.deg - da, rb = b.deg - db;
    if (ra != rb) return ra < rb ? -1 : 1;
    return revlex(a, b, nblock, kMaxVars);
}

std::string FieldSpec::str() const { return prime ? "fp:" + std::to_string(prime) : "q"; }

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "q" || s == "Q") return {};
    if (s.rfind("fp:", 0) == 0) {
        char* end = nullptr;
        unsigned long p = std::strtoul(s.c_str() + 3, &end, 10);
        if (*end || p < 3 || p >= (1ul << 31))
            throw Error(ErrorCode::InvalidArgument, "field prime must be an odd prime below 2^31");
        for (unsigned long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
        return {static_cast<std::uint32_t>(p)};
    }
    throw Error(ErrorCode::InvalidArgument, "field must be q or fp:<prime>");
}

GroebnerOptions default_options() {
    GroebnerOptions o;
    if (const char* b = std::getenv("ADHM_LAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(b, &end, 10);
        if (end != b && !*end) o.budget = v;
    }
    return o;
}

namespace {

struct QQ {
    using Elem = mpq_class;
    Elem from(const mpq_class& q) const { return q; }
    mpq_class to_q(const Elem& a) const { return a; }
    static bool zero(const Elem& a) { return sgn(a) == 0; }
    Elem one() const { return 1; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem inv(const Elem& a) const { return 1 / a; }
    Elem neg(const Elem& a) const { return -a; }
};

struct FP {
    std::uint32_t p;
    using Elem = std::uint32_t;
    Elem reduce_z(const mpz_class& z) const {
        mpz_class r = z % p;
        if (r < 0) r += p;
        return static_cast<Elem>(r.get_ui());
    }
    Elem from(const mpq_class& q) const {
        Elem d = reduce_z(q.get_den());
        if (d == 0) throw Error(ErrorCode::InvalidArgument, "prime " + std::to_string(p) + " divides a denominator");
        return mul(reduce_z(q.get_num()), inv(d));
    }
    mpq_class to_q(const Elem& a) const { return mpq_class(a); }
    static bool zero(const Elem& a) { return a == 0; }
    Elem one() const { return 1; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % p); }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a ? p - a : 0; }
    Elem inv(Elem a) const {
        // a^(p-2)
        std::uint64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<Elem>(r);
    }
};

template <class F>
class Engine {
public:
    using E = typename F::Elem;
    struct T {
        Monomial m;
        E c;
    };
    using P = std::vector<T>;  // descending in ord

    F field;
    Order ord;
    std::uint64_t budget;
    std::uint64_t reductions = 0;

    Engine(F f, Order o, std::uint64_t b) : field(std::move(f)), ord(o), budget(b) {}

    P convert(const Polynomial& f) const {
        P out;
        for (auto& t : f.terms()) {
            E c = field.from(t.c);
            if (!F::zero(c)) out.push_back({t.m, c});
        }
        std::sort(out.begin(), out.end(), [&](const T& a, const T& b) { return ord.compare(a.m, b.m) > 0; });
        return out;
    }

    Polynomial back(const P& f) const {
        std::vector<Term> t;
        for (auto& x : f) t.push_back({x.m, field.to_q(x.c)});
        return Polynomial(t);
    }

    void make_monic(P& f) const {
        if (f.empty()) return;
        E inv = field.inv(f[0].c);
        for (auto& t : f) t.c = field.mul(t.c, inv);
    }

    // f[from..] - c * m * g
    P sub_mul(const P& f, std::size_t from, const E& c, const Monomial& m, const P& g) const {
        P out;
        out.reserve(f.size() - from + g.size());
        std::size_t a = from, b = 0;
        while (a < f.size() || b < g.size()) {
            if (b == g.size()) {
                out.push_back(f[a++]);
                continue;
            }
            Monomial gm = g[b].m * m;
            int cmp = a < f.size() ? ord.compare(f[a].m, gm) : -1;
            if (cmp > 0) {
                out.push_back(f[a++]);
            } else if (cmp < 0) {
                out.push_back({gm, field.neg(field.mul(c, g[b].c))});
                ++b;
            } else {
                E v = field.sub(f[a].c, field.mul(c, g[b].c));
                if (!F::zero(v)) out.push_back({gm, v});
                ++a;
                ++b;
            }
        }
        return out;
    }

    // full reduction by the monic polynomials in store[idx]
    P reduce(P f, const std::vector<P>& store, const std::vector<std::size_t>& idx) const {
        P rem;
        std::size_t pos = 0;
        while (pos < f.size()) {
            const T& lt = f[pos];
            const P* div = nullptr;
            for (auto i : idx)
                if (store[i][0].m.divides(lt.m)) {
                    div = &store[i];
                    break;
                }
            if (!div) {
                rem.push_back(lt);
                ++pos;
                continue;
            }
            f = sub_mul(f, pos, lt.c, lt.m / (*div)[0].m, *div);
            pos = 0;
        }
        return rem;
    }

    P spoly(const P& f, const P& g) const {
        Monomial l = Monomial::lcm(f[0].m, g[0].m);
        P a = sub_mul(P{}, 0, field.neg(field.one()), l / f[0].m, f);
        return sub_mul(a, 0, field.one(), l / g[0].m, g);
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    std::vector<P> run(const std::vector<Polynomial>& gens) {
        std::vector<P> store;
        std::vector<std::size_t> active;
        std::vector<Pair> pairs;

        auto update = [&](std::size_t h) {
            const Monomial& lh = store[h][0].m;
            std::vector<Pair> C, D;
            for (auto g : active) C.push_back({g, h, Monomial::lcm(store[g][0].m, lh)});
            while (!C.empty()) {
                Pair p = C.front();
                C.erase(C.begin());
                bool keep = store[p.i][0].m.coprime(lh);
                if (!keep) {
                    keep = true;
                    for (auto& q : C)
                        if (q.lcm.divides(p.lcm)) keep = false;
                    for (auto& q : D)
                        if (keep && q.lcm.divides(p.lcm)) keep = false;
                }
                if (keep) D.push_back(p);
            }
            std::vector<Pair> E;
            for (auto& p : D)
                if (!store[p.i][0].m.coprime(lh)) E.push_back(p);
            std::vector<Pair> B;
            for (auto& p : pairs) {
                bool drop = lh.divides(p.lcm) && !(Monomial::lcm(store[p.i][0].m, lh) == p.lcm) &&
                            !(Monomial::lcm(lh, store[p.j][0].m) == p.lcm);
                if (!drop) B.push_back(p);
            }
            for (auto& p : E) B.push_back(p);
            pairs = std::move(B);
            std::vector<std::size_t> na;
            for (auto g : active)
                if (!lh.divides(store[g][0].m)) na.push_back(g);
            na.push_back(h);
            active = std::move(na);
        };

        std::vector<P> input;
        for (auto& g : gens) {
            P c = convert(g);
            if (!c.empty()) input.push_back(std::move(c));
        }
        std::sort(input.begin(), input.end(), [&](const P& a, const P& b) { return ord.compare(a[0].m, b[0].m) < 0; });
        for (auto& f : input) {
            P r = reduce(f, store, active);
            if (r.empty()) continue;
            make_monic(r);
            if (r[0].m.deg == 0) return {P{{Monomial{}, field.one()}}};
            store.push_back(std::move(r));
            update(store.size() - 1);
        }

        while (!pairs.empty()) {
            // normal strategy: smallest lcm, ties by index
            std::size_t best = 0;
            for (std::size_t n = 1; n < pairs.size(); ++n) {
                int c = ord.compare(pairs[n].lcm, pairs[best].lcm);
                if (c < 0 || (c == 0 && std::make_pair(pairs[n].i, pairs[n].j) < std::make_pair(pairs[best].i, pairs[best].j)))
                    best = n;
            }
            Pair p = pairs[best];
            pairs.erase(pairs.begin() + static_cast<long>(best));
            if (++reductions > budget)
                throw Error(ErrorCode::BudgetExceeded,
                            "Groebner budget of " + std::to_string(budget) + " S-pair reductions exceeded");
            P r = reduce(spoly(store[p.i], store[p.j]), store, active);
            if (r.empty()) continue;
            make_monic(r);
            if (r[0].m.deg == 0) return {P{{Monomial{}, field.one()}}};
            store.push_back(std::move(r));
            update(store.size() - 1);
        }

        // minimal basis, then interreduce
        std::vector<P> g;
        for (auto i : active) g.push_back(store[i]);
        std::sort(g.begin(), g.end(), [&](const P& a, const P& b) { return ord.compare(a[0].m, b[0].m) < 0; });
        std::vector<P> out;
        for (std::size_t n = 0; n < g.size(); ++n) {
            std::vector<std::size_t> others;
            for (std::size_t m = 0; m < g.size(); ++m)
                if (m != n) others.push_back(m);
            P tail(g[n].begin() + 1, g[n].end());
            P red = reduce(tail, g, others);
            P full{g[n][0]};
            full.insert(full.end(), red.begin(), red.end());
            out.push_back(std::move(full));
        }
        return out;
    }
};

template <class F>
GroebnerBasis run_engine(const F& f, const Ideal& I, const GroebnerOptions& opt) {
    Engine<F> eng(f, opt.order, opt.budget);
    auto polys = eng.run(I.gens);
    GroebnerBasis G;
    G.vars = I.vars;
    G.field = opt.field;
    G.order = opt.order;
    G.reductions = eng.reductions;
    for (auto& p : polys) G.basis.push_back(eng.back(p));
    return G;
}

template <class F>
Polynomial nf_engine(const F& f, const Polynomial& p, const GroebnerBasis& G) {
    Engine<F> eng(f, G.order, 0);
    std::vector<typename Engine<F>::P> store;
    std::vector<std::size_t> idx;
    for (auto& g : G.basis) {
        store.push_back(eng.convert(g));
        idx.push_back(idx.size());
    }
    return eng.back(eng.reduce(eng.convert(p), store, idx));
}

}  // namespace

GroebnerBasis groebner(const Ideal& I, const GroebnerOptions& opt) {
    I.validate();
    if (opt.field.prime) return run_engine(FP{opt.field.prime}, I, opt);
    return run_engine(QQ{}, I, opt);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (G.field.prime) return nf_engine(FP{G.field.prime}, f, G);
    return nf_engine(QQ{}, f, G);
}

bool contains(const GroebnerBasis& G, const Polynomial& f) { return normal_form(f, G).is_zero(); }

bool GroebnerBasis::is_unit() const {
    return basis.size() == 1 && basis[0].terms().size() == 1 && basis[0].terms()[0].m.deg == 0;
}

std::vector<Monomial> GroebnerBasis::leads() const {
    std::vector<Monomial> out;
    for (auto& p : basis) {
        Monomial best = p.terms()[0].m;
        for (auto& t : p.terms())
            if (order.compare(t.m, best) > 0) best = t.m;
        out.push_back(best);
    }
    return out;
}

}  // namespace adhm::ideals
