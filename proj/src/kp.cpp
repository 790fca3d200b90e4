#include "adhm/kp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace adhm::kp {

Partition::Partition(std::vector<std::size_t> p) {
    for (auto x : p)
        if (x) parts.push_back(x);
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

std::size_t Partition::size() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t n = 0; n < parts.size(); ++n) s += (n ? "," : "") + std::to_string(parts[n]);
    return s + ")";
}

Partition transpose(const Partition& p) {
    std::vector<std::size_t> t(p.parts.empty() ? 0 : p.parts.front(), 0);
    for (auto x : p.parts)
        for (std::size_t c = 0; c < x; ++c) ++t[c];
    return Partition(t);
}

bool dominance_leq(const Partition& eta, const Partition& sigma) {
    if (eta.size() != sigma.size())
        throw Error(ErrorCode::SizeMismatch, "dominance needs partitions of equal size");
    std::size_t se = 0, ss = 0;
    for (std::size_t n = 0; n < std::max(eta.length(), sigma.length()); ++n) {
        se += n < eta.length() ? eta.parts[n] : 0;
        ss += n < sigma.length() ? sigma.parts[n] : 0;
        if (se > ss) return false;
    }
    return true;
}

namespace {

std::map<std::size_t, std::size_t> multiplicities(const Partition& p) {
    std::map<std::size_t, std::size_t> m;
    for (auto x : p.parts) ++m[x];
    return m;
}

// 2 * dim, before halving; sign_n = +1 for sp, -1 for o
long twice_dim(const Partition& p, long sign) {
    long n = static_cast<long>(p.size());
    long sq = 0, odd = 0;
    for (auto x : transpose(p).parts) sq += static_cast<long>(x * x);
    for (auto x : p.parts) odd += x % 2;
    return n * n + sign * n - sq - sign * odd;
}

}  // namespace

bool is_valid_symplectic(const Partition& p) {
    for (auto [part, mult] : multiplicities(p))
        if (part % 2 == 1 && mult % 2 == 1) return false;
    return true;
}

bool is_valid_orthogonal(const Partition& p) {
    for (auto [part, mult] : multiplicities(p))
        if (part % 2 == 0 && mult % 2 == 1) return false;
    return true;
}

std::size_t dim_sp_orbit(const Partition& p) {
    if (!is_valid_symplectic(p)) throw Error(ErrorCode::InvalidPartition, p.str() + " is not a symplectic Jordan type");
    return static_cast<std::size_t>(twice_dim(p, 1) / 2);
}

std::size_t dim_o_orbit(const Partition& p) {
    if (!is_valid_orthogonal(p)) throw Error(ErrorCode::InvalidPartition, p.str() + " is not an orthogonal Jordan type");
    return static_cast<std::size_t>(twice_dim(p, -1) / 2);
}

std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::size_t Row::count(char letter) const {
    return letter == start ? (len + 1) / 2 : len / 2;
}

std::string Row::word() const {
    std::string w;
    char other = start == 'a' ? 'b' : 'a';
    for (std::size_t p = 0; p < len; ++p) w += p % 2 ? other : start;
    return w;
}

namespace {

bool row_before(const Row& x, const Row& y) {
    if (x.len != y.len) return x.len > y.len;
    return x.start < y.start;
}

char other_letter(char c) { return c == 'a' ? 'b' : 'a'; }

}  // namespace

AbDiagram::AbDiagram(std::vector<Row> r) : rows(std::move(r)) {
    for (auto& row : rows)
        if ((row.start != 'a' && row.start != 'b') || row.len == 0)
            throw Error(ErrorCode::InvalidArgument, "rows need start letter a or b and positive length");
    std::stable_sort(rows.begin(), rows.end(), row_before);
}

std::size_t AbDiagram::count(char letter) const {
    std::size_t n = 0;
    for (auto& r : rows) n += r.count(letter);
    return n;
}

std::string AbDiagram::text() const {
    std::string s;
    for (std::size_t n = 0; n < rows.size(); ++n) s += (n ? "\n" : "") + rows[n].word();
    return s;
}

AbDiagram AbDiagram::parse(const std::string& text) {
    std::vector<Row> rows;
    std::string tok;
    std::istringstream in(text);
    auto flush = [&] {
        if (tok.empty()) return;
        for (std::size_t p = 0; p < tok.size(); ++p) {
            char want = p % 2 ? other_letter(tok[0]) : tok[0];
            if ((tok[p] != 'a' && tok[p] != 'b') || tok[p] != want)
                throw Error(ErrorCode::Parse, "row '" + tok + "' is not an alternating ab word");
        }
        rows.push_back({tok[0], tok.size()});
        tok.clear();
    };
    for (char c : text) {
        if (c == '\n' || c == ',' || c == ' ' || c == '\t' || c == '\r')
            flush();
        else
            tok += c;
    }
    flush();
    return AbDiagram(rows);
}

nlohmann::json to_json(const AbDiagram& d) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& r : d.rows) rows.push_back({{"start", std::string(1, r.start)}, {"len", r.len}});
    return {{"rows", rows}};
}

AbDiagram diagram_from_json(const nlohmann::json& j) {
    try {
        std::vector<Row> rows;
        for (auto& r : j.at("rows")) {
            std::string s = r.at("start").get<std::string>();
            if (s.size() != 1) throw Error(ErrorCode::Parse, "row start must be a single letter");
            rows.push_back({s[0], r.at("len").get<std::size_t>()});
        }
        return AbDiagram(rows);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

std::size_t delta_ab(const AbDiagram& d) {
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> odd;
    for (auto& r : d.rows)
        if (r.len % 2) (r.start == 'a' ? odd[r.len].first : odd[r.len].second)++;
    std::size_t s = 0;
    for (auto& [len, c] : odd) s += c.first * c.second;
    return s;
}

bool is_valid_spo_diagram(const AbDiagram& d, Flavor f) {
    // o: letter of the orthogonal space, s: letter of the symplectic space
    char s = f == Flavor::SOData ? 'b' : 'a';
    std::map<std::pair<char, std::size_t>, std::size_t> mult;
    for (auto& r : d.rows) ++mult[{r.start, r.len}];
    for (auto& [key, m] : mult) {
        auto [start, len] = key;
        if (len % 2 == 0) {
            auto it = mult.find({other_letter(start), len});
            if (it == mult.end() || it->second != m) return false;
            continue;
        }
        std::size_t half = (len - 1) / 2;
        // odd rows starting on the orthogonal side are free when half is even,
        // those starting on the symplectic side when half is odd; the rest pair up
        bool free_row = start == s ? half % 2 == 1 : half % 2 == 0;
        if (!free_row && m % 2) return false;
    }
    return true;
}

Partition strip(const AbDiagram& d, char letter) {
    std::vector<std::size_t> p;
    for (auto& r : d.rows) p.push_back(r.count(other_letter(letter)));
    return Partition(p);
}

std::size_t dim_spo_orbit(const AbDiagram& d, Flavor f) {
    if (!is_valid_spo_diagram(d, f)) throw Error(ErrorCode::InvalidDiagram, "not a valid ab-diagram:\n" + d.text());
    char s = f == Flavor::SOData ? 'b' : 'a';
    std::size_t sp = dim_sp_orbit(strip(d, other_letter(s)));
    std::size_t o = dim_o_orbit(strip(d, s));
    std::size_t twice = sp + o + d.count('a') * d.count('b') - delta_ab(d);
    if (twice % 2) throw Error(ErrorCode::Internal, "orbit dimension formula gave a half-integer");
    return twice / 2;
}

RankFingerprint fingerprint(const AbDiagram& d, std::size_t bound) {
    RankFingerprint fp;
    for (char c : {'a', 'b'})
        for (std::size_t L = 1; L <= bound; ++L) {
            std::size_t n = 0;
            for (auto& r : d.rows)
                for (std::size_t p = 0; p < r.len; ++p)
                    if ((p % 2 ? other_letter(r.start) : r.start) == c && r.len - 1 - p >= L) ++n;
            fp[{c, L}] = n;
        }
    return fp;
}

RankFingerprint fingerprint(const Matrix& i, const Matrix& j, std::size_t bound) {
    RankFingerprint fp;
    for (char c : {'a', 'b'}) {
        Matrix prod = c == 'a' ? i : j;
        bool next_is_j = c == 'a';
        for (std::size_t L = 1; L <= bound; ++L) {
            fp[{c, L}] = exactalg::rank(prod);
            prod = (next_is_j ? j : i) * prod;
            next_is_j = !next_is_j;
        }
    }
    return fp;
}

Pair canonical_pair(const AbDiagram& d) {
    std::size_t na = d.count('a'), nb = d.count('b');
    Pair out{Matrix(nb, na), Matrix(na, nb)};
    std::size_t ia = 0, ib = 0;
    for (auto& r : d.rows) {
        // index of each position within its own space
        std::vector<std::size_t> idx(r.len);
        for (std::size_t p = 0; p < r.len; ++p) {
            char c = p % 2 ? other_letter(r.start) : r.start;
            idx[p] = c == 'a' ? ia++ : ib++;
        }
        for (std::size_t p = 0; p + 1 < r.len; ++p) {
            char c = p % 2 ? other_letter(r.start) : r.start;
            if (c == 'a')
                out.i(idx[p + 1], idx[p]) = 1;
            else
                out.j(idx[p + 1], idx[p]) = 1;
        }
    }
    return out;
}

std::vector<AbDiagram> enumerate_diagrams(std::size_t na, std::size_t nb, Flavor f) {
    std::vector<Row> types;
    for (std::size_t len = na + nb; len >= 1; --len)
        for (char c : {'a', 'b'}) {
            Row r{c, len};
            if (r.count('a') <= na && r.count('b') <= nb) types.push_back(r);
        }
    std::vector<AbDiagram> out;
    std::vector<Row> cur;
    std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t t, std::size_t ra, std::size_t rb) {
        if (ra == 0 && rb == 0) {
            AbDiagram d(cur);
            if (is_valid_spo_diagram(d, f)) out.push_back(d);
            return;
        }
        if (t == types.size()) return;
        const Row& r = types[t];
        std::size_t ca = r.count('a'), cb = r.count('b');
        std::size_t pushed = 0;
        rec(t + 1, ra, rb);
        while (ca <= ra && cb <= rb) {
            cur.push_back(r);
            ++pushed;
            ra -= ca;
            rb -= cb;
            rec(t + 1, ra, rb);
        }
        cur.resize(cur.size() - pushed);
    };
    rec(0, na, nb);
    return out;
}

AbDiagram abdiagram_of(const Matrix& i, const forms::FramedSetting& s) {
    std::size_t k = s.k(), N = s.N();
    if (i.rows() != k || i.cols() != N) throw Error(ErrorCode::ShapeMismatch, "i must be k x N");
    Matrix j = forms::right_adjoint(i, s.W, s.V);
    if (k > 0 && !exactalg::power(i * j, static_cast<unsigned>(k)).is_zero())
        throw Error(ErrorCode::NotNilpotent, "i i* is not nilpotent");
    auto target = fingerprint(i, j, k + N);
    for (auto& d : enumerate_diagrams(N, k, s.flavor))
        if (fingerprint(d, k + N) == target) return d;
    throw Error(ErrorCode::NoMatch, "no valid ab-diagram has this rank fingerprint");
}

std::optional<std::size_t> strata_dimension(std::size_t N, std::size_t k, std::size_t kp, Flavor f) {
    if (kp > k) throw Error(ErrorCode::InvalidArgument, "k' must not exceed k");
    if (f == Flavor::SpData) return kp * (N + 2) + 2 * (k - kp);
    // symplectic V: dimensions are even and the symmetric product needs (k-k')/2 points
    if (k % 2 || kp % 2) return std::nullopt;
    if (kp > 0) {
        if (N < 3) return std::nullopt;
        if (N == 3 && kp % 4) return std::nullopt;
    }
    return kp * (N - 2) + (k - kp);
}

}  // namespace adhm::kp
