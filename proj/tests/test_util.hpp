#ifndef ADHM_TEST_UTIL_HPP
#define ADHM_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "adhm/factorization.hpp"
#include "adhm/forms.hpp"

namespace testutil {

using adhm::exactalg::Matrix;
using adhm::exactalg::Scalar;

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, bool complex) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            long re = static_cast<long>(rng() % 7) - 3;
            long im = complex ? static_cast<long>(rng() % 5) - 2 : 0;
            m(i, j) = Scalar(re, im);
        }
    return m;
}

// determinant by the permutation expansion; independent of elimination code
inline Scalar leibniz_det(const Matrix& m) {
    std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Scalar total;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        Scalar prod(inv % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) prod *= m(i, p[i]);
        total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// dimension of the (Sp x O)-orbit through i, as the rank of its tangent map
// (xi, eta) -> xi i - i eta over the two isometry Lie algebras
inline std::size_t orbit_tangent_dim(const Matrix& i, const adhm::forms::FramedSetting& s) {
    std::vector<Matrix> cols;
    auto flat = [&](const Matrix& m) {
        std::vector<Scalar> v(m.entries());
        return Matrix::column(v);
    };
    for (auto& xi : adhm::forms::t_basis(s.V)) cols.push_back(flat(xi * i));
    for (auto& eta : adhm::forms::t_basis(s.W)) cols.push_back(flat(i * eta));
    if (cols.empty()) return 0;
    return adhm::exactalg::rank(Matrix::hstack(cols));
}

// (p^2 - q^2, i(p^2 + q^2), 2pq) is isotropic for the identity form on C^3
inline Matrix null_row(long p, long q) {
    return Matrix::from_rows({{Scalar(p * p - q * q), Scalar(0, p * p + q * q), Scalar(2 * p * q)}});
}

// 2-dimensional symplectic block with B1 = a, B2 = c scalars and i = (alpha, beta)^T r for an
// isotropic row r, moved by random isometries of both sides; satisfies its own moment equation
struct ScalarBlock {
    Matrix B1, B2, i;
};
inline ScalarBlock random_scalar_block(std::mt19937_64& rng, const Scalar& a, const adhm::forms::BilinearSpace& W) {
    auto small = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
    long p = small(-3, 3), q = small(-3, 3);
    if (p == 0 && q == 0) p = 1;
    Matrix col = Matrix::from_rows({{Scalar(small(-3, 3), small(-1, 1))}, {Scalar(small(1, 3))}});
    Matrix i = col * null_row(p, q);
    auto V = adhm::forms::BilinearSpace::symplectic(2);
    Matrix h = adhm::forms::random_isometry(V, rng);
    Matrix kw = adhm::forms::random_isometry(W, rng);
    Matrix id = Matrix::identity(2);
    return {id * a, id * Scalar(small(-4, 4), small(-2, 2)), h * i * kw};
}

// number of monomials of degree x in p variables
inline long long multichoose(long long p, long long x) {
    if (x == 0) return 1;
    if (p == 0) return 0;
    long long r = 1;
    for (long long j = 1; j <= x; ++j) r = r * (p + x - j) / j;
    return r;
}

// coefficient of q1^{-d1/2} q2^{-d2/2} in the product of geometric series over
// two copies of p(V) (dim k(k+eps)/2) and Hom(W,V) (dim kN, weight (q1q2)^{1/2})
inline long long ambient_coefficient(std::size_t k, std::size_t N, int eps, int d1, int d2) {
    long long p = static_cast<long long>(k * (k + eps) / 2), h = static_cast<long long>(k * N);
    long long total = 0;
    for (int m = 0; m <= std::min(d1, d2); ++m) {
        if ((d1 - m) % 2 || (d2 - m) % 2) continue;
        total += multichoose(p, (d1 - m) / 2) * multichoose(p, (d2 - m) / 2) * multichoose(h, m);
    }
    return total;
}

// all multidegrees (dq1, dq2, t) up to total q-degree `order`; t bounded by the Hom-sector count
inline std::vector<std::vector<int>> multidegrees(std::size_t rt, int order) {
    std::vector<std::vector<int>> out;
    for (int d1 = 0; d1 <= 2 * order; ++d1)
        for (int d2 = 0; d1 + d2 <= 2 * order; ++d2) {
            int b = std::min(d1, d2);
            std::vector<std::vector<int>> ts{{}};
            for (std::size_t a = 0; a < rt; ++a) {
                std::vector<std::vector<int>> next;
                for (auto& t : ts)
                    for (int e = -b; e <= b; ++e) {
                        auto u = t;
                        u.push_back(e);
                        next.push_back(u);
                    }
                ts = next;
            }
            for (auto& t : ts) {
                std::vector<int> k{d1, d2};
                k.insert(k.end(), t.begin(), t.end());
                out.push_back(k);
            }
        }
    return out;
}

inline std::pair<adhm::factorization::BlockData, adhm::factorization::EigenvaluePartition> random_blocks(std::mt19937_64& rng, std::size_t nblocks) {
    adhm::factorization::BlockData bd;
    adhm::factorization::EigenvaluePartition ep;
    bd.W = adhm::forms::BilinearSpace::orthogonal(3);
    std::vector<Scalar> used;
    while (bd.blocks.size() < nblocks) {
        Scalar a(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) - 1);
        if (std::find(used.begin(), used.end(), a) != used.end()) continue;
        used.push_back(a);
        auto b = testutil::random_scalar_block(rng, a, bd.W);
        bd.blocks.push_back({b.B1, b.B2, b.i});
        ep.supports.push_back({a, a});
    }
    return {bd, ep};
}

}  // namespace testutil

#endif
