#include "adhm/factorization.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace adhm::factorization {

using exactalg::inverse;
using forms::ADHMDatum;
using forms::BilinearSpace;

kp::Partition EigenvaluePartition::eta() const {
    std::vector<std::size_t> p;
    for (auto& z : supports) p.push_back(z.size());
    return kp::Partition(p);
}

void EigenvaluePartition::validate() const {
    for (std::size_t m = 0; m < supports.size(); ++m) {
        if (supports[m].empty()) throw Error(ErrorCode::InvalidArgument, "empty support");
        if (supports[m].size() % 2)
            throw Error(ErrorCode::InvalidArgument, "blocks of a symplectic space have even size");
        for (std::size_t n = m + 1; n < supports.size(); ++n)
            for (auto& a : supports[m])
                if (std::find(supports[n].begin(), supports[n].end(), a) != supports[n].end())
                    throw Error(ErrorCode::SpectraOverlap, "supports " + std::to_string(m) + " and " +
                                                               std::to_string(n) + " share " + a.str());
    }
}

namespace {

Scalar omega(const Matrix& J, const Matrix& u, const Matrix& v) { return (u.transpose() * J * v)(0, 0); }

// symplectic basis (e1, f1, e2, f2, ...) of the span of the columns of U
Matrix symplectic_basis(const Matrix& U, const Matrix& J) {
    std::vector<Matrix> rest;
    for (std::size_t c = 0; c < U.cols(); ++c) rest.push_back(U.col(c));
    std::vector<Matrix> out;
    while (!rest.empty()) {
        Matrix e = rest.front();
        rest.erase(rest.begin());
        auto it = std::find_if(rest.begin(), rest.end(), [&](const Matrix& w) { return !omega(J, e, w).is_zero(); });
        if (it == rest.end()) throw Error(ErrorCode::DegenerateRestriction, "restricted form is degenerate");
        Matrix f = *it * omega(J, e, *it).inv();
        rest.erase(it);
        for (auto& w : rest) w = w - e * omega(J, w, f) + f * omega(J, w, e);
        out.push_back(e);
        out.push_back(f);
    }
    return Matrix::hstack(out);
}

std::vector<Scalar> sorted(std::vector<Scalar> v) {
    std::sort(v.begin(), v.end());
    return v;
}

BilinearSpace block_space(std::size_t n) { return BilinearSpace::symplectic(n); }

}  // namespace

Split split_by_spectrum(const ADHMDatum& x, const std::vector<std::vector<Scalar>>& requested) {
    if (x.setting.flavor != forms::Flavor::SOData)
        throw Error(ErrorCode::UnsupportedSetting, "spectral splitting is implemented for SO-data only");
    std::size_t k = x.setting.k();
    auto spectrum = exactalg::eigenvalue_multiset(x.B1);

    EigenvaluePartition ep;
    if (requested.empty()) {
        for (auto& a : spectrum)
            if (ep.supports.empty() || ep.supports.back().front() != a)
                ep.supports.push_back({a});
            else
                ep.supports.back().push_back(a);
    } else {
        std::vector<Scalar> all;
        for (auto& z : requested) {
            ep.supports.push_back(sorted(z));
            all.insert(all.end(), z.begin(), z.end());
        }
        if (sorted(all) != spectrum)
            throw Error(ErrorCode::InvalidArgument, "requested supports do not match the spectrum of B1");
    }
    ep.validate();

    std::vector<Matrix> pieces;
    for (auto& z : ep.supports) {
        exactalg::Subspace span(k);
        std::vector<Scalar> distinct = z;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (auto& a : distinct) span = span.sum(exactalg::generalized_eigenspace(x.B1, a));
        if (span.dim() != z.size()) throw Error(ErrorCode::Internal, "generalized eigenspace of unexpected size");
        pieces.push_back(symplectic_basis(span.basis(), x.setting.V.gram));
    }
    for (std::size_t m = 0; m < pieces.size(); ++m)
        for (std::size_t n = m + 1; n < pieces.size(); ++n)
            if (!(pieces[m].transpose() * x.setting.V.gram * pieces[n]).is_zero())
                throw Error(ErrorCode::DegenerateRestriction, "generalized eigenspaces are not orthogonal");
    Matrix P = Matrix::hstack(pieces);
    Matrix g = inverse(P);
    ADHMDatum y = forms::act(g, Matrix::identity(x.setting.N()), x);

    Split out;
    out.partition = ep;
    out.g = g;
    out.data.W = x.setting.W;
    std::size_t off = 0;
    for (auto& z : ep.supports) {
        std::size_t d = z.size();
        out.data.blocks.push_back({y.B1.sub(off, off, d, d), y.B2.sub(off, off, d, d), y.i.sub(off, 0, d, x.setting.N())});
        off += d;
    }
    return out;
}

Matrix solve_sylvester_block(const Matrix& Bm1, const Matrix& Bn1, const Matrix& rhs) {
    std::size_t p = Bm1.rows(), q = Bn1.rows();
    if (!Bm1.square() || !Bn1.square() || rhs.rows() != p || rhs.cols() != q)
        throw Error(ErrorCode::ShapeMismatch, "Sylvester block shapes");
    // column-major vec: vec(A X) = (I kron A) vec X, vec(X B) = (B^T kron I) vec X
    Matrix K(p * q, p * q), b(p * q, 1);
    for (std::size_t c = 0; c < q; ++c)
        for (std::size_t r = 0; r < p; ++r) {
            std::size_t row = c * p + r;
            b(row, 0) = -rhs(r, c);
            for (std::size_t s = 0; s < p; ++s) K(row, c * p + s) += Bm1(r, s);
            for (std::size_t t = 0; t < q; ++t) K(row, t * p + r) -= Bn1(t, c);
        }
    if (exactalg::rank(K) != p * q) throw Error(ErrorCode::SpectraOverlap, "Sylvester operator is singular");
    Matrix v;
    exactalg::solve(K, b, v);
    Matrix X(p, q);
    for (std::size_t c = 0; c < q; ++c)
        for (std::size_t r = 0; r < p; ++r) X(r, c) = v(c * p + r, 0);
    return X;
}

ADHMDatum assemble(const BlockData& bd, const EigenvaluePartition& ep) {
    if (bd.blocks.size() != ep.supports.size()) throw Error(ErrorCode::SizeMismatch, "one support per block");
    ep.validate();
    std::size_t N = bd.W.dim;
    std::vector<std::size_t> off;
    std::size_t k = 0;
    for (std::size_t n = 0; n < bd.blocks.size(); ++n) {
        const Block& b = bd.blocks[n];
        std::size_t d = b.B1.rows();
        if (d != ep.supports[n].size() || b.B2.rows() != d || b.i.rows() != d || b.i.cols() != N)
            throw Error(ErrorCode::ShapeMismatch, "block " + std::to_string(n) + " has inconsistent shapes");
        auto Vn = block_space(d);
        if (!forms::in_p(b.B1, Vn) || !forms::in_p(b.B2, Vn)) throw Error(ErrorCode::NotInP, "block matrices must lie in p");
        if (exactalg::eigenvalue_multiset(b.B1) != ep.supports[n])
            throw Error(ErrorCode::InvalidArgument, "block " + std::to_string(n) + " spectrum differs from its support");
        Matrix mu = exactalg::commutator(b.B1, b.B2) + forms::rho(b.i, forms::FramedSetting{Vn, bd.W, forms::Flavor::SOData, {}});
        if (!mu.is_zero()) throw Error(ErrorCode::BlockMomentNonzero, "block " + std::to_string(n) + " has nonzero moment");
        off.push_back(k);
        k += d;
    }
    auto s = forms::FramedSetting::make(forms::Flavor::SOData, N, k);
    s.W = bd.W;
    std::vector<Matrix> b1, is;
    for (auto& b : bd.blocks) {
        b1.push_back(b.B1);
        is.push_back(b.i);
    }
    Matrix B1 = Matrix::block_diag(b1), B2(k, k), i = Matrix::vstack(is);
    for (std::size_t m = 0; m < bd.blocks.size(); ++m)
        for (std::size_t n = 0; n < bd.blocks.size(); ++n) {
            const Block& bm = bd.blocks[m];
            const Block& bn = bd.blocks[n];
            if (m == n) {
                B2.set_block(off[m], off[m], bm.B2);
                continue;
            }
            Matrix in_star = forms::right_adjoint(bn.i, bd.W, block_space(bn.B1.rows()));
            B2.set_block(off[m], off[n], solve_sylvester_block(bm.B1, bn.B1, bm.i * in_star));
        }
    ADHMDatum x = ADHMDatum::make(s, B1, B2, i);
    if (!forms::moment_map(x).is_zero()) throw Error(ErrorCode::Internal, "assembled datum has nonzero moment");
    return x;
}

bool equivariance_check(const BlockData& bd, const EigenvaluePartition& ep, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix kw = forms::random_isometry(bd.W, rng), kw_inv = inverse(kw);
    BlockData moved = bd;
    std::vector<Matrix> hs;
    for (auto& b : moved.blocks) {
        Matrix h = forms::random_isometry(block_space(b.B1.rows()), rng), hi = inverse(h);
        b.B1 = h * b.B1 * hi;
        b.B2 = h * b.B2 * hi;
        b.i = h * b.i * kw_inv;
        hs.push_back(h);
    }
    ADHMDatum lhs = assemble(moved, ep);
    ADHMDatum rhs = forms::act(Matrix::block_diag(hs), kw, assemble(bd, ep));
    return lhs.B1 == rhs.B1 && lhs.B2 == rhs.B2 && lhs.i == rhs.i;
}

std::size_t stabilizer_product_check(const BlockData& bd, const EigenvaluePartition& ep) {
    return forms::stabilizer_lie(assemble(bd, ep)).size();
}

nlohmann::json to_json(const BlockData& d, const EigenvaluePartition& ep) {
    nlohmann::json blocks = nlohmann::json::array();
    for (std::size_t n = 0; n < d.blocks.size(); ++n) {
        nlohmann::json sup = nlohmann::json::array();
        if (n < ep.supports.size())
            for (auto& a : ep.supports[n]) sup.push_back(a.str());
        blocks.push_back({{"B1", exactalg::to_json(d.blocks[n].B1)},
                          {"B2", exactalg::to_json(d.blocks[n].B2)},
                          {"i", exactalg::to_json(d.blocks[n].i)},
                          {"support", sup}});
    }
    return {{"W", exactalg::to_json(d.W.gram)}, {"blocks", blocks}};
}

std::pair<BlockData, EigenvaluePartition> blocks_from_json(const nlohmann::json& j) {
    try {
        BlockData d;
        EigenvaluePartition ep;
        Matrix gram = exactalg::matrix_from_json(j.at("W"));
        d.W = BilinearSpace{gram.rows(), 1, gram};
        d.W.validate();
        for (auto& b : j.at("blocks")) {
            d.blocks.push_back({exactalg::matrix_from_json(b.at("B1")), exactalg::matrix_from_json(b.at("B2")),
                                exactalg::matrix_from_json(b.at("i"))});
            std::vector<Scalar> z;
            for (auto& a : b.at("support")) z.push_back(Scalar::parse(a.get<std::string>()));
            ep.supports.push_back(sorted(z));
        }
        return {d, ep};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

std::vector<std::vector<Scalar>> parse_supports(const std::string& s) {
    std::vector<std::vector<Scalar>> out;
    std::stringstream groups(s);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<Scalar> z;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ','))
            if (item.find_first_not_of(" \t") != std::string::npos) z.push_back(Scalar::parse(item));
        if (!z.empty()) out.push_back(sorted(z));
    }
    return out;
}

}  // namespace adhm::factorization
