#ifndef ADHM_FACTORIZATION_HPP
#define ADHM_FACTORIZATION_HPP

#include <cstdint>
#include <vector>

#include "adhm/kp.hpp"

namespace adhm::factorization {

using exactalg::Matrix;
using exactalg::Scalar;

struct EigenvaluePartition {
    std::vector<std::vector<Scalar>> supports;  // Z_n, each sorted

    kp::Partition eta() const;
    // disjoint supports, and even sizes (symplectic blocks)
    void validate() const;
};

// One piece living on a standard symplectic space of dimension B1.rows().
struct Block {
    Matrix B1, B2, i;
};

struct BlockData {
    forms::BilinearSpace W;
    std::vector<Block> blocks;
};

struct Split {
    EigenvaluePartition partition;
    BlockData data;
    Matrix g;  // isometry with g.x block diagonal in B1
};

// Groups generalized eigenspaces of B1 by the requested supports (default: one block per
// distinct eigenvalue). Only SO-data: the symplectic basis completion stays rational,
// the orthogonal one would need square roots (UnsupportedSetting).
Split split_by_spectrum(const forms::ADHMDatum& x, const std::vector<std::vector<Scalar>>& supports = {});

// unique X with Bm1 X - X Bn1 = -rhs; SpectraOverlap if the operator is singular
Matrix solve_sylvester_block(const Matrix& Bm1, const Matrix& Bn1, const Matrix& rhs);

// BlockMomentNonzero if a block violates its own moment equation
forms::ADHMDatum assemble(const BlockData& blocks, const EigenvaluePartition& ep);

// assemble(h.blocks.k) == (h, k).assemble(blocks) for random per-block isometries h and a
// random isometry k of W
bool equivariance_check(const BlockData& blocks, const EigenvaluePartition& ep, std::uint64_t seed);

// dimension of the Lie stabilizer of the assembled datum
std::size_t stabilizer_product_check(const BlockData& blocks, const EigenvaluePartition& ep);

nlohmann::json to_json(const BlockData& d, const EigenvaluePartition& ep);
std::pair<BlockData, EigenvaluePartition> blocks_from_json(const nlohmann::json& j);
// "1/2,1/2;-1/2,-1/2"
std::vector<std::vector<Scalar>> parse_supports(const std::string& s);

}  // namespace adhm::factorization

#endif
