#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srw/codes.hpp"

namespace srw {

struct Budget {
    std::uint64_t max_codewords = std::uint64_t(1) << 24;
    std::uint64_t max_subspaces = 100000000;
};

/// Generalized sum-rank weights d_1 <= ... <= d_k: d_r is the minimum wt
/// over r-dimensional subcodes. Pruned search; the oracle module provides the
/// unpruned reference.
std::vector<int> generalized_weights(const Code& C, const Budget& budget = {});

/// A nested chain of subcodes, as coordinate RREFs against the code's
/// canonical generator rows, with the weight attained at each level.
struct ChainWitness {
    std::vector<Mat> coord_bases;  // coord_bases[r-1] is (r x k)
    std::vector<int> weights;
};

struct GreedyResult {
    std::vector<int> g;
    ChainWitness witness;  // one greedy chain, lexicographically first parents
};

/// Greedy weights: level r minimizes wt over r-dimensional subcodes that
/// contain some greedy (r-1)-subcode. All level minimizers are carried.
GreedyResult greedy_weights(const Code& C, const Budget& budget = {});

struct ChainVerdict {
    bool holds = false;
    std::optional<ChainWitness> witness;
};

/// Chain condition, via the equivalence with d_r = g_r for all r.
ChainVerdict chain_condition(const Code& C, const Budget& budget = {});

/// Relative generalized Hamming weights of C2 < C1 (block codes only):
/// minimum support over r-dimensional subcodes of C1 meeting C2 trivially.
std::vector<int> relative_generalized_weights(const Code& C1, const Code& C2,
                                              const Budget& budget = {});

/// Greedy levels restricted to subcodes meeting C2 trivially.
std::vector<int> relative_greedy_weights(const Code& C1, const Code& C2,
                                         const Budget& budget = {});

struct SeqVerdict {
    bool valid = false;
    std::string reason;  // empty when valid
};

/// Admissibility of a weight sequence for a shape: non-decreasing, bounded by
/// n, and each value sum_{i<j} n_i + delta occurs at most m_j times;
/// equivalently, a subsequence of the ambient weight sequence.
SeqVerdict check_sequence(const Shape& shape, const std::vector<int>& seq);
/// Raw-block variant: applies the value/multiplicity pattern formally, without
/// the m_i >= n_i shape normalization (used by the CLI verdict).
SeqVerdict check_sequence(const std::vector<Block>& blocks, const std::vector<int>& seq);

/// Weight sequence of any MSRD code with the given parameters: the suffix of
/// the ambient weight sequence of length sum_{i>=j} m_i n_i - delta m_j.
std::vector<int> msrd_weight_sequence(const Shape& shape, const MsrdParams& params);

struct BoundsReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass() const;
};

/// Checks every stated bound on the computed weight sequence of C.
BoundsReport verify_bounds(const Code& C, const Budget& budget = {});

}  // namespace srw
