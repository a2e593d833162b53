#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "srw/galois.hpp"
#include "srw/linalg.hpp"

namespace srw {

struct Block {
    int m = 0, n = 0;
    bool operator==(const Block&) const = default;
};

/// Ambient product space F_q^{m_1 x n_1} x ... x F_q^{m_t x n_t} with
/// m_1 >= ... >= m_t and m_i >= n_i. Codewords are flattened block by block,
/// row-major inside each block.
struct Shape {
    std::vector<Block> blocks;

    Shape() = default;
    explicit Shape(std::vector<Block> b);
    static Shape hamming(int n);

    int t() const { return static_cast<int>(blocks.size()); }
    int n_total() const;
    int ambient_dim() const;
    int block_offset(int i) const;  // flat offset of block i (0-based)
    bool is_hamming() const;
    /// Flat position of (row r, column c) in block i.
    int pos(int i, int r, int c) const { return block_offset(i) + r * blocks[i].n + c; }

    bool operator==(const Shape&) const = default;
};

/// A sum-rank metric code: an F_q-linear subspace of the ambient space,
/// stored as the canonical RREF of its flattened generator matrix.
/// Block codes are the all-1x1 shape; rank-metric codes have t = 1.
struct Code {
    FieldPtr F;
    Shape shape;
    Mat gen;  // k x ambient_dim, canonical RREF

    int dim() const { return gen.rows; }
    int ambient() const { return shape.ambient_dim(); }
    Subspace space() const { return {ambient(), gen}; }

    static Code make(FieldPtr F, Shape shape, const Mat& raw_generators);
};

/// Sum of the block ranks of a flattened word.
int srk_weight(const Field& F, const Shape& shape, std::span<const Elem> word);

/// Visits one representative per nonzero codeword up to scalar multiples
/// (first nonzero coordinate coefficient normalized to 1).
void for_each_codeword_rep(const Code& C, std::uint64_t max_codewords,
                           const std::function<void(std::span<const Elem>)>& fn);

int min_distance(const Code& C, std::uint64_t max_codewords = std::uint64_t(1) << 24);
int max_srk(const Code& C, std::uint64_t max_codewords = std::uint64_t(1) << 24);

/// wt of the span of the given rows: per block, the dimension of the joint
/// row support, with the column support admitted as well for square blocks.
int span_weight(const Field& F, const Shape& shape, const Mat& rows);

/// wt(C), the optimal-anticode weight of the code.
int code_weight(const Code& C);

/// Generalized weights of the full ambient space: each value
/// n_1+...+n_{i-1}+j repeated m_i times, in non-decreasing order.
std::vector<int> ambient_weight_sequence(const Shape& shape);

struct MsrdParams {
    int j = 0;      // block index, 1-based
    int delta = 0;  // 0 <= delta <= n_j - 1
};

/// The witnessing (j, delta) when C is maximum sum-rank distance, i.e.
/// d = sum_{i<j} n_i + delta + 1 and dim = sum_{i>=j} m_i n_i - delta m_j.
std::optional<MsrdParams> msrd_params(const Code& C,
                                      std::uint64_t max_codewords = std::uint64_t(1) << 24);

bool is_msrd(const Code& C, std::uint64_t max_codewords = std::uint64_t(1) << 24);
bool is_mds(const Code& C, std::uint64_t max_codewords = std::uint64_t(1) << 24);

}  // namespace srw
