#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srw/codes.hpp"

namespace srw {

/// A nested chain of codes D_d >= D_{d+1} >= ... >= D_n with min_distance(D_h) = h,
/// every member MSRD. Verified at construction.
struct CodeChain {
    FieldPtr F;
    Shape shape;
    int d_head = 1;              // distance of members[0]
    std::vector<Code> members;   // members[i] has minimum distance d_head + i

    std::string family;          // provenance, echoed into chain files
    std::vector<std::pair<std::string, std::string>> params;

    const Code& at_distance(int d) const;
    int d_last() const { return d_head + static_cast<int>(members.size()) - 1; }
};

/// Checks strict nesting, the prescribed minimum distances, and the MSRD
/// property of every member; throws DomainError on failure.
void verify_chain(const CodeChain& chain,
                  std::uint64_t max_codewords = std::uint64_t(1) << 24);

/// Classical Reed-Solomon code: evaluation of polynomials of degree < k at
/// the first n field elements in canonical order (no point at infinity).
Code rs_code(std::uint64_t q, int n, int k);

/// The full nested chain rs(n,n), rs(n,n-1), ..., rs(n,1) indexed by distance.
CodeChain rs_chain(std::uint64_t q, int n);

/// Extended Reed-Solomon code of length q+1 with evaluation at infinity
/// (the coefficient of x^{k-1}); these are not nested in general.
Code extended_rs(std::uint64_t q, int k);

/// A block code whose generalized Hamming weights are the given strictly
/// increasing sequence; row i evaluates prod_{s>d_i}(x - alpha_s).
Code realize_hamming(const std::vector<int>& seq, std::uint64_t q,
                     std::optional<int> n = std::nullopt);

/// Nested pair (C1, C2) with relative generalized weights equal to seq,
/// via C1 = C x F_q^{k2}, C2 = 0 x F_q^{k2}.
std::pair<Code, Code> realize_relative(const std::vector<int>& seq, std::uint64_t q,
                                       int n, int k1, int k2);

/// Rank-metric code in F_q^{m x n} (m = sum of the sequence, n = last entry)
/// with the given non-decreasing generalized weights; works for every q.
Code realize_rank_tall(const std::vector<int>& seq, std::uint64_t q);

/// Chain of nested Gabidulin MRD codes in F_q^{m x n}, distances 1..n.
CodeChain gabidulin_chain(std::uint64_t q, int m, int n);

/// Chain of linearized Reed-Solomon MSRD codes on shape
/// [(m,n_1),...,(m,n_t)], distances 1..n; requires q > t and n_i <= m.
CodeChain lrs_chain(std::uint64_t q, int t, int m, const std::vector<int>& n_list);

/// Appends zero rows per block; distances, dimensions and the MSRD property
/// are unchanged.
Code pad_rows(const Code& C, const std::vector<int>& target_m);
CodeChain pad_rows(const CodeChain& chain, const std::vector<int>& target_m);

/// Combined MSRD chain for shapes with oversized leading blocks: full-rank
/// MRD blocks on the first h coordinates paired with a linearized
/// Reed-Solomon chain on the rest.
CodeChain msrd_chain_combined(std::uint64_t q, const Shape& shape, int j, int delta);

/// Subcode of the chain head realizing an admissible weight sequence,
/// satisfying the chain condition.
Code realize_sumrank(const std::vector<int>& seq, const CodeChain& chain);

/// Rank-metric realizer over a Gabidulin chain in F_q^{m x n}.
Code realize_rank_mn(const std::vector<int>& seq, std::uint64_t q, int m, int n);

}  // namespace srw
