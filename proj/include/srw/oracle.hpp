#pragma once

#include <optional>
#include <vector>

#include "srw/codes.hpp"

namespace srw {

/// Definition-literal generalized weights: full enumeration of every subcode
/// of dimension >= r with no pruning; ground truth for the engine.
std::vector<int> oracle_generalized_weights(const Code& C,
                                            std::uint64_t max_subspaces = 10000000);

/// Definition-literal relative generalized Hamming weights of C2 < C1.
std::vector<int> oracle_relative_weights(const Code& C1, const Code& C2,
                                         std::uint64_t max_subspaces = 10000000);

/// Exhaustive minimum distance over every nonzero codeword.
int oracle_min_distance(const Code& C,
                        std::uint64_t max_codewords = std::uint64_t(1) << 26);

struct SearchVerdict {
    bool exists = false;
    std::optional<Mat> witness;  // generator rows in the ambient space
    std::uint64_t search_space_size = 0;
};

/// Scans every |seq|-dimensional subspace of the ambient space for a code
/// whose generalized weights equal seq; any witness is re-verified before
/// being returned.
SearchVerdict exists_code_with_weights(std::uint64_t q, const Shape& shape,
                                       const std::vector<int>& seq,
                                       std::uint64_t max_subspaces = 10000000);

}  // namespace srw
