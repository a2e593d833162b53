#include "srw/oracle.hpp"

#include <algorithm>

namespace srw {

namespace {

// All weight logic below is written against the definitions directly, on the
// full codeword list of a subcode, sharing nothing with the engine beyond
// field arithmetic and RREF.

std::vector<std::vector<Elem>> all_codewords(const Field& F, const Mat& gens) {
    const int r = gens.rows;
    const std::uint64_t q = F.q();
    std::uint64_t total = 1;
    for (int i = 0; i < r; ++i) total *= q;
    std::vector<std::vector<Elem>> words;
    words.reserve(total);
    std::vector<Elem> lambda(r, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Elem> w(gens.cols, 0);
        for (int i = 0; i < r; ++i)
            for (int c = 0; c < gens.cols; ++c)
                w[c] = F.add(w[c], F.mul(lambda[i], gens.at(i, c)));
        words.push_back(std::move(w));
        for (int i = 0; i < r; ++i) {
            if (++lambda[i] < q) break;
            lambda[i] = 0;
        }
    }
    return words;
}

int support_rank(const Field& F, const std::vector<std::vector<Elem>>& words,
                 const Shape& shape, int block, bool by_columns) {
    const Block& b = shape.blocks[block];
    const int off = shape.block_offset(block);
    const int rows_per = by_columns ? b.n : b.m;
    const int width = by_columns ? b.m : b.n;
    Mat stack(static_cast<int>(words.size()) * rows_per, width);
    int r = 0;
    for (const auto& w : words) {
        for (int i = 0; i < rows_per; ++i, ++r)
            for (int c = 0; c < width; ++c)
                stack.at(r, c) = by_columns ? w[off + c * b.n + i] : w[off + i * b.n + c];
    }
    return rank_of(F, std::move(stack));
}

// wt of the code spanned by gens: per block the dimension of the joint
// support of all codewords, taking columns as well when the block is square.
int naive_wt(const Field& F, const Shape& shape, const Mat& gens) {
    const std::vector<std::vector<Elem>> words = all_codewords(F, gens);
    int wt = 0;
    for (int i = 0; i < shape.t(); ++i) {
        int s = support_rank(F, words, shape, i, false);
        if (shape.blocks[i].m == shape.blocks[i].n)
            s = std::min(s, support_rank(F, words, shape, i, true));
        wt += s;
    }
    return wt;
}

int naive_srk(const Field& F, const Shape& shape, const std::vector<Elem>& word) {
    int s = 0;
    for (int i = 0; i < shape.t(); ++i) {
        const Block& b = shape.blocks[i];
        Mat blockm(b.m, b.n);
        for (int r = 0; r < b.m; ++r)
            for (int c = 0; c < b.n; ++c)
                blockm.at(r, c) = word[shape.pos(i, r, c)];
        s += rank_of(F, std::move(blockm));
    }
    return s;
}

// Weights of the code with the given generator rows, scanning every subspace
// of every dimension >= r of the coordinate space, as the definition reads.
std::vector<int> weights_of_gens(const Field& F, const Shape& shape, const Mat& gens,
                                 std::uint64_t& visited, std::uint64_t max_subspaces) {
    const int k = gens.rows;
    std::vector<int> d(k, shape.n_total() + 1);
    for (int r = 1; r <= k; ++r) {
        for (int s = r; s <= k; ++s) {
            enumerate_subspaces(F, k, s, [&](const Mat& X) {
                if (++visited > max_subspaces)
                    throw BudgetExceeded("oracle subspace budget exceeded");
                d[r - 1] = std::min(d[r - 1], naive_wt(F, shape, mat_mul(F, X, gens)));
                return true;
            });
        }
    }
    return d;
}

}  // namespace

std::vector<int> oracle_generalized_weights(const Code& C, std::uint64_t max_subspaces) {
    if (C.dim() == 0)
        throw DomainError("generalized weights of the zero code are undefined");
    std::uint64_t visited = 0;
    return weights_of_gens(*C.F, C.shape, C.gen, visited, max_subspaces);
}

std::vector<int> oracle_relative_weights(const Code& C1, const Code& C2,
                                         std::uint64_t max_subspaces) {
    if (!C1.shape.is_hamming())
        throw DomainError("relative weights are defined for block codes only");
    if (C2.dim() >= C1.dim())
        throw DomainError("relative weights require C2 strictly inside C1");
    if (!subspace_contains(*C1.F, C1.space(), C2.space()))
        throw DomainError("relative weights require C2 contained in C1");
    const Field& F = *C1.F;
    const int k1 = C1.dim();
    const int kk = k1 - C2.dim();
    std::uint64_t visited = 0;
    std::vector<int> d(kk, 0);
    for (int r = 1; r <= kk; ++r) {
        int best = C1.shape.n_total() + 1;
        for (int s = r; s <= k1; ++s) {
            enumerate_subspaces(F, k1, s, [&](const Mat& X) {
                if (++visited > max_subspaces)
                    throw BudgetExceeded("oracle subspace budget exceeded");
                Mat gens = mat_mul(F, X, C1.gen);
                // keep only subcodes meeting C2 trivially
                Mat stacked(s + C2.dim(), C1.ambient());
                for (int i = 0; i < s; ++i)
                    std::copy(gens.row(i).begin(), gens.row(i).end(),
                              stacked.row(i).begin());
                for (int i = 0; i < C2.dim(); ++i)
                    std::copy(C2.gen.row(i).begin(), C2.gen.row(i).end(),
                              stacked.row(s + i).begin());
                if (rank_of(F, std::move(stacked)) == s + C2.dim())
                    best = std::min(best, naive_wt(F, C1.shape, gens));
                return true;
            });
        }
        d[r - 1] = best;
    }
    return d;
}

int oracle_min_distance(const Code& C, std::uint64_t max_codewords) {
    if (C.dim() == 0)
        throw DomainError("minimum distance of the zero code is undefined");
    const Field& F = *C.F;
    const std::uint64_t q = F.q();
    std::uint64_t total = 1;
    for (int i = 0; i < C.dim(); ++i) {
        if (total > max_codewords / q)
            throw BudgetExceeded("oracle codeword budget exceeded");
        total *= q;
    }
    int best = C.shape.n_total();
    std::vector<Elem> lambda(C.dim(), 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        int i = 0;
        while (++lambda[i] == q) lambda[i++] = 0;
        std::vector<Elem> w(C.ambient(), 0);
        for (int r = 0; r < C.dim(); ++r)
            for (int c = 0; c < C.ambient(); ++c)
                w[c] = F.add(w[c], F.mul(lambda[r], C.gen.at(r, c)));
        best = std::min(best, naive_srk(F, C.shape, w));
    }
    return best;
}

SearchVerdict exists_code_with_weights(std::uint64_t q, const Shape& shape,
                                       const std::vector<int>& seq,
                                       std::uint64_t max_subspaces) {
    if (seq.empty()) throw DomainError("weight sequence must be non-empty");
    FieldPtr F = Field::of_order(q);
    const int N = shape.ambient_dim();
    const int r = static_cast<int>(seq.size());
    if (r > N) throw DomainError("sequence longer than the ambient dimension");
    if (gaussian_binomial(N, r, q) > max_subspaces)
        throw BudgetExceeded("oracle subspace budget exceeded");

    SearchVerdict verdict;
    enumerate_subspaces(*F, N, r, [&](const Mat& X) {
        ++verdict.search_space_size;
        std::uint64_t inner = 0;
        if (weights_of_gens(*F, shape, X, inner, max_subspaces) == seq) {
            verdict.exists = true;
            verdict.witness = X;
            return false;
        }
        return true;
    });
    if (verdict.exists) {
        // independent re-verification of the witness before reporting it
        Code W = Code::make(F, shape, *verdict.witness);
        if (W.dim() != r || oracle_generalized_weights(W, max_subspaces) != seq)
            throw DomainError("internal: witness failed re-verification");
    }
    return verdict;
}

}  // namespace srw
