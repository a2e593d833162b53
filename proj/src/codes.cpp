#include "srw/codes.hpp"

#include <algorithm>
#include <numeric>

#include "srw/kernels.hpp"

namespace srw {

Shape::Shape(std::vector<Block> b) : blocks(std::move(b)) {
    if (blocks.empty()) throw DomainError("shape must have at least one block");
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].m <= 0 || blocks[i].n <= 0)
            throw DomainError("block dimensions must be positive");
        if (blocks[i].m < blocks[i].n)
            throw DomainError("shape requires m_i >= n_i in every block");
        if (i > 0 && blocks[i - 1].m < blocks[i].m)
            throw DomainError("shape requires non-increasing row counts m_1 >= ... >= m_t");
    }
}

Shape Shape::hamming(int n) {
    if (n <= 0) throw DomainError("length must be positive");
    return Shape(std::vector<Block>(n, Block{1, 1}));
}

int Shape::n_total() const {
    int s = 0;
    for (const auto& b : blocks) s += b.n;
    return s;
}

int Shape::ambient_dim() const {
    int s = 0;
    for (const auto& b : blocks) s += b.m * b.n;
    return s;
}

int Shape::block_offset(int i) const {
    int s = 0;
    for (int j = 0; j < i; ++j) s += blocks[j].m * blocks[j].n;
    return s;
}

bool Shape::is_hamming() const {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const Block& b) { return b.m == 1 && b.n == 1; });
}

Code Code::make(FieldPtr F, Shape shape, const Mat& raw) {
    if (raw.cols != shape.ambient_dim())
        throw DomainError("generator length does not match the shape");
    for (Elem x : raw.a) F->check_elem(x);
    Subspace s = span_of_rows(*F, raw);
    return Code{std::move(F), std::move(shape), std::move(s.basis)};
}

namespace {

// Rank of an m x n grid given by a row accessor, by in-place elimination.
int grid_rank(const Field& F, int m, int n, const std::function<Elem(int, int)>& at) {
    Mat g(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) g.at(r, c) = at(r, c);
    return rank_of(F, std::move(g));
}

std::uint64_t sat_pow(std::uint64_t q, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > UINT64_MAX / q) return UINT64_MAX;
        r *= q;
    }
    return r;
}

}  // namespace

int srk_weight(const Field& F, const Shape& shape, std::span<const Elem> word) {
    if (static_cast<int>(word.size()) != shape.ambient_dim())
        throw DomainError("word length does not match the shape");
    int w = 0;
    for (int i = 0; i < shape.t(); ++i) {
        const Block& b = shape.blocks[i];
        const Elem* base = word.data() + shape.block_offset(i);
        w += grid_rank(F, b.m, b.n,
                       [&](int r, int c) { return base[r * b.n + c]; });
    }
    return w;
}

void for_each_codeword_rep(const Code& C, std::uint64_t max_codewords,
                           const std::function<void(std::span<const Elem>)>& fn) {
    const Field& F = *C.F;
    const int k = C.dim();
    const std::uint64_t q = F.q();
    if (sat_pow(q, k) > max_codewords)
        throw BudgetExceeded("codeword enumeration budget exceeded");

    std::vector<Elem> word(C.ambient());
    for (int lead = 0; lead < k; ++lead) {
        std::copy(C.gen.row(lead).begin(), C.gen.row(lead).end(), word.begin());
        const int f = k - lead - 1;
        std::vector<Elem> dig(f, 0);
        fn(word);
        while (true) {
            int j = 0;
            for (; j < f; ++j) {
                // one unit increment of digit j is one row addition, including
                // the wrap q-1 -> 0 (q additions are the identity)
                vec_add(F, word, C.gen.row(lead + 1 + j));
                if (++dig[j] < q) break;
                dig[j] = 0;
            }
            if (j == f) break;
            fn(word);
        }
    }
}

int min_distance(const Code& C, std::uint64_t max_codewords) {
    if (C.dim() == 0) throw DomainError("minimum distance of the zero code is undefined");
    int best = C.shape.n_total();
    for_each_codeword_rep(C, max_codewords, [&](std::span<const Elem> w) {
        best = std::min(best, srk_weight(*C.F, C.shape, w));
    });
    return best;
}

int max_srk(const Code& C, std::uint64_t max_codewords) {
    if (C.dim() == 0) return 0;
    int best = 0;
    for_each_codeword_rep(C, max_codewords, [&](std::span<const Elem> w) {
        best = std::max(best, srk_weight(*C.F, C.shape, w));
    });
    return best;
}

int span_weight(const Field& F, const Shape& shape, const Mat& rows) {
    if (rows.cols != shape.ambient_dim())
        throw DomainError("word length does not match the shape");
    int w = 0;
    for (int i = 0; i < shape.t(); ++i) {
        const Block& b = shape.blocks[i];
        const int off = shape.block_offset(i);
        // joint row support: stack every generator's block rows
        int row_sup = grid_rank(F, rows.rows * b.m, b.n, [&](int r, int c) {
            return rows.at(r / b.m, off + (r % b.m) * b.n + c);
        });
        int delta = row_sup;
        if (b.m == b.n) {
            int col_sup = grid_rank(F, rows.rows * b.n, b.m, [&](int r, int c) {
                return rows.at(r / b.n, off + c * b.n + (r % b.n));
            });
            delta = std::min(delta, col_sup);
        }
        w += delta;
    }
    return w;
}

int code_weight(const Code& C) { return span_weight(*C.F, C.shape, C.gen); }

std::vector<int> ambient_weight_sequence(const Shape& shape) {
    std::vector<int> out;
    out.reserve(shape.ambient_dim());
    int base = 0;
    for (const auto& b : shape.blocks) {
        for (int j = 1; j <= b.n; ++j)
            for (int r = 0; r < b.m; ++r) out.push_back(base + j);
        base += b.n;
    }
    return out;
}

std::optional<MsrdParams> msrd_params(const Code& C, std::uint64_t max_codewords) {
    if (C.dim() == 0) throw DomainError("MSRD is undefined for the zero code");
    const int d = min_distance(C, max_codewords);
    const int k = C.dim();
    int prefix_n = 0;
    for (int j = 1; j <= C.shape.t(); ++j) {
        const Block& b = C.shape.blocks[j - 1];
        int suffix_dim = 0;
        for (int i = j - 1; i < C.shape.t(); ++i)
            suffix_dim += C.shape.blocks[i].m * C.shape.blocks[i].n;
        for (int delta = 0; delta <= b.n - 1; ++delta) {
            if (d == prefix_n + delta + 1 && k == suffix_dim - delta * b.m)
                return MsrdParams{j, delta};
        }
        prefix_n += b.n;
    }
    return std::nullopt;
}

bool is_msrd(const Code& C, std::uint64_t max_codewords) {
    return msrd_params(C, max_codewords).has_value();
}

bool is_mds(const Code& C, std::uint64_t max_codewords) {
    if (!C.shape.is_hamming())
        throw DomainError("MDS is defined for block codes only");
    return is_msrd(C, max_codewords);
}

}  // namespace srw
