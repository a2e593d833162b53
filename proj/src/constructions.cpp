#include "srw/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "srw/weights.hpp"

namespace srw {

const Code& CodeChain::at_distance(int d) const {
    if (d < d_head || d > d_last())
        throw DomainError("chain has no member of minimum distance " + std::to_string(d));
    return members[d - d_head];
}

void verify_chain(const CodeChain& chain, std::uint64_t max_codewords) {
    if (chain.members.empty()) throw DomainError("chain has no members");
    for (size_t i = 0; i < chain.members.size(); ++i) {
        const Code& C = chain.members[i];
        const int h = chain.d_head + static_cast<int>(i);
        if (!(C.shape == chain.shape))
            throw DomainError("chain member shape mismatch");
        if (min_distance(C, max_codewords) != h)
            throw DomainError("chain member at distance " + std::to_string(h) +
                              " has the wrong minimum distance");
        if (!is_msrd(C, max_codewords))
            throw DomainError("chain member at distance " + std::to_string(h) + " is not MSRD");
        if (i > 0) {
            const Code& prev = chain.members[i - 1];
            if (C.dim() >= prev.dim() ||
                !subspace_contains(*chain.F, prev.space(), C.space()))
                throw DomainError("chain members are not strictly nested");
        }
    }
}

Code rs_code(std::uint64_t q, int n, int k) {
    if (k < 0 || n < k) throw DomainError("need n >= k >= 0");
    if (q < static_cast<std::uint64_t>(n))
        throw DomainError("need q >= n distinct evaluation points");
    FieldPtr F = Field::of_order(q);
    const std::vector<Elem> alpha = F->enumerate();
    Mat raw(k, n);
    for (int l = 0; l < k; ++l)
        for (int j = 0; j < n; ++j) raw.at(l, j) = F->pow(alpha[j], l);
    return Code::make(std::move(F), Shape::hamming(n), raw);
}

CodeChain rs_chain(std::uint64_t q, int n) {
    CodeChain chain;
    chain.shape = Shape::hamming(n);
    chain.d_head = 1;
    chain.family = "reed-solomon";
    chain.params = {{"q", std::to_string(q)}, {"n", std::to_string(n)}};
    for (int h = 1; h <= n; ++h) chain.members.push_back(rs_code(q, n, n - h + 1));
    chain.F = chain.members.front().F;
    verify_chain(chain);
    return chain;
}

Code extended_rs(std::uint64_t q, int k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > q)
        throw DomainError("need 0 <= k <= q");
    FieldPtr F = Field::of_order(q);
    const std::vector<Elem> alpha = F->enumerate();
    const int n = static_cast<int>(q) + 1;
    Mat raw(k, n);
    for (int l = 0; l < k; ++l) {
        for (int j = 0; j + 1 < n; ++j) raw.at(l, j) = F->pow(alpha[j], l);
        // evaluation at infinity: the coefficient of x^{k-1}
        raw.at(l, n - 1) = (l == k - 1) ? 1 : 0;
    }
    return Code::make(std::move(F), Shape::hamming(n), raw);
}

namespace {

void require_strictly_increasing(const std::vector<int>& seq) {
    if (seq.empty()) throw DomainError("weight sequence must be non-empty");
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] <= 0) throw DomainError("weight sequence entries must be positive");
        if (i > 0 && seq[i] <= seq[i - 1])
            throw DomainError("weight sequence must be strictly increasing");
    }
}

void require_non_decreasing(const std::vector<int>& seq) {
    if (seq.empty()) throw DomainError("weight sequence must be non-empty");
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] <= 0) throw DomainError("weight sequence entries must be positive");
        if (i > 0 && seq[i] < seq[i - 1])
            throw DomainError("weight sequence must be non-decreasing");
    }
}

}  // namespace

Code realize_hamming(const std::vector<int>& seq, std::uint64_t q, std::optional<int> n_opt) {
    require_strictly_increasing(seq);
    const int k = static_cast<int>(seq.size());
    const int n = n_opt.value_or(seq.back());
    if (n < seq.back()) throw DomainError("length must be at least the largest weight");
    if (q < static_cast<std::uint64_t>(n)) throw DomainError("need q >= n");
    FieldPtr F = Field::of_order(q);
    const std::vector<Elem> alpha = F->enumerate();
    // row i evaluates f_i = prod_{s = d_i + 1}^{n} (x - alpha_s)
    Mat raw(k, n);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) {
            Elem v = 1;
            for (int s = seq[i] + 1; s <= n; ++s)
                v = F->mul(v, F->sub(alpha[j], alpha[s - 1]));
            raw.at(i, j) = v;
        }
    }
    Code C = Code::make(std::move(F), Shape::hamming(n), raw);
    if (C.dim() != k) throw DomainError("internal: realizer rows are dependent");
    return C;
}

std::pair<Code, Code> realize_relative(const std::vector<int>& seq, std::uint64_t q,
                                       int n, int k1, int k2) {
    if (k2 < 0) throw DomainError("k2 must be non-negative");
    if (k1 <= k2) throw DomainError("need k1 > k2");
    if (k1 > n) throw DomainError("need k1 <= n");
    if (static_cast<int>(seq.size()) != k1 - k2)
        throw DomainError("sequence length must equal k1 - k2");
    const int inner_n = n - k2;
    Code C = realize_hamming(seq, q, inner_n);
    Mat g1(k1, n), g2(k2, n);
    for (int r = 0; r < k1 - k2; ++r)
        for (int j = 0; j < inner_n; ++j) g1.at(r, j) = C.gen.at(r, j);
    for (int r = 0; r < k2; ++r) {
        g1.at(k1 - k2 + r, inner_n + r) = 1;
        g2.at(r, inner_n + r) = 1;
    }
    Shape sh = Shape::hamming(n);
    Code C1 = Code::make(C.F, sh, g1);
    Code C2 = Code::make(C.F, sh, g2);
    return {std::move(C1), std::move(C2)};
}

Code realize_rank_tall(const std::vector<int>& seq, std::uint64_t q) {
    require_non_decreasing(seq);
    const int k = static_cast<int>(seq.size());
    const int n = seq.back();
    int m = 0;
    for (int d : seq) m += d;
    FieldPtr F = Field::of_order(q);
    Shape sh(std::vector<Block>{Block{m, n}});
    Mat raw(k, m * n);
    int off = 0;
    for (int r = 0; r < k; ++r) {
        for (int s = 1; s <= seq[r]; ++s) raw.at(r, sh.pos(0, off + s - 1, s - 1)) = 1;
        off += seq[r];
    }
    Code C = Code::make(std::move(F), std::move(sh), raw);
    if (C.dim() != k) throw DomainError("internal: realizer rows are dependent");
    return C;
}

namespace {

struct ExtField {
    FieldPtr F;  // F_q
    FieldPtr E;  // F_{q^m}
    SubfieldEmbedding emb;
    std::vector<Elem> xpow;  // polynomial basis 1, x, ..., x^{m-1} of E over F
};

ExtField make_ext(std::uint64_t q, int m) {
    FieldPtr F = Field::of_order(q);
    auto [p, e] = factor_prime_power(q);
    FieldPtr E = Field::make(static_cast<unsigned>(p), e * static_cast<unsigned>(m));
    SubfieldEmbedding emb(E, F);
    std::vector<Elem> xpow(m);
    const Elem x = E->e() >= 2 ? static_cast<Elem>(E->p()) : Elem(1);
    for (int w = 0; w < m; ++w) xpow[w] = E->pow(x, w);
    return ExtField{std::move(F), std::move(E), std::move(emb), std::move(xpow)};
}

// Expands the big-field word (one entry per column) into the flat m x n block.
void expand_block(const ExtField& X, int m, int n, std::span<const Elem> word,
                  Mat& raw, int row, int col_base) {
    for (int c = 0; c < n; ++c) {
        const std::vector<Elem> col = X.emb.expand(word[c]);
        for (int r = 0; r < m; ++r) raw.at(row, col_base + r * n + c) = col[r];
    }
}

// Generators of the Gabidulin code of q-degree < k at points 1, x, ..., x^{n-1}.
Mat gabidulin_gens(const ExtField& X, int m, int n, int k) {
    const Field& E = *X.E;
    const std::uint64_t q = X.F->q();
    Mat raw(k * m, m * n);
    std::vector<Elem> frob(X.xpow.begin(), X.xpow.begin() + n);
    for (int l = 0; l < k; ++l) {
        if (l > 0)
            for (int j = 0; j < n; ++j) frob[j] = E.frobenius(frob[j], q);
        std::vector<Elem> word(n);
        for (int w = 0; w < m; ++w) {
            for (int j = 0; j < n; ++j) word[j] = E.mul(X.xpow[w], frob[j]);
            expand_block(X, m, n, word, raw, l * m + w, 0);
        }
    }
    return raw;
}

}  // namespace

CodeChain gabidulin_chain(std::uint64_t q, int m, int n) {
    if (n < 1 || m < n) throw DomainError("need m >= n >= 1");
    ExtField X = make_ext(q, m);
    CodeChain chain;
    chain.F = X.F;
    chain.shape = Shape(std::vector<Block>{Block{m, n}});
    chain.d_head = 1;
    chain.family = "gabidulin";
    chain.params = {{"q", std::to_string(q)}, {"m", std::to_string(m)},
                    {"n", std::to_string(n)}};
    for (int h = 1; h <= n; ++h)
        chain.members.push_back(
            Code::make(X.F, chain.shape, gabidulin_gens(X, m, n, n - h + 1)));
    verify_chain(chain);
    return chain;
}

CodeChain lrs_chain(std::uint64_t q, int t, int m, const std::vector<int>& n_list) {
    if (t < 1) throw DomainError("need at least one block");
    if (static_cast<int>(n_list.size()) != t)
        throw DomainError("block length list must have t entries");
    for (int ni : n_list)
        if (ni < 1 || ni > m) throw DomainError("need 1 <= n_i <= m in every block");
    if (q <= static_cast<std::uint64_t>(t)) throw DomainError("need q > t");

    ExtField X = make_ext(q, m);
    const Field& E = *X.E;
    const int n = std::accumulate(n_list.begin(), n_list.end(), 0);

    // Dtab[i][l][j] = D_{a_i}^l(x^j) with D_a(b) = b^q * a and a_i = gamma^i
    // for gamma primitive in E: pairwise distinct norms for i < t <= q - 1.
    const Elem gamma = E.primitive();
    std::vector<std::vector<std::vector<Elem>>> Dtab(t);
    for (int i = 0; i < t; ++i) {
        const Elem a = E.pow(gamma, i);
        Dtab[i].resize(n);
        Dtab[i][0].assign(X.xpow.begin(), X.xpow.begin() + n_list[i]);
        for (int l = 1; l < n; ++l) {
            Dtab[i][l].resize(n_list[i]);
            for (int j = 0; j < n_list[i]; ++j)
                Dtab[i][l][j] = E.mul(E.frobenius(Dtab[i][l - 1][j], q), a);
        }
    }

    std::vector<Block> blocks;
    for (int ni : n_list) blocks.push_back(Block{m, ni});
    CodeChain chain;
    chain.F = X.F;
    chain.shape = Shape(blocks);
    chain.d_head = 1;
    chain.family = "linearized-reed-solomon";
    std::string ns;
    for (int i = 0; i < t; ++i) ns += (i ? "," : "") + std::to_string(n_list[i]);
    chain.params = {{"q", std::to_string(q)}, {"t", std::to_string(t)},
                    {"m", std::to_string(m)}, {"n_list", ns}};

    for (int h = 1; h <= n; ++h) {
        const int k = n - h + 1;
        Mat raw(k * m, chain.shape.ambient_dim());
        std::vector<Elem> word(m);
        for (int l = 0; l < k; ++l)
            for (int w = 0; w < m; ++w) {
                const int row = l * m + w;
                for (int i = 0; i < t; ++i) {
                    word.resize(n_list[i]);
                    for (int j = 0; j < n_list[i]; ++j)
                        word[j] = E.mul(X.xpow[w], Dtab[i][l][j]);
                    expand_block(X, m, n_list[i], word, raw, row,
                                 chain.shape.block_offset(i));
                }
            }
        chain.members.push_back(Code::make(X.F, chain.shape, raw));
    }
    verify_chain(chain);
    return chain;
}

Code pad_rows(const Code& C, const std::vector<int>& target_m) {
    if (static_cast<int>(target_m.size()) != C.shape.t())
        throw DomainError("padding list length must match the number of blocks");
    std::vector<Block> blocks;
    for (int i = 0; i < C.shape.t(); ++i) {
        if (target_m[i] < C.shape.blocks[i].m)
            throw DomainError("padding cannot shrink a block");
        blocks.push_back(Block{target_m[i], C.shape.blocks[i].n});
    }
    Shape ns(blocks);
    Mat raw(C.dim(), ns.ambient_dim());
    for (int r = 0; r < C.dim(); ++r)
        for (int i = 0; i < C.shape.t(); ++i)
            for (int br = 0; br < C.shape.blocks[i].m; ++br)
                for (int c = 0; c < C.shape.blocks[i].n; ++c)
                    raw.at(r, ns.pos(i, br, c)) = C.gen.at(r, C.shape.pos(i, br, c));
    return Code::make(C.F, std::move(ns), raw);
}

CodeChain pad_rows(const CodeChain& chain, const std::vector<int>& target_m) {
    CodeChain out;
    out.F = chain.F;
    out.family = chain.family;
    out.params = chain.params;
    std::string ms;
    for (size_t i = 0; i < target_m.size(); ++i)
        ms += (i ? "," : "") + std::to_string(target_m[i]);
    out.params.emplace_back("padded_m", ms);

    // With unequal row counts the members below sum_{i<j} n_i + 1 stop being
    // MSRD in the padded shape (j the first block of minimal row count), so the
    // chain is truncated to the distances the padded shape supports.
    std::vector<Code> padded;
    for (const Code& C : chain.members) padded.push_back(pad_rows(C, target_m));
    out.shape = padded.front().shape;
    const int mt = out.shape.blocks.back().m;
    int d_min = 1, prefix = 0;
    for (const Block& b : out.shape.blocks) {
        if (b.m == mt) {
            d_min = prefix + 1;
            break;
        }
        prefix += b.n;
    }
    if (d_min > chain.d_last())
        throw DomainError("padding leaves no MSRD chain member");
    out.d_head = std::max(chain.d_head, d_min);
    for (size_t i = out.d_head - chain.d_head; i < padded.size(); ++i)
        out.members.push_back(std::move(padded[i]));
    verify_chain(out);
    return out;
}

CodeChain msrd_chain_combined(std::uint64_t q, const Shape& shape, int j, int delta) {
    const int t = shape.t();
    const int m_t = shape.blocks.back().m;
    int h = 0;  // 1-based; last block with n_i > m_t
    for (int i = 1; i <= t; ++i)
        if (shape.blocks[i - 1].n > m_t) h = i;
    if (h == 0)
        throw DomainError("every block has n_i <= m_t; use the linearized "
                          "Reed-Solomon chain instead");
    int expected_j = 0;
    for (int i = 1; i <= t; ++i)
        if (shape.blocks[i - 1].m == m_t) {
            expected_j = i;
            break;
        }
    if (j != expected_j)
        throw DomainError("j must be the first block of minimal row count (" +
                          std::to_string(expected_j) + ")");
    if (delta < 0 || delta >= shape.blocks[j - 1].n)
        throw DomainError("need 0 <= delta <= n_j - 1");
    int suffix_n = 0;
    for (int i = j; i <= t; ++i) suffix_n += shape.blocks[i - 1].n;
    const int m_h = shape.blocks[h - 1].m;
    if (m_h < m_t * (suffix_n - delta))
        throw DomainError("need m_h >= m_t * (sum_{i>=j} n_i - delta)");
    if (q <= static_cast<std::uint64_t>(t - h))
        throw DomainError("need q > t - h");

    // Tail: linearized Reed-Solomon chain on blocks h+1..t, padded to their
    // true row counts.
    std::vector<int> n_tail, m_tail;
    for (int i = h; i < t; ++i) {
        n_tail.push_back(shape.blocks[i].n);
        m_tail.push_back(shape.blocks[i].m);
    }
    CodeChain tail = pad_rows(lrs_chain(q, t - h, m_t, n_tail), m_tail);

    // Head: per-block full-rank MRD codes; every nonzero combination has
    // sum-rank n_1 + ... + n_h across the first h blocks.
    std::vector<Mat> U;  // U[l].row(b) is the b-th basis matrix of block l+1
    for (int l = 0; l < h; ++l) {
        ExtField X = make_ext(q, shape.blocks[l].m);
        Code Ul = Code::make(X.F, Shape(std::vector<Block>{shape.blocks[l]}),
                             gabidulin_gens(X, shape.blocks[l].m, shape.blocks[l].n, 1));
        U.push_back(Ul.gen);
    }

    // Consistent tail bases: the basis of each member extends the basis of the
    // next smaller one, extras taken as the lexicographically first canonical
    // rows that are independent of what is already chosen.
    const int tail_amb = tail.shape.ambient_dim();
    Mat basis_rows(0, tail_amb);
    Subspace chosen = Subspace::zero(tail_amb);
    for (auto it = tail.members.rbegin(); it != tail.members.rend(); ++it) {
        for (int r = 0; r < it->dim() && chosen.dim() < it->dim(); ++r) {
            if (subspace_contains(*tail.F, chosen, it->gen.row(r))) continue;
            basis_rows.a.insert(basis_rows.a.end(), it->gen.row(r).begin(),
                                it->gen.row(r).end());
            ++basis_rows.rows;
            chosen = span_of_rows(*tail.F, basis_rows);
        }
    }

    int prefix_n = 0, prefix_amb = 0;
    for (int i = 0; i < h; ++i) prefix_n += shape.blocks[i].n;
    prefix_amb = shape.block_offset(h);
    // start at tail distance matching d = sum_{i<j} n_i + delta + 1; earlier
    // tail members have dimension above m_h and cannot be paired
    const int s_start = tail.d_head + delta;

    CodeChain chain;
    chain.F = tail.F;
    chain.shape = shape;
    chain.d_head = prefix_n + s_start;
    chain.family = "msrd-combined";
    chain.params = {{"q", std::to_string(q)}, {"j", std::to_string(j)},
                    {"delta", std::to_string(delta)}, {"h", std::to_string(h)}};
    for (int s = s_start; s <= tail.d_last(); ++s) {
        const int D = tail.at_distance(s).dim();
        if (D > m_h) throw DomainError("internal: tail dimension exceeds m_h");
        Mat raw(D, shape.ambient_dim());
        for (int b = 0; b < D; ++b) {
            for (int l = 0; l < h; ++l) {
                const int off = shape.block_offset(l);
                const int sz = shape.blocks[l].m * shape.blocks[l].n;
                for (int c = 0; c < sz; ++c) raw.at(b, off + c) = U[l].at(b, c);
            }
            for (int c = 0; c < tail_amb; ++c)
                raw.at(b, prefix_amb + c) = basis_rows.at(b, c);
        }
        chain.members.push_back(Code::make(chain.F, shape, raw));
    }
    verify_chain(chain);
    return chain;
}

Code realize_sumrank(const std::vector<int>& seq, const CodeChain& chain) {
    require_non_decreasing(seq);
    SeqVerdict v = check_sequence(chain.shape, seq);
    if (!v.valid) throw DomainError(v.reason);

    const Code& head = chain.members.front();
    if (static_cast<int>(seq.size()) > head.dim())
        throw DomainError("sequence is longer than the chain head's dimension");
    std::optional<MsrdParams> params = msrd_params(head);
    if (!params) throw DomainError("internal: chain head is not MSRD");
    const std::vector<int> mws = msrd_weight_sequence(chain.shape, *params);
    size_t pos = 0;
    for (int val : seq) {
        while (pos < mws.size() && mws[pos] != val) ++pos;
        if (pos == mws.size())
            throw DomainError("sequence is not a subsequence of the chain head's "
                              "weight sequence");
        ++pos;
    }

    const Field& F = *chain.F;
    const int amb = chain.shape.ambient_dim();
    Mat rows(0, amb);
    for (size_t i = 0; i < seq.size();) {
        size_t jj = i;
        while (jj < seq.size() && seq[jj] == seq[i]) ++jj;
        const int value = seq[i];
        const int run = static_cast<int>(jj - i);
        if (value < chain.d_head)
            throw DomainError("chain has no member of minimum distance " +
                              std::to_string(value));
        const Code& D = chain.at_distance(value);

        // optimal anticode supported on the first `value` columns: blocks
        // before jb entirely, plus the first db+1 columns of block jb
        int prefix = 0, jb = -1, db = -1;
        for (int b = 0; b < chain.shape.t(); ++b) {
            if (value <= prefix + chain.shape.blocks[b].n) {
                jb = b;
                db = value - prefix - 1;
                break;
            }
            prefix += chain.shape.blocks[b].n;
        }
        std::vector<int> positions;
        for (int b = 0; b < jb; ++b) {
            const int off = chain.shape.block_offset(b);
            for (int c = 0; c < chain.shape.blocks[b].m * chain.shape.blocks[b].n; ++c)
                positions.push_back(off + c);
        }
        for (int r = 0; r < chain.shape.blocks[jb].m; ++r)
            for (int c = 0; c <= db; ++c) positions.push_back(chain.shape.pos(jb, r, c));
        std::sort(positions.begin(), positions.end());
        Mat ab(static_cast<int>(positions.size()), amb);
        for (size_t r = 0; r < positions.size(); ++r) ab.at(static_cast<int>(r), positions[r]) = 1;
        Subspace A{amb, std::move(ab)};

        Subspace I = subspace_intersect(F, A, D.space());
        if (I.dim() < run)
            throw DomainError("internal: anticode intersection smaller than the run");
        for (int r = 0; r < run; ++r) {
            rows.a.insert(rows.a.end(), I.basis.row(r).begin(), I.basis.row(r).end());
            ++rows.rows;
        }
        i = jj;
    }
    Code C = Code::make(chain.F, chain.shape, rows);
    if (C.dim() != static_cast<int>(seq.size()))
        throw DomainError("internal: realized code has the wrong dimension");
    return C;
}

Code realize_rank_mn(const std::vector<int>& seq, std::uint64_t q, int m, int n) {
    require_non_decreasing(seq);
    if (n > m) throw DomainError("need n <= m");
    if (seq.back() > n) throw DomainError("largest weight exceeds n");
    if (static_cast<int>(seq.size()) > m * n)
        throw DomainError("dimension exceeds m * n");
    for (size_t i = 0; i < seq.size();) {
        size_t jj = i;
        while (jj < seq.size() && seq[jj] == seq[i]) ++jj;
        if (static_cast<int>(jj - i) > m)
            throw DomainError("a constant run is longer than m");
        i = jj;
    }
    return realize_sumrank(seq, gabidulin_chain(q, m, n));
}

}  // namespace srw
