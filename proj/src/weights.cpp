#include "srw/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "srw/kernels.hpp"

namespace srw {

namespace {

int span_weight_prefix(const Field& F, const Shape& shape, const Mat& rows, int nrows) {
    Mat view(nrows, rows.cols);
    std::copy_n(rows.a.begin(), static_cast<size_t>(nrows) * rows.cols, view.a.begin());
    return span_weight(F, shape, view);
}

// Depth-first search over canonical RREF coordinate matrices of dimension r,
// pruned on the weight of the partial span (monotone under row extension).
// When trivial_against is set, branches whose partial span meets it
// nontrivially are also cut (the intersection can only grow).
class SubcodeSearch {
public:
    SubcodeSearch(const Code& C, const Budget& budget, const Subspace* trivial_against)
        : C_(C), F_(*C.F), k_(C.dim()), q_(static_cast<Elem>(C.F->q())),
          budget_(budget), trivial_against_(trivial_against) {}

    // Minimum wt over r-dimensional subcodes. seed must be an attained upper
    // bound, or INT_MAX-like sentinel (> any weight) when none is known.
    // Stops early once the minimum reaches lower.
    int min_weight(int r, int seed, int lower, std::uint64_t& nodes) {
        r_ = r;
        best_ = seed;
        lower_ = lower;
        stop_ = false;
        nodes_ = &nodes;
        coord_ = Mat(r, k_);
        words_ = Mat(r, C_.ambient());
        if (best_ <= lower_) return best_;
        std::vector<int> pivots;
        choose_pivots(pivots, 0);
        return best_;
    }

private:
    void choose_pivots(std::vector<int>& pivots, int start) {
        if (stop_) return;
        if (static_cast<int>(pivots.size()) == r_) {
            pivots_ = pivots;
            fill_row(0);
            return;
        }
        const int depth = static_cast<int>(pivots.size());
        for (int c = start; c <= k_ - (r_ - depth); ++c) {
            pivots.push_back(c);
            choose_pivots(pivots, c + 1);
            pivots.pop_back();
            if (stop_) return;
        }
    }

    bool prefix_ok(int i) {
        if (++(*nodes_) > budget_.max_subspaces)
            throw BudgetExceeded("subspace enumeration budget exceeded");
        if (trivial_against_ != nullptr) {
            // the prefix rows are independent; the sum with the constraint
            // space must have full dimension
            Mat stack(i + trivial_against_->dim(), k_);
            std::copy_n(coord_.a.begin(), static_cast<size_t>(i) * k_, stack.a.begin());
            std::copy(trivial_against_->basis.a.begin(), trivial_against_->basis.a.end(),
                      stack.a.begin() + static_cast<size_t>(i) * k_);
            if (rank_of(F_, std::move(stack)) < i + trivial_against_->dim()) return false;
        }
        int w = span_weight_prefix(F_, C_.shape, words_, i);
        if (i == r_) {
            if (w < best_) {
                best_ = w;
                if (best_ <= lower_) stop_ = true;
            }
            return false;
        }
        return w < best_;
    }

    void fill_row(int i) {
        if (stop_) return;
        const int piv = pivots_[i];
        std::fill(coord_.row(i).begin(), coord_.row(i).end(), 0);
        coord_.at(i, piv) = 1;
        std::copy(C_.gen.row(piv).begin(), C_.gen.row(piv).end(), words_.row(i).begin());

        std::vector<int> free_cols;
        for (int c = piv + 1; c < k_; ++c)
            if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end())
                free_cols.push_back(c);

        while (true) {
            if (prefix_ok(i + 1)) fill_row(i + 1);
            if (stop_) return;
            // odometer step over the free entries of this row
            size_t j = 0;
            for (; j < free_cols.size(); ++j) {
                const int c = free_cols[j];
                vec_add(F_, words_.row(i), C_.gen.row(c));
                coord_.at(i, c) = coord_.at(i, c) + 1 == q_ ? 0 : coord_.at(i, c) + 1;
                if (coord_.at(i, c) != 0) break;
            }
            if (j == free_cols.size()) break;
        }
    }

    const Code& C_;
    const Field& F_;
    const int k_;
    const Elem q_;
    Budget budget_;
    const Subspace* trivial_against_;
    int r_ = 0, best_ = 0, lower_ = 0;
    bool stop_ = false;
    std::uint64_t* nodes_ = nullptr;
    std::vector<int> pivots_;
    Mat coord_, words_;
};

constexpr int kInfWeight = 1 << 29;

}  // namespace

std::vector<int> generalized_weights(const Code& C, const Budget& budget) {
    const int k = C.dim();
    if (k == 0) throw DomainError("generalized weights of the zero code are undefined");
    std::vector<int> d(k);
    std::uint64_t nodes = 0;
    SubcodeSearch search(C, budget, nullptr);
    int lower = 1;
    for (int r = 1; r <= k; ++r) {
        // the span of the first r generator rows is an attained upper bound
        int seed = span_weight_prefix(*C.F, C.shape, C.gen, r);
        d[r - 1] = search.min_weight(r, seed, lower, nodes);
        lower = d[r - 1];
    }
    return d;
}

namespace {

struct GreedyLevel {
    // canonical coordinate RREF -> index of the first parent in the previous
    // level's member list
    std::map<std::vector<Elem>, int> members;
    int weight = kInfWeight;
};

// one representative per 1-dimensional subspace of F_q^k (leading entry 1)
void for_each_projective_vector(const Field& F, int k,
                                const std::function<void(const std::vector<Elem>&)>& fn) {
    const Elem q = static_cast<Elem>(F.q());
    std::vector<Elem> v(k, 0);
    for (int lead = k - 1; lead >= 0; --lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        while (true) {
            fn(v);
            int j = k - 1;
            for (; j > lead; --j) {
                if (++v[j] < q) break;
                v[j] = 0;
            }
            if (j == lead) break;
        }
    }
}

GreedyResult greedy_levels(const Code& C, const Budget& budget, const Subspace* trivial_against,
                           int max_level) {
    const Field& F = *C.F;
    const int k = C.dim();
    std::uint64_t nodes = 0;

    auto meets_trivially = [&](const Mat& coord) {
        if (trivial_against == nullptr) return true;
        Mat stack(coord.rows + trivial_against->dim(), k);
        std::copy(coord.a.begin(), coord.a.end(), stack.a.begin());
        std::copy(trivial_against->basis.a.begin(), trivial_against->basis.a.end(),
                  stack.a.begin() + coord.a.size());
        return rank_of(F, std::move(stack)) == coord.rows + trivial_against->dim();
    };

    auto wt_of = [&](const Mat& coord) {
        return span_weight(F, C.shape, mat_mul(F, coord, C.gen));
    };

    GreedyResult out;
    std::vector<GreedyLevel> levels;

    for (int r = 1; r <= max_level; ++r) {
        GreedyLevel level;
        auto consider = [&](const Mat& coord, int parent) {
            if (++nodes > budget.max_subspaces)
                throw BudgetExceeded("greedy enumeration budget exceeded");
            if (!meets_trivially(coord)) return;
            int w = wt_of(coord);
            if (w > level.weight) return;
            if (w < level.weight) {
                level.weight = w;
                level.members.clear();
            }
            level.members.emplace(coord.a, parent);
        };
        if (r == 1) {
            for_each_projective_vector(F, k, [&](const std::vector<Elem>& v) {
                Mat coord(1, k);
                coord.a = v;
                consider(coord, -1);
            });
        } else {
            const GreedyLevel& prev = levels.back();
            int parent_idx = 0;
            for (const auto& [pkey, pparent] : prev.members) {
                Mat pbasis(r - 1, k);
                pbasis.a = pkey;
                Subspace pspace{k, pbasis};
                for_each_projective_vector(F, k, [&](const std::vector<Elem>& v) {
                    if (subspace_contains(F, pspace, v)) return;
                    Mat stack(r, k);
                    std::copy(pkey.begin(), pkey.end(), stack.a.begin());
                    std::copy(v.begin(), v.end(), stack.a.begin() + pkey.size());
                    Subspace s = span_of_rows(F, stack);
                    consider(s.basis, parent_idx);
                });
                ++parent_idx;
            }
        }
        if (level.members.empty())
            throw DomainError("greedy level is empty");  // cannot happen for valid inputs
        out.g.push_back(level.weight);
        levels.push_back(std::move(level));
    }

    // one witness chain: walk first-parent links from the lexicographically
    // first member of the top level
    std::vector<int> pick(max_level, 0);
    if (max_level > 0) {
        pick[max_level - 1] = 0;
        for (int r = max_level; r >= 2; --r) {
            auto it = levels[r - 1].members.begin();
            std::advance(it, pick[r - 1]);
            pick[r - 2] = it->second;
        }
        for (int r = 1; r <= max_level; ++r) {
            auto it = levels[r - 1].members.begin();
            std::advance(it, pick[r - 1]);
            Mat coord(r, k);
            coord.a = it->first;
            out.witness.coord_bases.push_back(std::move(coord));
            out.witness.weights.push_back(levels[r - 1].weight);
        }
    }
    return out;
}

}  // namespace

GreedyResult greedy_weights(const Code& C, const Budget& budget) {
    if (C.dim() == 0) throw DomainError("greedy weights of the zero code are undefined");
    return greedy_levels(C, budget, nullptr, C.dim());
}

ChainVerdict chain_condition(const Code& C, const Budget& budget) {
    std::vector<int> d = generalized_weights(C, budget);
    GreedyResult g = greedy_weights(C, budget);
    if (d == g.g) return {true, std::move(g.witness)};
    return {false, std::nullopt};
}

namespace {

// C2's coordinates against C1's canonical generator rows; errors unless
// C2 is a (proper, for proper=true) subcode of C1.
Subspace coordinates_in(const Code& C1, const Code& C2) {
    if (C1.F->q() != C2.F->q() || !(C1.shape == C2.shape))
        throw DomainError("codes live in different ambient spaces");
    const Field& F = *C1.F;
    Mat coord(C2.dim(), C1.dim());
    for (int i = 0; i < C2.dim(); ++i) {
        // with G1 in RREF, coordinates are read off at the pivot columns
        std::vector<Elem> w(C2.gen.row(i).begin(), C2.gen.row(i).end());
        for (int r = 0; r < C1.dim(); ++r) {
            int pc = -1;
            for (int j = 0; j < C1.gen.cols; ++j)
                if (C1.gen.at(r, j) != 0) { pc = j; break; }
            coord.at(i, r) = w[pc];
            Elem f = w[pc];
            if (f != 0)
                for (int j = pc; j < C1.gen.cols; ++j)
                    w[j] = F.sub(w[j], F.mul(f, C1.gen.at(r, j)));
        }
        if (!std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; }))
            throw DomainError("C2 is not a subcode of C1");
    }
    return span_of_rows(F, coord);
}

void require_relative_pair(const Code& C1, const Code& C2) {
    if (!C1.shape.is_hamming())
        throw DomainError("relative weights are defined for block codes only");
    if (C2.dim() >= C1.dim())
        throw DomainError("relative weights require C2 strictly inside C1");
}

}  // namespace

std::vector<int> relative_generalized_weights(const Code& C1, const Code& C2,
                                              const Budget& budget) {
    require_relative_pair(C1, C2);
    Subspace c2coord = coordinates_in(C1, C2);
    const int k = C1.dim() - C2.dim();
    std::vector<int> d(k);
    std::uint64_t nodes = 0;
    SubcodeSearch search(C1, budget, &c2coord);
    int lower = 1;
    for (int r = 1; r <= k; ++r) {
        d[r - 1] = search.min_weight(r, kInfWeight, lower, nodes);
        if (d[r - 1] >= kInfWeight)
            throw DomainError("no subcode meets C2 trivially");  // cannot happen for r <= k1-k2
        lower = d[r - 1];
    }
    return d;
}

std::vector<int> relative_greedy_weights(const Code& C1, const Code& C2,
                                         const Budget& budget) {
    require_relative_pair(C1, C2);
    Subspace c2coord = coordinates_in(C1, C2);
    GreedyResult g = greedy_levels(C1, budget, &c2coord, C1.dim() - C2.dim());
    return g.g;
}

SeqVerdict check_sequence(const Shape& shape, const std::vector<int>& seq) {
    return check_sequence(shape.blocks, seq);
}

SeqVerdict check_sequence(const std::vector<Block>& blocks, const std::vector<int>& seq) {
    int n = 0;
    for (const Block& b : blocks) n += b.n;
    std::map<int, int> count;
    for (size_t r = 0; r < seq.size(); ++r) {
        std::ostringstream reason;
        int v = seq[r];
        if (v <= 0) {
            reason << "entry " << v << " at index r=" << (r + 1) << " is not positive";
            return {false, reason.str()};
        }
        if (r > 0 && v < seq[r - 1]) {
            reason << "sequence decreases at index r=" << (r + 1);
            return {false, reason.str()};
        }
        if (v > n) {
            reason << "entry " << v << " at index r=" << (r + 1)
                   << " exceeds the total column count n=" << n;
            return {false, reason.str()};
        }
        int j = 0, prefix = 0;
        while (v > prefix + blocks[j].n) prefix += blocks[j++].n;
        if (++count[v] > blocks[j].m) {
            reason << "multiplicity of value " << v << " exceeds m=" << blocks[j].m
                   << " (index r=" << (r + 1) << ", block j=" << (j + 1) << ")";
            return {false, reason.str()};
        }
    }
    return {true, ""};
}

std::vector<int> msrd_weight_sequence(const Shape& shape, const MsrdParams& params) {
    if (params.j < 1 || params.j > shape.t())
        throw DomainError("block index out of range");
    const Block& b = shape.blocks[params.j - 1];
    if (params.delta < 0 || params.delta > b.n - 1)
        throw DomainError("delta out of range");
    int dim = 0;
    for (int i = params.j - 1; i < shape.t(); ++i)
        dim += shape.blocks[i].m * shape.blocks[i].n;
    dim -= params.delta * b.m;
    std::vector<int> amb = ambient_weight_sequence(shape);
    return {amb.end() - dim, amb.end()};
}

bool BoundsReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

BoundsReport verify_bounds(const Code& C, const Budget& budget) {
    BoundsReport rep;
    const Shape& shape = C.shape;
    const int k = C.dim();
    const int n = shape.n_total();
    std::vector<int> d = generalized_weights(C, budget);
    auto add = [&rep](std::string name, bool pass, std::string detail = "") {
        rep.items.push_back({std::move(name), pass, std::move(detail)});
    };

    int dist = min_distance(C, budget.max_codewords);
    add("d1_equals_min_distance", d[0] == dist);
    add("monotone", std::is_sorted(d.begin(), d.end()));
    add("dk_at_most_n", d[k - 1] <= n);

    {
        // d_{r + sum_{i<j} n_i m_i + delta m_j} >= d_r + sum_{i<j} n_i + delta
        bool ok = true;
        std::string detail;
        for (int j = 1; j <= shape.t() && ok; ++j) {
            int prefix_dim = 0, prefix_n = 0;
            for (int i = 0; i < j - 1; ++i) {
                prefix_dim += shape.blocks[i].m * shape.blocks[i].n;
                prefix_n += shape.blocks[i].n;
            }
            for (int delta = 1; delta <= shape.blocks[j - 1].n && ok; ++delta) {
                int shift = prefix_dim + delta * shape.blocks[j - 1].m;
                for (int r = 1; r + shift <= k; ++r) {
                    if (d[r + shift - 1] < d[r - 1] + prefix_n + delta) {
                        ok = false;
                        detail = "fails at r=" + std::to_string(r) + ", j=" + std::to_string(j) +
                                 ", delta=" + std::to_string(delta);
                        break;
                    }
                }
            }
        }
        add("shifted_inequality", ok, detail);
    }

    if (shape.is_hamming()) {
        bool ok = true;
        for (int r = 1; r < k; ++r)
            if (d[r] <= d[r - 1]) ok = false;
        add("hamming_strict_increase", ok);
    }

    {
        bool ok = true;
        std::string detail;
        for (int r = 1; r <= k && ok; ++r) {
            int prefix_n = 0;
            for (int j = 1; j <= shape.t() && ok; ++j) {
                int suffix_dim = 0;
                for (int i = j - 1; i < shape.t(); ++i)
                    suffix_dim += shape.blocks[i].m * shape.blocks[i].n;
                for (int delta = 0; delta <= shape.blocks[j - 1].n - 1; ++delta) {
                    if (d[r - 1] - 1 < prefix_n + delta) continue;
                    if (k > suffix_dim - shape.blocks[j - 1].m * delta + r - 1) {
                        ok = false;
                        detail = "fails at r=" + std::to_string(r) + ", j=" + std::to_string(j) +
                                 ", delta=" + std::to_string(delta);
                        break;
                    }
                }
                prefix_n += shape.blocks[j - 1].n;
            }
        }
        add("singleton_bound", ok, detail);
    }

    {
        int bound = 0;
        for_each_codeword_rep(C, budget.max_codewords, [&](std::span<const Elem> w) {
            int v = 0;
            for (int i = 0; i < shape.t(); ++i) {
                const Block& b = shape.blocks[i];
                Mat blk(b.m, b.n);
                const Elem* base = w.data() + shape.block_offset(i);
                std::copy_n(base, static_cast<size_t>(b.m) * b.n, blk.a.begin());
                v += b.m * rank_of(*C.F, std::move(blk));
            }
            bound = std::max(bound, v);
        });
        add("anticode_bound", k <= bound);
    }

    {
        // d_{r+m_j} > sum_{i<j} n_i implies d_{r+m_j} >= d_r + 1
        bool ok = true;
        std::string detail;
        int prefix_n = 0;
        for (int j = 1; j <= shape.t() && ok; ++j) {
            const int mj = shape.blocks[j - 1].m;
            for (int r = 1; r + mj <= k; ++r) {
                if (d[r + mj - 1] > prefix_n && d[r + mj - 1] < d[r - 1] + 1) {
                    ok = false;
                    detail = "fails at r=" + std::to_string(r) + ", j=" + std::to_string(j);
                    break;
                }
            }
            prefix_n += shape.blocks[j - 1].n;
        }
        add("shift_by_mj", ok, detail);
    }

    return rep;
}

}  // namespace srw
