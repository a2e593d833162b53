#include "srw/linalg.hpp"

#include <algorithm>
#include <queue>

namespace srw {

RrefResult rref(const Field& F, Mat m) {
    RrefResult res;
    int cur = 0;
    for (int c = 0; c < m.cols && cur < m.rows; ++c) {
        int pr = -1;
        for (int r = cur; r < m.rows; ++r) {
            if (m.at(r, c) != 0) { pr = r; break; }
        }
        if (pr < 0) continue;
        if (pr != cur) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(cur, j));
        }
        Elem s = F.inv(m.at(cur, c));
        if (s != 1) {
            for (int j = c; j < m.cols; ++j) m.at(cur, j) = F.mul(m.at(cur, j), s);
        }
        for (int r = 0; r < m.rows; ++r) {
            if (r == cur) continue;
            Elem f = m.at(r, c);
            if (f == 0) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(cur, j)));
        }
        res.pivots.push_back(c);
        ++cur;
    }
    res.rank = cur;
    res.m = std::move(m);
    return res;
}

int rank_of(const Field& F, Mat m) { return rref(F, std::move(m)).rank; }

Subspace Subspace::full(int ambient) {
    Mat id(ambient, ambient);
    for (int i = 0; i < ambient; ++i) id.at(i, i) = 1;
    return {ambient, std::move(id)};
}

Subspace span_of_rows(const Field& F, const Mat& m) {
    RrefResult r = rref(F, m);
    Mat basis(r.rank, m.cols);
    std::copy_n(r.m.a.begin(), static_cast<size_t>(r.rank) * m.cols, basis.a.begin());
    return {m.cols, std::move(basis)};
}

Subspace kernel(const Field& F, const Mat& m) {
    RrefResult r = rref(F, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivots) is_pivot[c] = true;
    Mat basis(m.cols - r.rank, m.cols);
    int row = 0;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        basis.at(row, f) = 1;
        for (int i = 0; i < r.rank; ++i)
            basis.at(row, r.pivots[i]) = F.neg(r.m.at(i, f));
        ++row;
    }
    return span_of_rows(F, basis);
}

Subspace subspace_sum(const Field& F, const Subspace& A, const Subspace& B) {
    if (A.ambient != B.ambient) throw DomainError("ambient dimension mismatch");
    Mat stack(A.dim() + B.dim(), A.ambient);
    std::copy(A.basis.a.begin(), A.basis.a.end(), stack.a.begin());
    std::copy(B.basis.a.begin(), B.basis.a.end(),
              stack.a.begin() + static_cast<size_t>(A.dim()) * A.ambient);
    return span_of_rows(F, stack);
}

Subspace subspace_intersect(const Field& F, const Subspace& A, const Subspace& B) {
    if (A.ambient != B.ambient) throw DomainError("ambient dimension mismatch");
    const int n = A.ambient;
    // Zassenhaus: rows [a | a] and [b | 0]; rows of the RREF with zero left
    // half have right halves spanning the intersection.
    Mat z(A.dim() + B.dim(), 2 * n);
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < n; ++j)
            z.at(i, j) = z.at(i, n + j) = A.basis.at(i, j);
    for (int i = 0; i < B.dim(); ++i)
        for (int j = 0; j < n; ++j)
            z.at(A.dim() + i, j) = B.basis.at(i, j);
    RrefResult r = rref(F, std::move(z));
    Mat rows(0, n);
    for (int i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (r.m.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        rows.rows += 1;
        for (int j = 0; j < n; ++j) rows.a.push_back(r.m.at(i, n + j));
    }
    return span_of_rows(F, rows);
}

bool subspace_contains(const Field& F, const Subspace& A, std::span<const Elem> v) {
    std::vector<Elem> w(v.begin(), v.end());
    for (int i = 0; i < A.dim(); ++i) {
        // pivot column of basis row i
        int pc = -1;
        for (int j = 0; j < A.ambient; ++j)
            if (A.basis.at(i, j) != 0) { pc = j; break; }
        if (pc < 0) continue;
        Elem f = w[pc];
        if (f == 0) continue;
        for (int j = pc; j < A.ambient; ++j)
            w[j] = F.sub(w[j], F.mul(f, A.basis.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool subspace_contains(const Field& F, const Subspace& A, const Subspace& B) {
    for (int i = 0; i < B.dim(); ++i)
        if (!subspace_contains(F, A, B.basis.row(i))) return false;
    return true;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s < a ? UINT64_MAX : s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

}  // namespace

std::uint64_t gaussian_binomial(int k, int r, std::uint64_t q) {
    if (r < 0 || r > k) throw DomainError("gaussian binomial out of range");
    std::vector<std::uint64_t> g(static_cast<size_t>(r) + 1, 0);
    g[0] = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t qj = 1;
        std::vector<std::uint64_t> next(g.size(), 0);
        next[0] = 1;
        for (int j = 1; j <= r && j <= i; ++j) {
            qj = sat_mul(qj, q);
            next[j] = sat_add(g[j - 1], sat_mul(qj, g[j]));
        }
        g = std::move(next);
    }
    return g[r];
}

namespace {

// One pivot-column choice; iterates its free entries as an odometer so the
// flattened matrices come out in ascending lexicographic order.
struct PivotStream {
    Mat cur;
    std::vector<std::pair<int, int>> freepos;  // row-major positions
    std::uint64_t q;
    bool exhausted = false;

    PivotStream(const std::vector<int>& pivots, int k, std::uint64_t q_) : q(q_) {
        const int r = static_cast<int>(pivots.size());
        cur = Mat(r, k);
        std::vector<bool> is_pivot(k, false);
        for (int c : pivots) is_pivot[c] = true;
        for (int i = 0; i < r; ++i) {
            cur.at(i, pivots[i]) = 1;
            for (int c = pivots[i] + 1; c < k; ++c)
                if (!is_pivot[c]) freepos.emplace_back(i, c);
        }
        std::sort(freepos.begin(), freepos.end());
    }

    bool advance() {
        for (size_t i = freepos.size(); i-- > 0;) {
            auto [r, c] = freepos[i];
            Elem v = cur.at(r, c) + 1;
            if (v < q) {
                cur.at(r, c) = v;
                return true;
            }
            cur.at(r, c) = 0;
        }
        exhausted = true;
        return false;
    }
};

void pivot_combinations(int k, int r, std::vector<std::vector<int>>& out) {
    std::vector<int> comb(r);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r) {
            out.push_back(comb);
            return;
        }
        for (int c = start; c <= k - (r - depth); ++c) {
            comb[depth] = c;
            rec(c + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

void enumerate_subspaces(const Field& F, int k, int r,
                         const std::function<bool(const Mat&)>& visit) {
    if (r < 0 || r > k) throw DomainError("subspace dimension out of range");
    if (r == 0) {
        visit(Mat(0, k));
        return;
    }
    std::vector<std::vector<int>> combs;
    pivot_combinations(k, r, combs);
    std::vector<PivotStream> streams;
    streams.reserve(combs.size());
    for (const auto& c : combs) streams.emplace_back(c, k, F.q());

    auto cmp = [&streams](size_t x, size_t y) {
        return streams[y].cur.a < streams[x].cur.a;  // min-heap
    };
    std::priority_queue<size_t, std::vector<size_t>, decltype(cmp)> heap(cmp);
    for (size_t i = 0; i < streams.size(); ++i) heap.push(i);
    while (!heap.empty()) {
        size_t i = heap.top();
        heap.pop();
        if (!visit(streams[i].cur)) return;
        if (streams[i].advance()) heap.push(i);
    }
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& g) {
    if (x.cols != g.rows) throw DomainError("matrix dimension mismatch");
    Mat out(x.rows, g.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int l = 0; l < x.cols; ++l) {
            Elem f = x.at(i, l);
            if (f == 0) continue;
            for (int j = 0; j < g.cols; ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(f, g.at(l, j)));
        }
    }
    return out;
}

}  // namespace srw
