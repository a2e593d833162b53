#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "srw/linalg.hpp"

using namespace srw;

namespace {

Mat from_rows(const std::vector<std::vector<Elem>>& rows) {
    Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    return m;
}

Mat random_mat(const Field& F, int rows, int cols, std::mt19937& rng) {
    Mat m(rows, cols);
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(F.q() - 1));
    for (Elem& x : m.a) x = dist(rng);
    return m;
}

bool is_canonical_rref(const Field& F, const Mat& m) {
    RrefResult r = rref(F, m);
    return r.rank == m.rows && r.m == m;
}

}  // namespace

TEST_CASE("rref basics") {
    auto F2 = Field::of_order(2);
    CHECK(rank_of(*F2, Mat(3, 4)) == 0);
    RrefResult r = rref(*F2, from_rows({{1, 1}, {1, 1}}));
    CHECK(r.rank == 1);
    CHECK(r.m == from_rows({{1, 1}, {0, 0}}));

    auto F3 = Field::of_order(3);
    // det = 1*1 - 2*2 = -3 = 0 in F_3
    RrefResult s = rref(*F3, from_rows({{1, 2}, {2, 1}}));
    CHECK(s.rank == 1);
    CHECK(s.m == from_rows({{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent") {
    std::mt19937 rng(11);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        auto F = Field::of_order(q);
        for (int trial = 0; trial < 50; ++trial) {
            Mat m = random_mat(*F, 4, 5, rng);
            RrefResult r1 = rref(*F, m);
            RrefResult r2 = rref(*F, r1.m);
            CHECK(r1.m == r2.m);
            CHECK(r1.rank == r2.rank);
        }
    }
}

TEST_CASE("span and kernel") {
    auto F = Field::of_order(4);
    Mat id = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(span_of_rows(*F, id) == Subspace::full(3));
    CHECK(kernel(*F, id).dim() == 0);
    CHECK(span_of_rows(*F, Mat(2, 3)).dim() == 0);
    CHECK(kernel(*F, Mat(2, 3)) == Subspace::full(3));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Mat m = random_mat(*F, 3, 5, rng);
        CHECK(span_of_rows(*F, m).dim() + kernel(*F, m).dim() == 5);
        // kernel vectors really annihilate
        Subspace ker = kernel(*F, m);
        for (int r = 0; r < ker.dim(); ++r)
            for (int i = 0; i < 3; ++i) {
                Elem dot = 0;
                for (int c = 0; c < 5; ++c)
                    dot = F->add(dot, F->mul(m.at(i, c), ker.basis.at(r, c)));
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("subspace lattice operations") {
    auto F2 = Field::of_order(2);
    Subspace e1 = span_of_rows(*F2, from_rows({{1, 0}}));
    Subspace e2 = span_of_rows(*F2, from_rows({{0, 1}}));
    CHECK(subspace_intersect(*F2, e1, e1) == e1);
    CHECK(subspace_intersect(*F2, e1, e2).dim() == 0);
    CHECK(subspace_sum(*F2, e1, e2) == Subspace::full(2));
    CHECK(subspace_contains(*F2, e1, std::vector<Elem>{1, 0}));
    CHECK_FALSE(subspace_contains(*F2, e1, std::vector<Elem>{1, 1}));

    auto F3 = Field::of_order(3);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        Subspace A = span_of_rows(*F3, random_mat(*F3, 3, 4, rng));
        Subspace B = span_of_rows(*F3, random_mat(*F3, 2, 4, rng));
        Subspace S = subspace_sum(*F3, A, B);
        Subspace I = subspace_intersect(*F3, A, B);
        CHECK(A.dim() + B.dim() == S.dim() + I.dim());
        CHECK(subspace_contains(*F3, S, A));
        CHECK(subspace_contains(*F3, S, B));
        CHECK(subspace_contains(*F3, A, I));
        CHECK(subspace_contains(*F3, B, I));
        // definition check: I is exactly the vectors lying in both
        for (int r = 0; r < I.dim(); ++r) {
            CHECK(subspace_contains(*F3, A, I.basis.row(r)));
            CHECK(subspace_contains(*F3, B, I.basis.row(r)));
        }
    }
}

TEST_CASE("gaussian binomial values") {
    CHECK(gaussian_binomial(4, 0, 3) == 1);
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(5, 2, 3) == 1210);
    for (int n = 0; n <= 6; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(gaussian_binomial(n, r, 2) == gaussian_binomial(n, n - r, 2));
    CHECK(gaussian_binomial(300, 150, 3) == UINT64_MAX);  // saturates
}

TEST_CASE("subspace enumeration is complete, canonical and ordered") {
    for (std::uint64_t q : {2, 3}) {
        auto F = Field::of_order(q);
        const int kmax = q == 2 ? 5 : 4;
        for (int k = 0; k <= kmax; ++k)
            for (int r = 0; r <= k; ++r) {
                std::set<std::vector<Elem>> seen;
                std::vector<Elem> prev;
                bool first = true;
                enumerate_subspaces(*F, k, r, [&](const Mat& X) {
                    CHECK(X.rows == r);
                    CHECK(X.cols == k);
                    if (r > 0) CHECK(is_canonical_rref(*F, X));
                    CHECK(seen.insert(X.a).second);
                    if (!first) CHECK(prev < X.a);  // lexicographic stream
                    prev = X.a;
                    first = false;
                    return true;
                });
                CHECK(seen.size() == gaussian_binomial(k, r, q));
            }
    }
    // early stop is honored
    int visits = 0;
    auto F = Field::of_order(2);
    enumerate_subspaces(*F, 4, 2, [&](const Mat&) { return ++visits < 3; });
    CHECK(visits == 3);
}

TEST_CASE("mat_mul") {
    auto F = Field::of_order(5);
    Mat a = from_rows({{1, 2}, {3, 4}});
    Mat g = from_rows({{1, 0, 1}, {0, 1, 2}});
    Mat p = mat_mul(*F, a, g);
    CHECK(p == from_rows({{1, 2, 0}, {3, 4, 1}}));
}
