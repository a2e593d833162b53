#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "srw/constructions.hpp"
#include "srw/oracle.hpp"
#include "srw/weights.hpp"

using namespace srw;

namespace {

Mat from_rows(const std::vector<std::vector<Elem>>& rows) {
    Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    return m;
}

Code paper_code(std::uint64_t q, Elem alpha) {
    return Code::make(Field::of_order(q), Shape::hamming(6),
                      from_rows({{1, 1, 0, 0, 0, 0},
                                 {0, 0, 1, 1, 1, 0},
                                 {0, 0, 0, alpha, 1, 1}}));
}

Code random_code(std::uint64_t q, const Shape& shape, int k, std::mt19937& rng) {
    auto F = Field::of_order(q);
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(q - 1));
    for (;;) {
        Mat raw(k, shape.ambient_dim());
        for (Elem& x : raw.a) x = dist(rng);
        Code C = Code::make(F, shape, raw);
        if (C.dim() == k) return C;
    }
}

// check a claimed chain witness against the code it came from
void check_witness(const Code& C, const ChainWitness& w,
                   const std::vector<int>& expect_weights) {
    REQUIRE(w.weights == expect_weights);
    REQUIRE(w.coord_bases.size() == expect_weights.size());
    Subspace prev;
    for (size_t r = 0; r < w.coord_bases.size(); ++r) {
        const Mat& coords = w.coord_bases[r];
        REQUIRE(coords.rows == static_cast<int>(r) + 1);
        REQUIRE(coords.cols == C.dim());
        Mat rows = mat_mul(*C.F, coords, C.gen);
        Subspace sub = span_of_rows(*C.F, rows);
        CHECK(sub.dim() == static_cast<int>(r) + 1);
        CHECK(subspace_contains(*C.F, C.space(), sub));
        CHECK(span_weight(*C.F, C.shape, rows) == expect_weights[r]);
        if (r > 0) CHECK(subspace_contains(*C.F, sub, prev));
        prev = sub;
    }
}

}  // namespace

TEST_CASE("three-generator block code over F_3: weights and failed chain") {
    Code C = paper_code(3, 2);
    CHECK(generalized_weights(C) == std::vector<int>{2, 4, 6});

    // the subcode spanned by the first two generators has weights (2, 5)
    Code sub = Code::make(C.F, C.shape,
                          from_rows({{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 0}}));
    CHECK(generalized_weights(sub) == std::vector<int>{2, 5});

    // every 2-dim subcode with weight 4 avoids the weight-2 line, so the
    // greedy sequence is (2, 5, 6) and the chain condition fails
    GreedyResult g = greedy_weights(C);
    CHECK(g.g == std::vector<int>{2, 5, 6});
    check_witness(C, g.witness, {2, 5, 6});
    ChainVerdict cv = chain_condition(C);
    CHECK_FALSE(cv.holds);
    CHECK_FALSE(cv.witness.has_value());
}

TEST_CASE("Reed-Solomon weights and chain condition") {
    Code C = rs_code(7, 6, 3);
    CHECK(generalized_weights(C) == std::vector<int>{4, 5, 6});
    GreedyResult g = greedy_weights(C);
    CHECK(g.g == std::vector<int>{4, 5, 6});
    ChainVerdict cv = chain_condition(C);
    CHECK(cv.holds);
    REQUIRE(cv.witness.has_value());
    check_witness(C, *cv.witness, {4, 5, 6});
}

TEST_CASE("full ambient space attains the ambient weight sequence") {
    Shape shape({Block{2, 2}, Block{2, 2}});
    Mat id(8, 8);
    for (int i = 0; i < 8; ++i) id.at(i, i) = 1;
    Code C = Code::make(Field::of_order(2), shape, id);
    CHECK(generalized_weights(C) == ambient_weight_sequence(shape));
    CHECK(chain_condition(C).holds);
}

TEST_CASE("weights of realizer outputs satisfy the chain condition") {
    for (const std::vector<int>& seq :
         {std::vector<int>{2, 4, 6}, {1, 2, 3}, {3, 5}, {6}}) {
        Code C = realize_hamming(seq, 7);
        CHECK(generalized_weights(C) == seq);
        ChainVerdict cv = chain_condition(C);
        CHECK(cv.holds);
        REQUIRE(cv.witness.has_value());
        check_witness(C, *cv.witness, seq);
    }
}

TEST_CASE("zero and trivial codes are rejected") {
    auto F2 = Field::of_order(2);
    Code zero = Code::make(F2, Shape::hamming(3), Mat(0, 3));
    CHECK_THROWS_AS(generalized_weights(zero), DomainError);
    CHECK_THROWS_AS(greedy_weights(zero), DomainError);
}

TEST_CASE("subspace budget is enforced") {
    // F_3^{12}, dimension 6: level sets explode past a tiny subspace cap
    Code C = rs_code(13, 12, 6);
    Budget tiny;
    tiny.max_subspaces = 10;
    CHECK_THROWS_AS(generalized_weights(C, tiny), BudgetExceeded);
    CHECK_THROWS_AS(greedy_weights(C, tiny), BudgetExceeded);
}

TEST_CASE("relative weights against a zero inner code equal generalized weights") {
    Code C = paper_code(3, 2);
    Code zero = Code::make(C.F, C.shape, Mat(0, 6));
    CHECK(relative_generalized_weights(C, zero) == generalized_weights(C));
    CHECK(relative_greedy_weights(C, zero) == greedy_weights(C).g);
}

TEST_CASE("relative weight bounds and the product-pair identity") {
    // C1 = C x F_q^{k2}, C2 = 0 x F_q^{k2} has the relative weights of C
    for (const std::vector<int>& seq : {std::vector<int>{2, 4, 6}, {1, 3}}) {
        auto [C1, C2] = realize_relative(seq, 7, 8, static_cast<int>(seq.size()) + 2, 2);
        CHECK(C1.dim() == static_cast<int>(seq.size()) + 2);
        CHECK(C2.dim() == 2);
        CHECK(subspace_contains(*C1.F, C1.space(), C2.space()));
        CHECK(relative_generalized_weights(C1, C2) == seq);
        CHECK(relative_greedy_weights(C1, C2) == seq);
    }
}

TEST_CASE("relative weights of random nested pairs match the oracle") {
    std::mt19937 rng(41);
    auto F3 = Field::of_order(3);
    Shape h5 = Shape::hamming(5);
    std::uniform_int_distribution<Elem> dist(0, 2);
    int done = 0;
    while (done < 40) {
        Code C1 = random_code(3, h5, 3, rng);
        // pick a random 1-dim subcode as C2
        std::vector<Elem> coords(3);
        for (Elem& x : coords) x = dist(rng);
        if (coords == std::vector<Elem>(3, 0)) continue;
        Mat row = mat_mul(*F3, from_rows({coords}), C1.gen);
        Code C2 = Code::make(F3, h5, row);
        std::vector<int> rel = relative_generalized_weights(C1, C2);
        CHECK(rel == oracle_relative_weights(C1, C2));
        // Singleton-type bound and strict monotonicity
        for (size_t i = 0; i < rel.size(); ++i) {
            CHECK(rel[i] <= 5 - C1.dim() + static_cast<int>(i) + 1);
            if (i > 0) CHECK(rel[i - 1] < rel[i]);
        }
        // relative weights dominate the generalized weights of C1
        std::vector<int> d1 = generalized_weights(C1);
        for (size_t i = 0; i < rel.size(); ++i) CHECK(d1[i] <= rel[i]);
        ++done;
    }
}

TEST_CASE("sequence admissibility") {
    Shape s({Block{2, 2}, Block{2, 2}});
    CHECK(check_sequence(s, {2, 2, 3, 3}).valid);
    CHECK(check_sequence(s, {1, 4}).valid);
    CHECK(check_sequence(s, {}).valid);
    CHECK_FALSE(check_sequence(s, {3, 2}).valid);       // decreasing
    CHECK_FALSE(check_sequence(s, {5}).valid);          // exceeds n
    CHECK_FALSE(check_sequence(s, {1, 1, 1}).valid);    // value 1 at most m_1 = 2 times
    CHECK_FALSE(check_sequence(s, {0, 1}).valid);       // weights are positive
    SeqVerdict v = check_sequence(s, {1, 1, 1});
    CHECK(v.reason == "multiplicity of value 1 exceeds m=2 (index r=3, block j=1)");

    // raw-block variant tolerates wide blocks
    std::vector<Block> wide{Block{2, 3}};
    CHECK(check_sequence(wide, {1, 1, 2, 2, 3, 3}).valid);
    CHECK_FALSE(check_sequence(wide, {1, 1, 1}).valid);

    // Hamming shapes admit exactly the strictly increasing sequences
    Shape h = Shape::hamming(6);
    CHECK(check_sequence(h, {2, 4, 6}).valid);
    CHECK_FALSE(check_sequence(h, {2, 2}).valid);
}

TEST_CASE("admissibility equals being a subsequence of the ambient sequence") {
    const std::vector<Shape> shapes = {
        Shape::hamming(4),
        Shape({Block{2, 2}, Block{2, 2}}),
        Shape({Block{3, 2}, Block{1, 1}}),
        Shape({Block{2, 1}, Block{2, 1}, Block{1, 1}}),
    };
    for (const Shape& s : shapes) {
        const std::vector<int> ambient = ambient_weight_sequence(s);
        // every sequence with entries in [1,4] and length <= 4
        for (int len = 0; len <= 4; ++len) {
            std::vector<int> seq(len, 1);
            for (;;) {
                bool is_sub = [&] {
                    size_t i = 0;
                    for (int a : ambient)
                        if (i < seq.size() && seq[i] == a) ++i;
                    return i == seq.size();
                }();
                CHECK(check_sequence(s, seq).valid == is_sub);
                int j = len - 1;
                while (j >= 0 && seq[j] == 4) seq[j--] = 1;
                if (j < 0) break;
                ++seq[j];
            }
            if (len == 0) continue;
        }
    }
}

TEST_CASE("weight sequence determined by the parameters of an MSRD code") {
    Shape s({Block{2, 2}, Block{2, 2}});
    CHECK(msrd_weight_sequence(s, {1, 1}) == std::vector<int>{2, 2, 3, 3, 4, 4});
    CHECK(msrd_weight_sequence(s, {1, 0}) == ambient_weight_sequence(s));
    CHECK(msrd_weight_sequence(s, {2, 1}) == std::vector<int>{4, 4});
    CHECK(msrd_weight_sequence(Shape::hamming(6), {4, 0}) ==
          std::vector<int>{4, 5, 6});
    CHECK_THROWS_AS(msrd_weight_sequence(s, {1, 2}), DomainError);   // delta >= n_j
    CHECK_THROWS_AS(msrd_weight_sequence(s, {3, 0}), DomainError);   // j out of range

    // computed weights of an MSRD code agree with the closed form
    Code C = rs_code(7, 6, 3);
    auto p = msrd_params(C);
    REQUIRE(p.has_value());
    CHECK(generalized_weights(C) == msrd_weight_sequence(C.shape, *p));
}

TEST_CASE("bounds report passes on valid codes") {
    for (const Code& C : {paper_code(3, 2), rs_code(7, 6, 3),
                          realize_rank_tall({1, 2, 2}, 2)}) {
        BoundsReport rep = verify_bounds(C);
        CHECK(rep.all_pass());
        CHECK_FALSE(rep.items.empty());
        for (const auto& item : rep.items) CHECK(item.pass);
    }
}

TEST_CASE("subcode weights dominate: exhaustive on a small code") {
    Code C = paper_code(3, 2);
    std::vector<int> d = generalized_weights(C);
    enumerate_subspaces(*C.F, C.dim(), 2, [&](const Mat& coords) {
        Code sub = Code::make(C.F, C.shape, mat_mul(*C.F, coords, C.gen));
        std::vector<int> ds = generalized_weights(sub);
        for (size_t r = 0; r < ds.size(); ++r) CHECK(ds[r] >= d[r]);
        return true;
    });
}

TEST_CASE("engine matches the oracle on random codes") {
    std::mt19937 rng(97);
    const std::vector<Shape> shapes = {
        Shape::hamming(5),
        Shape({Block{2, 2}, Block{2, 2}}),
        Shape({Block{2, 2}, Block{2, 1}, Block{1, 1}}),
        Shape({Block{3, 2}, Block{2, 2}}),
    };
    for (std::uint64_t q : {2, 3}) {
        for (const Shape& s : shapes) {
            for (int k = 1; k <= 3; ++k) {
                for (int trial = 0; trial < 4; ++trial) {
                    Code C = random_code(q, s, k, rng);
                    CHECK(generalized_weights(C) == oracle_generalized_weights(C));
                    // greedy dominates generalized, level by level
                    GreedyResult g = greedy_weights(C);
                    std::vector<int> d = generalized_weights(C);
                    for (int r = 0; r < k; ++r) CHECK(g.g[r] >= d[r]);
                    CHECK(chain_condition(C).holds == (g.g == d));
                }
            }
        }
    }
}
