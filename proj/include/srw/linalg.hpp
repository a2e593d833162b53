#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "srw/galois.hpp"

namespace srw {

/// Dense row-major matrix over a fixed field.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Elem at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    std::span<Elem> row(int r) { return {a.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)}; }
    std::span<const Elem> row(int r) const { return {a.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)}; }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct RrefResult {
    Mat m;
    int rank = 0;
    std::vector<int> pivots;
};

/// Unique reduced row echelon form; deterministic pivot choice
/// (smallest column, then smallest row index).
RrefResult rref(const Field& F, Mat m);

int rank_of(const Field& F, Mat m);

/// A subspace of F_q^ambient in canonical form: the basis matrix is the RREF,
/// so equal subspaces have equal representations.
struct Subspace {
    int ambient = 0;
    Mat basis;  // dim x ambient, RREF

    int dim() const { return basis.rows; }
    static Subspace zero(int ambient) { return {ambient, Mat(0, ambient)}; }
    static Subspace full(int ambient);
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Subspace span_of_rows(const Field& F, const Mat& m);
Subspace kernel(const Field& F, const Mat& m);

Subspace subspace_sum(const Field& F, const Subspace& A, const Subspace& B);
Subspace subspace_intersect(const Field& F, const Subspace& A, const Subspace& B);

/// Membership of a vector / containment of B in A.
bool subspace_contains(const Field& F, const Subspace& A, std::span<const Elem> v);
bool subspace_contains(const Field& F, const Subspace& A, const Subspace& B);

/// q-binomial coefficient [k choose r]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int k, int r, std::uint64_t q);

/// Yields every r-dimensional subspace of F_q^k exactly once as a canonical
/// RREF matrix, in lexicographic order of the flattened entries (element
/// codes). The visitor returns false to stop the stream.
void enumerate_subspaces(const Field& F, int k, int r,
                         const std::function<bool(const Mat&)>& visit);

/// Matrix product (rows of x expressed against rows of g): (r x k) * (k x n).
Mat mat_mul(const Field& F, const Mat& x, const Mat& g);

}  // namespace srw
