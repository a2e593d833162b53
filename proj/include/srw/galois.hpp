#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srw {

/// Element of a finite field, encoded as an integer in [0, q).
/// The code is the base-p digit encoding of the polynomial representative,
/// little-endian: digit i is the coefficient of x^i.
using Elem = std::uint32_t;

/// Violated mathematical precondition or malformed domain input (CLI exit 1).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration budget exceeded (CLI exit 3).
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AddKernel { Char2, OddPrime, Generic };

/// An explicit finite field F_{p^e} with exact table-based arithmetic.
/// Immutable after construction; all operations are pure.
class Field {
public:
    /// Builds F_{p^e}. If no modulus is given, the lexicographically smallest
    /// monic irreducible polynomial of degree e over F_p is selected
    /// (coefficient tuples scanned in ascending integer order).
    static std::shared_ptr<const Field> make(
        unsigned p, unsigned e,
        std::optional<std::vector<unsigned>> modulus = std::nullopt);

    /// Builds the field of order q = p^e from q alone.
    static std::shared_ptr<const Field> of_order(std::uint64_t q);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }
    /// Monic modulus, e+1 coefficients in [0,p), little-endian.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t k) const;

    /// a^{q0}, the Frobenius of the subfield F_{q0}. q0 must be p^d with d | e.
    Elem frobenius(Elem a, std::uint64_t q0) const;

    /// Multiplicative order of a (a != 0).
    std::uint64_t order(Elem a) const;

    /// The element of smallest code with multiplicative order q-1.
    Elem primitive() const { return generator_; }

    /// All q elements in ascending code order. Defines the canonical
    /// evaluation-point ordering alpha_1 = code 0, alpha_2 = code 1, ...
    std::vector<Elem> enumerate() const;

    bool is_subfield_order(std::uint64_t q0) const;

    /// Base-p digits of a, little-endian, length e.
    std::vector<unsigned> digits(Elem a) const;
    Elem from_digits(const std::vector<unsigned>& d) const;

    void check_elem(Elem a) const;

    AddKernel add_kernel() const { return add_kernel_; }

private:
    Field() = default;

    unsigned p_ = 0, e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<Elem> exp_;   // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
    Elem generator_ = 0;
    AddKernel add_kernel_ = AddKernel::Generic;

    Elem raw_mul(Elem a, Elem b) const;  // polynomial product mod modulus, no tables
    void build_tables();
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// Splits a prime power q = p^e; throws DomainError if q is not a prime power.
std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q);

/// Coordinate maps between F_{q0^m} and its subfield F_{q0}, with respect to
/// the polynomial basis 1, x, ..., x^{m-1} of the big field over the subfield.
/// The subfield is given as an independent Field of order q0 = p^d (d | e);
/// its elements are identified inside the big field through the smallest root
/// of the subfield's modulus.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldPtr big, FieldPtr sub);

    const Field& big() const { return *big_; }
    const Field& sub() const { return *sub_; }
    unsigned degree() const { return m_; }  // [big : sub]

    Elem embed(Elem s) const;
    /// Coordinates of a in the basis 1, x, ..., x^{m-1}, entries in sub.
    std::vector<Elem> expand(Elem a) const;

private:
    FieldPtr big_, sub_;
    unsigned m_ = 0;   // extension degree over sub
    unsigned d_ = 0;   // degree of sub over the prime field
    Elem root_ = 0;    // root of sub's modulus inside big
    std::vector<Elem> root_pow_;         // root^j, j < d
    std::vector<unsigned> inv_;          // inverse of the F_p basis matrix, e x e
};

}  // namespace srw
