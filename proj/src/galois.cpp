#include "srw/galois.hpp"

#include <algorithm>
#include <numeric>

namespace srw {

namespace {

constexpr std::uint64_t kMaxQ = 1u << 16;

// Polynomials over F_p as little-endian coefficient vectors.
using Poly = std::vector<unsigned>;

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic and nonzero.
Poly poly_rem(Poly f, const Poly& g, unsigned p) {
    poly_trim(f);
    const size_t dg = g.size() - 1;
    while (f.size() > dg) {
        unsigned c = f.back();
        size_t shift = f.size() - 1 - dg;
        if (c != 0) {
            for (size_t i = 0; i <= dg; ++i) {
                unsigned sub = (c * g[i]) % p;
                unsigned& t = f[shift + i];
                t = (t + p - sub) % p;
            }
        }
        f.pop_back();
        poly_trim(f);
    }
    return f;
}

// Monic degree-e polynomial with coefficient tuple encoded by code
// (base-p digits give the coefficients below the leading term).
Poly poly_from_code(std::uint64_t code, unsigned p, unsigned e) {
    Poly f(e + 1, 0);
    for (unsigned i = 0; i < e; ++i) {
        f[i] = static_cast<unsigned>(code % p);
        code /= p;
    }
    f[e] = 1;
    return f;
}

bool poly_irreducible(const Poly& f, unsigned p) {
    const unsigned e = static_cast<unsigned>(f.size()) - 1;
    if (e == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // trial division by all monic polynomials of degree 1..e/2
    std::uint64_t pk = 1;
    for (unsigned d = 1; 2 * d <= e; ++d) {
        pk *= p;
        for (std::uint64_t code = 0; code < pk; ++code) {
            Poly g = poly_from_code(code, p, d);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw DomainError("field order must be at least 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) { p = d; break; }
    }
    unsigned e = 0;
    std::uint64_t r = q;
    while (r % p == 0) { r /= p; ++e; }
    if (r != 1) throw DomainError("order " + std::to_string(q) + " is not a prime power");
    return {p, e};
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned e,
                                         std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw DomainError("extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ) throw DomainError("field order exceeds 2^16");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = q;

    if (e == 1) {
        f->modulus_ = {0, 1};  // x, by convention (unused)
        if (modulus && *modulus != f->modulus_)
            throw DomainError("prime fields use the fixed modulus x");
    } else if (modulus) {
        if (modulus->size() != e + 1 || modulus->back() != 1)
            throw DomainError("modulus must be monic of degree e");
        for (unsigned c : *modulus)
            if (c >= p) throw DomainError("modulus coefficient out of range");
        if (!poly_irreducible(*modulus, p))
            throw DomainError("supplied modulus is reducible over F_p");
        f->modulus_ = *modulus;
    } else {
        std::uint64_t count = q;  // p^e coefficient tuples
        bool found = false;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly cand = poly_from_code(code, p, e);
            if (poly_irreducible(cand, p)) {
                f->modulus_ = cand;
                found = true;
                break;
            }
        }
        if (!found) throw DomainError("no irreducible modulus found");  // cannot happen
    }

    if (p == 2) f->add_kernel_ = AddKernel::Char2;
    else if (e == 1) f->add_kernel_ = AddKernel::OddPrime;
    else f->add_kernel_ = AddKernel::Generic;

    f->build_tables();
    return f;
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
    auto [p, e] = factor_prime_power(q);
    return make(static_cast<unsigned>(p), e);
}

Elem Field::raw_mul(Elem a, Elem b) const {
    // schoolbook product of the digit polynomials, reduced mod modulus
    std::vector<unsigned> da = digits(a), db = digits(b);
    std::vector<unsigned> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (unsigned i = 2 * e_ - 2; i >= e_; --i) {
        unsigned c = prod[i];
        if (c != 0) {
            prod[i] = 0;
            for (unsigned j = 0; j < e_; ++j) {
                unsigned sub = (c * modulus_[j]) % p_;
                prod[i - e_ + j] = (prod[i - e_ + j] + p_ - sub) % p_;
            }
        }
        if (i == e_) break;
    }
    prod.resize(e_);
    return from_digits(prod);
}

void Field::build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (Elem cand = 1; cand < q_; ++cand) {
        // compute the multiplicative order of cand by iterating powers
        Elem a = cand;
        std::uint64_t ord = 1;
        while (a != 1) {
            a = raw_mul(a, cand);
            ++ord;
        }
        if (ord == q_ - 1) {
            generator_ = cand;
            break;
        }
    }
    Elem a = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = a;
        log_[a] = static_cast<std::uint32_t>(i);
        a = raw_mul(a, generator_);
    }
}

void Field::check_elem(Elem a) const {
    if (a >= q_) throw DomainError("element code out of range for this field");
}

Elem Field::add(Elem a, Elem b) const {
    switch (add_kernel_) {
        case AddKernel::Char2: return a ^ b;
        case AddKernel::OddPrime: {
            Elem s = a + b;
            return s >= q_ ? s - static_cast<Elem>(q_) : s;
        }
        default: {
            Elem r = 0, mult = 1;
            for (unsigned i = 0; i < e_; ++i) {
                unsigned s = (a % p_ + b % p_) % p_;
                r += s * mult;
                mult *= p_;
                a /= p_;
                b /= p_;
            }
            return r;
        }
    }
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem r = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        unsigned d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DomainError("division by zero in F_q");
    std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Elem Field::pow(Elem a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

bool Field::is_subfield_order(std::uint64_t q0) const {
    std::uint64_t v = q0;
    unsigned d = 0;
    while (v > 1 && v % p_ == 0) { v /= p_; ++d; }
    return v == 1 && d >= 1 && e_ % d == 0;
}

Elem Field::frobenius(Elem a, std::uint64_t q0) const {
    if (!is_subfield_order(q0))
        throw DomainError(std::to_string(q0) + " is not a subfield order of this field");
    return pow(a, q0);
}

std::uint64_t Field::order(Elem a) const {
    if (a == 0) throw DomainError("order of zero is undefined");
    return (q_ - 1) / std::gcd<std::uint64_t>(log_[a], q_ - 1);
}

std::vector<Elem> Field::enumerate() const {
    std::vector<Elem> out(q_);
    std::iota(out.begin(), out.end(), Elem{0});
    return out;
}

std::vector<unsigned> Field::digits(Elem a) const {
    std::vector<unsigned> d(e_);
    for (unsigned i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<unsigned>& d) const {
    Elem a = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        a += d[i] * mult;
        mult *= p_;
    }
    return a;
}

namespace {

// Gauss-Jordan inverse of an n x n matrix over F_p. Entries row-major.
std::vector<unsigned> invert_mod_p(std::vector<unsigned> m, unsigned n, unsigned p) {
    auto inv_scalar = [p](unsigned a) {
        for (unsigned x = 1; x < p; ++x)
            if ((a * x) % p == 1) return x;
        throw DomainError("not invertible mod p");
    };
    std::vector<unsigned> id(n * n, 0);
    for (unsigned i = 0; i < n; ++i) id[i * n + i] = 1;
    for (unsigned c = 0; c < n; ++c) {
        unsigned pr = c;
        while (pr < n && m[pr * n + c] == 0) ++pr;
        if (pr == n) throw DomainError("basis matrix is singular");
        if (pr != c) {
            for (unsigned j = 0; j < n; ++j) {
                std::swap(m[pr * n + j], m[c * n + j]);
                std::swap(id[pr * n + j], id[c * n + j]);
            }
        }
        unsigned s = inv_scalar(m[c * n + c]);
        for (unsigned j = 0; j < n; ++j) {
            m[c * n + j] = (m[c * n + j] * s) % p;
            id[c * n + j] = (id[c * n + j] * s) % p;
        }
        for (unsigned r = 0; r < n; ++r) {
            if (r == c) continue;
            unsigned f = m[r * n + c];
            if (f == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                m[r * n + j] = (m[r * n + j] + p - (f * m[c * n + j]) % p) % p;
                id[r * n + j] = (id[r * n + j] + p - (f * id[c * n + j]) % p) % p;
            }
        }
    }
    return id;
}

}  // namespace

SubfieldEmbedding::SubfieldEmbedding(FieldPtr big, FieldPtr sub)
    : big_(std::move(big)), sub_(std::move(sub)) {
    if (big_->p() != sub_->p() || big_->e() % sub_->e() != 0)
        throw DomainError("inconsistent subfield");
    d_ = sub_->e();
    m_ = big_->e() / d_;

    // locate the subfield inside big as the smallest root of sub's modulus
    if (d_ == 1) {
        root_ = 0;
    } else {
        const auto& g = sub_->modulus();
        bool found = false;
        for (Elem u = 0; u < big_->q(); ++u) {
            Elem v = 0;
            for (size_t i = g.size(); i-- > 0;)
                v = big_->add(big_->mul(v, u), g[i]);
            if (v == 0) { root_ = u; found = true; break; }
        }
        if (!found) throw DomainError("subfield modulus has no root");  // cannot happen
    }

    root_pow_.assign(d_, 1);
    for (unsigned j = 1; j < d_; ++j) root_pow_[j] = big_->mul(root_pow_[j - 1], root_);

    // F_p basis of big: root^j * x^i, i < m, j < d; columns are digit vectors
    const unsigned n = big_->e();
    const Elem x = n >= 2 ? static_cast<Elem>(big_->p()) : 1;
    std::vector<unsigned> mat(static_cast<size_t>(n) * n, 0);
    Elem xi = 1;
    for (unsigned i = 0; i < m_; ++i) {
        for (unsigned j = 0; j < d_; ++j) {
            Elem b = big_->mul(root_pow_[j], xi);
            auto dg = big_->digits(b);
            unsigned col = i * d_ + j;
            for (unsigned r = 0; r < n; ++r) mat[r * n + col] = dg[r];
        }
        xi = big_->mul(xi, x);
    }
    inv_ = invert_mod_p(std::move(mat), n, big_->p());
}

Elem SubfieldEmbedding::embed(Elem s) const {
    sub_->check_elem(s);
    auto dg = sub_->digits(s);
    Elem r = 0;
    for (unsigned j = 0; j < d_; ++j)
        r = big_->add(r, big_->mul(dg[j], root_pow_[j]));
    return r;
}

std::vector<Elem> SubfieldEmbedding::expand(Elem a) const {
    big_->check_elem(a);
    const unsigned n = big_->e();
    auto dg = big_->digits(a);
    std::vector<Elem> out(m_, 0);
    const unsigned p = big_->p();
    for (unsigned i = 0; i < m_; ++i) {
        std::vector<unsigned> coeff(d_, 0);
        for (unsigned j = 0; j < d_; ++j) {
            unsigned row = i * d_ + j;
            unsigned acc = 0;
            for (unsigned c = 0; c < n; ++c)
                acc = (acc + inv_[row * n + c] * dg[c]) % p;
            coeff[j] = acc;
        }
        // coefficient in the subfield, encoded with its own digit convention
        Elem s = 0, mult = 1;
        for (unsigned j = 0; j < d_; ++j) {
            s += coeff[j] * mult;
            mult *= p;
        }
        out[i] = s;
    }
    return out;
}

}  // namespace srw
