#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cycbound/errors.hpp"

namespace cycbound {

inline constexpr std::uint64_t kDefaultFieldBudget = std::uint64_t{1} << 31;

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class FieldElement;

// Exact finite field GF(p^m).  Elements are packed indices
// idx = c0 + c1*p + ... + c(m-1)*p^(m-1) over the polynomial basis, so the
// packed API below carries no per-element allocation; FieldElement wraps a
// packed index for the value-semantics surface.
//
// Construction is deterministic: the modulus is the lexicographically
// smallest monic irreducible polynomial of degree m over GF(p), coefficient
// vectors compared low-degree-first.  Fields are immutable and cached, and
// safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr make(std::uint64_t p, unsigned m,
                         std::uint64_t size_budget = kDefaultFieldBudget);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t size() const { return q_; }

    // Monic modulus, length m+1, constant term first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    // "p" for prime fields, "p^m" otherwise.
    std::string descriptor() const;

    bool same(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    // --- packed-index arithmetic -------------------------------------
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, long long e) const;
    std::uint64_t pow_u(std::uint64_t a, std::uint64_t e) const;

    // Least k >= 1 with a^k = 1.
    std::uint64_t element_order(std::uint64_t a) const;

    // Lexicographically smallest element of exact multiplicative order n
    // (coefficient vectors compared low-degree-first).  n must divide q-1.
    std::uint64_t root_of_unity(std::uint64_t n) const;

    // Prime-subfield constant from an integer residue (negatives allowed).
    std::uint64_t from_residue(std::int64_t r) const;

    // Low-degree-first lexicographic order on coefficient vectors.
    bool lex_less(std::uint64_t a, std::uint64_t b) const;

    std::vector<std::uint32_t> digits(std::uint64_t a) const;

    // Text form: integer for prime fields, "c0,c1,...,c(m-1)" otherwise.
    std::string to_string(std::uint64_t a) const;
    std::uint64_t parse_element(const std::string& text) const;

    FieldElement element(std::uint64_t idx) const;
    FieldElement zero() const;
    FieldElement one() const;

private:
    Field() = default;
    void init(std::uint64_t p, unsigned m);

    enum class Kind { Prime, Table, Bits, Digits };

    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow_raw(std::uint64_t a, std::uint64_t e) const;

    std::uint64_t p_ = 0;
    std::uint64_t q_ = 0;
    unsigned m_ = 0;
    Kind kind_ = Kind::Prime;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t modulus_bits_ = 0;  // packed modulus incl. x^m bit (p = 2)
    std::vector<std::pair<std::uint64_t, unsigned>> unit_group_factors_;  // of q-1
    std::vector<std::uint32_t> exp_, log_;  // discrete-log tables (q <= 2^16)
};

// Finite-field value; immutable, comparable, safe to copy across threads.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::uint64_t idx) : field_(std::move(field)), idx_(idx) {}

    const FieldPtr& field() const { return field_; }
    std::uint64_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(long long e) const;
    std::uint64_t order() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_same(const FieldElement& o) const;

    FieldPtr field_;
    std::uint64_t idx_ = 0;
};

// Spec-level constructors.
FieldPtr make_field(std::uint64_t p, unsigned m,
                    std::uint64_t size_budget = kDefaultFieldBudget);
FieldElement primitive_root_of_unity(const FieldPtr& field, std::uint64_t n);

// Multiplicative order of q modulo n (gcd(q, n) = 1): the least s with
// n | q^s - 1.
unsigned extension_degree(std::uint64_t q, std::uint64_t n);

// q = p^e for prime p; fails with "not_prime_power" otherwise.
std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q);

// --- dense linear algebra over a field (packed entries, row-major) ----

// Rank by Gaussian elimination; stops early once `stop_at` pivots are
// found (pass cols for the full rank).  Destroys mat.
unsigned matrix_rank(const Field& F, std::vector<std::uint64_t>& mat,
                     unsigned rows, unsigned cols, unsigned stop_at);

// Determinant of an n x n matrix; destroys mat.
std::uint64_t matrix_det(const Field& F, std::vector<std::uint64_t>& mat, unsigned n);

}  // namespace cycbound
