#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cycbound/gf.hpp"

namespace cycbound {

using BigInt = boost::multiprecision::cpp_int;

// Graded lexicographic order, highest term first (canonical print order).
struct GradedLexDescending {
    bool operator()(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) const {
        std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
        std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial with exact integer coefficients, variables
// x1..x(nvars).  Zero coefficients are never stored; terms iterate in
// graded-lex order, highest first.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, BigInt, GradedLexDescending>;

    explicit MultiPoly(unsigned nvars = 0) : nvars_(nvars) {}

    static MultiPoly zero(unsigned nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(unsigned nvars, BigInt c);
    static MultiPoly one(unsigned nvars) { return constant(nvars, 1); }
    // x(i+1), i zero-based
    static MultiPoly variable(unsigned nvars, unsigned i);
    static MultiPoly monomial(unsigned nvars, Exponents e, BigInt c);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const BigInt& coefficient(const Exponents& e) const;
    std::uint64_t total_degree() const;  // 0 for the zero polynomial

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scalar_mul(const BigInt& c) const;
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Replaces x(var_index+1) by `replacement` (same variable count).
    MultiPoly substitute(unsigned var_index, const MultiPoly& replacement) const;

    // Removes a variable the polynomial does not involve; nvars shrinks by 1.
    MultiPoly drop_variable(unsigned var_index) const;

    MultiPoly permute_variables(const std::vector<unsigned>& perm) const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    std::uint64_t evaluate_packed(const Field& F,
                                  const std::vector<std::uint64_t>& point) const;

    // Quotient when den divides exactly over the integers, nullopt otherwise.
    std::optional<MultiPoly> exact_divide(const MultiPoly& den) const;

    // Total degree when all terms share it, nullopt otherwise.
    std::optional<std::uint64_t> homogeneous_degree() const;

    // gcd of coefficients (positive); 0 for the zero polynomial.
    BigInt content() const;
    // content 1 and positive leading coefficient
    MultiPoly normalized() const;

    std::string to_string() const;
    static MultiPoly parse(const std::string& text, unsigned nvars);
    // variable count inferred from the largest index used
    static MultiPoly parse(const std::string& text);

private:
    void add_term(const Exponents& e, const BigInt& c);
    void check_arity(const MultiPoly& o) const;

    unsigned nvars_;
    TermMap terms_;
};

}  // namespace cycbound
