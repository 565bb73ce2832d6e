#pragma once

#include <string>
#include <vector>

#include "cycbound/mpoly.hpp"

namespace cycbound {

// Strictly increasing, nonempty set of non-negative integers.  Used for row
// exponent sets, defining sets, and certificate index tuples.
class ExponentSet {
public:
    explicit ExponentSet(std::vector<unsigned> elems);
    ExponentSet(std::initializer_list<unsigned> elems)
        : ExponentSet(std::vector<unsigned>(elems)) {}

    static ExponentSet parse(const std::string& csv);

    const std::vector<unsigned>& elems() const { return elems_; }
    unsigned size() const { return static_cast<unsigned>(elems_.size()); }
    unsigned max() const { return elems_.back(); }
    bool contains(unsigned v) const;
    ExponentSet shifted(unsigned c) const;

    bool operator==(const ExponentSet& o) const { return elems_ == o.elems_; }
    std::string to_string() const;  // "0,1,3,4"

private:
    std::vector<unsigned> elems_;
};

// Partition attached to the exponent set: lambda_i = u_(m+1-i) - (m-i),
// weakly decreasing, trailing zeros trimmed.
std::vector<unsigned> schur_partition(const ExponentSet& U);

// Generalized Vandermonde determinant: det of the m x m matrix whose rows
// are (x1^i, ..., xm^i) for i in U, rows ordered by increasing exponent.
MultiPoly delta(const ExponentSet& U);

// The symmetric quotient delta(U) / delta({0..m-1}), i.e. the Schur
// polynomial of schur_partition(U), built by the branching rule over one
// variable at a time.  Satisfies f_poly(U) * delta({0..m-1}) == delta(U).
MultiPoly f_poly(const ExponentSet& U);

// Schur polynomial in `nvars` variables for an arbitrary partition.
MultiPoly schur_poly(const std::vector<unsigned>& partition, unsigned nvars);

// Determinant value at a point by Gaussian elimination over the field;
// never expands the symbolic polynomial.
FieldElement delta_eval(const ExponentSet& U, const std::vector<FieldElement>& coords);
std::uint64_t delta_eval_packed(const ExponentSet& U, const Field& F,
                                const std::vector<std::uint64_t>& coords);

// Evaluates a family of Schur polynomials at shared points through the
// Jacobi-Trudi determinant in complete homogeneous symmetric values.  The
// identity holds at every point, including those with zero or repeated
// coordinates, which is what point enumeration needs.  Reusable scratch;
// one instance per worker thread.
class SchurEvaluator {
public:
    SchurEvaluator(FieldPtr F, std::vector<std::vector<unsigned>> partitions);

    std::size_t family_size() const { return dims_.size(); }
    bool family_has_constant() const { return has_constant_; }

    std::uint64_t eval(std::size_t i, const std::vector<std::uint64_t>& coords);
    // all family members vanish at the point (early exit on first nonzero)
    bool all_vanish(const std::vector<std::uint64_t>& coords);

private:
    void fill_h(const std::vector<std::uint64_t>& coords);

    FieldPtr F_;
    std::vector<std::vector<int>> jt_;  // per member: dim x dim of h-indices
    std::vector<unsigned> dims_;
    bool has_constant_ = false;  // some member is the constant 1
    unsigned hmax_ = 0;
    std::vector<std::uint64_t> h_, mat_;
};

// Report on the plane section x3 = -x1 - x2 of the degree-(r-2) curve
// attached to {0, 1, r}: the section polynomial (content 1, positive
// leading coefficient), the factors predicted by the parity of r and by
// r mod 3, and the residual after removing them.
struct FrReport {
    int r = 0;
    MultiPoly fr{2};
    std::vector<MultiPoly> predicted_factors;
    std::vector<bool> factor_divides;
    bool factors_ok = true;  // every predicted factor divided exactly
    MultiPoly residual{2};
    unsigned k = 0;           // degree(residual) / 6
    unsigned expected_k = 0;  // (r-2)/6, except (r-9)/6 when r = 3 (mod 6)
    bool k_ok = false;
    bool residual_degree_ok = false;  // residual degree is a multiple of 6
};

FrReport compute_fr(int r);

// Dense coefficient row of a homogeneous bivariate polynomial, by
// descending power of x1.
std::vector<BigInt> bivariate_coeff_row(const MultiPoly& p);

// Checks the known factorization of the r = 11 section into
// x1*x2*(x1+x2) and three integer quadratics, up to a rational scalar.
struct F11Factorization {
    bool ok = false;
    std::vector<MultiPoly> stated_factors;
    std::vector<bool> divides;  // per quadratic factor, over the integers
    bool proportional = false;  // stated product == (num/den) * F_11
    BigInt scale_num = 0, scale_den = 0;
    std::string diagnostic;
};

F11Factorization verify_f11_factorization();

}  // namespace cycbound
