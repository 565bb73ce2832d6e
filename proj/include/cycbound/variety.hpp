#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycbound/vandermonde.hpp"

namespace cycbound {

struct EnumOptions {
    std::uint64_t point_budget = 10'000'000;
    unsigned threads = 1;
};

struct CertifyOptions {
    std::uint64_t tuple_budget = 10'000'000;
    std::uint64_t field_budget = kDefaultFieldBudget;
    unsigned threads = 1;
};

// Point of P^(t-1) in its canonical representative: the first nonzero
// coordinate equals 1.
struct ProjectivePoint {
    FieldPtr field;
    std::vector<std::uint64_t> coords;

    ProjectivePoint(FieldPtr f, std::vector<std::uint64_t> c);
    std::string to_string() const;  // "(1:2:4)"
    bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
    bool operator<(const ProjectivePoint& o) const { return coords < o.coords; }
};

// scales so the first nonzero coordinate is 1
std::vector<std::uint64_t> normalize_projective(const Field& F, std::vector<std::uint64_t> coords);

// The defining family of the common zero set attached to (T, t): the
// quotients f_poly(U) for U over the t-subsets of T, deduplicated, in
// lexicographic order of U.
std::vector<MultiPoly> defining_polys(const ExponentSet& T, unsigned t);

// All canonical points of P^(t-1)(F) where every defining quotient
// vanishes.  Points with zero or repeated coordinates are legitimate
// members: evaluation goes through the quotients, never the raw
// determinants.
std::vector<ProjectivePoint> enumerate_points(const ExponentSet& T, unsigned t,
                                              const FieldPtr& F, const EnumOptions& opts = {});

// Streaming count of the same set.
std::uint64_t count_points(const ExponentSet& T, unsigned t, const FieldPtr& F,
                           const EnumOptions& opts = {});

// Outcome of the root-of-unity point test for (T, t, q, n).  `pass` means
// no tuple of distinct exponents i_1 < ... < i_t mod n makes every minor
// vanish at (alpha^(i_1), ..., alpha^(i_t)); any cyclic code of length n
// over F_q whose defining set contains T then has minimum distance > t.
struct Certificate {
    std::vector<unsigned> T;  // reduced mod n
    unsigned t = 0;
    std::uint64_t n = 0, q = 0;
    unsigned s = 0;  // extension degree: alpha lives in GF(q^s)
    bool pass = false;
    std::vector<unsigned> witness;         // empty iff pass
    std::uint64_t tuples_checked = 0;      // C(n, t) on pass, witness rank + 1 otherwise
    std::string alpha;                     // text form of the chosen root
};

// Tests every t-subset of {0..n-1} in lexicographic order.  A tuple is a
// witness iff the |T| x t matrix with rows (alpha^(u i_1), ..., alpha^(u i_t))
// for u in T is rank-deficient: the tuple coordinates are distinct powers of
// alpha, where the plain Vandermonde factor cannot vanish, so rank deficiency
// is equivalent to every quotient vanishing.  The first witness in
// lexicographic order is returned regardless of the thread count.
Certificate certify_roots_of_unity(const ExponentSet& T, unsigned t, std::uint64_t q,
                                   std::uint64_t n, const CertifyOptions& opts = {});

// A (k-1)-dimensional linear subspace described by k-1 free coordinate
// positions; the remaining t+1 positions carry 1, zeta^(i_1), ..., zeta^(i_t)
// in ascending position order.
struct Subspace {
    std::vector<unsigned> free_positions;
    std::vector<unsigned> fixed_exponents;
    std::vector<std::uint64_t> fixed_values;
};

struct SubspaceFamily {
    unsigned t = 0, k = 0, m = 0;
    FieldPtr field;
    std::vector<unsigned> variety_T;  // {0..t-1, m..m+t-1, ..., km..km+t-1}
    std::uint64_t formula_count = 0;  // C(t+k, k-1) * (m-1)(m-2)...(m-t)
    std::vector<Subspace> subspaces;  // deduplicated
    unsigned duplicates = 0;
    bool containment_ok = false;  // every subspace lies in the variety, symbolically
    std::vector<std::string> containment_failures;
};

// Generates the predicted subspace family of V(T, t+k) for the banded set
// T = {0..t-1} + {m..m+t-1} + ... + {km..km+t-1} and verifies containment by
// substituting each subspace (free coordinates as fresh variables) into each
// defining quotient and checking identical vanishing over F.
SubspaceFamily predicted_subspaces(unsigned t, unsigned k, unsigned m, const FieldPtr& F);

// Point-set equality over one finite field: evidence at q, not a proof of
// scheme equality.
bool varieties_equal(const ExponentSet& T1, const ExponentSet& T2, unsigned t,
                     const FieldPtr& F, const EnumOptions& opts = {});

// Checks for the family T = {0, 1, m, m+1, 2m} over F:
//   (a) adding 2m+1 to T does not change the point set;
//   (b) every point of P^3 satisfying the {0,1,2,m} quotient whose last
//       three coordinates satisfy the {0,1,m} quotient lies in the variety;
//   (c) experimentally, whether predicted lines plus component (b) exhaust
//       the point set (reported, never asserted).
struct FamilyComponentReport {
    unsigned m = 0;
    bool saturation_equal = false;
    bool component_contained = false;
    enum class Coverage { kConfirmed, kRefuted, kNotApplicable } coverage =
        Coverage::kNotApplicable;
    std::uint64_t variety_points = 0;
    std::uint64_t line_points = 0;
    std::uint64_t component_points = 0;
    std::uint64_t union_points = 0;
};

FamilyComponentReport verify_2m_component(unsigned m, const FieldPtr& F,
                                          const EnumOptions& opts = {});

// Rational point count of a fixed quadric/cubic intersection, a genus-4
// space curve kept as a built-in fixture.
std::uint64_t genus4_curve_count(const FieldPtr& F, const EnumOptions& opts = {});

struct Genus4Report {
    std::uint64_t count = 0;
    std::optional<std::int64_t> aq;
    bool matches_trace_formula = false;  // count == q + 1 - 4 a_q, when aq given
};

Genus4Report genus4_curve_report(const FieldPtr& F, std::optional<std::int64_t> aq,
                                 const EnumOptions& opts = {});

// fixture polynomials of the curve (4 variables)
const MultiPoly& genus4_quadric();
const MultiPoly& genus4_cubic();

}  // namespace cycbound
