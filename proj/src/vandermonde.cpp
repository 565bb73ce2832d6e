#include "cycbound/vandermonde.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cycbound {

ExponentSet::ExponentSet(std::vector<unsigned> elems) : elems_(std::move(elems)) {
    if (elems_.empty()) fail("bad_argument", "exponent set must be nonempty");
    for (std::size_t i = 1; i < elems_.size(); ++i)
        if (elems_[i] <= elems_[i - 1])
            fail("bad_argument", "exponent set must be strictly increasing");
}

ExponentSet ExponentSet::parse(const std::string& csv) {
    std::vector<unsigned> v;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) {
                v.push_back(static_cast<unsigned>(std::stoul(cur)));
                cur.clear();
            }
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                fail("parse_error", "bad exponent set: " + csv);
            cur += ch;
        }
    }
    return ExponentSet(std::move(v));
}

bool ExponentSet::contains(unsigned v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

ExponentSet ExponentSet::shifted(unsigned c) const {
    std::vector<unsigned> v = elems_;
    for (auto& x : v) x += c;
    return ExponentSet(std::move(v));
}

std::string ExponentSet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems_[i]);
    }
    return s;
}

std::vector<unsigned> schur_partition(const ExponentSet& U) {
    const auto& u = U.elems();
    const unsigned m = U.size();
    std::vector<unsigned> lambda(m);
    for (unsigned i = 0; i < m; ++i) lambda[i] = u[m - 1 - i] - (m - 1 - i);
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

MultiPoly delta(const ExponentSet& U) {
    const auto& u = U.elems();
    const unsigned m = U.size();
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly out(m);
    do {
        // Leibniz term: row exponents assigned by perm, all monomials distinct
        int inversions = 0;
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inversions;
        MultiPoly::Exponents e(m);
        for (unsigned j = 0; j < m; ++j) e[j] = u[perm[j]];
        out = out + MultiPoly::monomial(m, e, (inversions % 2) ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

using Partition = std::vector<unsigned>;

Partition trimmed(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// s_lambda(x1..xj) = sum over horizontal strips lambda/mu of
// s_mu(x1..x(j-1)) * xj^(|lambda| - |mu|).  Exponent vectors carry the full
// nvars slots; recursion level j populates only the first j.
const MultiPoly& schur_rec(const Partition& lambda, unsigned j, unsigned nvars,
                           std::map<std::pair<Partition, unsigned>, MultiPoly>& memo) {
    auto key = std::make_pair(lambda, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    MultiPoly acc(nvars);
    if (lambda.empty()) {
        acc = MultiPoly::one(nvars);
    } else if (j == 0 || lambda.size() > j) {
        // no semistandard fillings: zero
    } else {
        const std::uint64_t total =
            std::accumulate(lambda.begin(), lambda.end(), std::uint64_t{0});
        const unsigned len = static_cast<unsigned>(lambda.size());
        Partition low(len), mu(len);
        for (unsigned i = 0; i < len; ++i) low[i] = (i + 1 < len) ? lambda[i + 1] : 0;
        mu = low;
        for (;;) {
            std::uint64_t musum = std::accumulate(mu.begin(), mu.end(), std::uint64_t{0});
            const MultiPoly& sub = schur_rec(trimmed(mu), j - 1, nvars, memo);
            MultiPoly::Exponents shift(nvars, 0);
            shift[j - 1] = static_cast<std::uint32_t>(total - musum);
            acc = acc + sub * MultiPoly::monomial(nvars, shift, 1);
            int i = static_cast<int>(len) - 1;
            while (i >= 0 && mu[static_cast<unsigned>(i)] == lambda[static_cast<unsigned>(i)]) --i;
            if (i < 0) break;
            ++mu[static_cast<unsigned>(i)];
            for (unsigned z = static_cast<unsigned>(i) + 1; z < len; ++z) mu[z] = low[z];
        }
    }
    auto [it, ok] = memo.emplace(std::move(key), std::move(acc));
    return it->second;
}

}  // namespace

MultiPoly schur_poly(const std::vector<unsigned>& partition, unsigned nvars) {
    Partition lambda = trimmed(partition);
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] > lambda[i - 1]) fail("bad_argument", "not a partition");
    std::map<std::pair<Partition, unsigned>, MultiPoly> memo;
    return schur_rec(lambda, nvars, nvars, memo);
}

MultiPoly f_poly(const ExponentSet& U) { return schur_poly(schur_partition(U), U.size()); }

std::uint64_t delta_eval_packed(const ExponentSet& U, const Field& F,
                                const std::vector<std::uint64_t>& coords) {
    const auto& u = U.elems();
    const unsigned m = U.size();
    if (coords.size() != m) fail("arity_mismatch", "coordinate count mismatch");
    std::vector<std::uint64_t> mat(static_cast<std::size_t>(m) * m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) mat[i * m + j] = F.pow_u(coords[j], u[i]);
    return matrix_det(F, mat, m);
}

FieldElement delta_eval(const ExponentSet& U, const std::vector<FieldElement>& coords) {
    if (coords.empty()) fail("arity_mismatch", "empty point");
    const FieldPtr& F = coords[0].field();
    std::vector<std::uint64_t> packed(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!F->same(*coords[i].field())) fail("field_mismatch", "mixed-field point");
        packed[i] = coords[i].index();
    }
    return F->element(delta_eval_packed(U, *F, packed));
}

// --- SchurEvaluator --------------------------------------------------------

SchurEvaluator::SchurEvaluator(FieldPtr F, std::vector<std::vector<unsigned>> partitions)
    : F_(std::move(F)) {
    for (auto& lam : partitions) {
        Partition lambda = trimmed(lam);
        const unsigned ell = static_cast<unsigned>(lambda.size());
        if (ell == 0) {
            has_constant_ = true;
            continue;
        }
        std::vector<int> idx(static_cast<std::size_t>(ell) * ell);
        for (unsigned i = 0; i < ell; ++i)
            for (unsigned j = 0; j < ell; ++j) {
                int v = static_cast<int>(lambda[i]) - static_cast<int>(i) + static_cast<int>(j);
                idx[i * ell + j] = v;
                if (v > 0) hmax_ = std::max(hmax_, static_cast<unsigned>(v));
            }
        jt_.push_back(std::move(idx));
        dims_.push_back(ell);
    }
    h_.resize(hmax_ + 1);
}

void SchurEvaluator::fill_h(const std::vector<std::uint64_t>& coords) {
    // complete homogeneous values by the 1/(1 - x t) update, one variable
    // at a time; in-place ascending scan is exactly that recurrence
    const Field& F = *F_;
    std::fill(h_.begin(), h_.end(), 0);
    h_[0] = 1;
    for (std::uint64_t x : coords) {
        if (!x) continue;
        for (unsigned k = 1; k <= hmax_; ++k) h_[k] = F.add(h_[k], F.mul(x, h_[k - 1]));
    }
}

std::uint64_t SchurEvaluator::eval(std::size_t i, const std::vector<std::uint64_t>& coords) {
    fill_h(coords);
    const unsigned ell = dims_[i];
    mat_.resize(static_cast<std::size_t>(ell) * ell);
    for (std::size_t z = 0; z < mat_.size(); ++z) {
        int v = jt_[i][z];
        mat_[z] = (v < 0) ? 0 : h_[static_cast<unsigned>(v)];
    }
    return matrix_det(*F_, mat_, ell);
}

bool SchurEvaluator::all_vanish(const std::vector<std::uint64_t>& coords) {
    if (has_constant_) return false;
    fill_h(coords);
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const unsigned ell = dims_[i];
        mat_.resize(static_cast<std::size_t>(ell) * ell);
        for (std::size_t z = 0; z < mat_.size(); ++z) {
            int v = jt_[i][z];
            mat_[z] = (v < 0) ? 0 : h_[static_cast<unsigned>(v)];
        }
        if (matrix_det(*F_, mat_, ell) != 0) return false;
    }
    return true;
}

// --- plane sections of the {0,1,r} curve ------------------------------------

FrReport compute_fr(int r) {
    if (r < 4) fail("bad_argument", "r must be at least 4");
    FrReport rep;
    rep.r = r;

    MultiPoly f = f_poly(ExponentSet{0u, 1u, static_cast<unsigned>(r)});
    MultiPoly minus12 = (MultiPoly::variable(3, 0) + MultiPoly::variable(3, 1)).scalar_mul(-1);
    rep.fr = f.substitute(2, minus12).drop_variable(2).normalized();

    const MultiPoly x1 = MultiPoly::variable(2, 0);
    const MultiPoly x2 = MultiPoly::variable(2, 1);
    const MultiPoly quad = MultiPoly::parse("x1^2 + x1*x2 + x2^2", 2);
    if (r % 2 == 1) {
        rep.predicted_factors.push_back(x1);
        rep.predicted_factors.push_back(x2);
        rep.predicted_factors.push_back(x1 + x2);
    }
    if (r % 3 == 0) rep.predicted_factors.push_back(quad * quad);
    if (r % 3 == 1) rep.predicted_factors.push_back(quad);

    rep.residual = rep.fr;
    for (const auto& fac : rep.predicted_factors) {
        auto q = rep.residual.exact_divide(fac);
        rep.factor_divides.push_back(q.has_value());
        if (q) rep.residual = *q;
        else rep.factors_ok = false;  // reported, never fatal
    }

    const std::uint64_t rd = rep.residual.is_zero() ? 0 : rep.residual.total_degree();
    rep.residual_degree_ok = (rd % 6 == 0);
    rep.k = static_cast<unsigned>(rd / 6);
    rep.expected_k = (r % 6 == 3) ? static_cast<unsigned>((r - 9) / 6)
                                  : static_cast<unsigned>((r - 2) / 6);
    rep.k_ok = rep.residual_degree_ok && rep.k == rep.expected_k;
    return rep;
}

std::vector<BigInt> bivariate_coeff_row(const MultiPoly& p) {
    if (p.nvars() != 2) fail("bad_argument", "expected a bivariate polynomial");
    auto deg = p.homogeneous_degree();
    if (!deg) fail("bad_argument", "expected a homogeneous polynomial");
    std::vector<BigInt> row(*deg + 1);
    for (const auto& [e, c] : p.terms()) row[e[1]] = c;
    return row;
}

F11Factorization verify_f11_factorization() {
    F11Factorization out;
    MultiPoly f11 = compute_fr(11).fr;

    out.stated_factors = {
        MultiPoly::parse("x1", 2),
        MultiPoly::parse("x2", 2),
        MultiPoly::parse("x1 + x2", 2),
        MultiPoly::parse("x1^2 + x1*x2 + 2*x2^2", 2),
        MultiPoly::parse("2*x1^2 + x1*x2 + x2^2", 2),
        MultiPoly::parse("2*x1^2 + 3*x1*x2 + 2*x2^2", 2),
    };

    bool all_divide = true;
    for (std::size_t i = 3; i < out.stated_factors.size(); ++i) {
        bool d = f11.exact_divide(out.stated_factors[i]).has_value();
        out.divides.push_back(d);
        all_divide = all_divide && d;
    }

    MultiPoly product = MultiPoly::one(2);
    for (const auto& f : out.stated_factors) product = product * f;

    // proportionality over Q by cross-multiplying leading coefficients
    const BigInt lf = f11.terms().begin()->second;
    const BigInt lp = product.terms().begin()->second;
    out.proportional = (f11.scalar_mul(lp) == product.scalar_mul(lf));
    BigInt g = boost::multiprecision::gcd(lp, lf);
    out.scale_num = lp / g;
    out.scale_den = lf / g;
    out.ok = all_divide && out.proportional && out.scale_num != 0;
    if (!out.ok)
        out.diagnostic =
            "stated factorization does not match; computed section is " + f11.to_string();
    return out;
}

}  // namespace cycbound
