#include "cycbound/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cycbound/util.hpp"

namespace cycbound {

namespace {

// --- univariate polynomials over GF(p), used only for field setup -----
// Coefficient vectors are low-degree-first and trimmed.

using Poly = std::vector<std::uint64_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on int64 (p < 2^31)
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p),
                 nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t qt = r / nr;
        std::swap(t -= qt * nt, nt);
        std::swap(r -= qt * nr, nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// a*b reduced by the monic modulus f (degree m).
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t i = prod.size(); i-- > m;) {
        std::uint64_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            prod[i - m + j] = (prod[i - m + j] + c * (p - f[j])) % p;
    }
    prod.resize(m);
    poly_trim(prod);
    return prod;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    poly_trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = inv_mod_prime(b.back(), p);
        while (a.size() >= b.size()) {
            std::uint64_t c = (a.back() * lead_inv) % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
            poly_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool poly_irreducible(const Poly& f, std::uint64_t p, unsigned m) {
    if (m == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // Frobenius chain x^(p^j) mod f for j = 1..m
    std::vector<Poly> frob(m + 1);
    frob[0] = Poly{0, 1};
    for (unsigned j = 1; j <= m; ++j) frob[j] = poly_powmod(frob[j - 1], p, f, p);
    const Poly x{0, 1};
    if (poly_sub(frob[m], x, p) != Poly{}) return false;  // x^(p^m) != x
    for (auto [ell, _] : factorize(m)) {
        Poly g = poly_gcd(poly_sub(frob[m / ell], x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { a %= b; std::swap(a, b); }
    return a;
}

constexpr std::uint64_t kTableLimit = 1u << 16;

}  // namespace

// --- Field -------------------------------------------------------------

FieldPtr Field::make(std::uint64_t p, unsigned m, std::uint64_t size_budget) {
    if (!is_prime(p)) fail("not_prime", "characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) fail("bad_degree", "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > size_budget / p)
            fail("budget_exceeded", "field size " + std::to_string(p) + "^" + std::to_string(m) +
                                        " exceeds budget " + std::to_string(size_budget));
        q *= p;
    }
    if (q > size_budget)
        fail("budget_exceeded", "field size exceeds budget " + std::to_string(size_budget));

    static std::mutex mx;
    static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_pair(p, m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::shared_ptr<Field> f(new Field());
    f->init(p, m);
    cache[key] = f;
    return f;
}

void Field::init(std::uint64_t p, unsigned m) {
    p_ = p;
    m_ = m;
    q_ = 1;
    for (unsigned i = 0; i < m; ++i) q_ *= p;

    // Modulus: lexicographically smallest monic irreducible of degree m,
    // coefficient vectors compared low-degree-first.  Degree >= 2 forces a
    // nonzero constant term, so that block of candidates is skipped.
    if (m == 1) {
        modulus_ = {0, 1};  // x
    } else {
        std::uint64_t span = 1;
        for (unsigned i = 0; i + 1 < m; ++i) span *= p;  // p^(m-1)
        Poly cand(m + 1, 0);
        cand[m] = 1;
        bool found = false;
        for (std::uint64_t c0 = 1; c0 < p && !found; ++c0) {
            for (std::uint64_t v = 0; v < span && !found; ++v) {
                cand[0] = c0;
                std::uint64_t rest = v;
                for (unsigned i = m - 1; i >= 1; --i) {  // c1 is most significant
                    cand[i] = rest % p;
                    rest /= p;
                }
                if (poly_irreducible(cand, p, m)) found = true;
            }
        }
        modulus_.assign(cand.begin(), cand.end());
    }
    if (modulus_.size() != m + 1) modulus_.resize(m + 1, 0);
    modulus_.back() = 1;
    if (p_ == 2) {
        modulus_bits_ = 0;
        for (unsigned i = 0; i <= m_; ++i)
            if (modulus_[i]) modulus_bits_ |= std::uint64_t{1} << i;
    }

    unit_group_factors_ = factorize(q_ - 1);

    if (q_ <= kTableLimit) kind_ = Kind::Table;
    else if (m_ == 1) kind_ = Kind::Prime;
    else if (p_ == 2) kind_ = Kind::Bits;
    else kind_ = Kind::Digits;

    if (kind_ == Kind::Table) {
        // generator of the unit group, smallest packed index
        std::uint64_t g = 1;
        for (std::uint64_t cand = 1; cand < q_; ++cand) {
            bool ok = true;
            for (auto [ell, e] : unit_group_factors_)
                if (pow_raw(cand, (q_ - 1) / ell) == 1) { ok = false; break; }
            if (ok) { g = cand; break; }
        }
        exp_.assign(2 * (q_ - 1), 1);
        log_.assign(q_, 0);
        std::uint64_t cur = 1;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = static_cast<std::uint32_t>(cur);
            exp_[i + (q_ - 1)] = static_cast<std::uint32_t>(cur);
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = mul_raw(cur, g);
        }
    }
}

std::string Field::descriptor() const {
    if (m_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(m_);
}

std::vector<std::uint32_t> Field::digits(std::uint64_t a) const {
    std::vector<std::uint32_t> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return d;
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t r = 0, w = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * w;
        w *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

std::uint64_t Field::neg(std::uint64_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a ? p_ - a : 0;
    std::uint64_t r = 0, w = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t d = a % p_;
        r += (d ? p_ - d : 0) * w;
        w *= p_;
        a /= p_;
    }
    return r;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return a >= b ? a - b : a + p_ - b;
    return add(a, neg(b));
}

std::uint64_t Field::mul_raw(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) return (a * b) % p_;
    if (p_ == 2) {
        std::uint64_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & (std::uint64_t{1} << m_)) a ^= modulus_bits_;
        }
        return r;
    }
    // schoolbook digit convolution + reduction by the monic modulus
    std::uint32_t da[64], db[64];
    std::uint64_t acc[128] = {0};
    std::uint64_t t = a;
    for (unsigned i = 0; i < m_; ++i) { da[i] = static_cast<std::uint32_t>(t % p_); t /= p_; }
    t = b;
    for (unsigned i = 0; i < m_; ++i) { db[i] = static_cast<std::uint32_t>(t % p_); t /= p_; }
    for (unsigned i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < m_; ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    }
    for (unsigned i = 2 * m_ - 1; i-- > m_;) {
        std::uint64_t c = acc[i];
        if (!c) continue;
        acc[i] = 0;
        for (unsigned j = 0; j < m_; ++j)
            acc[i - m_ + j] = (acc[i - m_ + j] + c * (p_ - modulus_[j])) % p_;
    }
    std::uint64_t r = 0, w = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += acc[i] * w;
        w *= p_;
    }
    return r;
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    if (kind_ == Kind::Table) {
        if (!a || !b) return 0;
        return exp_[std::uint64_t{log_[a]} + log_[b]];
    }
    return mul_raw(a, b);
}

std::uint64_t Field::pow_raw(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_raw(r, a);
        a = mul_raw(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::pow_u(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (kind_ == Kind::Table) {
        std::uint64_t le = (std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1);
        return exp_[le];
    }
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a == 0) fail("division_by_zero", "inverse of zero");
    switch (kind_) {
        case Kind::Table: return exp_[(q_ - 1) - log_[a]];
        case Kind::Prime: return inv_mod_prime(a, p_);
        default: return pow_u(a, q_ - 2);
    }
}

std::uint64_t Field::div(std::uint64_t a, std::uint64_t b) const {
    if (b == 0) fail("division_by_zero", "division by zero");
    return mul(a, inv(b));
}

std::uint64_t Field::pow(std::uint64_t a, long long e) const {
    if (e >= 0) return pow_u(a, static_cast<std::uint64_t>(e));
    if (a == 0) fail("division_by_zero", "zero to a negative power");
    std::uint64_t ue = static_cast<std::uint64_t>(-(e + 1)) + 1;
    return pow_u(inv(a), ue);
}

std::uint64_t Field::element_order(std::uint64_t a) const {
    if (a == 0) fail("zero_element", "order of zero is undefined");
    std::uint64_t ord = q_ - 1;
    for (auto [ell, e] : unit_group_factors_) {
        while (ord % ell == 0 && pow_u(a, ord / ell) == 1) ord /= ell;
    }
    return ord;
}

bool Field::lex_less(std::uint64_t a, std::uint64_t b) const {
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t da = a % p_, db = b % p_;
        if (da != db) return da < db;
        a /= p_;
        b /= p_;
    }
    return false;
}

std::uint64_t Field::root_of_unity(std::uint64_t n) const {
    if (n == 0 || (q_ - 1) % n != 0)
        fail("no_such_root", "no elements of order " + std::to_string(n) + " in GF(" +
                                 descriptor() + ")");
    if (n == 1) return 1;
    // one generator of the (unique, cyclic) order-n subgroup ...
    auto n_factors = factorize(n);
    std::uint64_t h0 = 0;
    for (std::uint64_t g = 1; g < q_; ++g) {
        std::uint64_t h = pow_u(g, (q_ - 1) / n);
        bool exact = true;
        for (auto [ell, e] : n_factors)
            if (pow_u(h, n / ell) == 1) { exact = false; break; }
        if (exact) { h0 = h; break; }
    }
    // ... then the lex-least among all of its generators.
    std::uint64_t best = h0, cur = h0;
    for (std::uint64_t j = 2; j < n; ++j) {
        cur = mul(cur, h0);
        if (gcd_u64(j, n) == 1 && lex_less(cur, best)) best = cur;
    }
    return best;
}

std::uint64_t Field::from_residue(std::int64_t r) const {
    std::int64_t p = static_cast<std::int64_t>(p_);
    std::int64_t v = ((r % p) + p) % p;
    return static_cast<std::uint64_t>(v);
}

std::string Field::to_string(std::uint64_t a) const {
    if (m_ == 1) return std::to_string(a);
    std::string s;
    for (unsigned i = 0; i < m_; ++i) {
        if (i) s += ',';
        s += std::to_string(a % p_);
        a /= p_;
    }
    return s;
}

std::uint64_t Field::parse_element(const std::string& text) const {
    std::vector<std::uint64_t> parts;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) fail("parse_error", "bad element literal: " + text);
            parts.push_back(std::stoull(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (parts.size() == 1 && m_ >= 1) {
        if (parts[0] >= p_) fail("parse_error", "residue out of range: " + text);
        return parts[0];
    }
    if (parts.size() != m_) fail("parse_error", "expected " + std::to_string(m_) + " coefficients");
    std::uint64_t idx = 0, w = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (parts[i] >= p_) fail("parse_error", "coefficient out of range: " + text);
        idx += parts[i] * w;
        w *= p_;
    }
    return idx;
}

FieldElement Field::element(std::uint64_t idx) const {
    return FieldElement(shared_from_this(), idx);
}

FieldElement Field::zero() const { return element(0); }
FieldElement Field::one() const { return element(1); }

// --- FieldElement --------------------------------------------------------

void FieldElement::check_same(const FieldElement& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        fail("field_mismatch", "elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return FieldElement(field_, field_->add(idx_, o.idx_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return FieldElement(field_, field_->sub(idx_, o.idx_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return FieldElement(field_, field_->mul(idx_, o.idx_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return FieldElement(field_, field_->div(idx_, o.idx_));
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(idx_)); }
FieldElement FieldElement::inv() const { return FieldElement(field_, field_->inv(idx_)); }
FieldElement FieldElement::pow(long long e) const {
    return FieldElement(field_, field_->pow(idx_, e));
}
std::uint64_t FieldElement::order() const { return field_->element_order(idx_); }

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_ || !o.field_) return field_ == o.field_ && idx_ == o.idx_;
    return field_->same(*o.field_) && idx_ == o.idx_;
}

std::string FieldElement::to_string() const { return field_->to_string(idx_); }

// --- free functions -------------------------------------------------------

FieldPtr make_field(std::uint64_t p, unsigned m, std::uint64_t size_budget) {
    return Field::make(p, m, size_budget);
}

FieldElement primitive_root_of_unity(const FieldPtr& field, std::uint64_t n) {
    return field->element(field->root_of_unity(n));
}

unsigned extension_degree(std::uint64_t q, std::uint64_t n) {
    if (n == 0) fail("bad_argument", "n must be positive");
    if (std::gcd(q, n) != 1)
        fail("not_coprime", "gcd(" + std::to_string(q) + ", " + std::to_string(n) + ") != 1");
    if (n == 1) return 1;
    std::uint64_t r = q % n, cur = r;
    unsigned s = 1;
    while (cur != 1) {
        cur = (cur * r) % n;
        ++s;
        if (s > n) fail("internal", "order computation did not terminate");
    }
    return s;
}

std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q) {
    if (q < 2) fail("not_prime_power", std::to_string(q) + " is not a prime power");
    auto f = factorize(q);
    if (f.size() != 1) fail("not_prime_power", std::to_string(q) + " is not a prime power");
    return {f[0].first, f[0].second};
}

// --- linear algebra -------------------------------------------------------

unsigned matrix_rank(const Field& F, std::vector<std::uint64_t>& mat, unsigned rows,
                     unsigned cols, unsigned stop_at) {
    unsigned rank = 0;
    for (unsigned c = 0; c < cols && rank < rows; ++c) {
        unsigned pr = rank;
        while (pr < rows && mat[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != rank)
            for (unsigned cc = c; cc < cols; ++cc)
                std::swap(mat[pr * cols + cc], mat[rank * cols + cc]);
        std::uint64_t pi = F.inv(mat[rank * cols + c]);
        for (unsigned r = rank + 1; r < rows; ++r) {
            std::uint64_t f = mat[r * cols + c];
            if (!f) continue;
            f = F.mul(f, pi);
            mat[r * cols + c] = 0;
            for (unsigned cc = c + 1; cc < cols; ++cc)
                mat[r * cols + cc] =
                    F.sub(mat[r * cols + cc], F.mul(f, mat[rank * cols + cc]));
        }
        ++rank;
        if (rank >= stop_at) return rank;
    }
    return rank;
}

std::uint64_t matrix_det(const Field& F, std::vector<std::uint64_t>& mat, unsigned n) {
    std::uint64_t det = 1;
    bool negate = false;
    for (unsigned c = 0; c < n; ++c) {
        unsigned pr = c;
        while (pr < n && mat[pr * n + c] == 0) ++pr;
        if (pr == n) return 0;
        if (pr != c) {
            for (unsigned cc = c; cc < n; ++cc) std::swap(mat[pr * n + cc], mat[c * n + cc]);
            negate = !negate;
        }
        std::uint64_t pivot = mat[c * n + c];
        det = F.mul(det, pivot);
        std::uint64_t pi = F.inv(pivot);
        for (unsigned r = c + 1; r < n; ++r) {
            std::uint64_t f = mat[r * n + c];
            if (!f) continue;
            f = F.mul(f, pi);
            for (unsigned cc = c; cc < n; ++cc)
                mat[r * n + cc] = F.sub(mat[r * n + cc], F.mul(f, mat[c * n + cc]));
        }
    }
    return negate ? F.neg(det) : det;
}

}  // namespace cycbound
