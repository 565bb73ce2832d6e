#include "cycbound/mpoly.hpp"

#include <algorithm>
#include <cctype>

namespace cycbound {

namespace {

std::uint64_t exps_degree(const MultiPoly::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

MultiPoly MultiPoly::constant(unsigned nvars, BigInt c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned i) {
    if (i >= nvars) fail("index_out_of_range", "variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
}

MultiPoly MultiPoly::monomial(unsigned nvars, Exponents e, BigInt c) {
    if (e.size() != nvars) fail("arity_mismatch", "exponent vector length mismatch");
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

const BigInt& MultiPoly::coefficient(const Exponents& e) const {
    static const BigInt kZero = 0;
    auto it = terms_.find(e);
    return it == terms_.end() ? kZero : it->second;
}

std::uint64_t MultiPoly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exps_degree(e));
    return d;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_arity(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) fail("arity_mismatch", "variable counts differ");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scalar_mul(const BigInt& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

MultiPoly MultiPoly::substitute(unsigned var_index, const MultiPoly& replacement) const {
    if (var_index >= nvars_) fail("index_out_of_range", "variable index out of range");
    check_arity(replacement);
    // cache replacement powers; exponents in the substituted variable stay small
    std::vector<MultiPoly> powers{one(nvars_)};
    auto power = [&](std::uint32_t e) -> const MultiPoly& {
        while (powers.size() <= e) powers.push_back(powers.back() * replacement);
        return powers[e];
    };
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        std::uint32_t ev = rest[var_index];
        rest[var_index] = 0;
        MultiPoly term = monomial(nvars_, rest, c) * power(ev);
        for (const auto& [te, tc] : term.terms_) r.add_term(te, tc);
    }
    return r;
}

MultiPoly MultiPoly::drop_variable(unsigned var_index) const {
    if (var_index >= nvars_) fail("index_out_of_range", "variable index out of range");
    MultiPoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] != 0)
            fail("bad_argument", "polynomial still involves x" + std::to_string(var_index + 1));
        Exponents ne;
        ne.reserve(nvars_ - 1);
        for (unsigned i = 0; i < nvars_; ++i)
            if (i != var_index) ne.push_back(e[i]);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

MultiPoly MultiPoly::permute_variables(const std::vector<unsigned>& perm) const {
    if (perm.size() != nvars_) fail("arity_mismatch", "permutation length mismatch");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents ne(nvars_, 0);
        for (unsigned i = 0; i < nvars_; ++i) ne[perm[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars_) fail("arity_mismatch", "point length mismatch");
    if (nvars_ == 0) {
        fail("arity_mismatch", "evaluation needs at least one variable");
    }
    const FieldPtr& F = point[0].field();
    std::vector<std::uint64_t> packed(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        if (!F->same(*point[i].field())) fail("field_mismatch", "mixed-field point");
        packed[i] = point[i].index();
    }
    return F->element(evaluate_packed(*F, packed));
}

std::uint64_t MultiPoly::evaluate_packed(const Field& F,
                                         const std::vector<std::uint64_t>& point) const {
    if (point.size() != nvars_) fail("arity_mismatch", "point length mismatch");
    const std::int64_t p = static_cast<std::int64_t>(F.characteristic());
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t residue = static_cast<std::int64_t>(c % p);
        std::uint64_t t = F.from_residue(residue);
        for (unsigned i = 0; i < nvars_ && t; ++i)
            if (e[i]) t = F.mul(t, F.pow_u(point[i], e[i]));
        acc = F.add(acc, t);
    }
    return acc;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& den) const {
    check_arity(den);
    if (den.is_zero()) fail("zero_divisor", "division by the zero polynomial");
    MultiPoly rem = *this;
    MultiPoly quot(nvars_);
    const auto& dlt = *den.terms_.begin();
    while (!rem.terms_.empty()) {
        const auto& rlt = *rem.terms_.begin();
        // leading-term divisibility: monomial componentwise, coefficient over Z
        Exponents qe(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) {
            if (rlt.first[i] < dlt.first[i]) return std::nullopt;
            qe[i] = rlt.first[i] - dlt.first[i];
        }
        if (rlt.second % dlt.second != 0) return std::nullopt;
        BigInt qc = rlt.second / dlt.second;
        quot.add_term(qe, qc);
        Exponents e(nvars_);
        for (const auto& [de, dc] : den.terms_) {
            for (unsigned i = 0; i < nvars_; ++i) e[i] = qe[i] + de[i];
            rem.add_term(e, -qc * dc);
        }
    }
    return quot;
}

std::optional<std::uint64_t> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) fail("zero_polynomial", "degree of the zero polynomial");
    std::uint64_t d = exps_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exps_degree(e) != d) return std::nullopt;
    return d;
}

BigInt MultiPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) return *this;
    BigInt g = content();
    if (terms_.begin()->second < 0) g = -g;
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / g);
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += a.str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("parse_error", "expected integer at offset " + std::to_string(pos));
        return BigInt(s.substr(start, pos - start));
    }

    // var ::= 'x' index ('^' exponent)?
    std::pair<unsigned, std::uint32_t> parse_var() {
        skip_ws();
        ++pos;  // 'x'
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("parse_error", "expected variable index");
        unsigned idx = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
        if (idx == 0) fail("parse_error", "variable indices start at 1");
        std::uint32_t e = 1;
        if (peek() == '^') {
            ++pos;
            BigInt be = parse_integer();
            e = static_cast<std::uint32_t>(be);
        }
        return {idx - 1, e};
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, unsigned nvars) {
    MultiPoly r(nvars);
    PolyParser in(text);
    bool first = true;
    while (!in.eof()) {
        bool negative = false;
        char c = in.peek();
        if (c == '+' || c == '-') {
            negative = (c == '-');
            ++in.pos;
        } else if (!first) {
            fail("parse_error", "expected + or - between terms");
        }
        first = false;
        BigInt coef = 1;
        bool saw_any = false;
        if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
            coef = in.parse_integer();
            saw_any = true;
        }
        Exponents e(nvars, 0);
        for (;;) {
            char n = in.peek();
            if (n == '*') {
                ++in.pos;
                n = in.peek();
            } else if (saw_any && n == 'x') {
                // allow juxtaposition only after '*'; plain "3x1" is rejected
                fail("parse_error", "expected '*' before variable");
            }
            if (n != 'x') break;
            auto [idx, ex] = in.parse_var();
            if (idx >= nvars)
                fail("parse_error", "variable x" + std::to_string(idx + 1) + " out of range");
            e[idx] += ex;
            saw_any = true;
        }
        if (!saw_any) fail("parse_error", "empty term");
        r.add_term(e, negative ? -coef : coef);
    }
    return r;
}

MultiPoly MultiPoly::parse(const std::string& text) {
    unsigned maxvar = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            maxvar = std::max(maxvar, static_cast<unsigned>(std::stoul(text.substr(i + 1, j - i - 1))));
        }
    }
    return parse(text, maxvar);
}

}  // namespace cycbound
