#include "cycbound/variety.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "cycbound/util.hpp"

namespace cycbound {

namespace {

// Canonical linearization of P^(t-1)(F): blocks by leading-zero count z,
// block z holding q^(t-1-z) points; inside a block the trailing coordinates
// run as base-q digits with the last coordinate fastest.
struct ProjectiveIndexer {
    std::uint64_t q = 0;
    unsigned t = 0;
    std::vector<std::uint64_t> block;
    std::uint64_t total = 0;

    ProjectiveIndexer(const Field& F, unsigned t_, std::uint64_t budget) : q(F.size()), t(t_) {
        std::uint64_t pw = 1;
        for (unsigned e = 0; e + 1 < t; ++e) {
            // q^(t-1) <= total, so overshooting the budget here is final
            if (pw > budget / q)
                fail("budget_exceeded", "point enumeration budget exceeded (" +
                                            std::to_string(budget) + ")");
            pw *= q;
        }
        // pw = q^(t-1)
        for (unsigned z = 0; z < t; ++z) {
            block.push_back(pw);
            total += pw;
            if (total > budget)
                fail("budget_exceeded", "point enumeration budget exceeded (" +
                                            std::to_string(budget) + ")");
            pw /= q;
        }
    }

    void decode(std::uint64_t g, std::vector<std::uint64_t>& coords) const {
        coords.assign(t, 0);
        for (unsigned z = 0; z < t; ++z) {
            if (g < block[z]) {
                coords[z] = 1;
                for (unsigned pos = t; pos-- > z + 1;) {
                    coords[pos] = g % q;
                    g /= q;
                }
                return;
            }
            g -= block[z];
        }
        fail("internal", "projective index out of range");
    }
};

std::vector<std::vector<unsigned>> family_partitions(const ExponentSet& T, unsigned t) {
    if (t == 0) fail("bad_argument", "t must be positive");
    if (t > T.size())
        fail("cardinality_error", "t exceeds the size of T (" + T.to_string() + ")");
    const auto& elems = T.elems();
    std::vector<unsigned> pick;
    first_subset(pick, t);
    std::vector<std::vector<unsigned>> partitions;
    do {
        std::vector<unsigned> u(t);
        for (unsigned i = 0; i < t; ++i) u[i] = elems[pick[i]];
        partitions.push_back(schur_partition(ExponentSet(std::move(u))));
    } while (next_subset(pick, T.size()));
    return partitions;
}

template <typename Visit>
void walk_variety(const ExponentSet& T, unsigned t, const FieldPtr& F, const EnumOptions& opts,
                  const Visit& visit) {
    auto partitions = family_partitions(T, t);
    ProjectiveIndexer ix(*F, t, opts.point_budget);
    {
        SchurEvaluator probe(F, partitions);
        if (probe.family_has_constant()) return;  // unit quotient: empty set
    }
    std::vector<std::vector<std::vector<std::uint64_t>>> found;
    std::mutex found_mx;
    parallel_chunks(ix.total, opts.threads, [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
        SchurEvaluator ev(F, partitions);
        std::vector<std::uint64_t> coords(t);
        std::vector<std::vector<std::uint64_t>> hits;
        for (std::uint64_t g = b; g < e; ++g) {
            ix.decode(g, coords);
            if (ev.all_vanish(coords)) hits.push_back(coords);
        }
        if (!hits.empty()) {
            std::lock_guard<std::mutex> lock(found_mx);
            if (found.size() <= chunk) found.resize(chunk + 1);
            found[chunk] = std::move(hits);
        }
    });
    for (auto& chunk_hits : found)
        for (auto& c : chunk_hits) visit(c);
}

}  // namespace

ProjectivePoint::ProjectivePoint(FieldPtr f, std::vector<std::uint64_t> c)
    : field(std::move(f)), coords(std::move(c)) {
    auto it = std::find_if(coords.begin(), coords.end(), [](std::uint64_t v) { return v != 0; });
    if (it == coords.end()) fail("bad_argument", "projective point cannot be zero");
    if (*it != 1) fail("bad_argument", "projective point not in canonical form");
}

std::string ProjectivePoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ":";
        s += field->to_string(coords[i]);
    }
    return s + ")";
}

std::vector<std::uint64_t> normalize_projective(const Field& F, std::vector<std::uint64_t> coords) {
    auto it = std::find_if(coords.begin(), coords.end(), [](std::uint64_t v) { return v != 0; });
    if (it == coords.end()) fail("bad_argument", "cannot normalize the zero vector");
    std::uint64_t scale = F.inv(*it);
    for (auto& v : coords) v = F.mul(v, scale);
    return coords;
}

std::vector<MultiPoly> defining_polys(const ExponentSet& T, unsigned t) {
    if (t == 0) fail("bad_argument", "t must be positive");
    if (t > T.size())
        fail("cardinality_error", "t exceeds the size of T (" + T.to_string() + ")");
    const auto& elems = T.elems();
    std::vector<unsigned> pick;
    first_subset(pick, t);
    std::vector<MultiPoly> polys;
    do {
        std::vector<unsigned> u(t);
        for (unsigned i = 0; i < t; ++i) u[i] = elems[pick[i]];
        MultiPoly f = f_poly(ExponentSet(std::move(u)));
        if (std::find(polys.begin(), polys.end(), f) == polys.end()) polys.push_back(std::move(f));
    } while (next_subset(pick, T.size()));
    return polys;
}

std::vector<ProjectivePoint> enumerate_points(const ExponentSet& T, unsigned t, const FieldPtr& F,
                                              const EnumOptions& opts) {
    std::vector<ProjectivePoint> pts;
    walk_variety(T, t, F, opts,
                 [&](std::vector<std::uint64_t>& c) { pts.emplace_back(F, c); });
    return pts;
}

std::uint64_t count_points(const ExponentSet& T, unsigned t, const FieldPtr& F,
                           const EnumOptions& opts) {
    std::uint64_t n = 0;
    walk_variety(T, t, F, opts, [&](std::vector<std::uint64_t>&) { ++n; });
    return n;
}

// --- root-of-unity certificate ---------------------------------------------

Certificate certify_roots_of_unity(const ExponentSet& T, unsigned t, std::uint64_t q,
                                   std::uint64_t n, const CertifyOptions& opts) {
    if (t == 0) fail("bad_argument", "t must be positive");
    if (n == 0 || std::gcd(q, n) != 1)
        fail("not_coprime", "n and q must be coprime and positive");
    if (t > n) fail("bad_argument", "t exceeds n");

    // exponents act mod n; reduce and dedupe
    std::set<unsigned> reduced;
    for (unsigned u : T.elems()) reduced.insert(static_cast<unsigned>(u % n));
    std::vector<unsigned> rows(reduced.begin(), reduced.end());
    if (t > rows.size())
        fail("cardinality_error", "t exceeds the size of T mod n");

    auto [p, e] = prime_power_decompose(q);
    unsigned s = extension_degree(q, n);
    FieldPtr F = make_field(p, e * s, opts.field_budget);
    std::uint64_t alpha = F->root_of_unity(n);

    std::vector<std::uint64_t> alpha_pow(n);
    alpha_pow[0] = 1;
    for (std::uint64_t i = 1; i < n; ++i) alpha_pow[i] = F->mul(alpha_pow[i - 1], alpha);

    const std::uint64_t total = binomial_capped(n, t, opts.tuple_budget);
    if (total > opts.tuple_budget)
        fail("budget_exceeded", "tuple budget exceeded: C(" + std::to_string(n) + "," +
                                    std::to_string(t) + ") > " +
                                    std::to_string(opts.tuple_budget));

    const unsigned nrows = static_cast<unsigned>(rows.size());
    struct ChunkHit {
        std::uint64_t rank;
        std::vector<unsigned> tuple;
    };
    std::vector<std::optional<ChunkHit>> hits;
    std::mutex hits_mx;
    std::atomic<std::size_t> earliest{SIZE_MAX};

    parallel_chunks(total, opts.threads, [&](std::size_t chunk, std::uint64_t b, std::uint64_t e2) {
        if (chunk > earliest.load(std::memory_order_relaxed)) return;
        std::vector<unsigned> tuple = unrank_subset(static_cast<unsigned>(n),
                                                    static_cast<unsigned>(t), b);
        std::vector<std::uint64_t> mat(static_cast<std::size_t>(nrows) * t);
        for (std::uint64_t g = b; g < e2; ++g) {
            for (unsigned r = 0; r < nrows; ++r) {
                const std::uint64_t u = rows[r];
                for (unsigned j = 0; j < t; ++j)
                    mat[r * t + j] = alpha_pow[(u * tuple[j]) % n];
            }
            if (matrix_rank(*F, mat, nrows, t, t) < t) {
                std::lock_guard<std::mutex> lock(hits_mx);
                if (hits.size() <= chunk) hits.resize(chunk + 1);
                hits[chunk] = ChunkHit{g, tuple};
                std::size_t cur = earliest.load();
                while (chunk < cur && !earliest.compare_exchange_weak(cur, chunk)) {}
                return;
            }
            next_subset(tuple, static_cast<unsigned>(n));
        }
    });

    Certificate cert;
    cert.T = rows;
    cert.t = t;
    cert.n = n;
    cert.q = q;
    cert.s = s;
    cert.alpha = F->to_string(alpha);
    for (const auto& h : hits) {
        if (h) {
            cert.pass = false;
            cert.witness = h->tuple;
            cert.tuples_checked = h->rank + 1;  // the canonical sequential count
            return cert;
        }
    }
    cert.pass = true;
    cert.tuples_checked = total;
    return cert;
}

// --- predicted subspace families --------------------------------------------

SubspaceFamily predicted_subspaces(unsigned t, unsigned k, unsigned m, const FieldPtr& F) {
    if (t < 1 || k < 1) fail("bad_argument", "need t >= 1 and k >= 1");
    if (m <= t) fail("bad_argument", "need m > t");
    SubspaceFamily fam;
    fam.t = t;
    fam.k = k;
    fam.m = m;
    fam.field = F;
    std::uint64_t zeta = F->root_of_unity(m);  // no_such_root unless m | q-1

    for (unsigned j = 0; j <= k; ++j)
        for (unsigned i = 0; i < t; ++i) fam.variety_T.push_back(j * m + i);
    std::sort(fam.variety_T.begin(), fam.variety_T.end());

    const unsigned nv = t + k;
    fam.formula_count = binomial_capped(nv, k - 1, UINT64_MAX - 1);
    for (unsigned i = 1; i <= t; ++i) fam.formula_count *= (m - i);

    ExponentSet T(fam.variety_T);
    auto polys = defining_polys(T, nv);

    // all (free set, assignment) pairs, deduplicated on the resulting data
    std::set<std::pair<std::vector<unsigned>, std::vector<std::uint64_t>>> seen;
    std::vector<unsigned> free_pick;
    std::vector<Subspace> out;

    auto each_assignment = [&](const std::vector<unsigned>& free_positions) {
        // ordered tuples (i_1..i_t) of distinct nonzero residues mod m,
        // enumerated depth-first in lexicographic order
        std::vector<bool> used(m, false);
        std::vector<unsigned> choice;
        std::function<void(unsigned)> rec = [&](unsigned depth) {
            if (depth == t) {
                Subspace sub;
                sub.free_positions = free_positions;
                sub.fixed_exponents.push_back(0);
                sub.fixed_values.push_back(1);
                for (unsigned i = 0; i < t; ++i) {
                    sub.fixed_exponents.push_back(choice[i]);
                    sub.fixed_values.push_back(F->pow_u(zeta, choice[i]));
                }
                auto key = std::make_pair(sub.free_positions, sub.fixed_values);
                if (seen.insert(key).second) out.push_back(std::move(sub));
                else ++fam.duplicates;
                return;
            }
            for (unsigned v = 1; v < m; ++v) {
                if (used[v]) continue;
                used[v] = true;
                choice.push_back(v);
                rec(depth + 1);
                choice.pop_back();
                used[v] = false;
            }
        };
        rec(0);
    };

    if (k - 1 == 0) {
        each_assignment({});
    } else {
        first_subset(free_pick, k - 1);
        do {
            each_assignment(free_pick);
        } while (next_subset(free_pick, nv));
    }
    fam.subspaces = std::move(out);

    // symbolic containment: substitute fixed values, keep free coordinates
    // as variables, require the zero polynomial over F
    const std::int64_t p = static_cast<std::int64_t>(F->characteristic());
    fam.containment_ok = true;
    for (std::size_t si = 0; si < fam.subspaces.size(); ++si) {
        const Subspace& sub = fam.subspaces[si];
        std::vector<int> free_slot(nv, -1);
        for (std::size_t i = 0; i < sub.free_positions.size(); ++i)
            free_slot[sub.free_positions[i]] = static_cast<int>(i);
        std::vector<std::uint64_t> fixed_at(nv, 0);
        {
            std::size_t fi = 0;
            for (unsigned pos = 0; pos < nv; ++pos)
                if (free_slot[pos] < 0) fixed_at[pos] = sub.fixed_values[fi++];
        }
        for (std::size_t pi = 0; pi < polys.size(); ++pi) {
            std::map<std::vector<std::uint32_t>, std::uint64_t> residue;
            for (const auto& [e, c] : polys[pi].terms()) {
                std::uint64_t v = F->from_residue(static_cast<std::int64_t>(c % p));
                std::vector<std::uint32_t> key(sub.free_positions.size(), 0);
                for (unsigned pos = 0; pos < nv && v; ++pos) {
                    if (!e[pos]) continue;
                    if (free_slot[pos] >= 0)
                        key[static_cast<std::size_t>(free_slot[pos])] = e[pos];
                    else
                        v = F->mul(v, F->pow_u(fixed_at[pos], e[pos]));
                }
                auto [it, fresh] = residue.emplace(std::move(key), v);
                if (!fresh) it->second = F->add(it->second, v);
            }
            for (const auto& [key, v] : residue) {
                if (v != 0) {
                    fam.containment_ok = false;
                    fam.containment_failures.push_back(
                        "subspace #" + std::to_string(si) + " fails quotient #" +
                        std::to_string(pi));
                    break;
                }
            }
        }
    }
    return fam;
}

bool varieties_equal(const ExponentSet& T1, const ExponentSet& T2, unsigned t, const FieldPtr& F,
                     const EnumOptions& opts) {
    auto a = enumerate_points(T1, t, F, opts);
    auto b = enumerate_points(T2, t, F, opts);
    if (a.size() != b.size()) return false;
    std::vector<std::vector<std::uint64_t>> ca, cb;
    for (auto& x : a) ca.push_back(x.coords);
    for (auto& x : b) cb.push_back(x.coords);
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

// --- the {0, 1, m, m+1, 2m} family -----------------------------------------

namespace {

ExponentSet dedup_set(std::vector<unsigned> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return ExponentSet(std::move(v));
}

}  // namespace

FamilyComponentReport verify_2m_component(unsigned m, const FieldPtr& F,
                                          const EnumOptions& opts) {
    if (m < 1) fail("bad_argument", "m must be positive");
    FamilyComponentReport rep;
    rep.m = m;

    ExponentSet T1 = dedup_set({0, 1, m, m + 1, 2 * m});
    ExponentSet T2 = dedup_set({0, 1, m, m + 1, 2 * m, 2 * m + 1});

    auto variety = enumerate_points(T1, 4, F, opts);
    rep.variety_points = variety.size();
    rep.saturation_equal = varieties_equal(T1, T2, 4, F, opts);

    std::set<std::vector<std::uint64_t>> variety_set;
    for (auto& pt : variety) variety_set.insert(pt.coords);

    // component (b): the {0,1,2,m} quotients on all four coordinates and the
    // {0,1,m} quotients on the last three
    std::vector<std::vector<unsigned>> head_parts, tail_parts;
    {
        ExponentSet head = dedup_set({0, 1, 2, m});
        if (head.size() >= 4)
            for (auto& f : family_partitions(head, 4)) head_parts.push_back(f);
        ExponentSet tail = dedup_set({0, 1, m});
        if (tail.size() >= 3)
            for (auto& f : family_partitions(tail, 3)) tail_parts.push_back(f);
    }
    SchurEvaluator head_ev(F, head_parts);
    SchurEvaluator tail_ev(F, tail_parts);
    const bool head_empty_family = head_parts.empty();
    const bool tail_empty_family = tail_parts.empty();

    ProjectiveIndexer ix(*F, 4, opts.point_budget);
    std::set<std::vector<std::uint64_t>> component;
    rep.component_contained = true;
    std::vector<std::uint64_t> coords(4);
    for (std::uint64_t g = 0; g < ix.total; ++g) {
        ix.decode(g, coords);
        bool on_head = head_empty_family || head_ev.all_vanish(coords);
        if (!on_head) continue;
        std::vector<std::uint64_t> tail3(coords.begin() + 1, coords.end());
        bool on_tail;
        if (tail_empty_family) {
            on_tail = true;
        } else if (tail3[0] == 0 && tail3[1] == 0 && tail3[2] == 0) {
            // positive-degree homogeneous quotients vanish at the zero
            // vector; a unit quotient does not
            on_tail = !tail_ev.family_has_constant();
        } else {
            on_tail = tail_ev.all_vanish(tail3);
        }
        if (!on_tail) continue;
        component.insert(coords);
        if (!variety_set.count(coords)) rep.component_contained = false;
    }
    rep.component_points = component.size();

    // coverage (c): predicted lines for (t, k) = (2, 2) plus the component
    if (m > 2 && (F->size() - 1) % m == 0) {
        auto fam = predicted_subspaces(2, 2, m, F);
        std::set<std::vector<std::uint64_t>> covered = component;
        std::set<std::vector<std::uint64_t>> on_lines;
        for (const auto& sub : fam.subspaces) {
            // a line: scale s over the fixed part, y on the free coordinate
            unsigned fp = sub.free_positions[0];
            for (std::uint64_t y = 0; y <= F->size(); ++y) {
                std::vector<std::uint64_t> pt(4, 0);
                bool at_infinity = (y == F->size());
                std::size_t fi = 0;
                for (unsigned pos = 0; pos < 4; ++pos) {
                    if (pos == fp) pt[pos] = at_infinity ? 1 : y;
                    else pt[pos] = at_infinity ? 0 : sub.fixed_values[fi++];
                }
                auto norm = normalize_projective(*F, pt);
                on_lines.insert(norm);
                covered.insert(std::move(norm));
            }
        }
        rep.line_points = on_lines.size();
        rep.union_points = covered.size();
        rep.coverage = (covered == variety_set) ? FamilyComponentReport::Coverage::kConfirmed
                                                : FamilyComponentReport::Coverage::kRefuted;
    } else {
        rep.coverage = FamilyComponentReport::Coverage::kNotApplicable;
        rep.union_points = rep.component_points;
    }
    return rep;
}

// --- fixed genus-4 curve -----------------------------------------------------

const MultiPoly& genus4_quadric() {
    static const MultiPoly q = MultiPoly::parse(
        "x1^2 + x2^2 + x3^2 + x4^2 + x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4", 4);
    return q;
}

const MultiPoly& genus4_cubic() {
    static const MultiPoly c = MultiPoly::parse(
        "x2^3 + x3^3 + x4^3 + x2^2*x3 + x2*x3^2 + x2^2*x4 + x2*x4^2 + x3*x4^2 + x3^2*x4 + "
        "x2*x3*x4",
        4);
    return c;
}

std::uint64_t genus4_curve_count(const FieldPtr& F, const EnumOptions& opts) {
    ProjectiveIndexer ix(*F, 4, opts.point_budget);
    std::vector<std::uint64_t> counts;
    std::mutex mx;
    parallel_chunks(ix.total, opts.threads, [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
        std::vector<std::uint64_t> coords(4);
        std::uint64_t n = 0;
        for (std::uint64_t g = b; g < e; ++g) {
            ix.decode(g, coords);
            if (genus4_quadric().evaluate_packed(*F, coords) == 0 &&
                genus4_cubic().evaluate_packed(*F, coords) == 0)
                ++n;
        }
        std::lock_guard<std::mutex> lock(mx);
        if (counts.size() <= chunk) counts.resize(chunk + 1, 0);
        counts[chunk] = n;
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

Genus4Report genus4_curve_report(const FieldPtr& F, std::optional<std::int64_t> aq,
                                 const EnumOptions& opts) {
    Genus4Report rep;
    rep.count = genus4_curve_count(F, opts);
    rep.aq = aq;
    if (aq) {
        std::int64_t expect = static_cast<std::int64_t>(F->size()) + 1 - 4 * *aq;
        rep.matches_trace_formula = expect >= 0 &&
                                    rep.count == static_cast<std::uint64_t>(expect);
    }
    return rep;
}

}  // namespace cycbound
