#include "cycbound/util.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cycbound {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) cannot overflow while r <= cap (cap is desk-scale).
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

void first_subset(std::vector<unsigned>& s, unsigned k) {
    s.resize(k);
    for (unsigned i = 0; i < k; ++i) s[i] = i;
}

bool next_subset(std::vector<unsigned>& s, unsigned n) {
    const unsigned k = static_cast<unsigned>(s.size());
    if (k == 0) return false;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && s[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) return false;
    ++s[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    return true;
}

std::vector<unsigned> unrank_subset(unsigned n, unsigned k, std::uint64_t rank) {
    std::vector<unsigned> s;
    s.reserve(k);
    unsigned next = 0;
    for (unsigned j = k; j > 0; --j) {
        // choose the smallest admissible element a; subsets starting with a
        // account for C(n - a - 1, j - 1) ranks.
        unsigned a = next;
        for (;;) {
            std::uint64_t block = binomial_capped(n - a - 1, j - 1, UINT64_MAX - 1);
            if (rank < block) break;
            rank -= block;
            ++a;
        }
        s.push_back(a);
        next = a + 1;
    }
    return s;
}

void parallel_chunks(std::uint64_t total, unsigned threads,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
    if (total == 0) return;
    if (threads <= 1) {
        fn(0, 0, total);
        return;
    }
    // Several chunks per worker so uneven work still balances.
    const std::uint64_t want = static_cast<std::uint64_t>(threads) * 8;
    const std::uint64_t chunk = std::max<std::uint64_t>(1, (total + want - 1) / want);
    const std::size_t nchunks = static_cast<std::size_t>((total + chunk - 1) / chunk);

    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            std::size_t c = cursor.fetch_add(1);
            if (c >= nchunks) return;
            std::uint64_t b = static_cast<std::uint64_t>(c) * chunk;
            std::uint64_t e = std::min(total, b + chunk);
            fn(c, b, e);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

}  // namespace cycbound
