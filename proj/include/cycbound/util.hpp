#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace cycbound {

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, (prime, multiplicity) pairs in
// ascending order.  Intended for desk-scale inputs (< 2^63).
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// C(n, k), saturating at `cap` (returns cap + 1 once exceeded) so callers
// can enforce enumeration budgets without overflow.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

// Lexicographically ordered k-subsets of {0, ..., n-1}.
// first_subset fills {0,...,k-1}; next_subset advances in place and
// returns false once the last subset has been passed.
void first_subset(std::vector<unsigned>& s, unsigned k);
bool next_subset(std::vector<unsigned>& s, unsigned n);

// Subset of the given lexicographic rank (rank < C(n, k)).
std::vector<unsigned> unrank_subset(unsigned n, unsigned k, std::uint64_t rank);

// Runs fn(chunk_index, begin, end) over [0, total) split into contiguous
// chunks handed out to `threads` workers.  Chunks are fixed up front, so
// any reduction keyed by chunk_index is independent of the thread count.
void parallel_chunks(std::uint64_t total, unsigned threads,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn);

}  // namespace cycbound
