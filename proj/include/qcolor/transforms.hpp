#pragma once

#include <vector>

#include "qcolor/coloring.hpp"

namespace qcolor {

/// A twist-side prime p | m together with a strand-side prime q | n.
/// Coprimality of (m,n) makes p != q automatic.
struct PrimePair {
    uint64_t p;
    uint64_t q;

    bool operator==(const PrimePair&) const = default;
};

/// K(m,n) -> K(t*m, n): the same tuple works, its windows of length t*m
/// multiply t equal m-windows, so the harlequin becomes u^t. The tuple is
/// reverified before returning.
ColoringTuple extend_twists(const ColoringTuple& tuple, uint64_t m, uint64_t t);

/// K(m,n) -> K(m, t*n): repeat the tuple t times; harlequin unchanged.
ColoringTuple extend_strands(const ColoringTuple& tuple, uint64_t m, uint64_t t);

/// K(m, t*n) -> K(m,n): block products x_i = y_{i*t} * ... * y_{i*t+t-1}.
/// The result always verifies but may be trivial; its harlequin is v^t.
ColoringTuple contract_strands(const ColoringTuple& tuple, uint64_t n, uint64_t t, uint64_t m);

/// All (p,q) with p a prime factor of m and q a prime factor of n, in
/// lexicographic order. Empty when m=1 or n=1 (the unknot).
std::vector<PrimePair> reduce_to_prime_pairs(uint64_t m, uint64_t n);

/// Full decision pipeline: reduce (m,n) to prime pairs and consult the
/// centralizer criterion at the odd primes of each pair, strand side
/// first. Negative answers are sound; positive answers inherit
/// SufficiencyUnverified. The criterion is never consulted at p=2: its
/// intended regime is odd p, and evaluating it at 2 is known to
/// overreport (see README), while each pair always contains an odd prime
/// that decides it.
Verdict decide_general(const GroupContext& ctx, uint64_t m, uint64_t n);

} // namespace qcolor
