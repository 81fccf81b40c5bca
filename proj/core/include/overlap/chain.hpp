#pragma once

#include <vector>

#include "overlap/bipartite_graph.hpp"
#include "overlap/labeling.hpp"

namespace overlap {

/// The chain graph C_{n,n}: s_i adjacent to p_j iff i <= j (0-based), so
/// |E| = n(n+1)/2.  Throws for n < 1.
BipartiteGraph chain_graph(int n);

/// A sequence of strings meant to satisfy the forward-matching property:
/// no string properly overlaps itself and s_i overlaps s_j iff i <= j.
struct FMSequence {
    std::vector<Label> strings;
    int round = 0;
};

/// The base sequence (20, 0, 01) over symbols {0, 1, 2}, round 2.
FMSequence initial_fm_sequence();

/// One expansion round: between every consecutive pair whose lengths sum
/// to round+1, insert their concatenation.  Single pass over the input.
FMSequence expand_fm_sequence(const FMSequence& seq);

/// The sequence after expanding the base up to the given round (>= 2).
FMSequence build_fm_sequence(int round);

/// The length profile of build_fm_sequence, computed directly on integer
/// lengths: start from (2, 1, 2) and insert `round` between consecutive
/// pairs summing to it.
struct LengthSequence {
    std::vector<int> lengths;
    int round = 0;
};

LengthSequence build_length_sequence(int round);

/// Euler's totient by direct gcd counting.
long long totient(long long k);

/// phi(1..n) by a divisor sieve; index 0 unused.
std::vector<long long> totient_sieve(long long n);

/// Phi(r) = sum of phi(k) for k = 1..r, via the sieve.
long long totient_summatory(long long r);

/// Checks both forward-matching clauses by brute force.
bool is_forward_matching(const std::vector<Label>& strings);

/// Smallest round r >= 2 whose sequence has at least n strings, i.e.
/// Phi(r) + 1 >= n.
int chain_labeling_round(int n);

/// Labeling of C_{n,n} that assigns the i-th sequence string to both s_i
/// and p_i; maximum label length equals chain_labeling_round(n).
Labeling chain_labeling(int n);

/// Information-theoretic lower bound log2(n + 3) - 1 on the readability
/// of C_{n,n}.
double chain_readability_lower_bound(int n);

}  // namespace overlap
