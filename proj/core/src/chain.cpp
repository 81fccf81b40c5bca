#include "overlap/chain.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace overlap {

BipartiteGraph chain_graph(int n) {
    if (n < 1) throw std::invalid_argument("chain graph needs n >= 1");
    BipartiteGraph g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) g.add_edge(i, j);
    return g;
}

FMSequence initial_fm_sequence() { return {{{2, 0}, {0}, {0, 1}}, 2}; }

FMSequence expand_fm_sequence(const FMSequence& seq) {
    FMSequence next;
    next.round = seq.round + 1;
    for (std::size_t i = 0; i < seq.strings.size(); ++i) {
        next.strings.push_back(seq.strings[i]);
        if (i + 1 < seq.strings.size() &&
            seq.strings[i].size() + seq.strings[i + 1].size() ==
                static_cast<std::size_t>(next.round)) {
            Label joined = seq.strings[i];
            joined.insert(joined.end(), seq.strings[i + 1].begin(), seq.strings[i + 1].end());
            next.strings.push_back(std::move(joined));
        }
    }
    return next;
}

FMSequence build_fm_sequence(int round) {
    if (round < 2) throw std::invalid_argument("sequence round must be >= 2");
    FMSequence seq = initial_fm_sequence();
    while (seq.round < round) seq = expand_fm_sequence(seq);
    return seq;
}

LengthSequence build_length_sequence(int round) {
    if (round < 2) throw std::invalid_argument("sequence round must be >= 2");
    LengthSequence seq{{2, 1, 2}, 2};
    while (seq.round < round) {
        LengthSequence next;
        next.round = seq.round + 1;
        for (std::size_t i = 0; i < seq.lengths.size(); ++i) {
            next.lengths.push_back(seq.lengths[i]);
            if (i + 1 < seq.lengths.size() &&
                seq.lengths[i] + seq.lengths[i + 1] == next.round)
                next.lengths.push_back(next.round);
        }
        seq = std::move(next);
    }
    return seq;
}

long long totient(long long k) {
    if (k < 1) throw std::invalid_argument("totient needs k >= 1");
    long long count = 0;
    for (long long i = 1; i <= k; ++i)
        if (std::gcd(i, k) == 1) ++count;
    return count;
}

std::vector<long long> totient_sieve(long long n) {
    if (n < 1) throw std::invalid_argument("sieve needs n >= 1");
    std::vector<long long> phi(static_cast<std::size_t>(n) + 1);
    std::iota(phi.begin(), phi.end(), 0LL);
    for (long long i = 2; i <= n; ++i)
        if (phi[i] == i)  // i is prime
            for (long long j = i; j <= n; j += i) phi[j] -= phi[j] / i;
    return phi;
}

long long totient_summatory(long long r) {
    if (r < 1) throw std::invalid_argument("summatory needs r >= 1");
    std::vector<long long> phi = totient_sieve(r);
    long long total = 0;
    for (long long k = 1; k <= r; ++k) total += phi[k];
    return total;
}

bool is_forward_matching(const std::vector<Label>& strings) {
    for (const Label& x : strings) {
        int len = static_cast<int>(x.size());
        for (int i = 1; i < len; ++i)
            if (std::equal(x.end() - i, x.end(), x.begin())) return false;
    }
    int t = static_cast<int>(strings.size());
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (overlaps(strings[i], strings[j]) != (i <= j)) return false;
    return true;
}

int chain_labeling_round(int n) {
    if (n < 1) throw std::invalid_argument("chain labeling needs n >= 1");
    for (int r = 2;; ++r)
        if (totient_summatory(r) + 1 >= n) return r;
}

Labeling chain_labeling(int n) {
    int r = chain_labeling_round(n);
    FMSequence seq = build_fm_sequence(r);
    Labeling out;
    out.s_labels.assign(seq.strings.begin(), seq.strings.begin() + n);
    out.p_labels = out.s_labels;
    return out;
}

double chain_readability_lower_bound(int n) {
    if (n < 1) throw std::invalid_argument("lower bound needs n >= 1");
    return std::log2(static_cast<double>(n) + 3.0) - 1.0;
}

}  // namespace overlap
