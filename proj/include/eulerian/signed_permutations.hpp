#pragma once

#include "eulerian/errors.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/triangles.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace eulerian {

// S = plain permutations (no signs), B = all sign choices, D = even number
// of negative values, Dtilde = odd number (the complement coset).
enum class Group { S, B, D, Dtilde };

/// A signed permutation stored as the image sequence sigma(1..n); entry
/// values are +/-v with |values| a permutation of 1..n. The odd symmetry
/// sigma(-k) = -sigma(k) is implicit.
struct SignedPermutation {
    std::vector<int> image;

    int n() const { return static_cast<int>(image.size()); }

    int negatives() const {
        int c = 0;
        for (int v : image) c += v < 0;
        return c;
    }
    bool in_d() const { return negatives() % 2 == 0; }

    // |image| must be a permutation of 1..n.
    bool valid() const;
};

// Number of positions i with seq[i] > seq[i+1]. The sequence must be
// nonempty (entries are assumed pairwise distinct).
int descent_count(std::span<const int> seq);

// Descents of (0, sigma(1), ..., sigma(n)).
int statistic_type_b(const SignedPermutation& sigma);

// Descents of (-sigma(2), sigma(1), sigma(2), ..., sigma(n)); undefined for
// n < 2.
int statistic_brenti_d(const SignedPermutation& sigma);

// Group order as enumerated: n!, 2^n n!, 2^(n-1) n!, 2^(n-1) n!.
// D_0 has one element (the empty permutation) and Dtilde_0 none.
BigInt group_order(Group g, int n);

// Lexicographically index-th permutation of 1..n (factorial number system).
std::vector<int> nth_permutation(int n, std::uint64_t index);

namespace detail {

template <typename F>
void for_each_signed(Group g, const std::vector<int>& perm, SignedPermutation& scratch, F&& fn) {
    const int n = static_cast<int>(perm.size());
    if (g == Group::S) {
        scratch.image = perm;
        fn(const_cast<const SignedPermutation&>(scratch));
        return;
    }
    const std::uint64_t masks = std::uint64_t(1) << n;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        if (g != Group::B) {
            const bool even = __builtin_popcountll(mask) % 2 == 0;
            if (even != (g == Group::D)) continue;
        }
        scratch.image.resize(perm.size());
        for (int i = 0; i < n; ++i)
            scratch.image[static_cast<size_t>(i)] = (mask >> i) & 1u ? -perm[static_cast<size_t>(i)] : perm[static_cast<size_t>(i)];
        fn(const_cast<const SignedPermutation&>(scratch));
    }
}

}  // namespace detail

// Visits the elements whose underlying permutation has lexicographic index
// in [perm_lo, perm_hi). Within one permutation, sign masks run in binary
// order, so the overall order is deterministic; partitioning the index range
// partitions the stream.
template <typename F>
void enumerate_range(Group g, int n, std::uint64_t perm_lo, std::uint64_t perm_hi, F&& fn) {
    if (n < 0) throw std::out_of_range("enumerate_range: negative n");
    if (n == 0) {
        // The empty permutation; it belongs to S_0, B_0 and D_0.
        if (perm_lo == 0 && perm_hi > 0 && g != Group::Dtilde) {
            SignedPermutation empty;
            fn(const_cast<const SignedPermutation&>(empty));
        }
        return;
    }
    if (perm_lo >= perm_hi) return;
    std::vector<int> perm = nth_permutation(n, perm_lo);
    SignedPermutation scratch;
    for (std::uint64_t idx = perm_lo; idx < perm_hi; ++idx) {
        detail::for_each_signed(g, perm, scratch, fn);
        if (!std::next_permutation(perm.begin(), perm.end())) break;
    }
}

// Full enumeration: permutations of 1..n in lexicographic order, sign masks
// in binary order.
template <typename F>
void enumerate(Group g, int n, F&& fn) {
    std::uint64_t nperm = 1;
    for (int i = 2; i <= n; ++i) nperm *= static_cast<std::uint64_t>(i);
    enumerate_range(g, n, 0, nperm, std::forward<F>(fn));
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Descent-statistic histogram over the matching group, as a triangle row of
// length n+1. Family A counts plain descents over S_n, families B/D/Dtilde
// count the 0-prepended statistic over their groups, and BrentiD counts the
// Brenti-variant statistic over D_n (rows 0 and 1 are fixed conventional
// constants). Enumeration cost above `budget` raises ResourceError; threads
// > 1 splits the permutation-index range with a deterministic merge.
Row brute_triangle(Family family, int n, std::uint64_t budget = kDefaultEnumerationBudget,
                   int threads = 1);

}  // namespace eulerian
