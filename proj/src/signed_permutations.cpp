#include "eulerian/signed_permutations.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace eulerian {

bool SignedPermutation::valid() const {
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
        int a = v < 0 ? -v : v;
        if (a < 1 || a > n() || seen[static_cast<size_t>(a - 1)]) return false;
        seen[static_cast<size_t>(a - 1)] = true;
    }
    return true;
}

int descent_count(std::span<const int> seq) {
    if (seq.empty()) throw std::out_of_range("descent_count: empty sequence");
    int c = 0;
    for (size_t i = 0; i + 1 < seq.size(); ++i) c += seq[i] > seq[i + 1];
    return c;
}

int statistic_type_b(const SignedPermutation& sigma) {
    int c = 0;
    int prev = 0;
    for (int v : sigma.image) {
        c += prev > v;
        prev = v;
    }
    return c;
}

int statistic_brenti_d(const SignedPermutation& sigma) {
    if (sigma.n() < 2) throw std::domain_error("statistic_brenti_d: needs n >= 2");
    int c = 0;
    int prev = -sigma.image[1];
    for (int v : sigma.image) {
        c += prev > v;
        prev = v;
    }
    return c;
}

BigInt group_order(Group g, int n) {
    if (n < 0) throw std::out_of_range("group_order: negative n");
    switch (g) {
        case Group::S: return factorial(n);
        case Group::B: return pow_bigint(2, static_cast<unsigned>(n)) * factorial(n);
        case Group::D:
            return n == 0 ? BigInt(1) : pow_bigint(2, static_cast<unsigned>(n - 1)) * factorial(n);
        case Group::Dtilde:
            return n == 0 ? BigInt(0) : pow_bigint(2, static_cast<unsigned>(n - 1)) * factorial(n);
    }
    throw std::logic_error("group_order: bad enum value");
}

std::vector<int> nth_permutation(int n, std::uint64_t index) {
    std::vector<std::uint64_t> fact(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * static_cast<std::uint64_t>(i);
    if (index >= fact[static_cast<size_t>(n)]) throw std::out_of_range("nth_permutation: index too large");
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = fact[static_cast<size_t>(i)];
        const size_t digit = static_cast<size_t>(index / f);
        index %= f;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

namespace {

struct BruteTask {
    Group group;
    bool brenti = false;
};

BruteTask task_for(Family family) {
    switch (family) {
        case Family::A: return {Group::S, false};
        case Family::B: return {Group::B, false};
        case Family::D: return {Group::D, false};
        case Family::Dtilde: return {Group::Dtilde, false};
        case Family::BrentiD: return {Group::D, true};
    }
    throw std::logic_error("task_for: bad enum value");
}

std::vector<std::uint64_t> histogram_range(const BruteTask& task, int n, std::uint64_t lo,
                                           std::uint64_t hi) {
    std::vector<std::uint64_t> hist(static_cast<size_t>(n) + 1, 0);
    if (task.brenti) {
        enumerate_range(task.group, n, lo, hi, [&](const SignedPermutation& s) {
            ++hist[static_cast<size_t>(statistic_brenti_d(s))];
        });
    } else if (task.group == Group::S) {
        enumerate_range(task.group, n, lo, hi, [&](const SignedPermutation& s) {
            ++hist[static_cast<size_t>(descent_count(s.image))];
        });
    } else {
        enumerate_range(task.group, n, lo, hi, [&](const SignedPermutation& s) {
            ++hist[static_cast<size_t>(statistic_type_b(s))];
        });
    }
    return hist;
}

}  // namespace

Row brute_triangle(Family family, int n, std::uint64_t budget, int threads) {
    if (n < 0) throw std::out_of_range("brute_triangle: negative n");
    if (family == Family::BrentiD && n < 2) {
        // The defining sequence needs sigma(2); rows 0 and 1 are the
        // conventional constants of the published triangle.
        return n == 0 ? Row{BigInt(1)} : Row{BigInt(1), BigInt(1)};
    }
    if (n == 0) return Row{BigInt(family == Family::Dtilde ? 0 : 1)};
    const BruteTask task = task_for(family);

    // Guard on enumeration cost: every sign mask is visited for the signed
    // groups even when parity filtering discards half of them.
    BigInt cost = factorial(n);
    if (task.group != Group::S) cost *= pow_bigint(2, static_cast<unsigned>(n));
    if (cost > budget)
        throw ResourceError("brute_triangle: enumeration of " + cost.str() +
                            " elements exceeds budget " + std::to_string(budget));

    std::uint64_t nperm = 1;
    for (int i = 2; i <= n; ++i) nperm *= static_cast<std::uint64_t>(i);

    std::vector<std::uint64_t> hist;
    if (threads <= 1 || nperm < 64) {
        hist = histogram_range(task, n, 0, nperm);
    } else {
        const std::uint64_t parts = static_cast<std::uint64_t>(threads);
        std::vector<std::vector<std::uint64_t>> partial(parts);
        std::vector<std::thread> pool;
        for (std::uint64_t p = 0; p < parts; ++p) {
            const std::uint64_t lo = nperm * p / parts;
            const std::uint64_t hi = nperm * (p + 1) / parts;
            pool.emplace_back([&, p, lo, hi] { partial[p] = histogram_range(task, n, lo, hi); });
        }
        for (auto& t : pool) t.join();
        hist.assign(static_cast<size_t>(n) + 1, 0);
        for (const auto& part : partial)
            for (size_t k = 0; k < hist.size(); ++k) hist[k] += part[k];
    }

    Row out(hist.size());
    for (size_t k = 0; k < hist.size(); ++k) out[k] = hist[k];
    return out;
}

}  // namespace eulerian
