#pragma once

// Test-only brute-force oracles. Nothing here calls into the library's
// enumeration, ornament or bijection code; expected values in the tests are
// computed through these routes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Images = std::vector<int>;  // one-line notation, 1-based values

inline std::vector<int> block_labels(const std::vector<int>& lengths) {
    std::vector<int> out;
    for (std::size_t i = 0; i < lengths.size(); ++i) out.insert(out.end(), lengths[i], static_cast<int>(i + 1));
    return out;
}

/// Strict ascent/descent check straight from the definition.
inline bool is_as(const Images& p, const std::vector<int>& lengths, const std::set<int>& desc) {
    auto label = block_labels(lengths);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (label[i] != label[i + 1]) continue;
        bool up = p[i] < p[i + 1];
        if (up == static_cast<bool>(desc.count(label[i]))) return false;
    }
    return true;
}

/// Visits all n! permutations in lexicographic order.
inline void for_each_permutation(int n, const std::function<void(const Images&)>& f) {
    Images p(n);
    std::iota(p.begin(), p.end(), 1);
    do f(p);
    while (std::next_permutation(p.begin(), p.end()));
}

/// (A,S)-permutations via multiset permutations of value -> block labels.
inline void for_each_as(const std::vector<int>& lengths, const std::set<int>& desc,
                        const std::function<void(const Images&)>& f) {
    auto owner = block_labels(lengths);  // owner[v-1] = block receiving value v
    const int n = static_cast<int>(owner.size());
    do {
        Images p(n);
        std::vector<std::vector<int>> values(lengths.size());
        for (int v = 1; v <= n; ++v) values[owner[v - 1] - 1].push_back(v);
        int pos = 0;
        for (std::size_t b = 0; b < lengths.size(); ++b) {
            if (desc.count(static_cast<int>(b + 1))) std::reverse(values[b].begin(), values[b].end());
            for (int v : values[b]) p[pos++] = v;
        }
        f(p);
    } while (std::next_permutation(owner.begin(), owner.end()));
}

inline std::vector<int> cycle_lengths(const Images& p) {
    std::vector<bool> seen(p.size() + 1, false);
    std::vector<int> out;
    for (int s = 1; s <= static_cast<int>(p.size()); ++s) {
        int len = 0;
        for (int v = s; !seen[v]; v = p[v - 1]) {
            seen[v] = true;
            ++len;
        }
        if (len) out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline bool fixed_point_free(const Images& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == static_cast<int>(i + 1)) return false;
    return true;
}

inline bool involutive(const Images& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[p[i] - 1] != static_cast<int>(i + 1)) return false;
    return true;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Only for n <= 20.
inline std::uint64_t multinomial(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::uint64_t r = factorial(n);
    for (int p : parts) r /= factorial(p);
    return r;
}

/// Counts over S_n filtered by the definitional (A,S) test.
struct Counts {
    std::uint64_t as = 0, derangements = 0, involutions = 0;
};

inline Counts count_over_sn(const std::vector<int>& lengths, const std::set<int>& desc) {
    Counts c;
    int n = std::accumulate(lengths.begin(), lengths.end(), 0);
    for_each_permutation(n, [&](const Images& p) {
        if (!is_as(p, lengths, desc)) return;
        ++c.as;
        c.derangements += fixed_point_free(p);
        c.involutions += involutive(p);
    });
    return c;
}

inline std::uint64_t count_cycle_type(const std::vector<int>& lengths, const std::set<int>& desc,
                                      std::vector<int> type) {
    std::sort(type.rbegin(), type.rend());
    std::uint64_t c = 0;
    for_each_as(lengths, desc, [&](const Images& p) { c += cycle_lengths(p) == type; });
    return c;
}

/// All rotations, smallest wins.
inline std::vector<int> min_rotation(const std::vector<int>& s) {
    std::vector<int> best = s, r = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        best = std::min(best, r);
    }
    return best;
}

/// Smallest divisor d of |s| such that s is d-periodic.
inline int smallest_period(const std::vector<int>& s) {
    const int m = static_cast<int>(s.size());
    for (int d = 1; d <= m; ++d) {
        if (m % d) continue;
        bool ok = true;
        for (int i = d; i < m; ++i) ok = ok && s[i] == s[i - d];
        if (ok) return d;
    }
    return m;
}

}  // namespace oracle
