#pragma once

// Permutations, block specifications and cycle types.
//
// Everything is 1-based at the interface: a permutation of size n maps
// {1..n} to itself, and blocks/colors are numbered 1..k.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gr/error.hpp"

namespace gr {

inline constexpr std::size_t kDefaultPermutationLimit = 12;

namespace detail {

// Splits on ASCII whitespace and parses every token as a decimal integer.
inline std::vector<long long> parse_integers(std::string_view text, std::string_view what) {
    std::vector<long long> out;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        if (i == text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) ++j;
        std::string_view token = text.substr(i, j - i);
        long long value = 0;
        const char* first = token.data();
        if (!token.empty() && token.front() == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || first == token.data() + token.size())
            throw InvalidInput(std::string(what) + ": not an integer: '" + std::string(token) + "'");
        out.push_back(value);
        i = j;
    }
    return out;
}

template <typename Int>
std::string join(std::span<const Int> values, std::string_view sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << sep;
        os << values[i];
    }
    return os.str();
}

}  // namespace detail

/// A bijection on {1..n} in one-line notation.
class Permutation {
public:
    /// `images[i-1]` is the image of i. Throws InvalidInput unless this is a bijection on {1..n}, n >= 1.
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        if (images_.empty()) throw InvalidInput("permutation: empty input");
        const int n = size();
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || v > n)
                throw InvalidInput("permutation: value " + std::to_string(v) + " out of range 1.." +
                                   std::to_string(n));
            if (seen[v]) throw InvalidInput("permutation: duplicate value " + std::to_string(v));
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> images() const noexcept { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
        return Permutation(std::move(inv));
    }

    /// (f * g)(i) = f(g(i)).
    friend Permutation operator*(const Permutation& f, const Permutation& g) {
        if (f.size() != g.size()) throw InvalidInput("compose: size mismatch");
        std::vector<int> out(f.images_.size());
        for (int i = 1; i <= g.size(); ++i) out[static_cast<std::size_t>(i - 1)] = f(g(i));
        return Permutation(std::move(out));
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

inline Permutation parse_permutation(std::string_view text) {
    auto values = detail::parse_integers(text, "permutation");
    if (values.empty()) throw InvalidInput("permutation: empty input");
    std::vector<int> images;
    images.reserve(values.size());
    for (long long v : values) {
        if (v < 1 || v > static_cast<long long>(values.size()))
            throw InvalidInput("permutation: value " + std::to_string(v) + " out of range 1.." +
                               std::to_string(values.size()));
        images.push_back(static_cast<int>(v));
    }
    return Permutation(std::move(images));
}

inline std::string format_permutation(const Permutation& p) { return detail::join(p.images()); }

/// Block lengths (a_1..a_k) together with the set S of descending blocks.
///
/// Block i covers the consecutive interval A_i of {1..n}; color i and block i
/// are the same thing.
class BlockSpec {
public:
    /// `descending` lists 1-based block indices; duplicates are tolerated.
    BlockSpec(std::vector<int> lengths, std::vector<int> descending = {})
        : lengths_(std::move(lengths)) {
        if (lengths_.empty()) throw InvalidInput("blocks: at least one block is required");
        for (int a : lengths_)
            if (a < 1) throw InvalidInput("blocks: block lengths must be positive");
        descending_.assign(lengths_.size(), false);
        for (int i : descending) {
            if (i < 1 || i > k())
                throw InvalidInput("blocks: descending index " + std::to_string(i) + " outside 1.." +
                                   std::to_string(k()));
            descending_[static_cast<std::size_t>(i - 1)] = true;
        }
        starts_.resize(lengths_.size());
        int next = 1;
        for (std::size_t i = 0; i < lengths_.size(); ++i) {
            starts_[i] = next;
            next += lengths_[i];
            block_of_.insert(block_of_.end(), static_cast<std::size_t>(lengths_[i]), static_cast<int>(i + 1));
        }
        n_ = next - 1;
    }

    int k() const noexcept { return static_cast<int>(lengths_.size()); }
    int n() const noexcept { return n_; }
    std::span<const int> lengths() const noexcept { return lengths_; }
    int length(int block) const { return lengths_[static_cast<std::size_t>(block - 1)]; }
    bool is_descending(int block) const { return descending_[static_cast<std::size_t>(block - 1)]; }
    /// First element of A_block.
    int start(int block) const { return starts_[static_cast<std::size_t>(block - 1)]; }
    /// The block (color) containing value `v`.
    int block_of(int v) const { return block_of_[static_cast<std::size_t>(v - 1)]; }

    std::vector<int> descending_set() const {
        std::vector<int> s;
        for (int i = 1; i <= k(); ++i)
            if (is_descending(i)) s.push_back(i);
        return s;
    }

    BlockSpec with_descending(std::vector<int> descending) const { return {lengths_, std::move(descending)}; }

    /// Same lengths, S replaced by {1..k} \ S.
    BlockSpec complemented() const {
        std::vector<int> s;
        for (int i = 1; i <= k(); ++i)
            if (!is_descending(i)) s.push_back(i);
        return {lengths_, std::move(s)};
    }

    /// New block j is old block sigma[j-1]; descending status travels with the block.
    BlockSpec permuted(std::span<const int> sigma) const {
        if (static_cast<int>(sigma.size()) != k()) throw InvalidInput("blocks: sigma has the wrong size");
        std::vector<int> lengths;
        std::vector<int> s;
        for (int j = 1; j <= k(); ++j) {
            int old = sigma[static_cast<std::size_t>(j - 1)];
            lengths.push_back(length(old));
            if (is_descending(old)) s.push_back(j);
        }
        return {std::move(lengths), std::move(s)};
    }

    bool operator==(const BlockSpec& o) const { return lengths_ == o.lengths_ && descending_ == o.descending_; }

    std::string to_string() const {
        std::ostringstream os;
        os << "A=(" << detail::join<int>(lengths_, ",") << ") S={" << detail::join<int>(descending_set(), ",")
           << "}";
        return os.str();
    }

private:
    std::vector<int> lengths_;
    std::vector<bool> descending_;
    std::vector<int> starts_;
    std::vector<int> block_of_;
    int n_ = 0;
};

/// A partition of n, parts stored non-increasing.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw InvalidInput("cycle type: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    std::span<const int> parts() const noexcept { return parts_; }
    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Every odd part occurs once and no part is 2 mod 4.
    bool is_complement_symmetric() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] % 4 == 2) return false;
            if (parts_[i] % 2 == 1 && i + 1 < parts_.size() && parts_[i + 1] == parts_[i]) return false;
        }
        return true;
    }

    std::string to_string() const { return "(" + detail::join<int>(parts_, ",") + ")"; }

    bool operator==(const CycleType&) const = default;
    auto operator<=>(const CycleType&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order starting at (n).
inline std::vector<CycleType> partitions_of(int n) {
    std::vector<CycleType> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

using Cycle = std::vector<int>;

/// Cycles rotated to start at their minimum, sorted by that minimum.
inline std::vector<Cycle> cycle_decomposition(const Permutation& p) {
    std::vector<Cycle> cycles;
    std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
    for (int start = 1; start <= p.size(); ++start) {
        if (seen[start]) continue;
        Cycle c;
        for (int v = start; !seen[v]; v = p(v)) {
            seen[v] = true;
            c.push_back(v);
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

inline std::string format_cycles(std::span<const Cycle> cycles) {
    std::string out;
    for (const auto& c : cycles) out += "(" + detail::join<int>(c) + ")";
    return out;
}

inline CycleType cycle_type(const Permutation& p) {
    std::vector<int> lengths;
    for (const auto& c : cycle_decomposition(p)) lengths.push_back(static_cast<int>(c.size()));
    return CycleType(std::move(lengths));
}

inline bool is_as_permutation(const Permutation& p, const BlockSpec& b) {
    if (p.size() != b.n()) throw InvalidInput("classify: permutation and blocks have different sizes");
    for (int i = 1; i < p.size(); ++i) {
        if (b.block_of(i) != b.block_of(i + 1)) continue;
        bool ascent = p(i) < p(i + 1);
        if (ascent == b.is_descending(b.block_of(i))) return false;
    }
    return true;
}

inline bool is_derangement(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) == i) return false;
    return true;
}

inline bool is_involution(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p(p(i)) != i) return false;
    return true;
}

struct Classification {
    bool is_as = false;
    bool is_derangement = false;
    bool is_involution = false;
};

inline Classification classify(const Permutation& p, const BlockSpec& b) {
    return {is_as_permutation(p, b), is_derangement(p), is_involution(p)};
}

/// Calls `visit(const Permutation&)` for every (A,S)-permutation.
///
/// Block value-sets are chosen block by block, each in lexicographic order of
/// combinations; values are then laid out ascending or descending per block.
template <typename Visitor>
void for_each_as_permutation(const BlockSpec& b, Visitor&& visit,
                             std::size_t limit = kDefaultPermutationLimit) {
    const int n = b.n();
    if (static_cast<std::size_t>(n) > limit)
        throw LimitExceeded("enumerate_AS_permutations: n=" + std::to_string(n) + " exceeds limit " +
                            std::to_string(limit));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::vector<int> chosen;

    auto place_block = [&](int block) {
        auto first = images.begin() + (b.start(block) - 1);
        std::copy(chosen.end() - b.length(block), chosen.end(), first);
        if (b.is_descending(block)) std::reverse(first, first + b.length(block));
    };

    // pick(block, need, min_value): choose `need` more values >= min_value for `block`.
    auto pick = [&](auto&& self, int block, int need, int min_value) -> void {
        if (need == 0) {
            place_block(block);
            if (block == b.k()) {
                visit(Permutation(images));
                return;
            }
            self(self, block + 1, b.length(block + 1), 1);
            return;
        }
        for (int v = min_value; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            chosen.push_back(v);
            self(self, block, need - 1, v + 1);
            chosen.pop_back();
            used[v] = false;
        }
    };
    pick(pick, 1, b.length(1), 1);
}

inline std::vector<Permutation> as_permutations(const BlockSpec& b, std::size_t limit = kDefaultPermutationLimit) {
    std::vector<Permutation> out;
    for_each_as_permutation(b, [&](const Permutation& p) { out.push_back(p); }, limit);
    return out;
}

}  // namespace gr
