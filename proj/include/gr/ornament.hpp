#pragma once

// Necklaces (colored directed cycles up to rotation) and ornaments
// (multisets of necklaces), with the predicates that describe the image of
// the forward map.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gr/core.hpp"
#include "gr/error.hpp"

namespace gr {

inline constexpr std::size_t kDefaultOrnamentLimit = 10;

/// Lexicographically least rotation of `colors`.
inline std::vector<int> least_rotation(std::span<const int> colors) {
    const std::size_t m = colors.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < m; ++s) {
        for (std::size_t i = 0; i < m; ++i) {
            int a = colors[(s + i) % m];
            int c = colors[(best + i) % m];
            if (a != c) {
                if (a < c) best = s;
                break;
            }
        }
    }
    std::vector<int> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = colors[(best + i) % m];
    return out;
}

/// A non-empty color cycle stored in its least rotation.
///
/// Necklaces order longer-first, then lexicographically on colors; this is
/// the order ornaments are listed in.
class Necklace {
public:
    explicit Necklace(std::span<const int> colors) : colors_(least_rotation(colors)) {
        if (colors_.empty()) throw InvalidInput("necklace: empty color sequence");
        for (int c : colors_)
            if (c < 1) throw InvalidInput("necklace: colors must be positive");
    }
    Necklace(std::initializer_list<int> colors) : Necklace(std::span<const int>(colors.begin(), colors.size())) {}

    std::span<const int> colors() const noexcept { return colors_; }
    std::size_t length() const noexcept { return colors_.size(); }
    int operator[](std::size_t i) const { return colors_[i % colors_.size()]; }

    bool operator==(const Necklace&) const = default;
    std::strong_ordering operator<=>(const Necklace& o) const {
        if (length() != o.length()) return o.length() <=> length();
        return colors_ <=> o.colors_;
    }

private:
    std::vector<int> colors_;
};

inline Necklace canonicalize_necklace(std::span<const int> colors) { return Necklace(colors); }

struct Period {
    std::vector<int> period;
    int r = 1;  ///< the necklace is `period` repeated r times
};

inline Period fundamental_period(const Necklace& nk) {
    const std::size_t m = nk.length();
    for (std::size_t d = 1; d <= m; ++d) {
        if (m % d) continue;
        bool periodic = true;
        for (std::size_t i = d; i < m && periodic; ++i) periodic = nk[i] == nk[i - d];
        if (periodic) {
            auto c = nk.colors();
            return {std::vector<int>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d)),
                    static_cast<int>(m / d)};
        }
    }
    return {};  // unreachable: d = m always works
}

struct DescendingCounts {
    int in_period = 0;
    int total = 0;
};

/// Number of descending-colored vertices in the fundamental period and in the whole necklace.
inline DescendingCounts descending_counts(const Necklace& nk, const BlockSpec& b) {
    for (int c : nk.colors())
        if (c > b.k()) throw InvalidInput("necklace: color " + std::to_string(c) + " outside 1.." + std::to_string(b.k()));
    auto [period, r] = fundamental_period(nk);
    int in_period = static_cast<int>(std::count_if(period.begin(), period.end(), [&](int c) { return b.is_descending(c); }));
    return {in_period, in_period * r};
}

/// A multiset of necklaces, kept sorted.
class Ornament {
public:
    Ornament() = default;
    explicit Ornament(std::vector<Necklace> necklaces) : necklaces_(std::move(necklaces)) {
        std::sort(necklaces_.begin(), necklaces_.end());
    }

    /// Sorted, with repeats; index i here is the necklace index used by VertexRef.
    std::span<const Necklace> necklaces() const noexcept { return necklaces_; }
    std::size_t size() const noexcept { return necklaces_.size(); }
    bool empty() const noexcept { return necklaces_.empty(); }
    const Necklace& operator[](std::size_t i) const { return necklaces_[i]; }

    std::size_t vertex_count() const {
        std::size_t n = 0;
        for (const auto& nk : necklaces_) n += nk.length();
        return n;
    }

    /// Distinct necklaces in order, each with its multiplicity.
    std::vector<std::pair<Necklace, int>> multiplicities() const {
        std::vector<std::pair<Necklace, int>> out;
        for (const auto& nk : necklaces_) {
            if (!out.empty() && out.back().first == nk)
                ++out.back().second;
            else
                out.emplace_back(nk, 1);
        }
        return out;
    }

    int multiplicity(const Necklace& nk) const {
        auto [lo, hi] = std::equal_range(necklaces_.begin(), necklaces_.end(), nk);
        return static_cast<int>(hi - lo);
    }

    bool operator==(const Ornament&) const = default;
    auto operator<=>(const Ornament&) const = default;

private:
    std::vector<Necklace> necklaces_;
};

inline std::string format_necklace(const Necklace& nk) { return "(" + detail::join(nk.colors()) + ")"; }

/// `(1 2 2)(1 2)...` in stored order.
inline std::string format_ornament(const Ornament& o) {
    std::string out;
    for (const auto& nk : o.necklaces()) out += format_necklace(nk);
    return out;
}

/// Accepts necklaces in any order and rotation; whitespace is free. Empty text is the empty ornament.
inline Ornament parse_ornament(std::string_view text) {
    std::vector<Necklace> necklaces;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != '(') throw InvalidInput("ornament: expected '(' at offset " + std::to_string(i));
        auto close = text.find(')', i);
        if (close == std::string_view::npos) throw InvalidInput("ornament: unterminated necklace");
        auto body = text.substr(i + 1, close - i - 1);
        if (body.find('(') != std::string_view::npos) throw InvalidInput("ornament: nested '('");
        auto values = detail::parse_integers(body, "ornament");
        if (values.empty()) throw InvalidInput("ornament: empty necklace");
        std::vector<int> colors;
        for (long long v : values) {
            if (v < 1 || v > 1'000'000) throw InvalidInput("ornament: color " + std::to_string(v) + " out of range");
            colors.push_back(static_cast<int>(v));
        }
        necklaces.emplace_back(colors);
        i = close + 1;
        skip_space();
    }
    return Ornament(std::move(necklaces));
}

/// Exactly a_i vertices carry color i, and no other colors occur.
inline bool is_A_compatible(const Ornament& o, const BlockSpec& b) {
    std::vector<int> counts(static_cast<std::size_t>(b.k()) + 1, 0);
    for (const auto& nk : o.necklaces())
        for (int c : nk.colors()) {
            if (c > b.k()) return false;
            ++counts[static_cast<std::size_t>(c)];
        }
    for (int i = 1; i <= b.k(); ++i)
        if (counts[static_cast<std::size_t>(i)] != b.length(i)) return false;
    return true;
}

/// First violated image condition (1, 2 or 3), or nullopt if the ornament is in the image.
///
///  1. even descending count in the period  => 1-repeating
///  2. odd descending count in the period   => 1- or 2-repeating
///  3. odd descending count in the necklace => multiplicity 1
inline std::optional<int> theorem1_violation(const Ornament& o, const BlockSpec& b) {
    if (!is_A_compatible(o, b)) throw InvalidInput("ornament is not compatible with " + b.to_string());
    for (const auto& [nk, mult] : o.multiplicities()) {
        auto counts = descending_counts(nk, b);
        int r = fundamental_period(nk).r;
        if (counts.in_period % 2 == 0 && r != 1) return 1;
        if (counts.in_period % 2 == 1 && r > 2) return 2;
        if (counts.total % 2 == 1 && mult > 1) return 3;
    }
    return std::nullopt;
}

inline bool satisfies_theorem1(const Ornament& o, const BlockSpec& b) { return !theorem1_violation(o, b); }

inline bool is_A_good(const Ornament& o, const BlockSpec& b) {
    if (!is_A_compatible(o, b)) return false;
    return std::all_of(o.necklaces().begin(), o.necklaces().end(),
                       [](const Necklace& nk) { return fundamental_period(nk).r == 1; });
}

inline CycleType ornament_cycle_type(const Ornament& o) {
    std::vector<int> lengths;
    for (const auto& nk : o.necklaces()) lengths.push_back(static_cast<int>(nk.length()));
    return CycleType(std::move(lengths));
}

enum class OrnamentFilter { all, theorem1, good };

inline OrnamentFilter parse_ornament_filter(std::string_view name) {
    if (name == "all") return OrnamentFilter::all;
    if (name == "theorem1") return OrnamentFilter::theorem1;
    if (name == "good") return OrnamentFilter::good;
    throw InvalidInput("unknown ornament predicate '" + std::string(name) + "'");
}

namespace detail {

// Every least-rotation necklace whose color counts fit inside `budget`
// (budget[c] for color c, index 0 unused), restricted to `lengths` when non-empty.
inline std::vector<Necklace> necklaces_within(std::span<const int> budget, std::span<const int> lengths) {
    const int k = static_cast<int>(budget.size()) - 1;
    int total = 0;
    for (int c = 1; c <= k; ++c) total += budget[static_cast<std::size_t>(c)];
    std::vector<bool> wanted(static_cast<std::size_t>(total) + 1, lengths.empty());
    for (int len : lengths)
        if (len <= total) wanted[static_cast<std::size_t>(len)] = true;

    std::vector<Necklace> out;
    std::vector<int> seq;
    std::vector<int> left(budget.begin(), budget.end());
    auto rec = [&](auto&& self) -> void {
        if (!seq.empty() && wanted[seq.size()] && least_rotation(seq) == seq) out.emplace_back(seq);
        if (static_cast<int>(seq.size()) == total) return;
        // A least rotation never has an entry below its first entry.
        int lo = seq.empty() ? 1 : seq.front();
        for (int c = lo; c <= k; ++c) {
            if (left[static_cast<std::size_t>(c)] == 0) continue;
            --left[static_cast<std::size_t>(c)];
            seq.push_back(c);
            self(self);
            seq.pop_back();
            ++left[static_cast<std::size_t>(c)];
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Calls `visit(const Ornament&)` for every A-compatible ornament, in
/// ascending ornament order, optionally restricted to one cycle type.
///
/// Ornaments are built as non-decreasing sequences of candidate necklaces, so
/// each multiset is produced exactly once.
template <typename Visitor>
void for_each_compatible_ornament(const BlockSpec& b, const std::optional<CycleType>& type, Visitor&& visit) {
    std::vector<int> budget(static_cast<std::size_t>(b.k()) + 1, 0);
    for (int i = 1; i <= b.k(); ++i) budget[static_cast<std::size_t>(i)] = b.length(i);
    std::vector<int> lengths;
    if (type) {
        if (type->n() != b.n()) throw InvalidInput("cycle type " + type->to_string() + " does not partition n=" + std::to_string(b.n()));
        lengths.assign(type->parts().begin(), type->parts().end());
    }
    const auto candidates = detail::necklaces_within(budget, lengths);

    std::vector<Necklace> chosen;
    int remaining = b.n();
    auto rec = [&](auto&& self, std::size_t first) -> void {
        if (remaining == 0) {
            visit(Ornament(chosen));
            return;
        }
        std::optional<std::size_t> want_len;
        if (type) want_len = static_cast<std::size_t>(type->parts()[chosen.size()]);
        for (std::size_t idx = first; idx < candidates.size(); ++idx) {
            const Necklace& nk = candidates[idx];
            if (want_len) {
                if (nk.length() > *want_len) continue;
                if (nk.length() < *want_len) break;
            }
            if (static_cast<int>(nk.length()) > remaining) continue;
            bool fits = true;
            for (int c : nk.colors())
                if (--budget[static_cast<std::size_t>(c)] < 0) fits = false;
            if (fits) {
                chosen.push_back(nk);
                remaining -= static_cast<int>(nk.length());
                self(self, idx);
                remaining += static_cast<int>(nk.length());
                chosen.pop_back();
            }
            for (int c : nk.colors()) ++budget[static_cast<std::size_t>(c)];
        }
    };
    rec(rec, 0);
}

/// Every A-compatible ornament passing `filter`, in ascending ornament order.
template <typename Visitor>
void for_each_ornament(const BlockSpec& b, OrnamentFilter filter, Visitor&& visit,
                       std::size_t limit = kDefaultOrnamentLimit,
                       const std::optional<CycleType>& type = std::nullopt) {
    if (static_cast<std::size_t>(b.n()) > limit)
        throw LimitExceeded("enumerate_ornaments: n=" + std::to_string(b.n()) + " exceeds limit " + std::to_string(limit));
    for_each_compatible_ornament(b, type, [&](const Ornament& o) {
        switch (filter) {
            case OrnamentFilter::all: visit(o); break;
            case OrnamentFilter::theorem1: if (satisfies_theorem1(o, b)) visit(o); break;
            case OrnamentFilter::good: if (is_A_good(o, b)) visit(o); break;
        }
    });
}

inline std::vector<Ornament> enumerate_ornaments(const BlockSpec& b, OrnamentFilter filter,
                                                 std::size_t limit = kDefaultOrnamentLimit) {
    std::vector<Ornament> out;
    for_each_ornament(b, filter, [&](const Ornament& o) { out.push_back(o); }, limit);
    return out;
}

inline std::vector<Ornament> enumerate_ornaments(const BlockSpec& b, std::string_view filter,
                                                 std::size_t limit = kDefaultOrnamentLimit) {
    return enumerate_ornaments(b, parse_ornament_filter(filter), limit);
}

}  // namespace gr
