#pragma once

// The cycle-structure-preserving bijection between (A,S)-permutations and
// ornaments, its inverse via signed walks, packets, orbits and templates, and
// the derived correspondences with good ornaments and derangements.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gr/core.hpp"
#include "gr/error.hpp"
#include "gr/ornament.hpp"

namespace gr {

/// Block numbers along each cycle of `p`, in the order of
/// `cycle_decomposition(p)` and starting at each cycle's smallest element.
inline std::vector<std::vector<int>> forward_colorings(const Permutation& p, const BlockSpec& b) {
    if (p.size() != b.n()) throw InvalidInput("forward: permutation and blocks have different sizes");
    std::vector<std::vector<int>> out;
    for (const auto& cycle : cycle_decomposition(p)) {
        std::vector<int> colors;
        colors.reserve(cycle.size());
        for (int v : cycle) colors.push_back(b.block_of(v));
        out.push_back(std::move(colors));
    }
    return out;
}

/// One necklace per cycle, in the order of `cycle_decomposition(p)`.
inline std::vector<Necklace> forward_necklaces(const Permutation& p, const BlockSpec& b) {
    std::vector<Necklace> out;
    for (const auto& colors : forward_colorings(p, b)) out.emplace_back(colors);
    return out;
}

/// The forward map. Total on all permutations of size n; injective on (A,S)-permutations.
inline Ornament forward(const Permutation& p, const BlockSpec& b) { return Ornament(forward_necklaces(p, b)); }

struct VertexRef {
    std::size_t necklace_index = 0;  ///< into Ornament::necklaces(), counting repeats
    std::size_t position = 0;        ///< into the least-rotation color sequence

    bool operator==(const VertexRef&) const = default;
    auto operator<=>(const VertexRef&) const = default;
};

inline void check_vertex(const VertexRef& v, const Ornament& o) {
    if (v.necklace_index >= o.size() || v.position >= o[v.necklace_index].length())
        throw InvalidInput("vertex (" + std::to_string(v.necklace_index) + "," + std::to_string(v.position) +
                           ") is not in the ornament");
}

inline VertexRef successor(const VertexRef& v, const Ornament& o) {
    return {v.necklace_index, (v.position + 1) % o[v.necklace_index].length()};
}

/// One period of a signed walk; indexing wraps.
class SignedWalk {
public:
    explicit SignedWalk(std::vector<int> period) : terms_(std::move(period)) {}

    std::size_t period_length() const noexcept { return terms_.size(); }
    std::span<const int> period() const noexcept { return terms_; }
    int operator[](std::size_t i) const { return terms_[i % terms_.size()]; }

    std::vector<int> prefix(std::size_t count) const {
        std::vector<int> out(count);
        for (std::size_t i = 0; i < count; ++i) out[i] = (*this)[i];
        return out;
    }

    /// Lexicographic on the infinite sequences; lcm of the periods is enough terms.
    friend std::strong_ordering operator<=>(const SignedWalk& a, const SignedWalk& b) {
        const std::size_t span = std::lcm(a.period_length(), b.period_length());
        for (std::size_t i = 0; i < span; ++i)
            if (auto c = a[i] <=> b[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const SignedWalk& a, const SignedWalk& b) { return (a <=> b) == 0; }

private:
    std::vector<int> terms_;
};

namespace detail {

// `standard` flips the sign after passing a descending vertex. `inclusive`
// also counts the current vertex; it is wrong and exists only so tests can
// check that the verification suites catch a broken sign rule.
enum class SignRule { standard, inclusive };

inline SignedWalk signed_walk_with(const VertexRef& v, const Ornament& o, const BlockSpec& b, SignRule rule) {
    check_vertex(v, o);
    const Necklace& nk = o[v.necklace_index];
    const std::size_t m = nk.length();
    const auto desc = descending_counts(nk, b).total;
    const std::size_t q = desc % 2 == 0 ? m : 2 * m;
    std::vector<int> terms(q);
    int flips = 0;
    for (std::size_t i = 0; i < q; ++i) {
        int color = nk[v.position + i];
        bool desc_here = b.is_descending(color);
        if (rule == SignRule::inclusive && desc_here) ++flips;
        terms[i] = flips % 2 == 0 ? color : -color;
        if (rule == SignRule::standard && desc_here) ++flips;
    }
    return SignedWalk(std::move(terms));
}

}  // namespace detail

/// a_i = (-1)^{r_i} w_i where r_i counts descending colors among w_0..w_{i-1}.
/// The period is the necklace length m, or 2m when the necklace has an odd
/// number of descending vertices.
inline SignedWalk signed_walk(const VertexRef& v, const Ornament& o, const BlockSpec& b) {
    return detail::signed_walk_with(v, o, b, detail::SignRule::standard);
}

/// Relative order that any (A,S)-labelling must give u and v; equal means same packet.
inline std::strong_ordering compare_vertices(const VertexRef& u, const VertexRef& v, const Ornament& o,
                                             const BlockSpec& b) {
    return signed_walk(u, o, b) <=> signed_walk(v, o, b);
}

struct Packet {
    std::vector<VertexRef> vertices;  ///< in label order
    int color = 0;
    SignedWalk walk{{}};

    std::size_t size() const noexcept { return vertices.size(); }
};

/// Packets in successor order; packet j+1 (mod x) succeeds packet j.
struct Orbit {
    std::vector<Packet> packets;
    int descending_packets = 0;  ///< d

    std::size_t x() const noexcept { return packets.size(); }
    std::size_t y() const noexcept { return packets.empty() ? 0 : packets.front().size(); }
    std::vector<int> colors() const {
        std::vector<int> out;
        for (const auto& p : packets) out.push_back(p.color);
        return out;
    }
};

struct Template {
    std::vector<Orbit> orbits;
};

namespace detail {

// Vertices of an ornament sorted by signed walk, ties broken by
// (necklace_index, position), with packets as contiguous runs.
struct PacketTable {
    std::vector<VertexRef> sorted;          // label - 1 -> vertex
    std::vector<SignedWalk> walks;          // parallel to `sorted`
    std::vector<std::size_t> packet_begin;  // packet j spans [packet_begin[j], packet_begin[j+1])
    std::vector<std::size_t> next_packet;   // successor packet of packet j
    std::vector<std::size_t> packet_of;     // sorted index -> packet

    std::size_t packet_count() const { return packet_begin.size() - 1; }
    std::size_t packet_size(std::size_t j) const { return packet_begin[j + 1] - packet_begin[j]; }
};

inline PacketTable build_packet_table(const Ornament& o, const BlockSpec& b, SignRule rule) {
    std::vector<std::size_t> offset(o.size() + 1, 0);
    for (std::size_t i = 0; i < o.size(); ++i) offset[i + 1] = offset[i] + o[i].length();
    const std::size_t n = offset.back();

    std::vector<VertexRef> refs;
    std::vector<SignedWalk> walks;
    refs.reserve(n);
    walks.reserve(n);
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t pos = 0; pos < o[i].length(); ++pos) {
            refs.push_back({i, pos});
            walks.push_back(signed_walk_with(refs.back(), o, b, rule));
        }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        if (auto c = walks[l] <=> walks[r]; c != 0) return c < 0;
        return refs[l] < refs[r];
    });

    PacketTable t;
    t.sorted.reserve(n);
    t.walks.reserve(n);
    t.packet_of.resize(n);
    std::vector<std::size_t> sorted_index(n);
    for (std::size_t s = 0; s < n; ++s) {
        t.sorted.push_back(refs[order[s]]);
        t.walks.push_back(walks[order[s]]);
        sorted_index[order[s]] = s;
        if (s == 0 || t.walks[s] != t.walks[s - 1]) t.packet_begin.push_back(s);
        t.packet_of[s] = t.packet_begin.size() - 1;
    }
    t.packet_begin.push_back(n);

    t.next_packet.resize(t.packet_count());
    for (std::size_t j = 0; j < t.packet_count(); ++j) {
        VertexRef next = successor(t.sorted[t.packet_begin[j]], o);
        t.next_packet[j] = t.packet_of[sorted_index[offset[next.necklace_index] + next.position]];
    }
    return t;
}

inline void require_theorem1(const Ornament& o, const BlockSpec& b) {
    if (!is_A_compatible(o, b))
        throw InvalidInput("ornament " + format_ornament(o) + " is not compatible with " + b.to_string());
    if (auto c = theorem1_violation(o, b)) {
        static constexpr const char* kWhat[] = {
            "",
            "a necklace whose period has an even number of descending vertices is not 1-repeating",
            "a necklace whose period has an odd number of descending vertices is more than 2-repeating",
            "a necklace with an odd number of descending vertices occurs more than once",
        };
        throw ConditionViolation(*c, "ornament violates condition " + std::to_string(*c) + ": " + kWhat[*c]);
    }
}

inline Permutation inverse_with(const Ornament& o, const BlockSpec& b, SignRule rule) {
    require_theorem1(o, b);
    const PacketTable t = build_packet_table(o, b, rule);
    std::vector<int> images(t.sorted.size());
    for (std::size_t j = 0; j < t.packet_count(); ++j) {
        const std::size_t next = t.next_packet[j];
        const std::size_t size = t.packet_size(j);
        if (t.packet_size(next) != size) throw InternalError("inverse: successor packet has a different size");
        const int color = o[t.sorted[t.packet_begin[j]].necklace_index][t.sorted[t.packet_begin[j]].position];
        const bool desc = b.is_descending(color);
        for (std::size_t i = 0; i < size; ++i) {
            std::size_t target = desc ? t.packet_begin[next + 1] - 1 - i : t.packet_begin[next] + i;
            images[t.packet_begin[j] + i] = static_cast<int>(target + 1);
        }
    }
    return Permutation(std::move(images));
}

}  // namespace detail

/// Packets are the classes of equal signed walks; orbits follow the successor-packet map.
/// Each orbit starts at its packet with the smallest walk; orbits are listed in that order.
inline Template build_template(const Ornament& o, const BlockSpec& b) {
    if (!is_A_compatible(o, b))
        throw InvalidInput("build_template: ornament is not compatible with " + b.to_string());
    const auto t = detail::build_packet_table(o, b, detail::SignRule::standard);
    Template tpl;
    std::vector<bool> seen(t.packet_count(), false);
    for (std::size_t start = 0; start < t.packet_count(); ++start) {
        if (seen[start]) continue;
        Orbit orbit;
        for (std::size_t j = start; !seen[j]; j = t.next_packet[j]) {
            seen[j] = true;
            Packet p;
            p.vertices.assign(t.sorted.begin() + static_cast<std::ptrdiff_t>(t.packet_begin[j]),
                              t.sorted.begin() + static_cast<std::ptrdiff_t>(t.packet_begin[j + 1]));
            p.color = o[p.vertices.front().necklace_index][p.vertices.front().position];
            p.walk = t.walks[t.packet_begin[j]];
            if (b.is_descending(p.color)) ++orbit.descending_packets;
            orbit.packets.push_back(std::move(p));
        }
        tpl.orbits.push_back(std::move(orbit));
    }
    return tpl;
}

/// Packet sizes constant per orbit, orbit color cycles pairwise distinct, color totals equal to A.
inline bool is_A_compatible(const Template& tpl, const BlockSpec& b) {
    std::vector<int> counts(static_cast<std::size_t>(b.k()) + 1, 0);
    std::vector<std::vector<int>> cycles;
    for (const auto& orbit : tpl.orbits) {
        if (orbit.packets.empty()) return false;
        for (const auto& p : orbit.packets) {
            if (p.size() != orbit.y()) return false;
            if (p.color < 1 || p.color > b.k()) return false;
            counts[static_cast<std::size_t>(p.color)] += static_cast<int>(p.size());
        }
        cycles.push_back(least_rotation(orbit.colors()));
    }
    std::sort(cycles.begin(), cycles.end());
    if (std::adjacent_find(cycles.begin(), cycles.end()) != cycles.end()) return false;
    for (int i = 1; i <= b.k(); ++i)
        if (counts[static_cast<std::size_t>(i)] != b.length(i)) return false;
    return true;
}

/// The unique (A,S)-permutation whose forward image is `o`.
///
/// Vertices are labelled 1..n in signed-walk order. Inside a packet the j-th
/// smallest label goes to the j-th smallest label of the successor packet
/// (ascending color) or to its j-th largest (descending color).
///
/// Throws ConditionViolation naming the failed image condition, or
/// InvalidInput if `o` is not A-compatible.
inline Permutation inverse(const Ornament& o, const BlockSpec& b) {
    return detail::inverse_with(o, b, detail::SignRule::standard);
}

/// Cycle lengths produced by one orbit of x packets of size y with d descending packets.
inline std::vector<int> orbit_cycle_structure(const Orbit& orbit) {
    const int x = static_cast<int>(orbit.x());
    const int y = static_cast<int>(orbit.y());
    std::vector<int> out;
    if (orbit.descending_packets % 2 == 0) {
        out.assign(static_cast<std::size_t>(y), x);
    } else {
        out.assign(static_cast<std::size_t>(y / 2), 2 * x);
        if (y % 2 == 1) out.push_back(x);
    }
    return out;
}

/// Recomputes d from `b` rather than trusting the stored count.
inline std::vector<int> orbit_cycle_structure(const Orbit& orbit, const BlockSpec& b) {
    Orbit copy{{}, 0};
    copy.packets = orbit.packets;
    for (const auto& p : orbit.packets)
        if (b.is_descending(p.color)) ++copy.descending_packets;
    return orbit_cycle_structure(copy);
}

/// Splits every 2-repeating necklace into two copies of its period.
inline Ornament to_good_ornament(const Ornament& o, const BlockSpec& b) {
    detail::require_theorem1(o, b);
    std::vector<Necklace> out;
    for (const auto& nk : o.necklaces()) {
        auto [period, r] = fundamental_period(nk);
        if (r == 1) {
            out.push_back(nk);
        } else {
            out.emplace_back(period);
            out.emplace_back(period);
        }
    }
    return Ornament(std::move(out));
}

/// Inverse of to_good_ornament: c copies of an odd-descending necklace become
/// floor(c/2) doubled necklaces, plus one single copy when c is odd.
inline Ornament from_good_ornament(const Ornament& o, const BlockSpec& b) {
    if (!is_A_good(o, b)) throw InvalidInput("from_good_ornament: ornament is not A-good for " + b.to_string());
    std::vector<Necklace> out;
    for (const auto& [nk, mult] : o.multiplicities()) {
        if (descending_counts(nk, b).total % 2 == 0) {
            out.insert(out.end(), static_cast<std::size_t>(mult), nk);
            continue;
        }
        std::vector<int> doubled(nk.colors().begin(), nk.colors().end());
        doubled.insert(doubled.end(), nk.colors().begin(), nk.colors().end());
        for (int i = 0; i < mult / 2; ++i) out.emplace_back(doubled);
        if (mult % 2 == 1) out.push_back(nk);
    }
    return Ornament(std::move(out));
}

/// An A-good ornament encodes a derangement iff it has no ascending 1-cycles
/// and an even number of 1-cycles of each descending color.
inline bool derangement_ornament_check(const Ornament& o, const BlockSpec& b) {
    if (!is_A_good(o, b)) throw InvalidInput("derangement_ornament_check: ornament is not A-good for " + b.to_string());
    std::vector<int> fixed(static_cast<std::size_t>(b.k()) + 1, 0);
    for (const auto& nk : o.necklaces())
        if (nk.length() == 1) ++fixed[static_cast<std::size_t>(nk[0])];
    for (int c = 1; c <= b.k(); ++c) {
        int f = fixed[static_cast<std::size_t>(c)];
        if (b.is_descending(c) ? f % 2 != 0 : f != 0) return false;
    }
    return true;
}

/// A-compatible, no 1-cycles, every necklace 1- or 2-repeating, and the
/// 2-repeating ones are monochromatic descending 2-cycles.
inline bool is_derangement_ornament(const Ornament& o, const BlockSpec& b) {
    if (!is_A_compatible(o, b)) return false;
    for (const auto& nk : o.necklaces()) {
        if (nk.length() == 1) return false;
        int r = fundamental_period(nk).r;
        if (r == 1) continue;
        if (r != 2 || nk.length() != 2 || !b.is_descending(nk[0])) return false;
    }
    return true;
}

/// Merges each pair of equal descending 1-cycles into one monochromatic 2-cycle.
inline Ornament pair_fixed_cycles(const Ornament& o, const BlockSpec& b) {
    if (!derangement_ornament_check(o, b))
        throw InvalidInput("pair_fixed_cycles: ornament fails the derangement condition");
    std::vector<Necklace> out;
    for (const auto& [nk, mult] : o.multiplicities()) {
        if (nk.length() != 1) {
            out.insert(out.end(), static_cast<std::size_t>(mult), nk);
            continue;
        }
        for (int i = 0; i < mult / 2; ++i) out.push_back(Necklace{nk[0], nk[0]});
    }
    return Ornament(std::move(out));
}

inline Ornament unpair_fixed_cycles(const Ornament& o, const BlockSpec& b) {
    if (!is_derangement_ornament(o, b))
        throw InvalidInput("unpair_fixed_cycles: ornament is not a derangement ornament");
    std::vector<Necklace> out;
    for (const auto& nk : o.necklaces()) {
        if (nk.length() == 2 && nk[0] == nk[1]) {
            out.push_back(Necklace{nk[0]});
            out.push_back(Necklace{nk[0]});
        } else {
            out.push_back(nk);
        }
    }
    return Ornament(std::move(out));
}

/// An (A, complement of S)-permutation matched to `p`.
///
/// When the cycle type has distinct odd parts and no part 2 mod 4, the forward
/// image is reinterpreted directly and the cycle type is kept. Otherwise `p`
/// must be an involution; it goes through its good ornament and comes back as
/// an involution, possibly of another cycle type. Applying it again with the
/// complemented blocks returns `p`.
inline Permutation complement_transfer(const Permutation& p, const BlockSpec& b) {
    if (!is_as_permutation(p, b))
        throw InvalidInput("complement_transfer: permutation is not an (A,S)-permutation for " + b.to_string());
    const BlockSpec flipped = b.complemented();
    const Ornament image = forward(p, b);
    if (cycle_type(p).is_complement_symmetric()) return inverse(image, flipped);
    if (is_involution(p)) return inverse(from_good_ornament(to_good_ornament(image, b), flipped), flipped);
    throw InvalidInput("complement_transfer: cycle type " + cycle_type(p).to_string() +
                       " is not complement-symmetric and the permutation is not an involution");
}

}  // namespace gr
