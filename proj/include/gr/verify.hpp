#pragma once

// Exhaustive consistency suites over every block composition and descending
// set within size limits. Used by `grbij verify` and by the tests.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gr/bijection.hpp"
#include "gr/core.hpp"
#include "gr/enumeration.hpp"
#include "gr/ornament.hpp"

namespace gr {

/// Compositions of n with at most `max_parts` parts, in lexicographic order.
inline std::vector<std::vector<int>> compositions(int n, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (!parts.empty()) out.push_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_parts) return;
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// Every BlockSpec with 1 <= n <= max_n, k <= max_k, and every descending set.
inline std::vector<BlockSpec> all_block_specs(int max_n, int max_k, int min_n = 1) {
    std::vector<BlockSpec> out;
    for (int n = std::max(min_n, 1); n <= max_n; ++n)
        for (const auto& a : compositions(n, max_k)) {
            const int k = static_cast<int>(a.size());
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                std::vector<int> s;
                for (int i = 0; i < k; ++i)
                    if (mask & (1u << i)) s.push_back(i + 1);
                out.emplace_back(a, std::move(s));
            }
        }
    return out;
}

struct SuiteReport {
    explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty() && passed == cases; }

    void record(bool pass, const std::function<std::string()>& describe) {
        ++cases;
        if (pass)
            ++passed;
        else if (failures.size() < 20)
            failures.push_back(describe());
    }
};

struct VerifyConfig {
    int max_n = 6;
    int max_k = 3;
    detail::SignRule sign_rule = detail::SignRule::standard;
};

inline SuiteReport suite_round_trip(const VerifyConfig& cfg) {
    SuiteReport r{"round-trip"};
    for (const auto& b : all_block_specs(cfg.max_n, cfg.max_k)) {
        for_each_as_permutation(b, [&](const Permutation& p) {
            const Ornament o = forward(p, b);
            bool pass = false;
            std::string got;
            try {
                Permutation q = detail::inverse_with(o, b, cfg.sign_rule);
                pass = q == p && forward(q, b) == o;
                got = format_permutation(q);
            } catch (const std::exception& e) {
                got = std::string("error: ") + e.what();
            }
            r.record(pass, [&] {
                return b.to_string() + " p=" + format_permutation(p) + " ornament=" + format_ornament(o) +
                       " inverse=" + got;
            });
        });
    }
    return r;
}

inline SuiteReport suite_image(const VerifyConfig& cfg) {
    SuiteReport r{"image"};
    for (const auto& b : all_block_specs(cfg.max_n, cfg.max_k)) {
        std::set<Ornament> images;
        for_each_as_permutation(b, [&](const Permutation& p) { images.insert(forward(p, b)); });
        std::set<Ornament> admissible;
        for_each_ornament(b, OrnamentFilter::theorem1, [&](const Ornament& o) { admissible.insert(o); });
        const BigCount count = multinomial(b.lengths());
        r.record(images == admissible && BigCount(images.size()) == count, [&] {
            std::ostringstream os;
            os << b.to_string() << " images=" << images.size() << " admissible=" << admissible.size()
               << " multinomial=" << count;
            return os.str();
        });
    }
    return r;
}

inline SuiteReport suite_derangement_counts(const VerifyConfig& cfg) {
    SuiteReport r{"derangement-counts"};
    for (const auto& b : all_block_specs(cfg.max_n, cfg.max_k)) {
        BigCount pie = count_derangements_pie(b);
        BigCount gf = count_derangements_gf(b);
        BigCount brute = count_derangements_brute(b);
        r.record(pie == gf && gf == brute, [&] {
            return b.to_string() + " pie=" + pie.str() + " gf=" + gf.str() + " brute=" + brute.str();
        });
    }
    return r;
}

namespace detail {

class TableCache {
public:
    const CycleTypeTable& get(const BlockSpec& b) {
        auto key = b.to_string();
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(std::move(key), cycle_type_table(b)).first;
        return it->second;
    }

private:
    std::map<std::string, CycleTypeTable> cache_;
};

inline BigCount lookup(const CycleTypeTable& t, const CycleType& c) {
    auto it = t.find(c);
    return it == t.end() ? BigCount(0) : it->second;
}

}  // namespace detail

/// Reordering blocks (with their directions) leaves every cycle-type count unchanged.
inline SuiteReport suite_block_symmetry(const VerifyConfig& cfg) {
    SuiteReport r{"block-symmetry"};
    detail::TableCache cache;
    for (const auto& b : all_block_specs(cfg.max_n, cfg.max_k)) {
        const auto& left = cache.get(b);
        std::vector<int> sigma(static_cast<std::size_t>(b.k()));
        std::iota(sigma.begin(), sigma.end(), 1);
        do {
            const BlockSpec moved = b.permuted(sigma);
            const auto& right = cache.get(moved);
            r.record(left == right, [&] { return b.to_string() + " vs " + moved.to_string(); });
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return r;
}

/// Complementing S preserves counts for complement-symmetric cycle types.
inline SuiteReport suite_complement(const VerifyConfig& cfg) {
    SuiteReport r{"complement"};
    detail::TableCache cache;
    for (const auto& b : all_block_specs(cfg.max_n, cfg.max_k)) {
        const auto& left = cache.get(b);
        const auto& right = cache.get(b.complemented());
        for (const auto& t : partitions_of(b.n())) {
            if (!t.is_complement_symmetric()) continue;
            BigCount l = detail::lookup(left, t), rr = detail::lookup(right, t);
            r.record(l == rr, [&] { return b.to_string() + " t=" + t.to_string() + " " + l.str() + " vs " + rr.str(); });
        }
    }
    return r;
}

inline SuiteReport suite_involution_complement(const VerifyConfig& cfg) {
    SuiteReport r{"involution-complement"};
    for (const auto& b : all_block_specs(cfg.max_n, cfg.max_k)) {
        BigCount l = count_involutions(b), rr = count_involutions(b.complemented());
        r.record(l == rr, [&] { return b.to_string() + " " + l.str() + " vs " + rr.str(); });
    }
    return r;
}

inline std::vector<Rational> mystery_evaluation_points() { return {Rational(0), Rational(1), Rational(2), Rational(1, 2)}; }

/// The fixed-point polynomial sum is the same at every evaluation point and
/// equals the all-descending derangement count.
inline SuiteReport suite_mystery_polynomial(const VerifyConfig& cfg) {
    SuiteReport r{"mystery-polynomial"};
    for (int n = 1; n <= cfg.max_n; ++n)
        for (const auto& a : compositions(n, cfg.max_k)) {
            std::vector<int> all(a.size());
            std::iota(all.begin(), all.end(), 1);
            const BigCount expected = count_derangements_pie(BlockSpec(a, all));
            std::string values;
            bool pass = true;
            for (const auto& lambda : mystery_evaluation_points()) {
                BigCount v = mystery_polynomial(a, lambda);
                values += " " + v.str();
                pass = pass && v == expected;
            }
            r.record(pass, [&] {
                return "a=(" + detail::join<int>(a, ",") + ") expected " + expected.str() + " got" + values;
            });
        }
    return r;
}

inline SuiteReport suite_good_count(const VerifyConfig& cfg) {
    SuiteReport r{"good-ornament-count"};
    for (int n = 1; n <= cfg.max_n; ++n)
        for (const auto& a : compositions(n, cfg.max_k)) {
            BlockSpec b(a);
            std::size_t good = 0;
            for_each_ornament(b, OrnamentFilter::good, [&](const Ornament&) { ++good; });
            const BigCount expected = multinomial(a);
            r.record(BigCount(good) == expected,
                     [&] { return b.to_string() + " good=" + std::to_string(good) + " multinomial=" + expected.str(); });
        }
    return r;
}

inline std::vector<SuiteReport> run_all_suites(const VerifyConfig& cfg) {
    return {suite_round_trip(cfg),         suite_image(cfg),
            suite_derangement_counts(cfg), suite_block_symmetry(cfg),
            suite_complement(cfg),         suite_involution_complement(cfg),
            suite_mystery_polynomial(cfg), suite_good_count(cfg)};
}

}  // namespace gr
