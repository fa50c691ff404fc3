#pragma once

// Exact counts of (A,S)-permutations: derangements by inclusion-exclusion and
// by generating-function coefficient extraction, counts per cycle type via
// ornaments (cross-checked by brute force), involutions, and the fixed-point
// polynomial identity for descending derangements.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gr/bijection.hpp"
#include "gr/core.hpp"
#include "gr/error.hpp"
#include "gr/ornament.hpp"

namespace gr {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigCount& v) { return v.str(); }

inline BigCount factorial(int n) {
    BigCount f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigCount binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

/// (sum parts)! / prod(parts!). Empty input gives 1.
inline BigCount multinomial(std::span<const int> parts) {
    BigCount c = 1;
    int total = 0;
    for (int p : parts) {
        if (p < 0) throw InvalidInput("multinomial: negative part");
        total += p;
        c *= binomial(total, p);
    }
    return c;
}

inline BigCount multinomial(std::initializer_list<int> parts) {
    return multinomial(std::span<const int>(parts.begin(), parts.size()));
}

/// Dense power series in k variables with per-variable degree caps.
/// Products drop every term above a cap.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<int> caps) : caps_(std::move(caps)) {
        strides_.resize(caps_.size());
        std::size_t size = 1;
        for (std::size_t i = caps_.size(); i-- > 0;) {
            if (caps_[i] < 0) throw InvalidInput("series: negative degree cap");
            strides_[i] = size;
            size *= static_cast<std::size_t>(caps_[i]) + 1;
        }
        coeffs_.assign(size, BigCount(0));
    }

    std::span<const int> caps() const noexcept { return caps_; }
    std::size_t term_count() const noexcept { return coeffs_.size(); }

    bool within_caps(std::span<const int> exps) const {
        if (exps.size() != caps_.size()) return false;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] < 0 || exps[i] > caps_[i]) return false;
        return true;
    }

    const BigCount& coefficient(std::span<const int> exps) const { return coeffs_[index(exps)]; }
    BigCount& coefficient(std::span<const int> exps) { return coeffs_[index(exps)]; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& l, const TruncatedSeries& r) {
        l.require_same_shape(r);
        TruncatedSeries out(l.caps_);
        std::vector<int> el(l.caps_.size()), er(l.caps_.size()), sum(l.caps_.size());
        for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
            if (l.coeffs_[i] == 0) continue;
            l.decode(i, el);
            for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
                if (r.coeffs_[j] == 0) continue;
                r.decode(j, er);
                bool inside = true;
                for (std::size_t v = 0; v < sum.size() && inside; ++v) {
                    sum[v] = el[v] + er[v];
                    inside = sum[v] <= l.caps_[v];
                }
                if (inside) out.coeffs_[out.index(sum)] += l.coeffs_[i] * r.coeffs_[j];
            }
        }
        return out;
    }

    /// 1 / (1 - x_1 - ... - x_k): the coefficient of x^e is multinomial(e).
    static TruncatedSeries geometric(std::vector<int> caps) {
        TruncatedSeries s(std::move(caps));
        std::vector<int> e(s.caps_.size());
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            s.decode(i, e);
            s.coeffs_[i] = multinomial(e);
        }
        return s;
    }

    /// sum_j coeffs[j] * x_var^j, truncated at the cap of `var` (0-based).
    static TruncatedSeries univariate(std::vector<int> caps, std::size_t var, std::span<const BigCount> coeffs) {
        TruncatedSeries s(std::move(caps));
        std::vector<int> e(s.caps_.size(), 0);
        for (std::size_t j = 0; j < coeffs.size() && static_cast<int>(j) <= s.caps_[var]; ++j) {
            e[var] = static_cast<int>(j);
            s.coefficient(e) = coeffs[j];
        }
        return s;
    }

private:
    std::size_t index(std::span<const int> exps) const {
        if (!within_caps(exps)) throw InvalidInput("series: exponent outside the truncation caps");
        std::size_t idx = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) idx += strides_[i] * static_cast<std::size_t>(exps[i]);
        return idx;
    }

    void decode(std::size_t idx, std::vector<int>& exps) const {
        for (std::size_t i = 0; i < caps_.size(); ++i) {
            exps[i] = static_cast<int>(idx / strides_[i]);
            idx %= strides_[i];
        }
    }

    void require_same_shape(const TruncatedSeries& o) const {
        if (caps_ != o.caps_) throw InvalidInput("series: mismatched truncation caps");
    }

    std::vector<int> caps_;
    std::vector<std::size_t> strides_;
    std::vector<BigCount> coeffs_;
};

/// Inclusion-exclusion: sum over 0 <= b_m <= l_m of (-1)^{sum b} multinomial(a - b),
/// with l_m = a_m for descending blocks and 1 otherwise.
inline BigCount count_derangements_pie(const BlockSpec& b) {
    const int k = b.k();
    std::vector<int> upper(static_cast<std::size_t>(k));
    for (int m = 1; m <= k; ++m) upper[static_cast<std::size_t>(m - 1)] = b.is_descending(m) ? b.length(m) : 1;

    BigCount total = 0;
    std::vector<int> removed(static_cast<std::size_t>(k), 0);
    std::vector<int> rest(static_cast<std::size_t>(k));
    while (true) {
        int sign_parity = 0;
        bool valid = true;
        for (int m = 0; m < k; ++m) {
            rest[static_cast<std::size_t>(m)] = b.length(m + 1) - removed[static_cast<std::size_t>(m)];
            sign_parity += removed[static_cast<std::size_t>(m)];
            valid = valid && rest[static_cast<std::size_t>(m)] >= 0;
        }
        if (valid) {
            if (sign_parity % 2 == 0)
                total += multinomial(rest);
            else
                total -= multinomial(rest);
        }
        int m = 0;
        while (m < k && removed[static_cast<std::size_t>(m)] == upper[static_cast<std::size_t>(m)]) removed[static_cast<std::size_t>(m++)] = 0;
        if (m == k) break;
        ++removed[static_cast<std::size_t>(m)];
    }
    return total;
}

/// Coefficient of x^A in  1/(1 - sum x_i) * prod_{i not in S}(1 - x_i) / prod_{i in S}(1 + x_i).
inline BigCount count_derangements_gf(const BlockSpec& b) {
    std::vector<int> caps(b.lengths().begin(), b.lengths().end());
    TruncatedSeries series = TruncatedSeries::geometric(caps);
    for (int i = 1; i <= b.k(); ++i) {
        std::vector<BigCount> factor;
        if (b.is_descending(i)) {
            for (int j = 0; j <= b.length(i); ++j) factor.emplace_back(j % 2 == 0 ? 1 : -1);
        } else {
            factor = {BigCount(1), BigCount(-1)};
        }
        series = series * TruncatedSeries::univariate(caps, static_cast<std::size_t>(i - 1), factor);
    }
    return series.coefficient(caps);
}

/// Brute-force derangement count over the enumerated (A,S)-permutations.
inline BigCount count_derangements_brute(const BlockSpec& b, std::size_t limit = kDefaultPermutationLimit) {
    BigCount n = 0;
    for_each_as_permutation(b, [&](const Permutation& p) { n += is_derangement(p) ? 1 : 0; }, limit);
    return n;
}

struct CountLimits {
    /// Cap for counting through cycle-type-restricted ornament enumeration.
    std::size_t ornament_n = 18;
    /// Counts with n at most this are re-derived by filtering permutations.
    std::size_t brute_force_n = 10;
};

using CycleTypeTable = std::map<CycleType, BigCount>;

/// Counts of (A,S)-permutations per cycle type, read off the image ornaments.
inline CycleTypeTable cycle_type_table(const BlockSpec& b, std::size_t limit = kDefaultOrnamentLimit) {
    CycleTypeTable table;
    for_each_ornament(b, OrnamentFilter::theorem1, [&](const Ornament& o) { ++table[ornament_cycle_type(o)]; }, limit);
    return table;
}

inline CycleTypeTable cycle_type_table_brute(const BlockSpec& b, std::size_t limit = kDefaultPermutationLimit) {
    CycleTypeTable table;
    for_each_as_permutation(b, [&](const Permutation& p) { ++table[cycle_type(p)]; }, limit);
    return table;
}

/// Number of (A,S)-permutations of cycle type `t`, counted as image ornaments
/// of that type and re-checked against permutation filtering when small.
inline BigCount count_by_cycle_type(const BlockSpec& b, const CycleType& t, const CountLimits& limits = {}) {
    if (t.n() != b.n())
        throw InvalidInput("cycle type " + t.to_string() + " does not partition n=" + std::to_string(b.n()));
    BigCount via_ornaments = 0;
    for_each_ornament(b, OrnamentFilter::theorem1, [&](const Ornament&) { ++via_ornaments; }, limits.ornament_n, t);
    if (static_cast<std::size_t>(b.n()) <= limits.brute_force_n) {
        BigCount via_permutations = 0;
        for_each_as_permutation(b, [&](const Permutation& p) { via_permutations += cycle_type(p) == t ? 1 : 0; },
                                limits.brute_force_n);
        if (via_permutations != via_ornaments)
            throw InternalError("count_by_cycle_type " + b.to_string() + " " + t.to_string() + ": ornaments give " +
                                via_ornaments.str() + ", permutations give " + via_permutations.str());
    }
    return via_ornaments;
}

struct CountComparison {
    BigCount left;
    BigCount right;
    bool equal = false;
};

/// Counts for (a_1..a_k, S) and for the blocks reordered by `sigma`
/// (new block j is old block sigma(j), keeping its direction).
inline CountComparison verify_block_symmetry(const BlockSpec& b, std::span<const int> sigma, const CycleType& t,
                                             const CountLimits& limits = {}) {
    CountComparison r;
    r.left = count_by_cycle_type(b, t, limits);
    r.right = count_by_cycle_type(b.permuted(sigma), t, limits);
    r.equal = r.left == r.right;
    return r;
}

struct ComplementComparison {
    BigCount left;
    BigCount right;
    bool equal = false;
    bool applicable = false;  ///< odd parts distinct and no part 2 mod 4
};

inline ComplementComparison verify_complement(const BlockSpec& b, const CycleType& t, const CountLimits& limits = {}) {
    ComplementComparison r;
    r.applicable = t.is_complement_symmetric();
    r.left = count_by_cycle_type(b, t, limits);
    r.right = count_by_cycle_type(b.complemented(), t, limits);
    r.equal = r.left == r.right;
    return r;
}

/// Involutions = cycle types with all parts at most 2.
inline BigCount count_involutions(const BlockSpec& b, const CountLimits& limits = {}) {
    if (static_cast<std::size_t>(b.n()) > limits.ornament_n)
        throw LimitExceeded("count_involutions: n=" + std::to_string(b.n()) + " exceeds limit " +
                            std::to_string(limits.ornament_n));
    BigCount total = 0;
    for (int twos = 0; 2 * twos <= b.n(); ++twos) {
        std::vector<int> parts(static_cast<std::size_t>(twos), 2);
        parts.insert(parts.end(), static_cast<std::size_t>(b.n() - 2 * twos), 1);
        total += count_by_cycle_type(b, CycleType(std::move(parts)), limits);
    }
    return total;
}

/// D_0 = 1, D_1 = 0, D_m = (m-1)(D_{m-1} + D_{m-2}).
inline std::vector<BigCount> derangement_numbers(int up_to) {
    std::vector<BigCount> d(static_cast<std::size_t>(std::max(up_to, 1)) + 1);
    d[0] = 1;
    d[1] = 0;
    for (int m = 2; m <= up_to; ++m)
        d[static_cast<std::size_t>(m)] = (m - 1) * (d[static_cast<std::size_t>(m - 1)] + d[static_cast<std::size_t>(m - 2)]);
    d.resize(static_cast<std::size_t>(up_to) + 1);
    return d;
}

/// Permutations of S_n by number of fixed points: coefficient j is binomial(n, j) * D_{n-j}.
struct FixedPointPolynomial {
    int n = 0;
    std::vector<BigCount> coefficients;

    Rational evaluate(const Rational& lambda) const {
        Rational acc = 0;
        for (std::size_t j = coefficients.size(); j-- > 0;) acc = acc * lambda + Rational(coefficients[j]);
        return acc;
    }
};

inline FixedPointPolynomial fixed_point_polynomial(int n) {
    if (n < 0) throw InvalidInput("fixed_point_polynomial: n must be non-negative");
    auto d = derangement_numbers(n);
    FixedPointPolynomial f{n, {}};
    for (int j = 0; j <= n; ++j) f.coefficients.push_back(binomial(n, j) * d[static_cast<std::size_t>(n - j)]);
    return f;
}

/// Evaluates
///   1/prod(a_i!) * sum_{T subset [n]} (-1)^|T| f(n - |T|) prod_i f(|A_i cap T|)
/// at `lambda`, with f the fixed-point polynomial. The subset sum is grouped by
/// t_i = |A_i cap T|, each group of size prod binomial(a_i, t_i). Throws
/// InternalError if the result is not an integer.
inline BigCount mystery_polynomial(std::span<const int> a, const Rational& lambda) {
    if (a.empty()) throw InvalidInput("mystery_polynomial: no blocks");
    const int n = std::accumulate(a.begin(), a.end(), 0);
    std::vector<Rational> f(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) f[static_cast<std::size_t>(m)] = fixed_point_polynomial(m).evaluate(lambda);

    Rational sum = 0;
    std::vector<int> t(a.size(), 0);
    while (true) {
        int taken = 0;
        Rational term = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            taken += t[i];
            term *= Rational(binomial(a[i], t[i])) * f[static_cast<std::size_t>(t[i])];
        }
        term *= f[static_cast<std::size_t>(n - taken)];
        if (taken % 2 == 0)
            sum += term;
        else
            sum -= term;
        std::size_t i = 0;
        while (i < a.size() && t[i] == a[i]) t[i++] = 0;
        if (i == a.size()) break;
        ++t[i];
    }
    BigCount denom = 1;
    for (int ai : a) denom *= factorial(ai);
    sum /= Rational(denom);
    if (boost::multiprecision::denominator(sum) != 1)
        throw InternalError("mystery_polynomial: value is not an integer");
    return boost::multiprecision::numerator(sum);
}

inline BigCount mystery_polynomial(std::initializer_list<int> a, const Rational& lambda) {
    return mystery_polynomial(std::span<const int>(a.begin(), a.size()), lambda);
}

}  // namespace gr
