#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "topoidx/errors.hpp"

namespace topoidx {

// Arbitrary-size signed integer used for exponents and formula parameters.
using BigInt = boost::multiprecision::cpp_int;

// Default cap on exact decimal rendering; beyond it only the digit count is
// reported. Overridable per call (and via TOPOIDX_MAX_DIGITS in the CLI).
inline constexpr std::uint64_t kDefaultMaxDigits = 10'000;

namespace detail {

inline bool is_prime(std::uint64_t k) {
    if (k < 2) return false;
    if (k % 2 == 0) return k == 2;
    for (std::uint64_t d = 3; d <= k / d; d += 2)
        if (k % d == 0) return false;
    return true;
}

// Compensated (Kahan) accumulator in long double.
class CompensatedSum {
public:
    void add(long double term) {
        const long double y = term - compensation_;
        const long double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    long double value() const { return sum_; }

private:
    long double sum_ = 0.0L;
    long double compensation_ = 0.0L;
};

} // namespace detail

/// A positive rational of the form prod prime^exponent, held as its canonical
/// prime factorization: map keys are primes, exponents are nonzero arbitrary
/// size integers, and the empty map is exactly 1. Negative exponents arise
/// from negative index parameters; such values are exact but have no decimal
/// expansion. Immutable in practice: all operations return new values.
class FactoredNumber {
public:
    using FactorMap = std::map<std::uint64_t, BigInt>;

    FactoredNumber() = default; // the number 1

    // Canonicalizes (drops zero exponents) and validates that keys are prime.
    explicit FactoredNumber(FactorMap factors) : factors_(std::move(factors)) {
        for (auto it = factors_.begin(); it != factors_.end();) {
            if (!detail::is_prime(it->first))
                throw InvalidInputError("factor base " + std::to_string(it->first) +
                                        " is not prime");
            if (it->second == 0)
                it = factors_.erase(it);
            else
                ++it;
        }
    }

    static FactoredNumber one() { return FactoredNumber{}; }

    const FactorMap& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    bool has_negative_exponent() const {
        for (const auto& [base, exp] : factors_)
            if (exp < 0) return true;
        return false;
    }

    FactoredNumber& operator*=(const FactoredNumber& rhs) {
        for (const auto& [base, exp] : rhs.factors_) {
            auto [it, inserted] = factors_.try_emplace(base, exp);
            if (!inserted) {
                it->second += exp;
                if (it->second == 0) factors_.erase(it);
            }
        }
        return *this;
    }

    friend FactoredNumber operator*(FactoredNumber lhs, const FactoredNumber& rhs) {
        lhs *= rhs;
        return lhs;
    }

    friend bool operator==(const FactoredNumber&, const FactoredNumber&) = default;

private:
    // Internal fast path for maps that are canonical by construction.
    struct canonical_tag {};
    FactoredNumber(FactorMap factors, canonical_tag) : factors_(std::move(factors)) {}

    friend FactoredNumber factor_small(std::uint64_t k);
    friend FactoredNumber pow(const FactoredNumber& x, const BigInt& e);

    FactorMap factors_;
};

/// Factors k >= 1 by trial division. Terms fed to this are vertex degrees and
/// their pairwise sums/products, so any word-size k is in range.
inline FactoredNumber factor_small(std::uint64_t k) {
    if (k == 0) throw InvalidInputError("factor_small requires k >= 1, got 0");
    FactoredNumber::FactorMap factors;
    for (std::uint64_t p = 2; p <= k / p; p += (p == 2 ? 1 : 2)) {
        while (k % p == 0) {
            ++factors[p];
            k /= p;
        }
    }
    if (k > 1) ++factors[k];
    return FactoredNumber(std::move(factors), FactoredNumber::canonical_tag{});
}

/// Exponent-wise multiplication by e; pow(x, 0) is 1 for every x.
inline FactoredNumber pow(const FactoredNumber& x, const BigInt& e) {
    if (e == 0) return FactoredNumber::one();
    FactoredNumber::FactorMap factors;
    for (const auto& [base, exp] : x.factors())
        factors.emplace(base, exp * e);
    return FactoredNumber(std::move(factors), FactoredNumber::canonical_tag{});
}

namespace detail {

inline long double accumulate_log10(const FactoredNumber& x) {
    CompensatedSum acc;
    for (const auto& [base, exp] : x.factors())
        acc.add(exp.convert_to<long double>() * std::log10(static_cast<long double>(base)));
    return acc.value();
}

} // namespace detail

/// log10 of the value, accumulated term-wise in compensated long double.
inline double to_log10(const FactoredNumber& x) {
    return static_cast<double>(detail::accumulate_log10(x));
}

/// Result of decimal rendering: `text` holds the exact expansion when the
/// digit count fits the cap, otherwise only `digit_count` is populated.
/// `digit_count` is exact whenever `text` is present; for capped values it is
/// floor(log10)+1 from the extended-precision accumulation.
struct DecimalRendering {
    std::optional<std::string> text;
    BigInt digit_count;
};

namespace detail {

inline BigInt digit_count_from_log10(long double log10_value) {
    if (log10_value < 1.0L) return 1;
    return BigInt(std::floor(log10_value)) + 1;
}

} // namespace detail

/// Exact decimal expansion via arbitrary-precision multiplication, capped at
/// max_digits. All exponents must be nonnegative.
inline DecimalRendering to_decimal(const FactoredNumber& x,
                                   std::uint64_t max_digits = kDefaultMaxDigits) {
    for (const auto& [base, exp] : x.factors())
        if (exp < 0)
            throw NegativeExponentError("decimal rendering requires nonnegative exponents; " +
                                        std::to_string(base) + " has exponent " + exp.str());
    const BigInt estimate = detail::digit_count_from_log10(detail::accumulate_log10(x));
    // One digit of slack so boundary estimates are settled by the exact length.
    if (estimate > max_digits + 1)
        return DecimalRendering{std::nullopt, estimate};

    BigInt value = 1;
    for (const auto& [base, exp] : x.factors()) {
        if (exp > std::numeric_limits<unsigned>::max())
            throw InvalidInputError("exponent " + exp.str() + " too large to expand");
        value *= boost::multiprecision::pow(BigInt(base), exp.convert_to<unsigned>());
    }
    std::string text = value.str();
    const BigInt digits = static_cast<std::uint64_t>(text.size());
    if (digits > max_digits) return DecimalRendering{std::nullopt, digits};
    return DecimalRendering{std::move(text), digits};
}

inline bool equals(const FactoredNumber& x, const FactoredNumber& y) { return x == y; }

/// "2^18 * 3^6"; the number 1 renders as "1".
inline std::string to_string(const FactoredNumber& x) {
    if (x.is_one()) return "1";
    std::string out;
    for (const auto& [base, exp] : x.factors()) {
        if (!out.empty()) out += " * ";
        out += std::to_string(base) + "^" + exp.str();
    }
    return out;
}

/// {"factors": {"2": 18, "3": 6}, "log10": ..., "digits": 9, "decimal": "..."}.
/// "decimal" is omitted beyond max_digits; "digits" and "decimal" are both
/// omitted for values with negative exponents (non-integers).
inline nlohmann::ordered_json to_json(const FactoredNumber& x,
                                      std::uint64_t max_digits = kDefaultMaxDigits) {
    nlohmann::ordered_json j;
    auto factors = nlohmann::ordered_json::object();
    for (const auto& [base, exp] : x.factors()) {
        if (exp >= std::numeric_limits<std::int64_t>::min() &&
            exp <= std::numeric_limits<std::int64_t>::max())
            factors[std::to_string(base)] = exp.convert_to<std::int64_t>();
        else
            factors[std::to_string(base)] = exp.str();
    }
    j["factors"] = std::move(factors);
    j["log10"] = to_log10(x);
    if (!x.has_negative_exponent()) {
        const DecimalRendering d = to_decimal(x, max_digits);
        if (d.digit_count <= std::numeric_limits<std::uint64_t>::max())
            j["digits"] = d.digit_count.convert_to<std::uint64_t>();
        else
            j["digits"] = d.digit_count.str();
        if (d.text) j["decimal"] = *d.text;
    }
    return j;
}

} // namespace topoidx
