#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "topoidx/factored.hpp"
#include "topoidx/families.hpp"
#include "topoidx/graph.hpp"
#include "topoidx/index_engine.hpp"

namespace topoidx {

// Parameters are BigInt throughout: the polynomials are evaluated exactly at
// any size, independent of what the generators can materialize.

struct PahCounts {
    BigInt vertices; // 6n^2 + 6n
    BigInt edges;    // 9n^2 + 3n
    BigInt leaves;   // 6n
};

struct BenzenoidCounts {
    BigInt vertices; // 4mn + 4m + 2n - 2
    BigInt edges;    // 6mn + 5m + n - 4
};

namespace detail {

inline void require_pah_param(const BigInt& n) {
    if (n < 1) throw InvalidParameterError("pah requires n >= 1, got " + n.str());
}

inline void require_benzenoid_params(const BigInt& m, const BigInt& n) {
    if (m < 3) throw InvalidParameterError("benzenoid requires m >= 3, got m=" + m.str());
    if (n < 1) throw InvalidParameterError("benzenoid requires n >= 1, got n=" + n.str());
}

inline std::size_t to_count(const BigInt& value) {
    if (value < 0 || value > std::numeric_limits<std::size_t>::max())
        throw InvalidParameterError("partition count " + value.str() +
                                    " does not fit a machine word");
    return value.convert_to<std::size_t>();
}

} // namespace detail

inline PahCounts pah_counts(const BigInt& n) {
    detail::require_pah_param(n);
    return {6 * n * n + 6 * n, 9 * n * n + 3 * n, 6 * n};
}

inline BenzenoidCounts benzenoid_counts(const BigInt& m, const BigInt& n) {
    detail::require_benzenoid_params(m, n);
    return {4 * m * n + 4 * m + 2 * n - 2, 6 * m * n + 5 * m + n - 4};
}

/// The five vertex/edge class counts of the jagged rectangle:
/// degrees {2: 2m+4n+2, 3: 4mn+2m-2n-4} and degree pairs
/// {(2,2): 2n+4, (2,3): 4m+4n-4, (3,3): 6mn+m-5n-4}.
inline std::pair<DegreePartition, EdgePartition> benzenoid_partitions(const BigInt& m,
                                                                      const BigInt& n) {
    detail::require_benzenoid_params(m, n);
    DegreePartition dp;
    dp.counts[2] = detail::to_count(2 * m + 4 * n + 2);
    dp.counts[3] = detail::to_count(4 * m * n + 2 * m - 2 * n - 4);
    EdgePartition ep;
    ep.counts[{2, 2}] = detail::to_count(2 * n + 4);
    ep.counts[{2, 3}] = detail::to_count(4 * m + 4 * n - 4);
    ep.counts[{3, 3}] = detail::to_count(6 * m * n + m - 5 * n - 4);
    return {std::move(dp), std::move(ep)};
}

/// One "base^exponent" term of a closed-form product, with the base kept as
/// presented (4, 5, 6, 9, ...) rather than prime-canonical.
struct FormulaTerm {
    std::uint64_t base = 1;
    BigInt exponent;
    friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

/// Canonical factored value of a term list.
inline FactoredNumber canonicalize(const std::vector<FormulaTerm>& terms) {
    FactoredNumber acc;
    for (const auto& term : terms) acc *= pow(factor_small(term.base), term.exponent);
    return acc;
}

/// "4^6 * 6^6"; the empty list renders as "1".
inline std::string terms_to_string(const std::vector<FormulaTerm>& terms) {
    if (terms.empty()) return "1";
    std::string out;
    for (const auto& term : terms) {
        if (!out.empty()) out += " * ";
        out += std::to_string(term.base) + "^" + term.exponent.str();
    }
    return out;
}

/// Closed-form product for the flake family, with parameter p applied:
///   edge_sum_power:     4^(6pn) * 6^((9n^2-3n)p)
///   edge_product_power: 3^(18pn^2)
///   vertex_power:       3^(6pn^2)
inline std::vector<FormulaTerm> pah_form_terms(const IndexSpec& spec, const BigInt& n) {
    detail::require_pah_param(n);
    const BigInt& p = spec.integer_parameter();
    switch (spec.kind) {
    case IndexKind::edge_sum_power:
        return {{4, p * 6 * n}, {6, p * (9 * n * n - 3 * n)}};
    case IndexKind::edge_product_power: return {{3, p * 18 * n * n}};
    case IndexKind::vertex_power: return {{3, p * 6 * n * n}};
    }
    throw InvalidInputError("unknown index kind");
}

/// Closed-form product for the jagged rectangle:
///   edge_sum_power:     4^(p(2n+4)) * 5^(p(4m+4n-4)) * 6^(p(6mn+m-5n-4))
///   edge_product_power: 4^(p(2n+4)) * 6^(p(4m+4n-4)) * 9^(p(6mn+m-5n-4))
///   vertex_power:       2^((2m+4n+2)p) * 3^((4mn+2m-2n-4)p)
inline std::vector<FormulaTerm> benzenoid_form_terms(const IndexSpec& spec, const BigInt& m,
                                                     const BigInt& n) {
    detail::require_benzenoid_params(m, n);
    const BigInt& p = spec.integer_parameter();
    const BigInt e22 = 2 * n + 4;
    const BigInt e23 = 4 * m + 4 * n - 4;
    const BigInt e33 = 6 * m * n + m - 5 * n - 4;
    switch (spec.kind) {
    case IndexKind::edge_sum_power: return {{4, p * e22}, {5, p * e23}, {6, p * e33}};
    case IndexKind::edge_product_power: return {{4, p * e22}, {6, p * e23}, {9, p * e33}};
    case IndexKind::vertex_power:
        return {{2, p * (2 * m + 4 * n + 2)}, {3, p * (4 * m * n + 2 * m - 2 * n - 4)}};
    }
    throw InvalidInputError("unknown index kind");
}

inline FactoredNumber pah_closed_form(const IndexSpec& spec, const BigInt& n) {
    return canonicalize(pah_form_terms(spec, n));
}

inline FactoredNumber benzenoid_closed_form(const IndexSpec& spec, const BigInt& m,
                                            const BigInt& n) {
    return canonicalize(benzenoid_form_terms(spec, m, n));
}

inline std::vector<FormulaTerm> closed_form_terms(const IndexSpec& spec, const FamilyId& family) {
    if (const auto* p = std::get_if<PahParams>(&family)) return pah_form_terms(spec, p->n);
    const auto& b = std::get<BenzenoidParams>(family);
    return benzenoid_form_terms(spec, b.m, b.n);
}

inline FactoredNumber closed_form(const IndexSpec& spec, const FamilyId& family) {
    return canonicalize(closed_form_terms(spec, family));
}

inline FactoredNumber named_closed_form(NamedIndex idx, const FamilyId& family) {
    return closed_form(named_spec(idx), family);
}

/// Display presentation of the six special-case formulas, with the composite
/// bases each one is conventionally written with (e.g. the first Zagreb index
/// of the jagged rectangle as 4^... * 9^... instead of prime bases). All lists
/// canonicalize to named_closed_form of the same index and family.
inline std::vector<FormulaTerm> named_form_terms(NamedIndex idx, const FamilyId& family) {
    if (const auto* p = std::get_if<PahParams>(&family)) {
        detail::require_pah_param(p->n);
        const BigInt n = p->n;
        switch (idx) {
        case NamedIndex::first_multiplicative_zagreb: return {{3, 12 * n * n}};
        case NamedIndex::second_multiplicative_zagreb: return {{3, 18 * n * n}};
        case NamedIndex::narumi_katayama: return {{3, 6 * n * n}};
        case NamedIndex::eliasi_first: return {{4, 6 * n}, {6, 9 * n * n - 3 * n}};
        case NamedIndex::hyper_zagreb_first: return {{4, 12 * n}, {6, 18 * n * n - 6 * n}};
        case NamedIndex::hyper_zagreb_second: return {{3, 36 * n * n}};
        }
        throw InvalidInputError("unknown named index");
    }
    const auto& bz = std::get<BenzenoidParams>(family);
    detail::require_benzenoid_params(bz.m, bz.n);
    const BigInt m = bz.m;
    const BigInt n = bz.n;
    const BigInt v2 = 2 * m + 4 * n + 2;
    const BigInt v3 = 4 * m * n + 2 * m - 2 * n - 4;
    const BigInt e22 = 2 * n + 4;
    const BigInt e23 = 4 * m + 4 * n - 4;
    const BigInt e33 = 6 * m * n + m - 5 * n - 4;
    switch (idx) {
    case NamedIndex::first_multiplicative_zagreb: return {{4, v2}, {9, v3}};
    case NamedIndex::second_multiplicative_zagreb: return {{4, e22}, {6, e23}, {9, e33}};
    case NamedIndex::narumi_katayama: return {{2, v2}, {3, v3}};
    case NamedIndex::eliasi_first: return {{4, e22}, {5, e23}, {6, e33}};
    case NamedIndex::hyper_zagreb_first: return {{4, 2 * e22}, {5, 2 * e23}, {6, 2 * e33}};
    case NamedIndex::hyper_zagreb_second: return {{4, 2 * e22}, {6, 2 * e23}, {9, 2 * e33}};
    }
    throw InvalidInputError("unknown named index");
}

} // namespace topoidx
