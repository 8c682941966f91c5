#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "topoidx/factored.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

/// The three generalized multiplicative index families:
///   vertex_power(s):       prod over vertices of d(u)^s
///   edge_sum_power(a):     prod over edges of (d(u) + d(v))^a
///   edge_product_power(a): prod over edges of (d(u) * d(v))^a
enum class IndexKind { vertex_power, edge_sum_power, edge_product_power };

/// An index family plus its parameter. Integer parameters give exact factored
/// values; real parameters are evaluated in the log10 domain only.
struct IndexSpec {
    IndexKind kind = IndexKind::vertex_power;
    std::variant<BigInt, double> parameter = BigInt(1);

    static IndexSpec vertex_power(BigInt s) { return {IndexKind::vertex_power, std::move(s)}; }
    static IndexSpec edge_sum_power(BigInt a) { return {IndexKind::edge_sum_power, std::move(a)}; }
    static IndexSpec edge_product_power(BigInt a) {
        return {IndexKind::edge_product_power, std::move(a)};
    }
    static IndexSpec vertex_power_real(double s) { return {IndexKind::vertex_power, s}; }
    static IndexSpec edge_sum_power_real(double a) { return {IndexKind::edge_sum_power, a}; }
    static IndexSpec edge_product_power_real(double a) {
        return {IndexKind::edge_product_power, a};
    }

    bool exact() const { return std::holds_alternative<BigInt>(parameter); }

    const BigInt& integer_parameter() const {
        if (const auto* p = std::get_if<BigInt>(&parameter)) return *p;
        throw NonIntegerParameterError(
            "exact computation requires an integer parameter; got a real value");
    }

    double numeric_parameter() const {
        if (const auto* p = std::get_if<BigInt>(&parameter)) return p->convert_to<double>();
        return std::get<double>(parameter);
    }

    friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

enum class NamedIndex {
    first_multiplicative_zagreb,  // prod d(u)^2
    second_multiplicative_zagreb, // prod over edges d(u)*d(v)
    narumi_katayama,              // prod d(u)
    eliasi_first,                 // prod over edges d(u)+d(v)
    hyper_zagreb_first,           // prod over edges (d(u)+d(v))^2
    hyper_zagreb_second,          // prod over edges (d(u)*d(v))^2
};

inline constexpr std::array<NamedIndex, 6> kAllNamedIndices{
    NamedIndex::first_multiplicative_zagreb, NamedIndex::second_multiplicative_zagreb,
    NamedIndex::narumi_katayama,             NamedIndex::eliasi_first,
    NamedIndex::hyper_zagreb_first,          NamedIndex::hyper_zagreb_second,
};

inline IndexSpec named_spec(NamedIndex idx) {
    switch (idx) {
    case NamedIndex::first_multiplicative_zagreb: return IndexSpec::vertex_power(2);
    case NamedIndex::second_multiplicative_zagreb: return IndexSpec::edge_product_power(1);
    case NamedIndex::narumi_katayama: return IndexSpec::vertex_power(1);
    case NamedIndex::eliasi_first: return IndexSpec::edge_sum_power(1);
    case NamedIndex::hyper_zagreb_first: return IndexSpec::edge_sum_power(2);
    case NamedIndex::hyper_zagreb_second: return IndexSpec::edge_product_power(2);
    }
    throw InvalidInputError("unknown named index");
}

inline std::string_view named_token(NamedIndex idx) {
    switch (idx) {
    case NamedIndex::first_multiplicative_zagreb: return "z1";
    case NamedIndex::second_multiplicative_zagreb: return "z2";
    case NamedIndex::narumi_katayama: return "nk";
    case NamedIndex::eliasi_first: return "eliasi";
    case NamedIndex::hyper_zagreb_first: return "hz1";
    case NamedIndex::hyper_zagreb_second: return "hz2";
    }
    throw InvalidInputError("unknown named index");
}

inline std::optional<NamedIndex> named_from_token(std::string_view token) {
    for (NamedIndex idx : kAllNamedIndices)
        if (named_token(idx) == token) return idx;
    return std::nullopt;
}

/// Evaluates the product along degree/edge partitions:
///   vertex_power:       prod_d d^(s * count[d])
///   edge_sum_power:     prod_(d1,d2) (d1 + d2)^(a * count)
///   edge_product_power: prod_(d1,d2) (d1 * d2)^(a * count)
/// Empty partitions give 1 (empty product).
inline FactoredNumber compute_via_partitions(const DegreePartition& dp, const EdgePartition& ep,
                                             const IndexSpec& spec) {
    const BigInt& param = spec.integer_parameter();
    FactoredNumber acc;
    switch (spec.kind) {
    case IndexKind::vertex_power:
        for (const auto& [d, count] : dp.counts) {
            if (d == 0)
                throw IsolatedVertexError("vertex-power product is 0: " + std::to_string(count) +
                                          " vertex(es) of degree 0");
            acc *= pow(factor_small(d), param * count);
        }
        break;
    case IndexKind::edge_sum_power:
        for (const auto& [degrees, count] : ep.counts)
            acc *= pow(factor_small(degrees.first + degrees.second), param * count);
        break;
    case IndexKind::edge_product_power:
        for (const auto& [degrees, count] : ep.counts)
            acc *= pow(factor_small(degrees.first * degrees.second), param * count);
        break;
    }
    return acc;
}

/// Exact factored value of the index on g. Terms are aggregated by degree
/// partition first, so the cost is O(V + E) plus one big-exponent operation
/// per distinct degree class.
inline FactoredNumber compute_index(const MolecularGraph& g, const IndexSpec& spec) {
    return compute_via_partitions(degree_partition(g), edge_partition(g), spec);
}

inline FactoredNumber compute_named(const MolecularGraph& g, NamedIndex idx) {
    return compute_index(g, named_spec(idx));
}

/// log10 of the index value, accumulated per element; accepts real parameters.
/// Agrees with to_log10(compute_index(...)) within 1e-9 for integer ones.
inline double compute_index_log(const MolecularGraph& g, const IndexSpec& spec) {
    detail::CompensatedSum acc;
    switch (spec.kind) {
    case IndexKind::vertex_power:
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const std::size_t d = g.degree(v);
            if (d == 0)
                throw IsolatedVertexError("vertex-power product is 0: vertex " +
                                          std::to_string(v) + " has degree 0");
            acc.add(std::log10(static_cast<long double>(d)));
        }
        break;
    case IndexKind::edge_sum_power:
        for (const auto& [u, v] : g.edges())
            acc.add(std::log10(static_cast<long double>(g.degree(u) + g.degree(v))));
        break;
    case IndexKind::edge_product_power:
        for (const auto& [u, v] : g.edges())
            acc.add(std::log10(static_cast<long double>(g.degree(u)) *
                               static_cast<long double>(g.degree(v))));
        break;
    }
    return spec.numeric_parameter() * static_cast<double>(acc.value());
}

} // namespace topoidx
