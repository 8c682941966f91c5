#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "topoidx/errors.hpp"

namespace topoidx {

/// Hexagonal flake with a pendant (hydrogen) vertex on every boundary carbon;
/// n counts ring layers around the central hexagon.
struct PahParams {
    std::int64_t n = 1;
    friend bool operator==(const PahParams&, const PahParams&) = default;
};

/// Jagged-rectangle fused-hexagon system: n+1 rows of m-1 hexagons
/// interleaved with n rows of m hexagons.
struct BenzenoidParams {
    std::int64_t m = 3;
    std::int64_t n = 1;
    friend bool operator==(const BenzenoidParams&, const BenzenoidParams&) = default;
};

using FamilyId = std::variant<PahParams, BenzenoidParams>;

inline void validate(const PahParams& p) {
    if (p.n < 1)
        throw InvalidParameterError("pah requires n >= 1, got " + std::to_string(p.n));
}

// m >= 3 because the degree-pair edge counts are derived assuming 2m-6 >= 0;
// smaller m falls outside the formulas' validity and is rejected.
inline void validate(const BenzenoidParams& p) {
    if (p.m < 3)
        throw InvalidParameterError("benzenoid requires m >= 3, got " + std::to_string(p.m));
    if (p.n < 1)
        throw InvalidParameterError("benzenoid requires n >= 1, got " + std::to_string(p.n));
}

inline void validate(const FamilyId& family) {
    std::visit([](const auto& params) { validate(params); }, family);
}

inline std::string family_name(const FamilyId& family) {
    return std::holds_alternative<PahParams>(family) ? "pah" : "benzenoid";
}

inline std::string params_label(const FamilyId& family) {
    if (const auto* p = std::get_if<PahParams>(&family)) return "n=" + std::to_string(p->n);
    const auto& b = std::get<BenzenoidParams>(family);
    return "m=" + std::to_string(b.m) + ",n=" + std::to_string(b.n);
}

} // namespace topoidx
