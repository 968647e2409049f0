#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tribch/field.hpp"

namespace tribch {

// The four power-map pair families. Gold2/Gold3/Kasami5 take a parameter k
// with gcd(n,k) = 1; TH takes t with n = 2t+1.
enum class Family { Gold2, Gold3, TH, Kasami5 };

struct FamilySpec {
    Family family;
    unsigned param;
};

std::string_view family_name(Family f) noexcept;
// Case-insensitive: gold2, gold3, th, kasami5.
Family parse_family(std::string_view name);

// Exponents (f, g) of the family reduced mod 2^n - 1, without condition
// checks.
struct ExponentPair {
    std::uint64_t d1;
    std::uint64_t d2;
};
ExponentPair family_exponents(const FieldCtx& ctx, const FamilySpec& spec);

// Kasami exponent 2^(2k) - 2^k + 1 reduced mod 2^n - 1.
std::uint64_t kasami_exponent(const FieldCtx& ctx, unsigned k);
// Gold exponent 2^k + 1 reduced mod 2^n - 1.
std::uint64_t gold_exponent(const FieldCtx& ctx, unsigned k);

using FunctionTable = std::vector<Element>;

FunctionTable power_table(const FieldCtx& ctx, std::uint64_t d);

struct MonomialPair {
    FamilySpec spec;
    std::uint64_t d1 = 0;
    std::uint64_t d2 = 0;
    FunctionTable f;
    FunctionTable g;
};

/// Checks the family condition, reduces both exponents and tabulates f and g
/// over the whole field. Throws ConditionViolated or DegeneratePair.
MonomialPair instantiate(const FamilySpec& spec, const FieldCtx& ctx);

bool is_apn(const FieldCtx& ctx, std::span<const Element> table);

// solution count -> number of p with that count, for the derivative in
// direction q != 0.
std::map<std::uint32_t, std::uint64_t> differential_spectrum(const FieldCtx& ctx,
                                                             std::span<const Element> table,
                                                             Element q);

} // namespace tribch
