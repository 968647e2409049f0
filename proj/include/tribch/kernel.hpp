#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tribch/field.hpp"
#include "tribch/functions.hpp"
#include "tribch/rng.hpp"
#include "tribch/spectrum.hpp"

namespace tribch {

struct LinearTerm {
    Element coeff;
    long long shift; // u^(2^shift), shift taken mod n
};

/// u -> sum coeff * u^(2^shift), realized as an n x n GF(2) matrix whose
/// column j is L(alpha^j).
class LinearizedMap {
public:
    LinearizedMap(const FieldCtx& ctx, std::vector<LinearTerm> terms);

    const std::vector<LinearTerm>& terms() const noexcept { return terms_; }
    const std::vector<std::uint32_t>& columns() const noexcept { return columns_; }

    Element apply(Element u) const noexcept;
    // Term-by-term field evaluation.
    Element evaluate(const FieldCtx& ctx, Element u) const noexcept;

private:
    std::vector<LinearTerm> terms_;
    std::vector<std::uint32_t> columns_;
};

/// The linearized polynomial of the squared-transform argument.
///   Gold2/Gold3 (t = 2, 3): b u^{2^k} + b^{2^-k} u^{2^-k} + c u^{2^tk} + c^{2^-tk} u^{2^-tk}
///   Kasami5 (after x -> x^{2^k+1}): the same shape in (a, k), (b, 3k), (c, 5k).
/// `a` is ignored for the Gold families. Throws on all-zero coefficients and
/// for the TH family.
LinearizedMap build_L(const FieldCtx& ctx, const FamilySpec& spec, const Triple& t);

// Basis of the null space, one element per free column.
std::vector<Element> kernel_basis(const LinearizedMap& map);
// All 2^s kernel elements in ascending order.
std::vector<Element> kernel_of(const LinearizedMap& map);

struct KernelReport {
    Triple triple{};
    unsigned s = 0;
    std::vector<Element> kernel;
    std::uint64_t s0_size = 0;
    std::uint64_t s1_size = 0;
    std::int64_t fw = 0;
    bool consistent = false;
};

struct KernelOptions {
    std::size_t samples = 10000;
    // Scan every (b, c) (Theorem 1) or every (a, b, c) (Theorem 2).
    bool exhaustive = false;
};

struct Theorem1Summary {
    unsigned n = 0;
    FamilySpec spec{};
    unsigned t = 0;        // 2 for Gold2, 3 for Gold3
    unsigned s_bound = 0;  // 4 for t = 2, 3 for t = 3
    std::uint64_t pairs_checked = 0;
    unsigned max_s = 0;
    std::map<unsigned, std::uint64_t> s_histogram;
    bool bound_ok = true;
    // every F(., b, c) in {0, +-2^{(n+s)/2}}
    bool square_law_ok = true;
    // s odd for every pair (some F is nonzero by Parseval)
    bool odd_s_ok = true;
    // #{a : F != 0} = 2^{n-s}
    bool support_count_ok = true;
    std::vector<KernelReport> reports;
    bool reports_ok = true;

    bool ok() const noexcept {
        return bound_ok && square_law_ok && odd_s_ok && support_count_ok && reports_ok;
    }
};

Theorem1Summary verify_theorem1(const FieldCtx& ctx, const MonomialPair& pair,
                                const KernelOptions& opts, Rng rng);

struct Theorem2Summary {
    unsigned n = 0;
    FamilySpec spec{};
    std::uint64_t triples_checked = 0;
    std::uint64_t nonzero_triples = 0;
    bool permutation_ok = true;
    bool substitution_ok = true;
    bool square_law_ok = true;
    bool dichotomy_ok = true;
    bool character_ok = true;
    bool s1_empty_ok = true;
    bool s0_size_ok = true;   // |S0| in {2, 8} when F != 0
    bool below_32_ok = true;  // |S0| - |S1| < 32
    bool g_values_ok = true;  // G(u) in {0,1} on K and G(u) = 0 <=> u in S0
    bool g_identity_ok = true;
    bool identity1_ok = true;
    unsigned max_s = 0;
    std::map<std::uint64_t, std::uint64_t> s0_histogram; // over triples with F != 0
    std::vector<KernelReport> reports;

    bool ok() const noexcept {
        return permutation_ok && substitution_ok && square_law_ok && dichotomy_ok && character_ok &&
               s1_empty_ok && s0_size_ok && below_32_ok && g_values_ok && g_identity_ok &&
               identity1_ok;
    }
};

Theorem2Summary verify_theorem2(const FieldCtx& ctx, const MonomialPair& pair,
                                const KernelOptions& opts, Rng rng);

// The nine-term G(u) whose relative trace recovers u*L(u) for Kasami5.
Element kasami_g(const FieldCtx& ctx, unsigned k, const Triple& t, Element u);

} // namespace tribch
