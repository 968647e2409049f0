#pragma once

#include <json.hpp>

#include "tribch/code.hpp"
#include "tribch/kernel.hpp"
#include "tribch/macwilliams.hpp"
#include "tribch/spectrum.hpp"

namespace tribch::report {

using nlohmann::json;

// "k" for gold2/gold3/kasami5, "t" for th.
const char* param_name(Family f) noexcept;

json header(unsigned n, const FamilySpec& spec);

// {n, family, k, histogram: [[V, count]...], five_valued, witness}
json spectrum(const SpectrumReport& r);

// [[w, "A_w"], ...], zero coefficients omitted; counts are decimal strings
// because they outgrow 64 bits.
json distribution(const WeightDistribution& d);

json kernel_report(const KernelReport& r);
json theorem1(const Theorem1Summary& s, bool with_reports = true);
json theorem2(const Theorem2Summary& s, bool with_reports = true);

// {n, family, k, rank, dim}
json matrix_metadata(unsigned n, const FamilySpec& spec, const CodeDimensions& dims);

} // namespace tribch::report
