#include "report_json.hpp"

namespace tribch::report {

const char* param_name(Family f) noexcept { return f == Family::TH ? "t" : "k"; }

json header(unsigned n, const FamilySpec& spec) {
    json j;
    j["n"] = n;
    j["family"] = std::string(family_name(spec.family));
    j[param_name(spec.family)] = spec.param;
    return j;
}

json spectrum(const SpectrumReport& r) {
    json j = header(r.n, r.spec);
    json hist = json::array();
    for (const auto& [v, count] : r.histogram) hist.push_back(json::array({v, count}));
    j["histogram"] = std::move(hist);
    j["five_valued"] = r.five_valued;
    j["parseval_ok"] = r.parseval_ok;
    j["sum_ok"] = r.sum_ok;
    j["witness"] = r.witness ? json::array({r.witness->a, r.witness->b, r.witness->c}) : json(nullptr);
    return j;
}

json distribution(const WeightDistribution& d) {
    json out = json::array();
    for (std::size_t w = 0; w < d.coefficients.size(); ++w) {
        if (d.coefficients[w] != 0) out.push_back(json::array({w, d.coefficients[w].str()}));
    }
    return out;
}

json kernel_report(const KernelReport& r) {
    return json{{"a", r.triple.a},
                {"b", r.triple.b},
                {"c", r.triple.c},
                {"s", r.s},
                {"kernel_elements", r.kernel},
                {"S0_size", r.s0_size},
                {"S1_size", r.s1_size},
                {"Fw", r.fw},
                {"consistent", r.consistent}};
}

json theorem1(const Theorem1Summary& s, bool with_reports) {
    json j = header(s.n, s.spec);
    j["theorem"] = 1;
    j["t"] = s.t;
    j["s_bound"] = s.s_bound;
    j["pairs_checked"] = s.pairs_checked;
    j["max_s"] = s.max_s;
    json hist = json::array();
    for (const auto& [dim, count] : s.s_histogram) hist.push_back(json::array({dim, count}));
    j["s_histogram"] = std::move(hist);
    j["checks"] = {{"bound", s.bound_ok},
                   {"square_law", s.square_law_ok},
                   {"odd_s", s.odd_s_ok},
                   {"support_count", s.support_count_ok},
                   {"reports_consistent", s.reports_ok}};
    j["pass"] = s.ok();
    if (with_reports) {
        json reports = json::array();
        for (const KernelReport& r : s.reports) reports.push_back(kernel_report(r));
        j["reports"] = std::move(reports);
    }
    return j;
}

json theorem2(const Theorem2Summary& s, bool with_reports) {
    json j = header(s.n, s.spec);
    j["theorem"] = 2;
    j["triples_checked"] = s.triples_checked;
    j["nonzero_triples"] = s.nonzero_triples;
    j["max_s"] = s.max_s;
    json hist = json::array();
    for (const auto& [size, count] : s.s0_histogram) hist.push_back(json::array({size, count}));
    j["s0_histogram_nonzero"] = std::move(hist);
    j["checks"] = {{"permutation", s.permutation_ok},
                   {"substitution", s.substitution_ok},
                   {"square_law", s.square_law_ok},
                   {"dichotomy", s.dichotomy_ok},
                   {"character", s.character_ok},
                   {"s1_empty_when_nonzero", s.s1_empty_ok},
                   {"s0_in_2_8", s.s0_size_ok},
                   {"below_32", s.below_32_ok},
                   {"g_values", s.g_values_ok},
                   {"g_identity", s.g_identity_ok},
                   {"identity1", s.identity1_ok}};
    j["pass"] = s.ok();
    if (with_reports) {
        json reports = json::array();
        for (const KernelReport& r : s.reports) reports.push_back(kernel_report(r));
        j["reports"] = std::move(reports);
    }
    return j;
}

json matrix_metadata(unsigned n, const FamilySpec& spec, const CodeDimensions& dims) {
    json j = header(n, spec);
    j["rank"] = dims.rank;
    j["dim"] = dims.dim;
    return j;
}

} // namespace tribch::report
