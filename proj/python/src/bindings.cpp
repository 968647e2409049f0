#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tribch/code.hpp"
#include "tribch/decoder.hpp"
#include "tribch/error.hpp"
#include "tribch/field.hpp"
#include "tribch/functions.hpp"
#include "tribch/kernel.hpp"
#include "tribch/macwilliams.hpp"
#include "tribch/rng.hpp"
#include "tribch/spectrum.hpp"

namespace py = pybind11;
using namespace tribch;

namespace {

py::object to_pyint(const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_pyint(const py::handle& v) { return BigInt(py::str(v).cast<std::string>()); }

FamilySpec make_spec(const std::string& family, unsigned n, std::optional<unsigned> param) {
    const Family f = parse_family(family);
    return {f, param.value_or(f == Family::TH ? (n - 1) / 2 : 1u)};
}

Element checked(const FieldCtx& ctx, Element x) {
    if (x >= ctx.size()) throw InvalidArgument("element " + std::to_string(x) + " outside GF(2^" +
                                               std::to_string(ctx.degree()) + ")");
    return x;
}

py::list distribution_to_list(const WeightDistribution& d) {
    py::list out;
    for (const BigInt& a : d.coefficients) out.append(to_pyint(a));
    return out;
}

WeightDistribution distribution_from_seq(const py::sequence& seq) {
    WeightDistribution d(seq.size() == 0 ? 0 : seq.size() - 1);
    d.coefficients.resize(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) d.coefficients[i] = from_pyint(seq[i]);
    return d;
}

py::dict spectrum_dict(const SpectrumReport& r) {
    py::dict d;
    py::dict hist;
    for (const auto& [v, c] : r.histogram) hist[py::int_(v)] = c;
    d["n"] = r.n;
    d["family"] = std::string(family_name(r.spec.family));
    d["histogram"] = hist;
    d["five_valued"] = r.five_valued;
    d["parseval_ok"] = r.parseval_ok;
    d["sum_ok"] = r.sum_ok;
    d["witness"] = r.witness ? py::object(py::make_tuple(r.witness->a, r.witness->b, r.witness->c))
                             : py::object(py::none());
    return d;
}

// An instantiated code: pair, parity-check matrix, encoder and pair index.
class Code {
public:
    Code(const std::string& family, unsigned n, std::optional<unsigned> param)
        : ctx_(n), pair_(instantiate(make_spec(family, n, param), ctx_)),
          h_(build_parity_check(ctx_, pair_)), dims_(rank_and_dimension(h_)), enc_(h_) {}

    unsigned n() const { return ctx_.degree(); }
    std::size_t length() const { return h_.length(); }
    std::size_t dimension() const { return enc_.dimension(); }
    unsigned rank() const { return dims_.rank; }
    std::pair<std::uint64_t, std::uint64_t> exponents() const { return {pair_.d1, pair_.d2}; }
    const std::vector<std::uint64_t>& columns() const { return h_.columns; }

    std::string encode(const std::string& message_hex) const {
        return enc_.encode(BitVec::from_hex(message_hex, enc_.dimension())).to_hex();
    }

    py::dict decode(const std::string& word_hex) {
        if (!index_) index_.emplace(h_);
        const DecodeResult r = tribch::decode(h_, *index_, BitVec::from_hex(word_hex, h_.length()));
        py::dict d;
        d["status"] = status_name(r.status);
        d["error_positions"] = r.error_positions;
        d["corrected"] = r.corrected.to_hex();
        return d;
    }

    std::tuple<Element, Element, Element> syndrome(const std::string& word_hex) const {
        const Syndrome s = syndrome_of(h_, BitVec::from_hex(word_hex, h_.length()));
        return {s.s1, s.sf, s.sg};
    }

    py::dict spectrum(unsigned workers) const {
        SpectrumReport r;
        {
            py::gil_scoped_release release;
            r = full_spectrum(ctx_, pair_, workers);
        }
        return spectrum_dict(r);
    }

    py::tuple weight_distributions(unsigned workers) const {
        WeightDistribution dual, dist;
        {
            py::gil_scoped_release release;
            const SpectrumReport r = full_spectrum(ctx_, pair_, workers);
            dual = dual_weights_from_spectrum(ctx_, pair_, r, h_);
            dist = macwilliams_transform(dual, dims_.rank);
        }
        return py::make_tuple(distribution_to_list(dual), distribution_to_list(dist));
    }

    std::int64_t transform(Element a, Element b, Element c) const {
        const Element limit = ctx_.size();
        if (a >= limit || b >= limit || c >= limit) throw InvalidArgument("field element out of range");
        return transform_single(ctx_, pair_, a, b, c);
    }

    bool apn() const { return is_apn(ctx_, pair_.f); }

    py::dict syndrome_distinctness() const {
        const SyndromeDistinctness sd = check_syndrome_distinctness(h_);
        py::dict d;
        d["distinct"] = sd.distinct;
        d["patterns"] = sd.patterns;
        return d;
    }

    py::dict kernel_check(std::size_t samples, bool exhaustive, std::uint64_t seed) const {
        const KernelOptions opts{samples, exhaustive};
        py::dict d;
        if (pair_.spec.family == Family::Kasami5) {
            const Theorem2Summary s = verify_theorem2(ctx_, pair_, opts, Rng(seed));
            py::dict hist;
            for (const auto& [k, v] : s.s0_histogram) hist[py::int_(k)] = v;
            d["triples_checked"] = s.triples_checked;
            d["s0_histogram"] = hist;
            d["max_s"] = s.max_s;
            d["ok"] = s.ok();
        } else {
            const Theorem1Summary s = verify_theorem1(ctx_, pair_, opts, Rng(seed));
            py::dict hist;
            for (const auto& [k, v] : s.s_histogram) hist[py::int_(k)] = v;
            d["pairs_checked"] = s.pairs_checked;
            d["s_histogram"] = hist;
            d["max_s"] = s.max_s;
            d["ok"] = s.ok();
        }
        return d;
    }

private:
    FieldCtx ctx_;
    MonomialPair pair_;
    ParityCheckMatrix h_;
    CodeDimensions dims_;
    SystematicEncoder enc_;
    std::optional<PairIndex> index_;
};

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Triple-error-correcting codes from pairs of power maps over GF(2^n)";

    // Translators run newest first, so the subclasses are registered after the base.
    const auto base = py::register_exception<Error>(m, "TribchError");
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
    py::register_exception<ConditionViolated>(m, "ConditionViolated", base);
    py::register_exception<DegeneratePair>(m, "DegeneratePair", base);
    py::register_exception<RankDefect>(m, "RankDefect", base);
    py::register_exception<NonIntegralResult>(m, "NonIntegralResult", base);
    py::register_exception<CollisionDetected>(m, "CollisionDetected", base);

    py::class_<FieldCtx>(m, "Field")
        .def(py::init<unsigned>(), py::arg("n"))
        .def_property_readonly("degree", &FieldCtx::degree)
        .def_property_readonly("modulus", &FieldCtx::modulus)
        .def_property_readonly("size", &FieldCtx::size)
        .def("mul", [](const FieldCtx& f, Element x, Element y) { return f.mul(checked(f, x), checked(f, y)); })
        .def("pow", [](const FieldCtx& f, Element x, std::uint64_t e) { return f.pow(checked(f, x), e); })
        .def("inverse", [](const FieldCtx& f, Element x) { return f.inverse(checked(f, x)); })
        .def("frobenius", [](const FieldCtx& f, Element x, long long k) { return f.frobenius(checked(f, x), k); })
        .def("trace", [](const FieldCtx& f, Element x) { return f.trace(checked(f, x)); });

    m.def("smallest_irreducible", &smallest_irreducible, py::arg("n"));
    m.def("family_exponents", [](const std::string& family, unsigned n, std::optional<unsigned> param) {
        const FieldCtx ctx(n);
        const ExponentPair e = family_exponents(ctx, make_spec(family, n, param));
        return std::make_pair(e.d1, e.d2);
    }, py::arg("family"), py::arg("n"), py::arg("param") = py::none());
    m.def("is_apn_power", [](unsigned n, std::uint64_t d) {
        const FieldCtx ctx(n);
        return is_apn(ctx, power_table(ctx, d));
    }, py::arg("n"), py::arg("d"), "Exhaustive APN check of x^d over GF(2^n).");

    m.def("macwilliams", [](const py::sequence& dual, std::size_t dual_dim) {
        return distribution_to_list(macwilliams_transform(distribution_from_seq(dual), dual_dim));
    }, py::arg("dual"), py::arg("dual_dim"),
       "Weight distribution of the code from A_0..A_N of its dual, exact.");
    m.def("krawtchouk", [](std::size_t length, std::size_t k, std::size_t x) {
        return to_pyint(krawtchouk_direct(length, k, x));
    });
    m.def("verify_distance7", [](const py::sequence& dist) {
        return verify_distance7(distribution_from_seq(dist));
    });

    py::class_<Code>(m, "Code")
        .def(py::init<const std::string&, unsigned, std::optional<unsigned>>(), py::arg("family"),
             py::arg("n"), py::arg("param") = py::none())
        .def_property_readonly("n", &Code::n)
        .def_property_readonly("length", &Code::length)
        .def_property_readonly("dimension", &Code::dimension)
        .def_property_readonly("rank", &Code::rank)
        .def_property_readonly("exponents", &Code::exponents)
        .def_property_readonly("columns", &Code::columns)
        .def("encode", &Code::encode, py::arg("message_hex"))
        .def("decode", &Code::decode, py::arg("word_hex"))
        .def("syndrome", &Code::syndrome, py::arg("word_hex"))
        .def("transform", &Code::transform, py::arg("a"), py::arg("b"), py::arg("c"))
        .def("spectrum", &Code::spectrum, py::arg("workers") = 1)
        .def("weight_distributions", &Code::weight_distributions, py::arg("workers") = 1,
             "(dual, code) weight distributions as lists of ints.")
        .def("is_apn", &Code::apn)
        .def("syndrome_distinctness", &Code::syndrome_distinctness)
        .def("kernel_check", &Code::kernel_check, py::arg("samples") = 1000,
             py::arg("exhaustive") = false, py::arg("seed") = 1);
}
