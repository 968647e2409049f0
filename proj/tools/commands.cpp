#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "report_json.hpp"
#include "tribch/code.hpp"
#include "tribch/decoder.hpp"
#include "tribch/error.hpp"
#include "tribch/field.hpp"
#include "tribch/functions.hpp"
#include "tribch/kernel.hpp"
#include "tribch/macwilliams.hpp"
#include "tribch/rng.hpp"
#include "tribch/spectrum.hpp"

namespace tribch::cli {

namespace {

using report::json;

// Output of one command for one n.
struct Section {
    json doc;
    std::string table;
    std::vector<std::string> csv_rows;
    int exit_code = 0;
};

FamilySpec spec_for(const RunConfig& cfg, unsigned n) {
    const Family fam = parse_family(cfg.family);
    if (fam == Family::TH) return {fam, cfg.t.value_or((n - 1) / 2)};
    return {fam, cfg.k.value_or(1)};
}

std::string label(unsigned n, const FamilySpec& spec) {
    std::ostringstream os;
    os << family_name(spec.family) << " n=" << n << " " << report::param_name(spec.family) << "="
       << spec.param;
    return os.str();
}

std::string csv_prefix(unsigned n, const FamilySpec& spec) {
    std::ostringstream os;
    os << n << ',' << family_name(spec.family) << ',' << spec.param;
    return os.str();
}

Section error_section(const RunConfig& cfg, unsigned n, const std::string& kind,
                      const std::string& message) {
    Section s;
    s.doc = json{{"n", n}, {"family", cfg.family}, {"error", {{"kind", kind}, {"message", message}}}};
    s.table = kind + ": " + message + "\n";
    s.csv_rows.push_back(std::to_string(n) + "," + cfg.family + ",error," + kind);
    s.exit_code = kExitError;
    return s;
}

std::vector<unsigned> n_list(const RunConfig& cfg) {
    return cfg.n_values.empty() ? std::vector<unsigned>{5, 7, 9} : cfg.n_values;
}

// Runs `body` per n, converting library errors into failure records, and
// renders every section in the configured format.
CommandResult batch(const RunConfig& cfg, const std::string& csv_header, bool heavy,
                    const std::function<Section(unsigned)>& body) {
    std::vector<Section> sections;
    const std::vector<unsigned> ns = n_list(cfg);
    for (unsigned n : ns) {
        try {
            if (heavy && n >= 11 && !cfg.allow_large) {
                throw InvalidArgument("n=" + std::to_string(n) + " needs --allow-large (long scan)");
            }
            sections.push_back(body(n));
        } catch (const Error& e) {
            sections.push_back(error_section(cfg, n, e.kind(), e.what()));
        }
    }

    CommandResult result;
    for (const Section& s : sections) result.exit_code = std::max(result.exit_code, s.exit_code);
    switch (cfg.format) {
    case OutputFormat::Json: {
        json doc;
        if (sections.size() == 1) {
            doc = sections.front().doc;
        } else {
            doc = json::array();
            for (const Section& s : sections) doc.push_back(s.doc);
        }
        result.output = doc.dump(2) + "\n";
        break;
    }
    case OutputFormat::Table:
        for (const Section& s : sections) result.output += s.table;
        break;
    case OutputFormat::Csv:
        result.output = csv_header + "\n";
        for (const Section& s : sections) {
            for (const std::string& row : s.csv_rows) result.output += row + "\n";
        }
        break;
    }
    return result;
}

std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string code_params(std::size_t length, std::size_t dim, const std::string& d) {
    return "[" + std::to_string(length) + "," + std::to_string(dim) + "," + d + "]";
}

} // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "table") return OutputFormat::Table;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw InvalidArgument("unknown format '" + s + "' (expected table, json or csv)");
}

CommandResult cmd_verify(const RunConfig& cfg) {
    return batch(cfg, "n,family,param,stage,pass,detail", true, [&](unsigned n) {
        const FamilySpec spec = spec_for(cfg, n);
        Section sec;
        sec.doc = report::header(n, spec);
        json stages = json::array();
        bool all_pass = true;
        bool errored = false;

        auto stage = [&](const std::string& name, bool ok, const std::string& detail) {
            stages.push_back(json{{"stage", name}, {"pass", ok}, {"detail", detail}});
            sec.table += "  " + name + std::string(14 - std::min<std::size_t>(13, name.size()), ' ') +
                         pass_word(ok) + "  " + detail + "\n";
            sec.csv_rows.push_back(csv_prefix(n, spec) + "," + name + "," + (ok ? "1" : "0") + "," +
                                   detail);
            all_pass = all_pass && ok;
        };

        std::string code = "n/a";
        sec.table = "verify " + label(n, spec) + "\n";
        std::string current = "field";
        try {
            const FieldCtx ctx(n);
            current = "instantiate";
            const MonomialPair pair = instantiate(spec, ctx);
            stage("instantiate", true, "d1=" + std::to_string(pair.d1) + " d2=" + std::to_string(pair.d2));

            current = "apn";
            const bool apn = is_apn(ctx, pair.f);
            stage("apn", apn, std::string("x^") + std::to_string(pair.d1) + (apn ? " is APN" : " is not APN"));

            current = "spectrum";
            const SpectrumReport rep = full_spectrum(ctx, pair, cfg.workers);
            std::string support;
            for (const auto& [v, count] : rep.histogram) support += (support.empty() ? "" : " ") + std::to_string(v);
            stage("spectrum", rep.five_valued && rep.parseval_ok && rep.sum_ok,
                  "values {" + support + "}");

            current = "rank";
            const ParityCheckMatrix h = build_parity_check(ctx, pair);
            const CodeDimensions dims = rank_and_dimension(h);
            stage("rank", true, "rank=" + std::to_string(dims.rank) + " dim=" + std::to_string(dims.dim));
            code = code_params(h.length(), dims.dim, "?");

            current = "dual_weights";
            const WeightDistribution dual = dual_weights_from_spectrum(ctx, pair, rep, h);
            bool five_weights = dual.total() == (BigInt(1) << (3 * n));
            for (std::size_t w = 1; w < dual.coefficients.size(); ++w) {
                if (dual.coefficients[w] != 0 && !is_five_weight(n, w)) five_weights = false;
            }
            stage("dual_weights", five_weights, five_weights ? "five weights" : "weights outside the five-weight set");

            current = "macwilliams";
            const WeightDistribution dist = macwilliams_transform(dual, dims.rank);
            stage("macwilliams", true, "A_7=" + dist.coefficients[7].str());

            current = "distance7";
            const bool d7 = verify_distance7(dist);
            if (d7) code = code_params(h.length(), dims.dim, "7");
            stage("distance7", d7, code);
        } catch (const Error& e) {
            stage(current, false, e.kind() + ": " + e.what());
            errored = true;
        }
        sec.doc["stages"] = std::move(stages);
        sec.doc["code"] = code;
        sec.doc["pass"] = all_pass;
        sec.table += "  result        " + pass_word(all_pass) + "  " + code + "\n";
        sec.exit_code = errored ? kExitError : (all_pass ? 0 : kExitFail);
        return sec;
    });
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
    return batch(cfg, "n,family,param,value,count", true, [&](unsigned n) {
        const FamilySpec spec = spec_for(cfg, n);
        const FieldCtx ctx(n);
        const MonomialPair pair = instantiate(spec, ctx);
        const SpectrumReport rep = full_spectrum(ctx, pair, cfg.workers);
        Section sec;
        sec.doc = report::spectrum(rep);
        std::ostringstream os;
        os << "spectrum " << label(n, spec) << " (d1=" << pair.d1 << ", d2=" << pair.d2
           << "): five_valued=" << (rep.five_valued ? "true" : "false") << "\n";
        for (const auto& [v, count] : rep.histogram) {
            os << "  " << v << "\t" << count << "\n";
            sec.csv_rows.push_back(csv_prefix(n, spec) + "," + std::to_string(v) + "," + std::to_string(count));
        }
        if (rep.witness) {
            os << "  witness (a,b,c) = (" << rep.witness->a << "," << rep.witness->b << ","
               << rep.witness->c << ")\n";
        }
        sec.table = os.str();
        sec.exit_code = rep.five_valued ? 0 : kExitFail;
        return sec;
    });
}

CommandResult cmd_kernel(const RunConfig& cfg) {
    return batch(cfg, "n,family,param,check,pass", false, [&](unsigned n) {
        const FamilySpec spec = spec_for(cfg, n);
        const FieldCtx ctx(n);
        const MonomialPair pair = instantiate(spec, ctx);
        const Rng rng = Rng(cfg.seed).fork("kernel/" + label(n, spec));
        Section sec;
        bool ok = false;
        if (spec.family == Family::Gold2 || spec.family == Family::Gold3) {
            KernelOptions opts;
            opts.samples = cfg.samples;
            opts.exhaustive = n <= 9;
            const Theorem1Summary s = verify_theorem1(ctx, pair, opts, rng);
            sec.doc = report::theorem1(s, cfg.format == OutputFormat::Json);
            ok = s.ok();
            std::ostringstream os;
            os << "kernel " << label(n, spec) << ": " << s.pairs_checked << " (b,c) pairs, max_s="
               << s.max_s << " (bound " << s.s_bound << ")\n  s histogram:";
            for (const auto& [dim, count] : s.s_histogram) os << " " << dim << ":" << count;
            os << "\n";
            sec.table = os.str();
        } else if (spec.family == Family::Kasami5) {
            KernelOptions opts;
            opts.samples = cfg.samples;
            opts.exhaustive = n == 5;
            const Theorem2Summary s = verify_theorem2(ctx, pair, opts, rng);
            sec.doc = report::theorem2(s, cfg.format == OutputFormat::Json);
            ok = s.ok();
            std::ostringstream os;
            os << "kernel " << label(n, spec) << ": " << s.triples_checked << " triples, "
               << s.nonzero_triples << " with F != 0, max_s=" << s.max_s << "\n  |S0| when F != 0:";
            for (const auto& [size, count] : s.s0_histogram) os << " " << size << ":" << count;
            os << "\n";
            sec.table = os.str();
        } else {
            throw InvalidArgument("kernel verification covers gold2, gold3 and kasami5");
        }
        for (const auto& [name, value] : sec.doc["checks"].items()) {
            sec.table += "  " + name + std::string(24 - std::min<std::size_t>(23, name.size()), ' ') +
                         pass_word(value.get<bool>()) + "\n";
            sec.csv_rows.push_back(csv_prefix(n, spec) + "," + name + "," + (value.get<bool>() ? "1" : "0"));
        }
        sec.table += "  result                  " + pass_word(ok) + "\n";
        sec.exit_code = ok ? 0 : kExitFail;
        return sec;
    });
}

CommandResult cmd_build(const RunConfig& cfg) {
    return batch(cfg, "row,bits", false, [&](unsigned n) {
        const FamilySpec spec = spec_for(cfg, n);
        const FieldCtx ctx(n);
        const MonomialPair pair = instantiate(spec, ctx);
        const ParityCheckMatrix h = build_parity_check(ctx, pair);
        const CodeDimensions dims = rank_and_dimension(h);
        Section sec;
        sec.doc = report::matrix_metadata(n, spec, dims);
        sec.table = h.to_text();
        std::istringstream rows(sec.table);
        std::string line;
        for (unsigned r = 0; std::getline(rows, line); ++r) sec.csv_rows.push_back(std::to_string(r) + "," + line);
        return sec;
    });
}

CommandResult cmd_distance(const RunConfig& cfg) {
    return batch(cfg, "n,family,param,min_distance,syndromes_distinct,patterns", false, [&](unsigned n) {
        const FamilySpec spec = spec_for(cfg, n);
        const FieldCtx ctx(n);
        const MonomialPair pair = instantiate(spec, ctx);
        const ParityCheckMatrix h = build_parity_check(ctx, pair);
        Section sec;
        sec.doc = report::header(n, spec);
        std::optional<unsigned> d;
        if (n == 5) d = min_distance_bruteforce(ctx, pair);
        const SyndromeDistinctness sd = check_syndrome_distinctness(h);
        sec.doc["min_distance"] = d ? json(*d) : json(nullptr);
        sec.doc["syndromes_distinct"] = sd.distinct;
        sec.doc["patterns"] = sd.patterns;
        const bool ok = sd.distinct && (!d || *d == 7);
        sec.doc["pass"] = ok;
        std::ostringstream os;
        os << "distance " << label(n, spec) << ": min_distance=" << (d ? std::to_string(*d) : "n/a")
           << " weight<=3 syndromes " << (sd.distinct ? "distinct" : "COLLIDE") << " (" << sd.patterns
           << " patterns)\n";
        sec.table = os.str();
        sec.csv_rows.push_back(csv_prefix(n, spec) + "," + (d ? std::to_string(*d) : "") + "," +
                               (sd.distinct ? "1" : "0") + "," + std::to_string(sd.patterns));
        sec.exit_code = ok ? 0 : kExitFail;
        return sec;
    });
}

CommandResult cmd_macwilliams(const RunConfig& cfg) {
    return batch(cfg, "n,family,param,code,weight,count", true, [&](unsigned n) {
        const FamilySpec spec = spec_for(cfg, n);
        const FieldCtx ctx(n);
        const MonomialPair pair = instantiate(spec, ctx);
        const ParityCheckMatrix h = build_parity_check(ctx, pair);
        const CodeDimensions dims = rank_and_dimension(h);
        const SpectrumReport rep = full_spectrum(ctx, pair, cfg.workers);
        const WeightDistribution dual = dual_weights_from_spectrum(ctx, pair, rep, h);
        const WeightDistribution dist = macwilliams_transform(dual, dims.rank);
        const bool d7 = verify_distance7(dist);
        Section sec;
        sec.doc = report::header(n, spec);
        sec.doc["dual_dim"] = dims.rank;
        sec.doc["dual"] = report::distribution(dual);
        sec.doc["code"] = report::distribution(dist);
        sec.doc["distance7"] = d7;
        std::ostringstream os;
        os << "macwilliams " << label(n, spec) << ": distance7=" << (d7 ? "true" : "false") << "\n";
        for (const auto& [name, d] : {std::pair{"dual", &dual}, std::pair{"code", &dist}}) {
            os << "  " << name << ":\n";
            for (std::size_t w = 0; w < d->coefficients.size(); ++w) {
                if (d->coefficients[w] == 0) continue;
                os << "    " << w << "\t" << d->coefficients[w].str() << "\n";
                sec.csv_rows.push_back(csv_prefix(n, spec) + "," + name + "," + std::to_string(w) + "," +
                                       d->coefficients[w].str());
            }
        }
        sec.table = os.str();
        sec.exit_code = d7 ? 0 : kExitFail;
        return sec;
    });
}

CommandResult cmd_decode_sim(const RunConfig& cfg) {
    return batch(cfg, "n,family,param,errors,trials,successes,success_rate", false, [&](unsigned n) {
        const FamilySpec spec = spec_for(cfg, n);
        const FieldCtx ctx(n);
        const MonomialPair pair = instantiate(spec, ctx);
        const ParityCheckMatrix h = build_parity_check(ctx, pair);
        const SystematicEncoder enc(h);
        const PairIndex index = build_pair_index(h);
        const Rng base = Rng(cfg.seed).fork("decode-sim/" + label(n, spec));

        Section sec;
        sec.doc = report::header(n, spec);
        sec.doc["seed"] = cfg.seed;
        sec.doc["trials"] = cfg.trials;
        json results = json::array();
        double worst = 1.0;
        std::ostringstream os;
        os << "decode-sim " << label(n, spec) << " seed=" << cfg.seed << "\n";
        for (unsigned e : cfg.errors) {
            if (e > 3) throw InvalidArgument("decode-sim injects at most 3 errors");
            Rng rng = base.fork("errors=" + std::to_string(e));
            std::size_t successes = 0;
            for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
                BitVec msg(enc.dimension());
                for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, rng.next() & 1);
                const BitVec codeword = enc.encode(msg);
                BitVec received = codeword;
                std::vector<std::size_t> pos;
                while (pos.size() < e) {
                    const std::size_t p = rng.below(h.length());
                    if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
                }
                for (std::size_t p : pos) received.flip(p);
                const DecodeResult r = decode(h, index, received);
                const bool status_ok = e == 0 ? r.status == DecodeStatus::Clean : r.status == DecodeStatus::Corrected;
                if (status_ok && r.corrected == codeword) ++successes;
            }
            const double rate = cfg.trials == 0 ? 1.0 : static_cast<double>(successes) / static_cast<double>(cfg.trials);
            worst = std::min(worst, rate);
            results.push_back(json{{"errors", e}, {"trials", cfg.trials}, {"successes", successes}, {"success_rate", rate}});
            os << "  errors=" << e << "  " << successes << "/" << cfg.trials << "  success_rate=" << rate << "\n";
            sec.csv_rows.push_back(csv_prefix(n, spec) + "," + std::to_string(e) + "," + std::to_string(cfg.trials) +
                                   "," + std::to_string(successes) + "," + std::to_string(rate));
        }
        sec.doc["results"] = std::move(results);
        sec.doc["success_rate"] = worst;
        sec.table = os.str();
        sec.exit_code = worst == 1.0 ? 0 : kExitFail;
        return sec;
    });
}

CommandResult cmd_encode(const RunConfig& cfg) {
    return batch(cfg, "n,family,param,codeword", false, [&](unsigned n) {
        const FamilySpec spec = spec_for(cfg, n);
        const FieldCtx ctx(n);
        const ParityCheckMatrix h = build_parity_check(ctx, instantiate(spec, ctx));
        const SystematicEncoder enc(h);
        const BitVec word = enc.encode(BitVec::from_hex(cfg.message, enc.dimension()));
        Section sec;
        sec.doc = report::header(n, spec);
        sec.doc["codeword"] = word.to_hex();
        sec.table = word.to_hex() + "\n";
        sec.csv_rows.push_back(csv_prefix(n, spec) + "," + word.to_hex());
        return sec;
    });
}

CommandResult cmd_decode(const RunConfig& cfg) {
    return batch(cfg, "n,family,param,status,positions,corrected", false, [&](unsigned n) {
        const FamilySpec spec = spec_for(cfg, n);
        const FieldCtx ctx(n);
        const ParityCheckMatrix h = build_parity_check(ctx, instantiate(spec, ctx));
        const PairIndex index = build_pair_index(h);
        const DecodeResult r = decode(h, index, BitVec::from_hex(cfg.word, h.length()));
        Section sec;
        sec.doc = report::header(n, spec);
        sec.doc["status"] = status_name(r.status);
        sec.doc["error_positions"] = r.error_positions;
        sec.doc["corrected"] = r.corrected.to_hex();
        std::string positions;
        for (std::size_t p : r.error_positions) positions += (positions.empty() ? "" : " ") + std::to_string(p);
        sec.table = std::string(status_name(r.status)) + " [" + positions + "] " + r.corrected.to_hex() + "\n";
        sec.csv_rows.push_back(csv_prefix(n, spec) + "," + status_name(r.status) + "," + positions + "," +
                               r.corrected.to_hex());
        sec.exit_code = r.status == DecodeStatus::Uncorrectable ? kExitFail : 0;
        return sec;
    });
}

CommandResult run_command(const RunConfig& cfg) {
    static const std::vector<std::pair<std::string, CommandResult (*)(const RunConfig&)>> table = {
        {"verify", cmd_verify},     {"spectrum", cmd_spectrum},   {"kernel", cmd_kernel},
        {"build", cmd_build},       {"distance", cmd_distance},   {"macwilliams", cmd_macwilliams},
        {"decode-sim", cmd_decode_sim}, {"encode", cmd_encode},   {"decode", cmd_decode},
    };
    for (const auto& [name, fn] : table) {
        if (name == cfg.command) return fn(cfg);
    }
    return {kExitError, "unknown command '" + cfg.command + "'\n"};
}

} // namespace tribch::cli
