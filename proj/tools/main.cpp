#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tribch/error.hpp"

int main(int argc, char** argv) {
    using tribch::cli::RunConfig;

    CLI::App app{"Triple-error-correcting codes from pairs of power maps over GF(2^n)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "table";
    std::optional<unsigned> k;
    std::optional<unsigned> t;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"verify", "run the full certification pipeline"},
        {"spectrum", "exhaustive transform spectrum over b, c in L*"},
        {"kernel", "check the kernel machinery of the squared transform"},
        {"build", "print the parity-check matrix (json: metadata)"},
        {"distance", "brute-force minimum distance (n=5) and syndrome distinctness"},
        {"macwilliams", "dual and code weight distributions"},
        {"decode-sim", "seeded encode / corrupt / decode trials"},
        {"encode", "encode a hex message"},
        {"decode", "decode a hex word"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--n", cfg.n_values, "odd field degree(s); default 5 7 9");
        sub->add_option("--family", cfg.family, "gold2, gold3, th or kasami5")->capture_default_str();
        sub->add_option("--k", k, "family parameter k (default 1)");
        sub->add_option("--t", t, "th parameter t (default (n-1)/2)");
        sub->add_option("--seed", cfg.seed, "seed for every randomized step")->capture_default_str();
        sub->add_option("--trials", cfg.trials, "decode-sim trials per error weight")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "sampled triples for kernel checks")->capture_default_str();
        sub->add_option("--workers", cfg.workers, "threads for the spectrum scan")->capture_default_str();
        sub->add_option("--format", format, "table, json or csv")->capture_default_str();
        sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
        sub->add_option("--errors", cfg.errors, "decode-sim error weights (0..3)");
        sub->add_flag("--allow-large", cfg.allow_large, "permit n >= 11 for spectrum-based commands");
        if (name == "decode") sub->add_option("--word", cfg.word, "received word as hex")->required();
        if (name == "encode") sub->add_option("--message", cfg.message, "message as hex")->required();
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }

    CLI11_PARSE(app, argc, argv);
    cfg.k = k;
    cfg.t = t;

    tribch::cli::CommandResult result;
    try {
        cfg.format = tribch::cli::parse_format(format);
        result = tribch::cli::run_command(cfg);
    } catch (const tribch::Error& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return tribch::cli::kExitError;
    }

    if (cfg.out.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream os(cfg.out, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open " << cfg.out << " for writing\n";
            return tribch::cli::kExitError;
        }
        os << result.output;
    }
    return result.exit_code;
}
