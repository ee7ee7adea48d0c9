#include <iostream>

#include <CLI11.hpp>

#include "repsplit/commands.hpp"

using namespace repsplit;

int main(int argc, char** argv) {
    CLI::App app{"repsplit - exact irreducible decomposition of transitive permutation "
                 "representations over characteristic-zero fields"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format_name;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("input", cfg.input_path, "generator file")->required();
        cmd->add_option("--format", format_name, "input format: cycles, images, atlas");
        cmd->add_option("--threads", cfg.threads, "worker thread cap (default REPSPLIT_THREADS)");
    };

    CLI::App* split = app.add_subcommand("split", "decompose a permutation representation");
    add_common(split, true);
    split->add_option("--json", cfg.json_path, "write the decomposition artifact to PATH");
    split->add_option("--seed", cfg.seed, "seed for representative selection");
    split->add_option("--max-basis-dim", cfg.max_basis_dim,
                      "dense cap for the transformation basis");
    split->add_option("--precision", cfg.precision, "working precision in decimal digits");
    split->add_flag("--basis", cfg.emit_basis, "also compute the block-diagonalizing basis");
    split->add_flag("--verify", cfg.verify, "re-verify the decomposition before exiting");
    split->add_flag("--dump-tables", cfg.dump_tables, "print the multiplication table");

    CLI::App* verify = app.add_subcommand("verify", "re-check a stored decomposition artifact");
    verify->add_option("artifact", cfg.artifact_path, "JSON artifact produced by split --json")
        ->required();
    add_common(verify, true);
    verify->add_option("--seed", cfg.seed, "seed for the invariance spot-check");
    verify->add_option("--precision", cfg.precision, "working precision in decimal digits");

    CLI::App* tables = app.add_subcommand("tables", "dump suborbits, pairing and C_pq^r");
    add_common(tables, true);
    tables->add_option("--json", cfg.json_path, "write the JSON tensor dump to PATH");

    CLI::App* bench = app.add_subcommand("bench", "time the orbital and table stage only");
    add_common(bench, true);

    CLI11_PARSE(app, argc, argv);

    if (!format_name.empty()) {
        cfg.format = format_from_name(format_name);
        if (!cfg.format) {
            std::cerr << "error: unknown format '" << format_name << "'\n";
            return 1;
        }
    }

    if (split->parsed())
        return cmd_split(cfg, std::cout, std::cerr);
    if (verify->parsed())
        return cmd_verify(cfg, std::cout, std::cerr);
    if (tables->parsed())
        return cmd_tables(cfg, std::cout, std::cerr);
    if (bench->parsed())
        return cmd_bench(cfg, std::cout, std::cerr);
    return 1;
}
