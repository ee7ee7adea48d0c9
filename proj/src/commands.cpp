#include "repsplit/commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "repsplit/json_io.hpp"
#include "repsplit/report.hpp"

namespace repsplit {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw MalformedInput("cannot write to " + path);
    out << text;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw MalformedInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GenFormat resolve_format(const RunConfig& cfg) {
    if (cfg.format)
        return *cfg.format;
    auto dot = cfg.input_path.rfind('.');
    if (dot != std::string::npos) {
        std::string ext = cfg.input_path.substr(dot + 1);
        if (auto f = format_from_name(ext))
            return *f;
    }
    return GenFormat::cycles;
}

int cmd_split(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        PermutationAction act = parse_generators(read_file(cfg.input_path), resolve_format(cfg));

        auto t0 = std::chrono::steady_clock::now();
        OrbitalBasis basis = orbital_basis(act);
        StructureConstants sc = structure_constants(basis, cfg.threads);
        StageTimings timings;
        timings.orbital_seconds = seconds_since(t0);

        print_orbital_block(out, basis, sc);
        if (cfg.dump_tables) {
            for (int p = 0; p < sc.rank; ++p)
                for (int q = 0; q < sc.rank; ++q)
                    for (int r = 0; r < sc.rank; ++r)
                        if (std::uint32_t v = sc.get(p, q, r))
                            out << "C[" << p + 1 << "][" << q + 1 << "][" << r + 1 << "] = " << v
                                << "\n";
        }

        SplitConfig scfg;
        scfg.seed = cfg.seed;
        scfg.digits = cfg.precision;
        scfg.threads = cfg.threads;
        scfg.progress = [&out](const std::string& s) { out << s << "\n"; };

        auto t1 = std::chrono::steady_clock::now();
        Decomposition dec = split_prepared(basis, sc, scfg);
        timings.solve_seconds = seconds_since(t1);

        print_decomposition(out, dec, basis);

        TransformBasis tbasis;
        const TransformBasis* tb_ptr = nullptr;
        if (cfg.emit_basis) {
            tbasis = transformation_basis(dec, basis, cfg.max_basis_dim);
            tb_ptr = &tbasis;
            out << "Transformation basis: " << tbasis.columns.size() << " columns, blocks";
            for (auto w : tbasis.block_widths)
                out << " " << w;
            out << "\n";
        }

        if (cfg.verify) {
            VerifyReport rep = verify_decomposition(dec, act, basis, sc, cfg.seed, 100,
                                                    cfg.precision);
            for (const auto& item : rep.items)
                out << (item.ok ? "check ok: " : "check FAILED: ") << item.name
                    << (item.detail.empty() ? "" : " (" + item.detail + ")") << "\n";
            if (!rep.all_ok())
                throw CheckFailure("verification failed");
        }

        if (!cfg.json_path.empty())
            write_text_file(cfg.json_path,
                            decomposition_to_json(dec, basis, cfg.precision / 4 + 8, tb_ptr));

        out << "Time orbital stage: " << timings.orbital_seconds << " sec\n";
        out << "Time solving stage: " << timings.solve_seconds << " sec\n";
        out << "Peak memory estimate: " << format_bytes(memory_estimate_bytes(basis, sc)) << "\n";
        return 0;
    });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        ParsedDecomposition parsed = decomposition_from_json(read_file(cfg.artifact_path));
        PermutationAction act = parse_generators(read_file(cfg.input_path), resolve_format(cfg));

        OrbitalBasis basis = orbital_basis(act);
        StructureConstants sc = structure_constants(basis, cfg.threads);
        if (parsed.dec.degree != basis.degree || parsed.dec.rank != basis.rank)
            throw ArtifactMismatch("artifact degree/rank do not match the generator file");
        if (parsed.suborbit_lengths != basis.suborbit_lengths ||
            parsed.transpose_of != basis.transpose_of)
            throw ArtifactMismatch("artifact suborbit data does not match the generator file");
        parsed.dec.multiplicity_free = sc.commutative;

        VerifyReport rep =
            verify_decomposition(parsed.dec, act, basis, sc, cfg.seed, 100, cfg.precision);
        bool ok = true;
        for (const auto& item : rep.items) {
            out << (item.ok ? "check ok: " : "check FAILED: ") << item.name
                << (item.detail.empty() ? "" : " (" + item.detail + ")") << "\n";
            ok = ok && item.ok;
        }
        if (!ok)
            throw CheckFailure("artifact verification failed");
        out << "verification passed\n";
        return 0;
    });
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        PermutationAction act = parse_generators(read_file(cfg.input_path), resolve_format(cfg));
        OrbitalBasis basis = orbital_basis(act);
        StructureConstants sc = structure_constants(basis, cfg.threads);
        print_orbital_block(out, basis, sc);
        out << "Suborbit representatives:";
        for (int r = 0; r < basis.rank; ++r)
            out << " " << basis.suborbit_reps[static_cast<std::size_t>(r)] + 1;
        out << "\nTranspose pairing:";
        for (int r = 0; r < basis.rank; ++r)
            out << " " << basis.transpose_of[static_cast<std::size_t>(r)] + 1;
        out << "\n";
        for (int p = 0; p < sc.rank; ++p)
            for (int q = 0; q < sc.rank; ++q)
                for (int r = 0; r < sc.rank; ++r)
                    if (std::uint32_t v = sc.get(p, q, r))
                        out << "C[" << p + 1 << "][" << q + 1 << "][" << r + 1 << "] = " << v
                            << "\n";
        if (!cfg.json_path.empty())
            write_text_file(cfg.json_path, tables_to_json(basis, sc));
        return 0;
    });
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        PermutationAction act = parse_generators(read_file(cfg.input_path), resolve_format(cfg));
        auto t0 = std::chrono::steady_clock::now();
        OrbitalBasis basis = compute_suborbits(act);
        double orbit_s = seconds_since(t0);
        auto t1 = std::chrono::steady_clock::now();
        transpose_pairing(basis);
        order_orbitals(basis);
        double order_s = seconds_since(t1);
        auto t2 = std::chrono::steady_clock::now();
        StructureConstants sc = structure_constants(basis, cfg.threads);
        double table_s = seconds_since(t2);

        print_orbital_block(out, basis, sc);
        out << "Schreier generators: " << basis.transversal.schreier.size() << "\n";
        out << "Time suborbits : " << orbit_s << " sec\n";
        out << "Time ordering  : " << order_s << " sec\n";
        out << "Time mult table: " << table_s << " sec\n";
        out << "Peak memory estimate: " << format_bytes(memory_estimate_bytes(basis, sc)) << "\n";
        return 0;
    });
}

} // namespace repsplit
