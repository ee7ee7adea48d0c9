#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "repsplit/json_io.hpp"
#include "repsplit/report.hpp"

namespace py = pybind11;
using namespace repsplit;

namespace {

GenFormat format_or_throw(const std::string& name) {
    auto f = format_from_name(name);
    if (!f)
        throw MalformedInput("unknown generator format '" + name + "'");
    return *f;
}

// JSON string of the decomposition; the python wrapper turns it into a dict.
std::string split_text(const std::string& generators, const std::string& format,
                       std::uint64_t seed, int precision, bool with_basis) {
    PermutationAction act = parse_generators(generators, format_or_throw(format));
    OrbitalBasis basis = orbital_basis(act);
    StructureConstants sc = structure_constants(basis);
    SplitConfig cfg;
    cfg.seed = seed;
    cfg.digits = precision;
    Decomposition dec = split_prepared(basis, sc, cfg);
    if (with_basis) {
        TransformBasis tb = transformation_basis(dec, basis);
        return decomposition_to_json(dec, basis, precision / 4 + 8, &tb);
    }
    return decomposition_to_json(dec, basis, precision / 4 + 8);
}

std::string tables_text(const std::string& generators, const std::string& format) {
    PermutationAction act = parse_generators(generators, format_or_throw(format));
    OrbitalBasis basis = orbital_basis(act);
    StructureConstants sc = structure_constants(basis);
    return tables_to_json(basis, sc);
}

py::dict verify_artifact(const std::string& artifact_json, const std::string& generators,
                         const std::string& format, std::uint64_t seed) {
    ParsedDecomposition parsed = decomposition_from_json(artifact_json);
    PermutationAction act = parse_generators(generators, format_or_throw(format));
    OrbitalBasis basis = orbital_basis(act);
    StructureConstants sc = structure_constants(basis);
    if (parsed.dec.degree != basis.degree || parsed.dec.rank != basis.rank)
        throw ArtifactMismatch("artifact degree/rank do not match the generator input");
    parsed.dec.multiplicity_free = sc.commutative;
    VerifyReport rep = verify_decomposition(parsed.dec, act, basis, sc, seed);
    py::dict out;
    py::list items;
    for (const auto& item : rep.items) {
        py::dict d;
        d["name"] = item.name;
        d["ok"] = item.ok;
        d["detail"] = item.detail;
        items.append(d);
    }
    out["ok"] = rep.all_ok();
    out["checks"] = items;
    return out;
}

std::string report_text(const std::string& generators, const std::string& format,
                        std::uint64_t seed) {
    PermutationAction act = parse_generators(generators, format_or_throw(format));
    OrbitalBasis basis = orbital_basis(act);
    StructureConstants sc = structure_constants(basis);
    SplitConfig cfg;
    cfg.seed = seed;
    Decomposition dec = split_prepared(basis, sc, cfg);
    std::ostringstream os;
    print_orbital_block(os, basis, sc);
    print_decomposition(os, dec, basis);
    return os.str();
}

} // namespace

PYBIND11_MODULE(_repsplit, m) {
    m.doc() = "Exact irreducible decomposition of transitive permutation representations";

    py::register_exception<MalformedInput>(m, "MalformedInputError");
    py::register_exception<NotABijection>(m, "NotABijectionError");
    py::register_exception<DegreeMismatch>(m, "DegreeMismatchError");
    py::register_exception<NotTransitive>(m, "NotTransitiveError");
    py::register_exception<ArtifactMismatch>(m, "ArtifactMismatchError");

    m.def("split_json", &split_text, py::arg("generators"), py::arg("format") = "cycles",
          py::arg("seed") = 0, py::arg("precision") = 64, py::arg("with_basis") = false,
          "Decompose and return the JSON artifact as a string.");
    m.def("tables_json", &tables_text, py::arg("generators"), py::arg("format") = "cycles",
          "Suborbits, transpose pairing and structure constants as a JSON string.");
    m.def("verify", &verify_artifact, py::arg("artifact_json"), py::arg("generators"),
          py::arg("format") = "cycles", py::arg("seed") = 0,
          "Re-run all coefficient-level checks of a stored artifact.");
    m.def("report", &report_text, py::arg("generators"), py::arg("format") = "cycles",
          py::arg("seed") = 0, "Text report (rank, suborbit lengths, projectors).");
}
