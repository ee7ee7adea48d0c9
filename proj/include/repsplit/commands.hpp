#ifndef REPSPLIT_COMMANDS_HPP
#define REPSPLIT_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "repsplit/permgroup.hpp"

namespace repsplit {

struct RunConfig {
    std::string input_path;
    std::optional<GenFormat> format; // inferred from the extension when absent
    std::uint64_t seed = 0;
    std::string json_path;
    bool emit_basis = false;
    bool verify = false;
    bool dump_tables = false;
    Point max_basis_dim = 2000;
    int precision = 64;
    int threads = 0;
    std::string artifact_path; // verify subcommand
};

// Exit codes: 0 success, 1 input error, 2 algorithmic failure, 3 resource cap.
int cmd_split(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

GenFormat resolve_format(const RunConfig& cfg);
std::string read_file(const std::string& path);

} // namespace repsplit

#endif
