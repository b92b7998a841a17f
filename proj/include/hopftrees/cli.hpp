#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopftrees::cli {

/// Runs one command line (without the program name). Exit status: 0 success, 1 verification failure,
/// 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Which library operation a command reaches, with a command line that exercises it.
struct Binding {
    std::string subcommand;
    std::string operation;
    std::vector<std::string> example;
};
const std::vector<Binding>& operation_bindings();

/// Environment variable holding the default worker count.
inline constexpr const char* workers_env = "HOPFTREES_WORKERS";

}  // namespace hopftrees::cli
