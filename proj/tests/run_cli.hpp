#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace gtz::testing {

struct CliResult {
    int status = -1;
    std::string out;  // stdout and stderr
};

/// Runs the CLI with `args` appended (shell syntax) and captures output.
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" GTZ_CLI_PATH "\" " + args + " 2>&1";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace gtz::testing
