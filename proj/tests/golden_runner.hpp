#pragma once

// Runs the CLI golden manifest: one "name | args" case per line, executed from the golden directory.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hyperinv::testing {

struct GoldenCase {
    std::string name;
    std::string args;
};

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

inline std::vector<GoldenCase> load_cases(const std::string& golden_dir)
{
    std::ifstream in(golden_dir + "/cases.txt");
    std::vector<GoldenCase> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto bar = line.find('|');
        if (bar == std::string::npos) continue;
        cases.push_back({trim(line.substr(0, bar)), trim(line.substr(bar + 1))});
    }
    return cases;
}

/// stdout of the CLI followed by "exit: N"; stderr is discarded.
inline std::string run_cli(const std::string& cli, const std::string& golden_dir, const std::string& args)
{
    const std::string cmd = "cd '" + golden_dir + "' && '" + cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return "popen failed";
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    out += "exit: " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + "\n";
    return out;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string expected_path(const std::string& golden_dir, const GoldenCase& c)
{
    return golden_dir + "/expected/" + c.name + ".out";
}

}  // namespace hyperinv::testing
