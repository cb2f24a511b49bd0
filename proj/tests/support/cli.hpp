// Runs the hjd binary from tests. Paths come from compile definitions.
#ifndef HJD_TESTS_CLI_HPP
#define HJD_TESTS_CLI_HPP

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace hjd::cli {

struct Run {
    int status = -1;
    std::string out;
};

inline std::string fixture(const std::string& name) { return std::string(HJD_FIXTURES) + "/" + name; }

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Runs `hjd <args>`, capturing stdout. stderr is dropped.
inline Run run(const std::string& args) {
    const std::string cmd = std::string("\"") + HJD_CLI + "\" " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

/// Scratch directory, removed on destruction.
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "hjd-XXXXXX").string();
        path = mkdtemp(tmpl.data());
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name, std::ios::binary) << text;
        return (path / name).string();
    }
};

}  // namespace hjd::cli

#endif  // HJD_TESTS_CLI_HPP
