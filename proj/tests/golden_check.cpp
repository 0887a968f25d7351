// Reruns the pinned tool invocations and compares stdout byte-for-byte with
// the committed golden files.  Arguments: <tool> <golden-dir>.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

bool slurp(const std::string& path, std::string& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::ostringstream os;
    os << f.rdbuf();
    out = os.str();
    return true;
}

// Runs the tool with stdout captured to a scratch file; returns the exit
// status, or -1 when the child did not exit normally.
int run_capture(const std::string& tool, const std::string& args, const std::string& out_path) {
    std::string cmd =
        "\"" + tool + "\" " + args + " > \"" + out_path + "\" 2> golden_check_stderr.tmp";
    int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

struct Pinned {
    const char* args;
    const char* golden;
    int runs;  // repeated runs pin byte-level determinism
};

constexpr Pinned kPinned[] = {
    {"table --family poly-fg --k 1 --u -1 --lambda 1/3 --x 0 --n-max 4", "table_poly_fg.json", 1},
    {"table --family deg-falling --x 3 --lambda 1 --n-max 2", "table_deg_falling.json", 1},
    {"audit --seed 42 --n-max 10 --samples 3", "audit_seed42.json", 2},
};

bool check_one(const std::string& tool, const std::string& dir, const Pinned& c) {
    std::string expected;
    if (!slurp(dir + "/" + c.golden, expected)) {
        std::cerr << "golden: missing file " << dir << "/" << c.golden << '\n';
        return false;
    }
    for (int r = 0; r < c.runs; ++r) {
        const std::string scratch = "golden_check_out.tmp";
        int status = run_capture(tool, c.args, scratch);
        std::string actual;
        if (status != 0 || !slurp(scratch, actual)) {
            std::cerr << "golden: `" << c.args << "` exited with status " << status << '\n';
            return false;
        }
        if (actual != expected) {
            std::cerr << "golden: `" << c.args << "` run " << r + 1 << " differs from " << c.golden
                      << " (" << actual.size() << " vs " << expected.size() << " bytes)\n";
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: golden_check <tool> <golden-dir>\n";
        return 2;
    }
    int failures = 0;
    for (const auto& c : kPinned) {
        if (check_one(argv[1], argv[2], c)) {
            std::cout << "ok " << c.golden << '\n';
        } else {
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
