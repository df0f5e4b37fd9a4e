#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <sys/wait.h>

#include "u3/render.hpp"
#include "u3/table_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the CLI with the given arguments, capturing stdout; stderr is
// dropped.  The exit code is the process status.
RunResult run(const std::string& args) {
    const std::string cmd = std::string(U3COEF_BIN) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path fresh_dir() {
    static std::mt19937_64 rng{std::random_device{}()};
    fs::path p = fs::temp_directory_path() / ("u3coef-test-" + std::to_string(rng()));
    fs::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("dimension forms") {
    CHECK(run("dim 3,2,0").out == "15\n");
    CHECK(run("dim 3 2 0").out == "15\n");
    CHECK(run("dim 4,2").out == "60\n");
    CHECK(run("dim 4 2").out == "60\n");
    CHECK(run("dim 3,2,0").code == 0);
}

TEST_CASE("table output matches the library renderers") {
    CHECK(run("decompose 1,0,0 1,0,0").out ==
          u3::render_decompose_text({1, 0, 0}, {1, 0, 0}));
    CHECK(run("enumerate 1,0,0").out == u3::render_enumerate_text({1, 0, 0}));
    CHECK(run("content 2 2").out == u3::render_content_text({2, 2}));
    CHECK(run("--format json content 2 2").out == u3::render_content_json({2, 2}).dump());
}

TEST_CASE("json output is deterministic") {
    const char* cmds[] = {
        "--format json dim 3,2,0",
        "--format json enumerate 2,1,0",
        "--format json decompose 2,1,0 1,1,0",
        "--format json cgc 1,0,0 1,0,0 1,1,0",
        "--format json cgc 2,1,0 2,1,0 3,2,1",
        "--format json ucoef 1,0,0 1,0,0 2,1,0 1,0,0 2,0,0 1,1,0",
        "--format json zcoef 1,0,0 1,0,0 2,1,0 1,0,0 2,0,0 1,1,0",
        "--format json nine 1,0,0 1,0,0 2,0,0 1,0,0 1,0,0 1,1,0 2,0,0 1,1,0 2,1,1",
        "--format json content 4 2",
        "--format json transform 2 2 2",
        "--format json wigner 1 1 1 1",
    };
    for (const char* cmd : cmds) {
        const RunResult a = run(cmd);
        const RunResult b = run(cmd);
        CAPTURE(cmd);
        CHECK(a.code == 0);
        CHECK(!a.out.empty());
        CHECK(a.out == b.out);
        CHECK(a.out.back() == '\n');
        CHECK(a.out.find("\"kind\"") != std::string::npos);
    }
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 1);                                  // missing subcommand
    CHECK(run("--help").code == 0);                            // help is success
    CHECK(run("dim bogus").code == 1);                         // unparsable label
    CHECK(run("dim 1,2,3").code == 1);                         // not weakly decreasing
    CHECK(run("cgc 1,0,0 1,0,0 9,9,9").code == 1);             // coupling absent
    CHECK(run("transform 2 0 1").code == 1);                   // L absent from content
    CHECK(run("nosuchcommand").code == 1);                     // unknown subcommand
    CHECK(run("decompose 1,0,0").code == 1);                   // missing argument
    CHECK(run("--format yaml dim 1,0,0").code == 1);           // unknown format
    CHECK(run("ucoef 1,0,0 1,0,0 3,0,0 1,0,0 2,0,0 1,1,0").code == 1); // no coupling
}

TEST_CASE("coupling cache round trip") {
    const fs::path dir = fresh_dir();
    const std::string base = "--format json --cache-dir " + dir.string() + " ";
    const RunResult first = run(base + "cgc 2,1,0 1,1,0 2,2,1");
    CHECK(first.code == 0);
    const fs::path file = u3::cgc_cache_path(dir, {2, 1, 0}, {1, 1, 0}, {2, 2, 1});
    CHECK(fs::exists(file));

    const RunResult second = run(base + "cgc 2,1,0 1,1,0 2,2,1");
    CHECK(second.code == 0);
    CHECK(second.out == first.out);

    // A truncated cache file is treated as a miss and rewritten.
    fs::resize_file(file, fs::file_size(file) / 2);
    const RunResult third = run(base + "cgc 2,1,0 1,1,0 2,2,1");
    CHECK(third.code == 0);
    CHECK(third.out == first.out);

    // Garbage content is also ignored.
    {
        std::ofstream f(file, std::ios::binary | std::ios::trunc);
        f << "not a table";
    }
    const RunResult fourth = run(base + "cgc 2,1,0 1,1,0 2,2,1");
    CHECK(fourth.code == 0);
    CHECK(fourth.out == first.out);

    // --no-cache leaves the directory untouched.
    const fs::path dir2 = fresh_dir();
    const RunResult plain =
        run("--format json --cache-dir " + dir2.string() + " --no-cache cgc 1,0,0 1,0,0 2,0,0");
    CHECK(plain.code == 0);
    CHECK(!fs::exists(dir2 / "cgc"));

    fs::remove_all(dir);
    fs::remove_all(dir2);
}

TEST_CASE("wigner cache round trip") {
    const fs::path dir = fresh_dir();
    const std::string base = "--format json --cache-dir " + dir.string() + " ";
    const RunResult first = run(base + "wigner 1 1 1 0");
    CHECK(first.code == 0);
    CHECK(fs::exists(u3::wigner_cache_path(dir, {1, 1}, {1, 0})));
    const RunResult second = run(base + "wigner 1 1 1 0");
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
    // A different tolerance must not reuse the file; the recomputed entries
    // still agree (only the echoed tolerance label differs).
    const RunResult other = run("--format json --tol 1e-9 --cache-dir " + dir.string() +
                                " wigner 1 1 1 0");
    CHECK(other.code == 0);
    auto entries = [](const std::string& s) {
        const auto from = s.find("\"entries\""), to = s.find(",\"kind\"");
        REQUIRE(from != std::string::npos);
        REQUIRE(to != std::string::npos);
        return s.substr(from, to - from);
    };
    CHECK(entries(other.out) == entries(first.out));
    fs::remove_all(dir);
}

TEST_CASE("binary table io") {
    const fs::path dir = fresh_dir();
    const u3::CGTable table({2, 1, 0}, {2, 1, 0}, {3, 2, 1});
    u3::save_table(dir, table);
    const auto loaded = u3::load_table(dir, {2, 1, 0}, {2, 1, 0}, {3, 2, 1}, table.tol());
    REQUIRE(loaded.has_value());
    CHECK(loaded->rho_max() == 2);
    for (int s = 0; s < table.coupled_basis().size(); ++s)
        for (int rho = 0; rho < table.rho_max(); ++rho) {
            const auto& a = table.terms(s, rho);
            const auto& b = loaded->terms(s, rho);
            REQUIRE(a.size() == b.size());
            for (size_t k = 0; k < a.size(); ++k) {
                CHECK(a[k].i1 == b[k].i1);
                CHECK(a[k].i2 == b[k].i2);
                CHECK(a[k].value == b[k].value); // bit-identical
            }
        }
    // Tolerance mismatch is a miss.
    CHECK_FALSE(u3::load_table(dir, {2, 1, 0}, {2, 1, 0}, {3, 2, 1}, 1e-9).has_value());
    // Absent file is a miss.
    CHECK_FALSE(u3::load_table(dir, {1, 0, 0}, {1, 0, 0}, {2, 0, 0}, 1e-10).has_value());
    fs::remove_all(dir);
}
