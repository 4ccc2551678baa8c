// Process-level tests for the bctk binary. Takes the binary path as argv[1],
// runs it through popen and checks exit codes and output shapes.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;
std::string bin;
std::filesystem::path dir;

struct Result {
    int code;
    std::string out;
};

Result run_cmd(const std::string& args, const std::string& env = {}) {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += "'" + bin + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::perror("popen");
        std::exit(2);
    }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cout << "FAIL: " << what << "\n";
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string path_of(const std::string& name) { return (dir / name).string(); }

void write_file(const std::string& name, const std::string& text) {
    std::ofstream out(dir / name);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <bctk-binary>\n";
        return 2;
    }
    bin = argv[1];
    dir = std::filesystem::temp_directory_path() /
          ("bctk-cli-" + std::to_string(getpid()));
    std::filesystem::create_directories(dir);

    write_file("triangle.gf", "n 3\ne 0 1\ne 0 2\ne 1 2\n");
    write_file("loop.gf", "n 1\ne 0 0\n");
    write_file("par.gf", "n 2\ne 0 1\ne 0 1\n");
    write_file("bad.gf", "n 2\ne 5 0\n");
    write_file("empty2.gf", "n 2\n");
    {
        std::string big = "n 22\n";
        for (int i = 0; i < 21; ++i)
            big += "e " + std::to_string(i) + " " + std::to_string(i + 1) + "\n";
        write_file("big.gf", big);
    }

    // poly: text rendering and evaluation
    {
        auto r = run_cmd("poly " + path_of("triangle.gf"));
        expect(r.code == 0, "poly triangle exits 0");
        expect(contains(r.out, "P = λ^3 - 3λ^2 + 2λ"), "poly prints the polynomial");
        expect(contains(r.out, "a = [1, 3, 2, 0]"), "poly prints the signed view");

        auto ascii = run_cmd("poly --ascii " + path_of("triangle.gf"));
        expect(contains(ascii.out, "P = L^3 - 3L^2 + 2L"), "poly --ascii avoids unicode");

        auto eval = run_cmd("poly --eval 3 --eval 0 " + path_of("triangle.gf"));
        expect(contains(eval.out, "P(3) = 6"), "poly --eval 3");
        expect(contains(eval.out, "P(0) = 0"), "poly --eval 0");

        auto cached = run_cmd("poly --cache " + path_of("triangle.gf"));
        expect(cached.out == r.out, "poly --cache output identical");

        expect(contains(run_cmd("poly " + path_of("loop.gf")).out, "P = 0"),
               "loop graph has the zero polynomial");
        expect(contains(run_cmd("poly " + path_of("empty2.gf")).out, "P = λ^2"),
               "edgeless graph has the pure power");
    }

    // poly: JSON report
    {
        auto r = run_cmd("poly --json " + path_of("triangle.gf"));
        expect(r.code == 0, "poly --json exits 0");
        auto j = nlohmann::json::parse(r.out);
        expect(j["n"] == 3 && j["m"] == 3, "poly json n and m");
        expect(j["coefficients_dense"] == nlohmann::json::array({0, 2, -3, 1}),
               "poly json dense coefficients");
        expect(j["coefficients_ak"] == nlohmann::json::array({1, 3, 2, 0}),
               "poly json signed coefficients");

        auto eval = run_cmd("poly --json --eval 4 " + path_of("triangle.gf"));
        auto je = nlohmann::json::parse(eval.out);
        expect(je["evaluations"][0]["lambda"] == 4 && je["evaluations"][0]["value"] == 24,
               "poly json evaluations");
    }

    // exit codes: bad input, guards, overflow
    {
        expect(run_cmd("poly " + path_of("missing.gf")).code == 2, "missing file exits 2");
        expect(run_cmd("poly " + path_of("bad.gf")).code == 2, "malformed file exits 2");
        expect(run_cmd("poly " + path_of("big.gf")).code == 4,
               "21 edges trip the default guard");
        expect(run_cmd("poly --max-edges 24 " + path_of("big.gf")).code == 0,
               "--max-edges 24 admits 21 edges");
        expect(run_cmd("poly --max-edges 25 " + path_of("big.gf")).code == 2,
               "--max-edges above the hard cap is rejected");
        expect(run_cmd("poly " + path_of("big.gf"), "BCTK_MAX_EDGES=24").code == 0,
               "BCTK_MAX_EDGES relaxes the guard");
        expect(run_cmd("poly " + path_of("triangle.gf"), "BCTK_MAX_EDGES=2").code == 4,
               "BCTK_MAX_EDGES tightens the guard");
        expect(run_cmd("poly --eval 3000000000 " + path_of("triangle.gf")).code == 3,
               "overflowing evaluation exits 3");
        expect(run_cmd("").code == 2, "missing subcommand exits 2");
        expect(run_cmd("frobnicate").code == 2, "unknown subcommand exits 2");
        expect(run_cmd("--help").code == 0, "help exits 0");
    }

    // bc
    {
        auto r = run_cmd("bc " + path_of("triangle.gf"));
        expect(r.code == 0, "bc triangle exits 0");
        expect(contains(r.out, "broken circuits: 1"), "bc count line");
        expect(contains(r.out, "{0,1}  (from cycle {0,1,2})"), "bc circuit line");

        expect(contains(run_cmd("bc " + path_of("par.gf")).out,
                        "{0}  (from cycle {0,1})"),
               "parallel pair breaks to the smaller edge");
        expect(contains(run_cmd("bc " + path_of("empty2.gf")).out, "broken circuits: 0"),
               "edgeless graph has no broken circuits");

        auto j = nlohmann::json::parse(run_cmd("bc --json " + path_of("loop.gf")).out);
        expect(j["broken_circuits"] ==
                   nlohmann::json::array({nlohmann::json::array()}),
               "loop yields the empty broken circuit");
    }

    // nbc
    {
        auto r = run_cmd("nbc " + path_of("triangle.gf") + " 2 --list");
        expect(r.code == 0, "nbc triangle exits 0");
        expect(contains(r.out, "nbc(2) = 2"), "nbc count line");
        expect(contains(r.out, "{0,2}") && contains(r.out, "{1,2}"), "nbc --list subsets");

        expect(contains(run_cmd("nbc " + path_of("triangle.gf") + " 5").out, "nbc(5) = 0"),
               "oversized k counts zero, not an error");
        expect(contains(run_cmd("nbc " + path_of("loop.gf") + " 0").out, "nbc(0) = 0"),
               "loop blocks even the empty subset");
        expect(run_cmd("nbc " + path_of("triangle.gf")).code == 2,
               "nbc without k exits 2");

        auto j = nlohmann::json::parse(
            run_cmd("nbc --json " + path_of("triangle.gf") + " 2").out);
        expect(j["count"] == 2 && !j.contains("subsets"),
               "nbc json omits subsets unless listed");
    }

    // verify
    {
        auto r = run_cmd("verify " + path_of("triangle.gf"));
        expect(r.code == 0, "verify triangle exits 0");
        expect(contains(r.out, "whitney: pass"), "verify whitney line");
        expect(contains(r.out, "L0: skip"), "verify skips L0 without parallels");
        expect(contains(r.out, "L1: pass"), "verify L1 line");
        expect(contains(r.out, "EQ3: pass"), "verify EQ3 line");
        expect(contains(r.out, "all checks passed"), "verify summary line");

        expect(run_cmd("verify " + path_of("loop.gf")).code == 0, "verify loop exits 0");

        auto j = nlohmann::json::parse(
            run_cmd("verify --json " + path_of("triangle.gf")).out);
        expect(j["whitney"]["pass"] == true, "verify json whitney pass");
        expect(j["nbc_counts"] == nlohmann::json::array({1, 3, 2, 0}),
               "verify json nbc counts");
        expect(j["lemmas"].size() == 8, "verify json has one row per lemma");
        expect(j["lemmas"][7]["lemma"] == "EQ3", "verify json lemma order");
    }

    // fuzz: determinism across runs and thread counts
    {
        const std::string base = "fuzz --n-max 5 --m-max 8 --trials 200 --seed 7";
        auto a = run_cmd(base);
        auto b = run_cmd(base);
        auto c = run_cmd(base + " --threads 4");
        expect(a.code == 0, "fuzz exits 0");
        expect(contains(a.out, "200 graphs, 0 failures"), "fuzz summary line");
        expect(a.out == b.out, "fuzz output is reproducible");
        expect(a.out == c.out, "fuzz output is thread-count independent");

        auto j = nlohmann::json::parse(run_cmd(base + " --json").out);
        expect(j["graphs"] == 200 && j["failures"] == 0, "fuzz json totals");
        expect(j["checks"].size() == 9, "fuzz json has one row per check");
        expect(j["config"]["seed"] == 7, "fuzz json echoes the config");

        expect(contains(run_cmd("fuzz --trials 0").out, "0 graphs, 0 failures"),
               "fuzz with no trials");
        expect(run_cmd("fuzz --n-max 0").code == 2, "fuzz rejects n-max 0");
        expect(run_cmd("fuzz --threads 0").code == 2, "fuzz rejects zero threads");
    }

    std::filesystem::remove_all(dir);
    if (failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cout << "cli_tests: " << failures << " failures\n";
    return 1;
}
