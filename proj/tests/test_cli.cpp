#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& outFile) {
    const std::string cmd = std::string(LC_CLI_PATH) + " " + args + " 2>cli_stderr.txt";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exitCode = WEXITSTATUS(rc);
    std::ifstream in(outFile);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    out << body;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& body) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(body);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("spectrum command reproduces the geometric lowest-level spectrum") {
    write_file("cfg_spectrum.json", R"({
        "command": "spectrum",
        "potential": {"family": "gaussian", "amplitude": 1.0, "width": 1.0},
        "B": 1.0, "q": 0
    })");
    auto r = run_cli("spectrum --config cfg_spectrum.json --out out_spectrum.csv",
                     "out_spectrum.csv");
    REQUIRE(r.exitCode == 0);
    auto rows = parse_csv(r.output);
    REQUIRE(rows.size() >= 7); // header + eigenvalues
    // header then data; eigenvalue column index 1
    for (int m = 0; m < 6; ++m) {
        const double eig = std::stod(rows[1 + m][1]);
        CHECK(std::abs(eig - std::pow(3.0, -(m + 1.0))) < 1e-9);
    }
    CHECK(r.output.find("# config_hash:") != std::string::npos);
    CHECK(r.output.find("# cutoff_tol:") != std::string::npos);
}

TEST_CASE("identical configs produce bit-identical csv bodies") {
    write_file("cfg_radon.json", R"({
        "command": "radon",
        "potential": {"family": "gaussian", "amplitude": 1.0, "width": 1.0, "center": [0.3, 0.1]},
        "omegaCount": 4, "bCount": 21, "bMax": 4.0
    })");
    auto r1 = run_cli("radon --config cfg_radon.json --out out_radon1.csv", "out_radon1.csv");
    auto r2 = run_cli("radon --config cfg_radon.json --out out_radon2.csv --threads 2",
                      "out_radon2.csv");
    REQUIRE(r1.exitCode == 0);
    REQUIRE(r2.exitCode == 0);
    CHECK(r1.output == r2.output);
    CHECK(!r1.output.empty());
}

TEST_CASE("moments command: first moments equal the trace identity rows") {
    write_file("cfg_moments.json", R"({
        "command": "moments",
        "potential": {"family": "gaussian", "amplitude": 1.0, "width": 1.0},
        "B": 1.0, "qList": [0, 3, 7], "ellList": [1]
    })");
    auto r = run_cli("moments --config cfg_moments.json --out out_moments.csv",
                     "out_moments.csv");
    REQUIRE(r.exitCode == 0);
    auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double residual = std::stod(rows[i][5]);
        CHECK(residual < 1e-6);
    }
}

TEST_CASE("threshold violation is rejected with a diagnostic") {
    write_file("cfg_bad.json", R"({
        "command": "moments",
        "potential": {"family": "powerDecay", "rho": 1.5},
        "B": 1.0, "qList": [0], "ellList": [1]
    })");
    auto r = run_cli("moments --config cfg_bad.json --out out_bad.csv", "out_bad.csv");
    CHECK(r.exitCode == 2);
    const std::string err = read_file("cli_stderr.txt");
    CHECK(err.find("\"error\"") != std::string::npos);
    CHECK(err.find("threshold") != std::string::npos);
}

TEST_CASE("config command mismatch is a config error") {
    write_file("cfg_mismatch.json", R"({"command": "radon"})");
    auto r = run_cli("spectrum --config cfg_mismatch.json --out out_mm.csv", "out_mm.csv");
    CHECK(r.exitCode == 2);
}

TEST_CASE("bump through the origin is rejected") {
    write_file("cfg_bump.json", R"({
        "command": "distribution",
        "potential": {"family": "gaussian", "amplitude": 1.0, "width": 1.0},
        "B": 1.0, "qList": [2],
        "bumps": [{"center": 0.05, "halfWidth": 0.1}],
        "measure": {"omegaCount": 2, "bCount": 256, "bMax": 6.0}
    })");
    auto r = run_cli("distribution --config cfg_bump.json --out out_bump.csv", "out_bump.csv");
    CHECK(r.exitCode == 2);
    const std::string err = read_file("cli_stderr.txt");
    CHECK(err.find("support") != std::string::npos);
}

TEST_CASE("json output format") {
    write_file("cfg_json.json", R"({
        "command": "appendix", "check": "wigner", "qMax": 1,
        "halfWidth": 9.0, "size": 256
    })");
    auto r = run_cli("appendix --config cfg_json.json --out out_app.json --format json",
                     "out_app.json");
    REQUIRE(r.exitCode == 0);
    CHECK(r.output.find("\"columns\"") != std::string::npos);
    CHECK(r.output.find("\"config_hash\"") != std::string::npos);
}

TEST_CASE("strongfield first-moment identity via the cli") {
    write_file("cfg_sf.json", R"({
        "command": "strongfield",
        "potential": {"family": "gaussian", "amplitude": 1.0, "width": 1.0},
        "q": 0, "ell": 1, "BList": [1.0, 8.0]
    })");
    auto r = run_cli("strongfield --config cfg_sf.json --out out_sf.csv", "out_sf.csv");
    REQUIRE(r.exitCode == 0);
    auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::abs(std::stod(rows[i][1]) - 0.5) < 1e-6);
        CHECK(std::abs(std::stod(rows[i][3]) - 0.5) < 1e-7);
    }
}
