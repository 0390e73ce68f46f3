#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// Drives the installed binary through a shell, so these cases cover argument
// parsing, exit codes, and the exact bytes written to disk.

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(SINGOSC_CLI_PATH) + " " + args;
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Table {
    std::map<std::string, std::string> header;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t col(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        REQUIRE_MESSAGE(false, "missing column " << name);
        return 0;
    }
};

Table read_csv(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    Table t;
    std::string line;
    while (std::getline(f, line)) {
        if (line.rfind("# ", 0) == 0) {
            auto eq = line.find(" = ");
            REQUIRE(eq != std::string::npos);
            t.header[line.substr(2, eq - 2)] = line.substr(eq + 3);
            continue;
        }
        std::stringstream ss(line);
        std::string item;
        if (t.columns.empty()) {
            while (std::getline(ss, item, ',')) t.columns.push_back(item);
            continue;
        }
        std::vector<double> row;
        while (std::getline(ss, item, ',')) row.push_back(std::stod(item));
        REQUIRE(row.size() == t.columns.size());
        t.rows.push_back(std::move(row));
    }
    REQUIRE(!t.rows.empty());
    return t;
}

// Rows whose named columns match the given values, keeping file order; the x
// sweep is the innermost loop of every emitter, so a slice is x-ordered.
std::vector<double> slice(const Table& t,
                          const std::map<std::string, double>& match,
                          const std::string& value_col) {
    std::vector<std::size_t> keys;
    std::vector<double> wanted;
    for (const auto& [name, v] : match) {
        keys.push_back(t.col(name));
        wanted.push_back(v);
    }
    std::vector<double> out;
    for (const auto& row : t.rows) {
        bool ok = true;
        for (std::size_t k = 0; k < keys.size(); ++k)
            ok = ok && std::abs(row[keys[k]] - wanted[k]) < 1e-12;
        if (ok) out.push_back(row[t.col(value_col)]);
    }
    REQUIRE(!out.empty());
    return out;
}

// Distinct values of one column, ascending; matching keys read back from the
// file sidesteps the rounding of the emitter's %.12g formatting.
std::vector<double> distinct_values(const Table& t, const std::string& name) {
    std::set<double> seen;
    for (const auto& row : t.rows) seen.insert(row[t.col(name)]);
    return {seen.begin(), seen.end()};
}

double simpson(const std::vector<double>& y, double h) {
    REQUIRE(y.size() % 2 == 1);
    double s = y.front() + y.back();
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
        s += y[i] * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Interior dips of a sampled density count its nodes: between consecutive
// zeros the density forms one hump, so every local minimum inside the
// envelope is a node.  The window above 1e-6 of the peak excludes the
// underflowed far tail.
int count_nodes(const std::vector<double>& d) {
    double peak = *std::max_element(d.begin(), d.end());
    std::size_t lo = 0, hi = d.size() - 1;
    while (lo < hi && d[lo] < 1e-6 * peak) ++lo;
    while (hi > lo && d[hi] < 1e-6 * peak) --hi;
    int nodes = 0;
    for (std::size_t i = lo + 1; i < hi; ++i)
        if (d[i] < d[i - 1] && d[i] < d[i + 1] && d[i] < 1e-2 * peak)
            ++nodes;
    return nodes;
}

} // namespace

TEST_CASE("eigen table: exact levels, embedded config, flag precedence") {
    {
        std::ofstream cfg("cli_narrow.cfg");
        cfg << "g=1\nepsilon=-2\na=2\nc=1\n";
    }
    REQUIRE(run_cli("eigen --config cli_narrow.cfg --n 3 --out cli_eigen3.csv") ==
            0);
    auto t3 = read_csv("cli_eigen3.csv");
    CHECK(t3.header.at("command") == "eigen");
    CHECK(t3.header.at("g") == "1");
    CHECK(t3.header.at("epsilon") == "-2");
    CHECK(t3.header.at("a") == "2");
    auto nb = t3.col("lambda_base");
    auto nd = t3.col("lambda_deformed");
    for (std::size_t i = 0; i < t3.rows.size(); ++i)
        CHECK(t3.rows[i][nb] == 4.0 * i + 5.0);
    CHECK(t3.rows[0][nd] == -2.0);
    for (std::size_t i = 1; i < t3.rows.size(); ++i)
        CHECK(t3.rows[i][nd] == t3.rows[i - 1][nb]);

    // flags win over the config file
    REQUIRE(run_cli("eigen --config cli_narrow.cfg --g 2 --epsilon 3 --n 3 "
                    "--out cli_eigen4.csv") == 0);
    auto t4 = read_csv("cli_eigen4.csv");
    CHECK(t4.header.at("g") == "2");
    // the factorization energy one rung below the ground level keeps the
    // deformed ladder equidistant, added level included
    for (std::size_t i = 0; i + 1 < t4.rows.size(); ++i)
        CHECK(t4.rows[i + 1][nd] - t4.rows[i][nd] == 4.0);
}

TEST_CASE("outputs are bit-identical across reruns") {
    const std::string runs[] = {
        "potential --x-count 90 --t-count 7",
        "density --family deformed --g 1 --epsilon -2 --a 2 --c 1 --n 1 "
        "--x-count 80 --t-count 5",
        "density --family base --g 1 --epsilon -2 --a 2 --c 1 --n 1 "
        "--x-count 80 --t-count 5",
    };
    int k = 0;
    for (const auto& r : runs) {
        std::string p1 = "cli_rerun_" + std::to_string(k) + "_a.csv";
        std::string p2 = "cli_rerun_" + std::to_string(k) + "_b.csv";
        REQUIRE(run_cli(r + " --out " + p1) == 0);
        REQUIRE(run_cli(r + " --out " + p2) == 0);
        auto a = slurp(p1);
        CHECK(a.size() > 200);
        CHECK(a.find("# command = ") != std::string::npos);
        CHECK(a == slurp(p2));
        ++k;
    }
}

TEST_CASE("exit codes separate configuration errors from red suites") {
    // a degenerate seed is a configuration error for data commands
    CHECK(run_cli("potential --kb 0 --x-count 4 --t-count 2 "
                  "--out cli_bad.csv 2>/dev/null") == 2);
    CHECK(run_cli("eigen --g -0.5 --out cli_bad.csv 2>/dev/null") == 2);
    CHECK(run_cli("eigen --format svg --out cli_bad.svg 2>/dev/null") == 2);
    CHECK(run_cli("2>/dev/null") == 2);
    CHECK(run_cli("--help >/dev/null") == 0);
    // the suite runs with the seed it was given and reports the failure
    CHECK(run_cli("verify --kb 0 --out cli_verify_kb0.txt") == 3);
    auto txt = slurp("cli_verify_kb0.txt");
    CHECK(txt.find("seed admissibility") != std::string::npos);
    CHECK(txt.find("fail") != std::string::npos);
}

TEST_CASE("phase curves are linear when the width is static") {
    REQUIRE(run_cli("phase --a 1 --c 1 --n 1 --t-count 9 --t-max 2 "
                    "--out cli_phase.csv") == 0);
    auto t = read_csv("cli_phase.csv");
    auto ct = t.col("t");
    auto cn = t.col("n");
    auto cb = t.col("theta_base");
    auto cd = t.col("theta_deformed");
    for (const auto& row : t.rows) {
        double lam1 = 4.0 * row[cn] + 7.0;
        double lam2 = row[cn] == 0 ? 3.0 : 4.0 * (row[cn] - 1.0) + 7.0;
        CHECK(std::abs(row[cb] + lam1 * row[ct]) < 1e-9);
        CHECK(std::abs(row[cd] + lam2 * row[ct]) < 1e-9);
    }
}

TEST_CASE("densities integrate to one") {
    const std::string grid =
        "--x-min 0.005 --x-max 12 --x-count 2401 "
        "--t-min 0.3 --t-max 0.9 --t-count 2 --n 2 ";
    const std::string fam[] = {
        "density --family base --g 1 --epsilon -2 " + grid,
        "density --family deformed --g 2 --epsilon 3 " + grid,
    };
    double h = (12.0 - 0.005) / 2400.0;
    int k = 0;
    for (const auto& f : fam) {
        std::string path = "cli_norm_" + std::to_string(k++) + ".csv";
        REQUIRE(run_cli(f + "--out " + path) == 0);
        auto t = read_csv(path);
        for (int n = 0; n <= 2; ++n)
            for (double tc : {0.3, 0.9}) {
                auto d = slice(t, {{"n", double(n)}, {"t", tc}}, "density");
                REQUIRE(d.size() == 2401);
                CHECK(std::abs(simpson(d, h) - 1.0) < 1e-7);
            }
    }
}

TEST_CASE("node structure: base count matches the index, deformed count is "
          "time-invariant") {
    const std::string grid = "--x-count 1600 --t-count 4 --n 2 ";
    REQUIRE(run_cli("density --family base --g 1 --epsilon -2 --a 2 --c 1 " +
                    grid + "--out cli_nodes_base.csv") == 0);
    auto base = read_csv("cli_nodes_base.csv");
    auto ts = distinct_values(base, "t");
    REQUIRE(ts.size() == 4);
    for (int n = 0; n <= 2; ++n)
        for (double tc : ts)
            CHECK(count_nodes(slice(base, {{"n", double(n)}, {"t", tc}},
                                    "density")) == n);

    REQUIRE(run_cli("density --family deformed --a 2 --c 1 " + grid +
                    "--out cli_nodes_def.csv") == 0);
    auto def = read_csv("cli_nodes_def.csv");
    ts = distinct_values(def, "t");
    REQUIRE(ts.size() == 4);
    for (int n = 0; n <= 2; ++n) {
        int first =
            count_nodes(slice(def, {{"n", double(n)}, {"t", ts[0]}}, "density"));
        for (double tc : ts)
            CHECK(count_nodes(slice(def, {{"n", double(n)}, {"t", tc}},
                                    "density")) == first);
    }
}

TEST_CASE("svg output is self-describing") {
    REQUIRE(run_cli("potential --format svg --x-count 120 --t-count 24 "
                    "--cut-times 0,0.7853981633974483 "
                    "--out cli_pot.svg") == 0);
    auto svg = slurp("cli_pot.svg");
    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(svg.find("command = potential") != std::string::npos);
    CHECK(svg.find("cut-times = 0,0.7853981633974483") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    REQUIRE(run_cli("density --family base --format svg --n 1 --x-count 100 "
                    "--t-count 20 --out cli_den.svg") == 0);
    auto dsvg = slurp("cli_den.svg");
    CHECK(dsvg.rfind("<svg ", 0) == 0);
    CHECK(dsvg.find("family = base") != std::string::npos);
    CHECK(dsvg.find("</svg>") != std::string::npos);
}
