// End-to-end checks of the obfcap executable: flag validation, exit codes,
// CSV shape, and reproducibility.  Run as: cli_tests <path-to-obfcap>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace {

int failures = 0;

#define REQUIRE(cond, msg)                                                       \
    do {                                                                         \
        if (!(cond)) {                                                           \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg  \
                      << "\n";                                                   \
            ++failures;                                                          \
        }                                                                        \
    } while (0)

std::string g_bin;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run(const std::string& args, const std::string& out_file = "cli_tmp_out.txt") {
    std::string cmd = g_bin + " " + args + " > " + out_file + " 2> cli_tmp_err.txt";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out_file, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    r.output = ss.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// splits CSV text into metadata map-ish lines, header columns, and data rows
struct Parsed {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

Parsed parse_csv(const std::string& text) {
    Parsed p;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.rfind("# ", 0) == 0) {
            auto eq = line.find('=');
            REQUIRE(eq != std::string::npos, "metadata line without '=': " << line);
            if (eq != std::string::npos)
                p.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (!header_seen) {
            p.columns = cells;
            header_seen = true;
        } else {
            std::vector<double> row;
            for (const auto& c : cells)
                row.push_back(std::stod(c));
            p.rows.push_back(std::move(row));
        }
    }
    return p;
}

std::string meta(const Parsed& p, const std::string& key) {
    for (const auto& [k, v] : p.metadata)
        if (k == key)
            return v;
    return "";
}

void test_usage_errors() {
    REQUIRE(run("--help").exit_code == 0, "--help should exit 0");
    REQUIRE(run("").exit_code == 2, "missing subcommand should exit 2");
    REQUIRE(run("frobnicate").exit_code == 2, "unknown subcommand should exit 2");
    REQUIRE(run("outage --no-such-flag 1 --rate 1").exit_code == 2, "unknown flag should exit 2");
    REQUIRE(run("outage").exit_code == 2, "outage without a rate should exit 2");
    REQUIRE(run("outage --rate 1 --rate-grid lin:0:1:3").exit_code == 2,
            "both rate forms should exit 2");
    REQUIRE(run("outage --rate -1").exit_code == 2, "negative rate should exit 2");
    REQUIRE(run("outage --rate 1 --model nearest").exit_code == 2, "bad model should exit 2");
    REQUIRE(run("outage --rate 1 --alpha 2").exit_code == 2, "alpha <= 2 should exit 2");
    REQUIRE(run("outage --rate 1 --radius -3").exit_code == 2, "negative radius should exit 2");
    REQUIRE(run("capacity --model guard:0.5 --radius inf").exit_code == 2,
            "guard law has no large-system limit");
    REQUIRE(run("capacity --sweep lambda").exit_code == 2, "--sweep without --grid should exit 2");
    REQUIRE(run("capacity --sweep rate --grid lin:0:1:3").exit_code == 2,
            "rate is not sweepable in capacity");
    REQUIRE(run("simulate --trials 10").exit_code == 2, "tiny trial counts should exit 2");
    REQUIRE(run("simulate --radius inf --trials 2000").exit_code == 2,
            "simulate needs a finite cell");
}

void test_outage_csv_shape() {
    auto r = run("outage --rate-grid log:0.1:10:5 --model unbounded --model bounded "
                 "--lambda 1 --lambda 10 --radius 2");
    REQUIRE(r.exit_code == 0, "outage run failed");
    auto p = parse_csv(r.output);
    REQUIRE(p.columns.size() == 5, "expected rate + 4 outage columns, got " << p.columns.size());
    REQUIRE(p.columns[0] == "rate", "first column must be the rate");
    REQUIRE(p.columns[1] == "F_unbounded_l1", "column naming");
    REQUIRE(p.columns[4] == "F_bounded_l10", "column naming");
    REQUIRE(p.rows.size() == 5, "expected 5 grid rows, got " << p.rows.size());
    REQUIRE(p.rows.front()[0] == 0.1, "grid endpoints must be exact");
    REQUIRE(p.rows.back()[0] == 10.0, "grid endpoints must be exact");
    for (const auto& row : p.rows) {
        for (std::size_t c = 1; c < row.size(); ++c)
            REQUIRE(row[c] >= 0.0 && row[c] <= 1.0, "outage probability out of range");
        // bounded law dominates at matched lambda
        REQUIRE(row[3] >= row[1] - 1e-15, "bounded must dominate unbounded (lambda 1)");
        REQUIRE(row[4] >= row[2] - 1e-15, "bounded must dominate unbounded (lambda 10)");
    }
    REQUIRE(meta(p, "method.F_unbounded_l1") == "closed-form-unbounded", "method metadata");
    REQUIRE(meta(p, "method.F_bounded_l10") == "closed-form-bounded", "method metadata");
}

void test_outage_zero_rate() {
    auto r = run("outage --rate 0 --lambda 1 --radius 1");
    REQUIRE(r.exit_code == 0, "zero-rate outage run failed");
    auto p = parse_csv(r.output);
    REQUIRE(p.rows.size() == 1, "single rate means single row");
    double expected = std::exp(-std::numbers::pi);
    REQUIRE(std::abs(p.rows[0][1] - expected) < 1e-14,
            "rate 0 outage must equal the empty-cell probability");
}

void test_capacity_point() {
    auto r = run("capacity --model unbounded --lambda 10 --radius inf --beams 2 "
                 "--alpha 4 --epsilon 0.1");
    REQUIRE(r.exit_code == 0, "capacity run failed");
    auto p = parse_csv(r.output);
    REQUIRE(p.rows.size() == 1, "point evaluation emits one row");
    std::size_t cap_col = 99;
    for (std::size_t i = 0; i < p.columns.size(); ++i)
        if (p.columns[i] == "capacity_nats")
            cap_col = i;
    REQUIRE(cap_col != 99, "capacity_nats column missing");
    double cap = p.rows[0][cap_col];
    REQUIRE(std::abs(cap - 1.7269356238281497) < 1e-10, "two-beam reference capacity, got " << cap);

    // bits display divides by log 2 and renames the column
    auto rb = run("capacity --model unbounded --lambda 10 --radius inf --beams 2 "
                  "--alpha 4 --epsilon 0.1 --bits");
    auto pb = parse_csv(rb.output);
    std::size_t bits_col = 99;
    for (std::size_t i = 0; i < pb.columns.size(); ++i)
        if (pb.columns[i] == "capacity_bits")
            bits_col = i;
    REQUIRE(bits_col != 99, "capacity_bits column missing under --bits");
    REQUIRE(std::abs(pb.rows[0][bits_col] - cap / std::numbers::ln2) < 1e-12,
            "bits conversion mismatch");
}

void test_capacity_sweep() {
    auto r = run("capacity --model bounded --radius inf --beams 2 --alpha 4 "
                 "--sweep epsilon --grid 0.01,0.1,0.5");
    REQUIRE(r.exit_code == 0, "epsilon sweep failed");
    auto p = parse_csv(r.output);
    REQUIRE(p.rows.size() == 3, "sweep emits one row per grid point");
    std::size_t cap_col = 99, eps_col = 99;
    for (std::size_t i = 0; i < p.columns.size(); ++i) {
        if (p.columns[i] == "capacity_nats") cap_col = i;
        if (p.columns[i] == "epsilon") eps_col = i;
    }
    REQUIRE(cap_col != 99 && eps_col != 99, "sweep columns missing");
    REQUIRE(p.rows[0][eps_col] == 0.01 && p.rows[2][eps_col] == 0.5, "swept epsilon values");
    REQUIRE(p.rows[0][cap_col] < p.rows[1][cap_col], "capacity must grow with epsilon");
    REQUIRE(p.rows[1][cap_col] < p.rows[2][cap_col], "capacity must grow with epsilon");

    // lambda sweeps over an infinite cell also carry the doubling diagnostic
    auto rl = run("capacity --model unbounded --radius inf --beams 1 --alpha 4 "
                  "--epsilon 0.1 --sweep lambda --grid log:100:10000:3");
    auto pl = parse_csv(rl.output);
    bool has_doubling = false;
    std::size_t stat_col = 99, target_col = 99;
    for (std::size_t i = 0; i < pl.columns.size(); ++i) {
        if (pl.columns[i] == "doubling_statistic") { has_doubling = true; stat_col = i; }
        if (pl.columns[i] == "doubling_target") target_col = i;
    }
    REQUIRE(has_doubling, "lambda sweep must include doubling columns");
    if (has_doubling) {
        double stat = pl.rows.back()[stat_col];
        double target = pl.rows.back()[target_col];
        REQUIRE(std::abs(stat - target) / target < 0.05,
                "single-beam doubling statistic should be near its target");
    }
}

void test_simulate_determinism() {
    const std::string base = "simulate --model unbounded --lambda 1 --radius 1 --beams 2 "
                             "--alpha 4 --trials 2000 --seed 5 --cdf-points 32";
    auto r1 = run(base + " --threads 1", "cli_tmp_s1.txt");
    auto r2 = run(base + " --threads 1", "cli_tmp_s2.txt");
    auto r3 = run(base + " --threads 3", "cli_tmp_s3.txt");
    REQUIRE(r1.exit_code == 0, "simulate should pass its own goodness-of-fit gate");
    REQUIRE(r1.output == r2.output, "same seed must give identical bytes");
    REQUIRE(r1.output == r3.output, "worker count must not change the bytes");

    auto p = parse_csv(r1.output);
    REQUIRE(p.rows.size() == 32, "cdf-points rows expected");
    double ks = std::stod(meta(p, "ks_distance"));
    double band = std::stod(meta(p, "ks_band_99"));
    REQUIRE(ks <= band, "exit 0 implies ks within the band");
    REQUIRE(meta(p, "seed") == "5", "seed must be recorded");
    REQUIRE(meta(p, "command").find("--threads") == std::string::npos,
            "thread count is volatile and must stay out of the metadata");

    // a different seed must change the sample bytes
    auto r4 = run("simulate --model unbounded --lambda 1 --radius 1 --beams 2 --alpha 4 "
                  "--trials 2000 --seed 6 --cdf-points 32",
                  "cli_tmp_s4.txt");
    REQUIRE(r1.output != r4.output, "different seed must change the output");
}

void test_command_reproduction() {
    const std::string args = "outage --rate-grid lin:0.5:2:4 --model shifted --lambda 2 "
                             "--radius 1.5 --alpha 3";
    auto first = run(args, "cli_tmp_c1.txt");
    REQUIRE(first.exit_code == 0, "outage run failed");
    auto p = parse_csv(first.output);
    std::string cmd = meta(p, "command");
    REQUIRE(!cmd.empty(), "command metadata missing");
    REQUIRE(cmd.rfind("obfcap ", 0) == 0, "command must start with the tool name");
    // re-running the recorded command reproduces the bytes exactly
    auto again = run(cmd.substr(std::string("obfcap ").size()), "cli_tmp_c2.txt");
    REQUIRE(first.output == again.output, "recorded command must reproduce the report");
}

void test_dump_samples() {
    std::remove("cli_tmp_dump.txt");
    auto r = run("simulate --lambda 1 --radius 1 --trials 1000 --seed 9 "
                 "--dump-samples cli_tmp_dump.txt");
    REQUIRE(r.exit_code == 0, "simulate with dump failed");
    std::string dump = slurp("cli_tmp_dump.txt");
    std::size_t lines = 0;
    for (char ch : dump)
        if (ch == '\n')
            ++lines;
    REQUIRE(lines == 1000, "one raw rate per trial, got " << lines);
}

void test_validate() {
    auto quick = run("validate --quick");
    REQUIRE(quick.exit_code == 0, "quick validation must pass");
    REQUIRE(quick.output.find("[PASS]") != std::string::npos, "expected pass lines");
    REQUIRE(quick.output.find("[FAIL]") == std::string::npos, "unexpected failures");

    auto js = run("validate --quick --json");
    REQUIRE(js.exit_code == 0, "quick json validation must pass");
    REQUIRE(js.output.find("\"failed\": 0") != std::string::npos, "json failure count");
    REQUIRE(js.output.find("\"mode\": \"quick\"") != std::string::npos, "json mode marker");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-obfcap>\n";
        return 2;
    }
    g_bin = argv[1];

    test_usage_errors();
    test_outage_csv_shape();
    test_outage_zero_rate();
    test_capacity_point();
    test_capacity_sweep();
    test_simulate_determinism();
    test_command_reproduction();
    test_dump_samples();
    test_validate();

    for (const char* f :
         {"cli_tmp_out.txt", "cli_tmp_err.txt", "cli_tmp_s1.txt", "cli_tmp_s2.txt",
          "cli_tmp_s3.txt", "cli_tmp_s4.txt", "cli_tmp_c1.txt", "cli_tmp_c2.txt",
          "cli_tmp_dump.txt"})
        std::remove(f);

    if (failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cerr << failures << " cli check(s) failed\n";
    return 1;
}
