#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "prbh/channel.hpp"
#include "prbh/density.hpp"
#include "prbh/states.hpp"
#include "prbh/summation.hpp"

namespace fs = std::filesystem;
using prbh::cli::RunConfig;

namespace {

fs::path test_dir() {
    const fs::path dir = fs::temp_directory_path() / "prbh_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::istringstream cellstream(line);
        std::string cell;
        while (std::getline(cellstream, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

TEST_CASE("pn command writes the distribution with a tail row") {
    RunConfig cfg;
    cfg.z = 0.5;
    cfg.tail_tol = 1e-9;
    cfg.output = (test_dir() / "pn.csv").string();
    std::ostringstream out;
    CHECK(prbh::cli::cmd_pn(cfg, out) == 0);

    const auto rows = parse_csv(slurp(cfg.output));
    REQUIRE(rows.size() >= 3);
    CHECK(rows[0] == std::vector<std::string>{"N", "p_N"});
    CHECK(rows.back()[0] == "tail");
    prbh::KahanAccumulator sum;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        sum.add(std::stod(rows[i][1]));
    }
    CHECK(std::abs(sum.value() - 1.0) <= 1e-12);
}

TEST_CASE("pn at z = 0 emits the single-row point mass") {
    RunConfig cfg;
    cfg.z = 0.0;
    cfg.output = (test_dir() / "pn0.csv").string();
    std::ostringstream out;
    CHECK(prbh::cli::cmd_pn(cfg, out) == 0);
    const auto rows = parse_csv(slurp(cfg.output));
    REQUIRE(rows.size() == 3);  // header + N=1 + tail
    CHECK(rows[1][0] == "1");
    CHECK(std::stod(rows[1][1]) == 1.0);
    CHECK(std::stod(rows[2][1]) == 0.0);
}

TEST_CASE("pn rejects out-of-range z through MassIndicator") {
    RunConfig cfg;
    cfg.z = 1.5;
    std::ostringstream out;
    CHECK_THROWS_AS(prbh::cli::cmd_pn(cfg, out), std::invalid_argument);
}

TEST_CASE("capacity json schema") {
    RunConfig cfg;
    cfg.z = 0.5;
    cfg.format = "json";
    cfg.output = (test_dir() / "capacity.json").string();
    std::ostringstream out;
    CHECK(prbh::cli::cmd_capacity(cfg, out) == 0);
    const auto doc = nlohmann::json::parse(slurp(cfg.output));
    CHECK(doc.contains("z"));
    CHECK(doc.contains("value"));
    CHECK(doc.contains("n_terms"));
    CHECK(doc.contains("tail_bound"));
    CHECK(doc["value"].get<double>() ==
          prbh::quantum_capacity(prbh::MassIndicator(0.5), cfg.tail_tol));
}

TEST_CASE("capacity at z = 0 reports 1") {
    RunConfig cfg;
    cfg.z = 0.0;
    cfg.output = (test_dir() / "capacity0.csv").string();
    std::ostringstream out;
    CHECK(prbh::cli::cmd_capacity(cfg, out) == 0);
    const auto rows = parse_csv(slurp(cfg.output));
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][1]) == 1.0);
}

TEST_CASE("evolve emits per-block eigenvalue rows plus tail") {
    RunConfig cfg;
    cfg.z = 0.5;
    cfg.nx = 0.6;
    cfg.ny = 0.0;
    cfg.nz = 0.8;
    cfg.output = (test_dir() / "evolve.csv").string();
    std::ostringstream out;
    CHECK(prbh::cli::cmd_evolve(cfg, out) == 0);

    const auto state = prbh::channel_apply(prbh::BlochVector::unit(0.6, 0.0, 0.8),
                                           prbh::MassIndicator(0.5), cfg.tail_tol);
    std::size_t eig_rows = 0;
    for (const auto& b : state.blocks) {
        eig_rows += static_cast<std::size_t>(b.block.rows());
    }
    const auto rows = parse_csv(slurp(cfg.output));
    CHECK(rows.size() == 1 + eig_rows + 1);  // header + eigenvalues + tail
    CHECK(rows.back()[0] == "tail");
}

TEST_CASE("evolve json weights add up with the tail") {
    RunConfig cfg;
    cfg.z = 0.5;
    cfg.mixed = true;
    cfg.format = "json";
    cfg.output = (test_dir() / "evolve.json").string();
    std::ostringstream out;
    CHECK(prbh::cli::cmd_evolve(cfg, out) == 0);
    const auto doc = nlohmann::json::parse(slurp(cfg.output));
    prbh::KahanAccumulator sum;
    for (const auto& b : doc["blocks"]) {
        sum.add(b["weight"].get<double>());
    }
    sum.add(doc["tail_mass"].get<double>());
    CHECK(std::abs(sum.value() - 1.0) <= 1e-10);
}

TEST_CASE("density command reports the mode and writes the grid") {
    RunConfig cfg;
    cfg.n = 3;
    cfg.steps = 200;
    cfg.gnuplot = true;
    cfg.output = (test_dir() / "density.csv").string();
    std::ostringstream out;
    CHECK(prbh::cli::cmd_density(cfg, out) == 0);
    const auto rows = parse_csv(slurp(cfg.output));
    CHECK(rows.size() == 1 + 200);
    CHECK(out.str().find("mode_z=0.2") != std::string::npos);
    CHECK(fs::exists(test_dir() / "density.gp"));

    // the exported curve re-parses to the in-memory curve bit-exactly
    const auto curve = prbh::density_curve(3, 200);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::stod(rows[i][0]) == curve.z[i - 1]);
        CHECK(std::stod(rows[i][1]) == curve.f[i - 1]);
    }
}

TEST_CASE("sample output is deterministic per flag set") {
    RunConfig cfg;
    cfg.trials = 2000;
    cfg.seed = 42;
    cfg.gamma_shape = 4;
    cfg.output = (test_dir() / "sample_a.csv").string();
    std::ostringstream out_a;
    CHECK(prbh::cli::cmd_sample(cfg, out_a) == 0);
    const std::string first = slurp(cfg.output);

    cfg.output = (test_dir() / "sample_b.csv").string();
    std::ostringstream out_b;
    CHECK(prbh::cli::cmd_sample(cfg, out_b) == 0);
    CHECK(slurp(cfg.output) == first);

    const auto rows = parse_csv(first);
    REQUIRE(rows.size() == 6);  // header + 5 batches
    CHECK(rows[1][0] == "magnitude");
    CHECK(rows[5][0] == "gamma_sum");
}

TEST_CASE("sample parallel split stays deterministic") {
    RunConfig cfg;
    cfg.trials = 4000;
    cfg.parallel = 4;
    cfg.output = (test_dir() / "sample_par_a.csv").string();
    std::ostringstream out;
    CHECK(prbh::cli::cmd_sample(cfg, out) == 0);
    const std::string first = slurp(cfg.output);
    cfg.output = (test_dir() / "sample_par_b.csv").string();
    CHECK(prbh::cli::cmd_sample(cfg, out) == 0);
    CHECK(slurp(cfg.output) == first);
}
