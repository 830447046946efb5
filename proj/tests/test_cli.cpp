#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("ECSMET_CLI");
    REQUIRE_MESSAGE(env != nullptr, "ECSMET_CLI must point at the binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string first_lines(const std::string& s, int k) {
    size_t pos = 0;
    for (int i = 0; i < k && pos != std::string::npos; ++i)
        pos = s.find('\n', pos + 1);
    return s.substr(0, pos);
}

} // namespace

TEST_CASE("help exits cleanly") {
    CHECK(run("--help").code == 0);
    CHECK(run("qfi --help").code == 0);
}

TEST_CASE("csv output carries the expected header and values") {
    const RunResult r = run("qfi --alpha 1 --beta 0 --rate 0.2");
    REQUIRE(r.code == 0);
    CHECK(first_lines(r.out, 2) ==
          "alpha,beta,rate,model,sign,qfi,variance_term,coherence_penalty\n"
          "1,0,0.2,both,plus,1.62211082345,1.73487648454,0.112765661087");
}

TEST_CASE("json output parses and echoes the configuration") {
    const RunResult r =
        run("qfi --alpha 1 --beta 0 --rate 0.2 --format json");
    REQUIRE(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("meta").at("version").is_string());
    CHECK(doc.at("meta").at("config").at("command") == "qfi");
    REQUIRE(doc.at("rows").size() == 1);
    CHECK(doc.at("rows")[0].at("qfi").get<double>() ==
          doctest::Approx(1.62211082345064).epsilon(1e-10));
}

TEST_CASE("oracle columns report small residuals") {
    const RunResult r =
        run("negativity --alpha 1 --beta 0 --rate 0.3 --oracle --format json");
    REQUIRE(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(std::abs(doc.at("rows")[0].at("residual").get<double>()) < 1e-9);
}

TEST_CASE("flags mark the snapped optimum") {
    const RunResult r = run("eco --alpha 0.3 --rate 0");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("tie") != std::string::npos);
    CHECK(r.out.find("-0.3") != std::string::npos);
}

TEST_CASE("exit codes distinguish configuration and numeric failures") {
    CHECK(run("nosuchcommand").code == 2);
    CHECK(run("qfi --alpha 1 --beta 1 --sign minus").code == 2);
    CHECK(run("eco --alpha 1 --rate 2").code == 2);
    CHECK(run("fig 99").code == 2);
    // cutoff too small for the requested amplitude
    CHECK(run("qfi --alpha 3 --beta 0 --oracle --truncation 8").code == 3);
}

TEST_CASE("grid validation") {
    CHECK(run("qfi --alpha 1 0.5 --beta 0").code == 2); // unsorted
    CHECK(run("cfi --alpha 1 --phi 0.5 0.1").code == 2);
}

TEST_CASE("configuration file mirrors command-line flags") {
    const std::string cfg = "test_cli_config.ini";
    {
        std::ofstream f(cfg);
        f << "[eco]\nalpha=0.6\nrate=0.1\n";
    }
    const RunResult a = run("--config " + cfg + " eco");
    const RunResult b = run("eco --alpha 0.6 --rate 0.1");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    std::remove(cfg.c_str());
}

TEST_CASE("file output is independent of the destination path") {
    const RunResult a =
        run("doe --alpha 1 --beta 0 0.5 --output test_cli_a.csv");
    const RunResult b =
        run("doe --alpha 1 --beta 0 0.5 --output test_cli_b.csv");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    const std::string fa = slurp("test_cli_a.csv");
    CHECK_FALSE(fa.empty());
    CHECK(fa == slurp("test_cli_b.csv"));
    std::remove("test_cli_a.csv");
    std::remove("test_cli_b.csv");
}

TEST_CASE("figure datasets are reproducible") {
    const RunResult a = run("fig 2");
    const RunResult b = run("fig 2");
    REQUIRE(a.code == 0);
    CHECK_FALSE(a.out.empty());
    CHECK(a.out == b.out);
    CHECK(first_lines(a.out, 1) == "distance,doe");
}

TEST_CASE("sld check emits the residual columns") {
    const RunResult r =
        run("sld-check --alpha 1 --beta 0.3 --rate 0.2 --format json");
    REQUIRE(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    const auto& row = doc.at("rows")[0];
    CHECK(row.at("lyapunov_residual").get<double>() < 1e-8);
    CHECK(row.at("zero_mean_residual").get<double>() < 1e-8);
    CHECK(std::abs(row.at("qfi_residual").get<double>()) < 1e-6);
    CHECK(row.at("anomaly_a_zero").get<bool>() == false);
}
