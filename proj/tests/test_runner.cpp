#include "qws/runner.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qws/stabilizer.hpp"

using namespace qws;
using nlohmann::json;

namespace {

struct CsvTable {
    i64 d = 0;
    int n = 0;
    std::vector<std::vector<i64>> coords;
    std::vector<double> values;
};

CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    EXPECT_TRUE(static_cast<bool>(std::getline(in, line))) << "missing header";
    EXPECT_EQ(std::sscanf(line.c_str(), "%ld,%d", &t.d, &t.n), 2);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        EXPECT_EQ(static_cast<int>(cells.size()), 2 * t.n + 1);
        std::vector<i64> xy;
        for (int i = 0; i < 2 * t.n; ++i) xy.push_back(std::stoll(cells[i]));
        t.coords.push_back(xy);
        t.values.push_back(std::stod(cells.back()));
    }
    return t;
}

std::string run_to_string(const RunConfig& config, const std::string& circuit_text) {
    const Circuit circuit = parse_circuit(circuit_text);
    std::ostringstream log;
    testing::internal::CaptureStdout();
    run(config, circuit, log);
    return testing::internal::GetCapturedStdout();
}

}  // namespace

TEST(Runner, StabilizerWignerCsv) {
    RunConfig config;
    config.backend = BackendKind::Stabilizer;
    const std::string csv = run_to_string(config, "qudits 1 dim 3\nF 0\nP 0\n");

    CsvTable t = parse_csv(csv);
    EXPECT_EQ(t.d, 3);
    EXPECT_EQ(t.n, 1);
    ASSERT_EQ(t.values.size(), 9u);
    int nonzero = 0;
    for (double v : t.values) {
        if (v != 0.0) {
            ++nonzero;
            EXPECT_NEAR(v, 1.0 / 3.0, 1e-12);
        }
    }
    EXPECT_EQ(nonzero, 3);
    // first row is the x_p = x_q = 0 point
    EXPECT_EQ(t.coords[0], (std::vector<i64>{0, 0}));
}

TEST(Runner, BackendsAgreeOnCsv) {
    const std::string circuit = "qudits 2 dim 3\nF 0\nC 0 1\nP 1\n";
    RunConfig stab;
    stab.backend = BackendKind::Stabilizer;
    RunConfig dense;
    dense.backend = BackendKind::Dense;
    CsvTable a = parse_csv(run_to_string(stab, circuit));
    CsvTable b = parse_csv(run_to_string(dense, circuit));
    ASSERT_EQ(a.values.size(), b.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) {
        EXPECT_EQ(a.coords[i], b.coords[i]);
        EXPECT_NEAR(a.values[i], b.values[i], 1e-10);
    }
}

TEST(Runner, StabilizerRefusesT) {
    RunConfig config;
    config.backend = BackendKind::Stabilizer;
    const Circuit circuit = parse_circuit("qudits 1 dim 3\nT 0\n");
    std::ostringstream log;
    EXPECT_THROW(run(config, circuit, log), BackendRefused);
}

TEST(Runner, VerifyCliffordCircuit) {
    RunConfig config;
    config.verify = true;
    const Circuit circuit = parse_circuit("qudits 2 dim 5\nF 0\nC 0 1\nZ 1 3\n");
    std::ostringstream log;
    RunResult r = run(config, circuit, log);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_LT(r.verify_max_diff, 1e-10);
    EXPECT_NE(log.str().find("stabilizer vs dense"), std::string::npos);
}

TEST(Runner, VerifyReflectionCircuit) {
    RunConfig config;
    config.verify = true;
    const Circuit circuit = parse_circuit("qudits 1 dim 5\nF 0\nT 0\nP 0\n");
    std::ostringstream log;
    RunResult r = run(config, circuit, log);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(log.str().find("reflection vs dense"), std::string::npos);
}

TEST(Runner, HbarReportJson) {
    RunConfig config;
    config.backend = BackendKind::Dense;
    config.report = ReportKind::Hbar;
    const json j = json::parse(run_to_string(config, "qudits 2 dim 3\nF 0\nT 0\nC 0 1\n"));
    EXPECT_EQ(j["total_terms"], 9);
    ASSERT_EQ(j["gates"].size(), 3u);
    EXPECT_EQ(j["gates"][0]["order"], 0);
    EXPECT_EQ(j["gates"][1]["order"], 1);
    EXPECT_EQ(j["gates"][1]["terms"], 9);
    EXPECT_TRUE(j["gates"][0].contains("prefactor"));
    EXPECT_TRUE(j["gates"][0].contains("prefactor_inverse"));
}

TEST(Runner, SupportReportJson) {
    RunConfig config;
    config.backend = BackendKind::Stabilizer;
    config.report = ReportKind::Support;
    const json j = json::parse(run_to_string(config, "qudits 1 dim 5\n"));
    EXPECT_EQ(j["class"], "p-only");
    EXPECT_EQ(j["qudits"][0]["q_support"], 1);
    EXPECT_TRUE(j.contains("phi"));
    EXPECT_TRUE(j.contains("r"));
    EXPECT_FALSE(j["gaussian_form"].is_null());
}

TEST(Runner, GaussianReportOnCompositeWitness) {
    RunConfig config;
    config.backend = BackendKind::Dense;
    config.report = ReportKind::Gaussian;
    const json j =
        json::parse(run_to_string(config, "qudits 1 dim 15\nF 0\nP 0\nP 0\nP 0\nF 0\nP 0\nP 0\n"));
    EXPECT_EQ(j["found"], false);
}

TEST(Runner, GaussianReportOnGround) {
    RunConfig config;
    config.backend = BackendKind::Dense;
    config.report = ReportKind::Gaussian;
    const json j = json::parse(run_to_string(config, "qudits 1 dim 7\n"));
    EXPECT_EQ(j["found"], true);
    EXPECT_EQ(j["basis"][0], "p");
}

TEST(Runner, WritesOutputFile) {
    const std::string path = ::testing::TempDir() + "qws_wigner_test.csv";
    RunConfig config;
    config.backend = BackendKind::Dense;
    config.out_path = path;
    const Circuit circuit = parse_circuit("qudits 1 dim 3\nF 0\n");
    std::ostringstream log;
    run(config, circuit, log);
    std::ifstream f(path);
    ASSERT_TRUE(f.good());
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, "3,1");
    std::remove(path.c_str());
}

TEST(Runner, CapRefusesOversizedEnumeration) {
    RunConfig config;
    config.backend = BackendKind::Dense;
    config.cap = 10;
    const Circuit circuit = parse_circuit("qudits 2 dim 5\nF 0\n");
    std::ostringstream log;
    EXPECT_THROW(run(config, circuit, log), SizeLimitExceeded);
}

TEST(Runner, NameLookups) {
    EXPECT_TRUE(backend_from_name("stabilizer").has_value());
    EXPECT_TRUE(backend_from_name("dense").has_value());
    EXPECT_TRUE(backend_from_name("reflection").has_value());
    EXPECT_FALSE(backend_from_name("tableau").has_value());
    EXPECT_TRUE(report_from_name("wigner").has_value());
    EXPECT_FALSE(report_from_name("csv").has_value());
}
