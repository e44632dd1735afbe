#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qws/circuit.hpp"
#include "qws/runner.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw qws::Error("cannot open circuit file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qws: odd-dimension qudit circuits in discrete phase space"};

    std::string circuit_path;
    std::string backend_name = "dense";
    std::string report_name = "wigner";
    qws::RunConfig config;

    app.add_option("circuit", circuit_path, "circuit file ('-' for stdin)")->required();
    app.add_option("--backend", backend_name, "stabilizer | dense | reflection")
        ->check(CLI::IsMember({"stabilizer", "dense", "reflection"}));
    app.add_option("--report", report_name, "wigner | support | hbar | gaussian")
        ->check(CLI::IsMember({"wigner", "support", "hbar", "gaussian"}));
    app.add_option("--out", config.out_path, "output file (default: stdout)");
    app.add_flag("--verify", config.verify, "run two backends and compare Wigner tables");
    app.add_option("--cap", config.cap, "enumeration cap on d^(2n)");
    app.add_option("--tol", config.tol, "verify tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        config.backend = *qws::backend_from_name(backend_name);
        config.report = *qws::report_from_name(report_name);
        const qws::Circuit circuit = qws::parse_circuit(read_input(circuit_path));
        return qws::run(config, circuit, std::cerr).exit_code;
    } catch (const qws::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
