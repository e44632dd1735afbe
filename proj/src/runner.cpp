#include "qws/runner.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qws/harmonic.hpp"
#include "qws/pathint.hpp"
#include "qws/stabilizer.hpp"

namespace qws {

using nlohmann::json;

std::optional<BackendKind> backend_from_name(const std::string& name) {
    if (name == "stabilizer") return BackendKind::Stabilizer;
    if (name == "dense") return BackendKind::Dense;
    if (name == "reflection") return BackendKind::Reflection;
    return std::nullopt;
}

std::optional<ReportKind> report_from_name(const std::string& name) {
    if (name == "wigner") return ReportKind::Wigner;
    if (name == "support") return ReportKind::Support;
    if (name == "hbar") return ReportKind::Hbar;
    if (name == "gaussian") return ReportKind::Gaussian;
    return std::nullopt;
}

namespace {

struct BackendOutput {
    WignerTable wigner;
    std::optional<StabilizerState> stab;   // stabilizer backend only
    std::optional<DenseState> state;       // dense / reflection backends
    std::uint64_t term_visits = 0;         // reflection backend
};

BackendOutput run_backend(BackendKind kind, const Circuit& circuit, i64 cap) {
    BackendOutput out;
    const Dim dim = circuit.dim;
    switch (kind) {
        case BackendKind::Stabilizer: {
            if (circuit.contains_t()) {
                throw BackendRefused(
                    "the stabilizer backend handles only hbar^0 (Clifford) gates; "
                    "the T gate needs the reflection backend");
            }
            StabilizerState s = zero_state(dim);
            for (const GateSpec& g : circuit.gates) s = apply_clifford(s, catalog(g, dim));
            out.wigner = wigner_table(s, cap);
            out.stab = s;
            break;
        }
        case BackendKind::Dense: {
            if (dim.phase_points() > cap) throw SizeLimitExceeded("phase-space table exceeds --cap");
            DenseState psi = apply_circuit(circuit.gates, DenseState::zero(dim));
            out.wigner = wigner_pure(psi);
            out.state = psi;
            break;
        }
        case BackendKind::Reflection: {
            if (dim.phase_points() > cap) throw SizeLimitExceeded("phase-space table exceeds --cap");
            DenseState psi = DenseState::zero(dim);
            for (const GateSpec& g : circuit.gates) {
                const GateCatalogEntry entry = catalog(g, dim);
                if (entry.hbar_order == 0) {
                    psi = apply(build_gate(g, dim), psi);  // single classical branch
                    out.term_visits += 1;
                } else {
                    ReflectionApplyResult r = apply_reflection_sum(reflection_expansion(g, dim), psi);
                    psi = std::move(r.state);
                    out.term_visits += r.term_visits;
                }
            }
            out.wigner = wigner_pure(psi);
            out.state = psi;
            break;
        }
    }
    return out;
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json support_json(const Circuit& circuit, const BackendOutput& out) {
    const Dim dim = circuit.dim;
    DenseState psi = out.state ? *out.state : apply_circuit(circuit.gates, DenseState::zero(dim));
    const SupportClass cls = support_classification(psi);

    json j;
    j["d"] = dim.d;
    j["n"] = dim.n;
    j["class"] = support_class_name(cls.overall);
    json per = json::array();
    for (const auto& q : cls.qudits) {
        per.push_back({{"q_support", q.q_support},
                       {"p_support", q.p_support},
                       {"q_maximal", q.q_maximal},
                       {"p_maximal", q.p_maximal}});
    }
    j["qudits"] = per;
    if (out.stab) {
        json phi = json::array();
        for (int r = 0; r < out.stab->phi.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < out.stab->phi.cols(); ++c) row.push_back(out.stab->phi.at(r, c));
            phi.push_back(row);
        }
        j["phi"] = phi;
        j["r"] = out.stab->r.entries();
    }
    try {
        const GaussianForm form = mixed_representation_search(psi);
        json g;
        json basis = json::array();
        for (QuditBasis b : form.basis) basis.push_back(b == QuditBasis::Position ? "q" : "p");
        g["basis"] = basis;
        json theta = json::array();
        for (int r = 0; r < form.theta.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < form.theta.cols(); ++c) row.push_back(form.theta.at(r, c));
            theta.push_back(row);
        }
        g["theta"] = theta;
        g["eta"] = form.eta.entries();
        j["gaussian_form"] = g;
    } catch (const NoGaussianForm&) {
        j["gaussian_form"] = nullptr;
    }
    return j;
}

json hbar_json(const Circuit& circuit) {
    const PathCountReport report = hbar_report(circuit.gates, circuit.dim);
    json gates = json::array();
    for (const auto& entry : report.gates) {
        json g;
        g["kind"] = gate_kind_name(entry.gate.kind);
        g["targets"] = entry.gate.targets;
        g["order"] = entry.hbar_order;
        g["terms"] = entry.terms;
        const GateCatalogEntry cat = catalog(entry.gate, circuit.dim);
        const double prefactor = propagator_prefactor(cat.map.M, circuit.dim);
        g["prefactor"] = prefactor;                  // |2^d det(1+M)|^{+1/2}
        g["prefactor_inverse"] = 1.0 / prefactor;    // the -1/2 variant
        gates.push_back(g);
    }
    return json{{"gates", gates}, {"total_terms", report.total_terms}};
}

json gaussian_json(const Circuit& circuit, const BackendOutput& out) {
    DenseState psi = out.state ? *out.state : apply_circuit(circuit.gates, DenseState::zero(circuit.dim));
    json j;
    try {
        const GaussianForm form = mixed_representation_search(psi);
        j["found"] = true;
        json basis = json::array();
        for (QuditBasis b : form.basis) basis.push_back(b == QuditBasis::Position ? "q" : "p");
        j["basis"] = basis;
        json theta = json::array();
        for (int r = 0; r < form.theta.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < form.theta.cols(); ++c) row.push_back(form.theta.at(r, c));
            theta.push_back(row);
        }
        j["theta"] = theta;
        j["eta"] = form.eta.entries();
    } catch (const NoGaussianForm& e) {
        j["found"] = false;
        j["reason"] = e.what();
    }
    return j;
}

void emit(const std::string& out_path, const std::string& content, std::ostream& log) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot open output file: " + out_path);
    f << content;
    log << "wrote " << out_path << "\n";
}

}  // namespace

std::string wigner_csv(const WignerTable& tbl) {
    std::ostringstream out;
    out << tbl.dim.d << "," << tbl.dim.n << "\n";
    for (i64 flat = 0; flat < tbl.size(); ++flat) {
        const ZdVector x = flat_to_phase_point(flat, tbl.dim);
        for (int i = 0; i < x.size(); ++i) out << x[i] << ",";
        out << format_g12(tbl.v[flat]) << "\n";
    }
    return out.str();
}

RunResult run(const RunConfig& config, const Circuit& circuit, std::ostream& log) {
    RunResult result;
    if (config.verify) {
        const BackendKind check = circuit.contains_t() ? BackendKind::Reflection : BackendKind::Stabilizer;
        const BackendOutput a = run_backend(check, circuit, config.cap);
        const BackendOutput b = run_backend(BackendKind::Dense, circuit, config.cap);
        double worst = 0.0;
        for (i64 i = 0; i < a.wigner.size(); ++i) {
            worst = std::max(worst, std::abs(a.wigner.v[i] - b.wigner.v[i]));
        }
        result.verify_max_diff = worst;
        const bool ok = worst <= config.tol;
        log << "verify: " << (check == BackendKind::Stabilizer ? "stabilizer" : "reflection")
            << " vs dense, max |dW| = " << format_g12(worst) << (ok ? "  OK" : "  MISMATCH") << "\n";
        result.exit_code = ok ? 0 : 1;
        return result;
    }

    const BackendOutput out = run_backend(config.backend, circuit, config.cap);
    switch (config.report) {
        case ReportKind::Wigner:
            emit(config.out_path, wigner_csv(out.wigner), log);
            break;
        case ReportKind::Support:
            emit(config.out_path, support_json(circuit, out).dump(2) + "\n", log);
            break;
        case ReportKind::Hbar:
            emit(config.out_path, hbar_json(circuit).dump(2) + "\n", log);
            break;
        case ReportKind::Gaussian:
            emit(config.out_path, gaussian_json(circuit, out).dump(2) + "\n", log);
            break;
    }
    return result;
}

}  // namespace qws
