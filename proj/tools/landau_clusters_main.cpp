#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lc/clusters.hpp"
#include "lc/landau.hpp"
#include "lc/parallel.hpp"
#include "lc/potential.hpp"
#include "lc/radon.hpp"
#include "lc/specfun.hpp"
#include "lc/symbols.hpp"
#include "lc/table.hpp"

using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

lc::Potential parse_potential(const json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw ConfigError("potential: object with a 'family' field required");
    const std::string family = j.at("family").get<std::string>();
    const double rho = j.value("rho", 4.0);
    if (family == "zero") return lc::Potential::zero();
    if (family == "gaussian") {
        lc::Vec2 center{};
        if (j.contains("center")) {
            center.x = j.at("center").at(0).get<double>();
            center.y = j.at("center").at(1).get<double>();
        }
        return lc::Potential::gaussian(j.value("amplitude", 1.0), j.value("width", 1.0), center,
                                       rho);
    }
    if (family == "powerDecay") return lc::Potential::power_decay(rho);
    if (family == "radialTable")
        return lc::Potential::radial_table(j.at("r").get<std::vector<double>>(),
                                           j.at("v").get<std::vector<double>>(), rho);
    if (family == "angularFourierRadial") {
        std::vector<lc::Potential::Harmonic> hs;
        for (const auto& h : j.at("harmonics"))
            hs.push_back({h.value("k", 0), h.value("amplitude", 1.0), h.value("width", 1.0),
                          h.value("phase", 0.0)});
        return lc::Potential::angular_fourier(hs, rho);
    }
    if (family == "gridSampled")
        return lc::Potential::grid_sampled(j.at("n").get<int>(), j.at("halfWidth").get<double>(),
                                           j.at("values").get<std::vector<double>>(), rho);
    throw ConfigError("potential: unknown family '" + family + "'");
}

lc::landau::ConvergeOptions parse_convergence(const json& cfg) {
    lc::landau::ConvergeOptions opts;
    if (cfg.contains("convergence")) {
        const json& c = cfg.at("convergence");
        opts.tol = c.value("tol", opts.tol);
        opts.maxDoublings = c.value("maxDoublings", opts.maxDoublings);
        opts.initialMargin = c.value("initialMargin", opts.initialMargin);
    }
    return opts;
}

std::vector<lc::radon::TestFunction> parse_bumps(const json& cfg) {
    std::vector<lc::radon::TestFunction> bumps;
    if (!cfg.contains("bumps")) throw ConfigError("missing 'bumps'");
    for (const auto& b : cfg.at("bumps")) {
        try {
            bumps.emplace_back(b.at("center").get<double>(), b.at("halfWidth").get<double>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("bumps: ") + e.what());
        }
    }
    return bumps;
}

void check_threshold(const lc::Potential& V, double ell) {
    if (V.is_zero()) return;
    const double threshold = 1.0 / (V.rho() - 1.0);
    if (ell <= threshold) {
        std::ostringstream msg;
        msg << "integrability threshold violated: ell = " << ell
            << " must exceed 1/(rho-1) = " << threshold << " (rho = " << V.rho() << ")";
        throw ConfigError(msg.str());
    }
}

struct MeasureParams {
    int omegaCount = 64;
    int bCount = 4096;
    double bMax = 8.0;
    double tailFloor = 1e-8;
};

MeasureParams parse_measure(const json& cfg) {
    MeasureParams mp;
    if (cfg.contains("measure")) {
        const json& m = cfg.at("measure");
        mp.omegaCount = m.value("omegaCount", mp.omegaCount);
        mp.bCount = m.value("bCount", mp.bCount);
        mp.bMax = m.value("bMax", mp.bMax);
        mp.tailFloor = m.value("tailFloor", mp.tailFloor);
    }
    return mp;
}

lc::Table run_radon(const json& cfg, const lc::Potential& V) {
    const int omegaCount = cfg.value("omegaCount", 32);
    const int bCount = cfg.value("bCount", 201);
    const double bMax = cfg.value("bMax", 8.0);
    lc::radon::Profile p = lc::radon::make_profile(V, omegaCount, bCount, bMax);
    lc::Table t;
    t.columns = {"omega", "b", "value"};
    for (int i = 0; i < p.omegaCount(); ++i)
        for (int j = 0; j < p.bCount(); ++j) t.add_row({p.omega[i], p.b[j], p.value(i, j)});
    t.meta["decay_constant"] = lc::format_double(lc::radon::decay_check(p, V));
    return t;
}

lc::Table run_spectrum(const json& cfg, const lc::Potential& V) {
    const double B = cfg.value("B", 1.0);
    const int q = cfg.value("q", 0);
    auto opts = parse_convergence(cfg);
    lc::landau::LandauSpec spec{B, q};
    lc::landau::Converged c = lc::landau::assemble_converged(spec, V, opts);
    if (cfg.contains("matrixDump"))
        lc::landau::save_matrix(c.matrix, cfg.at("matrixDump").get<std::string>());
    lc::Table t;
    t.columns = {"index", "eigenvalue", "scaledShift"};
    const double scale = std::sqrt(spec.lambda());
    for (std::size_t i = 0; i < c.eigs.size(); ++i)
        t.add_row({static_cast<double>(i), c.eigs[i], scale * c.eigs[i]});
    t.meta["converged"] = c.cutoffConverged ? "true" : "false";
    t.meta["trace"] = lc::format_double(c.matrix.trace());
    t.meta["mMax"] = std::to_string(c.matrix.range.mMax);
    return t;
}

lc::Table report_to_table(const lc::clusters::ConvergenceReport& report) {
    lc::Table t;
    t.columns = {"q", "lambda", "functionalIndex", "lhs", "rhs", "residual", "flagged"};
    const auto labels = report.labels();
    auto indexOf = [&](const std::string& l) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return static_cast<double>(i);
        return -1.0;
    };
    for (const auto& r : report.rows)
        t.add_row({static_cast<double>(r.q), r.lambda, indexOf(r.label), r.lhs, r.rhs,
                   r.residual, r.flagged ? 1.0 : 0.0});
    for (std::size_t i = 0; i < labels.size(); ++i) {
        t.meta["functional_" + std::to_string(i)] = labels[i];
        t.meta["slope_" + std::to_string(i)] = lc::format_double(report.slope(labels[i]));
    }
    for (const auto& [k, v] : report.meta) t.meta[k] = v;
    return t;
}

lc::Table run_moments(const json& cfg, const lc::Potential& V) {
    const double B = cfg.value("B", 1.0);
    if (!cfg.contains("qList") || !cfg.contains("ellList"))
        throw ConfigError("moments: qList and ellList required");
    const auto qList = cfg.at("qList").get<std::vector<int>>();
    const auto ellList = cfg.at("ellList").get<std::vector<int>>();
    for (int ell : ellList) check_threshold(V, ell);
    return report_to_table(
        lc::clusters::moment_convergence(V, B, qList, ellList, parse_convergence(cfg)));
}

lc::Table run_distribution(const json& cfg, const lc::Potential& V) {
    const double B = cfg.value("B", 1.0);
    if (!cfg.contains("qList")) throw ConfigError("distribution: qList required");
    const auto qList = cfg.at("qList").get<std::vector<int>>();
    const auto bumps = parse_bumps(cfg);
    const MeasureParams mp = parse_measure(cfg);
    lc::radon::LimitMeasure mu =
        lc::radon::limit_measure(V, B, mp.omegaCount, mp.bCount, mp.bMax, mp.tailFloor);
    return report_to_table(
        lc::clusters::distribution_convergence(V, B, qList, bumps, mu, parse_convergence(cfg)));
}

lc::Table run_symbols(const json& cfg, const lc::Potential& V) {
    const double B = cfg.value("B", 1.0);
    const std::string mode = cfg.value("mode", "gaps");
    lc::Table t;
    if (mode == "gaps") {
        if (!cfg.contains("qList")) throw ConfigError("symbols/gaps: qList required");
        t.columns = {"q", "l1FourierGap", "l2Gap", "scaledOp", "scaledHS"};
        for (int q : cfg.at("qList").get<std::vector<int>>()) {
            lc::symbols::GridParams gp{};
            if (cfg.contains("grid")) {
                gp.halfWidth = cfg.at("grid").value("halfWidth", 0.0);
                gp.size = cfg.at("grid").value("size", 0);
            }
            auto g = lc::symbols::symbol_gap_norms(V, B, q, gp);
            t.add_row({static_cast<double>(q), g.l1FourierGap, g.l2Gap, g.scaledOp, g.scaledHS});
        }
    } else if (mode == "deltasup") {
        const double rho = cfg.value("rho", 2.0);
        if (!cfg.contains("kList")) throw ConfigError("symbols/deltasup: kList required");
        t.columns = {"k", "scaledSup", "argmaxRadius"};
        for (const auto& row :
             lc::symbols::delta_conv_sup(rho, B, cfg.at("kList").get<std::vector<double>>()))
            t.add_row({row.k, row.scaledSup, row.argmaxRadius});
    } else {
        throw ConfigError("symbols: mode must be 'gaps' or 'deltasup'");
    }
    return t;
}

lc::Table run_semiclassical(const json& cfg, const lc::Potential& V) {
    const double B = cfg.value("B", 1.0);
    if (!cfg.contains("EList")) throw ConfigError("semiclassical: EList required");
    const auto bumps = parse_bumps(cfg);
    if (bumps.size() != 1) throw ConfigError("semiclassical: exactly one bump required");
    lc::Table t;
    t.columns = {"E", "lhs", "rhs", "residual", "boundaryMass"};
    for (const auto& row : lc::radon::semiclassical_residuals(
             V, bumps[0], B, cfg.at("EList").get<std::vector<double>>()))
        t.add_row({row.E, row.lhs, row.rhs, row.residual, row.boundaryMass});
    return t;
}

lc::Table run_appendix(const json& cfg, const lc::Potential&) {
    const std::string check = cfg.value("check", "wigner");
    lc::Table t;
    if (check == "wigner") {
        const int qMax = cfg.value("qMax", 8);
        const double halfWidth = cfg.value("halfWidth", 12.0);
        const int size = cfg.value("size", 512);
        t.columns = {"q", "residual"};
        for (int q = 0; q <= qMax; ++q)
            t.add_row({static_cast<double>(q),
                       lc::specfun::wigner_fourier_residual(q, halfWidth, size)});
    } else if (check == "laguerre_bessel") {
        const auto qList = cfg.value("qList", std::vector<int>{4, 16, 64, 256});
        const double xMax = cfg.value("xMax", 40.0);
        const int xCount = cfg.value("xCount", 400);
        t.columns = {"q", "x", "gap", "bound", "ratio"};
        for (int q : qList)
            for (int i = 1; i <= xCount; ++i) {
                const double x = xMax * i / xCount;
                auto g = lc::specfun::laguerre_bessel_gap(q, x);
                t.add_row({static_cast<double>(q), x, g.gap, g.bound, g.gap / g.bound});
            }
    } else {
        throw ConfigError("appendix: check must be 'wigner' or 'laguerre_bessel'");
    }
    return t;
}

lc::Table run_strongfield(const json& cfg, const lc::Potential& V) {
    const int q = cfg.value("q", 0);
    const int ell = cfg.value("ell", 1);
    if (!cfg.contains("BList")) throw ConfigError("strongfield: BList required");
    if (!V.is_zero() && !V.pointwise_power(ell).is_integrable())
        throw ConfigError("strongfield: V^ell not integrable");
    lc::Table t;
    t.columns = {"B", "scaledTracePow", "scaledPowTrace", "integral"};
    for (const auto& row : lc::landau::strong_field_check(
             V, q, ell, cfg.at("BList").get<std::vector<double>>(), parse_convergence(cfg)))
        t.add_row({row.B, row.scaledTracePow, row.scaledPowTrace, row.integral});
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"batch experiment driver for Landau-level cluster numerics"};
    std::string command, configPath, outPath, format = "csv";
    int threads = 0;
    app.add_option("command", command,
                   "one of: radon spectrum moments distribution symbols semiclassical appendix "
                   "strongfield")
        ->required();
    app.add_option("--config", configPath, "experiment config (JSON)")->required();
    app.add_option("--out", outPath, "output path (default: stdout)");
    app.add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "worker thread count (0 = library default)");
    CLI11_PARSE(app, argc, argv);

    auto emitError = [&](const std::string& kind, const std::string& message, int code) {
        json err{{"error", {{"kind", kind}, {"message", message}, {"command", command}}}};
        std::cerr << err.dump() << "\n";
        return code;
    };

    if (threads > 0) lc::set_threads(threads);

    json cfg;
    try {
        std::ifstream in(configPath);
        if (!in) throw ConfigError("cannot open config: " + configPath);
        in >> cfg;
    } catch (const std::exception& e) {
        return emitError("config", e.what(), 2);
    }

    try {
        static const std::vector<std::string> known{"radon",   "spectrum",      "moments",
                                                    "distribution", "symbols",  "semiclassical",
                                                    "appendix", "strongfield"};
        if (std::find(known.begin(), known.end(), command) == known.end())
            throw ConfigError("unknown command '" + command + "'");
        if (cfg.contains("command") && cfg.at("command").get<std::string>() != command)
            throw ConfigError("config 'command' field does not match the CLI command");

        lc::Potential V = cfg.contains("potential") ? parse_potential(cfg.at("potential"))
                                                    : lc::Potential::zero();

        lc::Table table;
        if (command == "radon") table = run_radon(cfg, V);
        else if (command == "spectrum") table = run_spectrum(cfg, V);
        else if (command == "moments") table = run_moments(cfg, V);
        else if (command == "distribution") table = run_distribution(cfg, V);
        else if (command == "symbols") table = run_symbols(cfg, V);
        else if (command == "semiclassical") table = run_semiclassical(cfg, V);
        else if (command == "appendix") table = run_appendix(cfg, V);
        else if (command == "strongfield") table = run_strongfield(cfg, V);

        char hash[32];
        std::snprintf(hash, sizeof(hash), "%016llx",
                      static_cast<unsigned long long>(lc::fnv1a(cfg.dump())));
        table.meta["config_hash"] = hash;
        table.meta["command"] = command;
        auto opts = parse_convergence(cfg);
        table.meta["cutoff_tol"] = lc::format_double(opts.tol);

        std::ostringstream body;
        if (format == "csv") table.write_csv(body);
        else table.write_json(body);

        if (outPath.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(outPath);
            if (!out) throw std::runtime_error("cannot open output: " + outPath);
            out << body.str();
        }
        return 0;
    } catch (const ConfigError& e) {
        return emitError("config", e.what(), 2);
    } catch (const std::domain_error& e) {
        return emitError("config", e.what(), 2);
    } catch (const std::invalid_argument& e) {
        return emitError("config", e.what(), 2);
    } catch (const std::exception& e) {
        return emitError("runtime", e.what(), 1);
    }
}
