// cyclespec: command-line front end for the 4-cycle spectral region toolkit.
//
// Exit codes: 0 ok, 2 usage, 3 outside region, 4 construction failure, 5 I/O.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclespectra/cyclespectra.hpp"
#include "cyclespectra/json_io.hpp"

namespace cs = cyclespectra;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kOutside = 3;
constexpr int kConstruction = 4;
constexpr int kIo = 5;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    return f;
}

void close_out(std::ofstream& f, const std::string& path) {
    f.close();
    if (!f) throw IoError("failed writing " + path);
}

int usage(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return kUsage;
}

int map_error(const cs::Error& e) {
    std::cerr << e.what() << '\n';
    switch (e.code()) {
        case cs::ErrorCode::OutsideRegion:
        case cs::ErrorCode::NotRealizable:
        case cs::ErrorCode::FeasibilityViolation:
            return kOutside;
        case cs::ErrorCode::NonFinite:
        case cs::ErrorCode::InvalidTolerance:
        case cs::ErrorCode::ParameterOutOfRange:
        case cs::ErrorCode::NonrealRequired:
        case cs::ErrorCode::ArgumentOutOfRange:
            return kUsage;
        default:
            return kConstruction;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral region of 4-cycle row-stochastic matrices"};
    app.require_subcommand(1);
    app.fallthrough();

    cs::Tolerance tol;
    std::optional<double> tol_residual, tol_band;
    app.add_option("--tol-residual", tol_residual, "eigen-residual tolerance (default 1e-8)");
    app.add_option("--tol-band", tol_band, "boundary band (default 1e-9; sample uses 1e-7)");

    double re = 0.0, im = 0.0;

    auto* check = app.add_subcommand("check", "classify a point against the spectral region");
    bool check_csv = false;
    check->add_option("re", re)->required();
    check->add_option("im", im)->required();
    check->add_flag("--csv", check_csv, "emit re,im,status,a_check,right_check,g_check");

    auto* realize = app.add_subcommand("realize", "build a 4-cycle matrix with the given eigenvalue");
    std::string method = "auto";
    realize->add_option("re", re)->required();
    realize->add_option("im", im)->required();
    realize->add_option("--method", method, "auto | criterion")
        ->check(CLI::IsMember({"auto", "criterion"}));

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of A(a1, a2, a3, a4)");
    std::vector<double> alpha;
    std::string matrix_json;
    spectrum->add_option("alpha", alpha, "a1 a2 a3 a4")->expected(4);
    spectrum->add_option("--json", matrix_json, "file holding {\"alpha\": [a1, a2, a3, a4]}");

    auto* sample = app.add_subcommand(
        "sample",
        "eigenvalues of n random matrices to CSV\n"
        "  columns: index,alpha1,alpha2,alpha3,alpha4,re,im,status");
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    sample->add_option("n", n_samples)->required()->check(CLI::PositiveNumber);
    sample->add_option("seed_pos", seed, "seed (or use --seed)");
    sample->add_option("out_pos", out_path, "output CSV (or use --out)");
    sample->add_option("--seed", seed);
    sample->add_option("--out", out_path);

    auto* trace = app.add_subcommand(
        "trace",
        "boundary traces to CSV\n  columns: curve,param,re,im,G");
    std::string curve;
    int n_points = 0;
    std::string svg_path;
    trace->add_option("curve", curve)->required()->check(CLI::IsMember({"CR", "CL", "region"}));
    trace->add_option("n", n_points)->required();
    trace->add_option("out_pos", out_path, "output CSV (or use --out)");
    trace->add_option("--out", out_path);
    trace->add_option("--svg", svg_path, "also render the closed region as SVG");

    auto* psi = app.add_subcommand("psi", "argument-parametrization diagnostics for a point");
    psi->add_option("re", re)->required();
    psi->add_option("im", im)->required();

    auto* verify = app.add_subcommand("verify", "exact polynomial identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (tol_residual) tol.eigen_residual = *tol_residual;
    if (tol_band) tol.boundary_band = *tol_band;

    try {
        tol.validate();

        if (*check) {
            const cs::Complex lam(re, im);
            const cs::RegionVerdict v = cs::membership(lam, tol);
            if (check_csv) {
                std::cout << cs::kVerdictHeader << '\n';
                cs::write_verdict_csv_row(std::cout, lam, v);
            } else {
                std::cout << cs::to_json(lam, v).dump() << '\n';
            }
            return v.inside() ? kOk : kOutside;
        }

        if (*realize) {
            const cs::Complex lam(re, im);
            const cs::Realization r =
                method == "criterion" ? cs::realize_by_criterion(lam, tol) : cs::realize(lam, tol);
            std::cout << cs::to_json(r).dump() << '\n';
            return kOk;
        }

        if (*spectrum) {
            cs::CycleMatrix4 m = cs::make_cycle_matrix(0, 0, 0, 0);
            if (!matrix_json.empty()) {
                std::ifstream f(matrix_json);
                if (!f) throw IoError("cannot read " + matrix_json);
                nlohmann::json j;
                try {
                    f >> j;
                    m = cs::cycle_matrix_from_json(j);
                } catch (const nlohmann::json::exception& e) {
                    return usage(std::string("bad matrix JSON: ") + e.what());
                }
            } else if (alpha.size() == 4) {
                m = cs::make_cycle_matrix(alpha[0], alpha[1], alpha[2], alpha[3]);
            } else {
                return usage("spectrum needs four parameters or --json");
            }
            nlohmann::json j = cs::to_json(m);
            j["charPoly"] = cs::char_poly(m);
            nlohmann::json eig = nlohmann::json::array();
            for (const cs::Complex& lam : cs::spectrum(m, tol)) eig.push_back(cs::complex_json(lam));
            j["eigenvalues"] = eig;
            std::cout << j.dump() << '\n';
            return kOk;
        }

        if (*sample) {
            if (out_path.empty()) return usage("sample needs an output path");
            cs::Tolerance member_tol = tol;
            if (!tol_band) member_tol.boundary_band = 1e-7;
            cs::Tolerance spec_tol = tol;
            if (!tol_band) spec_tol.boundary_band = cs::Tolerance{}.boundary_band;
            const auto records = cs::sample_spectra(n_samples, seed, spec_tol, member_tol);
            std::ofstream f = open_out(out_path);
            cs::write_sample_csv(f, records);
            close_out(f, out_path);
            const cs::SampleSummary s = cs::summarize(records);
            std::cout << "rows=" << records.size();
            for (int k = 0; k < 6; ++k)
                std::cout << ' ' << cs::to_string(static_cast<cs::RegionStatus>(k)) << '='
                          << s.counts[k];
            std::cout << '\n';
            return s.outside() == 0 ? kOk : kOutside;
        }

        if (*trace) {
            if (n_points < 2) return usage("trace needs n >= 2");
            if (out_path.empty()) return usage("trace needs an output path");
            std::vector<cs::TraceRow> rows;
            if (curve == "CR") rows = cs::trace_rows_CR(n_points);
            else if (curve == "CL") rows = cs::trace_rows_CL(n_points, tol);
            else rows = cs::trace_rows_region(n_points, tol);
            std::ofstream f = open_out(out_path);
            cs::write_trace_csv(f, rows);
            close_out(f, out_path);
            if (!svg_path.empty()) {
                std::ofstream s = open_out(svg_path);
                cs::write_region_svg(s, n_points, tol);
                close_out(s, svg_path);
            }
            std::cout << "rows=" << rows.size() << '\n';
            return kOk;
        }

        if (*psi) {
            // Lower half-plane points are diagnosed through their conjugate.
            const cs::CriterionContext ctx = cs::make_context(cs::Complex(re, std::abs(im)));
            std::cout << cs::to_json(ctx).dump() << '\n';
            return kOk;
        }

        if (*verify) {
            bool ok = true;
            std::cout << "id  status          statement\n";
            for (const cs::IdentityResult& r : cs::verify_identity_suite()) {
                const bool zero = r.status == cs::IdentityStatus::ZeroPolynomial;
                ok = ok && zero;
                std::cout << r.id << "  " << (zero ? "ZeroPolynomial" : "Failed        ") << "  "
                          << r.statement << '\n';
                if (!zero)
                    for (const cs::BivarPoly& p : r.residuals) std::cout << "    residual: " << p << '\n';
            }
            for (const cs::RootOrderCheck& c : cs::root_order_suite()) {
                const bool pass = c.s_minus_above_3a2 && c.s_minus_above_s0;
                ok = ok && pass;
                std::cout << "order a=" << c.a << "  " << (pass ? "ok" : "FAILED") << '\n';
            }
            return ok ? kOk : 1;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const cs::Error& e) {
        return map_error(e);
    }
    return kUsage;
}
