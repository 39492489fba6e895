#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "region.hpp"
#include "sampling.hpp"

// CSV and SVG writers for traces, verdicts and samples. Numbers in CSV carry 17
// significant digits so that they round-trip; nothing environment-dependent is written.

namespace cyclespectra {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

inline constexpr const char* kTraceHeader = "curve,param,re,im,G";
inline constexpr const char* kVerdictHeader = "re,im,status,a_check,right_check,g_check";
inline constexpr const char* kSampleHeader = "index,alpha1,alpha2,alpha3,alpha4,re,im,status";

struct TraceRow {
    std::string curve;
    double param;
    Complex lam;
};

inline std::vector<TraceRow> trace_rows_CR(int n) {
    std::vector<TraceRow> rows;
    const std::vector<Complex> pts = trace_CR(n);
    for (int j = 0; j < n; ++j) rows.push_back({"CR", static_cast<double>(j) / (n - 1), pts[j]});
    return rows;
}

inline std::vector<TraceRow> trace_rows_CL(int n, const Tolerance& tol = {}) {
    std::vector<TraceRow> rows;
    for (const CLPoint& p : trace_CL(n, tol)) rows.push_back({"CL", p.alpha, p.lam});
    return rows;
}

/// CR and CL plus the endpoints -1 and 1 of the real segment.
inline std::vector<TraceRow> trace_rows_region(int n, const Tolerance& tol = {}) {
    std::vector<TraceRow> rows = trace_rows_CR(n);
    for (TraceRow& r : trace_rows_CL(n, tol)) rows.push_back(std::move(r));
    rows.push_back({"real", -1.0, Complex(-1.0, 0.0)});
    rows.push_back({"real", 1.0, Complex(1.0, 0.0)});
    return rows;
}

inline void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
    os << kTraceHeader << '\n';
    for (const TraceRow& r : rows) {
        os << r.curve << ',' << fmt17(r.param) << ',' << fmt17(r.lam.real()) << ','
           << fmt17(r.lam.imag()) << ',' << fmt17(G(r.lam.real(), r.lam.imag())) << '\n';
    }
}

inline void write_verdict_csv_row(std::ostream& os, Complex lam, const RegionVerdict& v) {
    os << fmt17(lam.real()) << ',' << fmt17(lam.imag()) << ',' << to_string(v.status) << ','
       << fmt17(v.binding.a_check) << ',' << fmt17(v.binding.right_check) << ','
       << fmt17(v.binding.g_check) << '\n';
}

inline void write_sample_csv(std::ostream& os, const std::vector<SampleRecord>& records) {
    os << kSampleHeader << '\n';
    for (const SampleRecord& r : records) {
        os << r.index;
        for (double a : r.alpha) os << ',' << fmt17(a);
        os << ',' << fmt17(r.eigenvalue.real()) << ',' << fmt17(r.eigenvalue.imag()) << ','
           << to_string(r.verdict.status) << '\n';
    }
}

/// Closed region (upper branches and their conjugates) plus the real segment [-1, 1]
/// on a fixed 800x800 canvas covering [-1.1, 1.1]^2.
inline void write_region_svg(std::ostream& os, int n, const Tolerance& tol = {}) {
    constexpr double kSize = 800.0;
    constexpr double kSpan = 1.1;
    auto px = [](double re) { return (re + kSpan) / (2 * kSpan) * kSize; };
    auto py = [](double im) { return (kSpan - im) / (2 * kSpan) * kSize; };
    auto pt = [&](Complex w) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f", px(w.real()), py(w.imag()));
        return std::string(buf);
    };

    // 1 -> i along CR, i -> 0 along CL, then back through the conjugates.
    const std::vector<Complex> cr = trace_CR(n);
    std::vector<Complex> cl;
    for (const CLPoint& p : trace_CL(n, tol)) cl.push_back(p.lam);
    cl.push_back(Complex(0.0, 0.0));

    std::vector<Complex> outline(cr.begin(), cr.end());
    outline.insert(outline.end(), cl.begin() + 1, cl.end());
    for (auto it = cl.rbegin() + 1; it != cl.rend(); ++it) outline.push_back(std::conj(*it));
    for (auto it = cr.rbegin() + 1; it != cr.rend(); ++it) outline.push_back(std::conj(*it));

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
          "viewBox=\"0 0 800 800\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n"
       << "<line x1=\"0\" y1=\"" << py(0.0) << "\" x2=\"800\" y2=\"" << py(0.0)
       << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n"
       << "<line x1=\"" << px(0.0) << "\" y1=\"0\" x2=\"" << px(0.0)
       << "\" y2=\"800\" stroke=\"#999999\" stroke-width=\"1\"/>\n"
       << "<polygon fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < outline.size(); ++k) os << (k ? " " : "") << pt(outline[k]);
    os << "\"/>\n"
       << "<line x1=\"" << px(-1.0) << "\" y1=\"" << py(0.0) << "\" x2=\"" << px(1.0)
       << "\" y2=\"" << py(0.0) << "\" stroke=\"#08519c\" stroke-width=\"3\"/>\n"
       << "</svg>\n";
}

}  // namespace cyclespectra
