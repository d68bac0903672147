#include "casclab_tool/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "casclab/errors.hpp"

namespace casclab::tool {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 690.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 420.0;

const char* kColors[] = {"#1f77b4", "#d62728", "#9467bd", "#2ca02c",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Axis {
    double lo = 0.0, hi = 1.0;
    bool log = false;

    double map(double v, double pix_lo, double pix_hi) const {
        double t;
        if (log) {
            t = (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
        } else {
            t = (v - lo) / (hi - lo);
        }
        return pix_lo + t * (pix_hi - pix_lo);
    }

    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log) {
            const int e0 = static_cast<int>(std::floor(std::log10(lo)));
            const int e1 = static_cast<int>(std::ceil(std::log10(hi)));
            for (int e = e0; e <= e1; ++e) {
                const double v = std::pow(10.0, e);
                if (v >= lo * 0.999 && v <= hi * 1.001) out.push_back(v);
            }
        } else {
            for (int i = 0; i <= 5; ++i) out.push_back(lo + (hi - lo) * i / 5.0);
        }
        return out;
    }
};

Axis fit_axis(const PlotSpec& spec, bool is_x) {
    Axis ax;
    ax.log = is_x ? spec.log_x : spec.log_y;
    double lo = 0.0, hi = 1.0;
    bool first = true;
    for (const Series& s : spec.series) {
        const auto& vals = is_x ? s.x : s.y;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            double v = vals[i];
            if (ax.log && v <= 0.0) continue;
            double vlo = v, vhi = v;
            if (!is_x && s.y_lo.size() == s.y.size()) {
                vlo = std::min(vlo, s.y_lo[i]);
                vhi = std::max(vhi, s.y_hi[i]);
            }
            if (ax.log && vlo <= 0.0) vlo = v;
            if (first) {
                lo = vlo;
                hi = vhi;
                first = false;
            } else {
                lo = std::min(lo, vlo);
                hi = std::max(hi, vhi);
            }
        }
    }
    if (first) throw ValidationError("plot has no drawable points");
    if (ax.log) {
        ax.lo = std::pow(10.0, std::floor(std::log10(lo)));
        ax.hi = std::pow(10.0, std::ceil(std::log10(hi)));
        if (ax.lo == ax.hi) ax.hi *= 10.0;
    } else {
        const double pad = (hi - lo) == 0.0 ? (hi == 0.0 ? 1.0 : std::abs(hi) * 0.1)
                                            : (hi - lo) * 0.05;
        ax.lo = lo - pad;
        ax.hi = hi + pad;
        if (!is_x && lo >= 0.0) ax.lo = std::max(0.0, ax.lo);
    }
    return ax;
}

} // namespace

std::string render_svg(const PlotSpec& spec) {
    if (spec.series.empty()) throw ValidationError("plot needs at least one series");
    const Axis xa = fit_axis(spec, true);
    const Axis ya = fit_axis(spec, false);
    auto px = [&](double v) { return xa.map(v, kLeft, kRight); };
    auto py = [&](double v) { return ya.map(v, kBottom, kTop); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"16\">" << spec.title << "</text>\n";

    // Axes frame and ticks.
    os << "<g stroke=\"black\" fill=\"none\">"
       << "<path d=\"M" << num(kLeft) << " " << num(kTop) << " V" << num(kBottom) << " H"
       << num(kRight) << "\"/></g>\n";
    for (double t : xa.ticks()) {
        const double x = px(t);
        os << "<line x1=\"" << num(x) << "\" y1=\"" << num(kBottom) << "\" x2=\"" << num(x)
           << "\" y2=\"" << num(kBottom + 6) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(x) << "\" y=\"" << num(kBottom + 20)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
           << tick_label(t) << "</text>\n";
    }
    for (double t : ya.ticks()) {
        const double y = py(t);
        os << "<line x1=\"" << num(kLeft - 6) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft)
           << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(kLeft - 10) << "\" y=\"" << num(y + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
           << tick_label(t) << "</text>\n";
    }
    os << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"" << num(kHeight - 10)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
       << spec.x_label << "</text>\n";
    os << "<text x=\"18\" y=\"" << num((kTop + kBottom) / 2)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
          "transform=\"rotate(-90 18 " << num((kTop + kBottom) / 2) << ")\">"
       << spec.y_label << "</text>\n";

    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const Series& s = spec.series[si];
        const char* color = kColors[si % (sizeof kColors / sizeof kColors[0])];
        // Error bars first so the line sits on top.
        if (s.y_lo.size() == s.y.size() && s.y_hi.size() == s.y.size()) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if ((xa.log && s.x[i] <= 0.0) || (ya.log && s.y_lo[i] <= 0.0)) continue;
                const double x = px(s.x[i]);
                os << "<line x1=\"" << num(x) << "\" y1=\"" << num(py(s.y_lo[i])) << "\" x2=\""
                   << num(x) << "\" y2=\"" << num(py(s.y_hi[i])) << "\" stroke=\"" << color
                   << "\" stroke-width=\"1\"/>\n";
                for (double yv : {s.y_lo[i], s.y_hi[i]})
                    os << "<line x1=\"" << num(x - 4) << "\" y1=\"" << num(py(yv)) << "\" x2=\""
                       << num(x + 4) << "\" y2=\"" << num(py(yv)) << "\" stroke=\"" << color
                       << "\" stroke-width=\"1\"/>\n";
            }
        }
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        double prev_y = 0.0;
        bool have_prev = false;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if ((xa.log && s.x[i] <= 0.0) || (ya.log && s.y[i] <= 0.0)) continue;
            const double x = px(s.x[i]);
            if (s.step && have_prev) os << num(x) << "," << num(prev_y) << " ";
            prev_y = py(s.y[i]);
            have_prev = true;
            os << num(x) << "," << num(prev_y) << " ";
        }
        os << "\"/>\n";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if ((xa.log && s.x[i] <= 0.0) || (ya.log && s.y[i] <= 0.0)) continue;
            os << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i]))
               << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
        }
        // Legend entry.
        const double ly = kTop + 14 + 18 * static_cast<double>(si);
        os << "<line x1=\"" << num(kRight - 150) << "\" y1=\"" << num(ly) << "\" x2=\""
           << num(kRight - 125) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << num(kRight - 118) << "\" y=\"" << num(ly + 4)
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_svg(const std::string& path, const PlotSpec& spec) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot open for writing: " + path);
    os << render_svg(spec);
}

} // namespace casclab::tool
