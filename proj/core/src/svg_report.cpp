// SPDX-License-Identifier: Apache-2.0
//
// Self-contained SVG rendering of sweep results: BER on a log axis and
// output SNR on a linear axis, both against input SNR, seeds averaged.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "dhlut/errors.hpp"
#include "dhlut/experiment.hpp"

namespace dhlut {

namespace {

constexpr double kBerFloor = 1e-6;  // zero-BER points plot at this floor

struct Curve {
    Scheme scheme;
    std::vector<double> x;  // input SNR
    std::vector<double> y;  // seed-averaged metric
};

const char* scheme_color(Scheme s) {
    switch (s) {
        case Scheme::none: return "#555555";
        case Scheme::full: return "#d62728";
        case Scheme::hlut: return "#1f77b4";
        case Scheme::dh2: return "#2ca02c";
        case Scheme::dh4: return "#ff7f0e";
        case Scheme::dh6: return "#9467bd";
    }
    return "#000000";
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct Panel {
    double x0, y0, w, h;        // plot area in canvas units
    double xmin, xmax;          // data range
    double ymin, ymax;

    double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
    double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

std::vector<Curve> average_curves(const std::vector<SweepRow>& rows, bool log_ber) {
    // (scheme, snr) -> mean over seeds
    std::map<std::pair<int, double>, std::pair<double, int>> acc;
    for (const SweepRow& r : rows) {
        const double v = log_ber ? std::max(r.ber, kBerFloor) : r.snr_out_db;
        auto& slot = acc[{static_cast<int>(r.scheme), r.snr_in_db}];
        slot.first += v;
        slot.second += 1;
    }
    std::vector<Curve> curves;
    for (const auto& [key, sum] : acc) {
        const Scheme s = static_cast<Scheme>(key.first);
        auto it = std::find_if(curves.begin(), curves.end(),
                               [&](const Curve& c) { return c.scheme == s; });
        if (it == curves.end()) {
            curves.push_back({s, {}, {}});
            it = curves.end() - 1;
        }
        it->x.push_back(key.second);
        it->y.push_back(sum.first / sum.second);
    }
    return curves;  // map iteration keeps x ascending within each scheme
}

void draw_frame_and_x_axis(std::string& svg, const Panel& p, const std::vector<double>& xticks,
                           const std::string& title) {
    svg += "<rect x='" + num(p.x0) + "' y='" + num(p.y0) + "' width='" + num(p.w) +
           "' height='" + num(p.h) + "' fill='none' stroke='#333' stroke-width='1'/>\n";
    for (double t : xticks) {
        const double x = p.px(t);
        svg += "<line x1='" + num(x) + "' y1='" + num(p.y0 + p.h) + "' x2='" + num(x) + "' y2='" +
               num(p.y0 + p.h + 4) + "' stroke='#333'/>\n";
        svg += "<text x='" + num(x) + "' y='" + num(p.y0 + p.h + 18) +
               "' font-size='11' text-anchor='middle'>" + tick_label(t) + "</text>\n";
    }
    svg += "<text x='" + num(p.x0 + p.w / 2) + "' y='" + num(p.y0 + p.h + 34) +
           "' font-size='12' text-anchor='middle'>input SNR (dB)</text>\n";
    svg += "<text x='" + num(p.x0 + p.w / 2) + "' y='" + num(p.y0 - 8) +
           "' font-size='13' text-anchor='middle' font-weight='bold'>" + title + "</text>\n";
}

void draw_curves(std::string& svg, const Panel& p, const std::vector<Curve>& curves,
                 bool log_y) {
    for (const Curve& c : curves) {
        std::string points;
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            const double y = log_y ? std::log10(c.y[i]) : c.y[i];
            points += num(p.px(c.x[i])) + "," + num(p.py(y)) + " ";
        }
        svg += "<polyline fill='none' stroke='" + std::string(scheme_color(c.scheme)) +
               "' stroke-width='1.5' points='" + points + "'/>\n";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            const double y = log_y ? std::log10(c.y[i]) : c.y[i];
            svg += "<circle cx='" + num(p.px(c.x[i])) + "' cy='" + num(p.py(y)) +
                   "' r='2.5' fill='" + std::string(scheme_color(c.scheme)) + "'/>\n";
        }
    }
}

}  // namespace

void write_svg_report(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
    if (rows.empty()) {
        throw InvalidInput("write_svg_report: no rows");
    }

    std::vector<double> xs;
    for (const SweepRow& r : rows) xs.push_back(r.snr_in_db);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const double xmin = xs.front();
    const double xmax = xs.size() > 1 ? xs.back() : xs.front() + 1.0;

    const std::vector<Curve> ber_curves = average_curves(rows, true);
    const std::vector<Curve> snr_curves = average_curves(rows, false);

    // BER range in decades.
    double bmin = 1.0, bmax = kBerFloor;
    for (const Curve& c : ber_curves) {
        for (double v : c.y) {
            bmin = std::min(bmin, v);
            bmax = std::max(bmax, v);
        }
    }
    const double ylog_min = std::floor(std::log10(bmin));
    const double ylog_max = std::ceil(std::log10(bmax) + 1e-9);
    const double ylog_hi = ylog_max > ylog_min ? ylog_max : ylog_min + 1.0;

    double smin = 1e300, smax = -1e300;
    for (const Curve& c : snr_curves) {
        for (double v : c.y) {
            smin = std::min(smin, v);
            smax = std::max(smax, v);
        }
    }
    if (smax - smin < 1.0) smax = smin + 1.0;
    const double spad = 0.05 * (smax - smin);

    Panel ber_panel{60, 40, 360, 320, xmin, xmax, ylog_min, ylog_hi};
    Panel snr_panel{540, 40, 360, 320, xmin, xmax, smin - spad, smax + spad};

    std::string svg;
    svg += "<svg xmlns='http://www.w3.org/2000/svg' width='960' height='430' "
           "viewBox='0 0 960 430'>\n";
    svg += "<rect width='960' height='430' fill='white'/>\n";

    draw_frame_and_x_axis(svg, ber_panel, xs, "BER vs input SNR");
    for (double d = ylog_min; d <= ylog_hi + 1e-9; d += 1.0) {
        const double y = ber_panel.py(d);
        svg += "<line x1='" + num(ber_panel.x0 - 4) + "' y1='" + num(y) + "' x2='" +
               num(ber_panel.x0) + "' y2='" + num(y) + "' stroke='#333'/>\n";
        char lbl[32];
        std::snprintf(lbl, sizeof lbl, "1e%d", static_cast<int>(d));
        svg += "<text x='" + num(ber_panel.x0 - 8) + "' y='" + num(y + 4) +
               "' font-size='11' text-anchor='end'>" + lbl + "</text>\n";
    }
    draw_curves(svg, ber_panel, ber_curves, true);

    draw_frame_and_x_axis(svg, snr_panel, xs, "output SNR vs input SNR");
    const double step = std::max(1.0, std::round((smax - smin) / 6.0));
    for (double t = std::ceil(snr_panel.ymin); t <= snr_panel.ymax + 1e-9; t += step) {
        const double y = snr_panel.py(t);
        svg += "<line x1='" + num(snr_panel.x0 - 4) + "' y1='" + num(y) + "' x2='" +
               num(snr_panel.x0) + "' y2='" + num(y) + "' stroke='#333'/>\n";
        svg += "<text x='" + num(snr_panel.x0 - 8) + "' y='" + num(y + 4) +
               "' font-size='11' text-anchor='end'>" + tick_label(t) + "</text>\n";
    }
    svg += "<text x='" + num(snr_panel.x0 - 44) + "' y='" + num(snr_panel.y0 + snr_panel.h / 2) +
           "' font-size='12' text-anchor='middle' transform='rotate(-90 " +
           num(snr_panel.x0 - 44) + " " + num(snr_panel.y0 + snr_panel.h / 2) +
           ")'>output SNR (dB)</text>\n";
    draw_curves(svg, snr_panel, snr_curves, false);

    // Legend between the panels.
    double ly = 60;
    for (const Curve& c : ber_curves) {
        svg += "<line x1='440' y1='" + num(ly) + "' x2='468' y2='" + num(ly) + "' stroke='" +
               std::string(scheme_color(c.scheme)) + "' stroke-width='2'/>\n";
        svg += "<text x='474' y='" + num(ly + 4) + "' font-size='12'>" +
               std::string(to_string(c.scheme)) + "</text>\n";
        ly += 20;
    }

    svg += "</svg>\n";

    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << svg;
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace dhlut
