#include "tweetsent/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tweetsent::svg {

namespace {

constexpr int kLeft = 70;
constexpr int kRight = 20;
constexpr int kTop = 40;
constexpr int kBottom = 90;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Frame {
    const ChartSpec& spec;
    double lo;
    double hi;

    double plot_w() const { return spec.width - kLeft - kRight; }
    double plot_h() const { return spec.height - kTop - kBottom; }
    double y(double v) const { return kTop + plot_h() * (1.0 - (v - lo) / (hi - lo)); }
    double slot(std::size_t n) const { return plot_w() / static_cast<double>(std::max<std::size_t>(n, 1)); }
    double x_center(std::size_t i, std::size_t n) const { return kLeft + slot(n) * (static_cast<double>(i) + 0.5); }
};

std::pair<double, double> fit_range(const ChartSpec& spec, double data_lo, double data_hi) {
    if (spec.y_min < spec.y_max) return {spec.y_min, spec.y_max};
    double lo = std::min(0.0, data_lo), hi = std::max(0.0, data_hi);
    if (hi - lo < 1e-12) hi = lo + 1.0;
    const double pad = (hi - lo) * 0.05;
    return {lo < 0 ? lo - pad : lo, hi + pad};
}

void open(std::ostringstream& os, const Frame& f) {
    const auto& s = f.spec;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << s.width << "\" height=\"" << s.height
       << "\" viewBox=\"0 0 " << s.width << ' ' << s.height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << s.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
       << escape_xml(s.title) << "</text>\n";
    os << "<text transform=\"translate(16," << kTop + f.plot_h() / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
       << escape_xml(s.y_label) << "</text>\n";
    // y ticks
    for (int i = 0; i <= 4; ++i) {
        const double v = f.lo + (f.hi - f.lo) * i / 4.0;
        const double yy = f.y(v);
        os << "<line x1=\"" << kLeft << "\" x2=\"" << s.width - kRight << "\" y1=\"" << fmt(yy) << "\" y2=\""
           << fmt(yy) << "\" stroke=\"#e0e0e0\"/>\n";
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << fmt(yy + 4) << "\" text-anchor=\"end\">" << fmt(v)
           << "</text>\n";
    }
    if (f.lo < 0 && f.hi > 0) {
        os << "<line x1=\"" << kLeft << "\" x2=\"" << s.width - kRight << "\" y1=\"" << fmt(f.y(0)) << "\" y2=\""
           << fmt(f.y(0)) << "\" stroke=\"#888\"/>\n";
    }
    // x labels, thinned so they do not overlap
    const std::size_t n = s.x_labels.size();
    const std::size_t step = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(n * 14.0 / f.plot_w())));
    for (std::size_t i = 0; i < n; i += step) {
        const double xx = f.x_center(i, n);
        const double yy = s.height - kBottom + 12;
        os << "<text transform=\"translate(" << fmt(xx) << ',' << fmt(yy) << ") rotate(45)\">"
           << escape_xml(s.x_labels[i]) << "</text>\n";
    }
}

}  // namespace

std::string line_chart(const ChartSpec& spec, const std::vector<Series>& series) {
    double lo = 0.0, hi = 0.0;
    for (const auto& s : series) {
        for (double v : s.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const auto [ylo, yhi] = fit_range(spec, lo, hi);
    const Frame f{spec, ylo, yhi};
    std::ostringstream os;
    open(os, f);
    const std::size_t n = spec.x_labels.size();
    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* color = kPalette[k % std::size(kPalette)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < series[k].values.size() && i < n; ++i) {
            os << (i ? " " : "") << fmt(f.x_center(i, n)) << ',' << fmt(f.y(series[k].values[i]));
        }
        os << "\"/>\n";
        os << "<text x=\"" << kLeft + 8 << "\" y=\"" << kTop + 14 * (k + 1) << "\" fill=\"" << color << "\">"
           << escape_xml(series[k].name) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string bar_chart(const ChartSpec& spec, const std::vector<double>& values) {
    double lo = 0.0, hi = 0.0;
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const auto [ylo, yhi] = fit_range(spec, lo, hi);
    const Frame f{spec, ylo, yhi};
    std::ostringstream os;
    open(os, f);
    const std::size_t n = spec.x_labels.size();
    const double w = f.slot(n) * 0.7;
    for (std::size_t i = 0; i < values.size() && i < n; ++i) {
        const double top = f.y(std::max(0.0, values[i]));
        const double bottom = f.y(std::min(0.0, values[i]));
        os << "<rect x=\"" << fmt(f.x_center(i, n) - w / 2) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(w)
           << "\" height=\"" << fmt(bottom - top) << "\" fill=\"" << (values[i] < 0 ? kPalette[1] : kPalette[0])
           << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tweetsent::svg
