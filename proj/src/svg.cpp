#include "p1stab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace p1stab {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string header(double w, double h) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\""
        << num(h) << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
    return out.str();
}

std::string line(double x1, double y1, double x2, double y2, const char* stroke,
                 double width = 1.0) {
    std::ostringstream out;
    out << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
        << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
        << num(width) << "\"/>\n";
    return out.str();
}

std::string dot(double x, double y, double r, const char* fill) {
    std::ostringstream out;
    out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r)
        << "\" fill=\"" << fill << "\"/>\n";
    return out.str();
}

std::string text(double x, double y, const std::string& s) {
    std::ostringstream out;
    out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"10\">" << s
        << "</text>\n";
    return out.str();
}

}  // namespace

std::string svg_rays(const HNFiltration& filtration) {
    const double size = 480.0, cx = size / 2, cy = size / 2;
    double max_len = 1e-12;
    for (const auto& p : filtration) max_len = std::max(max_len, std::abs(p.charge));
    double scale = 0.42 * size / max_len;

    std::ostringstream out;
    out << header(size, size);
    out << line(0, cy, size, cy, "#cccccc");
    out << line(cx, 0, cx, size, "#cccccc");
    for (const auto& p : filtration) {
        double ang = std::numbers::pi * p.phase;
        double len = std::abs(p.charge) * scale;
        double x = cx + len * std::cos(ang);
        double y = cy - len * std::sin(ang);
        out << line(cx, cy, x, y, "#1f5fa8", 1.5);
        out << dot(x, y, 2.5, "#1f5fa8");
        out << text(x + 4, y, format_object(p.piece));
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_domain(const std::vector<ChartPoint>& points) {
    const double xmin = -3.2, xmax = 3.2, ymin = 0.0, ymax = 4.5;
    const double size = 480.0;
    auto px = [&](double x) { return (x - xmin) / (xmax - xmin) * size; };
    auto py = [&](double y) { return size - (y - ymin) / (ymax - ymin) * size; };

    std::ostringstream out;
    out << header(size, size);
    out << line(px(xmin), py(0), px(xmax), py(0), "#888888");
    out << line(px(0), py(ymin), px(0), py(ymax), "#cccccc");
    // Boundary curves cos y = exp(-|x|), y in (0, pi/2).
    for (int side = -1; side <= 1; side += 2) {
        std::ostringstream pts;
        for (int k = 1; k <= 200; ++k) {
            double y = (std::numbers::pi / 2) * k / 201.0;
            double x = side * -std::log(std::cos(y));
            if (std::abs(x) > xmax) continue;
            pts << num(px(x)) << "," << num(py(y)) << " ";
        }
        out << "<polyline points=\"" << pts.str()
            << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1.2\"/>\n";
    }
    out << line(px(xmin), py(std::numbers::pi), px(xmax), py(std::numbers::pi), "#a83232");
    out << text(px(xmax) - 40, py(std::numbers::pi) - 4, "wall");
    for (const auto& p : points) {
        out << dot(px(p.w.real()), py(p.w.imag()), 1.6, "#1f5fa8");
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_scan(const std::vector<PathSample>& samples,
                     const std::vector<std::pair<double, double>>& phase_pairs) {
    const double size = 480.0;
    double lo = 1e30, hi = -1e30;
    for (const auto& [a, b] : phase_pairs) {
        lo = std::min({lo, a, b});
        hi = std::max({hi, a, b});
    }
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
    double pad = 0.1 * (hi - lo);
    lo -= pad;
    hi += pad;
    auto px = [&](double v) { return (v - lo) / (hi - lo) * size; };
    auto py = [&](double v) { return size - (v - lo) / (hi - lo) * size; };

    std::ostringstream out;
    out << header(size, size);
    out << line(px(lo), py(lo), px(hi), py(hi), "#a83232");  // the wall alpha = beta
    std::ostringstream pts;
    for (const auto& [a, b] : phase_pairs) pts << num(px(a)) << "," << num(py(b)) << " ";
    out << "<polyline points=\"" << pts.str()
        << "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.2\"/>\n";
    for (std::size_t k = 0; k < samples.size() && k < phase_pairs.size(); ++k) {
        if (!is_four_cell(samples[k].cell)) {
            out << dot(px(phase_pairs[k].first), py(phase_pairs[k].second), 3.0, "#a83232");
            out << text(px(phase_pairs[k].first) + 5, py(phase_pairs[k].second),
                        to_string(samples[k].cell));
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace p1stab
