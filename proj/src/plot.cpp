#include "exhauster/plot.hpp"

#include <algorithm>
#include <sstream>

#include "exhauster/document.hpp"
#include "exhauster/envelope.hpp"
#include "exhauster/error.hpp"
#include "exhauster/support.hpp"

namespace exh {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b",
                                "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Table {
    std::vector<double> theta;
    std::vector<std::vector<double>> rho;  // [body][sample]
    std::vector<double> envelope;
};

Table tabulate(const Exhauster& ex, std::size_t samples) {
    if (samples < 2) throw ValidationError("emit_curves needs at least 2 samples");
    std::vector<SupportCurve> curves;
    for (const auto& b : ex.bodies()) curves.push_back(support_curve(b));
    Table t;
    t.rho.resize(curves.size());
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
        t.theta.push_back(theta);
        double lo = HUGE_VAL;
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const double v = curves[i](theta);
            t.rho[i].push_back(v);
            lo = std::min(lo, v);
        }
        t.envelope.push_back(lo);
    }
    return t;
}

std::string emit_csv(const Exhauster& ex, const Table& t) {
    std::ostringstream os;
    os << "theta";
    for (const auto& b : ex.bodies()) os << ',' << csv_field("rho_" + b.label());
    os << ",envelope\r\n";
    for (std::size_t k = 0; k < t.theta.size(); ++k) {
        os << format_real(t.theta[k]);
        for (const auto& col : t.rho) os << ',' << format_real(col[k]);
        os << ',' << format_real(t.envelope[k]) << "\r\n";
    }
    return os.str();
}

std::string emit_svg(const Exhauster& ex, const Table& t) {
    constexpr double kWidth = 800.0, kHeight = 500.0;
    constexpr double kLeft = 60.0, kRight = 140.0, kTop = 20.0, kBottom = 50.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (const auto& col : t.rho) {
        for (double v : col) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (hi - lo < 1e-12) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    auto px = [&](double theta) { return kLeft + plot_w * theta / kTwoPi; };
    auto py = [&](double rho) { return kTop + plot_h * (hi - rho) / (hi - lo); };
    auto polyline = [&](const std::vector<double>& ys, bool closed) {
        std::ostringstream pts;
        for (std::size_t k = 0; k < t.theta.size(); ++k) pts << px(t.theta[k]) << ',' << py(ys[k]) << ' ';
        // Periodic: repeat the first sample at theta = 2pi.
        if (closed) pts << px(kTwoPi) << ',' << py(ys.front());
        return pts.str();
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes: theta along the bottom, rho on the left; rho = 0 dashed when visible.
    os << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
       << kTop + plot_h << "\"/>\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
       << "\"/>\n";
    if (lo < 0.0 && hi > 0.0) {
        os << "<line x1=\"" << kLeft << "\" y1=\"" << py(0.0) << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
           << py(0.0) << "\" stroke-dasharray=\"4,4\" stroke=\"#999\"/>\n";
    }
    const char* const ticks[] = {"0", "&#960;/2", "&#960;", "3&#960;/2", "2&#960;"};
    for (int q = 0; q <= 4; ++q) {
        const double x = px(q * kPi / 2.0);
        os << "<line x1=\"" << x << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << x << "\" y2=\"" << kTop + plot_h + 5
           << "\"/>\n<text x=\"" << x << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\" stroke=\"none\">"
           << ticks[q] << "</text>\n";
    }
    for (int q = 0; q <= 4; ++q) {
        const double v = lo + (hi - lo) * q / 4.0;
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\" stroke=\"none\">"
           << format_real(std::round(v * 100.0) / 100.0) << "</text>\n";
    }
    os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
       << "\" text-anchor=\"middle\" stroke=\"none\">&#952;</text>\n"
       << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" stroke=\"none\">&#961;</text>\n"
       << "</g>\n";

    for (std::size_t i = 0; i < ex.size(); ++i) {
        const std::string label = xml_escape(ex[i].label());
        const char* color = kPalette[i % std::size(kPalette)];
        os << "<polyline id=\"" << label << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.5\" points=\"" << polyline(t.rho[i], true) << "\"/>\n"
           << "<text x=\"" << kLeft + plot_w + 10 << "\" y=\"" << kTop + 16 * (i + 1) << "\" fill=\"" << color
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << label << "</text>\n";
    }
    os << "<polyline id=\"envelope\" fill=\"none\" stroke=\"black\" stroke-width=\"3\" stroke-dasharray=\"8,4\" "
          "points=\""
       << polyline(t.envelope, true) << "\"/>\n"
       << "<text x=\"" << kLeft + plot_w + 10 << "\" y=\"" << kTop + 16 * (ex.size() + 1)
       << "\" font-family=\"sans-serif\" font-size=\"12\">envelope</text>\n"
       << "</svg>\n";
    return os.str();
}

}  // namespace

std::string emit_curves(const Exhauster& ex, std::size_t samples, PlotFormat format) {
    const Table t = tabulate(ex, samples);
    return format == PlotFormat::csv ? emit_csv(ex, t) : emit_svg(ex, t);
}

}  // namespace exh
