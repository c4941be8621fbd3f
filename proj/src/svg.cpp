#include "regionpath/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "regionpath/numfmt.hpp"

namespace regionpath {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 24.0;
constexpr double kTop = 48.0;
constexpr double kBottom = 56.0;

const char* kPalette[] = {"#4878a8", "#b05050", "#588858", "#a88848", "#707070"};

std::string num(double v) {
    return format_number(std::round(v * 100.0) / 100.0);
}

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_histogram(const std::vector<ChartSeries>& series,
                             const std::vector<std::string>& labels,
                             const std::string& title) {
    if (series.empty()) throw std::invalid_argument("no series to render");
    const std::size_t len = series.front().values.size();
    if (len == 0) throw std::invalid_argument("series has no values");
    for (const ChartSeries& s : series) {
        if (s.values.size() != len) {
            throw std::invalid_argument("all series must share one length");
        }
    }
    if (!labels.empty() && labels.size() != len) {
        throw std::invalid_argument("label count must match series length");
    }

    double vmax = 0.0;
    for (const ChartSeries& s : series) {
        for (double v : s.values) vmax = std::max(vmax, v);
    }
    if (vmax <= 0.0) vmax = 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double slot = plot_w / static_cast<double>(len);
    const auto y_of = [&](double v) { return kTop + plot_h * (1.0 - v / vmax); };
    const auto x_center = [&](std::size_t i) {
        return kLeft + slot * (static_cast<double>(i) + 0.5);
    };

    std::size_t bar_series = 0;
    for (const ChartSeries& s : series) {
        if (s.kind == ChartSeries::Kind::Bars) ++bar_series;
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth)
        << "\" height=\"" << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << ' '
        << num(kHeight) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
        << "\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">"
        << escape(title) << "</text>\n";

    // Axes and y extent labels.
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(kTop + plot_h) << "\" stroke=\"#202020\"/>\n";
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
        << num(kLeft + plot_w) << "\" y2=\"" << num(kTop + plot_h)
        << "\" stroke=\"#202020\"/>\n";
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(kTop + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_number(vmax) << "</text>\n";
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(kTop + plot_h + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">0</text>\n";

    std::size_t bar_slot = 0;
    for (std::size_t si = 0; si < series.size(); ++si) {
        const ChartSeries& s = series[si];
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        if (s.kind == ChartSeries::Kind::Bars) {
            const double group_w = slot * 0.8;
            const double bar_w = group_w / static_cast<double>(bar_series);
            for (std::size_t i = 0; i < len; ++i) {
                const double v = s.values[i];
                const double x = kLeft + slot * static_cast<double>(i) + slot * 0.1 +
                                 bar_w * static_cast<double>(bar_slot);
                const double y = y_of(v);
                out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
                    << num(bar_w) << "\" height=\"" << num(kTop + plot_h - y) << "\" fill=\""
                    << color << "\"/>\n";
            }
            ++bar_slot;
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < len; ++i) {
                if (i > 0) out << ' ';
                out << num(x_center(i)) << ',' << num(y_of(s.values[i]));
            }
            out << "\"/>\n";
        }
        if (series.size() > 1) {
            const double ly = kTop + 14.0 * static_cast<double>(si);
            out << "<rect x=\"" << num(kLeft + plot_w - 130) << "\" y=\"" << num(ly - 8)
                << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
            out << "<text x=\"" << num(kLeft + plot_w - 116) << "\" y=\"" << num(ly + 1)
                << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.name)
                << "</text>\n";
        }
    }

    if (!labels.empty()) {
        const std::size_t step = std::max<std::size_t>(1, len / 16);
        for (std::size_t i = 0; i < len; i += step) {
            out << "<text x=\"" << num(x_center(i)) << "\" y=\"" << num(kTop + plot_h + 16)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
                << escape(labels[i]) << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace regionpath
