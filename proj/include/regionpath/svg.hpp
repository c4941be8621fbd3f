#pragma once

#include <string>
#include <vector>

namespace regionpath {

struct ChartSeries {
    enum class Kind { Bars, Line };

    std::string name;
    std::vector<double> values;
    Kind kind = Kind::Bars;
};

// Self-contained SVG bar/line chart, byte-deterministic for identical input.
// labels annotate the x axis (may be empty); all series must share one
// length. Throws std::invalid_argument on an empty series list.
std::string render_histogram(const std::vector<ChartSeries>& series,
                             const std::vector<std::string>& labels,
                             const std::string& title);

}  // namespace regionpath
