#pragma once

#include <string>
#include <vector>

namespace tweetsent::svg {

struct Series {
    std::string name;
    std::vector<double> values;
};

struct ChartSpec {
    std::string title;
    std::string y_label;
    std::vector<std::string> x_labels;
    int width = 800;
    int height = 400;
    // Fixed y range; when min == max the range is fitted to the data.
    double y_min = 0.0;
    double y_max = 0.0;
};

/// Polyline per series over evenly spaced x positions.
std::string line_chart(const ChartSpec& spec, const std::vector<Series>& series);

/// One bar per x label, drawn from zero.
std::string bar_chart(const ChartSpec& spec, const std::vector<double>& values);

}  // namespace tweetsent::svg
