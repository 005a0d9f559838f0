#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "squarepeg/geometry.hpp"

namespace squarepeg::svg {

/// Minimal SVG 1.1 figure writer: a body outline plus overlaid squares with a
/// text legend. Coordinates are flipped so y points up.
class Figure {
  public:
    explicit Figure(const ConvexBody& body, int pixels = 640) : pixels_(pixels) {
        const BoundingBox bb = body.bbox();
        const double w = bb.xmax - bb.xmin, h = bb.ymax - bb.ymin;
        const double margin = 0.35 * std::max(w, h);
        xmin_ = bb.xmin - margin;
        ymin_ = bb.ymin - margin;
        span_ = std::max(w, h) + 2.0 * margin;
        add_polygon(body.vertices(), "#333333", "none", 2.0);
    }

    void add_polygon(const std::vector<Point2>& pts, const std::string& stroke,
                     const std::string& fill, double width) {
        std::ostringstream os;
        os << "  <polygon points=\"";
        for (const auto& p : pts) os << sx(p.x) << "," << sy(p.y) << " ";
        os << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width
           << "\"/>\n";
        elements_.push_back(os.str());
    }

    void add_square(const Square& sq, const std::string& stroke, const std::string& label) {
        const auto v = square_vertices(sq);
        add_polygon({v.begin(), v.end()}, stroke, "none", 1.5);
        legend_.push_back({label, stroke});
    }

    void write(const std::string& path) const {
        std::ofstream out(path);
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << pixels_
            << "\" height=\"" << pixels_ << "\" viewBox=\"0 0 " << pixels_ << " " << pixels_
            << "\">\n"
            << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        for (const auto& e : elements_) out << e;
        int row = 0;
        for (const auto& [label, color] : legend_) {
            out << "  <text x=\"12\" y=\"" << 20 + 18 * row << "\" font-size=\"14\" fill=\""
                << color << "\">" << label << "</text>\n";
            ++row;
        }
        out << "</svg>\n";
    }

  private:
    double sx(double x) const { return (x - xmin_) / span_ * pixels_; }
    double sy(double y) const { return pixels_ - (y - ymin_) / span_ * pixels_; }

    int pixels_;
    double xmin_ = 0.0, ymin_ = 0.0, span_ = 1.0;
    std::vector<std::string> elements_;
    std::vector<std::pair<std::string, std::string>> legend_;
};

}  // namespace squarepeg::svg
