#include "robintri/svg.hpp"

#include <sstream>

namespace robintri {

namespace {
constexpr double kWidth = 800.0, kHeight = 500.0;
constexpr double kMarginLeft = 70.0, kMarginRight = 20.0;
constexpr double kMarginTop = 30.0, kMarginBottom = 45.0;
} // namespace

SvgPlot::SvgPlot(double xmin, double xmax, double ymin, double ymax)
    : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax) {}

double SvgPlot::px(double x) const {
  return kMarginLeft +
         (x - xmin_) / (xmax_ - xmin_) * (kWidth - kMarginLeft - kMarginRight);
}

double SvgPlot::py(double y) const {
  return kHeight - kMarginBottom -
         (y - ymin_) / (ymax_ - ymin_) *
             (kHeight - kMarginTop - kMarginBottom);
}

void SvgPlot::add_scatter(const std::vector<std::pair<double, double>>& pts,
                          const std::string& color, double radius) {
  std::ostringstream os;
  for (const auto& [x, y] : pts)
    os << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\""
       << radius << "\" fill=\"" << color << "\"/>\n";
  layers_.push_back(os.str());
}

void SvgPlot::add_line(const std::vector<std::pair<double, double>>& pts,
                       const std::string& color, double width) {
  std::ostringstream os;
  os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
     << width << "\" points=\"";
  for (const auto& [x, y] : pts) os << px(x) << "," << py(y) << " ";
  os << "\"/>\n";
  layers_.push_back(os.str());
}

void SvgPlot::add_hline(double y, const std::string& color) {
  add_line({{xmin_, y}, {xmax_, y}}, color, 1.5);
}

std::string SvgPlot::render() const {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
     << kHeight << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  os << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom
     << "\" x2=\"" << kWidth - kMarginRight << "\" y2=\""
     << kHeight - kMarginBottom << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop
     << "\" x2=\"" << kMarginLeft << "\" y2=\"" << kHeight - kMarginBottom
     << "\" stroke=\"black\"/>\n";
  // numeric corner labels
  os << "  <text x=\"" << kMarginLeft << "\" y=\"" << kHeight - 25
     << "\" font-size=\"12\">" << xmin_ << "</text>\n";
  os << "  <text x=\"" << kWidth - kMarginRight - 40 << "\" y=\""
     << kHeight - 25 << "\" font-size=\"12\">" << xmax_ << "</text>\n";
  os << "  <text x=\"8\" y=\"" << kHeight - kMarginBottom
     << "\" font-size=\"12\">" << ymin_ << "</text>\n";
  os << "  <text x=\"8\" y=\"" << kMarginTop + 10 << "\" font-size=\"12\">"
     << ymax_ << "</text>\n";
  if (!title_.empty())
    os << "  <text x=\"" << kWidth / 2 - 100 << "\" y=\"18\" font-size=\"14\">"
       << title_ << "</text>\n";
  for (const auto& layer : layers_) os << layer;
  os << "</svg>\n";
  return os.str();
}

} // namespace robintri
