#ifndef ROBINTRI_SVG_HPP
#define ROBINTRI_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace robintri {

/// Minimal static SVG plotter: fixed 800x500 viewport, linear axes, scatter
/// and polyline layers. No external plotting dependency.
class SvgPlot {
public:
  SvgPlot(double xmin, double xmax, double ymin, double ymax);

  void add_scatter(const std::vector<std::pair<double, double>>& pts,
                   const std::string& color = "black", double radius = 1.5);
  void add_line(const std::vector<std::pair<double, double>>& pts,
                const std::string& color = "red", double width = 1.5);
  void add_hline(double y, const std::string& color = "red");
  void set_title(const std::string& title) { title_ = title; }

  std::string render() const;

private:
  double px(double x) const;
  double py(double y) const;

  double xmin_, xmax_, ymin_, ymax_;
  std::string title_;
  std::vector<std::string> layers_;
};

} // namespace robintri

#endif // ROBINTRI_SVG_HPP
