#include "wbinom/svg.hpp"

#include <algorithm>
#include <sstream>

namespace wb {

namespace {

constexpr double unit = 32.0;
constexpr double margin = 24.0;

struct Box {
  int x0, y0, x1, y1;
  double width() const { return (x1 - x0) * unit + 2 * margin; }
  double height() const { return (y1 - y0) * unit + 2 * margin + 18; }
};

Box bounds(const HybridPath& p) {
  Box b{std::min(0, p.start.x), std::min(0, p.start.y), std::max(0, p.start.x), std::max(0, p.start.y)};
  auto grow = [&](int x, int y) {
    b.x0 = std::min(b.x0, x);
    b.x1 = std::max(b.x1, x);
    b.y0 = std::min(b.y0, y);
    b.y1 = std::max(b.y1, y);
  };
  Point at = p.start;
  for (Step s : p.steps) {
    switch (s) {
      case Step::N: ++at.y; break;
      case Step::S: --at.y; break;
      case Step::E: ++at.x; break;
      case Step::W: --at.x; break;
      case Step::ES: ++at.x, --at.y; grow(at.x, at.y + 1); break;
      case Step::NW: --at.x, ++at.y; grow(at.x + 1, at.y); break;
    }
    grow(at.x, at.y);
  }
  for (const auto& c : area_cells(p)) grow(c.s, c.t), grow(c.s - 1, c.t - 1);
  return b;
}

class Panel {
 public:
  Panel(std::ostringstream& os, Box box, double ox, double oy) : os_(os), box_(box), ox_(ox), oy_(oy) {}

  double X(double x) const { return ox_ + margin + (x - box_.x0) * unit; }
  double Y(double y) const { return oy_ + margin + (box_.y1 - y) * unit; }

  void draw(const HybridPath& p) {
    for (int x = box_.x0; x <= box_.x1; ++x)
      line(X(x), Y(box_.y0), X(x), Y(box_.y1), x == 0 ? "#888" : "#ddd", x == 0 ? 1.5 : 1);
    for (int y = box_.y0; y <= box_.y1; ++y)
      line(X(box_.x0), Y(y), X(box_.x1), Y(y), y == 0 ? "#888" : "#ddd", y == 0 ? 1.5 : 1);

    for (const auto& c : area_cells(p)) {
      const char* fill = c.exponent > 0 ? "#9ecae1" : c.exponent < 0 ? "#fdae6b" : "#eeeeee";
      os_ << "<rect x=\"" << X(c.s - 1) << "\" y=\"" << Y(c.t) << "\" width=\"" << unit << "\" height=\"" << unit
          << "\" fill=\"" << fill << "\" fill-opacity=\"0.7\"" << (c.negative_corner ? " stroke=\"#b00\" stroke-dasharray=\"3 2\"" : "")
          << "/>\n";
      os_ << "<text x=\"" << X(c.s - 0.5) << "\" y=\"" << Y(c.t - 0.5) + 3
          << "\" font-size=\"8\" text-anchor=\"middle\" fill=\"#333\">" << c.s << "," << c.t << "</text>\n";
    }

    std::ostringstream d;
    Point at = p.start;
    d << "M " << X(at.x) << " " << Y(at.y);
    const double r = 0.3;
    for (Step s : p.steps) {
      switch (s) {
        case Step::N: ++at.y; break;
        case Step::S: --at.y; break;
        case Step::E: ++at.x; break;
        case Step::W: --at.x; break;
        case Step::ES:
          d << " L " << X(at.x + 1 - r) << " " << Y(at.y) << " Q " << X(at.x + 1) << " " << Y(at.y) << " "
            << X(at.x + 1) << " " << Y(at.y - r);
          ++at.x, --at.y;
          break;
        case Step::NW:
          d << " L " << X(at.x) << " " << Y(at.y + 1 - r) << " Q " << X(at.x) << " " << Y(at.y + 1) << " "
            << X(at.x - r) << " " << Y(at.y + 1);
          --at.x, ++at.y;
          break;
      }
      d << " L " << X(at.x) << " " << Y(at.y);
    }
    os_ << "<path d=\"" << d.str() << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2.5\" stroke-linejoin=\"round\"/>\n";
    os_ << "<circle cx=\"" << X(p.start.x) << "\" cy=\"" << Y(p.start.y) << "\" r=\"3\"/>\n";
    os_ << "<circle cx=\"" << X(at.x) << "\" cy=\"" << Y(at.y) << "\" r=\"3\" fill=\"#c00\"/>\n";
    os_ << "<text x=\"" << ox_ + margin << "\" y=\"" << Y(box_.y0) + 16 << "\" font-size=\"10\" font-family=\"monospace\">"
        << (p.steps.empty() ? "(empty)" : step_string(p)) << "</text>\n";
  }

 private:
  void line(double x0, double y0, double x1, double y1, const char* color, double width) {
    os_ << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1 << "\" stroke=\"" << color
        << "\" stroke-width=\"" << width << "\"/>\n";
  }

  std::ostringstream& os_;
  Box box_;
  double ox_, oy_;
};

void header(std::ostringstream& os, double w, double h) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << " " << h << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_svg(const HybridPath& p) {
  std::ostringstream os;
  Box b = bounds(p);
  header(os, b.width(), b.height());
  Panel(os, b, 0, 0).draw(p);
  os << "</svg>\n";
  return os.str();
}

std::string render_svg_grid(const std::vector<HybridPath>& paths, int columns) {
  columns = std::max(columns, 1);
  std::ostringstream os;
  if (paths.empty()) {
    header(os, 2 * margin, 2 * margin);
    os << "</svg>\n";
    return os.str();
  }
  // common box so panels line up
  Box b = bounds(paths.front());
  for (const auto& p : paths) {
    Box o = bounds(p);
    b = {std::min(b.x0, o.x0), std::min(b.y0, o.y0), std::max(b.x1, o.x1), std::max(b.y1, o.y1)};
  }
  int n = static_cast<int>(paths.size());
  int cols = std::min(columns, n), rows = (n + cols - 1) / cols;
  header(os, cols * b.width(), rows * b.height());
  for (int i = 0; i < n; ++i) Panel(os, b, (i % cols) * b.width(), (i / cols) * b.height()).draw(paths[i]);
  os << "</svg>\n";
  return os.str();
}

}  // namespace wb
