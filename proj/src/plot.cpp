#include "goodsemi/plot.hpp"

#include <algorithm>
#include <sstream>

#include "goodsemi/errors.hpp"

namespace goodsemi {

namespace {

void require_plane(const IdealFrame& E, const PlotSpec* spec) {
  if (E.dim() != 2 || (spec && spec->window.dim() != 2))
    throw PreconditionError("plots are only drawn for s = 2 (got s = " + std::to_string(E.dim()) + ")");
}

}  // namespace

PlotSpec default_plot(const IdealFrame& E, std::string title) {
  require_plane(E, nullptr);
  return PlotSpec{Box(cmin(E.mu(), Point::zero(2)), cmax(E.gamma(), Point::zero(2)) + Point(2, 2)), std::move(title)};
}

std::string ascii_plot(const IdealFrame& E, const PlotSpec& spec) {
  require_plane(E, &spec);
  const Box& w = spec.window;
  std::size_t cell = 1;
  for (int x : {w.lo[0], w.hi[0]}) cell = std::max(cell, std::to_string(x).size());
  std::size_t label = 1;
  for (int y : {w.lo[1], w.hi[1]}) label = std::max(label, std::to_string(y).size());

  std::ostringstream os;
  if (!spec.title.empty()) os << spec.title << "\n";
  for (int y = w.hi[1]; y >= w.lo[1]; --y) {
    const std::string ys = std::to_string(y);
    os << std::string(label - ys.size(), ' ') << ys << " |";
    for (int x = w.lo[0]; x <= w.hi[0]; ++x)
      os << std::string(cell, ' ') << (E.contains(Point{x, y}) ? '#' : '.');
    os << "\n";
  }
  os << std::string(label, ' ') << " +" << std::string((cell + 1) * static_cast<std::size_t>(w.width(0)), '-') << "\n";
  os << std::string(label + 2, ' ');
  for (int x = w.lo[0]; x <= w.hi[0]; ++x) {
    const std::string xs = std::to_string(x);
    os << std::string(cell + 1 - xs.size(), ' ') << xs;
  }
  os << "\n";
  return os.str();
}

std::string svg_plot(const IdealFrame& E, const PlotSpec& spec) {
  require_plane(E, &spec);
  const Box& w = spec.window;
  const int step = 24, margin = 36, radius = 6;
  const int cols = static_cast<int>(w.width(0)), rows = static_cast<int>(w.width(1));
  const int width = 2 * margin + (cols - 1) * step;
  const int height = 2 * margin + (rows - 1) * step + (spec.title.empty() ? 0 : 20);
  const int top = margin + (spec.title.empty() ? 0 : 20);
  auto px = [&](int x) { return margin + (x - w.lo[0]) * step; };
  auto py = [&](int y) { return top + (w.hi[1] - y) * step; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!spec.title.empty()) {
    std::string t;
    for (char c : spec.title) {
      if (c == '<') t += "&lt;";
      else if (c == '>') t += "&gt;";
      else if (c == '&') t += "&amp;";
      else t += c;
    }
    os << "<text x=\"" << width / 2 << "\" y=\"" << margin / 2 + 8
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << t << "</text>\n";
  }
  // Axes through the origin when it is in the window, else along the edges.
  const int ax = std::clamp(0, w.lo[0], w.hi[0]);
  const int ay = std::clamp(0, w.lo[1], w.hi[1]);
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << px(w.lo[0]) - step / 2 << "\" y1=\"" << py(ay) << "\" x2=\"" << px(w.hi[0]) + step / 2
     << "\" y2=\"" << py(ay) << "\"/>\n";
  os << "<line x1=\"" << px(ax) << "\" y1=\"" << py(w.lo[1]) + step / 2 << "\" x2=\"" << px(ax) << "\" y2=\""
     << py(w.hi[1]) - step / 2 << "\"/>\n";
  os << "</g>\n";
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (int y = w.hi[1]; y >= w.lo[1]; --y)
    for (int x = w.lo[0]; x <= w.hi[0]; ++x)
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << radius << "\" fill=\""
         << (E.contains(Point{x, y}) ? "black" : "white") << "\"/>\n";
  os << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (int x = w.lo[0]; x <= w.hi[0]; ++x)
    os << "<text x=\"" << px(x) << "\" y=\"" << py(w.lo[1]) + 20 << "\">" << x << "</text>\n";
  for (int y = w.lo[1]; y <= w.hi[1]; ++y)
    os << "<text x=\"" << px(w.lo[0]) - 20 << "\" y=\"" << py(y) + 4 << "\">" << y << "</text>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace goodsemi
