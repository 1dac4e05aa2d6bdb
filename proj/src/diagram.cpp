#include "rotbraid/diagram.hpp"

#include <sstream>

namespace rotbraid {

std::string ascii_diagram(const BraidWord& w) {
  const int n = w.strand_count();
  const int width = 2 * n - 1;
  std::ostringstream os;

  auto bars = [&] {
    std::string row(width, ' ');
    for (int i = 0; i < n; ++i) row[2 * i] = '|';
    os << row << "\n";
  };

  bars();
  for (int letter : w.letters()) {
    int p = std::abs(letter) - 1;  // crossing between columns 2p and 2p+2
    std::string top(width, ' '), mid(width, ' '), bot(width, ' ');
    for (int i = 0; i < n; ++i)
      if (i != p && i != p + 1) top[2 * i] = mid[2 * i] = bot[2 * i] = '|';
    top[2 * p] = '\\';
    top[2 * p + 2] = '/';
    // the strand in front stays unbroken in the middle row; positive means
    // the left strand passes behind, so the front strand runs right-to-left
    mid[2 * p + 1] = letter > 0 ? '/' : '\\';
    bot[2 * p] = '/';
    bot[2 * p + 2] = '\\';
    os << top << "\n" << mid << "\n" << bot << "\n";
    bars();
  }
  return os.str();
}

std::string svg_diagram(const BraidWord& w) {
  const int n = w.strand_count();
  const double dx = 48.0, dy = 56.0, margin = 24.0;
  const double width = margin * 2 + dx * (n - 1);
  const double height = margin * 2 + dy * (w.size() + 1);
  static const char* kColors[] = {"#c0392b", "#2980b9", "#27ae60",
                                  "#8e44ad", "#d35400", "#16a085"};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
     << "\">\n";

  // strand occupying each position, updated letter by letter
  std::vector<int> occupant(n);
  for (int i = 0; i < n; ++i) occupant[i] = i;

  auto x_of = [&](int pos) { return margin + dx * pos; };
  auto y_of = [&](std::size_t row) { return margin + dy * row; };

  std::ostringstream overlay;
  for (std::size_t row = 0; row <= w.size(); ++row) {
    if (row == w.size()) {
      // tail verticals
      for (int pos = 0; pos < n; ++pos)
        os << "  <line x1=\"" << x_of(pos) << "\" y1=\"" << y_of(row) << "\" x2=\""
           << x_of(pos) << "\" y2=\"" << y_of(row) + dy / 2 << "\" stroke=\""
           << kColors[occupant[pos] % 6] << "\" stroke-width=\"3\"/>\n";
      break;
    }
    int letter = w.letters()[row];
    int p = std::abs(letter) - 1;
    for (int pos = 0; pos < n; ++pos) {
      if (pos == p || pos == p + 1) continue;
      os << "  <line x1=\"" << x_of(pos) << "\" y1=\"" << y_of(row) << "\" x2=\""
         << x_of(pos) << "\" y2=\"" << y_of(row + 1) << "\" stroke=\""
         << kColors[occupant[pos] % 6] << "\" stroke-width=\"3\"/>\n";
    }
    // positive: the left-to-right strand passes behind and gets the gap
    double x1 = x_of(p), x2 = x_of(p + 1), y1 = y_of(row), y2 = y_of(row + 1);
    double mx = 0.5 * (x1 + x2), my = 0.5 * (y1 + y2);
    double gx = (x2 - x1) * 0.14, gy = (y2 - y1) * 0.14;
    const char* cl = kColors[occupant[p] % 6];
    const char* cr = kColors[occupant[p + 1] % 6];
    if (letter > 0) {
      os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << mx - gx
         << "\" y2=\"" << my - gy << "\" stroke=\"" << cl << "\" stroke-width=\"3\"/>\n"
         << "  <line x1=\"" << mx + gx << "\" y1=\"" << my + gy << "\" x2=\"" << x2
         << "\" y2=\"" << y2 << "\" stroke=\"" << cl << "\" stroke-width=\"3\"/>\n";
      overlay << "  <line x1=\"" << x2 << "\" y1=\"" << y1 << "\" x2=\"" << x1
              << "\" y2=\"" << y2 << "\" stroke=\"" << cr << "\" stroke-width=\"3\"/>\n";
    } else {
      os << "  <line x1=\"" << x2 << "\" y1=\"" << y1 << "\" x2=\"" << mx + gx
         << "\" y2=\"" << my - gy << "\" stroke=\"" << cr << "\" stroke-width=\"3\"/>\n"
         << "  <line x1=\"" << mx - gx << "\" y1=\"" << my + gy << "\" x2=\"" << x1
         << "\" y2=\"" << y2 << "\" stroke=\"" << cr << "\" stroke-width=\"3\"/>\n";
      overlay << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
              << "\" y2=\"" << y2 << "\" stroke=\"" << cl << "\" stroke-width=\"3\"/>\n";
    }
    os << overlay.str();
    overlay.str("");
    std::swap(occupant[p], occupant[p + 1]);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rotbraid
