#include "sweepmap/render.hpp"

#include <vector>

namespace sweepmap {

namespace {
constexpr int kCellWidth = 4;
}

std::string render_path(const DyckPath& path) {
  const int n = path.n();
  const int width = 2 * n * kCellWidth + 1;
  const int height = 2 * n + 1;
  std::vector<std::string> canvas(height, std::string(width, ' '));
  auto cell = [&](int x, int y) -> char& {
    return canvas[2 * (n - y)][x * kCellWidth];
  };

  for (int y = 0; y <= n; ++y) {
    for (int x = 0; x <= 2 * n; ++x) {
      const int level = 2 * y - x;  // in units of n
      if (level > 0) cell(x, y) = '.';
      else if (level == 0) cell(x, y) = '~';
    }
  }

  int x = 0;
  int y = 0;
  cell(x, y) = '+';
  for (char step : path.word()) {
    if (step == 'N') {
      canvas[2 * (n - y) - 1][x * kCellWidth] = '|';
      ++y;
    } else {
      for (int k = 1; k < kCellWidth; ++k) {
        canvas[2 * (n - y)][x * kCellWidth + k] = '-';
      }
      ++x;
    }
    cell(x, y) = '+';
  }

  std::string out;
  for (auto& row : canvas) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace sweepmap
