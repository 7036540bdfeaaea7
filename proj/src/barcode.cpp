#include "phax/barcode.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace phax {

namespace {

struct Cell {
  FiltValue value;
  int degree;
  bool cone;
  Simplex simplex;
};

bool cell_less(const Cell& a, const Cell& b) {
  return std::tie(a.value, a.degree, a.cone, a.simplex) < std::tie(b.value, b.degree, b.cone, b.simplex);
}

using Column = std::map<std::size_t, std::uint32_t>;  // sparse, row -> coefficient

void axpy(const Field& F, Column& y, std::uint32_t c, const Column& x) {
  for (const auto& [r, v] : x) {
    std::uint32_t nv = F.add(y[r], F.mul(c, v));
    if (nv) y[r] = nv;
    else y.erase(r);
  }
}

} // namespace

std::vector<Bar> barcode(const Field& F, const RelativeFilteredPair& pair) {
  std::vector<Cell> cells;
  for (const auto& [s, v] : pair.total().support()) cells.push_back({v, dim(s), false, s});
  for (const auto& [s, v] : pair.sub().support()) cells.push_back({v, dim(s) + 1, true, s});
  std::sort(cells.begin(), cells.end(), cell_less);

  std::map<std::pair<bool, Simplex>, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index[{cells[i].cone, cells[i].simplex}] = i;

  std::vector<Column> cols(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const Cell& c = cells[j];
    Column& col = cols[j];
    if (c.cone) {
      // d(c s) = s - c(d s)
      col[index.at({false, c.simplex})] = 1;
      if (c.simplex.size() > 1)
        for (std::size_t k = 0; k < c.simplex.size(); ++k)
          col[index.at({true, facet(c.simplex, k)})] = F.from_int(k % 2 ? 1 : -1);
    } else if (c.simplex.size() > 1) {
      for (std::size_t k = 0; k < c.simplex.size(); ++k)
        col[index.at({false, facet(c.simplex, k)})] = F.from_int(k % 2 ? -1 : 1);
    }
  }

  std::map<std::size_t, std::size_t> low_owner;  // pivot row -> column
  std::vector<bool> paired(cells.size(), false);
  std::vector<Bar> bars;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    Column& col = cols[j];
    while (!col.empty()) {
      std::size_t low = col.rbegin()->first;
      auto it = low_owner.find(low);
      if (it == low_owner.end()) break;
      const Column& other = cols[it->second];
      std::uint32_t c = F.neg(F.mul(col.at(low), F.inv(other.at(low))));
      axpy(F, col, c, other);
    }
    if (col.empty()) continue;
    std::size_t low = col.rbegin()->first;
    low_owner[low] = j;
    paired[low] = paired[j] = true;
    if (cells[low].value < cells[j].value)
      bars.push_back({cells[low].degree, cells[low].value, cells[j].value});
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!paired[i] && cols[i].empty()) bars.push_back({cells[i].degree, cells[i].value, FiltValue::inf()});
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    return std::tie(a.degree, a.birth, a.death) < std::tie(b.degree, b.birth, b.death);
  });
  return bars;
}

std::size_t bars_alive(const std::vector<Bar>& bars, int n, const Interval& I) {
  return static_cast<std::size_t>(std::count_if(bars.begin(), bars.end(), [&](const Bar& b) {
    return b.degree == n && b.birth <= I.lo && b.death > I.hi;
  }));
}

} // namespace phax
