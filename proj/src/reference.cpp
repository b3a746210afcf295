#include "sbound/reference.hpp"

#include <array>
#include <cmath>

namespace sbound::reference {
namespace {

constexpr std::array<TableRow, 8> kTable = {{
    {1e10, 0.1974, 6.132, 0.170, 5.912, 0.170, 7.968},
    {1e12, 0.1902, 6.844, 0.162, 6.67, 0.162, 8.644},
    {1e14, 0.1847, 7.543, 0.156, 7.395, 0.156, 9.298},
    {1e16, 0.1804, 8.233, 0.152, 8.122, 0.152, 9.932},
    {1e18, 0.1768, 8.916, 0.148, 8.797, 0.148, 10.56},
    {1e20, 0.1738, 9.594, 0.145, 9.47, 0.145, 11.17},
    {1e40, 0.159, 16.21, 0.131, 15.78, 0.126, 17.26},
    {1e60, 0.153, 22.70, 0.126, 21.69, 0.119, 22.44},
}};

}  // namespace

std::span<const TableRow> comparison_table() { return kTable; }

std::optional<TableRow> find_row(double t0) {
  for (const auto& row : kTable)
    if (std::abs(row.t0 - t0) <= 1e-9 * row.t0) return row;
  return std::nullopt;
}

}  // namespace sbound::reference
