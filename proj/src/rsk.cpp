#include "boxball/rsk.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace boxball {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (!is_semistandard(rows_)) throw std::invalid_argument("not a semistandard tableau");
}

std::size_t Tableau::cell_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool Tableau::is_semistandard(const std::vector<std::vector<int>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;         // rows weakly increase
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;        // columns strictly increase
    }
  }
  return true;
}

Tableau row_insert(Tableau t, int letter) {
  int carry = letter;
  for (auto& row : t.rows_) {
    const auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return t;
    }
    std::swap(carry, *it);  // bump the leftmost entry strictly greater
  }
  t.rows_.push_back({carry});
  return t;
}

Tableau p_symbol(const std::vector<int>& word) {
  Tableau t;
  for (const int letter : word) t = row_insert(std::move(t), letter);
  return t;
}

Partition shape(const Tableau& t) {
  std::vector<int> parts;
  parts.reserve(t.rows().size());
  for (const auto& row : t.rows()) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::string to_string(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace boxball
