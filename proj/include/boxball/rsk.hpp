#pragma once

#include <string>
#include <vector>

#include "boxball/partition.hpp"

namespace boxball {

/// Semistandard tableau: rows weakly increase left to right, columns strictly
/// increase top to bottom, row lengths weakly decrease.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);  // validates

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  std::size_t cell_count() const;

  static bool is_semistandard(const std::vector<std::vector<int>>& rows);

  bool operator==(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
  friend Tableau row_insert(Tableau t, int letter);
};

/// Row insertion T <- k: k bumps the leftmost entry strictly greater than it
/// out of row 1, the bumped letter is inserted into row 2, and so on; a letter
/// with nothing greater in its row is appended.
Tableau row_insert(Tableau t, int letter);

/// P(x): the left fold of row insertion over the word's letters.
Tableau p_symbol(const std::vector<int>& word);

Partition shape(const Tableau& t);

std::string to_string(const Tableau& t);

}  // namespace boxball
