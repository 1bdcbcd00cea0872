#include "boxball/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace boxball {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must weakly decrease");
    }
  }
}

int Partition::part(int k) const {
  if (k < 1) throw std::invalid_argument("partition rows are 1-based");
  return k <= static_cast<int>(parts_.size()) ? parts_[static_cast<std::size_t>(k) - 1] : 0;
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition transpose(const Partition& p) {
  std::vector<int> cols;
  if (!p.parts().empty()) {
    cols.assign(static_cast<std::size_t>(p.parts().front()), 0);
    for (const int part : p.parts()) {
      for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(cols));
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

}  // namespace boxball
