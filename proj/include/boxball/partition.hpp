#pragma once

#include <string>
#include <vector>

namespace boxball {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validates monotonicity and positivity

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int part(int k) const;  // 1-based; 0 beyond the last part
  int sum() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Conjugate partition: column lengths of the diagram.
Partition transpose(const Partition& p);

std::string to_string(const Partition& p);

}  // namespace boxball
