#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace submax {

using Point = std::uint16_t;

// Permutation of {0..n-1} stored as an image array.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n);                 // identity
  explicit Perm(std::vector<Point> images);     // validates bijectivity

  std::size_t degree() const { return img_.size(); }
  Point operator[](Point i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;

  // apply *this first, then rhs: (a*b)[i] = b[a[i]]
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  // g^-1 * (*this) * g
  Perm conjugated_by(const Perm& g) const;

  std::uint64_t order() const;
  // multiset of cycle lengths, sorted
  std::vector<std::size_t> cycle_lengths() const;
  std::size_t fixed_point_count() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  struct Hash {
    std::size_t operator()(const Perm& p) const;
  };

 private:
  std::vector<Point> img_;
};

// cycle notation, for diagnostics
std::string perm_to_string(const Perm& p);

}  // namespace submax
