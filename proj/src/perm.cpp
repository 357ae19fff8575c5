#include "submax/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace submax {

Perm::Perm(std::size_t n) : img_(n) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x]) {
      throw std::invalid_argument("Perm: image array is not a bijection");
    }
    seen[x] = true;
  }
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    r.img_[i] = rhs.img_[img_[i]];
  }
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    r.img_[img_[i]] = static_cast<Point>(i);
  }
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  // (g^-1 a g)[i] = g[a[g^-1[i]]]; build directly without forming g^-1
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    r.img_[g.img_[i]] = g.img_[img_[i]];
  }
  return r;
}

std::vector<std::size_t> Perm::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  for (std::size_t len : cycle_lengths()) {
    ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  }
  return ord;
}

std::size_t Perm::fixed_point_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] == i) ++c;
  }
  return c;
}

std::size_t Perm::Hash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::string perm_to_string(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[static_cast<Point>(i)] == i) continue;
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = p[static_cast<Point>(j)];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace submax
