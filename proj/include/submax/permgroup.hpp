#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "submax/perm.hpp"

namespace submax {

class cap_exceeded : public std::runtime_error {
 public:
  cap_exceeded(const std::string& cap_name, std::uint64_t offending)
      : std::runtime_error("cap exceeded: " + cap_name + " (size " +
                           std::to_string(offending) + ")"),
        cap_name(cap_name),
        offending(offending) {}
  std::string cap_name;
  std::uint64_t offending;
};

// Materialisation cap; SUBMAX_CAP_ELEMENTS overrides the default 200000.
std::uint64_t element_cap();

// Permutation group with a base and strong generating set, built by a
// deterministic Schreier-Sims run (base points chosen as first moved points).
// Membership testing and order are exact.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Point>& base() const { return base_; }

  bool contains(const Perm& p) const;

  // Complete sorted element list; throws cap_exceeded beyond the cap.
  std::vector<Perm> elements(std::uint64_t cap = element_cap()) const;

  // Orbit of a point under the group generators.
  std::vector<Point> orbit_of(Point x) const;
  std::vector<std::size_t> orbit_lengths() const;
  bool is_transitive() const;

 private:
  struct Level {
    Point base_point;
    std::vector<Perm> gens;            // strong generators fixing earlier base points
    std::vector<std::int32_t> where;   // point -> slot in orbit, -1 outside
    std::vector<Point> orbit;
    std::vector<Perm> transversal;     // transversal[slot] maps base_point -> orbit[slot]
  };

  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::uint64_t order_;

  void schreier_sims();
  void extend_orbit(Level& level);
  // returns (residue, level index where sifting stopped)
  std::pair<Perm, std::size_t> sift(const Perm& g) const;
  void add_generator_at(const Perm& g, std::size_t level);
};

}  // namespace submax
