#include "submax/permgroup.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace submax {

std::uint64_t element_cap() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("SUBMAX_CAP_ELEMENTS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{200000};
  }();
  return cap;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.degree() != degree_) {
      throw std::invalid_argument("PermGroup: generator degree mismatch");
    }
  }
  schreier_sims();
  order_ = 1;
  for (const auto& lvl : levels_) order_ *= lvl.orbit.size();
}

void PermGroup::extend_orbit(Level& level) {
  if (level.where.empty()) {
    level.where.assign(degree_, -1);
    level.where[level.base_point] = 0;
    level.orbit = {level.base_point};
    level.transversal = {Perm(degree_)};
  }
  for (std::size_t slot = 0; slot < level.orbit.size(); ++slot) {
    const Point beta = level.orbit[slot];
    for (const Perm& s : level.gens) {
      const Point gamma = s[beta];
      if (level.where[gamma] < 0) {
        level.where[gamma] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(gamma);
        level.transversal.push_back(level.transversal[slot] * s);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(const Perm& g) const {
  Perm h = g;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (h.is_identity()) return {h, i};
    const Point beta = h[levels_[i].base_point];
    const std::int32_t slot = levels_[i].where.empty() ? -1 : levels_[i].where[beta];
    if (slot < 0) return {h, i};
    h = h * levels_[i].transversal[slot].inverse();
  }
  return {h, levels_.size()};
}

void PermGroup::add_generator_at(const Perm& g, std::size_t level) {
  if (level == levels_.size()) {
    Point bp = 0;
    for (std::size_t x = 0; x < degree_; ++x) {
      if (g[static_cast<Point>(x)] != x) {
        bp = static_cast<Point>(x);
        break;
      }
    }
    levels_.push_back(Level{bp, {}, {}, {}, {}});
    base_.push_back(bp);
  }
  levels_[level].gens.push_back(g);
  extend_orbit(levels_[level]);
}

void PermGroup::schreier_sims() {
  // Seed level 0 with the non-identity input generators.
  for (const Perm& g : gens_) {
    if (!g.is_identity()) add_generator_at(g, 0);
  }
  if (levels_.empty()) return;

  // Verify every Schreier generator sifts through the deeper levels; add the
  // residues as strong generators until the chain is closed.
  std::size_t i = levels_.size() - 1;
  while (true) {
    bool changed = false;
    Level& lvl = levels_[i];
    for (std::size_t slot = 0; slot < lvl.orbit.size() && !changed; ++slot) {
      for (const Perm& s : lvl.gens) {
        const Point gamma = s[lvl.orbit[slot]];
        const Perm schreier = lvl.transversal[slot] * s *
                              lvl.transversal[lvl.where[gamma]].inverse();
        if (schreier.is_identity()) continue;
        // sift through levels below i
        Perm h = schreier;
        std::size_t j = i + 1;
        for (; j < levels_.size(); ++j) {
          const Point b = h[levels_[j].base_point];
          const std::int32_t sl = levels_[j].where[b];
          if (sl < 0) break;
          h = h * levels_[j].transversal[sl].inverse();
          if (h.is_identity()) break;
        }
        if (h.is_identity()) continue;
        const std::size_t target = j < levels_.size() ? j : levels_.size();
        for (std::size_t l = i + 1; l <= target && l < levels_.size(); ++l) {
          levels_[l].gens.push_back(h);
          extend_orbit(levels_[l]);
        }
        if (target == levels_.size()) add_generator_at(h, target);
        i = target;
        changed = true;
        break;
      }
    }
    if (!changed) {
      if (i == 0) break;
      --i;
    }
  }
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, reached] = sift(p);
  return residue.is_identity();
}

namespace {
void enumerate_rec(const std::vector<std::vector<Perm>>& transversals,
                   std::size_t level, const Perm& prefix,
                   std::vector<Perm>& out) {
  if (level == static_cast<std::size_t>(-1)) {
    out.push_back(prefix);
    return;
  }
  for (const Perm& u : transversals[level]) {
    enumerate_rec(transversals, level - 1, prefix * u, out);
  }
}
}  // namespace

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap) throw cap_exceeded("materialization", order_);
  std::vector<Perm> out;
  out.reserve(order_);
  if (levels_.empty()) {
    out.push_back(Perm(degree_));
    return out;
  }
  std::vector<std::vector<Perm>> transversals;
  for (const auto& lvl : levels_) transversals.push_back(lvl.transversal);
  enumerate_rec(transversals, levels_.size() - 1, Perm(degree_), out);
  std::sort(out.begin(), out.end());
  assert(out.size() == order_);
  return out;
}

std::vector<Point> PermGroup::orbit_of(Point x) const {
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orbit{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : gens_) {
      Point y = g[orbit[i]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::size_t> lengths;
  for (std::size_t x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit_of(static_cast<Point>(x));
    for (Point y : orb) seen[y] = true;
    lengths.push_back(orb.size());
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && orbit_of(0).size() == degree_;
}

}  // namespace submax
