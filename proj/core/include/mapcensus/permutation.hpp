#pragma once

#include <vector>

#include "mapcensus/error.hpp"

namespace mapcensus {

// Darts are dense integers 0..n-1.
using Dart = int;

// A permutation of {0..n-1}, stored as its image table.
class Permutation {
public:
  explicit Permutation(std::vector<Dart> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  Dart operator()(Dart d) const { return img_[d]; }
  const std::vector<Dart>& image() const { return img_; }

  Permutation inverse() const;

  // Orbit decomposition; each orbit is listed starting from its least dart,
  // and the orbits are sorted by that least dart.
  std::vector<std::vector<Dart>> orbits() const;
  int orbit_count() const;

  bool is_involution() const;        // p∘p == id
  bool is_fixed_point_free() const;  // p(d) != d for all d

  bool operator==(const Permutation&) const = default;

private:
  std::vector<Dart> img_;
};

// Function composition: compose(a, b)(d) == a(b(d)).
Permutation compose(const Permutation& outer, const Permutation& inner);

}  // namespace mapcensus
