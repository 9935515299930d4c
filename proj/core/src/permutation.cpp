#include "mapcensus/permutation.hpp"

#include <algorithm>
#include <utility>

namespace mapcensus {

Permutation::Permutation(std::vector<Dart> image) : img_(std::move(image)) {
  std::vector<char> seen(img_.size(), 0);
  for (Dart v : img_) {
    if (v < 0 || v >= size() || seen[v])
      throw Error("Permutation: image table is not a bijection of 0.." +
                  std::to_string(size() - 1));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Dart> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Dart> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<Dart>> Permutation::orbits() const {
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<Dart> cyc;
    for (Dart d = s; !seen[d]; d = img_[d]) {
      seen[d] = 1;
      cyc.push_back(d);
    }
    out.push_back(std::move(cyc));
  }
  return out;  // scan order from 0 guarantees least-dart-first, sorted starts
}

int Permutation::orbit_count() const {
  int count = 0;
  std::vector<char> seen(img_.size(), 0);
  for (int s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    ++count;
    for (Dart d = s; !seen[d]; d = img_[d]) seen[d] = 1;
  }
  return count;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < size(); ++i)
    if (img_[img_[i]] != i) return false;
  return true;
}

bool Permutation::is_fixed_point_free() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] == i) return false;
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size())
    throw Error("compose: size mismatch");
  std::vector<Dart> img(outer.size());
  for (int i = 0; i < outer.size(); ++i) img[i] = outer(inner(i));
  return Permutation(std::move(img));
}

}  // namespace mapcensus
