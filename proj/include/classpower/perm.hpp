#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "classpower/errors.hpp"

namespace classpower {

using Point = std::uint16_t;

/// Permutation of the points 0..degree-1, stored as its image list.
///
/// Composition is "left then right": (a * b)(x) = b(a(x)), so permutations
/// act on points from the right and products read left to right.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    check_bijection();
  }

  static Perm identity(std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    return Perm(std::move(img), NoCheck{});
  }

  /// Build from disjoint-cycle notation; points absent from the cycles are fixed.
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<Point>> cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (const auto& cyc : cycles) {
      const Point* c = cyc.begin();
      std::size_t m = cyc.size();
      for (std::size_t i = 0; i < m; ++i) img[c[i]] = c[(i + 1) % m];
    }
    return Perm(std::move(img));
  }

  std::size_t degree() const { return images_.size(); }

  Point apply(Point x) const { return images_[x]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// (a * b)(x) = b(a(x)).
  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw DegreeMismatch("composing permutations of different degree");
    std::vector<Point> img(a.degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.images_[a.images_[i]];
    return Perm(std::move(img), NoCheck{});
  }

  Perm inverse() const {
    std::vector<Point> img(degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<Point>(i);
    return Perm(std::move(img), NoCheck{});
  }

  const std::vector<Point>& images() const { return images_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  struct NoCheck {};
  Perm(std::vector<Point> images, NoCheck) : images_(std::move(images)) {}

  void check_bijection() const {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) throw Error("image list is not a bijection");
      seen[p] = true;
    }
  }

  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    // FNV-1a over the image bytes
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace classpower
