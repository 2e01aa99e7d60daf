#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chieflab {

using Point = std::uint32_t;

/// A bijection of {0..n-1}. Points are 0-based internally; the textual
/// cycle notation is 1-based.
///
/// Products compose left to right: (a * b)(k) = b(a(k)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// 1-based images, as written in cycle notation.
  static Permutation from_one_based(const std::vector<Point>& images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t k) const { return images_[k]; }
  const std::vector<Point>& images() const noexcept { return images_; }
  std::vector<Point> one_based() const;

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;

  /// Disjoint cycle notation, 1-based, "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Parses whitespace-separated disjoint cycles such as "(1 2 3)(4 5)".
/// Points not mentioned are fixed; empty text is the identity.
/// Throws ParseError carrying the character offset of the problem.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace chieflab
