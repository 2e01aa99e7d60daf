#include "chieflab/perm.hpp"

#include <cctype>
#include <stdexcept>

#include "chieflab/errors.hpp"

namespace chieflab {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t k = 0; k < degree; ++k) images[k] = static_cast<Point>(k);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point image : images) {
    if (image >= images.size() || seen[image]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[image] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<Point>& images) {
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (Point image : images) {
    if (image == 0) throw std::invalid_argument("point 0 in a 1-based image array");
    zero_based.push_back(image - 1);
  }
  return from_images(std::move(zero_based));
}

std::vector<Point> Permutation::one_based() const {
  std::vector<Point> out(images_);
  for (auto& image : out) ++image;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k]] = static_cast<Point>(k);
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw std::invalid_argument("degree mismatch in product");
  std::vector<Point> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out[k] = rhs.images_[images_[k]];
  return Permutation(std::move(out));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t k = start;
    bool first = true;
    while (!done[k]) {
      done[k] = true;
      if (!first) out += ' ';
      out += std::to_string(k + 1);
      first = false;
      k = images_[k];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t k = 0; k < degree; ++k) images[k] = static_cast<Point>(k);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError(std::string("unexpected character '") + text[i] + "' in cycle", i);
      }
      std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree + 1) value = degree + 1;  // saturate; reported below
        ++i;
      }
      if (value < 1 || value > degree) {
        throw ParseError("point " + std::string(text.substr(start, i - start)) +
                             " out of range 1.." + std::to_string(degree),
                         start);
      }
      Point point = static_cast<Point>(value - 1);
      if (used[point]) {
        throw ParseError("point " + std::to_string(value) + " repeated", start);
      }
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation::from_images(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace chieflab
