#include "chieflab/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "chieflab/errors.hpp"

namespace chieflab {

GroupPtr Group::generate(const std::vector<Permutation>& gens, std::size_t degree, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("element cap must be positive");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator of degree " + std::to_string(g.degree()) +
                                  " in a group of degree " + std::to_string(degree));
    }
  }
  auto group = std::make_shared<Group>(Token{}, degree, gens);
  group->enumerate(cap);
  group->build_tables();
  return group;
}

Group::Group(Token, std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree), generators_(std::move(gens)) {}

void Group::enumerate(std::size_t cap) {
  const std::size_t k = generators_.size();
  elements_.push_back(Permutation::identity(degree_));
  index_.emplace(elements_.back(), 0);
  parent_.push_back(0);
  via_.push_back(0);

  for (std::size_t x = 0; x < elements_.size(); ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation y = elements_[x] * generators_[s];
      auto it = index_.find(y);
      Elem yi;
      if (it == index_.end()) {
        if (elements_.size() >= cap) {
          throw ResourceCapError("group order exceeds cap " + std::to_string(cap) + " (reached " +
                                     std::to_string(elements_.size() + 1) + " elements)",
                                 elements_.size() + 1);
        }
        yi = static_cast<Elem>(elements_.size());
        index_.emplace(y, yi);
        elements_.push_back(std::move(y));
        parent_.push_back(static_cast<Elem>(x));
        via_.push_back(s);
      } else {
        yi = it->second;
      }
      right_.push_back(yi);
    }
  }
  generator_index_.resize(k);
  for (std::size_t s = 0; s < k; ++s) generator_index_[s] = right_[s];
}

void Group::build_tables() {
  const std::size_t n = order();
  inverse_.resize(n);
  for (Elem x = 0; x < n; ++x) inverse_[x] = index_.at(elements_[x].inverse());

  if (n > kTableLimit) return;
  table_.resize(n * n);
  for (Elem x = 0; x < n; ++x) {
    Elem* row = &table_[static_cast<std::size_t>(x) * n];
    row[0] = x;
    for (Elem y = 1; y < n; ++y) row[y] = right(row[parent_[y]], via_[y]);
  }
}

std::optional<Elem> Group::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Group::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  // Walk the generator word of b down the breadth-first tree.
  Elem word[64];
  std::size_t len = 0;
  std::vector<Elem> spill;
  for (Elem y = b; y != 0; y = parent_[y]) {
    if (len < 64) {
      word[len++] = y;
    } else {
      spill.push_back(y);
    }
  }
  Elem acc = a;
  for (auto it = spill.rbegin(); it != spill.rend(); ++it) acc = right(acc, via_[*it]);
  while (len > 0) acc = right(acc, via_[word[--len]]);
  return acc;
}

Elem Group::pow(Elem x, long long k) const {
  if (k < 0) {
    x = inverse_[x];
    k = -k;
  }
  Elem result = 0;
  Elem base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

const std::vector<std::size_t>& Group::element_orders() const {
  std::call_once(orders_once_, [this] {
    orders_.assign(order(), 0);
    orders_[0] = 1;
    for (Elem x = 1; x < order(); ++x) {
      if (orders_[x] != 0) continue;
      std::size_t k = 1;
      Elem y = x;
      while (y != 0) {
        y = mul(y, x);
        ++k;
      }
      orders_[x] = k;
    }
  });
  return orders_;
}

std::size_t Group::element_order(Elem x) const {
  if (x >= order()) throw std::out_of_range("element index out of range");
  return element_orders()[x];
}

const std::vector<std::vector<Elem>>& Group::conjugacy_classes() const {
  std::call_once(classes_once_, [this] {
    std::vector<bool> seen(order(), false);
    for (Elem x = 0; x < order(); ++x) {
      if (seen[x]) continue;
      std::vector<Elem> cls{x};
      seen[x] = true;
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (Elem g : generator_index_) {
          Elem y = conj(cls[i], g);
          if (!seen[y]) {
            seen[y] = true;
            cls.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
  });
  return classes_;
}

ElementSet Group::full_set() const {
  ElementSet s(order());
  for (Elem x = 0; x < order(); ++x) s.set(x);
  return s;
}

bool Group::is_abelian() const {
  for (Elem a : generator_index_) {
    for (Elem b : generator_index_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

}  // namespace chieflab
