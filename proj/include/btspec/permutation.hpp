// Permutations of {0, ..., degree-1}.

#ifndef BTSPEC_PERMUTATION_HPP_
#define BTSPEC_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace btspec {

class Permutation {
public:
  using point = std::uint32_t;

  Permutation() = default;

  explicit Permutation(std::vector<point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (point p : images_) {
      if (p >= images_.size() || seen[p])
        throw std::invalid_argument("permutation images are not a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<point> v(degree);
    for (std::size_t i = 0; i != degree; ++i)
      v[i] = static_cast<point>(i);
    Permutation p;
    p.images_ = std::move(v);
    return p;
  }

  // Builds a permutation of the given degree from disjoint cycles.
  static Permutation from_cycles(const std::vector<std::vector<point>>& cycles,
                                 std::size_t degree) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i != cyc.size(); ++i) {
        point a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (a >= degree || b >= degree)
          throw std::invalid_argument("cycle point beyond degree");
        if (used[a])
          throw std::invalid_argument("point " + std::to_string(a) +
                                      " appears twice in cycles");
        used[a] = true;
        p.images_[a] = b;
      }
    }
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  point operator()(point i) const { return images_[i]; }
  const std::vector<point>& images() const { return images_; }

  // (a * b)(i) = a(b(i)): b acts first.
  Permutation operator*(const Permutation& rhs) const {
    if (rhs.degree() != degree())
      throw std::invalid_argument("permutation degree mismatch");
    Permutation r;
    r.images_.resize(degree());
    for (std::size_t i = 0; i != degree(); ++i)
      r.images_[i] = images_[rhs.images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(degree());
    for (std::size_t i = 0; i != degree(); ++i)
      r.images_[images_[i]] = static_cast<point>(i);
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i != degree(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  // Same permutation on a larger point set (extra points fixed).
  Permutation extended(std::size_t degree) const {
    Permutation r = identity(degree);
    for (std::size_t i = 0; i != images_.size(); ++i)
      r.images_[i] = images_[i];
    return r;
  }

  std::string cycle_string() const {
    std::string s;
    std::vector<bool> done(degree(), false);
    for (std::size_t i = 0; i != degree(); ++i) {
      if (done[i] || images_[i] == i)
        continue;
      s += '(';
      for (point j = static_cast<point>(i); !done[j]; j = images_[j]) {
        if (j != i) s += ' ';
        s += std::to_string(j);
        done[j] = true;
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<point> images_;
};

} // namespace btspec

#endif
