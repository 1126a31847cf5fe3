// Dynamic bitset over the element indices of a finite group.

#ifndef BTSPEC_ELEMENT_SET_HPP_
#define BTSPEC_ELEMENT_SET_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace btspec {

using ElementId = std::uint32_t;

class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
    : n_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_)
      c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i != words_.size(); ++i)
      if (words_[i] & ~o.words_[i])
        return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i != words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i != words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  bool operator==(const ElementSet& o) const = default;

  template<typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w != words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<ElementId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<ElementId> members() const {
    std::vector<ElementId> out;
    out.reserve(count());
    for_each([&](ElementId e) { out.push_back(e); });
    return out;
  }

  // Lowest index in the symmetric difference, or universe() if equal.
  std::size_t first_difference(const ElementSet& o) const {
    for (std::size_t w = 0; w != words_.size(); ++w)
      if (std::uint64_t x = words_[w] ^ o.words_[w])
        return w * 64 + std::countr_zero(x);
    return n_;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  // 16 hex digits per 64-bit word, word 0 first; bit i is element i.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(words_.size() * 16);
    for (std::uint64_t w : words_)
      for (int shift = 60; shift >= 0; shift -= 4)
        s.push_back(digits[(w >> shift) & 15]);
    return s;
  }

  static ElementSet from_hex(const std::string& hex, std::size_t universe) {
    ElementSet e(universe);
    if (hex.size() != e.words_.size() * 16)
      throw std::invalid_argument("bitset hex has wrong length");
    for (std::size_t w = 0; w != e.words_.size(); ++w) {
      std::uint64_t v = 0;
      for (std::size_t k = 0; k != 16; ++k) {
        char c = hex[w * 16 + k];
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else throw std::invalid_argument("bad hex digit in bitset");
        v = (v << 4) | std::uint64_t(d);
      }
      e.words_[w] = v;
    }
    if (universe % 64 != 0 && !e.words_.empty() &&
        (e.words_.back() >> (universe % 64)) != 0)
      throw std::invalid_argument("bitset has bits beyond its universe");
    return e;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Canonical total order on sets: by cardinality, then lexicographically on
// the ascending member lists.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb)
    return ca < cb;
  std::size_t d = a.first_difference(b);
  if (d == a.universe())
    return false;
  return a.test(d);
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace btspec

#endif
