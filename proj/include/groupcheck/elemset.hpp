#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace groupcheck::detail {

// Bitset over element indices 0..n-1. Orders stay small (<= 512), so this
// is a handful of words and set algebra is cheap.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}

  template <typename Container>
  static ElemSet of(int n, const Container& elems) {
    ElemSet s(n);
    for (auto e : elems) s.set(static_cast<int>(e));
    return s;
  }

  void set(int i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }

  int count() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : bits_) {
      if (w) return false;
    }
    return true;
  }

  bool contains_all(const ElemSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (other.bits_[i] & ~bits_[i]) return false;
    }
    return true;
  }

  bool intersects(const ElemSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & other.bits_[i]) return true;
    }
    return false;
  }

  ElemSet& operator|=(const ElemSet& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
    return *this;
  }

  ElemSet& operator&=(const ElemSet& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
    return *this;
  }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  template <typename Elem = std::uint16_t>
  std::vector<Elem> to_sorted() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (int i = 0; i < n_; ++i) {
      if (test(i)) out.push_back(static_cast<Elem>(i));
    }
    return out;
  }

  int universe() const { return n_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace groupcheck::detail
