#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gcl {

/// Fixed-size bit set over domain points.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static PointSet full(std::size_t size) {
    PointSet s(size);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~0ull;
    s.trim();
    return s;
  }

  static PointSet of(std::size_t size, std::initializer_list<std::size_t> points) {
    PointSet s(size);
    for (auto p : points) s.set(p);
    return s;
  }

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  bool intersects(const PointSet& other) const;
  bool is_subset_of(const PointSet& other) const;

  PointSet operator&(const PointSet& other) const;
  PointSet operator|(const PointSet& other) const;
  PointSet complement() const;
  PointSet set_minus(const PointSet& other) const;

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);

  bool operator==(const PointSet& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }

  std::vector<std::size_t> points() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned b = __builtin_ctzll(bits);
        fn(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gcl
