#include "gcl/point_set.hpp"

#include <stdexcept>

namespace gcl {

void PointSet::trim() {
  std::size_t tail = size_ & 63;
  if (tail && !words_.empty()) words_.back() &= (1ull << tail) - 1;
}

std::size_t PointSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += __builtin_popcountll(w);
  return n;
}

bool PointSet::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

bool PointSet::intersects(const PointSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

PointSet PointSet::operator&(const PointSet& other) const {
  PointSet r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  return r;
}

PointSet PointSet::operator|(const PointSet& other) const {
  PointSet r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
  return r;
}

PointSet PointSet::complement() const {
  PointSet r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  r.trim();
  return r;
}

PointSet PointSet::set_minus(const PointSet& other) const {
  PointSet r(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~other.words_[i];
  return r;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<std::size_t> PointSet::points() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t p) { out.push_back(p); });
  return out;
}

}  // namespace gcl
