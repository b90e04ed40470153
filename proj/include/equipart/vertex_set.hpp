#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "equipart/errors.hpp"

namespace equipart {

using Vertex = std::size_t;

// Subset of {0, ..., n-1} stored as a dense bit set.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (auto v : members) insert(v);
  }

  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  // Low bits of `mask` as members (universe <= 64).
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const { return n_; }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool contains(Vertex v) const { return v < n_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0; }

  void insert(Vertex v) {
    check(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  void erase(Vertex v) {
    check(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  VertexSet complement() const {
    VertexSet c(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  // |this ∩ other|
  std::size_t intersection_size(const VertexSet& other) const {
    std::size_t c = 0;
    const auto m = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < m; ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  // First 64 members as a mask; only meaningful for universe <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  // "0,2,5"
  std::string to_string() const {
    std::string s;
    for (auto v : members()) {
      if (!s.empty()) s += ',';
      s += std::to_string(v);
    }
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Lexicographic order of the sorted member lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); }

 private:
  void check(Vertex v) const {
    if (v >= n_) throw precondition_error("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_));
  }
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace equipart
