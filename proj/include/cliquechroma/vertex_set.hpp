#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cliquechroma {

using Vertex = std::uint32_t;

/// Fixed-width bitset over the vertices {0,...,width-1}.
///
/// Bits past `width` in the last word are kept clear, so word-level
/// popcounts and comparisons never see stray bits.
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t width) : width_(width), words_(word_count(width), 0) {}
  VertexSet(std::size_t width, std::initializer_list<Vertex> members) : VertexSet(width) {
    for (Vertex v : members)
      insert(v);
  }

  static VertexSet full(std::size_t width) {
    VertexSet s(width);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
  }

  /// The set {0,...,count-1} inside a universe of `width` vertices.
  static VertexSet prefix(std::size_t width, std::size_t count) {
    assert(count <= width);
    VertexSet s(width);
    for (std::size_t w = 0; w < count / kWordBits; ++w)
      s.words_[w] = ~Word{0};
    if (count % kWordBits)
      s.words_[count / kWordBits] = (Word{1} << (count % kWordBits)) - 1;
    return s;
  }

  static std::size_t word_count(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

  std::size_t width() const noexcept { return width_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool contains(Vertex v) const {
    assert(v < width_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) {
    assert(v < width_);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    assert(v < width_);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t size() const {
    std::size_t c = 0;
    for (Word w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Smallest member >= from, or width() when there is none.
  Vertex next(Vertex from) const {
    std::size_t wi = from / kWordBits;
    if (wi >= words_.size())
      return static_cast<Vertex>(width_);
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w)
        return static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi == words_.size())
        return static_cast<Vertex>(width_);
      w = words_[wi];
    }
  }
  Vertex first() const { return next(0); }

  template <class F> void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet &operator&=(const VertexSet &o) {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet &operator|=(const VertexSet &o) {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet &operator-=(const VertexSet &o) {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  std::size_t intersection_size(const VertexSet &o) const {
    assert(width_ == o.width_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool intersects(const VertexSet &o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i])
        return true;
    return false;
  }
  bool is_subset_of(const VertexSet &o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i])
        return false;
    return true;
  }

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  void trim() {
    if (width_ % kWordBits && !words_.empty())
      words_.back() &= (Word{1} << (width_ % kWordBits)) - 1;
  }

  std::size_t width_ = 0;
  std::vector<Word> words_;
};

} // namespace cliquechroma
