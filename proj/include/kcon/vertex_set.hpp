#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kcon {

using Vertex = int;
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Sorted set of vertex ids in 0..63, stored as a bitmask.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) bits_ |= bit(v);
  }
  static VertexSet from(const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  static constexpr VertexSet range(int n) { return VertexSet(low_bits(n)); }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  constexpr Vertex max() const { return 63 - std::countl_zero(bits_); }

  void insert(Vertex v) { bits_ |= bit(v); }
  void erase(Vertex v) { bits_ &= ~bit(v); }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  class iterator {
  public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Mask m) : m_(m) {}
    constexpr Vertex operator*() const { return std::countr_zero(m_); }
    constexpr iterator& operator++() { m_ &= m_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

  private:
    Mask m_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  // "{0,1,2}"
  std::string str() const;

private:
  Mask bits_ = 0;
};

// Lexicographic comparison of the sorted member lists.
bool lex_less(VertexSet a, VertexSet b);

struct LexLess {
  bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

}  // namespace kcon
