#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace odiam {

using VertexId = int;
using EdgeId = int;

// Dense membership set over the vertices 0..n-1 of one graph. Iteration is
// always in ascending vertex order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe), 0) {}
  VertexSet(int universe, std::initializer_list<VertexId> members);
  static VertexSet from(int universe, const std::vector<VertexId>& members);
  static VertexSet single(int universe, VertexId v);

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(VertexId v) const {
    return v >= 0 && v < universe() && bits_[static_cast<std::size_t>(v)] != 0;
  }
  void insert(VertexId v);
  void erase(VertexId v);
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<VertexId> members() const;
  bool intersects(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace odiam
