#include "odiam/vertex_set.hpp"

#include <algorithm>
#include <cassert>

namespace odiam {

VertexSet::VertexSet(int universe, std::initializer_list<VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::from(int universe, const std::vector<VertexId>& members) {
  VertexSet s(universe);
  for (VertexId v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::single(int universe, VertexId v) {
  VertexSet s(universe);
  s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  assert(v >= 0 && v < universe());
  bits_[static_cast<std::size_t>(v)] = 1;
}

void VertexSet::erase(VertexId v) {
  assert(v >= 0 && v < universe());
  bits_[static_cast<std::size_t>(v)] = 0;
}

int VertexSet::size() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe() == other.universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && other.bits_[i]) return true;
  }
  return false;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  assert(universe() == other.universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe() == other.universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe() == other.universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe() == other.universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (other.bits_[i]) bits_[i] = 0;
  }
  return *this;
}

}  // namespace odiam
