#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pvc {

// Vertex subsets are bit masks that grow in 64-bit words. Bit i is the
// 0-based internal vertex i; everything user facing prints 1-based indices.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Largest vertex count accepted anywhere in the library.
inline constexpr int kMaxVertices = 4096;

inline VertexSet make_set(int universe, std::span<const int> members) {
  VertexSet s(static_cast<std::size_t>(universe));
  for (int v : members) s.set(static_cast<std::size_t>(v));
  return s;
}

inline VertexSet make_set(int universe, std::initializer_list<int> members) {
  return make_set(universe, std::span<const int>(members.begin(), members.size()));
}

inline std::vector<int> members(const VertexSet& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

// "1,4,7" in external numbering; "-" for the empty set.
inline std::string format_members(const VertexSet& s) {
  std::string out;
  for (int v : members(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(v + 1);
  }
  return out.empty() ? std::string("-") : out;
}

}  // namespace pvc
