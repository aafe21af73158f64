#pragma once

#include <cstdint>
#include <vector>

#include "pvc/hypergraph.hpp"

namespace pvc::detail {

// Equivalence classes of the edges under a growing vertex set. Adding a vertex
// splits every class it cuts; undo restores the previous partition exactly.
// Classes are numbered 0..count()-1 at all times.
class ClassPartition {
 public:
  explicit ClassPartition(const Hypergraph& h);

  int count() const noexcept { return count_; }
  int size_of(int cls) const { return size_[static_cast<std::size_t>(cls)]; }
  int class_of(int edge) const { return cls_[static_cast<std::size_t>(edge)]; }
  int min_class_size() const;

  // Number of classes adding v would split; count() + gain(v) is the new count.
  int gain(int v);

  // True iff v splits every current class (the shattering step).
  bool splits_all(int v) { return gain(v) == count_; }

  void add(int v);
  void undo();
  int depth() const noexcept { return static_cast<int>(frames_.size()); }

 private:
  void begin_scan();
  int touch(int cls);

  const Hypergraph* h_;
  std::vector<int> cls_;
  std::vector<int> size_;
  int count_ = 0;

  std::vector<std::uint32_t> stamp_;
  std::vector<int> hits_;
  std::vector<int> fresh_;
  std::uint32_t epoch_ = 0;

  struct Move {
    int edge;
    int from;
  };
  std::vector<Move> log_;
  struct Frame {
    std::size_t log_start;
    int created;
  };
  std::vector<Frame> frames_;
};

// Greedy growth from `start`: repeatedly adds the vertex with the largest
// class count, lowest index on ties, until `target_size` vertices are chosen.
VertexSet greedy_grow(const Hypergraph& h, VertexSet start, int target_size);

// Hypergraph with duplicate edges dropped (first occurrence kept); class
// counts are unchanged for every vertex set.
Hypergraph dedupe_edges(const Hypergraph& h);

// Adds the lowest-indexed unused vertices until |s| = size.
void pad_to(VertexSet& s, int size);

}  // namespace pvc::detail
