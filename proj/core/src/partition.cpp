#include "partition.hpp"

#include <algorithm>
#include <limits>

namespace pvc::detail {

ClassPartition::ClassPartition(const Hypergraph& h) : h_(&h) {
  const auto m = static_cast<std::size_t>(h.num_edges());
  cls_.assign(m, 0);
  size_.assign(std::max<std::size_t>(m, 1), 0);
  stamp_.assign(size_.size(), 0);
  hits_.assign(size_.size(), 0);
  fresh_.assign(size_.size(), -1);
  if (m > 0) {
    size_[0] = static_cast<int>(m);
    count_ = 1;
  }
}

int ClassPartition::min_class_size() const {
  int best = std::numeric_limits<int>::max();
  for (int c = 0; c < count_; ++c) best = std::min(best, size_[static_cast<std::size_t>(c)]);
  return count_ == 0 ? 0 : best;
}

void ClassPartition::begin_scan() {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

int ClassPartition::touch(int cls) {
  const auto c = static_cast<std::size_t>(cls);
  if (stamp_[c] != epoch_) {
    stamp_[c] = epoch_;
    hits_[c] = 0;
    fresh_[c] = -1;
  }
  return ++hits_[c];
}

int ClassPartition::gain(int v) {
  begin_scan();
  int split = 0;
  for (int e : h_->incident_edges(v)) {
    const int c = cls_[static_cast<std::size_t>(e)];
    // A class counts once, when its first edge is seen, unless v covers it whole.
    if (touch(c) == 1 && size_[static_cast<std::size_t>(c)] > 1) ++split;
    if (hits_[static_cast<std::size_t>(c)] == size_[static_cast<std::size_t>(c)] &&
        size_[static_cast<std::size_t>(c)] > 1) {
      --split;
    }
  }
  return split;
}

void ClassPartition::add(int v) {
  begin_scan();
  const auto inc = h_->incident_edges(v);
  for (int e : inc) touch(cls_[static_cast<std::size_t>(e)]);
  Frame frame{log_.size(), 0};
  for (int e : inc) {
    const auto cu = static_cast<std::size_t>(cls_[static_cast<std::size_t>(e)]);
    if (fresh_[cu] < 0 && hits_[cu] < size_[cu]) {
      fresh_[cu] = count_++;
      ++frame.created;
    }
  }
  for (int e : inc) {
    const int c = cls_[static_cast<std::size_t>(e)];
    const auto cu = static_cast<std::size_t>(c);
    if (fresh_[cu] < 0) continue;  // v covers the whole class
    const int nc = fresh_[cu];
    --size_[cu];
    ++size_[static_cast<std::size_t>(nc)];
    cls_[static_cast<std::size_t>(e)] = nc;
    log_.push_back({e, c});
  }
  frames_.push_back(frame);
}

void ClassPartition::undo() {
  const Frame frame = frames_.back();
  frames_.pop_back();
  while (log_.size() > frame.log_start) {
    const Move mv = log_.back();
    log_.pop_back();
    --size_[static_cast<std::size_t>(cls_[static_cast<std::size_t>(mv.edge)])];
    ++size_[static_cast<std::size_t>(mv.from)];
    cls_[static_cast<std::size_t>(mv.edge)] = mv.from;
  }
  count_ -= frame.created;
}

VertexSet greedy_grow(const Hypergraph& h, VertexSet start, int target_size) {
  ClassPartition part(h);
  for (int v : members(start)) part.add(v);
  int chosen = static_cast<int>(start.count());
  while (chosen < target_size) {
    int best_v = -1;
    int best_gain = -1;
    for (int v = 0; v < h.num_vertices(); ++v) {
      if (start.test(static_cast<std::size_t>(v))) continue;
      const int g = part.gain(v);
      if (g > best_gain) {
        best_gain = g;
        best_v = v;
      }
    }
    if (best_v < 0) break;
    start.set(static_cast<std::size_t>(best_v));
    part.add(best_v);
    ++chosen;
  }
  return start;
}

Hypergraph dedupe_edges(const Hypergraph& h) {
  if (!find_twin_edges(h)) return h;
  std::vector<int> order(static_cast<std::size_t>(h.num_edges()));
  for (int e = 0; e < h.num_edges(); ++e) order[static_cast<std::size_t>(e)] = e;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h.edge(a) < h.edge(b); });
  std::vector<char> keep(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || h.edge(order[i]) != h.edge(order[i - 1])) keep[static_cast<std::size_t>(order[i])] = 1;
  }
  std::vector<VertexSet> edges;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (keep[static_cast<std::size_t>(e)]) edges.push_back(h.edge(e));
  }
  return Hypergraph(h.num_vertices(), std::move(edges), h.name());
}

void pad_to(VertexSet& s, int size) {
  for (std::size_t v = 0; v < s.size() && static_cast<int>(s.count()) < size; ++v) s.set(v);
}

}  // namespace pvc::detail
