#include "upword/debruijn.hpp"

#include <algorithm>

namespace upw {

DeBruijnGraph::DeBruijnGraph(int alpha, int order, std::uint64_t max_edges)
    : alpha_(Alphabet(alpha).size()), order_(order) {
  if (order < 1) throw Error(Errc::BadParams, "graph order must be at least 1");
  const WordIndex edges = power(alpha, order + 1);
  if (edges > max_edges)
    throw Error(Errc::TooLarge, "De Bruijn graph with " + std::to_string(edges) + " edges");
  vertex_count_ = power(alpha, order);
  live_edges_ = edges;
  removed_.assign(edges, false);
  dropped_.assign(vertex_count_, false);
}

int DeBruijnGraph::out_degree(Vertex v) const {
  int d = 0;
  for (int x = 0; x < alpha_; ++x) d += removed_[out_edge(v, static_cast<Symbol>(x))] ? 0 : 1;
  return d;
}

int DeBruijnGraph::in_degree(Vertex v) const {
  int d = 0;
  for (int x = 0; x < alpha_; ++x) d += removed_[in_edge(v, static_cast<Symbol>(x))] ? 0 : 1;
  return d;
}

std::vector<Vertex> DeBruijnGraph::neighbors(Vertex v, Direction direction) const {
  if (!has_vertex(v)) throw Error(Errc::BadVertex, "vertex " + std::to_string(v) + " not in graph");
  std::vector<Vertex> out;
  for (int x = 0; x < alpha_; ++x) {
    const auto letter = static_cast<Symbol>(x);
    if (direction == Direction::Out) {
      const EdgeId e = out_edge(v, letter);
      if (!removed_[e]) out.push_back(head(e));
    } else {
      const EdgeId e = in_edge(v, letter);
      if (!removed_[e]) out.push_back(tail(e));
    }
  }
  return out;
}

DeBruijnGraph DeBruijnGraph::remove_edges(std::span<const Word> words) const {
  std::vector<EdgeId> ids;
  ids.reserve(words.size());
  for (const Word& w : words) {
    if (w.size() != static_cast<std::size_t>(order_ + 1))
      throw Error(Errc::BadEdgeWord, "edge word of length " + std::to_string(w.size()) +
                                         ", expected " + std::to_string(order_ + 1));
    for (Symbol s : w)
      if (s == kDiamond || s >= alpha_) throw Error(Errc::BadEdgeWord, "edge word outside alphabet");
    ids.push_back(encode(w, alpha_));
  }
  return remove_edge_ids(ids);
}

DeBruijnGraph DeBruijnGraph::remove_edge_ids(std::span<const EdgeId> edges) const {
  DeBruijnGraph g = *this;
  for (EdgeId e : edges) {
    if (e >= edge_count()) throw Error(Errc::BadEdgeWord, "edge id out of range");
    if (!g.removed_[e]) {
      g.removed_[e] = true;
      --g.live_edges_;
    }
  }
  return g;
}

DeBruijnGraph DeBruijnGraph::drop_vertex(Vertex v) const {
  if (!has_vertex(v)) throw Error(Errc::BadVertex, "vertex " + std::to_string(v) + " not in graph");
  if (!is_isolated(v)) throw Error(Errc::BadVertex, "only isolated vertices can be dropped");
  DeBruijnGraph g = *this;
  g.dropped_[v] = true;
  return g;
}

DeBruijnGraph DeBruijnGraph::drop_isolated_vertices() const {
  DeBruijnGraph g = *this;
  for (Vertex v = 0; v < vertex_count_; ++v)
    if (is_isolated(v)) g.dropped_[v] = true;
  return g;
}

Vertex DeBruijnGraph::vertex_of(std::span<const Symbol> letters) const {
  if (letters.size() != static_cast<std::size_t>(order_))
    throw Error(Errc::BadVertex, "vertex word of wrong length");
  for (Symbol s : letters)
    if (s == kDiamond || s >= alpha_) throw Error(Errc::BadVertex, "vertex word outside alphabet");
  return encode(letters, alpha_);
}

// ---------------------------------------------------------------------------
// Eulerian walks

namespace {

/// Weak connectivity of the live edges, with start also required to touch them.
bool live_edges_connected(const DeBruijnGraph& g, Vertex start) {
  const std::uint64_t V = g.vertex_count();
  std::vector<Vertex> parent(V);
  for (Vertex v = 0; v < V; ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.is_removed(e)) continue;
    const Vertex a = find(g.tail(e)), b = find(g.head(e));
    if (a != b) parent[a] = b;
  }
  const Vertex root = find(start);
  for (Vertex v = 0; v < V; ++v)
    if (!g.is_isolated(v) && find(v) != root) return false;
  return !g.is_isolated(start);
}

}  // namespace

EdgeWalk eulerian_path(const DeBruijnGraph& g, Vertex start, Vertex end) {
  if (!g.has_vertex(start)) throw Error(Errc::BadVertex, "start vertex not in graph");
  if (!g.has_vertex(end)) throw Error(Errc::BadVertex, "end vertex not in graph");

  EdgeWalk walk{g.alpha(), g.order(), start, end, {}};
  if (g.live_edge_count() == 0) {
    if (start != end)
      throw NoEulerianPath(EulerFailure::Disconnected, "no edges connect start to end");
    return walk;
  }

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int surplus = g.out_degree(v) - g.in_degree(v);
    if (start != end) {
      if (v == start) surplus -= 1;
      if (v == end) surplus += 1;
    }
    if (surplus != 0) {
      throw NoEulerianPath(EulerFailure::DegreeImbalance,
                           "vertex " + render_word(g.letters_of(v)) + " has out-in degree " +
                               std::to_string(g.out_degree(v) - g.in_degree(v)));
    }
  }
  if (!live_edges_connected(g, start))
    throw NoEulerianPath(EulerFailure::Disconnected, "live edges are not connected");

  // Iterative Hierholzer. next_letter[v] is the smallest letter not yet tried at v.
  const auto alpha = g.alpha();
  std::vector<std::uint8_t> next_letter(g.vertex_count(), 0);
  auto take_out_edge = [&](Vertex v, EdgeId& e) {
    while (next_letter[v] < alpha) {
      const EdgeId cand = g.out_edge(v, next_letter[v]++);
      if (!g.is_removed(cand)) {
        e = cand;
        return true;
      }
    }
    return false;
  };

  struct Frame {
    Vertex vertex;
    EdgeId via;  // edge used to enter; unused for the root frame
  };
  std::vector<Frame> stack{{start, 0}};
  std::vector<EdgeId> reversed_edges;
  reversed_edges.reserve(g.live_edge_count());
  while (!stack.empty()) {
    EdgeId e;
    if (take_out_edge(stack.back().vertex, e)) {
      stack.push_back({g.head(e), e});
    } else {
      if (stack.size() > 1) reversed_edges.push_back(stack.back().via);
      stack.pop_back();
    }
  }
  walk.edges.assign(reversed_edges.rbegin(), reversed_edges.rend());
  if (walk.edges.size() != g.live_edge_count())
    throw Error(Errc::Internal, "Hierholzer walk missed edges");
  return walk;
}

Word word_from_walk(const EdgeWalk& walk, WalkReading reading) {
  if (walk.edges.empty()) throw Error(Errc::EmptyWalk, "walk has no edges");
  Word out;
  const auto alpha = static_cast<std::uint64_t>(walk.alpha);
  if (reading == WalkReading::Linear) {
    out = decode(walk.start, walk.alpha, walk.order);
  } else if (!walk.closed()) {
    throw Error(Errc::BadParams, "cyclic reading needs a closed walk");
  }
  out.reserve(out.size() + walk.edges.size());
  for (EdgeId e : walk.edges) out.push_back(static_cast<Symbol>(e % alpha));
  return out;
}

}  // namespace upw
