// debruijn.hpp -- De Bruijn graphs with removable edges and Eulerian walks

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "upword/words.hpp"

namespace upw {

/// Vertex of G_A^m: a length-m word as a base-alpha integer.
using Vertex = std::uint64_t;
/// Edge of G_A^m: a length-(m+1) word as a base-alpha integer.
/// Its tail is the first m letters and its head the last m letters.
using EdgeId = std::uint64_t;

enum class Direction { Out, In };

/// Which part of the graph failed the Eulerian preconditions.
enum class EulerFailure { DegreeImbalance, Disconnected };

class NoEulerianPath : public Error {
public:
  NoEulerianPath(EulerFailure reason, const std::string& what)
      : Error(Errc::NoEulerianPath, what), reason_(reason) {}
  EulerFailure reason() const noexcept { return reason_; }

private:
  EulerFailure reason_;
};

class DeBruijnGraph {
public:
  /// Full graph on A^order. Refuses more than max_edges edges.
  DeBruijnGraph(int alpha, int order, std::uint64_t max_edges = std::uint64_t{1} << 26);

  int alpha() const noexcept { return alpha_; }
  int order() const noexcept { return order_; }
  std::uint64_t vertex_count() const noexcept { return vertex_count_; }
  std::uint64_t edge_count() const noexcept { return vertex_count_ * static_cast<std::uint64_t>(alpha_); }
  std::uint64_t live_edge_count() const noexcept { return live_edges_; }

  Vertex tail(EdgeId e) const noexcept { return e / static_cast<std::uint64_t>(alpha_); }
  Vertex head(EdgeId e) const noexcept { return e % vertex_count_; }
  Symbol last_letter(EdgeId e) const noexcept {
    return static_cast<Symbol>(e % static_cast<std::uint64_t>(alpha_));
  }
  /// Edge from v appending letter x.
  EdgeId out_edge(Vertex v, Symbol x) const noexcept {
    return v * static_cast<std::uint64_t>(alpha_) + x;
  }
  /// Edge into v prepending letter x.
  EdgeId in_edge(Vertex v, Symbol x) const noexcept {
    return static_cast<std::uint64_t>(x) * vertex_count_ + v;
  }

  bool has_vertex(Vertex v) const noexcept { return v < vertex_count_ && !dropped_[v]; }
  bool is_removed(EdgeId e) const { return removed_[e]; }
  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;
  bool is_isolated(Vertex v) const { return out_degree(v) == 0 && in_degree(v) == 0; }

  /// Neighbours along live edges, ascending by the appended/prepended letter.
  std::vector<Vertex> neighbors(Vertex v, Direction direction) const;

  /// Copy of this graph with the given length-(m+1) words' edges removed.
  DeBruijnGraph remove_edges(std::span<const Word> words) const;
  DeBruijnGraph remove_edge_ids(std::span<const EdgeId> edges) const;
  /// Copy with an isolated vertex deleted from the vertex set.
  DeBruijnGraph drop_vertex(Vertex v) const;
  /// Copy with every isolated vertex deleted.
  DeBruijnGraph drop_isolated_vertices() const;

  Vertex vertex_of(std::span<const Symbol> letters) const;
  Word letters_of(Vertex v) const { return decode(v, alpha_, order_); }

private:
  int alpha_;
  int order_;
  std::uint64_t vertex_count_;
  std::uint64_t live_edges_;
  std::vector<bool> removed_;
  std::vector<bool> dropped_;
};

struct EdgeWalk {
  int alpha = 2;
  int order = 1;
  Vertex start = 0;
  Vertex end = 0;
  std::vector<EdgeId> edges;

  bool closed() const noexcept { return start == end; }
};

/// Hierholzer walk over every live edge from start to end. At every vertex
/// unused out-edges are taken in increasing order of their final letter.
EdgeWalk eulerian_path(const DeBruijnGraph& g, Vertex start, Vertex end);

enum class WalkReading { Linear, Cyclic };

/// Linear: the start vertex followed by the final letter of each edge.
/// Cyclic (closed walks only): the final letters alone.
Word word_from_walk(const EdgeWalk& walk, WalkReading reading = WalkReading::Linear);

}  // namespace upw
