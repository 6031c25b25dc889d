#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dbext/graph.hpp"

namespace dbext {

/// Heads of the edges e_1..e_{k^(m+1)} of a pointed Eulerian cycle, grouped
/// into k^m consecutive sections of k heads each.
struct Sectioning {
  GraphParams params;
  Word start_vertex;
  std::vector<Word> heads;  // heads[i] = head of e_(i+1)

  std::size_t section_count() const { return params.vertex_count(); }
  std::size_t section_size() const { return static_cast<std::size_t>(params.k); }
  std::span<const Word> section(std::size_t j) const {
    return {heads.data() + j * section_size(), section_size()};
  }
};

Sectioning sections_of(const EulerianCycle& cycle);

/// k-regular bipartite multigraph between vertices and sections, one edge per
/// head occurrence, in ascending edge-index order.
struct DistributionGraph {
  GraphParams params;
  std::size_t vertex_count = 0;
  std::size_t section_count = 0;
  struct Edge {
    std::size_t vertex_code;
    std::size_t section;
    std::size_t edge_index;  // 0-based index into the cycle's edge list
  };
  std::vector<Edge> edges;
};

DistributionGraph build_distribution_graph(const Sectioning& sectioning);

/// Unit-capacity network: source -> vertices -> sections -> sink.
/// |V| = 2k^m + 2 and |E| = (k+2) k^m.
struct FlowNetwork {
  std::size_t node_count = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
  struct Arc {
    std::size_t from;
    std::size_t to;
  };
  std::vector<Arc> arcs;  // all capacity 1, deterministic order
  std::size_t occurrence_arcs_begin = 0;
  std::size_t occurrence_arc_count = 0;
};

FlowNetwork build_flow_network(const DistributionGraph& dg);

struct MaxFlowResult {
  std::size_t value = 0;
  std::vector<bool> saturated;  // per arc of the network
};

/// Edmonds-Karp with BFS neighbor order by ascending arc index.
MaxFlowResult edmonds_karp(const FlowNetwork& net);

/// Perfect matching section -> (vertex, occurrence).
struct MatchingResult {
  struct Assignment {
    std::size_t section;
    Word vertex;
    std::size_t edge_index;
  };
  std::vector<Assignment> assignments;  // indexed by section
};

/// Throws std::logic_error ("Hall violation") if the maximum flow falls short
/// of k^m; per Hall's theorem that is unreachable and signals a bug.
MatchingResult perfect_matching(const Sectioning& sectioning);

}  // namespace dbext
