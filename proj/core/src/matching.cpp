#include "dbext/matching.hpp"

#include <deque>
#include <stdexcept>

namespace dbext {

Sectioning sections_of(const EulerianCycle& cycle) {
  const std::size_t m = cycle.start_vertex.size();
  const std::size_t len = cycle.params.edge_count();
  Sectioning s;
  s.params = cycle.params;
  s.start_vertex = cycle.start_vertex;
  s.heads.reserve(len);
  Word v = cycle.start_vertex;
  for (std::size_t i = 0; i < len; ++i) {
    if (m > 0) {
      v.erase(v.begin());
      v.push_back(cycle.labels[i]);
    }
    s.heads.push_back(v);
  }
  return s;
}

DistributionGraph build_distribution_graph(const Sectioning& sectioning) {
  DistributionGraph dg;
  dg.params = sectioning.params;
  dg.vertex_count = sectioning.params.vertex_count();
  dg.section_count = sectioning.section_count();
  dg.edges.reserve(sectioning.heads.size());
  for (std::size_t i = 0; i < sectioning.heads.size(); ++i) {
    dg.edges.push_back({pack_word(sectioning.heads[i], sectioning.params.k),
                        i / sectioning.section_size(), i});
  }
  return dg;
}

FlowNetwork build_flow_network(const DistributionGraph& dg) {
  FlowNetwork net;
  // Nodes: 0 = source, 1..V = vertices, V+1..2V = sections, 2V+1 = sink.
  net.node_count = 2 * dg.vertex_count + 2;
  net.source = 0;
  net.sink = net.node_count - 1;
  net.arcs.reserve(dg.vertex_count + dg.edges.size() + dg.section_count);
  for (std::size_t v = 0; v < dg.vertex_count; ++v) net.arcs.push_back({net.source, 1 + v});
  net.occurrence_arcs_begin = net.arcs.size();
  net.occurrence_arc_count = dg.edges.size();
  for (const auto& e : dg.edges)
    net.arcs.push_back({1 + e.vertex_code, 1 + dg.vertex_count + e.section});
  for (std::size_t j = 0; j < dg.section_count; ++j)
    net.arcs.push_back({1 + dg.vertex_count + j, net.sink});
  return net;
}

MaxFlowResult edmonds_karp(const FlowNetwork& net) {
  const std::size_t n_arcs = net.arcs.size();
  // Residual arc 2i is arc i forward (capacity 1), 2i+1 its reverse.
  std::vector<int> cap(2 * n_arcs);
  std::vector<std::vector<std::size_t>> adj(net.node_count);
  for (std::size_t i = 0; i < n_arcs; ++i) {
    cap[2 * i] = 1;
    cap[2 * i + 1] = 0;
    adj[net.arcs[i].from].push_back(2 * i);
    adj[net.arcs[i].to].push_back(2 * i + 1);
  }
  auto target = [&](std::size_t r) {
    return r % 2 == 0 ? net.arcs[r / 2].to : net.arcs[r / 2].from;
  };

  MaxFlowResult result;
  std::vector<std::size_t> parent_arc(net.node_count);
  std::vector<bool> visited(net.node_count);
  for (;;) {
    std::fill(visited.begin(), visited.end(), false);
    visited[net.source] = true;
    std::deque<std::size_t> queue{net.source};
    while (!queue.empty() && !visited[net.sink]) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t r : adj[u]) {
        const std::size_t w = target(r);
        if (cap[r] > 0 && !visited[w]) {
          visited[w] = true;
          parent_arc[w] = r;
          queue.push_back(w);
        }
      }
    }
    if (!visited[net.sink]) break;
    for (std::size_t u = net.sink; u != net.source;) {
      const std::size_t r = parent_arc[u];
      --cap[r];
      ++cap[r ^ 1];
      u = r % 2 == 0 ? net.arcs[r / 2].from : net.arcs[r / 2].to;
    }
    ++result.value;
  }
  result.saturated.resize(n_arcs);
  for (std::size_t i = 0; i < n_arcs; ++i) result.saturated[i] = cap[2 * i] == 0;
  return result;
}

MatchingResult perfect_matching(const Sectioning& sectioning) {
  const DistributionGraph dg = build_distribution_graph(sectioning);
  const FlowNetwork net = build_flow_network(dg);
  const MaxFlowResult flow = edmonds_karp(net);
  if (flow.value != dg.section_count)
    throw std::logic_error("Hall violation: max flow " + std::to_string(flow.value) +
                           " < section count " + std::to_string(dg.section_count));
  MatchingResult result;
  result.assignments.resize(dg.section_count);
  std::vector<bool> section_seen(dg.section_count, false);
  for (std::size_t i = 0; i < net.occurrence_arc_count; ++i) {
    if (!flow.saturated[net.occurrence_arcs_begin + i]) continue;
    const auto& e = dg.edges[i];
    if (section_seen[e.section]) throw std::logic_error("Hall violation: section matched twice");
    section_seen[e.section] = true;
    result.assignments[e.section] = {
        e.section, unpack_word(e.vertex_code, dg.params.k, static_cast<std::size_t>(dg.params.m)),
        e.edge_index};
  }
  return result;
}

}  // namespace dbext
