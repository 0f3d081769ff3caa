#include "bpk/drawing.hpp"

#include <algorithm>
#include <string>

#include "bpk/error.hpp"

namespace bpk {

Report validate_crossings(const Graph& base, const std::vector<Crossing>& crossings) {
  Report rep;
  const int m = base.num_edges();
  std::vector<std::vector<std::pair<int, int>>> seen(m);  // (pos, crossing id)
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& c = crossings[i];
    const std::string id = "crossing " + std::to_string(c.id);
    if (c.id != static_cast<int>(i)) rep.add("crossing.id", id + " at index " + std::to_string(i));
    if (c.edge_a < 0 || c.edge_a >= m || c.edge_b < 0 || c.edge_b >= m) {
      rep.add("crossing.edge_range", id);
      continue;
    }
    if (c.edge_a == c.edge_b) {
      rep.add("crossing.self", id + " on edge " + std::to_string(c.edge_a));
      continue;
    }
    seen[c.edge_a].push_back({c.pos_a, c.id});
    seen[c.edge_b].push_back({c.pos_b, c.id});
  }
  for (EdgeId e = 0; e < m; ++e) {
    auto& s = seen[e];
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i].first != static_cast<int>(i)) {
        rep.add("crossing.position", "edge " + std::to_string(e) + " crossing " +
                                         std::to_string(s[i].second) + " at position " +
                                         std::to_string(s[i].first));
        break;
      }
  }
  return rep;
}

TopologicalDrawing::TopologicalDrawing(Graph base, std::vector<Crossing> crossings)
    : base_(std::move(base)), crossings_(std::move(crossings)) {
  Report rep = validate_crossings(base_, crossings_);
  if (!rep.ok())
    throw Error(ErrorKind::InvalidInput,
                rep.violations[0].code + ": " + rep.violations[0].detail);
  sequences_.assign(base_.num_edges(), {});
  std::vector<int> len(base_.num_edges(), 0);
  for (const Crossing& c : crossings_) {
    ++len[c.edge_a];
    ++len[c.edge_b];
  }
  for (EdgeId e = 0; e < base_.num_edges(); ++e) sequences_[e].assign(len[e], -1);
  for (const Crossing& c : crossings_) {
    sequences_[c.edge_a][c.pos_a] = c.id;
    sequences_[c.edge_b][c.pos_b] = c.id;
  }
}

TopologicalDrawing TopologicalDrawing::from_sequences(
    Graph base, const std::vector<std::pair<EdgeId, EdgeId>>& pairs,
    const std::vector<std::vector<int>>& sequences) {
  const int k = static_cast<int>(pairs.size());
  if (static_cast<int>(sequences.size()) != base.num_edges())
    throw Error(ErrorKind::InvalidInput, "one crossing sequence per edge required");
  std::vector<Crossing> cs(k);
  std::vector<int> filled(k, 0);
  for (int i = 0; i < k; ++i) {
    cs[i].id = i;
    cs[i].edge_a = pairs[i].first;
    cs[i].edge_b = pairs[i].second;
    cs[i].pos_a = cs[i].pos_b = -1;
  }
  for (EdgeId e = 0; e < base.num_edges(); ++e)
    for (int p = 0; p < static_cast<int>(sequences[e].size()); ++p) {
      int id = sequences[e][p];
      if (id < 0 || id >= k)
        throw Error(ErrorKind::InvalidInput, "edge " + std::to_string(e) +
                                                 " names unknown crossing " +
                                                 std::to_string(id));
      Crossing& c = cs[id];
      if (c.edge_a == e && c.pos_a < 0) {
        c.pos_a = p;
      } else if (c.edge_b == e && c.pos_b < 0) {
        c.pos_b = p;
      } else {
        throw Error(ErrorKind::InvalidInput, "edge " + std::to_string(e) +
                                                 " lists crossing " + std::to_string(id) +
                                                 " wrongly");
      }
      ++filled[id];
    }
  for (int i = 0; i < k; ++i)
    if (filled[i] != 2)
      throw Error(ErrorKind::InvalidInput,
                  "crossing " + std::to_string(i) + " not listed by both edges");
  return TopologicalDrawing(std::move(base), std::move(cs));
}

std::vector<EdgeId> TopologicalDrawing::crossers(EdgeId e) const {
  std::vector<EdgeId> out;
  out.reserve(sequences_[e].size());
  for (int id : sequences_[e]) out.push_back(partner(id, e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bpk

namespace bpk {

TopologicalDrawing sub_drawing(const TopologicalDrawing& d, std::span<const EdgeId> edges,
                               std::vector<EdgeId>* edge_map) {
  const Graph& g = d.base();
  std::vector<int> new_id(g.num_edges(), -1);
  Graph sub(g.num_vertices());
  for (EdgeId e : edges) {
    new_id[e] = sub.add_edge(g.edge(e).u, g.edge(e).v);
  }
  if (edge_map) edge_map->assign(edges.begin(), edges.end());
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  std::vector<int> crossing_id(d.num_crossings(), -1);
  for (const Crossing& c : d.crossings())
    if (new_id[c.edge_a] >= 0 && new_id[c.edge_b] >= 0) {
      crossing_id[c.id] = static_cast<int>(pairs.size());
      pairs.push_back({new_id[c.edge_a], new_id[c.edge_b]});
    }
  std::vector<std::vector<int>> seqs(sub.num_edges());
  for (EdgeId e : edges)
    for (int id : d.sequence(e))
      if (crossing_id[id] >= 0) seqs[new_id[e]].push_back(crossing_id[id]);
  return TopologicalDrawing::from_sequences(std::move(sub), pairs, seqs);
}

}  // namespace bpk
