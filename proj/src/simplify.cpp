#include "postman/simplify.hpp"

#include <algorithm>
#include <map>

namespace postman {

SimplifiedInstance simplify_instance(const MixedMultigraph& in) {
  for (const auto& l : in.links) {
    if (l.u < 1 || l.u > in.n || l.v < 1 || l.v > in.n) fail(Errc::parse, "endpoint out of range");
    if (l.u == l.v) fail(Errc::parse, "self-loop");
    if (l.w < 0) fail(Errc::parse, "negative weight");
  }

  std::map<EdgeKey, std::vector<int>> by_pair;
  for (int i = 0; i < static_cast<int>(in.links.size()); ++i)
    by_pair[edge_key(in.links[i].u, in.links[i].v)].push_back(i);

  SimplifiedInstance out;
  out.origins.resize(in.links.size());
  int next_vertex = in.n + 1;
  std::vector<Link> edges, arcs;

  for (const auto& [pair, idxs] : by_pair) {
    // A pair with a single link keeps it; otherwise subdivide everything,
    // except that a unique edge among the pair's links is kept.
    int keep = -1;
    if (idxs.size() == 1) {
      keep = idxs[0];
    } else {
      int edge_count = 0, the_edge = -1;
      for (int i : idxs)
        if (!in.links[i].directed) {
          ++edge_count;
          the_edge = i;
        }
      if (edge_count == 1) keep = the_edge;
    }
    for (int i : idxs) {
      const MultiLink& l = in.links[i];
      Origin o{l.directed, l.u, l.v, l.w, 0};
      if (i == keep) {
        if (l.directed)
          arcs.push_back({l.u, l.v, l.w});
        else
          edges.push_back({std::min(l.u, l.v), std::max(l.u, l.v), l.w});
      } else {
        int m = next_vertex++;
        o.midpoint = m;
        if (l.directed) {
          arcs.push_back({l.u, m, l.w});
          arcs.push_back({m, l.v, 0});
        } else {
          int a = std::min(l.u, l.v), b = std::max(l.u, l.v);
          o.u = a;
          o.v = b;
          edges.push_back({a, m, l.w});
          edges.push_back({m, b, 0});
        }
      }
      out.origins[i] = o;
    }
  }

  out.graph = MixedGraph::make(next_vertex - 1, std::move(edges), std::move(arcs));
  return out;
}

std::vector<SimplifiedInstance::LinkUse> SimplifiedInstance::translate_back(
    const DirectedMultigraph& d) const {
  std::vector<LinkUse> use(origins.size());
  for (size_t i = 0; i < origins.size(); ++i) {
    const Origin& o = origins[i];
    // Counts are read off the weighted half; this keeps per-vertex imbalance
    // contributions identical to the subdivided solution.
    int via = o.midpoint ? o.midpoint : o.v;
    use[i].forward = d.mu(o.u, via);
    if (!o.directed) use[i].backward = d.mu(via, o.u);
  }
  return use;
}

Weight SimplifiedInstance::translated_weight(const std::vector<LinkUse>& use) const {
  Weight total = 0;
  for (size_t i = 0; i < origins.size(); ++i)
    total += origins[i].w * (use[i].forward + use[i].backward);
  return total;
}

}  // namespace postman
