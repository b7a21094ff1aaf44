#include "postman/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "postman/troad.hpp"

namespace postman {

SimpleGraph SimpleGraph::from_edges(const MixedGraph& g) {
  SimpleGraph s;
  s.vertices.resize(g.order());
  std::iota(s.vertices.begin(), s.vertices.end(), 1);
  for (const auto& e : g.edges()) s.edges.push_back({e.u, e.v});
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

bool SimpleGraph::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Introduce: return "introduce";
    case NodeKind::Forget: return "forget";
    case NodeKind::Join: return "join";
  }
  return "?";
}

std::vector<int> TreeDecomposition::alpha(int x) const {
  const auto& bag = nodes.at(x).bag;
  if (!restricted) return bag;
  std::vector<int> out;
  std::set_intersection(bag.begin(), bag.end(), cprime.begin(), cprime.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> TreeDecomposition::gamma(int x) const {
  std::set<int> acc;
  std::vector<int> stack{x};
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    acc.insert(nodes[y].bag.begin(), nodes[y].bag.end());
    for (int c : nodes[y].children) stack.push_back(c);
  }
  return std::vector<int>(acc.begin(), acc.end());
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
  return w;
}

namespace {

std::vector<std::pair<int, int>> all_tree_edges(const TreeDecomposition& td) {
  if (td.root < 0) return td.tree_edges;
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < static_cast<int>(td.nodes.size()); ++x)
    if (td.nodes[x].parent >= 0) out.push_back({td.nodes[x].parent, x});
  return out;
}

ValidationResult invalid(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

ValidationResult validate_decomposition(const SimpleGraph& g, const TreeDecomposition& td) {
  int m = static_cast<int>(td.nodes.size());
  if (m == 0) return invalid("no nodes");
  for (const auto& nd : td.nodes) {
    if (!std::is_sorted(nd.bag.begin(), nd.bag.end()) ||
        std::adjacent_find(nd.bag.begin(), nd.bag.end()) != nd.bag.end())
      return invalid("bag not sorted/unique");
    for (int v : nd.bag)
      if (!g.has_vertex(v)) return invalid("bag vertex outside graph");
  }

  auto edges = all_tree_edges(td);
  if (static_cast<int>(edges.size()) != m - 1) return invalid("tree edge count is not nodes-1");
  // Tree connectivity.
  {
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : edges) {
      if (a < 0 || a >= m || b < 0 || b >= m) return invalid("tree edge out of range");
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    for (int x = 0; x < m; ++x)
      if (!seen[x]) return invalid("tree is disconnected");
  }

  // Condition 1: bags cover every vertex.
  std::set<int> covered;
  for (const auto& nd : td.nodes) covered.insert(nd.bag.begin(), nd.bag.end());
  for (int v : g.vertices)
    if (!covered.count(v)) return invalid("vertex not covered by any bag");

  // Condition 2: every edge inside some bag.
  for (auto [u, v] : g.edges) {
    bool ok = false;
    for (const auto& nd : td.nodes) {
      if (std::binary_search(nd.bag.begin(), nd.bag.end(), u) &&
          std::binary_search(nd.bag.begin(), nd.bag.end(), v)) {
        ok = true;
        break;
      }
    }
    if (!ok) return invalid("edge not inside any bag");
  }

  // Condition 3: the nodes holding v form a connected subtree.
  {
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (int v : g.vertices) {
      std::vector<int> holders;
      for (int x = 0; x < m; ++x)
        if (std::binary_search(td.nodes[x].bag.begin(), td.nodes[x].bag.end(), v))
          holders.push_back(x);
      if (holders.empty()) continue;
      std::set<int> hs(holders.begin(), holders.end());
      std::vector<int> stack{holders[0]};
      std::set<int> seen{holders[0]};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
          if (hs.count(y) && !seen.count(y)) {
            seen.insert(y);
            stack.push_back(y);
          }
      }
      if (seen.size() != hs.size()) return invalid("bag trace disconnected");
    }
  }

  // Node-kind rules on the alpha-restriction (rooted decompositions only).
  if (td.root >= 0) {
    if (td.root >= m) return invalid("root out of range");
    for (int x = 0; x < m; ++x) {
      const auto& nd = td.nodes[x];
      for (int c : nd.children)
        if (c < 0 || c >= m || td.nodes[c].parent != x) return invalid("parent/child mismatch");
      auto ax = td.alpha(x);
      switch (nd.kind) {
        case NodeKind::Leaf:
          if (!nd.children.empty()) return invalid("leaf with children");
          break;
        case NodeKind::Introduce: {
          if (nd.children.size() != 1) return invalid("introduce needs one child");
          auto ay = td.alpha(nd.children[0]);
          std::vector<int> diff;
          std::set_difference(ax.begin(), ax.end(), ay.begin(), ay.end(),
                              std::back_inserter(diff));
          if (diff.size() != 1 || ax.size() != ay.size() + 1)
            return invalid("introduce must add exactly one alpha vertex");
          break;
        }
        case NodeKind::Forget: {
          if (nd.children.size() != 1) return invalid("forget needs one child");
          auto ay = td.alpha(nd.children[0]);
          std::vector<int> diff;
          std::set_difference(ay.begin(), ay.end(), ax.begin(), ax.end(),
                              std::back_inserter(diff));
          if (diff.size() != 1 || ay.size() != ax.size() + 1)
            return invalid("forget must drop exactly one alpha vertex");
          break;
        }
        case NodeKind::Join: {
          if (nd.children.size() != 2) return invalid("join needs two children");
          if (td.alpha(nd.children[0]) != ax || td.alpha(nd.children[1]) != ax)
            return invalid("join children must share the alpha bag");
          break;
        }
      }
    }
  }
  return {true, ""};
}

ValidationResult validate_decomposition(const MixedGraph& g, const TreeDecomposition& td) {
  return validate_decomposition(SimpleGraph::from_edges(g), td);
}

SimpleGraph torso(const SimpleGraph& g, const std::vector<int>& s) {
  std::vector<int> sv = s;
  std::sort(sv.begin(), sv.end());
  sv.erase(std::unique(sv.begin(), sv.end()), sv.end());
  for (int v : sv)
    if (!g.has_vertex(v)) fail(Errc::internal, "torso set outside graph");

  std::set<std::pair<int, int>> out_edges;
  std::set<int> in_s(sv.begin(), sv.end());
  for (auto [u, v] : g.edges)
    if (in_s.count(u) && in_s.count(v)) out_edges.insert({u, v});

  // Vertices of s adjacent to a common component of g - s form a clique.
  std::map<int, int> comp;
  for (int v : g.vertices)
    if (!in_s.count(v)) comp[v] = -1;
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int comp_id = 0;
  for (auto& [v0, c0] : comp) {
    if (c0 != -1) continue;
    int id = comp_id++;
    std::vector<int> stack{v0};
    c0 = id;
    std::set<int> boundary;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (in_s.count(w)) {
          boundary.insert(w);
        } else if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    for (auto it = boundary.begin(); it != boundary.end(); ++it)
      for (auto jt = std::next(it); jt != boundary.end(); ++jt) out_edges.insert({*it, *jt});
  }

  SimpleGraph t;
  t.vertices = sv;
  t.edges.assign(out_edges.begin(), out_edges.end());
  return t;
}

namespace {

// Exact treewidth by the elimination-order subset DP; n <= 12.
// q(v, S) counts vertices outside S+{v} reachable from v through S.
struct ExactTw {
  int n;
  std::vector<std::uint32_t> nbr;  // adjacency bitmask per vertex

  int q(int v, std::uint32_t s) const {
    std::uint32_t visited = 1u << v;
    std::uint32_t outside = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (std::uint32_t f = nbr[w] & ~visited; f; f &= f - 1) {
        int x = __builtin_ctz(f);
        visited |= (1u << x);
        if (s & (1u << x))
          stack.push_back(x);  // pass through eliminated vertices
        else
          outside |= (1u << x);
      }
    }
    int count = 0;
    while (outside) {
      ++count;
      outside &= outside - 1;
    }
    return count;
  }

  std::vector<int> elimination_order() {
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int> cost(full + 1, 0), pick(full + 1, -1);
    for (std::uint32_t s = 1; s <= full; ++s) {
      int best = n + 1, arg = -1;
      for (std::uint32_t f = s; f;) {
        int v = __builtin_ctz(f);
        f &= f - 1;
        std::uint32_t rest = s & ~(1u << v);
        int c = std::max(cost[rest], q(v, rest));
        if (c < best) {
          best = c;
          arg = v;
        }
      }
      cost[s] = best;
      pick[s] = arg;
    }
    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
      order[i] = pick[s];
      s &= ~(1u << pick[s]);
    }
    return order;
  }
};

// Min-fill elimination order for larger graphs.
std::vector<int> min_fill_order(int n, std::vector<std::set<int>> adj) {
  std::vector<int> order;
  std::vector<char> gone(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long long fill = 0;
      for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
        for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
          if (!adj[*it].count(*jt)) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    order.push_back(best);
    gone[best] = 1;
    for (auto it = adj[best].begin(); it != adj[best].end(); ++it)
      for (auto jt = std::next(it); jt != adj[best].end(); ++jt) {
        adj[*it].insert(*jt);
        adj[*jt].insert(*it);
      }
    for (int w : adj[best]) adj[w].erase(best);
    adj[best].clear();
  }
  return order;
}

}  // namespace

TreeDecomposition compute_tree_decomposition(const SimpleGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  TreeDecomposition td;
  if (n == 0) {
    td.nodes.push_back({});
    td.root = -1;
    return td;
  }
  std::map<int, int> idx;
  for (int i = 0; i < n; ++i) idx[g.vertices[i]] = i;

  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges) {
    adj[idx[u]].insert(idx[v]);
    adj[idx[v]].insert(idx[u]);
  }

  std::vector<int> order;
  if (n <= 12) {
    ExactTw ex;
    ex.n = n;
    ex.nbr.assign(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w : adj[v]) ex.nbr[v] |= (1u << w);
    order = ex.elimination_order();
  } else {
    order = min_fill_order(n, adj);
  }

  // Standard elimination-order construction: the bag of v is v plus its
  // neighbours in the fill graph at elimination time; each bag hangs off the
  // bag of the earliest-eliminated such neighbour.
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::set<int>> fill = adj;
  std::vector<std::vector<int>> bags(n);
  std::vector<int> hook(n, -1);  // node index the bag attaches to
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later;
    for (int w : fill[v])
      if (position[w] > i) later.push_back(w);
    std::vector<int> bag{v};
    bag.insert(bag.end(), later.begin(), later.end());
    for (int& b : bag) b = g.vertices[b];
    std::sort(bag.begin(), bag.end());
    bags[i] = bag;
    if (!later.empty()) {
      int first = *std::min_element(later.begin(), later.end(),
                                    [&](int a, int b) { return position[a] < position[b]; });
      hook[i] = position[first];
    }
    for (auto it = later.begin(); it != later.end(); ++it)
      for (auto jt = std::next(it); jt != later.end(); ++jt) {
        fill[*it].insert(*jt);
        fill[*jt].insert(*it);
      }
  }

  for (int i = 0; i < n; ++i) {
    DecompNode nd;
    nd.bag = bags[i];
    td.nodes.push_back(nd);
  }
  for (int i = 0; i < n; ++i) {
    if (hook[i] >= 0)
      td.tree_edges.push_back({i, hook[i]});
    else if (i + 1 < n)
      td.tree_edges.push_back({i, i + 1});  // bridge forest components
  }
  td.root = -1;
  return td;
}

namespace {

// Chain from a child's bag up to a target bag: forget what disappears,
// introduce what appears. Returns the index of the topmost node.
int chain_to_bag(TreeDecomposition& td, int below, const std::vector<int>& target) {
  int cur = below;
  std::vector<int> bag = td.nodes[cur].bag;
  std::vector<int> drop, add;
  std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(),
                      std::back_inserter(drop));
  std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(),
                      std::back_inserter(add));
  for (int v : drop) {
    std::vector<int> nb;
    std::remove_copy(bag.begin(), bag.end(), std::back_inserter(nb), v);
    DecompNode nd;
    nd.bag = nb;
    nd.kind = NodeKind::Forget;
    nd.children = {cur};
    td.nodes.push_back(nd);
    td.nodes[cur].parent = static_cast<int>(td.nodes.size()) - 1;
    cur = static_cast<int>(td.nodes.size()) - 1;
    bag = nb;
  }
  for (int v : add) {
    std::vector<int> nb = bag;
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    DecompNode nd;
    nd.bag = nb;
    nd.kind = NodeKind::Introduce;
    nd.children = {cur};
    td.nodes.push_back(nd);
    td.nodes[cur].parent = static_cast<int>(td.nodes.size()) - 1;
    cur = static_cast<int>(td.nodes.size()) - 1;
    bag = nb;
  }
  return cur;
}

// Rooted transform of an unrooted decomposition node into nice form.
int make_nice_rec(TreeDecomposition& out, const TreeDecomposition& in, int x, int from,
                  const std::vector<std::vector<int>>& adj) {
  std::vector<int> kids;
  for (int y : adj[x])
    if (y != from) kids.push_back(y);

  if (kids.empty()) {
    DecompNode nd;
    nd.bag = in.nodes[x].bag;
    nd.kind = NodeKind::Leaf;
    out.nodes.push_back(nd);
    return static_cast<int>(out.nodes.size()) - 1;
  }

  std::vector<int> tops;
  for (int y : kids) {
    int sub = make_nice_rec(out, in, y, x, adj);
    tops.push_back(chain_to_bag(out, sub, in.nodes[x].bag));
  }
  int cur = tops[0];
  for (size_t i = 1; i < tops.size(); ++i) {
    DecompNode join;
    join.bag = in.nodes[x].bag;
    join.kind = NodeKind::Join;
    join.children = {cur, tops[i]};
    out.nodes.push_back(join);
    int j = static_cast<int>(out.nodes.size()) - 1;
    out.nodes[cur].parent = j;
    out.nodes[tops[i]].parent = j;
    cur = j;
  }
  return cur;
}

}  // namespace

TreeDecomposition make_nice(const TreeDecomposition& td) {
  if (td.nodes.empty()) fail(Errc::internal, "empty decomposition");
  TreeDecomposition out;
  out.nice = true;
  out.restricted = td.restricted;
  out.cprime = td.cprime;

  int m = static_cast<int>(td.nodes.size());
  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : all_tree_edges(td)) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  out.root = make_nice_rec(out, td, 0, -1, adj);
  return out;
}

std::optional<CutDecomposition> build_cut_decomposition(const MixedGraph& g, const DemandFn& t) {
  std::set<EdgeKey> f = bottleneck_union(g, t);
  if (f.empty()) return std::nullopt;

  CutDecomposition cd;
  cd.bottleneck = f;
  std::set<int> cset;
  for (const auto& [u, v] : f) {
    cset.insert(u);
    cset.insert(v);
  }
  cd.cprime.assign(cset.begin(), cset.end());

  SimpleGraph whole = SimpleGraph::from_edges(g);
  SimpleGraph core = torso(whole, cd.cprime);
  TreeDecomposition base = compute_tree_decomposition(core);
  base.restricted = true;
  base.cprime = cd.cprime;
  TreeDecomposition td = make_nice(base);

  // Attach each component of g - C' to a bag containing its neighbourhood
  // (a clique in the torso, so such a bag exists).
  std::vector<std::vector<int>> adj(g.order() + 1);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(g.order() + 1, 0);
  for (int v : cd.cprime) seen[v] = 1;
  for (int v0 = 1; v0 <= g.order(); ++v0) {
    if (seen[v0]) continue;
    std::vector<int> comp{v0};
    std::set<int> nbhd;
    seen[v0] = 1;
    std::vector<int> stack{v0};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (cset.count(w)) {
          nbhd.insert(w);
        } else if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());

    int target = -1;
    for (int x = 0; x < static_cast<int>(td.nodes.size()); ++x) {
      auto ax = td.alpha(x);
      if (std::includes(ax.begin(), ax.end(), nbhd.begin(), nbhd.end())) {
        target = x;
        break;
      }
    }
    if (target < 0) fail(Errc::internal, "component neighbourhood missing from every bag");

    if (td.nodes[target].kind == NodeKind::Leaf) {
      auto& bag = td.nodes[target].bag;
      std::vector<int> merged;
      std::set_union(bag.begin(), bag.end(), comp.begin(), comp.end(),
                     std::back_inserter(merged));
      bag = merged;
    } else {
      // Join node spliced in above `target`, with a fresh leaf carrying the
      // component; a new root join is created when target was the root.
      std::vector<int> abag = td.alpha(target);
      DecompNode leaf;
      std::set_union(abag.begin(), abag.end(), comp.begin(), comp.end(),
                     std::back_inserter(leaf.bag));
      leaf.kind = NodeKind::Leaf;
      td.nodes.push_back(leaf);
      int leaf_id = static_cast<int>(td.nodes.size()) - 1;

      DecompNode join;
      join.bag = td.nodes[target].bag;
      join.kind = NodeKind::Join;
      join.children = {target, leaf_id};
      int old_parent = td.nodes[target].parent;
      td.nodes.push_back(join);
      int join_id = static_cast<int>(td.nodes.size()) - 1;
      td.nodes[target].parent = join_id;
      td.nodes[leaf_id].parent = join_id;
      td.nodes[join_id].parent = old_parent;
      if (old_parent >= 0) {
        for (int& c : td.nodes[old_parent].children)
          if (c == target) c = join_id;
      } else {
        td.root = join_id;
      }
    }
  }

  cd.td = td;
  for (int x = 0; x < static_cast<int>(td.nodes.size()); ++x)
    cd.max_alpha = std::max(cd.max_alpha, static_cast<long long>(td.alpha(x).size()));
  return cd;
}

CutDecomposition trivial_cut_decomposition(const MixedGraph& g) {
  CutDecomposition cd;
  DecompNode nd;
  nd.bag.resize(g.order());
  std::iota(nd.bag.begin(), nd.bag.end(), 1);
  nd.kind = NodeKind::Leaf;
  cd.td.nodes.push_back(nd);
  cd.td.root = 0;
  cd.td.nice = true;
  cd.td.restricted = true;
  cd.max_alpha = 0;
  return cd;
}

std::string serialize_decomposition(const CutDecomposition& cd) {
  std::ostringstream out;
  out << "cprime:";
  for (int v : cd.cprime) out << ' ' << v;
  out << '\n';
  out << "fcut:";
  for (const auto& [u, v] : cd.bottleneck) out << ' ' << u << ' ' << v;
  out << '\n';
  for (int x = 0; x < static_cast<int>(cd.td.nodes.size()); ++x) {
    const auto& nd = cd.td.nodes[x];
    out << "node " << x << ' ' << node_kind_name(nd.kind) << ' ';
    if (nd.parent < 0)
      out << '-';
    else
      out << nd.parent;
    out << " :";
    for (int v : nd.bag) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace postman
