// Copyright 2026 The nfvplace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nfvplace/topology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace nfv {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Core: return "CORE";
    case NodeKind::Olt: return "OLT";
    case NodeKind::Onu: return "ONU";
    case NodeKind::Rrh: return "RRH";
  }
  return "?";
}

std::vector<int> Topology::host_ids() const {
  std::vector<int> out;
  out.reserve(core_count + olt_count + onu_count);
  for (const Node& n : nodes)
    if (n.kind != NodeKind::Rrh) out.push_back(n.id);
  return out;
}

int Topology::root_core(int id) const {
  int cur = id;
  while (nodes[cur].parent >= 0) cur = nodes[cur].parent;
  return cur;
}

std::optional<double> Topology::core_link_km(int a, int b) const {
  for (const CoreLink& l : core_links)
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a)) return l.km;
  return std::nullopt;
}

int Topology::core_link_regenerators(int a, int b) const {
  for (const CoreLink& l : core_links)
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a))
      return l.regenerators;
  return 0;
}

namespace {

bool core_graph_connected(int core_nodes, const std::vector<CoreLink>& links) {
  if (core_nodes == 1) return true;
  std::vector<std::vector<int>> adj(core_nodes);
  for (const CoreLink& l : links) {
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::vector<char> seen(core_nodes, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
  }
  return reached == core_nodes;
}

}  // namespace

Topology build_paper_topology(int core_nodes, int gpons_per_core,
                              int onus_per_gpon,
                              const std::vector<CoreLink>& core_distances,
                              int onu_host_limit, int olt_host_limit,
                              int core_host_limit) {
  if (core_nodes < 1 || gpons_per_core < 1 || onus_per_gpon < 1)
    throw Error("topology: all tier counts must be >= 1");
  for (const CoreLink& l : core_distances) {
    if (l.a < 0 || l.a >= core_nodes || l.b < 0 || l.b >= core_nodes ||
        l.a == l.b)
      throw Error("topology: core link references an invalid node index");
    if (!(l.km > 0)) throw Error("topology: core link distance must be > 0");
    if (l.regenerators < 0)
      throw Error("topology: regenerator count must be >= 0");
  }
  if (!core_graph_connected(core_nodes, core_distances))
    throw Error("topology: core distance table is disconnected");

  Topology t;
  t.core_count = core_nodes;
  t.olt_count = core_nodes * gpons_per_core;
  t.onu_count = t.olt_count * onus_per_gpon;
  t.rrh_count = t.onu_count;
  const int total = t.core_count + t.olt_count + t.onu_count + t.rrh_count;
  t.nodes.resize(total);
  t.host_limits.assign(total, 0);
  t.children.assign(total, {});
  t.neighbors.assign(total, {});

  for (int k = 0; k < t.core_count; ++k) {
    Node& n = t.nodes[t.core_id(k)];
    n = {t.core_id(k), NodeKind::Core, k, -1};
    t.host_limits[n.id] = core_host_limit;
  }
  for (int k = 0; k < t.olt_count; ++k) {
    Node& n = t.nodes[t.olt_id(k)];
    n = {t.olt_id(k), NodeKind::Olt, k, t.core_id(k / gpons_per_core)};
    t.host_limits[n.id] = olt_host_limit;
  }
  for (int k = 0; k < t.onu_count; ++k) {
    Node& n = t.nodes[t.onu_id(k)];
    n = {t.onu_id(k), NodeKind::Onu, k, t.olt_id(k / onus_per_gpon)};
    t.host_limits[n.id] = onu_host_limit;
  }
  for (int k = 0; k < t.rrh_count; ++k) {
    Node& n = t.nodes[t.rrh_id(k)];
    n = {t.rrh_id(k), NodeKind::Rrh, k, t.onu_id(k)};
  }

  for (const Node& n : t.nodes) {
    if (n.parent >= 0) {
      t.children[n.parent].push_back(n.id);
      t.neighbors[n.parent].push_back(n.id);
      t.neighbors[n.id].push_back(n.parent);
    }
  }
  // Canonical ordering: a < b, links sorted.
  t.core_links = core_distances;
  for (CoreLink& l : t.core_links)
    if (l.a > l.b) std::swap(l.a, l.b);
  std::sort(t.core_links.begin(), t.core_links.end(),
            [](const CoreLink& x, const CoreLink& y) {
              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
            });
  for (size_t i = 1; i < t.core_links.size(); ++i)
    if (t.core_links[i].a == t.core_links[i - 1].a &&
        t.core_links[i].b == t.core_links[i - 1].b)
      throw Error("topology: duplicate core link");
  for (const CoreLink& l : t.core_links) {
    t.neighbors[l.a].push_back(l.b);
    t.neighbors[l.b].push_back(l.a);
  }
  for (auto& adj : t.neighbors) std::sort(adj.begin(), adj.end());
  return t;
}

std::optional<Path> shortest_path(const Topology& t, int src, int dst,
                                  PathMetric metric) {
  const int n = t.node_count();
  if (src < 0 || src >= n || dst < 0 || dst >= n)
    throw Error("shortest_path: node id out of range");

  auto link_km = [&](int a, int b) -> double {
    if (t.kind(a) == NodeKind::Core && t.kind(b) == NodeKind::Core)
      return *t.core_link_km(a, b);
    return 0.0;  // PON internal links carry no distance
  };

  // Dijkstra from dst over (primary, hops) so the tight-edge graph is
  // acyclic under the combined cost; forward greedy min-id then yields the
  // lexicographically smallest optimal node sequence.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, inf);
  std::vector<int> hops(n, std::numeric_limits<int>::max());
  using Entry = std::tuple<double, int, int>;  // (cost, hops, node)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[dst] = 0.0;
  hops[dst] = 0;
  pq.emplace(0.0, 0, dst);
  while (!pq.empty()) {
    auto [d, h, u] = pq.top();
    pq.pop();
    if (d > dist[u] || (d == dist[u] && h > hops[u])) continue;
    for (int v : t.neighbors[u]) {
      double w = metric == PathMetric::Km ? link_km(u, v) : 1.0;
      double nd = d + w;
      int nh = h + 1;
      if (nd < dist[v] || (nd == dist[v] && nh < hops[v])) {
        dist[v] = nd;
        hops[v] = nh;
        pq.emplace(nd, nh, v);
      }
    }
  }
  if (dist[src] == inf) return std::nullopt;

  Path p;
  p.nodes.push_back(src);
  int cur = src;
  while (cur != dst) {
    int next = -1;
    for (int v : t.neighbors[cur]) {  // neighbors sorted ascending
      double w = metric == PathMetric::Km ? link_km(cur, v) : 1.0;
      if (dist[v] + w == dist[cur] && hops[v] + 1 == hops[cur]) {
        next = v;
        break;
      }
    }
    if (next < 0) throw Error("shortest_path: reconstruction failed");
    p.km += link_km(cur, next);
    ++p.hops;
    cur = next;
    p.nodes.push_back(cur);
  }
  return p;
}

std::vector<std::string> validate(const Topology& t) {
  std::vector<std::string> report;
  auto fail = [&](const std::string& msg) { report.push_back(msg); };

  const int total = t.core_count + t.olt_count + t.onu_count + t.rrh_count;
  if (t.node_count() != total)
    fail("node count does not match tier counts");
  if (static_cast<int>(t.host_limits.size()) != t.node_count())
    fail("host_limits size mismatch");

  std::set<std::pair<int, int>> seen_kind_index;
  for (const Node& n : t.nodes) {
    if (!seen_kind_index.insert({static_cast<int>(n.kind), n.kind_index})
             .second)
      fail("duplicate kind index: " + std::string(to_string(n.kind)) + " " +
           std::to_string(n.kind_index));
    switch (n.kind) {
      case NodeKind::Core:
        if (n.parent != -1) fail("core node with a parent");
        break;
      case NodeKind::Olt:
        if (n.parent < 0 || t.kind(n.parent) != NodeKind::Core)
          fail("OLT " + std::to_string(n.id) + " lacks a core parent");
        break;
      case NodeKind::Onu:
        if (n.parent < 0 || t.kind(n.parent) != NodeKind::Olt)
          fail("ONU " + std::to_string(n.id) + " lacks an OLT parent");
        break;
      case NodeKind::Rrh:
        if (n.parent < 0 || t.kind(n.parent) != NodeKind::Onu)
          fail("RRH " + std::to_string(n.id) + " lacks an ONU parent");
        if (t.host_limits[n.id] != 0)
          fail("RRH " + std::to_string(n.id) + " has a nonzero host limit");
        break;
    }
  }
  for (const Node& n : t.nodes) {
    if (n.kind != NodeKind::Onu) continue;
    int rrhs = 0;
    for (int c : t.children[n.id])
      if (t.kind(c) == NodeKind::Rrh) ++rrhs;
    if (rrhs != 1)
      fail("ONU " + std::to_string(n.id) + " has " + std::to_string(rrhs) +
           " attached RRHs (expected 1)");
  }
  for (const CoreLink& l : t.core_links) {
    if (!(l.km > 0))
      fail("core link (" + std::to_string(l.a) + "," + std::to_string(l.b) +
           ") has non-positive distance");
    if (l.regenerators < 0)
      fail("core link (" + std::to_string(l.a) + "," + std::to_string(l.b) +
           ") has negative regenerator count");
    if (l.a < 0 || l.b < 0 || l.a >= t.node_count() || l.b >= t.node_count() ||
        t.kind(l.a) != NodeKind::Core || t.kind(l.b) != NodeKind::Core)
      fail("core link endpoints are not core nodes");
  }
  if (!(t.onu_capacity_gbps > 0) || !(t.olt_capacity_gbps > 0))
    fail("PON capacities must be > 0");

  // Core connectivity and neighbor-set consistency.
  std::vector<CoreLink> rel;
  for (const CoreLink& l : t.core_links)
    if (t.kind(l.a) == NodeKind::Core && t.kind(l.b) == NodeKind::Core)
      rel.push_back({l.a, l.b, l.km, l.regenerators});
  if (!core_graph_connected(t.core_count, rel))
    fail("core graph is disconnected");
  for (const Node& n : t.nodes) {
    std::set<int> expect;
    if (n.parent >= 0) expect.insert(n.parent);
    for (int c : t.children[n.id]) expect.insert(c);
    if (n.kind == NodeKind::Core)
      for (const CoreLink& l : t.core_links) {
        if (l.a == n.id) expect.insert(l.b);
        if (l.b == n.id) expect.insert(l.a);
      }
    std::set<int> have(t.neighbors[n.id].begin(), t.neighbors[n.id].end());
    if (have != expect)
      fail("neighbor set of node " + std::to_string(n.id) +
           " is inconsistent with the edge lists");
  }
  return report;
}

Topology load_topology_json(const std::string& text) {
  using nlohmann::json;
  json j = json::parse(text);
  static const std::set<std::string> allowed = {
      "core_nodes", "gpons_per_core", "onus_per_gpon", "core_links",
      "host_limits"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw Error("topology json: unknown field '" + it.key() + "'");
  for (const char* req : {"core_nodes", "gpons_per_core", "onus_per_gpon"})
    if (!j.contains(req))
      throw Error("topology json: missing field '" + std::string(req) + "'");

  std::vector<CoreLink> links;
  if (j.contains("core_links")) {
    for (const auto& lj : j.at("core_links")) {
      static const std::set<std::string> lk = {"a", "b", "km", "regenerators"};
      for (auto it = lj.begin(); it != lj.end(); ++it)
        if (!lk.count(it.key()))
          throw Error("topology json: unknown core_links field '" + it.key() +
                      "'");
      CoreLink l;
      l.a = lj.at("a").get<int>();
      l.b = lj.at("b").get<int>();
      l.km = lj.at("km").get<double>();
      l.regenerators = lj.value("regenerators", 0);
      links.push_back(l);
    }
  }
  int onu_lim = 1, olt_lim = 5, core_lim = 20;
  if (j.contains("host_limits")) {
    const auto& hl = j.at("host_limits");
    static const std::set<std::string> hk = {"onu", "olt", "core"};
    for (auto it = hl.begin(); it != hl.end(); ++it)
      if (!hk.count(it.key()))
        throw Error("topology json: unknown host_limits field '" + it.key() +
                    "'");
    onu_lim = hl.value("onu", 1);
    olt_lim = hl.value("olt", 5);
    core_lim = hl.value("core", 20);
  }
  return build_paper_topology(j.at("core_nodes").get<int>(),
                              j.at("gpons_per_core").get<int>(),
                              j.at("onus_per_gpon").get<int>(), links, onu_lim,
                              olt_lim, core_lim);
}

Topology load_topology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open topology file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_topology_json(ss.str());
}

}  // namespace nfv
