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

#ifndef NFVPLACE_TOPOLOGY_HPP
#define NFVPLACE_TOPOLOGY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfv {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class NodeKind : int { Core = 0, Olt = 1, Onu = 2, Rrh = 3 };

const char* to_string(NodeKind k);

struct Node {
  int id = -1;          // global index == position in Topology::nodes
  NodeKind kind = NodeKind::Core;
  int kind_index = 0;   // index within its kind
  int parent = -1;      // tree parent (Rrh->Onu->Olt->Core); -1 for core nodes
};

// Undirected core fibre link with its length and in-line regenerator count.
struct CoreLink {
  int a = -1;
  int b = -1;
  double km = 0.0;
  int regenerators = 0;
};

// Three-tier evaluation network: core mesh + GPON trees + RRH leaves.
// Node ids are assigned deterministically: cores first, then OLTs, ONUs,
// RRHs, each block ordered by construction.  Immutable after construction.
struct Topology {
  std::vector<Node> nodes;
  std::vector<CoreLink> core_links;           // undirected, a < b
  std::vector<int> host_limits;               // max servers per node; 0 for RRHs
  std::vector<std::vector<int>> children;     // tree children per node
  std::vector<std::vector<int>> neighbors;    // tree links + physical core links
  double onu_capacity_gbps = 10.0;            // CU
  double olt_capacity_gbps = 8600.0;          // CL

  int core_count = 0;
  int olt_count = 0;
  int onu_count = 0;
  int rrh_count = 0;

  int core_id(int k) const { return k; }
  int olt_id(int k) const { return core_count + k; }
  int onu_id(int k) const { return core_count + olt_count + k; }
  int rrh_id(int k) const { return core_count + olt_count + onu_count + k; }
  int node_count() const { return static_cast<int>(nodes.size()); }
  NodeKind kind(int id) const { return nodes[id].kind; }
  bool is_host(int id) const { return kind(id) != NodeKind::Rrh; }

  // Hosting nodes (ONU, OLT, core) in ascending global id order.
  std::vector<int> host_ids() const;
  // Core id of the subtree a node belongs to (identity for core nodes).
  int root_core(int id) const;
  // Distance of an undirected core link, or nullopt if not a core link.
  std::optional<double> core_link_km(int a, int b) const;
  int core_link_regenerators(int a, int b) const;
};

enum class PathMetric { Hops, Km };

struct Path {
  std::vector<int> nodes;  // src..dst inclusive
  int hops = 0;
  double km = 0.0;
};

// Builds the evaluation topology: `core_nodes` IP-over-WDM nodes, each with
// `gpons_per_core` OLTs, each OLT with `onus_per_gpon` ONUs, one RRH per ONU.
// `core_distances` must describe a connected core graph (node ids 0-based
// core indices).  Host limits default to 1/5/20 servers for ONU/OLT/core.
Topology build_paper_topology(int core_nodes, int gpons_per_core,
                              int onus_per_gpon,
                              const std::vector<CoreLink>& core_distances,
                              int onu_host_limit = 1, int olt_host_limit = 5,
                              int core_host_limit = 20);

// Minimal path on the physical graph (tree links + core fibre links).
// Ties are broken toward the smallest lexicographic node-index sequence;
// for the km metric, hop count is the secondary criterion (tree links have
// zero length, so km alone does not order paths on a subtree).
std::optional<Path> shortest_path(const Topology& t, int src, int dst,
                                  PathMetric metric);

// Lists every violated Topology invariant; empty iff the topology is valid.
std::vector<std::string> validate(const Topology& t);

// JSON loaders (schema: {core_nodes, gpons_per_core, onus_per_gpon,
// core_links:[{a,b,km,regenerators}], host_limits?}).  Unknown fields are
// rejected.
Topology load_topology_json(const std::string& text);
Topology load_topology_file(const std::string& path);

}  // namespace nfv

#endif  // NFVPLACE_TOPOLOGY_HPP
