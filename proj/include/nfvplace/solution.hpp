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

#ifndef NFVPLACE_SOLUTION_HPP
#define NFVPLACE_SOLUTION_HPP

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace nfv {

// Directed arc (x -> y) of the routing graph, global node ids.
struct Arc {
  int x = -1;
  int y = -1;
  auto operator<=>(const Arc&) const = default;
};

// One commodity's flow on one arc: (a,b) names the commodity endpoints
// (BBU host -> RRH, or hosting pair p -> q), (x,y) the traversed arc.
struct FlowKey {
  int a = -1;
  int b = -1;
  int x = -1;
  int y = -1;
  auto operator<=>(const FlowKey&) const = default;
};

// IP-over-WDM dimensioning of a placement.
struct WdmState {
  std::map<std::pair<int, int>, int> virtual_wavelengths;  // W_ij
  std::map<std::pair<int, int>, int> link_wavelengths;     // W_mn (physical)
  std::map<std::pair<int, int>, int> link_fibers;          // f_mn (physical)
  // W^{ij}_{mn}: wavelengths of virtual link (i,j) crossing physical (m,n).
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int>
      wavelength_routes;
  std::vector<double> agg_ports;  // Lambda_m by core kind index
};

// Decoded placement: VM locations, commodity flows, workloads and WDM
// dimensioning.  All node references are global ids.
struct Solution {
  std::map<std::pair<int, int>, double> bbu_placement;  // sigmaB_{h,r} in {0,1}
  std::vector<int> cnvm_hosts;                          // sigmaE_h = 1, sorted
  std::vector<int> any_vm_hosts;                        // sigmaChi_h = 1, sorted
  std::map<FlowKey, double> fronthaul_flows;            // lambdaR^{h,r}_{x,y}
  std::map<FlowKey, double> host_flows;                 // lambdaT^{p,q}_{x,y}
  std::map<int, double> bbu_workload_gops;              // PsiB_h
  std::map<int, int> servers_int;                       // PsiI_h
  std::map<int, double> servers_frac;                   // PsiF_h
  WdmState wdm;
  double objective_w = 0.0;

  bool hosts_cnvm(int h) const;
  bool hosts_any_vm(int h) const;
};

// Splits a normalized workload into its integer and fractional server
// parts with a guard against values a hair under an integer.
std::pair<int, double> split_workload(double normalized);

}  // namespace nfv

#endif  // NFVPLACE_SOLUTION_HPP
