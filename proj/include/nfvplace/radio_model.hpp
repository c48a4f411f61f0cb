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

#ifndef NFVPLACE_RADIO_MODEL_HPP
#define NFVPLACE_RADIO_MODEL_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "nfvplace/topology.hpp"

namespace nfv {

// LTE / CPRI physical-layer parameters.  Defaults reproduce a 10 MHz,
// 64QAM, 2x2 MIMO small cell fronthauled over CPRI option 7.
struct RadioParams {
  double subcarrier_bw_hz = 15e3;
  double radio_bw_hz = 10e6;
  int prb_total = 50;              // n, PRBs per cell
  int prb_per_user = 5;            // pb
  int symbols_per_slot = 7;        // normal cyclic prefix
  int mod_bits = 6;                // q, bits per modulation symbol
  int antennas = 2;                // a
  int mimo_layers = 2;             // y
  double line_coding = 10.0 / 8.0; // l, 8B/10B
  int iq_width_bits = 8;           // M for the fronthaul baseline
  double system_efficiency = 0.874;
  double cpri_rate_gbps = 9.8304;  // cp, CPRI option 7
  double code_rate = 1.0;          // C
};

// Per-RRH load plus the derived traffic quantities the placement models
// consume.  `inter_traffic` maps ordered pairs of hosting-node global ids
// to the CNVM-to-CNVM rate that applies when both ends host CNVMs.
struct DemandSet {
  std::vector<int> users;          // rho_r by RRH kind index
  std::vector<double> demand_gbps; // lambdaR_r by RRH kind index
  double alpha = 0.1344;           // backhaul/fronthaul ratio
  double tau = 0.0;                // inter-traffic level (fraction of backhaul)
  std::map<std::pair<int, int>, double> inter_traffic;

  double total_fronthaul_gbps() const;
  double total_backhaul_gbps() const { return alpha * total_fronthaul_gbps(); }
  double inter_traffic_between(int p, int q) const;
  std::uint64_t hash() const;
};

// Sampling frequency: subcarrier spacing times the least power of two
// strictly greater than radio_bw / subcarrier_bw.
double sampling_frequency_hz(double radio_bw_hz, double subcarrier_bw_hz);

// Per-antenna-stream LTE MAC rate in Gbps (PRBs x 12 subcarriers x symbols
// x bits per 0.5 ms slot, scaled by the system efficiency).
double lte_mac_rate_gbps(const RadioParams& p);

// Raw IQ sample rate 2*M*fs, in Gbps.
double iq_rate_gbps(int iq_width_bits, double sampling_hz);

// CPRI line rate 2*M*fs*(16/15)*coding, in Gbps.  The 16/15 factor is the
// one-control-word-per-frame expansion.
double cpri_rate_gbps(int iq_width_bits, double sampling_hz, double coding);

double backhaul_fronthaul_ratio(double backhaul_gbps, double fronthaul_gbps);

// Baseband workload to process one user's traffic (GOPS).
double bbu_workload_per_user_gops(int antennas, int mod_bits, double code_rate,
                                  int layers, int prbs);

// Maximum BBU workload of a fully loaded RRH (GOPS): 30a + 10a^2 + 20qly.
double max_cell_workload_gops(int antennas, int mod_bits, double line_coding,
                              int mimo_layers);
double max_cell_workload_gops(const RadioParams& p);

// RRH traffic demand (pb/n)*cp*users in Gbps; errors if users*pb exceeds
// the cell's PRB budget.
double rrh_demand_gbps(int users, int prb_per_user, int prb_total,
                       double cpri_gbps);

// The backhaul/fronthaul ratio implied by the parameter set (MAC rate over
// CPRI rate at the configured IQ width).
double derive_alpha(const RadioParams& p);

// Draws per-RRH user counts uniformly on 1..10, scales by
// profile_fraction (round half-up, clamped to [0,10]), derives demands and
// the CNVM inter-traffic matrix.  Deterministic for a given seed.
DemandSet generate_demands(const Topology& t, double profile_fraction,
                           std::uint32_t seed, const RadioParams& p,
                           double tau);

}  // namespace nfv

#endif  // NFVPLACE_RADIO_MODEL_HPP
