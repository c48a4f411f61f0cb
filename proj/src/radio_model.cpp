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

#include "nfvplace/radio_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace nfv {

double DemandSet::total_fronthaul_gbps() const {
  double s = 0;
  for (double d : demand_gbps) s += d;
  return s;
}

double DemandSet::inter_traffic_between(int p, int q) const {
  auto it = inter_traffic.find({p, q});
  return it == inter_traffic.end() ? 0.0 : it->second;
}

std::uint64_t DemandSet::hash() const {
  // FNV-1a over a canonical serialization.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  auto mixd = [&](double d) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(d));
    std::memcpy(&bits, &d, sizeof(bits));
    mix(bits);
  };
  for (int u : users) mix(static_cast<std::uint64_t>(u));
  for (double d : demand_gbps) mixd(d);
  mixd(alpha);
  mixd(tau);
  for (const auto& [pq, v] : inter_traffic) {
    mix(static_cast<std::uint64_t>(pq.first));
    mix(static_cast<std::uint64_t>(pq.second));
    mixd(v);
  }
  return h;
}

double sampling_frequency_hz(double radio_bw_hz, double subcarrier_bw_hz) {
  if (!(radio_bw_hz > 0) || !(subcarrier_bw_hz > 0))
    throw Error("sampling_frequency: bandwidths must be > 0");
  double ratio = radio_bw_hz / subcarrier_bw_hz;
  double fft = 1.0;
  while (fft <= ratio) fft *= 2.0;
  return subcarrier_bw_hz * fft;
}

double lte_mac_rate_gbps(const RadioParams& p) {
  const double slot_s = 0.5e-3;
  double bits = static_cast<double>(p.prb_total) * 12.0 * p.symbols_per_slot *
                p.mod_bits;
  return bits / slot_s * p.system_efficiency / 1e9;
}

double iq_rate_gbps(int iq_width_bits, double sampling_hz) {
  if (iq_width_bits < 0) throw Error("iq_rate: IQ width must be >= 0");
  return 2.0 * iq_width_bits * sampling_hz / 1e9;
}

double cpri_rate_gbps(int iq_width_bits, double sampling_hz, double coding) {
  if (coding < 1.0) throw Error("cpri_rate: line coding ratio must be >= 1");
  return iq_rate_gbps(iq_width_bits, sampling_hz) * (16.0 / 15.0) * coding;
}

double backhaul_fronthaul_ratio(double backhaul_gbps, double fronthaul_gbps) {
  if (!(fronthaul_gbps > 0))
    throw Error("backhaul_fronthaul_ratio: fronthaul rate must be > 0");
  return backhaul_gbps / fronthaul_gbps;
}

double bbu_workload_per_user_gops(int antennas, int mod_bits, double code_rate,
                                  int layers, int prbs) {
  if (antennas < 0 || mod_bits < 0 || code_rate < 0 || layers < 0 || prbs < 0)
    throw Error("bbu_workload_per_user: arguments must be >= 0");
  double a = antennas;
  return (30.0 * a + 10.0 * a * a +
          20.0 * (mod_bits / 6.0) * code_rate * layers) *
         prbs / 50.0;
}

double max_cell_workload_gops(int antennas, int mod_bits, double line_coding,
                              int mimo_layers) {
  double a = antennas;
  return 30.0 * a + 10.0 * a * a + 20.0 * mod_bits * line_coding * mimo_layers;
}

double max_cell_workload_gops(const RadioParams& p) {
  return max_cell_workload_gops(p.antennas, p.mod_bits, p.line_coding,
                                p.mimo_layers);
}

double rrh_demand_gbps(int users, int prb_per_user, int prb_total,
                       double cpri_gbps) {
  if (users < 0) throw Error("rrh_demand: user count must be >= 0");
  if (prb_total <= 0) throw Error("rrh_demand: PRB total must be > 0");
  if (users * prb_per_user > prb_total)
    throw Error("rrh_demand: requested PRBs exceed the cell budget");
  return static_cast<double>(prb_per_user) / prb_total * cpri_gbps * users;
}

double derive_alpha(const RadioParams& p) {
  double fs = sampling_frequency_hz(p.radio_bw_hz, p.subcarrier_bw_hz);
  double fronthaul = cpri_rate_gbps(p.iq_width_bits, fs, p.line_coding);
  return backhaul_fronthaul_ratio(lte_mac_rate_gbps(p), fronthaul);
}

DemandSet generate_demands(const Topology& t, double profile_fraction,
                           std::uint32_t seed, const RadioParams& p,
                           double tau) {
  if (profile_fraction < 0 || profile_fraction > 1)
    throw Error("generate_demands: profile fraction must be in [0,1]");
  if (tau < 0 || tau > 1)
    throw Error("generate_demands: tau must be in [0,1]");

  DemandSet d;
  d.tau = tau;
  d.alpha = derive_alpha(p);
  d.users.resize(t.rrh_count);
  d.demand_gbps.resize(t.rrh_count);

  std::mt19937 eng(seed);
  const int max_users = p.prb_total / std::max(1, p.prb_per_user);
  for (int r = 0; r < t.rrh_count; ++r) {
    // mt19937's output sequence is pinned by the standard; the modulo draw
    // keeps the generator portable across library implementations.
    int base = 1 + static_cast<int>(eng() % 10u);
    int scaled = static_cast<int>(std::floor(base * profile_fraction + 0.5));
    d.users[r] = std::clamp(scaled, 0, std::min(10, max_users));
    d.demand_gbps[r] =
        rrh_demand_gbps(d.users[r], p.prb_per_user, p.prb_total,
                        p.cpri_rate_gbps);
  }

  // CNVM inter-traffic: tau * total backhaul between every ordered pair of
  // distinct core-tier hosting nodes; zero when ONU/OLT hosts are involved.
  double level = tau * d.total_backhaul_gbps();
  if (level > 0) {
    for (int m = 0; m < t.core_count; ++m)
      for (int k = 0; k < t.core_count; ++k)
        if (m != k) d.inter_traffic[{t.core_id(m), t.core_id(k)}] = level;
  }
  return d;
}

}  // namespace nfv
