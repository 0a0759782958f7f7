//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DUALBAND_ORACLE_HPP_
#define DUALBAND_ORACLE_HPP_

#include "dualband/linkmodel.hpp"

namespace dualband {

/// Grid refinement schedule. Each round re-grids a window around the
/// incumbent shrunk by shrink_factor, clamped to the global bounds.
struct GridSpec {
  int points_per_axis = 32;
  int refinement_rounds = 4;
  double shrink_factor = 0.25;
};

struct GridResult {
  Allocation allocation;
  double objective = 0.0;         // nats/s (sum rate) or nats/joule (ee)
  double resolution_bound = 0.0;  // estimated max gap from grid spacing
};

/// Exhaustive verification search for the budgeted sum-rate problem. Powers
/// are parameterized on the budget-equality surface (the constraint binds at
/// any optimum with positive transmit power), one grid per activation
/// pattern.
GridResult grid_search_sumrate(const Sub6Channel& ch, const MmWaveLink& link,
                               const SystemParams& params,
                               const GridSpec& spec = {});
GridResult grid_search_sumrate_model(const RateModel& model,
                                     const SystemParams& params,
                                     const GridSpec& spec = {});

/// Exhaustive verification search for the energy-efficiency problem (box
/// constraints only; powers capped at p_cap).
GridResult grid_search_ee(const Sub6Channel& ch, const MmWaveLink& link,
                          const SystemParams& params, const GridSpec& spec = {},
                          double p_cap = 100.0);
GridResult grid_search_ee_model(const RateModel& model,
                                const SystemParams& params,
                                const GridSpec& spec = {},
                                double p_cap = 100.0);

}  // namespace dualband

#endif  // DUALBAND_ORACLE_HPP_
