#pragma once

#include <dsopforge/dsop.hpp>

#include <functional>

namespace dsopforge::detail
{

/* Outcome of breaking q against a selected cube p.  `consumed` is false when
   q may keep overlapping p and stays where it is. */
struct break_outcome
{
  cover fragments;
  cover feedback;
  bool consumed{ true };
};

using break_fn = std::function<break_outcome( const cube& q, const cube& p )>;
using feedback_fn = std::function<void( const cover& feedback, const cover& solution )>;

/* One inner pass over a freshly minimized SOP: isolated cubes go straight to
   `solution`, the rest are selected in weight order.  Returns the leftover
   fragments that still need covering. */
cover run_pass( const cover& sop, const dsop_config& cfg, const cover& original_on, const break_fn& breaker,
                cover& solution, const feedback_fn& on_feedback );

} // namespace dsopforge::detail
