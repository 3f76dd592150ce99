/*!
  \file partial_dsop.hpp
  \brief Covers where some points must be covered once and others any number of times

  A partial_spec pairs two point-disjoint functions: `sop_d`,
  whose points must be covered exactly once (its don't cares at most once),
  and `sop_s`, whose points may be covered any number of times.
*/

#pragma once

#include "dsop.hpp"

#include <utility>

namespace dsopforge
{

struct partial_spec
{
  function_spec sop_d;
  function_spec sop_s;

  partial_spec() = default;
  partial_spec( function_spec d, function_spec s );

  std::uint32_t num_vars() const noexcept { return sop_d.num_vars(); }

  /*! \brief Throws input_error if some cube of sop_d overlaps some cube of sop_s */
  void check_disjoint() const;
};

/*! \brief Breaks q against the selected cube p

  With x = q ∩ p: if x lies inside sop_s nothing is broken and both results
  are empty; otherwise the first result is disjoint_sharp( q, p ), and when
  x is not inside sop_d either, the second lists x ∩ s for every cube s of
  sop_s that meets x.  Throws contract_violation on disjoint q and p.
*/
std::pair<cover, cover> partial_break( const cube& q, const cube& p, const partial_spec& spec );

/*! \brief Partial DSOP: sop_d.on exactly once, sop_s.on at least once, sop_d.dc at most once */
cover partial_dsop( const partial_spec& spec, const dsop_config& cfg = {}, const dsop_hooks& hooks = {} );

} // namespace dsopforge
