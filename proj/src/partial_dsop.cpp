#include "engine.hpp"

#include <dsopforge/errors.hpp>
#include <dsopforge/partial_dsop.hpp>

namespace dsopforge
{

partial_spec::partial_spec( function_spec d, function_spec s )
    : sop_d( std::move( d ) ), sop_s( std::move( s ) )
{
  if ( sop_d.num_vars() != sop_s.num_vars() )
  {
    throw dimension_mismatch( "sopD and sopS over different variable counts" );
  }
}

void partial_spec::check_disjoint() const
{
  const auto d = sop_d.care_set();
  const auto s = sop_s.care_set();
  for ( const auto& a : d )
  {
    for ( const auto& b : s )
    {
      if ( intersects( a, b ) )
      {
        throw input_error( "sopD cube " + a.to_string() + " overlaps sopS cube " + b.to_string() );
      }
    }
  }
}

namespace
{

struct break_context
{
  cover once;
  cover many;
};

detail::break_outcome classify_break( const cube& q, const cube& p, const break_context& ctx )
{
  const auto overlap = intersect( q, p );
  if ( !overlap )
  {
    throw contract_violation( "partial_break called on disjoint cubes " + q.to_string() + " and " + p.to_string() );
  }
  detail::break_outcome out{ cover( q.num_vars() ), cover( q.num_vars() ), true };
  if ( cover_contains_cube( ctx.many, *overlap ) )
  {
    out.consumed = false;
    return out;
  }
  out.fragments = disjoint_sharp( q, p );
  if ( !cover_contains_cube( ctx.once, *overlap ) )
  {
    for ( const auto& s : ctx.many )
    {
      if ( auto shared = intersect( *overlap, s ) )
      {
        out.feedback.push_back( *shared );
      }
    }
  }
  return out;
}

} // namespace

std::pair<cover, cover> partial_break( const cube& q, const cube& p, const partial_spec& spec )
{
  auto out = classify_break( q, p, { spec.sop_d.care_set(), spec.sop_s.care_set() } );
  return { std::move( out.fragments ), std::move( out.feedback ) };
}

cover partial_dsop( const partial_spec& spec, const dsop_config& cfg, const dsop_hooks& hooks )
{
  cfg.validate();
  const auto n = spec.num_vars();
  const break_context ctx{ spec.sop_d.care_set(), spec.sop_s.care_set() };
  const auto breaker = [&ctx]( const cube& q, const cube& p ) { return classify_break( q, p, ctx ); };

  cover original_on = spec.sop_d.on;
  original_on.append( spec.sop_s.on );

  cover feedback( n );
  const auto collect = [&]( const cover& r, const cover& solution ) {
    feedback.append( r );
    if ( hooks.on_feedback )
    {
      hooks.on_feedback( r, solution );
    }
  };

  cover solution( n );
  function_spec current( original_on, spec.sop_d.dc );
  current.dc.append( spec.sop_s.dc );
  for ( std::uint64_t pass = 0; !current.on.empty(); ++pass )
  {
    if ( pass >= cfg.max_outer_iterations )
    {
      throw progress_error( "partial_dsop did not converge within " + std::to_string( cfg.max_outer_iterations ) + " passes" );
    }
    const auto sop = build_sop( current, cfg.backend );
    const auto pending = detail::run_pass( sop, cfg, original_on, breaker, solution, collect );
    if ( hooks.on_pass )
    {
      hooks.on_pass( { pass, current.on, solution } );
    }

    /* unbroken leftovers may already be covered through sopS overlaps */
    cover next( n );
    for ( const auto& r : pending )
    {
      if ( !cover_contains_cube( solution, r ) )
      {
        next.push_back( r );
      }
    }
    /* sopD don't cares are dropped after the first pass so none is covered twice */
    current = function_spec( std::move( next ), spec.sop_s.dc );
    current.dc.append( feedback );
  }
  return solution;
}

} // namespace dsopforge
