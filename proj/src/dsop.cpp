#include "engine.hpp"

#include <dsopforge/errors.hpp>

#include <algorithm>
#include <stdexcept>

namespace dsopforge
{

std::string to_string( sort_policy policy )
{
  return policy == sort_policy::dimension_weight ? "dw" : "wd";
}

sort_policy parse_sort_policy( const std::string& s )
{
  if ( s == "dw" || s == "dimension_weight" )
  {
    return sort_policy::dimension_weight;
  }
  if ( s == "wd" || s == "weight_dimension" )
  {
    return sort_policy::weight_dimension;
  }
  throw std::invalid_argument( "unknown sort policy '" + s + "' (expected dw or wd)" );
}

void dsop_config::validate() const
{
  if ( variant < 1 || variant > 5 )
  {
    throw std::invalid_argument( "variant must be in 1..5, got " + std::to_string( variant ) );
  }
}

int relative_weight( const cube& p, const cube& q )
{
  if ( !intersects( p, q ) )
  {
    throw contract_violation( "relative_weight of disjoint cubes " + p.to_string() + " and " + q.to_string() );
  }
  return static_cast<int>( p.literal_count() ) - static_cast<int>( common_literal_count( p, q ) ) - 1;
}

namespace
{

int weight_against( const cube& p, std::span<const cube> peers, std::size_t self )
{
  int weight = 0;
  bool overlaps = false;
  for ( std::size_t j = 0; j < peers.size(); ++j )
  {
    if ( j != self && intersects( p, peers[j] ) )
    {
      overlaps = true;
      weight += static_cast<int>( p.literal_count() ) - static_cast<int>( common_literal_count( p, peers[j] ) ) - 1;
    }
  }
  return overlaps ? weight : -1;
}

bool before( const cube& a, int wa, const cube& b, int wb, sort_policy policy )
{
  const auto da = a.dimension(), db = b.dimension();
  if ( policy == sort_policy::dimension_weight )
  {
    if ( da != db )
      return da > db;
    if ( wa != wb )
      return wa < wb;
  }
  else
  {
    if ( wa != wb )
      return wa < wb;
    if ( da != db )
      return da > db;
  }
  return trit_order( a, b ) < 0;
}

} // namespace

std::vector<weighted_cube> weight_all( const cover& sop )
{
  std::vector<weighted_cube> out;
  out.reserve( sop.size() );
  for ( std::size_t i = 0; i < sop.size(); ++i )
  {
    out.push_back( { sop[i], weight_against( sop[i], sop.cubes(), i ) } );
  }
  return out;
}

std::vector<weighted_cube> sort_cubes( std::vector<weighted_cube> cubes, sort_policy policy )
{
  std::stable_sort( cubes.begin(), cubes.end(), [policy]( const auto& a, const auto& b ) { return before( a.c, a.weight, b.c, b.weight, policy ); } );
  return cubes;
}

bool covers_only_dc( const cube& p, const cover& original_on )
{
  return !cover_intersects_cube( original_on, p );
}

namespace detail
{

namespace
{

struct entry
{
  cube c;
  int weight;
  std::uint64_t id;
};

class working_set
{
public:
  working_set( sort_policy policy ) : _policy( policy ) {}

  std::vector<entry>& items() { return _items; }

  void add( cube c, int weight = -1 ) { _items.push_back( { std::move( c ), weight, _next_id++ } ); }

  void reweight( entry& e )
  {
    int weight = 0;
    bool overlaps = false;
    for ( const auto& other : _items )
    {
      if ( other.id != e.id && intersects( e.c, other.c ) )
      {
        overlaps = true;
        weight += static_cast<int>( e.c.literal_count() ) - static_cast<int>( common_literal_count( e.c, other.c ) ) - 1;
      }
    }
    e.weight = overlaps ? weight : -1;
  }

  void reweight_all()
  {
    for ( auto& e : _items )
    {
      reweight( e );
    }
  }

  void sort()
  {
    std::stable_sort( _items.begin(), _items.end(), [this]( const entry& a, const entry& b ) { return before( a.c, a.weight, b.c, b.weight, _policy ); } );
  }

  std::vector<entry>::iterator find( std::uint64_t id )
  {
    return std::find_if( _items.begin(), _items.end(), [id]( const entry& e ) { return e.id == id; } );
  }

private:
  sort_policy _policy;
  std::vector<entry> _items;
  std::uint64_t _next_id{ 0 };
};

/* fragment handling after q was broken into `frags` */
void apply_variant( int variant, const cube& q, const cover& frags, working_set& work, cover& pending )
{
  auto& items = work.items();
  switch ( variant )
  {
  case 1:
    pending.append( frags );
    break;

  case 2:
    pending.append( frags );
    for ( auto& e : items )
    {
      if ( intersects( e.c, q ) )
      {
        work.reweight( e );
      }
    }
    work.sort();
    break;

  case 3:
  {
    pending.append( frags );
    std::vector<entry> kept;
    for ( auto& e : items )
    {
      if ( intersects( e.c, q ) )
      {
        pending.push_back( e.c );
      }
      else
      {
        kept.push_back( std::move( e ) );
      }
    }
    items = std::move( kept );
    break;
  }

  case 4:
    if ( frags.size() == 1u )
    {
      work.add( frags[0] );
    }
    else
    {
      pending.append( frags );
    }
    work.reweight_all();
    work.sort();
    break;

  case 5:
    if ( !frags.empty() )
    {
      std::size_t big = 0;
      for ( std::size_t i = 1; i < frags.size(); ++i )
      {
        const auto di = frags[i].dimension(), db = frags[big].dimension();
        if ( di > db || ( di == db && trit_order( frags[i], frags[big] ) < 0 ) )
        {
          big = i;
        }
      }
      work.add( frags[big] );
      for ( std::size_t i = 0; i < frags.size(); ++i )
      {
        if ( i != big )
        {
          pending.push_back( frags[i] );
        }
      }
    }
    work.reweight_all();
    work.sort();
    break;

  default:
    throw std::invalid_argument( "variant must be in 1..5" );
  }
}

} // namespace

cover run_pass( const cover& sop, const dsop_config& cfg, const cover& original_on, const break_fn& breaker,
                cover& solution, const feedback_fn& on_feedback )
{
  const auto n = sop.num_vars();
  working_set work( cfg.sort );

  for ( std::size_t i = 0; i < sop.size(); ++i )
  {
    bool isolated = true;
    for ( std::size_t j = 0; j < sop.size() && isolated; ++j )
    {
      isolated = i == j || !intersects( sop[i], sop[j] );
    }
    if ( !isolated )
    {
      work.add( sop[i] );
    }
    else if ( !cfg.drop_dc_only || !covers_only_dc( sop[i], original_on ) )
    {
      solution.push_back( sop[i] );
    }
  }
  work.reweight_all();
  work.sort();

  const auto report = [&]( const cover& feedback ) {
    if ( on_feedback && !feedback.empty() )
    {
      on_feedback( feedback, solution );
    }
  };

  cover pending( n );
  auto& items = work.items();
  while ( !items.empty() )
  {
    const cube p = items.front().c;
    items.erase( items.begin() );

    /* a skipped dc-only cube neither enters the solution nor breaks its neighbours */
    if ( cfg.drop_dc_only && covers_only_dc( p, original_on ) )
    {
      continue;
    }
    solution.push_back( p );

    std::vector<std::uint64_t> targets;
    for ( const auto& e : items )
    {
      if ( intersects( e.c, p ) )
      {
        targets.push_back( e.id );
      }
    }
    for ( auto id : targets )
    {
      auto it = work.find( id );
      if ( it == items.end() )
      {
        continue;
      }
      const cube q = it->c;
      auto outcome = breaker( q, p );
      report( outcome.feedback );
      if ( !outcome.consumed )
      {
        continue;
      }
      items.erase( it );
      /* nothing left of q: OPT has no fragments to place */
      if ( !outcome.fragments.empty() )
      {
        apply_variant( cfg.variant, q, outcome.fragments, work, pending );
      }
    }

    cover rebroken( n );
    for ( const auto& r : pending )
    {
      if ( !intersects( r, p ) )
      {
        rebroken.push_back( r );
        continue;
      }
      auto outcome = breaker( r, p );
      report( outcome.feedback );
      if ( outcome.consumed )
      {
        rebroken.append( outcome.fragments );
      }
      else
      {
        rebroken.push_back( r );
      }
    }
    pending = std::move( rebroken );
  }
  return pending;
}

} // namespace detail

cover dsop( const function_spec& f, const dsop_config& cfg, const dsop_hooks& hooks )
{
  cfg.validate();
  const auto breaker = []( const cube& q, const cube& p ) {
    return detail::break_outcome{ disjoint_sharp( q, p ), cover( q.num_vars() ), true };
  };

  cover solution( f.num_vars() );
  /* only the first minimization sees the don't cares */
  function_spec current = f;
  for ( std::uint64_t pass = 0; !current.on.empty(); ++pass )
  {
    if ( pass >= cfg.max_outer_iterations )
    {
      throw progress_error( "dsop did not converge within " + std::to_string( cfg.max_outer_iterations ) + " passes" );
    }
    const auto sop = build_sop( current, cfg.backend );
    auto pending = detail::run_pass( sop, cfg, f.on, breaker, solution, {} );
    if ( hooks.on_pass )
    {
      hooks.on_pass( { pass, current.on, solution } );
    }
    current = function_spec( std::move( pending ), cover( f.num_vars() ) );
  }
  return solution;
}

} // namespace dsopforge
