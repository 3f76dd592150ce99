#include <dsopforge/errors.hpp>
#include <dsopforge/verify.hpp>

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

namespace dsopforge
{

std::string verification_report::summary() const
{
  std::string s = ok ? "ok" : ( std::to_string( total_violations ) + " violation(s)" );
  s += sampled ? ", sampled " : ", exhaustive ";
  s += std::to_string( points_checked ) + " points";
  if ( !violations.empty() )
  {
    s += "; first: " + violations.front().constraint + " at " + violations.front().minterm + " (observed " + std::to_string( violations.front().observed ) + ")";
  }
  return s;
}

namespace
{

class report_builder
{
public:
  report_builder( verify_mode mode, const verify_options& opts ) : _opts( opts ) { _report.mode = mode; }

  void add( std::string minterm, std::string constraint, std::uint32_t observed )
  {
    _report.ok = false;
    _report.total_violations++;
    if ( _report.violations.size() < _opts.max_reported )
    {
      _report.violations.push_back( { std::move( minterm ), std::move( constraint ), observed } );
    }
  }

  verification_report& report() { return _report; }

private:
  const verify_options& _opts;
  verification_report _report;
};

/* lowest point of a cube, free variables at 0 */
std::string representative( const cube& c )
{
  auto s = c.to_string();
  std::replace( s.begin(), s.end(), '-', '0' );
  return s;
}

std::string point_string( std::uint32_t n, std::uint64_t point )
{
  return cube::from_minterm( n, point ).to_string();
}

std::vector<std::uint8_t> membership( const cover& f )
{
  std::vector<std::uint8_t> in( std::size_t{ 1 } << f.num_vars(), 0u );
  for ( const auto& c : f )
  {
    for_each_minterm( c, [&]( std::uint64_t m ) { in[m] = 1u; } );
  }
  return in;
}

cube random_point( std::uint32_t n, std::mt19937_64& rng )
{
  std::vector<std::uint64_t> bound( ( n + 63u ) / 64u, ~std::uint64_t{ 0 } ), value( bound.size() );
  for ( auto& v : value )
  {
    v = rng();
  }
  return cube::from_masks( n, bound, value );
}

std::uint32_t count_covering( const cover& f, const cube& point )
{
  return static_cast<std::uint32_t>( std::count_if( f.begin(), f.end(), [&]( const cube& c ) { return contains( c, point ); } ) );
}

bool covered( const cover& f, const cube& point )
{
  return std::any_of( f.begin(), f.end(), [&]( const cube& c ) { return contains( c, point ); } );
}

/* Runs `check( point_label, count, classes... )` over all points or a sample.
   `classes` returns a bitmask: 1 = first cover, 2 = second, ... */
template<typename Check>
void scan_points( const cover& solution, const std::vector<const cover*>& classes, const verify_options& opts, verification_report& report, Check&& check )
{
  const auto n = solution.num_vars();
  if ( n <= opts.max_enum && n < 64u )
  {
    const auto counts = enumerate_minterm_counts( solution, opts.max_enum );
    std::vector<std::vector<std::uint8_t>> member;
    for ( const auto* c : classes )
    {
      member.push_back( membership( *c ) );
    }
    for ( std::uint64_t m = 0; m < counts.num_points(); ++m )
    {
      unsigned mask = 0u;
      for ( std::size_t k = 0; k < member.size(); ++k )
      {
        mask |= member[k][m] ? ( 1u << k ) : 0u;
      }
      check( [&] { return point_string( n, m ); }, counts[m], mask );
    }
    report.points_checked = counts.num_points();
    return;
  }

  report.sampled = true;
  report.seed = opts.seed;
  std::mt19937_64 rng( opts.seed );
  for ( std::uint64_t s = 0; s < opts.samples; ++s )
  {
    const auto point = random_point( n, rng );
    unsigned mask = 0u;
    for ( std::size_t k = 0; k < classes.size(); ++k )
    {
      mask |= covered( *classes[k], point ) ? ( 1u << k ) : 0u;
    }
    check( [&] { return point.to_string(); }, count_covering( solution, point ), mask );
  }
  report.points_checked = opts.samples;
}

} // namespace

verification_report verify_dsop( const function_spec& f, const cover& solution, const verify_options& opts )
{
  if ( solution.num_vars() != f.num_vars() )
  {
    throw dimension_mismatch( "verify_dsop: solution and function over different variable counts" );
  }
  report_builder rb( verify_mode::dsop, opts );

  for ( std::size_t i = 0; i < solution.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < solution.size(); ++j )
    {
      if ( auto x = intersect( solution[i], solution[j] ) )
      {
        rb.add( representative( *x ), "pairwise disjoint (" + solution[i].to_string() + " / " + solution[j].to_string() + ")", 2u );
      }
    }
  }

  scan_points( solution, { &f.on, &f.dc }, opts, rb.report(), [&]( auto label, std::uint32_t count, unsigned cls ) {
    if ( cls & 1u )
    {
      if ( count != 1u )
        rb.add( label(), "on: count == 1", count );
    }
    else if ( cls & 2u )
    {
      if ( count > 1u )
        rb.add( label(), "dc: count <= 1", count );
    }
    else if ( count != 0u )
    {
      rb.add( label(), "off: count == 0", count );
    }
  } );
  return std::move( rb.report() );
}

verification_report verify_partial_dsop( const partial_spec& spec, const cover& solution, const verify_options& opts )
{
  if ( solution.num_vars() != spec.num_vars() )
  {
    throw dimension_mismatch( "verify_partial_dsop: solution and spec over different variable counts" );
  }
  report_builder rb( verify_mode::partial, opts );

  const auto many = spec.sop_s.care_set();
  for ( std::size_t i = 0; i < solution.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < solution.size(); ++j )
    {
      auto x = intersect( solution[i], solution[j] );
      if ( x && !cover_contains_cube( many, *x ) )
      {
        rb.add( representative( *x ), "overlap inside sopS (" + solution[i].to_string() + " / " + solution[j].to_string() + ")", 2u );
      }
    }
  }

  scan_points( solution, { &spec.sop_d.on, &spec.sop_s.on, &spec.sop_d.dc, &spec.sop_s.dc }, opts, rb.report(),
               [&]( auto label, std::uint32_t count, unsigned cls ) {
                 if ( cls & 1u )
                 {
                   if ( count != 1u )
                     rb.add( label(), "sopD.on: count == 1", count );
                 }
                 else if ( cls & 2u )
                 {
                   if ( count < 1u )
                     rb.add( label(), "sopS.on: count >= 1", count );
                 }
                 else if ( cls & 4u )
                 {
                   if ( count > 1u )
                     rb.add( label(), "sopD.dc: count <= 1", count );
                 }
                 else if ( ( cls & 8u ) == 0u && count != 0u )
                 {
                   rb.add( label(), "off: count == 0", count );
                 }
               } );
  return std::move( rb.report() );
}

namespace
{

struct exact_search
{
  std::uint64_t on;
  std::vector<std::uint64_t> masks; /* candidate point sets, largest first */
  std::vector<cube> cubes;
  std::vector<std::size_t> chosen;
  std::vector<std::unordered_set<std::uint64_t>> failed; /* by remaining depth */
  int max_size{ 0 };

  bool dfs( std::uint64_t used, int remaining )
  {
    const auto open = on & ~used;
    if ( open == 0u )
    {
      return true;
    }
    if ( remaining == 0 || failed[remaining].contains( used ) )
    {
      return false;
    }
    if ( std::popcount( open ) > remaining * max_size )
    {
      return false;
    }
    const auto point = open & ( ~open + 1u );
    for ( std::size_t i = 0; i < masks.size(); ++i )
    {
      if ( ( masks[i] & point ) != 0u && ( masks[i] & used ) == 0u )
      {
        chosen.push_back( i );
        if ( dfs( used | masks[i], remaining - 1 ) )
        {
          return true;
        }
        chosen.pop_back();
      }
    }
    failed[remaining].insert( used );
    return false;
  }
};

} // namespace

cover exact_min_dsop( const function_spec& f, std::uint32_t max_n )
{
  const auto n = f.num_vars();
  if ( n > max_n || n > exact_solver_hard_limit )
  {
    throw capacity_error( "exact_min_dsop: " + std::to_string( n ) + " variables exceeds the cap of " +
                          std::to_string( std::min( max_n, exact_solver_hard_limit ) ) );
  }

  std::uint64_t on = 0u, care = 0u;
  for ( const auto& c : f.on )
  {
    for_each_minterm( c, [&]( std::uint64_t m ) { on |= std::uint64_t{ 1 } << m; } );
  }
  care = on;
  for ( const auto& c : f.dc )
  {
    for_each_minterm( c, [&]( std::uint64_t m ) { care |= std::uint64_t{ 1 } << m; } );
  }
  if ( on == 0u )
  {
    return cover( n );
  }

  exact_search search;
  search.on = on;
  std::uint64_t codes = 1u;
  for ( std::uint32_t i = 0; i < n; ++i )
  {
    codes *= 3u;
  }
  std::vector<std::pair<std::uint64_t, cube>> candidates;
  for ( std::uint64_t code = 0; code < codes; ++code )
  {
    cube c( n );
    auto rest = code;
    for ( std::uint32_t v = 0; v < n; ++v, rest /= 3u )
    {
      c = c.with( v, rest % 3u == 0u ? trit::free : ( rest % 3u == 1u ? trit::zero : trit::one ) );
    }
    std::uint64_t mask = 0u;
    for_each_minterm( c, [&]( std::uint64_t m ) { mask |= std::uint64_t{ 1 } << m; } );
    if ( ( mask & ~care ) == 0u && ( mask & on ) != 0u )
    {
      candidates.emplace_back( mask, std::move( c ) );
    }
  }
  std::stable_sort( candidates.begin(), candidates.end(), []( const auto& a, const auto& b ) { return std::popcount( a.first ) > std::popcount( b.first ); } );
  for ( auto& [mask, c] : candidates )
  {
    search.masks.push_back( mask );
    search.cubes.push_back( c );
  }
  search.max_size = std::popcount( search.masks.front() );

  for ( int k = 1;; ++k )
  {
    search.failed.assign( static_cast<std::size_t>( k ) + 1u, {} );
    search.chosen.clear();
    if ( search.dfs( 0u, k ) )
    {
      cover out( n );
      for ( auto i : search.chosen )
      {
        out.push_back( search.cubes[i] );
      }
      return out;
    }
  }
}

function_spec chain_family( std::uint32_t m )
{
  if ( m == 0u )
  {
    throw std::invalid_argument( "chain_family needs m >= 1" );
  }
  function_spec f( 2u * m );
  for ( std::uint32_t i = 0; i < m; ++i )
  {
    f.on.push_back( cube( 2u * m ).with( 2u * i, trit::one ).with( 2u * i + 1u, trit::one ) );
  }
  return f;
}

} // namespace dsopforge
