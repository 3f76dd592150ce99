#include <dsopforge/cover.hpp>
#include <dsopforge/errors.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dsopforge
{

cover::cover( std::uint32_t num_vars, std::vector<cube> cubes )
    : _num_vars( num_vars ), _cubes( std::move( cubes ) )
{
  for ( const auto& c : _cubes )
  {
    if ( c.num_vars() != _num_vars )
    {
      throw dimension_mismatch( "cube " + c.to_string() + " in a cover over " + std::to_string( _num_vars ) + " variables" );
    }
  }
}

cover cover::from_strings( std::uint32_t num_vars, std::initializer_list<std::string_view> rows )
{
  cover f( num_vars );
  for ( auto row : rows )
  {
    f.push_back( cube::from_string( row ) );
  }
  return f;
}

cover cover::from_strings( std::uint32_t num_vars, const std::vector<std::string>& rows )
{
  cover f( num_vars );
  for ( const auto& row : rows )
  {
    f.push_back( cube::from_string( row ) );
  }
  return f;
}

void cover::push_back( cube c )
{
  if ( c.num_vars() != _num_vars )
  {
    throw dimension_mismatch( "cube " + c.to_string() + " in a cover over " + std::to_string( _num_vars ) + " variables" );
  }
  _cubes.push_back( std::move( c ) );
}

void cover::append( const cover& other )
{
  if ( other._num_vars != _num_vars )
  {
    throw dimension_mismatch( "cannot append a cover over " + std::to_string( other._num_vars ) + " variables to one over " + std::to_string( _num_vars ) );
  }
  _cubes.insert( _cubes.end(), other._cubes.begin(), other._cubes.end() );
}

std::vector<std::string> cover::to_strings() const
{
  std::vector<std::string> rows;
  rows.reserve( _cubes.size() );
  for ( const auto& c : _cubes )
  {
    rows.push_back( c.to_string() );
  }
  return rows;
}

function_spec::function_spec( cover on_, cover dc_ )
    : on( std::move( on_ ) ), dc( std::move( dc_ ) )
{
  if ( on.num_vars() != dc.num_vars() )
  {
    throw dimension_mismatch( "on and dc covers over different variable counts" );
  }
}

cover function_spec::care_set() const
{
  cover all = on;
  all.append( dc );
  return all;
}

cover normalize( const cover& f )
{
  cover out( f.num_vars() );
  for ( std::size_t i = 0; i < f.size(); ++i )
  {
    bool absorbed = false;
    for ( std::size_t j = 0; j < f.size() && !absorbed; ++j )
    {
      if ( i != j && contains( f[j], f[i] ) )
      {
        /* among identical cubes the first occurrence survives */
        absorbed = j < i || f[j] != f[i];
      }
    }
    if ( !absorbed )
    {
      out.push_back( f[i] );
    }
  }
  return out;
}

cover cofactor( const cover& f, const cube& p )
{
  if ( f.num_vars() != p.num_vars() )
  {
    throw dimension_mismatch( "cofactor: cube and cover over different variable counts" );
  }
  std::vector<std::uint64_t> bound( p.num_words() ), value( p.num_words() );
  cover out( f.num_vars() );
  for ( const auto& c : f )
  {
    if ( !intersects( c, p ) )
    {
      continue;
    }
    for ( std::size_t w = 0; w < p.num_words(); ++w )
    {
      bound[w] = c.bound_word( w ) & ~p.bound_word( w );
      value[w] = c.value_word( w ) & ~p.bound_word( w );
    }
    out.push_back( cube::from_masks( f.num_vars(), bound, value ) );
  }
  return out;
}

namespace
{

bool tautology_rec( const cover& f )
{
  if ( f.empty() )
  {
    return false;
  }

  const auto n = f.num_vars();
  std::vector<std::uint32_t> zeros( n, 0u ), ones( n, 0u );
  for ( const auto& c : f )
  {
    if ( c.is_universe() )
    {
      return true;
    }
    for ( std::size_t w = 0; w < c.num_words(); ++w )
    {
      auto b = c.bound_word( w );
      while ( b != 0u )
      {
        const auto bit = std::countr_zero( b );
        b &= b - 1u;
        const auto var = 64u * w + bit;
        ( ( c.value_word( w ) >> bit ) & 1u ? ones : zeros )[var]++;
      }
    }
  }

  /* volume bound: too few points to fill the space */
  if ( n < 63u )
  {
    std::uint64_t volume = 0u;
    const std::uint64_t space = std::uint64_t{ 1 } << n;
    for ( const auto& c : f )
    {
      volume += std::uint64_t{ 1 } << c.dimension();
      if ( volume >= space )
      {
        break;
      }
    }
    if ( volume < space )
    {
      return false;
    }
  }
  else
  {
    double share = 0.0;
    for ( const auto& c : f )
    {
      share += std::ldexp( 1.0, -static_cast<int>( n - c.dimension() ) );
    }
    if ( share < 1.0 - 1e-9 )
    {
      return false;
    }
  }

  /* cubes with a literal on a unate variable never help */
  std::vector<std::uint32_t> unate;
  for ( std::uint32_t v = 0; v < n; ++v )
  {
    if ( ( zeros[v] > 0u ) != ( ones[v] > 0u ) )
    {
      unate.push_back( v );
    }
  }
  if ( !unate.empty() )
  {
    cover reduced( n );
    for ( const auto& c : f )
    {
      if ( std::none_of( unate.begin(), unate.end(), [&]( auto v ) { return c.at( v ) != trit::free; } ) )
      {
        reduced.push_back( c );
      }
    }
    return tautology_rec( reduced );
  }

  std::uint32_t split = 0u;
  std::uint32_t best = 0u;
  for ( std::uint32_t v = 0; v < n; ++v )
  {
    if ( zeros[v] + ones[v] > best )
    {
      best = zeros[v] + ones[v];
      split = v;
    }
  }

  const cube universe( n );
  return tautology_rec( cofactor( f, universe.with( split, trit::zero ) ) ) &&
         tautology_rec( cofactor( f, universe.with( split, trit::one ) ) );
}

} // namespace

bool is_tautology( const cover& f )
{
  return tautology_rec( f );
}

bool cover_contains_cube( const cover& f, const cube& p )
{
  return is_tautology( cofactor( f, p ) );
}

bool cover_intersects_cube( const cover& f, const cube& p )
{
  return std::any_of( f.begin(), f.end(), [&]( const cube& c ) { return intersects( c, p ); } );
}

std::uint64_t minterm_counts::num_covered() const
{
  return static_cast<std::uint64_t>( std::count_if( _counts.begin(), _counts.end(), []( auto c ) { return c > 0u; } ) );
}

minterm_counts enumerate_minterm_counts( const cover& f, std::uint32_t limit_n )
{
  if ( f.num_vars() > limit_n || f.num_vars() >= 64u )
  {
    throw capacity_error( "enumeration over " + std::to_string( f.num_vars() ) + " variables exceeds the cap of " + std::to_string( limit_n ) +
                          "; use sampling mode" );
  }
  std::vector<std::uint32_t> counts( std::size_t{ 1 } << f.num_vars(), 0u );
  for ( const auto& c : f )
  {
    for_each_minterm( c, [&]( std::uint64_t m ) { counts[m]++; } );
  }
  return minterm_counts( f.num_vars(), std::move( counts ) );
}

} // namespace dsopforge
