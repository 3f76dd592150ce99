#include <dsopforge/cover.hpp>
#include <dsopforge/cube.hpp>
#include <dsopforge/errors.hpp>

#include <bit>
#include <stdexcept>

namespace dsopforge
{

namespace
{

std::size_t words_for( std::uint32_t num_vars )
{
  return ( num_vars + 63u ) / 64u;
}

std::uint64_t tail_mask( std::uint32_t num_vars, std::size_t w )
{
  const auto rest = num_vars - 64u * w;
  return rest >= 64u ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << rest ) - 1u );
}

} // namespace

cube::cube( std::uint32_t num_vars )
    : _num_vars( num_vars ), _words( 2 * words_for( num_vars ), 0u )
{
}

cube cube::from_string( std::string_view str )
{
  cube c( static_cast<std::uint32_t>( str.size() ) );
  for ( std::uint32_t i = 0; i < str.size(); ++i )
  {
    switch ( str[i] )
    {
    case '0':
      c.set( i, trit::zero );
      break;
    case '1':
      c.set( i, trit::one );
      break;
    case '-':
    case '2':
    case '~':
      break;
    default:
      throw std::invalid_argument( "invalid cube character '" + std::string( 1, str[i] ) + "' in \"" + std::string( str ) + "\"" );
    }
  }
  return c;
}

cube cube::from_masks( std::uint32_t num_vars, std::span<const std::uint64_t> bound, std::span<const std::uint64_t> value )
{
  cube c( num_vars );
  for ( std::size_t w = 0; w < c.num_words(); ++w )
  {
    const auto b = ( w < bound.size() ? bound[w] : 0u ) & tail_mask( num_vars, w );
    const auto v = ( w < value.size() ? value[w] : 0u ) & b;
    c._words[2 * w] = b;
    c._words[2 * w + 1] = v;
  }
  return c;
}

cube cube::from_minterm( std::uint32_t num_vars, std::uint64_t point )
{
  if ( num_vars > 64u )
  {
    throw std::invalid_argument( "from_minterm supports at most 64 variables" );
  }
  const std::uint64_t all = ~std::uint64_t{ 0 };
  return from_masks( num_vars, std::span( &all, 1 ), std::span( &point, 1 ) );
}

trit cube::at( std::uint32_t var ) const
{
  if ( var >= _num_vars )
  {
    throw std::out_of_range( "cube variable index out of range" );
  }
  const auto bit = std::uint64_t{ 1 } << ( var % 64u );
  const auto w = var / 64u;
  if ( ( bound_word( w ) & bit ) == 0u )
  {
    return trit::free;
  }
  return ( value_word( w ) & bit ) ? trit::one : trit::zero;
}

cube cube::with( std::uint32_t var, trit t ) const
{
  if ( var >= _num_vars )
  {
    throw std::out_of_range( "cube variable index out of range" );
  }
  cube c = *this;
  c.set( var, t );
  return c;
}

void cube::set( std::uint32_t var, trit t )
{
  const auto bit = std::uint64_t{ 1 } << ( var % 64u );
  auto& b = _words[2 * ( var / 64u )];
  auto& v = _words[2 * ( var / 64u ) + 1];
  switch ( t )
  {
  case trit::zero:
    b |= bit;
    v &= ~bit;
    break;
  case trit::one:
    b |= bit;
    v |= bit;
    break;
  case trit::free:
    b &= ~bit;
    v &= ~bit;
    break;
  }
}

std::uint32_t cube::literal_count() const noexcept
{
  std::uint32_t k = 0;
  for ( std::size_t w = 0; w < num_words(); ++w )
  {
    k += static_cast<std::uint32_t>( std::popcount( bound_word( w ) ) );
  }
  return k;
}

std::string cube::to_string() const
{
  std::string s( _num_vars, '-' );
  for ( std::uint32_t i = 0; i < _num_vars; ++i )
  {
    const auto t = at( i );
    if ( t != trit::free )
    {
      s[i] = t == trit::one ? '1' : '0';
    }
  }
  return s;
}

std::size_t cube::hash() const noexcept
{
  std::size_t h = _num_vars;
  for ( auto w : _words )
  {
    h ^= std::hash<std::uint64_t>{}( w ) + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
  }
  return h;
}

void check_same_vars( const cube& p, const cube& q )
{
  if ( p.num_vars() != q.num_vars() )
  {
    throw dimension_mismatch( "cubes over " + std::to_string( p.num_vars() ) + " and " + std::to_string( q.num_vars() ) + " variables" );
  }
}

std::optional<cube> intersect( const cube& p, const cube& q )
{
  if ( !intersects( p, q ) )
  {
    return std::nullopt;
  }
  cube r = p;
  for ( std::size_t w = 0; w < p.num_words(); ++w )
  {
    r._words[2 * w] |= q.bound_word( w );
    r._words[2 * w + 1] |= q.value_word( w );
  }
  return r;
}

bool intersects( const cube& p, const cube& q )
{
  check_same_vars( p, q );
  for ( std::size_t w = 0; w < p.num_words(); ++w )
  {
    if ( p.bound_word( w ) & q.bound_word( w ) & ( p.value_word( w ) ^ q.value_word( w ) ) )
    {
      return false;
    }
  }
  return true;
}

bool contains( const cube& p, const cube& q )
{
  check_same_vars( p, q );
  for ( std::size_t w = 0; w < p.num_words(); ++w )
  {
    const auto pb = p.bound_word( w );
    if ( ( pb & ~q.bound_word( w ) ) != 0u || ( ( p.value_word( w ) ^ q.value_word( w ) ) & pb ) != 0u )
    {
      return false;
    }
  }
  return true;
}

std::uint32_t common_literal_count( const cube& p, const cube& q )
{
  check_same_vars( p, q );
  std::uint32_t c = 0;
  for ( std::size_t w = 0; w < p.num_words(); ++w )
  {
    const auto same = p.bound_word( w ) & q.bound_word( w ) & ~( p.value_word( w ) ^ q.value_word( w ) );
    c += static_cast<std::uint32_t>( std::popcount( same ) );
  }
  return c;
}

cover disjoint_sharp( const cube& q, const cube& p )
{
  const auto r = intersect( q, p );
  if ( !r )
  {
    throw contract_violation( "disjoint_sharp called on disjoint cubes " + q.to_string() + " and " + p.to_string() );
  }

  cover fragments( q.num_vars() );
  cube prefix = q;
  for ( std::size_t w = 0; w < q.num_words(); ++w )
  {
    auto split = r->bound_word( w ) & ~q.bound_word( w );
    while ( split != 0u )
    {
      const auto bit = split & ( ~split + 1u );
      split ^= bit;

      cube frag = prefix;
      frag._words[2 * w] |= bit;
      frag._words[2 * w + 1] = ( frag._words[2 * w + 1] & ~bit ) | ( ~r->value_word( w ) & bit );
      fragments.push_back( std::move( frag ) );

      prefix._words[2 * w] |= bit;
      prefix._words[2 * w + 1] |= r->value_word( w ) & bit;
    }
  }
  return fragments;
}

std::strong_ordering trit_order( const cube& a, const cube& b )
{
  check_same_vars( a, b );
  for ( std::size_t w = 0; w < a.num_words(); ++w )
  {
    const auto diff = ( a.bound_word( w ) ^ b.bound_word( w ) ) | ( a.value_word( w ) ^ b.value_word( w ) );
    if ( diff == 0u )
    {
      continue;
    }
    const auto var = static_cast<std::uint32_t>( 64u * w + std::countr_zero( diff ) );
    /* ASCII: '-' < '0' < '1' */
    const auto rank = []( trit t ) { return t == trit::free ? 0 : ( t == trit::zero ? 1 : 2 ); };
    return rank( a.at( var ) ) <=> rank( b.at( var ) );
  }
  return std::strong_ordering::equal;
}

} // namespace dsopforge
