/* Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

   Tolerances are fixed here and printed with each line:
     1  weights exact, one call (after a warm-up) under 1 ms
     2  4 cubes, point set equal to the reference, verify_dsop ok
     3  4 cubes, point set equal to the reference, verify_partial_dsop ok
     4  sharp example exact; 10,000 random overlapping pairs (n <= 12) under 10 s
     5  1,000 functions and 1,000 partial specs (n <= 8) x 10 configurations under 300 s
     6  200 functions (n <= 4): heuristic >= exact; equality on single-cube inputs and on inputs whose
        minimized cover is already disjoint
     7  chain m = 2, 3: exact == heuristic == 2^m - 1
     8  bench grid over tests/data/bench: every row verified, sizes >= exact per output where n <= 5
*/

#include <dsopforge/driver.hpp>
#include <dsopforge/dsop.hpp>
#include <dsopforge/partial_dsop.hpp>
#include <dsopforge/verify.hpp>

#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>

using namespace dsopforge;

namespace
{

using clock_type = std::chrono::steady_clock;

double seconds_since( clock_type::time_point t )
{
  return std::chrono::duration<double>( clock_type::now() - t ).count();
}

struct outcome
{
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion( int id, const char* title, const std::function<outcome()>& body )
{
  outcome r;
  try
  {
    r = body();
  }
  catch ( const std::exception& e )
  {
    r = { false, std::string( "exception: " ) + e.what() };
  }
  failures += r.pass ? 0 : 1;
  std::printf( "[%s] %d %s: %s\n", r.pass ? "PASS" : "FAIL", id, title, r.detail.c_str() );
  std::fflush( stdout );
}

template<typename... Args>
std::string fmt( const char* f, Args... args )
{
  char buf[512];
  std::snprintf( buf, sizeof buf, f, args... );
  return buf;
}

const cover four_cube_cover = cover::from_strings( 4, { "01--", "1-1-", "0-0-", "-1-1" } );

std::vector<dsop_config> all_configs()
{
  std::vector<dsop_config> out;
  for ( int v = 1; v <= 5; ++v )
  {
    for ( auto s : { sort_policy::dimension_weight, sort_policy::weight_dimension } )
    {
      dsop_config cfg;
      cfg.variant = v;
      cfg.sort = s;
      out.push_back( cfg );
    }
  }
  return out;
}

bool pairwise_disjoint( const cover& f )
{
  for ( std::size_t i = 0; i < f.size(); ++i )
    for ( std::size_t j = i + 1; j < f.size(); ++j )
      if ( intersects( f[i], f[j] ) )
        return false;
  return true;
}

outcome golden_weights()
{
  weight_all( four_cube_cover );
  const auto t = clock_type::now();
  const auto w = weight_all( four_cube_cover );
  const double ms = seconds_since( t ) * 1e3;

  std::map<std::string, int> got;
  for ( const auto& x : w )
    got[x.c.to_string()] = x.weight;
  const bool exact = got["0-0-"] == 1 && got["-1-1"] == 2 && got["01--"] == 0 && got["1-1-"] == 1;
  return { exact && ms < 1.0, fmt( "w(A)=%d w(B)=%d w(C)=%d w(D)=%d (want 1 2 0 1), %.4f ms (limit 1 ms)", got["0-0-"], got["-1-1"], got["01--"],
                                   got["1-1-"], ms ) };
}

outcome golden_dsop()
{
  const function_spec f( four_cube_cover, cover( 4 ) );
  dsop_config cfg;
  cfg.variant = 1;
  const auto d = dsop( f, cfg );
  const bool same = oracle::points( d ) == oracle::points( 4, { "01--", "1-1-", "000-", "1101" } );
  const bool ok = verify_dsop( f, d ).ok;
  std::string cubes;
  for ( const auto& c : d )
    cubes += c.to_string() + " ";
  return { d.size() == 4u && same && ok, fmt( "size %zu (want 4), point-equal %s, verify %s; D = %s", d.size(), same ? "yes" : "no", ok ? "ok" : "FAILED", cubes.c_str() ) };
}

outcome golden_partial()
{
  const partial_spec spec( function_spec( cover::from_strings( 4, { "011-", "1101" } ), cover( 4 ) ),
                           function_spec( cover::from_strings( 4, { "0-0-", "1-1-" } ), cover( 4 ) ) );
  dsop_config cfg;
  cfg.variant = 1;
  const auto d = partial_dsop( spec, cfg );
  const bool same = oracle::points( d ) == oracle::points( 4, { "01--", "1-1-", "0-0-", "11-1" } );
  const bool ok = verify_partial_dsop( spec, d ).ok;
  return { d.size() == 4u && same && ok, fmt( "size %zu (want 4), point-equal %s, verify %s", d.size(), same ? "yes" : "no", ok ? "ok" : "FAILED" ) };
}

outcome sharp_identities()
{
  const auto t = clock_type::now();
  const auto ex = disjoint_sharp( cube::from_string( "0-0-" ), cube::from_string( "-1-1" ) ).to_strings();
  const bool example = ex == std::vector<std::string>{ "000-", "0100" };

  std::mt19937_64 rng( 0xacce5501 );
  int pairs = 0, bad = 0;
  while ( pairs < 10000 )
  {
    const auto n = 1u + static_cast<std::uint32_t>( rng() % 12u );
    const auto qs = oracle::random_cube( rng, n ), ps = oracle::random_cube( rng, n );
    const auto q = cube::from_string( qs ), p = cube::from_string( ps );
    const auto r = intersect( q, p );
    if ( !r )
      continue;
    ++pairs;
    const auto frags = disjoint_sharp( q, p );
    bool ok = frags.size() == r->literal_count() - q.literal_count();
    const auto cnt = oracle::counts( n, frags.to_strings() );
    for ( std::uint64_t m = 0; ok && m < cnt.size(); ++m )
      ok = cnt[m] == ( oracle::point_in( qs, m ) && !oracle::point_in( ps, m ) ? 1u : 0u );
    bad += ok ? 0 : 1;
  }
  const double s = seconds_since( t );
  return { example && bad == 0 && s < 10.0,
           fmt( "example %s, %d/%d pairs obey count law and enumeration, %.2f s (limit 10 s)", example ? "exact" : "WRONG", pairs - bad, pairs, s ) };
}

outcome soundness_sweep()
{
  const auto t = clock_type::now();
  std::mt19937_64 rng( 0xacce5502 );
  const auto configs = all_configs();
  int runs = 0, bad = 0, prunes = 0, pbad = 0;
  for ( int i = 0; i < 1000; ++i )
  {
    const auto n = 1u + static_cast<std::uint32_t>( rng() % 8u );
    const auto f = oracle::random_function( rng, n );
    for ( const auto& cfg : configs )
    {
      const auto d = dsop( f, cfg );
      ++runs;
      bad += verify_dsop( f, d ).ok && oracle::is_dsop_of( f, d ) ? 0 : 1;
    }
  }
  for ( int i = 0; i < 1000; ++i )
  {
    const auto n = 1u + static_cast<std::uint32_t>( rng() % 8u );
    const auto spec = oracle::random_partial( rng, n );
    for ( const auto& cfg : configs )
    {
      const auto d = partial_dsop( spec, cfg );
      ++prunes;
      pbad += verify_partial_dsop( spec, d ).ok && oracle::is_partial_dsop_of( spec, d ) ? 0 : 1;
    }
  }
  const double s = seconds_since( t );
  return { bad == 0 && pbad == 0 && s < 300.0,
           fmt( "dsop %d/%d verified, partial %d/%d verified, %.1f s (limit 300 s)", runs - bad, runs, prunes - pbad, prunes, s ) };
}

/* 200 functions: a third single on-cubes, a third pairwise-disjoint on-covers, the rest random truth tables */
outcome oracle_floor()
{
  std::mt19937_64 rng( 0xacce5503 );
  const auto configs = all_configs();
  int below = 0, single = 0, single_miss = 0, disjoint = 0, disjoint_miss = 0, given = 0, given_miss = 0, gaps = 0, zero_gap = 0, max_gap = 0;
  long gap_sum = 0;
  for ( int i = 0; i < 200; ++i )
  {
    const auto n = 1u + static_cast<std::uint32_t>( rng() % 4u );
    function_spec f( n );
    const int kind = i % 3;
    if ( kind == 0 )
    {
      f.on.push_back( cube::from_string( oracle::random_cube( rng, n ) ) );
      if ( rng() & 1u )
        f.dc = oracle::random_cover( rng, n, 2u );
    }
    else if ( kind == 1 && ( i / 3 ) % 2 == 0 )
    {
      /* random cubes, each kept only if it misses the ones already kept */
      for ( const auto& c : oracle::random_cover( rng, n, 6u, 0.6 ) )
      {
        if ( std::none_of( f.on.begin(), f.on.end(), [&]( const cube& e ) { return intersects( e, c ); } ) )
          f.on.push_back( c );
      }
    }
    else if ( kind == 1 )
    {
      /* random cubes made disjoint by sharping each against the ones already kept */
      for ( const auto& c : oracle::random_cover( rng, n, 6u ) )
      {
        cover pieces( n, { c } );
        for ( const auto& e : f.on )
        {
          cover next( n );
          for ( const auto& x : pieces )
            next.append( intersects( x, e ) ? disjoint_sharp( x, e ) : cover( n, { x } ) );
          pieces = next;
        }
        f.on.append( pieces );
      }
    }
    else
    {
      /* random truth table: each point on with probability d_on, else dc with probability d_dc */
      std::uniform_real_distribution<double> u( 0.0, 1.0 );
      const double d_on = u( rng ) * 0.8 + 0.1, d_dc = u( rng ) * 0.3;
      for ( std::uint64_t m = 0; m < ( std::uint64_t{ 1 } << n ); ++m )
      {
        const double x = u( rng );
        if ( x < d_on )
          f.on.push_back( cube::from_minterm( n, m ) );
        else if ( x < d_on + d_dc )
          f.dc.push_back( cube::from_minterm( n, m ) );
      }
    }

    const auto best = exact_min_dsop( f ).size();
    const bool is_single = f.on.size() == 1u;
    /* "already disjoint": the cover the engine receives has no overlaps, so it passes through the isolated-cube path */
    const auto sop = build_sop( f );
    const bool is_disjoint = !is_single && sop.size() > 1u && pairwise_disjoint( sop );
    const bool given_disjoint = !is_single && f.on.size() > 1u && pairwise_disjoint( f.on );
    single += is_single;
    disjoint += is_disjoint;
    given += given_disjoint;
    for ( const auto& cfg : configs )
    {
      const auto got = dsop( f, cfg ).size();
      below += got < best;
      const int gap = static_cast<int>( got ) - static_cast<int>( best );
      ++gaps;
      gap_sum += gap;
      zero_gap += gap == 0;
      max_gap = std::max( max_gap, gap );
      if ( got != best )
      {
        single_miss += is_single;
        disjoint_miss += is_disjoint;
        given_miss += given_disjoint;
      }
    }
  }
  return { below == 0 && single_miss == 0 && disjoint_miss == 0,
           fmt( "below-oracle %d; single-cube inputs %d with %d misses; disjoint minimized inputs %d with %d misses; gap over %d runs: mean %.3f, "
                "max %d, optimal %.1f%% (info: on-covers disjoint as written %d, %d runs above exact)",
                below, single, single_miss, disjoint, disjoint_miss, gaps, double( gap_sum ) / gaps, max_gap, 100.0 * zero_gap / gaps, given,
                given_miss ) };
}

outcome blow_up_family()
{
  bool ok = true;
  std::string detail;
  for ( std::uint32_t m : { 2u, 3u } )
  {
    const auto f = chain_family( m );
    const auto target = ( std::size_t{ 1 } << m ) - 1u;
    const auto best = exact_min_dsop( f, 6 ).size();
    std::size_t worst = 0;
    for ( const auto& cfg : all_configs() )
    {
      const auto d = dsop( f, cfg );
      worst = std::max( worst, d.size() );
      ok &= verify_dsop( f, d ).ok;
    }
    const auto default_size = dsop( f ).size();
    ok &= best == target && default_size == target && worst == target;
    detail += fmt( "m=%u: exact %zu, heuristic %zu (all configs max %zu), want %zu; ", m, best, default_size, worst, target );
  }
  return { ok, detail };
}

outcome bench_reproduction()
{
  const auto dir = std::filesystem::path( DSOPFORGE_TEST_DATA ) / "bench";
  run_options base;
  base.cfg.backend = minimizer_backend::builtin();
  base.jobs = 4;
  const auto rows = run_bench( dir, { 1, 2, 3, 4, 5 }, { sort_policy::dimension_weight, sort_policy::weight_dimension }, base );

  int verified = 0, floor_checked = 0, floor_bad = 0;
  std::map<std::string, std::uint64_t> dsop3;
  for ( const auto& row : rows )
  {
    verified += row.error.empty() && row.stats.verified;
    if ( row.stats.variant == 3 && row.stats.sort == sort_policy::dimension_weight )
      dsop3[row.stats.benchmark] = row.stats.dsop_size;
  }

  /* per-output floors where the exact solver runs */
  for ( const auto& entry : std::filesystem::directory_iterator( dir ) )
  {
    const auto pla = read_pla( entry.path() );
    if ( pla.num_inputs > 5u )
      continue;
    const auto specs = split_outputs( pla );
    std::vector<std::size_t> floor;
    std::size_t floor_max = 0;
    for ( const auto& f : specs )
    {
      floor.push_back( exact_min_dsop( f ).size() );
      floor_max = std::max( floor_max, floor.back() );
    }
    for ( const auto& cfg : all_configs() )
    {
      run_options opts;
      opts.cfg = cfg;
      const auto r = run_dsop( pla, entry.path().stem().string(), opts );
      for ( std::size_t j = 0; j < specs.size(); ++j )
      {
        ++floor_checked;
        floor_bad += r.covers[j].size() < floor[j];
      }
      ++floor_checked;
      floor_bad += r.stats.dsop_size < floor_max;
    }
  }

  std::string external = "external espresso check skipped (DSOPFORGE_MINIMIZER not set)";
  if ( const char* env = std::getenv( "DSOPFORGE_MINIMIZER" ); env && *env )
  {
    /* misex1 is not part of the shipped fixtures; the symmetric functions are */
    const std::map<std::string, std::uint64_t> published{ { "rd53", 31 }, { "rd73", 127 }, { "rd84", 255 }, { "xor5", 16 } };
    run_options opts;
    opts.cfg.backend = minimizer_backend::external( env );
    int match = 0;
    for ( const auto& [name, size] : published )
    {
      const auto r = run_dsop( read_pla( dir / ( name + ".pla" ) ), name, opts );
      match += r.stats.dsop_size == size;
    }
    external = fmt( "external espresso DSOP-3/dw matches %d/4 published sizes", match );
    floor_bad += match != 4;
  }

  std::string sizes;
  for ( const auto& [name, size] : dsop3 )
    sizes += fmt( "%s=%llu ", name.c_str(), static_cast<unsigned long long>( size ) );
  return { !rows.empty() && verified == static_cast<int>( rows.size() ) && floor_bad == 0,
           fmt( "%d/%zu rows verified; %d/%d outputs at or above the exact floor; DSOP-3/dw sizes: %s; %s", verified, rows.size(),
                floor_checked - floor_bad, floor_checked, sizes.c_str(), external.c_str() ) };
}

} // namespace

int main()
{
  criterion( 1, "golden weights", golden_weights );
  criterion( 2, "golden DSOP", golden_dsop );
  criterion( 3, "golden partial DSOP", golden_partial );
  criterion( 4, "sharp identities", sharp_identities );
  criterion( 5, "soundness sweep", soundness_sweep );
  criterion( 6, "oracle floor", oracle_floor );
  criterion( 7, "blow-up family", blow_up_family );
  criterion( 8, "benchmark harness", bench_reproduction );
  std::printf( "%d of 8 criteria failed\n", failures );
  return failures == 0 ? 0 : 1;
}
