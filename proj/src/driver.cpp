#include <dsopforge/driver.hpp>
#include <dsopforge/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <thread>

namespace dsopforge
{

dc_policy parse_dc_policy( const std::string& s )
{
  if ( s == "once" )
  {
    return dc_policy::once;
  }
  if ( s == "many" )
  {
    return dc_policy::many;
  }
  throw std::invalid_argument( "unknown dc policy '" + s + "' (expected once or many)" );
}

namespace
{

/* Runs fn(i) for i in [0, count) on up to `jobs` threads; rethrows the
   exception of the lowest failing index. */
template<typename Fn>
void parallel_for( std::size_t count, unsigned jobs, Fn&& fn )
{
  std::vector<std::exception_ptr> errors( count );
  const auto worker = [&]( std::atomic<std::size_t>& next ) {
    for ( std::size_t i = next++; i < count; i = next++ )
    {
      try
      {
        fn( i );
      }
      catch ( ... )
      {
        errors[i] = std::current_exception();
      }
    }
  };

  std::atomic<std::size_t> next{ 0 };
  const auto threads = std::min<std::size_t>( std::max( 1u, jobs ), count );
  if ( threads <= 1u )
  {
    worker( next );
  }
  else
  {
    std::vector<std::thread> pool;
    for ( std::size_t t = 0; t < threads; ++t )
    {
      pool.emplace_back( worker, std::ref( next ) );
    }
    for ( auto& t : pool )
    {
      t.join();
    }
  }
  for ( auto& e : errors )
  {
    if ( e )
    {
      std::rethrow_exception( e );
    }
  }
}

run_stats base_stats( const std::string& name, std::uint32_t inputs, std::uint32_t outputs, const run_options& opts, std::string mode )
{
  run_stats s;
  s.benchmark = name;
  s.inputs = inputs;
  s.outputs = outputs;
  s.variant = opts.cfg.variant;
  s.sort = opts.cfg.sort;
  s.drop_dc_only = opts.cfg.drop_dc_only;
  s.backend = opts.cfg.backend.name();
  s.mode = std::move( mode );
  return s;
}

using clock_type = std::chrono::steady_clock;

double millis_since( clock_type::time_point start )
{
  return std::chrono::duration<double, std::milli>( clock_type::now() - start ).count();
}

void check_reports( const std::vector<verification_report>& reports, const std::string& name )
{
  for ( std::size_t j = 0; j < reports.size(); ++j )
  {
    if ( !reports[j].ok )
    {
      throw verification_failed( name + ": output " + std::to_string( j ) + ": " + reports[j].summary() );
    }
  }
}

run_result run_dsop_specs( const std::vector<function_spec>& specs, run_stats stats, const pla_labels& labels, const run_options& opts )
{
  opts.cfg.validate();
  run_result result;
  result.labels = labels;
  result.covers.assign( specs.size(), cover( stats.inputs ) );
  std::vector<cover> sops( specs.size(), cover( stats.inputs ) );

  const auto start = clock_type::now();
  parallel_for( specs.size(), opts.jobs, [&]( std::size_t j ) {
    sops[j] = build_sop( specs[j], opts.cfg.backend );
    result.covers[j] = dsop( specs[j], opts.cfg );
  } );
  stats.elapsed_ms = millis_since( start );
  stats.sop_size = merged_product_count( sops );
  stats.dsop_size = merged_product_count( result.covers );

  if ( opts.verify )
  {
    result.reports.resize( specs.size() );
    parallel_for( specs.size(), opts.jobs, [&]( std::size_t j ) { result.reports[j] = verify_dsop( specs[j], result.covers[j], opts.verify_opts ); } );
    check_reports( result.reports, stats.benchmark );
    stats.verified = true;
  }
  result.stats = std::move( stats );
  return result;
}

run_result run_partial_specs( const std::vector<partial_spec>& specs, run_stats stats, const pla_labels& labels, const run_options& opts )
{
  opts.cfg.validate();
  run_result result;
  result.labels = labels;
  result.covers.assign( specs.size(), cover( stats.inputs ) );
  std::vector<cover> sops( specs.size(), cover( stats.inputs ) );

  const auto start = clock_type::now();
  parallel_for( specs.size(), opts.jobs, [&]( std::size_t j ) {
    function_spec whole( specs[j].sop_d.on, specs[j].sop_d.dc );
    whole.on.append( specs[j].sop_s.on );
    whole.dc.append( specs[j].sop_s.dc );
    sops[j] = build_sop( whole, opts.cfg.backend );
    result.covers[j] = partial_dsop( specs[j], opts.cfg );
  } );
  stats.elapsed_ms = millis_since( start );
  stats.sop_size = merged_product_count( sops );
  stats.dsop_size = merged_product_count( result.covers );

  if ( opts.verify )
  {
    result.reports.resize( specs.size() );
    parallel_for( specs.size(), opts.jobs, [&]( std::size_t j ) { result.reports[j] = verify_partial_dsop( specs[j], result.covers[j], opts.verify_opts ); } );
    check_reports( result.reports, stats.benchmark );
    stats.verified = true;
  }
  result.stats = std::move( stats );
  return result;
}

} // namespace

run_result run_dsop( const pla_file& pla, const std::string& name, const run_options& opts )
{
  return run_dsop_specs( split_outputs( pla ), base_stats( name, pla.num_inputs, pla.num_outputs, opts, "dsop" ), pla.labels, opts );
}

run_result run_pdsop( const pla_file& sop_d, const pla_file& sop_s, const std::string& name, const run_options& opts )
{
  if ( sop_d.num_inputs != sop_s.num_inputs || sop_d.num_outputs != sop_s.num_outputs )
  {
    throw input_error( "sopD and sopS files differ in .i/.o" );
  }
  const auto d = split_outputs( sop_d );
  const auto s = split_outputs( sop_s );
  std::vector<partial_spec> specs;
  for ( std::size_t j = 0; j < d.size(); ++j )
  {
    specs.emplace_back( d[j], s[j] );
    try
    {
      specs.back().check_disjoint();
    }
    catch ( const input_error& e )
    {
      throw input_error( "output " + std::to_string( j ) + ": " + e.what() );
    }
  }
  return run_partial_specs( specs, base_stats( name, sop_d.num_inputs, sop_d.num_outputs, opts, "pdsop" ), sop_d.labels, opts );
}

run_result run_pdsop( const pla_file& pla, dc_policy policy, const std::string& name, const run_options& opts )
{
  if ( policy == dc_policy::once )
  {
    auto result = run_dsop( pla, name, opts );
    result.stats.mode = "pdsop-once";
    return result;
  }
  std::vector<partial_spec> specs;
  for ( auto& f : split_outputs( pla ) )
  {
    specs.emplace_back( function_spec( f.on, cover( f.num_vars() ) ), function_spec( cover( f.num_vars() ), f.dc ) );
  }
  return run_partial_specs( specs, base_stats( name, pla.num_inputs, pla.num_outputs, opts, "pdsop-many" ), pla.labels, opts );
}

std::vector<bench_row> run_bench( const std::filesystem::path& dir, const std::vector<int>& variants,
                                  const std::vector<sort_policy>& sorts, const run_options& base )
{
  std::vector<std::filesystem::path> files;
  for ( const auto& entry : std::filesystem::directory_iterator( dir ) )
  {
    if ( entry.is_regular_file() && entry.path().extension() == ".pla" )
    {
      files.push_back( entry.path() );
    }
  }
  std::sort( files.begin(), files.end() );

  std::vector<bench_row> rows;
  for ( const auto& file : files )
  {
    const auto name = file.stem().string();
    pla_file pla;
    try
    {
      pla = read_pla( file );
    }
    catch ( const std::exception& e )
    {
      bench_row row;
      row.stats.benchmark = name;
      row.error = e.what();
      rows.push_back( std::move( row ) );
      continue;
    }

    for ( auto variant : variants )
    {
      for ( auto sort : sorts )
      {
        run_options opts = base;
        opts.cfg.variant = variant;
        opts.cfg.sort = sort;
        opts.verify = true;

        bench_row row;
        row.stats = base_stats( name, pla.num_inputs, pla.num_outputs, opts, "dsop" );
        try
        {
          row.stats = run_dsop( pla, name, opts ).stats;
        }
        catch ( const std::exception& e )
        {
          row.error = e.what();
        }
        rows.push_back( std::move( row ) );
      }
    }
  }
  return rows;
}

namespace
{

nlohmann::ordered_json stats_json( const run_stats& s, bool include_time )
{
  nlohmann::ordered_json j;
  j["benchmark"] = s.benchmark;
  j["inputs"] = s.inputs;
  j["outputs"] = s.outputs;
  j["sop_size"] = s.sop_size;
  j["dsop_size"] = s.dsop_size;
  j["variant"] = s.variant;
  j["sort"] = to_string( s.sort );
  j["drop_dc_only"] = s.drop_dc_only;
  j["backend"] = s.backend;
  if ( include_time )
  {
    j["elapsed_ms"] = s.elapsed_ms;
  }
  j["verified"] = s.verified;
  j["mode"] = s.mode;
  j["sop_minimization"] = s.sop_minimization;
  return j;
}

std::string csv_field( const std::string& s )
{
  if ( s.find_first_of( ",\"\n" ) == std::string::npos )
  {
    return s;
  }
  std::string out = "\"";
  for ( auto ch : s )
  {
    out += ch == '"' ? std::string( "\"\"" ) : std::string( 1, ch );
  }
  return out + "\"";
}

std::string format_ms( double ms )
{
  char buf[32];
  std::snprintf( buf, sizeof( buf ), "%.2f", ms );
  return buf;
}

} // namespace

std::string stats_to_json( const run_stats& stats, bool include_time )
{
  return stats_json( stats, include_time ).dump( 2 ) + "\n";
}

std::string bench_to_json( const std::vector<bench_row>& rows, bool include_time )
{
  auto arr = nlohmann::ordered_json::array();
  for ( const auto& row : rows )
  {
    auto j = stats_json( row.stats, include_time );
    j["error"] = row.error;
    arr.push_back( std::move( j ) );
  }
  return arr.dump( 2 ) + "\n";
}

std::string bench_to_csv( const std::vector<bench_row>& rows, bool include_time )
{
  std::string out = "benchmark,inputs,outputs,sop_size,dsop_size,variant,sort,drop_dc_only,backend,";
  out += include_time ? "elapsed_ms," : "";
  out += "verified,error\n";
  for ( const auto& row : rows )
  {
    const auto& s = row.stats;
    out += csv_field( s.benchmark ) + "," + std::to_string( s.inputs ) + "," + std::to_string( s.outputs ) + "," +
           std::to_string( s.sop_size ) + "," + std::to_string( s.dsop_size ) + "," + std::to_string( s.variant ) + "," +
           to_string( s.sort ) + "," + ( s.drop_dc_only ? "true" : "false" ) + "," + csv_field( s.backend ) + ",";
    out += include_time ? format_ms( s.elapsed_ms ) + "," : "";
    out += std::string( s.verified ? "true" : "false" ) + "," + csv_field( row.error ) + "\n";
  }
  return out;
}

std::string render_table( const std::vector<bench_row>& rows )
{
  std::string out;
  for ( auto sort : { sort_policy::dimension_weight, sort_policy::weight_dimension } )
  {
    /* benchmark -> variant -> row, benchmarks in first-seen order */
    std::vector<std::string> names;
    std::map<std::string, std::map<int, const bench_row*>> grid;
    std::vector<int> variants;
    for ( const auto& row : rows )
    {
      if ( row.stats.sort != sort || !row.error.empty() )
      {
        continue;
      }
      if ( !grid.contains( row.stats.benchmark ) )
      {
        names.push_back( row.stats.benchmark );
      }
      grid[row.stats.benchmark][row.stats.variant] = &row;
      if ( std::find( variants.begin(), variants.end(), row.stats.variant ) == variants.end() )
      {
        variants.push_back( row.stats.variant );
      }
    }
    if ( names.empty() )
    {
      continue;
    }
    std::sort( variants.begin(), variants.end() );

    char buf[128];
    out += "SORT " + std::string( sort == sort_policy::dimension_weight ? "dimension/weight" : "weight/dimension" ) + "\n";
    std::snprintf( buf, sizeof( buf ), "%-14s %4s %4s %6s", "bench", "in", "out", "SOP" );
    out += buf;
    for ( auto v : variants )
    {
      std::snprintf( buf, sizeof( buf ), " | %8s-%d %9s", "DSOP", v, "ms" );
      out += buf;
    }
    out += "\n";
    for ( const auto& name : names )
    {
      const auto& cells = grid[name];
      const auto& first = cells.begin()->second->stats;
      std::snprintf( buf, sizeof( buf ), "%-14s %4u %4u %6llu", name.c_str(), first.inputs, first.outputs,
                     static_cast<unsigned long long>( first.sop_size ) );
      out += buf;
      for ( auto v : variants )
      {
        if ( auto it = cells.find( v ); it != cells.end() )
        {
          std::snprintf( buf, sizeof( buf ), " | %10llu %9.2f", static_cast<unsigned long long>( it->second->stats.dsop_size ), it->second->stats.elapsed_ms );
        }
        else
        {
          std::snprintf( buf, sizeof( buf ), " | %10s %9s", "-", "-" );
        }
        out += buf;
      }
      out += "\n";
    }
    out += "\n";
  }
  return out;
}

} // namespace dsopforge
