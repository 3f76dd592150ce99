#include <dsopforge/driver.hpp>
#include <dsopforge/dsop.hpp>
#include <dsopforge/errors.hpp>
#include <dsopforge/partial_dsop.hpp>
#include <dsopforge/pla.hpp>
#include <dsopforge/sop_min.hpp>
#include <dsopforge/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace dsopforge;

namespace
{

using rows = std::vector<std::string>;

/* Covers cross the boundary as lists of trit strings; the width comes from
   the strings or, for all-empty inputs, from `num_vars`. */
std::uint32_t width_of( std::initializer_list<const rows*> lists, std::optional<std::uint32_t> num_vars )
{
  if ( num_vars )
  {
    return *num_vars;
  }
  for ( const auto* list : lists )
  {
    if ( !list->empty() )
    {
      return static_cast<std::uint32_t>( list->front().size() );
    }
  }
  throw std::invalid_argument( "cannot infer the number of variables from empty covers; pass num_vars" );
}

dsop_config make_config( int variant, const std::string& sort, bool drop_dc_only, const std::string& minimizer )
{
  dsop_config cfg;
  cfg.variant = variant;
  cfg.sort = parse_sort_policy( sort );
  cfg.drop_dc_only = drop_dc_only;
  cfg.backend = minimizer_backend::parse( minimizer );
  cfg.validate();
  return cfg;
}

verify_options make_verify_options( std::uint32_t max_enum, std::uint64_t samples, std::uint64_t seed )
{
  verify_options opts;
  opts.max_enum = max_enum;
  opts.samples = samples;
  opts.seed = seed;
  return opts;
}

py::dict report_dict( const verification_report& r )
{
  py::list violations;
  for ( const auto& v : r.violations )
  {
    violations.append( py::dict( py::arg( "minterm" ) = v.minterm, py::arg( "constraint" ) = v.constraint, py::arg( "observed" ) = v.observed ) );
  }
  return py::dict( py::arg( "ok" ) = r.ok, py::arg( "total_violations" ) = r.total_violations, py::arg( "sampled" ) = r.sampled,
                   py::arg( "points_checked" ) = r.points_checked, py::arg( "seed" ) = r.seed, py::arg( "violations" ) = violations,
                   py::arg( "summary" ) = r.summary() );
}

py::dict result_dict( const run_result& r )
{
  std::vector<rows> covers;
  for ( const auto& c : r.covers )
  {
    covers.push_back( c.to_strings() );
  }
  py::list reports;
  for ( const auto& rep : r.reports )
  {
    reports.append( report_dict( rep ) );
  }
  return py::dict( py::arg( "pla" ) = r.pla_text(), py::arg( "covers" ) = covers,
                   py::arg( "stats" ) = py::module_::import( "json" ).attr( "loads" )( stats_to_json( r.stats ) ), py::arg( "reports" ) = reports );
}

run_options make_run_options( int variant, const std::string& sort, bool drop_dc_only, const std::string& minimizer, unsigned jobs, bool verify )
{
  run_options opts;
  opts.cfg = make_config( variant, sort, drop_dc_only, minimizer );
  opts.jobs = jobs;
  opts.verify = verify;
  return opts;
}

} // namespace

PYBIND11_MODULE( _core, m )
{
  m.doc() = "DSOP and partial DSOP synthesis on covers given as lists of '0'/'1'/'-' strings";

  py::register_exception<pla_parse_error>( m, "PlaParseError", PyExc_ValueError );
  py::register_exception<input_error>( m, "InputError", PyExc_ValueError );
  py::register_exception<dimension_mismatch>( m, "DimensionMismatch", PyExc_ValueError );
  py::register_exception<contract_violation>( m, "ContractViolation", PyExc_ValueError );
  py::register_exception<capacity_error>( m, "CapacityError", PyExc_ValueError );
  py::register_exception<backend_error>( m, "BackendError", PyExc_RuntimeError );
  py::register_exception<progress_error>( m, "ProgressError", PyExc_RuntimeError );
  py::register_exception<verification_failed>( m, "VerificationFailed", PyExc_RuntimeError );

  m.def(
      "disjoint_sharp", []( const std::string& q, const std::string& p ) { return disjoint_sharp( cube::from_string( q ), cube::from_string( p ) ).to_strings(); },
      py::arg( "q" ), py::arg( "p" ), "Pairwise-disjoint cubes covering q minus p (q and p must intersect)" );

  m.def(
      "weights",
      []( const rows& sop ) {
        std::vector<std::pair<std::string, int>> out;
        if ( sop.empty() )
        {
          return out;
        }
        for ( const auto& w : weight_all( cover::from_strings( static_cast<std::uint32_t>( sop.front().size() ), sop ) ) )
        {
          out.emplace_back( w.c.to_string(), w.weight );
        }
        return out;
      },
      py::arg( "sop" ), "Cube weights against the rest of the cover (-1 for isolated cubes)" );

  m.def(
      "build_sop",
      []( const rows& on, const rows& dc, const std::string& minimizer, std::optional<std::uint32_t> num_vars ) {
        const auto n = width_of( { &on, &dc }, num_vars );
        return build_sop( function_spec( cover::from_strings( n, on ), cover::from_strings( n, dc ) ), minimizer_backend::parse( minimizer ) ).to_strings();
      },
      py::arg( "on" ), py::arg( "dc" ) = rows{}, py::arg( "minimizer" ) = "builtin", py::arg( "num_vars" ) = py::none() );

  m.def(
      "dsop",
      []( const rows& on, const rows& dc, int variant, const std::string& sort, bool drop_dc_only, const std::string& minimizer,
          std::optional<std::uint32_t> num_vars ) {
        const auto n = width_of( { &on, &dc }, num_vars );
        const function_spec f( cover::from_strings( n, on ), cover::from_strings( n, dc ) );
        return dsop( f, make_config( variant, sort, drop_dc_only, minimizer ) ).to_strings();
      },
      py::arg( "on" ), py::arg( "dc" ) = rows{}, py::arg( "variant" ) = 3, py::arg( "sort" ) = "dw", py::arg( "drop_dc_only" ) = false,
      py::arg( "minimizer" ) = "builtin", py::arg( "num_vars" ) = py::none(), "Disjoint cover: on-points exactly once, dc-points at most once" );

  m.def(
      "partial_dsop",
      []( const rows& sopd_on, const rows& sops_on, const rows& sopd_dc, const rows& sops_dc, int variant, const std::string& sort,
          const std::string& minimizer, std::optional<std::uint32_t> num_vars ) {
        const auto n = width_of( { &sopd_on, &sops_on, &sopd_dc, &sops_dc }, num_vars );
        const partial_spec spec( function_spec( cover::from_strings( n, sopd_on ), cover::from_strings( n, sopd_dc ) ),
                                 function_spec( cover::from_strings( n, sops_on ), cover::from_strings( n, sops_dc ) ) );
        spec.check_disjoint();
        return partial_dsop( spec, make_config( variant, sort, false, minimizer ) ).to_strings();
      },
      py::arg( "sopd_on" ), py::arg( "sops_on" ), py::arg( "sopd_dc" ) = rows{}, py::arg( "sops_dc" ) = rows{}, py::arg( "variant" ) = 3,
      py::arg( "sort" ) = "dw", py::arg( "minimizer" ) = "builtin", py::arg( "num_vars" ) = py::none(),
      "sopD points covered exactly once, sopS points at least once" );

  m.def(
      "verify_dsop",
      []( const rows& on, const rows& dc, const rows& solution, std::uint32_t max_enum, std::uint64_t samples, std::uint64_t seed,
          std::optional<std::uint32_t> num_vars ) {
        const auto n = width_of( { &on, &dc, &solution }, num_vars );
        const function_spec f( cover::from_strings( n, on ), cover::from_strings( n, dc ) );
        return report_dict( verify_dsop( f, cover::from_strings( n, solution ), make_verify_options( max_enum, samples, seed ) ) );
      },
      py::arg( "on" ), py::arg( "dc" ), py::arg( "solution" ), py::arg( "max_enum" ) = default_enumeration_limit, py::arg( "samples" ) = 1000000u,
      py::arg( "seed" ) = 0x5eedu, py::arg( "num_vars" ) = py::none() );

  m.def(
      "verify_partial_dsop",
      []( const rows& sopd_on, const rows& sops_on, const rows& solution, const rows& sopd_dc, const rows& sops_dc, std::uint32_t max_enum,
          std::uint64_t samples, std::uint64_t seed, std::optional<std::uint32_t> num_vars ) {
        const auto n = width_of( { &sopd_on, &sops_on, &solution, &sopd_dc, &sops_dc }, num_vars );
        const partial_spec spec( function_spec( cover::from_strings( n, sopd_on ), cover::from_strings( n, sopd_dc ) ),
                                 function_spec( cover::from_strings( n, sops_on ), cover::from_strings( n, sops_dc ) ) );
        return report_dict( verify_partial_dsop( spec, cover::from_strings( n, solution ), make_verify_options( max_enum, samples, seed ) ) );
      },
      py::arg( "sopd_on" ), py::arg( "sops_on" ), py::arg( "solution" ), py::arg( "sopd_dc" ) = rows{}, py::arg( "sops_dc" ) = rows{},
      py::arg( "max_enum" ) = default_enumeration_limit, py::arg( "samples" ) = 1000000u, py::arg( "seed" ) = 0x5eedu,
      py::arg( "num_vars" ) = py::none() );

  m.def(
      "exact_min_dsop",
      []( const rows& on, const rows& dc, std::uint32_t max_n, std::optional<std::uint32_t> num_vars ) {
        const auto n = width_of( { &on, &dc }, num_vars );
        return exact_min_dsop( function_spec( cover::from_strings( n, on ), cover::from_strings( n, dc ) ), max_n ).to_strings();
      },
      py::arg( "on" ), py::arg( "dc" ) = rows{}, py::arg( "max_n" ) = 5u, py::arg( "num_vars" ) = py::none(), "Smallest DSOP by exhaustive search" );

  m.def(
      "chain_family", []( std::uint32_t k ) { return chain_family( k ).on.to_strings(); }, py::arg( "m" ),
      "On-cover x1x2 + x3x4 + ... with m products over 2m variables" );

  m.def(
      "run_pla",
      []( const std::string& text, const std::string& name, int variant, const std::string& sort, bool drop_dc_only, const std::string& minimizer,
          unsigned jobs, bool verify ) {
        const auto pla = parse_pla( text );
        const auto opts = make_run_options( variant, sort, drop_dc_only, minimizer, jobs, verify );
        std::optional<run_result> result;
        {
          py::gil_scoped_release release;
          result = run_dsop( pla, name, opts );
        }
        return result_dict( *result );
      },
      py::arg( "text" ), py::arg( "name" ) = "input", py::arg( "variant" ) = 3, py::arg( "sort" ) = "dw", py::arg( "drop_dc_only" ) = false,
      py::arg( "minimizer" ) = "builtin", py::arg( "jobs" ) = 1u, py::arg( "verify" ) = false,
      "Multi-output DSOP of a PLA given as text; returns the output PLA, per-output covers and run statistics" );

  m.def(
      "run_partial_pla",
      []( const std::string& sopd_text, const std::string& sops_text, const std::string& name, int variant, const std::string& sort,
          const std::string& minimizer, unsigned jobs, bool verify ) {
        const auto d = parse_pla( sopd_text );
        const auto s = parse_pla( sops_text );
        return result_dict( run_pdsop( d, s, name, make_run_options( variant, sort, false, minimizer, jobs, verify ) ) );
      },
      py::arg( "sopd_text" ), py::arg( "sops_text" ), py::arg( "name" ) = "input", py::arg( "variant" ) = 3, py::arg( "sort" ) = "dw",
      py::arg( "minimizer" ) = "builtin", py::arg( "jobs" ) = 1u, py::arg( "verify" ) = false );
}
