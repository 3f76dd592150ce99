#include <dsopforge/errors.hpp>
#include <dsopforge/pla.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace dsopforge
{

namespace
{

std::vector<std::string> split_ws( std::string_view line )
{
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && std::isspace( static_cast<unsigned char>( line[i] ) ) )
    {
      ++i;
    }
    const auto start = i;
    while ( i < line.size() && !std::isspace( static_cast<unsigned char>( line[i] ) ) )
    {
      ++i;
    }
    if ( i > start )
    {
      tokens.emplace_back( line.substr( start, i - start ) );
    }
  }
  return tokens;
}

std::uint64_t parse_count( std::size_t line_no, const std::vector<std::string>& tokens )
{
  if ( tokens.size() != 2u )
  {
    throw pla_parse_error( line_no, "directive " + tokens[0] + " expects one integer argument" );
  }
  try
  {
    std::size_t used = 0;
    const auto value = std::stoull( tokens[1], &used );
    if ( used != tokens[1].size() )
    {
      throw std::invalid_argument( tokens[1] );
    }
    return value;
  }
  catch ( const std::logic_error& )
  {
    throw pla_parse_error( line_no, "invalid integer '" + tokens[1] + "' for " + tokens[0] );
  }
}

} // namespace

pla_file parse_pla( std::string_view text )
{
  pla_file pla;
  bool have_inputs = false, have_outputs = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while ( pos <= text.size() )
  {
    auto eol = text.find( '\n', pos );
    if ( eol == std::string_view::npos )
    {
      eol = text.size();
    }
    auto line = text.substr( pos, eol - pos );
    pos = eol + 1;
    ++line_no;

    if ( const auto hash = line.find( '#' ); hash != std::string_view::npos )
    {
      line = line.substr( 0, hash );
    }
    const auto tokens = split_ws( line );
    if ( tokens.empty() )
    {
      continue;
    }

    if ( tokens[0][0] == '.' )
    {
      const auto& d = tokens[0];
      if ( d == ".i" )
      {
        pla.num_inputs = static_cast<std::uint32_t>( parse_count( line_no, tokens ) );
        have_inputs = true;
      }
      else if ( d == ".o" )
      {
        pla.num_outputs = static_cast<std::uint32_t>( parse_count( line_no, tokens ) );
        have_outputs = true;
      }
      else if ( d == ".p" )
      {
        pla.declared_products = parse_count( line_no, tokens );
      }
      else if ( d == ".type" )
      {
        if ( tokens.size() != 2u )
        {
          throw pla_parse_error( line_no, ".type expects one argument" );
        }
        if ( tokens[1] == "f" )
        {
          pla.type = pla_type::f;
        }
        else if ( tokens[1] == "fd" )
        {
          pla.type = pla_type::fd;
        }
        else
        {
          throw pla_parse_error( line_no, "unsupported .type " + tokens[1] + " (only f and fd are supported)" );
        }
      }
      else if ( d == ".ilb" )
      {
        pla.labels.inputs.assign( tokens.begin() + 1, tokens.end() );
      }
      else if ( d == ".ob" )
      {
        pla.labels.outputs.assign( tokens.begin() + 1, tokens.end() );
      }
      else if ( d == ".e" || d == ".end" )
      {
        break;
      }
      else
      {
        throw pla_parse_error( line_no, "unsupported directive " + d );
      }
      continue;
    }

    if ( !have_inputs || !have_outputs )
    {
      throw pla_parse_error( line_no, "product row before .i and .o" );
    }

    std::string plane;
    for ( const auto& t : tokens )
    {
      plane += t;
    }
    if ( plane.size() != std::size_t{ pla.num_inputs } + pla.num_outputs )
    {
      throw pla_parse_error( line_no, "row has " + std::to_string( plane.size() ) + " positions, expected " +
                                          std::to_string( pla.num_inputs ) + " inputs + " + std::to_string( pla.num_outputs ) + " outputs" );
    }

    pla_row row;
    row.inputs = plane.substr( 0, pla.num_inputs );
    row.outputs = plane.substr( pla.num_inputs );
    for ( auto& ch : row.inputs )
    {
      switch ( ch )
      {
      case '0':
      case '1':
      case '-':
        break;
      case '2':
      case '~':
        ch = '-';
        break;
      default:
        throw pla_parse_error( line_no, std::string( "invalid input character '" ) + ch + "'" );
      }
    }
    for ( auto& ch : row.outputs )
    {
      switch ( ch )
      {
      case '0':
      case '1':
      case '-':
        break;
      case '2':
        ch = '-';
        break;
      case '~':
        ch = '0';
        break;
      default:
        throw pla_parse_error( line_no, std::string( "invalid output character '" ) + ch + "'" );
      }
    }
    pla.rows.push_back( std::move( row ) );
  }

  if ( !have_inputs || !have_outputs )
  {
    throw pla_parse_error( line_no, "missing .i or .o directive" );
  }
  if ( !pla.labels.inputs.empty() && pla.labels.inputs.size() != pla.num_inputs )
  {
    throw pla_parse_error( line_no, ".ilb lists " + std::to_string( pla.labels.inputs.size() ) + " names for " + std::to_string( pla.num_inputs ) + " inputs" );
  }
  if ( !pla.labels.outputs.empty() && pla.labels.outputs.size() != pla.num_outputs )
  {
    throw pla_parse_error( line_no, ".ob lists " + std::to_string( pla.labels.outputs.size() ) + " names for " + std::to_string( pla.num_outputs ) + " outputs" );
  }
  return pla;
}

pla_file read_pla( const std::filesystem::path& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot open " + path.string() );
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pla( buffer.str() );
}

std::vector<function_spec> split_outputs( const pla_file& pla )
{
  std::vector<function_spec> specs( pla.num_outputs, function_spec( pla.num_inputs ) );
  for ( const auto& row : pla.rows )
  {
    const auto c = cube::from_string( row.inputs );
    for ( std::uint32_t j = 0; j < pla.num_outputs; ++j )
    {
      if ( row.outputs[j] == '1' )
      {
        specs[j].on.push_back( c );
      }
      else if ( row.outputs[j] == '-' && pla.type == pla_type::fd )
      {
        specs[j].dc.push_back( c );
      }
    }
  }
  return specs;
}

std::uint64_t merged_product_count( std::span<const cover> per_output )
{
  std::unordered_map<cube, int> seen;
  for ( const auto& f : per_output )
  {
    for ( const auto& c : f )
    {
      seen.emplace( c, 0 );
    }
  }
  return seen.size();
}

pla_file make_pla( std::span<const cover> per_output, const pla_labels& labels, pla_type type )
{
  pla_file pla;
  pla.num_outputs = static_cast<std::uint32_t>( per_output.size() );
  pla.num_inputs = per_output.empty() ? 0u : per_output.front().num_vars();
  pla.type = type;
  pla.labels = labels;

  std::unordered_map<cube, std::size_t> row_of;
  for ( std::size_t j = 0; j < per_output.size(); ++j )
  {
    if ( per_output[j].num_vars() != pla.num_inputs )
    {
      throw dimension_mismatch( "output covers over different variable counts" );
    }
    for ( const auto& c : per_output[j] )
    {
      auto [it, fresh] = row_of.emplace( c, pla.rows.size() );
      if ( fresh )
      {
        pla.rows.push_back( { c.to_string(), std::string( pla.num_outputs, '0' ) } );
      }
      pla.rows[it->second].outputs[j] = '1';
    }
  }
  pla.declared_products = pla.rows.size();
  return pla;
}

std::string write_pla( const pla_file& pla )
{
  std::string out;
  out += ".i " + std::to_string( pla.num_inputs ) + "\n";
  out += ".o " + std::to_string( pla.num_outputs ) + "\n";
  const auto join = []( const std::vector<std::string>& names ) {
    std::string s;
    for ( const auto& name : names )
    {
      s += " " + name;
    }
    return s;
  };
  if ( !pla.labels.inputs.empty() )
  {
    out += ".ilb" + join( pla.labels.inputs ) + "\n";
  }
  if ( !pla.labels.outputs.empty() )
  {
    out += ".ob" + join( pla.labels.outputs ) + "\n";
  }
  out += pla.type == pla_type::f ? ".type f\n" : ".type fd\n";
  out += ".p " + std::to_string( pla.rows.size() ) + "\n";
  for ( const auto& row : pla.rows )
  {
    out += row.inputs + " " + row.outputs + "\n";
  }
  out += ".e\n";
  return out;
}

std::string write_function_pla( const function_spec& f )
{
  pla_file pla;
  pla.num_inputs = f.num_vars();
  pla.num_outputs = 1u;
  pla.type = pla_type::fd;
  for ( const auto& c : f.on )
  {
    pla.rows.push_back( { c.to_string(), "1" } );
  }
  for ( const auto& c : f.dc )
  {
    pla.rows.push_back( { c.to_string(), "-" } );
  }
  return write_pla( pla );
}

} // namespace dsopforge
