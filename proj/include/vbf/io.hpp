/*!
  \file io.hpp
  \brief JSON formats for functions, reports and counterexample witnesses

  Function files hold either `{"n", "m", "table"}` or `{"n", "m", "anf"}`
  where anf[i-1] is the ANF text of coordinate f_i.  Input specs of the
  form `power:<n>:<e>` stand for the power map x -> x^e over GF(2^n).
*/

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "analysis.hpp"
#include "apn.hpp"
#include "boolean_function.hpp"
#include "gf2.hpp"
#include "search.hpp"
#include "vectorial.hpp"

namespace vbf
{

using json = nlohmann::json;

/*! \brief Input rejected with a position; line and column are 1-based */
class parse_error : public input_error
{
public:
  parse_error( const std::string& source, std::size_t line, std::size_t column, const std::string& what )
      : input_error( source + ":" + std::to_string( line ) + ":" + std::to_string( column ) + ": " + what ),
        line_( line ),
        column_( column )
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail
{

struct text_position
{
  std::size_t line = 1;
  std::size_t column = 1;
};

inline text_position position_of( std::string_view text, std::size_t offset )
{
  text_position p;
  for ( std::size_t i = 0; i < offset && i < text.size(); ++i )
  {
    if ( text[i] == '\n' )
    {
      ++p.line;
      p.column = 1;
    }
    else
    {
      ++p.column;
    }
  }
  return p;
}

/* Skips a JSON string starting at text[pos] == '"'; returns the index past the closing quote. */
inline std::size_t skip_string( std::string_view text, std::size_t pos )
{
  for ( ++pos; pos < text.size(); ++pos )
  {
    if ( text[pos] == '\\' )
    {
      ++pos;
    }
    else if ( text[pos] == '"' )
    {
      return pos + 1;
    }
  }
  return pos;
}

/* Offset of the value of top-level `key`, or npos. */
inline std::size_t locate_key( std::string_view text, std::string_view key )
{
  int depth = 0;
  for ( std::size_t pos = 0; pos < text.size(); )
  {
    const char c = text[pos];
    if ( c == '"' )
    {
      const auto end = skip_string( text, pos );
      if ( depth == 1 && text.substr( pos + 1, end - pos - 2 ) == key )
      {
        auto p = end;
        while ( p < text.size() && ( std::isspace( static_cast<unsigned char>( text[p] ) ) || text[p] == ':' ) )
        {
          ++p;
        }
        return p;
      }
      pos = end;
      continue;
    }
    depth += ( c == '{' || c == '[' ) - ( c == '}' || c == ']' );
    ++pos;
  }
  return std::string_view::npos;
}

/* Offset of element `index` of the top-level array `key`, or of the array itself if not found. */
inline std::size_t locate_element( std::string_view text, std::string_view key, std::size_t index )
{
  const auto start = locate_key( text, key );
  if ( start == std::string_view::npos || start >= text.size() || text[start] != '[' )
  {
    return start == std::string_view::npos ? 0 : start;
  }
  std::size_t element = 0;
  int depth = 0;
  bool at_element_start = true;
  for ( std::size_t pos = start + 1; pos < text.size(); )
  {
    const char c = text[pos];
    if ( std::isspace( static_cast<unsigned char>( c ) ) )
    {
      ++pos;
      continue;
    }
    if ( at_element_start && depth == 0 )
    {
      if ( element == index )
      {
        return pos;
      }
      at_element_start = false;
    }
    if ( c == '"' )
    {
      pos = skip_string( text, pos );
      continue;
    }
    if ( c == '[' || c == '{' )
    {
      ++depth;
    }
    else if ( c == ']' || c == '}' )
    {
      if ( depth == 0 )
      {
        break;
      }
      --depth;
    }
    else if ( c == ',' && depth == 0 )
    {
      ++element;
      at_element_start = true;
    }
    ++pos;
  }
  return start;
}

} // namespace detail

inline json to_json( const vectorial_function& F )
{
  return json{ { "n", F.num_inputs() }, { "m", F.num_outputs() }, { "table", F.table() } };
}

/*! \brief Parses a function file; errors carry line and column */
inline vectorial_function parse_vectorial_json( std::string_view text, const std::string& source = "<input>" )
{
  const auto fail_at = [&]( std::size_t offset, const std::string& what ) -> parse_error {
    const auto p = detail::position_of( text, offset );
    return parse_error( source, p.line, p.column, what );
  };

  json doc;
  try
  {
    doc = json::parse( text );
  }
  catch ( const json::parse_error& e )
  {
    throw fail_at( e.byte > 0 ? e.byte - 1 : 0, "malformed JSON" );
  }
  if ( !doc.is_object() )
  {
    throw fail_at( 0, "expected a JSON object with n, m and table or anf" );
  }

  const auto read_dim = [&]( const char* key, unsigned lo, unsigned hi ) {
    const auto offset = detail::locate_key( text, key );
    if ( !doc.contains( key ) )
    {
      throw fail_at( 0, std::string( "missing field '" ) + key + "'" );
    }
    const auto& v = doc[key];
    if ( !v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > hi )
    {
      throw fail_at( offset, std::string( "field '" ) + key + "' must be an integer in [" + std::to_string( lo ) + ", " + std::to_string( hi ) + "]" );
    }
    return v.get<unsigned>();
  };
  const unsigned n = read_dim( "n", 1, max_variables );
  const unsigned m = read_dim( "m", 1, max_outputs );

  const bool has_table = doc.contains( "table" ), has_anf = doc.contains( "anf" );
  if ( has_table == has_anf )
  {
    throw fail_at( 0, "exactly one of 'table' and 'anf' is required" );
  }

  if ( has_table )
  {
    const auto& t = doc["table"];
    if ( !t.is_array() )
    {
      throw fail_at( detail::locate_key( text, "table" ), "'table' must be an array" );
    }
    if ( t.size() != pow2( n ) )
    {
      throw fail_at( detail::locate_key( text, "table" ),
                     "table-length mismatch: " + std::to_string( t.size() ) + " entries, expected 2^" + std::to_string( n ) + " = " + std::to_string( pow2( n ) ) );
    }
    std::vector<vec_t> table( t.size() );
    for ( std::size_t x = 0; x < t.size(); ++x )
    {
      const auto& e = t[x];
      if ( !e.is_number_integer() || e.get<long long>() < 0 )
      {
        throw fail_at( detail::locate_element( text, "table", x ), "table entry " + std::to_string( x ) + " is not a non-negative integer" );
      }
      const auto value = e.get<unsigned long long>();
      if ( value >= pow2( m ) )
      {
        throw fail_at( detail::locate_element( text, "table", x ),
                       "table entry " + std::to_string( x ) + " = " + std::to_string( value ) + " is >= 2^m = " + std::to_string( pow2( m ) ) );
      }
      table[x] = static_cast<vec_t>( value );
    }
    return vectorial_function( n, m, std::move( table ) );
  }

  const auto& a = doc["anf"];
  if ( !a.is_array() || a.size() != m )
  {
    throw fail_at( detail::locate_key( text, "anf" ), "'anf' must be an array of m = " + std::to_string( m ) + " strings" );
  }
  std::vector<anf_polynomial> coords;
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    const auto offset = detail::locate_element( text, "anf", i );
    if ( !a[i].is_string() )
    {
      throw fail_at( offset, "anf entry " + std::to_string( i ) + " is not a string" );
    }
    try
    {
      coords.push_back( parse_anf( a[i].get<std::string>(), n ) );
    }
    catch ( const anf_syntax_error& e )
    {
      /* column inside the string maps to offset + 1 (opening quote) when the string has no escapes */
      throw fail_at( offset + e.column(), "anf entry " + std::to_string( i ) + ": " + e.what() );
    }
  }
  return vectorial_function::from_anf( coords );
}

/*! \brief Resolves `power:<n>:<e>` or reads a JSON file */
inline vectorial_function load_input( const std::string& spec )
{
  if ( spec.rfind( "power:", 0 ) == 0 )
  {
    unsigned n = 0;
    long long e = 0;
    char sep = 0;
    std::istringstream in( spec.substr( 6 ) );
    if ( !( in >> n >> sep >> e ) || sep != ':' || !in.eof() )
    {
      throw input_error( spec + ": expected power:<n>:<exponent>" );
    }
    return power_map_table( n, e );
  }
  std::ifstream file( spec, std::ios::binary );
  if ( !file )
  {
    throw input_error( spec + ": cannot open file" );
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_vectorial_json( buffer.str(), spec );
}

/*! \brief Bit-vectors as 0/1 arrays, ordered like their tuples */
inline json vector_list( std::vector<vec_t> vectors, unsigned k )
{
  std::sort( vectors.begin(), vectors.end(), [k]( vec_t a, vec_t b ) { return tuple_order_key( a, k ) < tuple_order_key( b, k ); } );
  json out = json::array();
  for ( auto v : vectors )
  {
    json bits = json::array();
    for ( unsigned i = 0; i < k; ++i )
    {
      bits.push_back( ( v >> i ) & 1 );
    }
    out.push_back( std::move( bits ) );
  }
  return out;
}

/*! \brief `{ [ 0, 0, 0, 1 ], ... }` listing in tuple order */
inline std::string render_vector_set( std::vector<vec_t> vectors, unsigned k )
{
  std::sort( vectors.begin(), vectors.end(), [k]( vec_t a, vec_t b ) { return tuple_order_key( a, k ) < tuple_order_key( b, k ); } );
  std::string s = "{";
  for ( std::size_t i = 0; i < vectors.size(); ++i )
  {
    s += ( i ? ", " : "" ) + render_tuple( vectors[i], k );
  }
  return s + "}";
}

inline json to_json( const verdict& v )
{
  json j{ { "statement", std::string( statement_name( v.which ) ) },
          { "applicable", v.applicable },
          { "holds", v.holds },
          { "lhs", v.lhs },
          { "rhs", v.rhs },
          { "detail", v.detail } };
  return j;
}

inline json to_json( const component_profile& c, unsigned m )
{
  return json{ { "lambda", vector_list( { c.lambda }, m )[0] },
               { "degree", c.degree },
               { "fourier", c.fourier },
               { "nonlinearity", c.nonlinearity },
               { "linear_structure_dim", c.linear_structure_dim },
               { "tags", c.tags() } };
}

inline json to_json( const analysis_report& r )
{
  const auto& s = r.summary;
  json components = json::array();
  for ( const auto& c : s.components )
  {
    components.push_back( to_json( c, s.m ) );
  }
  json verdicts = json::array();
  for ( const auto& v : r.verdicts )
  {
    verdicts.push_back( to_json( v ) );
  }
  std::size_t bent = 0, semi_bent = 0;
  for ( const auto& c : s.components )
  {
    bent += c.bent;
    semi_bent += c.semi_bent;
  }
  return json{ { "n", s.n },
               { "m", s.m },
               { "degree", s.degree },
               { "balanced_count", s.balanced_set.size() },
               { "constant_count", s.constant_set.size() },
               { "balanced_set", vector_list( s.balanced_set, s.m ) },
               { "constant_set", vector_list( s.constant_set, s.m ) },
               { "bent_count", bent },
               { "semi_bent_count", semi_bent },
               { "image_size", s.image_size },
               { "is_embedding", s.is_embedding },
               { "image_is_affine", s.image_is_affine },
               { "sum_sq_fourier", s.sum_sq_fourier },
               { "components", std::move( components ) },
               { "theorem_verdicts", std::move( verdicts ) } };
}

inline json to_json( const direction_record& d, unsigned n )
{
  return json{ { "direction", vector_list( { d.direction }, n )[0] },
               { "embedding", d.embedding },
               { "degree", d.degree },
               { "balanced_count", d.balanced_count },
               { "constant_count", d.constant_count },
               { "bound", d.bound },
               { "equality", d.equality },
               { "structured", d.structured },
               { "holds", d.holds } };
}

inline json to_json( const cubic_apn_verdict& v, unsigned n )
{
  json dirs = json::array();
  for ( const auto& d : v.directions )
  {
    dirs.push_back( to_json( d, n ) );
  }
  return json{ { "applicable", v.applicable }, { "holds", v.holds }, { "detail", v.detail }, { "min_balanced", v.min_balanced() }, { "directions", std::move( dirs ) } };
}

/*! \brief 64-bit FNV-1a over the table, used for stable witness file names */
inline std::uint64_t table_fingerprint( const vectorial_function& F ) noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  const auto mix = [&h]( std::uint64_t v ) {
    for ( int i = 0; i < 8; ++i )
    {
      h ^= ( v >> ( 8 * i ) ) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  mix( F.num_inputs() );
  mix( F.num_outputs() );
  for ( auto y : F.table() )
  {
    mix( y );
  }
  return h;
}

/*! \brief Writes a falsified verdict and its function; returns the file path */
inline std::filesystem::path write_witness( const std::filesystem::path& dir, const verdict& v )
{
  if ( !v.witness )
  {
    throw input_error( "verdict carries no witness" );
  }
  std::filesystem::create_directories( dir );
  std::ostringstream name;
  name << "counterexample-" << statement_name( v.which ) << "-" << std::hex << table_fingerprint( *v.witness ) << ".json";
  const auto path = dir / name.str();
  json doc = to_json( v );
  doc["function"] = to_json( *v.witness );
  std::ofstream out( path );
  out << doc.dump( 2 ) << '\n';
  return path;
}

} // namespace vbf
