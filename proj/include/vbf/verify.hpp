/*!
  \file verify.hpp
  \brief Exhaustive and sampled verification suites

  Boolean suites run over every function on n = max_n variables when
  n <= 4, otherwise over `samples` seeded random functions.  Statement
  suites run over every F: GF(2)^max_n -> GF(2)^max_m when there are at
  most 2^16 of them, otherwise over `samples` seeded random tables.  The
  remaining suites build their own inputs (quadratic embeddings, affine
  images, power maps) from the seed.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "apn.hpp"
#include "boolean_function.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "search.hpp"
#include "spectral.hpp"
#include "vectorial.hpp"

namespace vbf
{

struct falsification
{
  std::string suite;
  std::string detail;
  vectorial_function witness;
};

struct suite_result
{
  std::string name;
  std::string mode;
  std::uint64_t passed = 0;
  std::uint64_t applicable = 0;
  std::uint64_t inapplicable = 0;
  std::vector<falsification> failures;
};

struct verify_options
{
  unsigned max_n = 3;
  unsigned max_m = 4;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
  std::vector<std::string> suites; /* empty or {"all"} runs everything */

  void validate() const
  {
    if ( max_n < 1 || max_n > 8 )
    {
      throw input_error( "--max-n must be in [1, 8]" );
    }
    if ( max_m < 1 || max_m > 12 )
    {
      throw input_error( "--max-m must be in [1, 12]" );
    }
    if ( samples < 1 )
    {
      throw input_error( "--samples must be at least 1" );
    }
  }
};

inline const std::vector<std::string>& boolean_suite_names()
{
  static const std::vector<std::string> names = { "parseval", "moebius", "fourier-square", "derivative-weight", "partially-bent" };
  return names;
}

inline const std::vector<std::string>& constructed_suite_names()
{
  static const std::vector<std::string> names = { "quadratic-embeddings", "affine-image-construction", "affine-invariance", "apn-equivalence", "cubic-apn" };
  return names;
}

/*! \brief Every suite name, in execution order */
inline std::vector<std::string> all_suite_names()
{
  auto names = boolean_suite_names();
  for ( auto s : all_statements )
  {
    names.emplace_back( statement_name( s ) );
  }
  for ( const auto& s : constructed_suite_names() )
  {
    names.push_back( s );
  }
  return names;
}

namespace detail
{

/* distinct substream families per suite so suites never share random inputs */
inline splitmix64 suite_stream( std::uint64_t seed, std::uint64_t family, std::uint64_t index )
{
  return splitmix64::substream( seed, ( family << 40 ) ^ index );
}

inline vectorial_function as_vectorial( const boolean_function& f )
{
  std::vector<vec_t> t( f.size() );
  for ( std::uint64_t x = 0; x < f.size(); ++x )
  {
    t[x] = f.get( static_cast<vec_t>( x ) );
  }
  return vectorial_function( f.num_vars(), 1, std::move( t ) );
}

inline boolean_function random_boolean( unsigned n, splitmix64& rng )
{
  boolean_function f( n );
  for ( auto& w : f.words() )
  {
    w = rng();
  }
  f.words().back() &= f.tail_mask();
  return f;
}

inline vectorial_function random_table( unsigned n, unsigned m, splitmix64& rng )
{
  std::vector<vec_t> t( pow2( n ) );
  const auto mask = pow2( m ) - 1;
  for ( auto& y : t )
  {
    y = static_cast<vec_t>( rng() & mask );
  }
  return vectorial_function( n, m, std::move( t ) );
}

/* one check: an empty string means pass, otherwise the failure detail */
using check_fn = std::function<std::string( const boolean_function& )>;

inline suite_result run_boolean_suite( const std::string& name, const verify_options& opt, std::uint64_t family, const check_fn& check )
{
  const unsigned n = opt.max_n;
  const bool exhaustive = n <= 4;
  const std::uint64_t count = exhaustive ? pow2( static_cast<unsigned>( pow2( n ) ) ) : opt.samples;
  suite_result r;
  r.name = name;
  r.mode = exhaustive ? "exhaustive n=" + std::to_string( n ) : "sampled n=" + std::to_string( n );
  std::vector<std::string> outcome( count );
  parallel_for( count, [&]( std::size_t i ) {
    if ( exhaustive )
    {
      outcome[i] = check( boolean_function::from_bits( n, i ) );
    }
    else
    {
      auto rng = suite_stream( opt.seed, family, i );
      outcome[i] = check( random_boolean( n, rng ) );
    }
  } );
  for ( std::uint64_t i = 0; i < count; ++i )
  {
    ++r.applicable;
    if ( outcome[i].empty() )
    {
      ++r.passed;
      continue;
    }
    boolean_function f = exhaustive ? boolean_function::from_bits( n, i ) : [&] {
      auto rng = suite_stream( opt.seed, family, i );
      return random_boolean( n, rng );
    }();
    r.failures.push_back( { name, outcome[i], as_vectorial( f ) } );
  }
  return r;
}

inline std::string check_parseval( const boolean_function& f )
{
  const auto s = walsh_transform( f );
  std::int64_t sum = 0;
  for ( auto v : s.values )
  {
    sum += v * v;
  }
  return sum == static_cast<std::int64_t>( pow2( 2 * f.num_vars() ) ) ? "" : "sum of squares " + std::to_string( sum );
}

inline std::string check_moebius( const boolean_function& f )
{
  auto g = f;
  moebius_transform( g );
  moebius_transform( g );
  if ( !( g == f ) )
  {
    return "transform is not an involution";
  }
  if ( !( truth_table_from_anf( anf_from_truth_table( f ) ) == f ) )
  {
    return "ANF round trip changed the table";
  }
  const auto d = degree( f );
  if ( d > f.num_vars() || ( d == f.num_vars() ) != ( weight( f ) % 2 == 1 ) )
  {
    return "degree " + std::to_string( d ) + " inconsistent with weight parity";
  }
  if ( weight( f ) + weight( ~f ) != f.size() )
  {
    return "weight of complement";
  }
  return "";
}

inline std::string check_fourier_square( const boolean_function& f )
{
  const auto [lhs, rhs] = scalar_fourier_identity_sides( f );
  return lhs == rhs ? "" : std::to_string( lhs ) + " != " + std::to_string( rhs );
}

inline std::string check_derivative_weight( const boolean_function& f )
{
  try
  {
    const auto total = derivative_weight_sum( f );
    const auto bound = static_cast<std::int64_t>( pow2( 2 * f.num_vars() - 1 ) );
    if ( total > bound || ( total == bound ) != is_balanced( f ) )
    {
      return "sum " + std::to_string( total ) + " vs 2^(2n-1) = " + std::to_string( bound );
    }
  }
  catch ( const consistency_error& e )
  {
    return e.what();
  }
  return "";
}

inline std::string check_partially_bent( const boolean_function& f )
{
  const unsigned n = f.num_vars();
  const bool pb = is_partially_bent( f );
  if ( n <= 6 && pb != partially_bent_oracle( f ) )
  {
    return "derivative characterization disagrees with the definition";
  }
  if ( !pb || is_balanced( f ) )
  {
    return "";
  }
  const auto k = linear_structures( f ).dim();
  if ( ( k % 2 ) != ( n % 2 ) )
  {
    return "dim V(f) = " + std::to_string( k ) + " has the wrong parity";
  }
  const auto fc = fourier_coefficient( f );
  if ( std::llabs( fc ) != static_cast<std::int64_t>( pow2( ( n + k ) / 2 ) ) )
  {
    return "|F(f)| = " + std::to_string( fc ) + " with k = " + std::to_string( k );
  }
  const auto nonzero = derivative_weight_sum( f ) - static_cast<std::int64_t>( weight( derivative( f, 0 ) ) );
  if ( nonzero != static_cast<std::int64_t>( pow2( 2 * n - 1 ) - pow2( n + k - 1 ) ) )
  {
    return "derivative weight sum " + std::to_string( nonzero );
  }
  if ( n % 2 == 0 && is_bent( f ) != ( k == 0 ) )
  {
    return "bentness does not match dim V(f) = 0";
  }
  if ( n % 2 == 1 && is_semi_bent( f ) != ( k == 1 ) )
  {
    return "semi-bentness does not match dim V(f) = 1";
  }
  return "";
}

inline void record( suite_result& r, const verdict& v, const std::string& suite )
{
  if ( !v.applicable )
  {
    ++r.inapplicable;
    return;
  }
  ++r.applicable;
  if ( v.holds )
  {
    ++r.passed;
  }
  else
  {
    r.failures.push_back( { suite, std::string( statement_name( v.which ) ) + ": lhs " + std::to_string( v.lhs ) + ", rhs " + std::to_string( v.rhs ) + " " + v.detail,
                            v.witness ? *v.witness : vectorial_function{} } );
  }
}

inline std::vector<suite_result> run_statement_suites( const std::vector<statement>& wanted, const verify_options& opt )
{
  const unsigned n = opt.max_n, m = opt.max_m;
  const unsigned bits = m * static_cast<unsigned>( pow2( n ) );
  const bool exhaustive = bits <= 16;
  const std::uint64_t count = exhaustive ? pow2( bits ) : opt.samples;
  const auto mode = ( exhaustive ? "exhaustive n=" : "sampled n=" ) + std::to_string( n ) + " m=" + std::to_string( m );

  std::vector<std::vector<verdict>> outcome( count );
  parallel_for( count, [&]( std::size_t i ) {
    vectorial_function F;
    if ( exhaustive )
    {
      std::vector<vec_t> t( pow2( n ) );
      for ( std::size_t x = 0; x < t.size(); ++x )
      {
        t[x] = static_cast<vec_t>( ( i >> ( x * m ) ) & ( pow2( m ) - 1 ) );
      }
      F = vectorial_function( n, m, std::move( t ) );
    }
    else
    {
      auto rng = suite_stream( opt.seed, 100, i );
      F = random_table( n, m, rng );
    }
    const auto s = summarize( F );
    for ( auto st : wanted )
    {
      outcome[i].push_back( check_statement( F, s, st ) );
    }
  } );

  std::vector<suite_result> results;
  for ( std::size_t j = 0; j < wanted.size(); ++j )
  {
    suite_result r;
    r.name = std::string( statement_name( wanted[j] ) );
    r.mode = mode;
    for ( std::uint64_t i = 0; i < count; ++i )
    {
      record( r, outcome[i][j], r.name );
    }
    results.push_back( std::move( r ) );
  }
  return results;
}

/* random quadratic embeddings into one or two extra dimensions, checked against every statement */
inline suite_result run_quadratic_embeddings( const verify_options& opt )
{
  suite_result r;
  r.name = "quadratic-embeddings";
  r.mode = "sampled quadratic embeddings, n=3..4, m=n+1..n+2";
  const std::vector<std::pair<unsigned, unsigned>> shapes = { { 3, 4 }, { 3, 5 }, { 4, 5 }, { 4, 6 } };
  for ( std::size_t k = 0; k < shapes.size(); ++k )
  {
    const auto [n, m] = shapes[k];
    std::vector<std::vector<verdict>> outcome( opt.samples );
    parallel_for( opt.samples, [&]( std::size_t i ) {
      auto rng = suite_stream( opt.seed, 200 + k, i );
      auto F = random_quadratic_vbf( n, m, rng );
      if ( !is_embedding( F ) )
      {
        return;
      }
      const auto s = summarize( F );
      for ( auto st : { statement::partially_bent_lower_bound, statement::one_extra_dimension, statement::constant_upper_bound,
                        statement::balanced_upper_bound, statement::derivative_weight_bound, statement::affine_image } )
      {
        outcome[i].push_back( check_statement( F, s, st ) );
      }
    } );
    for ( const auto& vs : outcome )
    {
      for ( const auto& v : vs )
      {
        record( r, v, r.name );
      }
    }
  }
  return r;
}

/* x -> psi(P(x) || 0) for random affinities psi */
inline suite_result run_affine_image_construction( const verify_options& opt )
{
  suite_result r;
  r.name = "affine-image-construction";
  const unsigned n = std::min( opt.max_n, opt.max_m ), m = opt.max_m;
  r.mode = "constructed n=" + std::to_string( n ) + " m=" + std::to_string( m );
  const std::uint64_t count = std::min<std::uint64_t>( opt.samples, 200 );
  std::vector<verdict> outcome( 2 * count );
  parallel_for( 2 * count, [&]( std::size_t i ) {
    auto rng = suite_stream( opt.seed, 300, i );
    const auto psi = affinity::random( m, rng );
    const auto F = affine_image_embedding( n, i % 2 == 0 ? 1 : 2, psi );
    outcome[i] = check_statement( F, statement::affine_image );
    if ( !outcome[i].applicable )
    {
      /* the construction always has affine image; reaching here is a defect */
      outcome[i].applicable = true;
      outcome[i].holds = false;
      outcome[i].detail = "constructed embedding not recognized as affine image";
      outcome[i].witness = F;
    }
  } );
  for ( const auto& v : outcome )
  {
    record( r, v, r.name );
  }
  return r;
}

inline suite_result run_affine_invariance( const verify_options& opt )
{
  suite_result r;
  r.name = "affine-invariance";
  const unsigned n = opt.max_n, m = opt.max_m;
  r.mode = "sampled n=" + std::to_string( n ) + " m=" + std::to_string( m );
  const std::uint64_t count = std::min<std::uint64_t>( opt.samples, 2000 );
  std::vector<std::string> outcome( count );
  std::vector<vectorial_function> inputs( count );
  parallel_for( count, [&]( std::size_t i ) {
    auto rng = suite_stream( opt.seed, 400, i );
    inputs[i] = i % 2 == 0 ? random_table( n, m, rng ) : random_quadratic_vbf( n, m, rng );
    const auto outer = affinity::random( m, rng );
    const auto inner = affinity::random( n, rng );
    const auto G = apply_affinities( inputs[i], outer, inner );
    const auto a = summarize( inputs[i] ), b = summarize( G );
    if ( a.balanced_set.size() != b.balanced_set.size() || a.constant_set.size() != b.constant_set.size() ||
         a.is_embedding != b.is_embedding || a.image_size != b.image_size )
    {
      outcome[i] = "invariants changed under affine equivalence";
    }
  } );
  for ( std::uint64_t i = 0; i < count; ++i )
  {
    ++r.applicable;
    if ( outcome[i].empty() )
      ++r.passed;
    else
      r.failures.push_back( { r.name, outcome[i], inputs[i] } );
  }
  return r;
}

inline std::string check_apn_equivalence( const vectorial_function& F )
{
  const unsigned n = F.num_inputs();
  bool all_embeddings = true;
  for ( vec_t a = 1; a < F.domain_size(); ++a )
  {
    for ( vec_t x = 0; x < F.domain_size(); ++x )
    {
      if ( ( F( x ) ^ F( x ^ a ) ) != ( F( x ^ a ) ^ F( x ^ a ^ a ) ) )
      {
        return "derivative pairing identity broken";
      }
    }
    const auto d = make_restricted_derivative( F, a );
    if ( ( ( a >> ( n - 1 ) ) & 1 ) == d.fixed_coordinate )
    {
      return "fixed coordinate selection rule violated";
    }
    all_embeddings = all_embeddings && is_embedding( d.map );
  }
  return is_apn( F ) == all_embeddings ? "" : "APN flag disagrees with restricted-derivative embeddings";
}

inline suite_result run_apn_equivalence( const verify_options& opt )
{
  suite_result r;
  r.name = "apn-equivalence";
  r.mode = "sampled n=3 plus power maps n=3..6";
  std::vector<vectorial_function> inputs;
  for ( unsigned n = 3; n <= 6; ++n )
  {
    for ( long long e = 1; e < static_cast<long long>( pow2( n ) - 1 ); ++e )
    {
      inputs.push_back( power_map_table( n, e ) );
    }
  }
  for ( std::uint64_t i = 0; i < opt.samples; ++i )
  {
    auto rng = suite_stream( opt.seed, 500, i );
    inputs.push_back( random_table( 3, 3, rng ) );
  }
  std::vector<std::string> outcome( inputs.size() );
  parallel_for( inputs.size(), [&]( std::size_t i ) { outcome[i] = check_apn_equivalence( inputs[i] ); } );
  for ( std::size_t i = 0; i < inputs.size(); ++i )
  {
    ++r.applicable;
    if ( outcome[i].empty() )
      ++r.passed;
    else
      r.failures.push_back( { r.name, outcome[i], inputs[i] } );
  }
  return r;
}

inline suite_result run_cubic_apn( const verify_options& )
{
  suite_result r;
  r.name = "cubic-apn";
  r.mode = "power maps n=3..7";
  for ( unsigned n = 3; n <= 7; ++n )
  {
    for ( long long e = 1; e < static_cast<long long>( pow2( n ) - 1 ); ++e )
    {
      if ( std::popcount( static_cast<unsigned long long>( e ) ) != 3 )
      {
        continue;
      }
      const auto F = power_map_table( n, e );
      const auto v = check_cubic_apn_corollary( F );
      if ( !v.applicable )
      {
        ++r.inapplicable;
        continue;
      }
      ++r.applicable;
      if ( v.holds )
        ++r.passed;
      else
        r.failures.push_back( { r.name, "power map exponent " + std::to_string( e ) + ": " + v.detail, F } );
    }
  }
  return r;
}

} // namespace detail

/*! \brief Runs the selected suites in the fixed order of all_suite_names() */
inline std::vector<suite_result> run_verification( const verify_options& opt )
{
  opt.validate();
  const auto names = all_suite_names();
  std::vector<std::string> selected;
  const bool all = opt.suites.empty() || ( opt.suites.size() == 1 && opt.suites[0] == "all" );
  for ( const auto& s : opt.suites )
  {
    if ( s != "all" && std::find( names.begin(), names.end(), s ) == names.end() )
    {
      throw input_error( "unknown suite '" + s + "'" );
    }
  }
  for ( const auto& n : names )
  {
    if ( all || std::find( opt.suites.begin(), opt.suites.end(), n ) != opt.suites.end() )
    {
      selected.push_back( n );
    }
  }

  std::vector<suite_result> results;
  std::vector<statement> statements;
  for ( const auto& name : selected )
  {
    if ( auto st = statement_from_name( name ) )
    {
      statements.push_back( *st );
    }
  }
  for ( const auto& name : selected )
  {
    if ( name == "parseval" )
      results.push_back( detail::run_boolean_suite( name, opt, 1, detail::check_parseval ) );
    else if ( name == "moebius" )
      results.push_back( detail::run_boolean_suite( name, opt, 2, detail::check_moebius ) );
    else if ( name == "fourier-square" )
      results.push_back( detail::run_boolean_suite( name, opt, 3, detail::check_fourier_square ) );
    else if ( name == "derivative-weight" )
      results.push_back( detail::run_boolean_suite( name, opt, 4, detail::check_derivative_weight ) );
    else if ( name == "partially-bent" )
      results.push_back( detail::run_boolean_suite( name, opt, 5, detail::check_partially_bent ) );
    else if ( statement_from_name( name ) )
    {
      if ( !statements.empty() )
      {
        for ( auto& r : detail::run_statement_suites( statements, opt ) )
        {
          results.push_back( std::move( r ) );
        }
        statements.clear();
      }
    }
    else if ( name == "quadratic-embeddings" )
      results.push_back( detail::run_quadratic_embeddings( opt ) );
    else if ( name == "affine-image-construction" )
      results.push_back( detail::run_affine_image_construction( opt ) );
    else if ( name == "affine-invariance" )
      results.push_back( detail::run_affine_invariance( opt ) );
    else if ( name == "apn-equivalence" )
      results.push_back( detail::run_apn_equivalence( opt ) );
    else if ( name == "cubic-apn" )
      results.push_back( detail::run_cubic_apn( opt ) );
  }
  return results;
}

/*! \brief Writes one witness file per falsification; returns the paths */
inline std::vector<std::filesystem::path> write_falsifications( const std::filesystem::path& dir, const std::vector<suite_result>& results )
{
  std::vector<std::filesystem::path> paths;
  for ( const auto& r : results )
  {
    for ( const auto& f : r.failures )
    {
      std::filesystem::create_directories( dir );
      std::ostringstream name;
      name << "counterexample-" << f.suite << "-" << std::hex << table_fingerprint( f.witness ) << ".json";
      const auto path = dir / name.str();
      json doc{ { "suite", f.suite }, { "detail", f.detail }, { "function", to_json( f.witness ) } };
      std::ofstream out( path );
      out << doc.dump( 2 ) << '\n';
      paths.push_back( path );
    }
  }
  return paths;
}

} // namespace vbf
