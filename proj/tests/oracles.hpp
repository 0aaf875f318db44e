// Slow reference implementations used as independent test oracles.
// Nothing here shares code paths with the library beyond table access.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include <vbf/boolean_function.hpp>
#include <vbf/vectorial.hpp>

namespace oracle
{

using vbf::vec_t;

inline int parity( std::uint64_t v )
{
  int p = 0;
  for ( ; v; v >>= 1 )
  {
    p ^= static_cast<int>( v & 1 );
  }
  return p;
}

inline std::uint64_t size( unsigned n )
{
  return std::uint64_t{ 1 } << n;
}

/* evaluates sum over monomials of prod x_i */
inline bool anf_eval( const std::set<vec_t>& monomials, vec_t x )
{
  bool r = false;
  for ( auto mono : monomials )
  {
    r ^= ( x & mono ) == mono;
  }
  return r;
}

/* ANF coefficient of x^u: xor of f(x) over x below u */
inline std::set<vec_t> anf( const vbf::boolean_function& f )
{
  std::set<vec_t> out;
  for ( vec_t u = 0; u < f.size(); ++u )
  {
    bool c = false;
    for ( vec_t x = 0; x < f.size(); ++x )
    {
      if ( ( x & u ) == x )
      {
        c ^= f.get( x );
      }
    }
    if ( c )
    {
      out.insert( u );
    }
  }
  return out;
}

inline unsigned degree( const vbf::boolean_function& f )
{
  unsigned d = 0;
  for ( auto u : oracle::anf( f ) )
  {
    d = std::max<unsigned>( d, static_cast<unsigned>( __builtin_popcount( u ) ) );
  }
  return d;
}

inline std::uint64_t weight( const vbf::boolean_function& f )
{
  std::uint64_t w = 0;
  for ( vec_t x = 0; x < f.size(); ++x )
  {
    w += f.get( x );
  }
  return w;
}

inline std::int64_t walsh( const vbf::boolean_function& f, vec_t a )
{
  std::int64_t s = 0;
  for ( vec_t x = 0; x < f.size(); ++x )
  {
    s += ( f.get( x ) ^ oracle::parity( a & x ) ) ? -1 : 1;
  }
  return s;
}

inline std::int64_t fourier( const vbf::boolean_function& f )
{
  return oracle::walsh( f, 0 );
}

inline vbf::boolean_function derivative( const vbf::boolean_function& f, vec_t a )
{
  vbf::boolean_function d( f.num_vars() );
  for ( vec_t x = 0; x < f.size(); ++x )
  {
    d.set( x, f.get( x ) != f.get( x ^ a ) );
  }
  return d;
}

inline std::int64_t autocorrelation( const vbf::boolean_function& f, vec_t a )
{
  return oracle::fourier( oracle::derivative( f, a ) );
}

inline bool is_constant( const vbf::boolean_function& f )
{
  const auto w = oracle::weight( f );
  return w == 0 || w == f.size();
}

/* every nonzero derivative balanced or constant */
inline bool partially_bent_by_derivatives( const vbf::boolean_function& f )
{
  for ( vec_t a = 1; a < f.size(); ++a )
  {
    const auto d = oracle::derivative( f, a );
    if ( !oracle::is_constant( d ) && 2 * oracle::weight( d ) != f.size() )
    {
      return false;
    }
  }
  return true;
}

inline std::int64_t nonlinearity( const vbf::boolean_function& f )
{
  std::int64_t best = 0;
  for ( vec_t a = 0; a < f.size(); ++a )
  {
    best = std::max( best, std::abs( oracle::walsh( f, a ) ) );
  }
  return static_cast<std::int64_t>( f.size() / 2 ) - best / 2;
}

inline vbf::boolean_function component( const vbf::vectorial_function& F, vec_t lambda )
{
  vbf::boolean_function f( F.num_inputs() );
  for ( vec_t x = 0; x < F.domain_size(); ++x )
  {
    f.set( x, oracle::parity( lambda & F( x ) ) );
  }
  return f;
}

inline std::uint64_t image_size( const vbf::vectorial_function& F )
{
  std::set<vec_t> image;
  for ( vec_t x = 0; x < F.domain_size(); ++x )
  {
    image.insert( F( x ) );
  }
  return image.size();
}

inline bool injective( const vbf::vectorial_function& F )
{
  return oracle::image_size( F ) == F.domain_size();
}

/* |{(x, y) : x + y = a, F(x) = F(y)}| by a triple loop over x, y and the check */
inline std::uint64_t collisions( const vbf::vectorial_function& F, vec_t a )
{
  std::uint64_t c = 0;
  for ( vec_t x = 0; x < F.domain_size(); ++x )
  {
    for ( vec_t y = 0; y < F.domain_size(); ++y )
    {
      if ( ( x ^ y ) == a && F( x ) == F( y ) )
      {
        ++c;
      }
    }
  }
  return c;
}

inline std::vector<vec_t> balanced_lambdas( const vbf::vectorial_function& F )
{
  std::vector<vec_t> out;
  for ( vec_t l = 1; l < oracle::size( F.num_outputs() ); ++l )
  {
    if ( 2 * oracle::weight( oracle::component( F, l ) ) == F.domain_size() )
    {
      out.push_back( l );
    }
  }
  return out;
}

inline std::vector<vec_t> constant_lambdas( const vbf::vectorial_function& F )
{
  std::vector<vec_t> out;
  for ( vec_t l = 0; l < oracle::size( F.num_outputs() ); ++l )
  {
    if ( oracle::is_constant( oracle::component( F, l ) ) )
    {
      out.push_back( l );
    }
  }
  return out;
}

/* carry-less product followed by long division, polynomials as bit masks */
inline std::uint64_t poly_mod( std::uint64_t a, std::uint64_t mod )
{
  const int dm = 63 - __builtin_clzll( mod );
  for ( int d = 63; d >= dm; --d )
  {
    if ( ( a >> d ) & 1 )
    {
      a ^= mod << ( d - dm );
    }
  }
  return a;
}

inline std::uint64_t clmul( std::uint64_t a, std::uint64_t b )
{
  std::uint64_t r = 0;
  for ( int i = 0; i < 32; ++i )
  {
    if ( ( b >> i ) & 1 )
    {
      r ^= a << i;
    }
  }
  return r;
}

inline std::uint64_t field_mul( std::uint64_t a, std::uint64_t b, std::uint64_t poly )
{
  return poly_mod( clmul( a, b ), poly );
}

/* no divisor of degree 1..deg/2 */
inline bool irreducible( std::uint64_t poly )
{
  const int deg = 63 - __builtin_clzll( poly );
  for ( std::uint64_t d = 2; d < ( std::uint64_t{ 1 } << ( deg / 2 + 1 ) ); ++d )
  {
    if ( poly_mod( poly, d ) == 0 )
    {
      return false;
    }
  }
  return true;
}

inline std::uint64_t field_pow( std::uint64_t x, long long e, std::uint64_t poly )
{
  std::uint64_t r = 1;
  for ( long long i = 0; i < e; ++i )
  {
    r = field_mul( r, x, poly );
  }
  return r;
}

} // namespace oracle
