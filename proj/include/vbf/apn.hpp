/*!
  \file apn.hpp
  \brief Differential uniformity, APN tests and restricted derivatives

  A restricted derivative of F: GF(2)^n -> GF(2)^n in direction a != 0 is
  D_aF evaluated on an affine hyperplane that meets every pair {x, x+a}
  exactly once, giving an (n-1) -> n function.  F is APN exactly when all
  of them are embeddings.
*/

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "gf2.hpp"
#include "parallel.hpp"
#include "vectorial.hpp"

namespace vbf
{

/*! \brief Defining polynomial of GF(2^n), the least irreducible of degree n (2 <= n <= 16) */
inline std::uint32_t field_polynomial( unsigned n )
{
  static constexpr std::array<std::uint32_t, 17> table = {
      0, 0, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021, 0x8003, 0x1002b };
  if ( n < 2 || n > 16 )
  {
    throw input_error( "field degree must be in [2, 16], got " + std::to_string( n ) );
  }
  return table[n];
}

/*! \brief Product in GF(2)[x] / (poly), elements in polynomial basis */
inline vec_t field_multiply( vec_t a, vec_t b, unsigned n, std::uint32_t poly ) noexcept
{
  vec_t r = 0;
  const vec_t top = vec_t{ 1 } << n;
  while ( b )
  {
    if ( b & 1 )
    {
      r ^= a;
    }
    b >>= 1;
    a <<= 1;
    if ( a & top )
    {
      a ^= poly;
    }
  }
  return r;
}

/*! \brief Table of x -> x^exponent over GF(2^n); 0^0 is taken as 1 */
inline vectorial_function power_map_table( unsigned n, long long exponent )
{
  if ( exponent < 0 )
  {
    throw input_error( "exponent must be non-negative" );
  }
  const auto poly = field_polynomial( n );
  std::vector<vec_t> table( pow2( n ) );
  for ( std::uint64_t x = 0; x < table.size(); ++x )
  {
    vec_t result = 1, base = static_cast<vec_t>( x );
    for ( auto e = static_cast<unsigned long long>( exponent ); e; e >>= 1 )
    {
      if ( e & 1 )
      {
        result = field_multiply( result, base, n, poly );
      }
      base = field_multiply( base, base, n, poly );
    }
    table[x] = result;
  }
  return vectorial_function( n, n, std::move( table ) );
}

namespace detail
{

inline void require_square( const vectorial_function& F )
{
  if ( F.num_inputs() != F.num_outputs() )
  {
    throw input_error( "APN analysis needs n = m, got n=" + std::to_string( F.num_inputs() ) + ", m=" + std::to_string( F.num_outputs() ) );
  }
}

} // namespace detail

/*! \brief max over a != 0 and b of |{x : F(x) + F(x+a) = b}| */
inline std::uint64_t differential_uniformity( const vectorial_function& F )
{
  detail::require_square( F );
  std::uint64_t best = 0;
  std::vector<std::uint32_t> counts( F.domain_size() );
  for ( std::uint64_t a = 1; a < F.domain_size(); ++a )
  {
    std::fill( counts.begin(), counts.end(), 0 );
    for ( std::uint64_t x = 0; x < F.domain_size(); ++x )
    {
      const auto b = F( static_cast<vec_t>( x ) ) ^ F( static_cast<vec_t>( x ^ a ) );
      best = std::max<std::uint64_t>( best, ++counts[b] );
    }
  }
  return best;
}

inline bool is_apn( const vectorial_function& F )
{
  return differential_uniformity( F ) == 2;
}

/*! \brief D_aF on the hyperplane {x : x_pivot = fixed_coordinate}, as an (n-1) -> n map

  The pivot is the highest set bit of a, so the hyperplane never contains
  a.  fixed_coordinate is 0 when bit n-1 of a is set and 1 otherwise.
  Input v of the map is spread around the pivot: bits below the pivot stay,
  bits at or above it shift up by one.
*/
struct restricted_derivative
{
  vec_t direction = 0;
  unsigned pivot = 0;
  unsigned fixed_coordinate = 0;
  vectorial_function map;

  /*! \brief The point of GF(2)^n that input v of the map stands for */
  vec_t lift( vec_t v ) const noexcept
  {
    const vec_t low = v & ( ( vec_t{ 1 } << pivot ) - 1 );
    const vec_t high = ( v >> pivot ) << ( pivot + 1 );
    return low | high | ( static_cast<vec_t>( fixed_coordinate ) << pivot );
  }
};

inline restricted_derivative make_restricted_derivative( const vectorial_function& F, vec_t a )
{
  detail::require_square( F );
  const unsigned n = F.num_inputs();
  if ( a == 0 || a >= F.domain_size() )
  {
    throw input_error( "restricted derivative needs a nonzero direction in GF(2)^" + std::to_string( n ) );
  }
  if ( n < 2 )
  {
    throw input_error( "restricted derivative needs n >= 2" );
  }
  restricted_derivative d;
  d.direction = a;
  d.pivot = 31u - static_cast<unsigned>( std::countl_zero( a ) );
  d.fixed_coordinate = ( ( a >> ( n - 1 ) ) & 1 ) ? 0 : 1;
  std::vector<vec_t> table( pow2( n - 1 ) );
  for ( std::uint64_t v = 0; v < table.size(); ++v )
  {
    const auto x = d.lift( static_cast<vec_t>( v ) );
    table[v] = F( x ^ a ) ^ F( x );
  }
  d.map = vectorial_function( n - 1, n, std::move( table ) );
  return d;
}

/*! \brief Result of the cubic-APN balanced-component bound in one direction */
struct direction_record
{
  vec_t direction = 0;
  bool embedding = false;
  unsigned degree = 0;
  std::size_t balanced_count = 0;
  std::size_t constant_count = 0;
  std::int64_t bound = 0;
  bool equality = false;
  bool structured = false; /* every unbalanced nontrivial component bent (n odd) / semi-bent (n even) */
  bool holds = false;
};

struct cubic_apn_verdict
{
  bool applicable = false;
  bool holds = false;
  std::string detail;
  std::vector<direction_record> directions;

  std::size_t min_balanced() const noexcept
  {
    std::size_t r = ~std::size_t{ 0 };
    for ( const auto& d : directions )
    {
      r = std::min( r, d.balanced_count );
    }
    return directions.empty() ? 0 : r;
  }
};

/*! \brief Lower bound on |B| of one restricted derivative of a cubic APN function */
inline std::int64_t cubic_apn_bound( unsigned n ) noexcept
{
  return n % 2 == 1 ? static_cast<std::int64_t>( pow2( n - 1 ) ) - 1 : 3 * static_cast<std::int64_t>( pow2( n - 2 ) ) - 1;
}

inline direction_record check_direction( const vectorial_function& F, vec_t a )
{
  const unsigned n = F.num_inputs();
  const auto d = make_restricted_derivative( F, a );
  const auto s = summarize( d.map );
  direction_record r;
  r.direction = a;
  r.embedding = s.is_embedding;
  r.degree = s.degree;
  r.balanced_count = s.balanced_set.size();
  r.constant_count = s.constant_set.size();
  r.bound = cubic_apn_bound( n );
  r.equality = static_cast<std::int64_t>( r.balanced_count ) == r.bound;
  r.structured = true;
  for ( std::size_t lambda = 1; lambda < s.components.size(); ++lambda )
  {
    const auto& c = s.components[lambda];
    if ( !c.balanced )
    {
      r.structured = r.structured && ( n % 2 == 1 ? c.bent : c.semi_bent );
    }
  }
  r.holds = r.embedding && static_cast<std::int64_t>( r.balanced_count ) >= r.bound && r.equality == r.structured;
  return r;
}

/*! \brief Checks the balanced-component bound for every restricted derivative

  Applies to F: GF(2)^n -> GF(2)^n of degree 3 that is APN; otherwise the
  verdict is inapplicable and carries no direction records.
*/
inline cubic_apn_verdict check_cubic_apn_corollary( const vectorial_function& F )
{
  detail::require_square( F );
  cubic_apn_verdict v;
  const auto deg = degree( F );
  if ( deg != 3 )
  {
    v.detail = "degree " + std::to_string( deg ) + ", not cubic";
    v.holds = true;
    return v;
  }
  if ( !is_apn( F ) )
  {
    v.detail = "not APN";
    v.holds = true;
    return v;
  }
  v.applicable = true;
  v.directions.resize( F.domain_size() - 1 );
  parallel_for( v.directions.size(), [&]( std::size_t i ) {
    v.directions[i] = check_direction( F, static_cast<vec_t>( i + 1 ) );
  } );
  v.holds = std::all_of( v.directions.begin(), v.directions.end(), []( const auto& d ) { return d.holds; } );
  v.detail = v.holds ? "all directions meet the bound" : "bound violated";
  return v;
}

} // namespace vbf
