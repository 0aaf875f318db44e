/*!
  \file vectorial.hpp
  \brief Vectorial Boolean functions F: GF(2)^n -> GF(2)^m

  F is a table of 2^n packed values; coordinate function f_i lives in bit
  i-1 of each entry.  Components F_lambda(x) = lambda . F(x).
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "boolean_function.hpp"
#include "gf2.hpp"
#include "spectral.hpp"

namespace vbf
{

inline constexpr unsigned max_outputs = 32;

class vectorial_function
{
public:
  vectorial_function() : vectorial_function( 1, 1, std::vector<vec_t>( 2, 0 ) ) {}

  vectorial_function( unsigned n, unsigned m, std::vector<vec_t> table )
      : n_( n ), m_( m ), table_( std::move( table ) )
  {
    if ( n < 1 || n > max_variables )
    {
      throw input_error( "input dimension n must be in [1, 24], got " + std::to_string( n ) );
    }
    if ( m < 1 || m > max_outputs )
    {
      throw input_error( "output dimension m must be in [1, 32], got " + std::to_string( m ) );
    }
    if ( table_.size() != pow2( n ) )
    {
      throw input_error( "table length " + std::to_string( table_.size() ) + " does not match 2^n = " + std::to_string( pow2( n ) ) );
    }
    for ( std::size_t x = 0; x < table_.size(); ++x )
    {
      if ( table_[x] >= pow2( m ) )
      {
        throw input_error( "table entry " + std::to_string( x ) + " is " + std::to_string( table_[x] ) + ", not below 2^m = " + std::to_string( pow2( m ) ) );
      }
    }
  }

  /*! \brief Packs coordinate functions f_1..f_m, all on the same n */
  static vectorial_function from_coordinates( const std::vector<boolean_function>& coords )
  {
    if ( coords.empty() )
    {
      throw input_error( "at least one coordinate function is required" );
    }
    const unsigned n = coords.front().num_vars();
    std::vector<vec_t> table( pow2( n ), 0 );
    for ( std::size_t i = 0; i < coords.size(); ++i )
    {
      if ( coords[i].num_vars() != n )
      {
        throw input_error( "coordinate functions disagree on n" );
      }
      for ( std::uint64_t x = 0; x < table.size(); ++x )
      {
        if ( coords[i].get( static_cast<vec_t>( x ) ) )
        {
          table[x] |= vec_t{ 1 } << i;
        }
      }
    }
    return vectorial_function( n, static_cast<unsigned>( coords.size() ), std::move( table ) );
  }

  static vectorial_function from_anf( const std::vector<anf_polynomial>& coords )
  {
    std::vector<boolean_function> tables;
    for ( const auto& p : coords )
    {
      tables.push_back( truth_table_from_anf( p ) );
    }
    return from_coordinates( tables );
  }

  unsigned num_inputs() const noexcept { return n_; }
  unsigned num_outputs() const noexcept { return m_; }
  std::uint64_t domain_size() const noexcept { return pow2( n_ ); }

  vec_t operator()( vec_t x ) const noexcept { return table_[x]; }
  const std::vector<vec_t>& table() const noexcept { return table_; }

  /*! \brief f_i for i in [1, m] */
  boolean_function coordinate( unsigned i ) const
  {
    if ( i < 1 || i > m_ )
    {
      throw input_error( "coordinate index out of range" );
    }
    return component( vec_t{ 1 } << ( i - 1 ) );
  }

  /*! \brief x -> lambda . F(x) */
  boolean_function component( vec_t lambda ) const
  {
    if ( m_ < 32 && lambda >= pow2( m_ ) )
    {
      throw input_error( "lambda outside GF(2)^" + std::to_string( m_ ) );
    }
    boolean_function f( n_ );
    auto words = f.words();
    for ( std::size_t x = 0; x < table_.size(); ++x )
    {
      words[x >> 6] |= static_cast<std::uint64_t>( dot( lambda, table_[x] ) ) << ( x & 63 );
    }
    return f;
  }

  bool operator==( const vectorial_function& ) const = default;

private:
  unsigned n_;
  unsigned m_;
  std::vector<vec_t> table_;
};

inline boolean_function component( const vectorial_function& F, vec_t lambda )
{
  return F.component( lambda );
}

/*! \brief Maximum coordinate degree */
inline unsigned degree( const vectorial_function& F )
{
  unsigned d = 0;
  for ( unsigned i = 1; i <= F.num_outputs(); ++i )
  {
    d = std::max( d, degree( F.coordinate( i ) ) );
  }
  return d;
}

/*! \brief |Im(F)| */
inline std::uint64_t image_size( const vectorial_function& F )
{
  const auto& t = F.table();
  if ( F.num_outputs() <= 26 )
  {
    std::vector<std::uint64_t> seen( std::max<std::uint64_t>( 1, pow2( F.num_outputs() ) / 64 ), 0 );
    std::uint64_t count = 0;
    for ( auto y : t )
    {
      auto& w = seen[y >> 6];
      const auto bit = std::uint64_t{ 1 } << ( y & 63 );
      count += ( w & bit ) == 0;
      w |= bit;
    }
    return count;
  }
  auto sorted = t;
  std::sort( sorted.begin(), sorted.end() );
  return static_cast<std::uint64_t>( std::unique( sorted.begin(), sorted.end() ) - sorted.begin() );
}

inline bool is_embedding( const vectorial_function& F )
{
  return image_size( F ) == F.domain_size();
}

/*! \brief |{x : F(x) = F(x + a)}| for a != 0 */
inline std::uint64_t collision_count( const vectorial_function& F, vec_t a )
{
  if ( a == 0 || a >= F.domain_size() )
  {
    throw input_error( "collision direction must be nonzero and inside GF(2)^" + std::to_string( F.num_inputs() ) );
  }
  std::uint64_t c = 0;
  for ( std::uint64_t x = 0; x < F.domain_size(); ++x )
  {
    c += F( static_cast<vec_t>( x ) ) == F( static_cast<vec_t>( x ) ^ a );
  }
  return c;
}

namespace detail
{

inline void require_exact_range( unsigned bits, const char* what )
{
  if ( bits > 62 )
  {
    throw input_error( std::string( what ) + " exceeds 64-bit exact range for these dimensions" );
  }
}

} // namespace detail

/*! \brief sum over all lambda of F(F_lambda)^2 */
inline std::int64_t sum_sq_fourier( const vectorial_function& F )
{
  detail::require_exact_range( 2 * F.num_inputs() + F.num_outputs(), "sum of squared Fourier coefficients" );
  std::int64_t total = 0;
  for ( std::uint64_t lambda = 0; lambda < pow2( F.num_outputs() ); ++lambda )
  {
    const auto c = fourier_coefficient( F.component( static_cast<vec_t>( lambda ) ) );
    total += c * c;
  }
  return total;
}

/*! \brief 2^m times the sum of squared preimage sizes, from a histogram */
inline std::int64_t preimage_square_sum( const vectorial_function& F )
{
  detail::require_exact_range( 2 * F.num_inputs() + F.num_outputs(), "preimage square sum" );
  std::unordered_map<vec_t, std::int64_t> histogram;
  for ( auto y : F.table() )
  {
    ++histogram[y];
  }
  std::int64_t s = 0;
  for ( const auto& [value, count] : histogram )
  {
    s += count * count;
  }
  return s << F.num_outputs();
}

/*! \brief sum_sq_fourier(F) equals 2^m sum_b |F^-1(b)|^2 */
inline bool preimage_identity_check( const vectorial_function& F )
{
  return sum_sq_fourier( F ) == preimage_square_sum( F );
}

/*! \brief 2^(2n-1) (2^m - 2^(m-n)) for m >= n */
inline std::int64_t derivative_weight_bound( unsigned n, unsigned m )
{
  detail::require_exact_range( 2 * n - 1 + m, "derivative weight bound" );
  return static_cast<std::int64_t>( pow2( 2 * n - 1 ) * ( pow2( m ) - pow2( m - n ) ) );
}

/*! \brief sum over lambda != 0 and all a of wt(D_a F_lambda)

  Derivatives are materialized per component, so the cost is
  2^m * 4^n / 64 word operations.
*/
inline std::int64_t derivative_weight_total( const vectorial_function& F )
{
  if ( F.num_outputs() < F.num_inputs() )
  {
    throw input_error( "derivative weight total requires m >= n" );
  }
  detail::require_exact_range( 2 * F.num_inputs() - 1 + F.num_outputs(), "derivative weight total" );
  std::int64_t total = 0;
  for ( std::uint64_t lambda = 1; lambda < pow2( F.num_outputs() ); ++lambda )
  {
    total += derivative_weight_sum( F.component( static_cast<vec_t>( lambda ) ) );
  }
  return total;
}

/*! \brief B(F): lambda with F_lambda balanced, ascending by integer value */
inline std::vector<vec_t> balanced_set( const vectorial_function& F )
{
  std::vector<vec_t> out;
  for ( std::uint64_t lambda = 1; lambda < pow2( F.num_outputs() ); ++lambda )
  {
    if ( is_balanced( F.component( static_cast<vec_t>( lambda ) ) ) )
    {
      out.push_back( static_cast<vec_t>( lambda ) );
    }
  }
  return out;
}

/*! \brief Throws consistency_error unless the vectors form a subspace */
inline void require_subspace( const std::vector<vec_t>& members, const char* what )
{
  if ( pow2( gf2_rank( members ) ) != members.size() ||
       std::find( members.begin(), members.end(), vec_t{ 0 } ) == members.end() )
  {
    throw consistency_error( std::string( what ) + " is not a subspace" );
  }
}

/*! \brief C(F): lambda with F_lambda constant (always contains 0) */
inline std::vector<vec_t> constant_set( const vectorial_function& F )
{
  std::vector<vec_t> out;
  for ( std::uint64_t lambda = 0; lambda < pow2( F.num_outputs() ); ++lambda )
  {
    if ( F.component( static_cast<vec_t>( lambda ) ).is_constant() )
    {
      out.push_back( static_cast<vec_t>( lambda ) );
    }
  }
  require_subspace( out, "C(F)" );
  return out;
}

/*! \brief Im(F) is an affine subspace: span of F(x) + F(0) has |Im(F)| points */
inline bool image_is_affine_subspace( const vectorial_function& F )
{
  xor_basis span;
  for ( auto y : F.table() )
  {
    span.insert( y ^ F( 0 ) );
  }
  return pow2( span.rank() ) == image_size( F );
}

/*! \brief x -> xM + t on GF(2)^dim, M invertible, row-vector convention

  Row i of M is the image of the i-th unit vector under x -> xM.
*/
class affinity
{
public:
  explicit affinity( unsigned dim ) : dim_( dim ), rows_( dim ), translation_( 0 )
  {
    check_dim();
    for ( unsigned i = 0; i < dim; ++i )
    {
      rows_[i] = vec_t{ 1 } << i;
    }
  }

  affinity( unsigned dim, std::vector<vec_t> rows, vec_t translation )
      : dim_( dim ), rows_( std::move( rows ) ), translation_( translation )
  {
    check_dim();
    if ( rows_.size() != dim )
    {
      throw input_error( "affinity matrix must have dim rows" );
    }
    const auto limit = pow2( dim );
    for ( auto r : rows_ )
    {
      if ( r >= limit )
      {
        throw input_error( "affinity matrix row exceeds dimension" );
      }
    }
    if ( translation >= limit )
    {
      throw input_error( "affinity translation exceeds dimension" );
    }
    if ( gf2_rank( rows_ ) != dim )
    {
      throw input_error( "affinity matrix is singular" );
    }
  }

  /*! \brief Uniform invertible matrix and translation from a 64-bit generator */
  template<typename Rng>
  static affinity random( unsigned dim, Rng& rng )
  {
    const auto mask = static_cast<vec_t>( pow2( dim ) - 1 );
    while ( true )
    {
      std::vector<vec_t> rows( dim );
      for ( auto& r : rows )
      {
        r = static_cast<vec_t>( rng() ) & mask;
      }
      if ( gf2_rank( rows ) == dim )
      {
        return affinity( dim, std::move( rows ), static_cast<vec_t>( rng() ) & mask );
      }
    }
  }

  unsigned dim() const noexcept { return dim_; }
  const std::vector<vec_t>& rows() const noexcept { return rows_; }
  vec_t translation() const noexcept { return translation_; }

  vec_t operator()( vec_t x ) const noexcept
  {
    vec_t y = translation_;
    for ( ; x; x &= x - 1 )
    {
      y ^= rows_[std::countr_zero( x )];
    }
    return y;
  }

private:
  void check_dim() const
  {
    if ( dim_ < 1 || dim_ > max_outputs )
    {
      throw input_error( "affinity dimension must be in [1, 32]" );
    }
  }

  unsigned dim_;
  std::vector<vec_t> rows_;
  vec_t translation_;
};

/*! \brief x -> outer(F(inner(x))) */
inline vectorial_function apply_affinities( const vectorial_function& F, const affinity& outer, const affinity& inner )
{
  if ( inner.dim() != F.num_inputs() || outer.dim() != F.num_outputs() )
  {
    throw input_error( "affinity dimensions do not match F" );
  }
  std::vector<vec_t> table( F.domain_size() );
  for ( std::uint64_t x = 0; x < table.size(); ++x )
  {
    table[x] = outer( F( inner( static_cast<vec_t>( x ) ) ) );
  }
  return vectorial_function( F.num_inputs(), F.num_outputs(), std::move( table ) );
}

/*! \brief x -> outer(x || 0...0), an embedding GF(2)^n -> GF(2)^m with affine image */
inline vectorial_function padded_affine_embedding( unsigned n, const affinity& outer )
{
  if ( n > outer.dim() )
  {
    throw input_error( "padding requires n <= m" );
  }
  std::vector<vec_t> table( pow2( n ) );
  for ( std::uint64_t x = 0; x < table.size(); ++x )
  {
    table[x] = outer( static_cast<vec_t>( x ) );
  }
  return vectorial_function( n, outer.dim(), std::move( table ) );
}

} // namespace vbf
