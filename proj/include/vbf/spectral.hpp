/*!
  \file spectral.hpp
  \brief Walsh-Hadamard analysis of single Boolean functions

  Spectrum, balancedness, nonlinearity, bent and semi-bent tests,
  first-order derivatives, linear structures and the partially-bent
  classification.
*/

#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "boolean_function.hpp"
#include "gf2.hpp"

namespace vbf
{

/*! \brief W_f(a) for every a in GF(2)^n */
struct walsh_spectrum
{
  unsigned num_vars = 1;
  std::vector<std::int64_t> values;

  std::int64_t max_abs() const noexcept
  {
    std::int64_t r = 0;
    for ( auto v : values )
    {
      r = std::max( r, v < 0 ? -v : v );
    }
    return r;
  }
};

namespace detail
{

/* unnormalized in-place Walsh-Hadamard butterfly */
inline void fwht( std::vector<std::int64_t>& v )
{
  for ( std::size_t len = 1; len < v.size(); len <<= 1 )
  {
    for ( std::size_t i = 0; i < v.size(); i += len << 1 )
    {
      for ( std::size_t j = i; j < i + len; ++j )
      {
        const auto a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

} // namespace detail

/*! \brief Fast Walsh-Hadamard transform, O(n 2^n) */
inline walsh_spectrum walsh_transform( const boolean_function& f )
{
  walsh_spectrum s{ f.num_vars(), std::vector<std::int64_t>( f.size() ) };
  for ( std::uint64_t x = 0; x < f.size(); ++x )
  {
    s.values[x] = f.get( static_cast<vec_t>( x ) ) ? -1 : 1;
  }
  detail::fwht( s.values );
  return s;
}

/*! \brief W_f(0) = 2^n - 2 wt(f) */
inline std::int64_t fourier_coefficient( const boolean_function& f ) noexcept
{
  return static_cast<std::int64_t>( f.size() ) - 2 * static_cast<std::int64_t>( weight( f ) );
}

inline bool is_balanced( const boolean_function& f ) noexcept
{
  return 2 * weight( f ) == f.size();
}

inline std::int64_t nonlinearity( const walsh_spectrum& s ) noexcept
{
  return ( static_cast<std::int64_t>( pow2( s.num_vars ) ) - s.max_abs() ) / 2;
}

inline std::int64_t nonlinearity( const boolean_function& f )
{
  return nonlinearity( walsh_transform( f ) );
}

/*! \brief Bent: n even and nonlinearity 2^(n-1) - 2^(n/2-1); false for odd n */
inline bool is_bent( const walsh_spectrum& s ) noexcept
{
  const unsigned n = s.num_vars;
  if ( n % 2 != 0 )
  {
    return false;
  }
  return nonlinearity( s ) == static_cast<std::int64_t>( pow2( n - 1 ) - pow2( n / 2 - 1 ) );
}

inline bool is_bent( const boolean_function& f ) { return is_bent( walsh_transform( f ) ); }

/*! \brief Semi-bent: n odd and nonlinearity 2^(n-1) - 2^((n-1)/2); false for even n */
inline bool is_semi_bent( const walsh_spectrum& s ) noexcept
{
  const unsigned n = s.num_vars;
  if ( n % 2 == 0 )
  {
    return false;
  }
  return nonlinearity( s ) == static_cast<std::int64_t>( pow2( n - 1 ) - pow2( ( n - 1 ) / 2 ) );
}

inline bool is_semi_bent( const boolean_function& f ) { return is_semi_bent( walsh_transform( f ) ); }

namespace detail
{

/* g(x) = f(x ^ a), bitsliced */
inline boolean_function translate( const boolean_function& f, vec_t a )
{
  auto g = f;
  auto words = g.words();
  for ( unsigned i = 0; i < std::min( f.num_vars(), 6u ); ++i )
  {
    if ( !( ( a >> i ) & 1 ) )
    {
      continue;
    }
    const auto mask = low_half_masks[i];
    const unsigned shift = 1u << i;
    for ( auto& w : words )
    {
      w = ( ( w & mask ) << shift ) | ( ( w >> shift ) & mask );
    }
  }
  const auto word_shift = static_cast<std::size_t>( a >> 6 );
  if ( word_shift != 0 )
  {
    std::vector<std::uint64_t> moved( words.size() );
    for ( std::size_t j = 0; j < words.size(); ++j )
    {
      moved[j ^ word_shift] = words[j];
    }
    std::copy( moved.begin(), moved.end(), words.begin() );
  }
  return g;
}

} // namespace detail

/*! \brief D_a f(x) = f(x + a) + f(x) */
inline boolean_function derivative( const boolean_function& f, vec_t a )
{
  if ( a >= f.size() )
  {
    throw input_error( "direction outside GF(2)^" + std::to_string( f.num_vars() ) );
  }
  return detail::translate( f, a ) ^ f;
}

/*! \brief Autocorrelation spectrum: entry a is sum_x (-1)^(D_a f(x))

  Computed as the inverse transform of the squared Walsh spectrum.
*/
inline std::vector<std::int64_t> autocorrelation( const boolean_function& f )
{
  const unsigned n = f.num_vars();
  std::vector<std::int64_t> r;
  if ( n <= 20 )
  {
    r = walsh_transform( f ).values;
    for ( auto& v : r )
    {
      v *= v;
    }
    detail::fwht( r );
    for ( auto& v : r )
    {
      v >>= n;
    }
  }
  else
  {
    r.resize( f.size() );
    for ( std::uint64_t a = 0; a < f.size(); ++a )
    {
      r[a] = fourier_coefficient( derivative( f, static_cast<vec_t>( a ) ) );
    }
  }
  return r;
}

/*! \brief Sum over all a of wt(D_a f)

  Each derivative is materialized; the total is checked against
  2^(2n-1) - F(f)^2 / 2 and a mismatch raises consistency_error.
*/
inline std::int64_t derivative_weight_sum( const boolean_function& f )
{
  std::int64_t total = 0;
  for ( std::uint64_t a = 0; a < f.size(); ++a )
  {
    total += static_cast<std::int64_t>( weight( derivative( f, static_cast<vec_t>( a ) ) ) );
  }
  const auto fc = fourier_coefficient( f );
  const auto expected = static_cast<std::int64_t>( pow2( 2 * f.num_vars() - 1 ) ) - fc * fc / 2;
  if ( total != expected )
  {
    throw consistency_error( "derivative weight sum " + std::to_string( total ) + " != " + std::to_string( expected ) );
  }
  return total;
}

/*! \brief V(f) with a basis in reduced echelon form */
struct linear_structure_space
{
  unsigned num_vars = 1;
  std::vector<vec_t> basis;

  unsigned dim() const noexcept { return static_cast<unsigned>( basis.size() ); }

  /* all 2^dim members, ascending */
  std::vector<vec_t> members() const
  {
    std::vector<vec_t> out{ 0 };
    for ( auto b : basis )
    {
      const auto sz = out.size();
      for ( std::size_t i = 0; i < sz; ++i )
      {
        out.push_back( out[i] ^ b );
      }
    }
    std::sort( out.begin(), out.end() );
    return out;
  }

  bool contains( vec_t a ) const
  {
    xor_basis b;
    for ( auto v : basis )
    {
      b.insert( v );
    }
    return b.contains( a );
  }
};

/*! \brief Directions a with D_a f constant, as a subspace

  Throws consistency_error if the directions do not form a subspace.
*/
inline linear_structure_space linear_structures( const boolean_function& f )
{
  const auto ac = autocorrelation( f );
  const auto full = static_cast<std::int64_t>( f.size() );
  xor_basis span;
  std::uint64_t count = 0;
  for ( std::uint64_t a = 0; a < f.size(); ++a )
  {
    if ( ac[a] == full || ac[a] == -full )
    {
      ++count;
      span.insert( a );
    }
  }
  if ( count != pow2( span.rank() ) )
  {
    throw consistency_error( "linear structures of f do not form a subspace" );
  }
  linear_structure_space v{ f.num_vars(), {} };
  for ( auto r : span.rows() )
  {
    v.basis.push_back( static_cast<vec_t>( r ) );
  }
  std::sort( v.basis.begin(), v.basis.end() );
  return v;
}

/*! \brief Every nonzero-direction derivative is balanced or constant */
inline bool is_partially_bent( const std::vector<std::int64_t>& autocorr ) noexcept
{
  const auto full = static_cast<std::int64_t>( autocorr.size() );
  for ( std::size_t a = 1; a < autocorr.size(); ++a )
  {
    const auto v = autocorr[a];
    if ( v != 0 && v != full && v != -full )
    {
      return false;
    }
  }
  return true;
}

inline bool is_partially_bent( const boolean_function& f )
{
  return is_partially_bent( autocorrelation( f ) );
}

/*! \brief Outcome of the direct partially-bent definition check

  E is V(f), found by evaluating every derivative pointwise.  The
  complement E' is the canonical one: E's basis is extended greedily by
  unit vectors e1, e2, ... that are not yet in the span.  Bentness is
  checked on that single complement.
*/
struct partially_bent_decomposition
{
  bool holds = false;
  bool affine_on_subspace = false;
  bool bent_on_complement = false;
  std::vector<vec_t> subspace_basis;
  std::vector<vec_t> complement_basis;
};

/*! \brief Decides partial bentness from the definition (n <= 6)

  Shares no code path with is_partially_bent beyond truth-table access.
*/
inline partially_bent_decomposition partially_bent_oracle_report( const boolean_function& f )
{
  const unsigned n = f.num_vars();
  if ( n > 6 )
  {
    throw input_error( "partially-bent oracle supports n <= 6, got " + std::to_string( n ) );
  }
  const vec_t size = static_cast<vec_t>( f.size() );
  partially_bent_decomposition out;

  xor_basis e_span;
  for ( vec_t a = 0; a < size; ++a )
  {
    const bool c = f.get( a ) != f.get( 0 );
    bool constant = true;
    for ( vec_t x = 1; x < size && constant; ++x )
    {
      constant = ( f.get( x ^ a ) != f.get( x ) ) == c;
    }
    if ( constant )
    {
      e_span.insert( a );
    }
  }
  for ( auto r : e_span.rows() )
  {
    out.subspace_basis.push_back( static_cast<vec_t>( r ) );
  }

  const auto combine = []( const std::vector<vec_t>& basis, vec_t coords ) {
    vec_t v = 0;
    for ( std::size_t i = 0; i < basis.size(); ++i )
    {
      if ( ( coords >> i ) & 1 )
      {
        v ^= basis[i];
      }
    }
    return v;
  };

  /* restriction to E is affine iff every second difference vanishes */
  const auto& eb = out.subspace_basis;
  const vec_t e_size = vec_t{ 1 } << eb.size();
  out.affine_on_subspace = true;
  for ( vec_t i = 0; i < e_size && out.affine_on_subspace; ++i )
  {
    for ( vec_t j = 0; j < e_size; ++j )
    {
      const auto u = combine( eb, i ), v = combine( eb, j );
      if ( f.get( u ^ v ) ^ f.get( u ) ^ f.get( v ) ^ f.get( 0 ) )
      {
        out.affine_on_subspace = false;
        break;
      }
    }
  }

  auto extended = e_span;
  for ( unsigned i = 0; i < n; ++i )
  {
    if ( extended.insert( vec_t{ 1 } << i ) )
    {
      out.complement_basis.push_back( vec_t{ 1 } << i );
    }
  }

  /* bent on E': every Walsh value of the restriction has magnitude 2^(d/2) */
  const auto d = static_cast<unsigned>( out.complement_basis.size() );
  out.bent_on_complement = d % 2 == 0;
  const vec_t c_size = vec_t{ 1 } << d;
  for ( vec_t u = 0; u < c_size && out.bent_on_complement; ++u )
  {
    std::int64_t sum = 0;
    for ( vec_t y = 0; y < c_size; ++y )
    {
      sum += ( f.get( combine( out.complement_basis, y ) ) ^ dot( u, y ) ) ? -1 : 1;
    }
    out.bent_on_complement = std::llabs( sum ) == static_cast<std::int64_t>( pow2( d / 2 ) );
  }

  out.holds = out.affine_on_subspace && out.bent_on_complement;
  return out;
}

inline bool partially_bent_oracle( const boolean_function& f )
{
  return partially_bent_oracle_report( f ).holds;
}

/*! \brief Both sides of F(f)^2 = sum_a F(D_a f), computed independently */
inline std::pair<std::int64_t, std::int64_t> scalar_fourier_identity_sides( const boolean_function& f )
{
  const auto w0 = walsh_transform( f ).values[0];
  std::int64_t rhs = 0;
  for ( std::uint64_t a = 0; a < f.size(); ++a )
  {
    rhs += fourier_coefficient( derivative( f, static_cast<vec_t>( a ) ) );
  }
  return { w0 * w0, rhs };
}

inline bool scalar_fourier_identity_check( const boolean_function& f )
{
  const auto [lhs, rhs] = scalar_fourier_identity_sides( f );
  return lhs == rhs;
}

} // namespace vbf
