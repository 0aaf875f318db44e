/*!
  \file gf2.hpp
  \brief Bit-level helpers and linear algebra over GF(2)

  Vectors of GF(2)^k are packed into unsigned integers with coordinate i
  (1-based) stored in bit i-1.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbf
{

/*! \brief Raised when a caller supplies out-of-contract input */
class input_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief Raised when an identity that must hold mathematically is violated

  Seeing this exception means the implementation is wrong (or a published
  statement is false); it is never part of normal control flow.
*/
class consistency_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

using vec_t = std::uint32_t;

/*! \brief Dot product a.b over GF(2) */
constexpr unsigned dot( std::uint64_t a, std::uint64_t b ) noexcept
{
  return static_cast<unsigned>( std::popcount( a & b ) & 1 );
}

constexpr std::uint64_t pow2( unsigned k ) noexcept
{
  return std::uint64_t{ 1 } << k;
}

/*! \brief Incremental echelon basis of a subspace of GF(2)^k

  Each stored vector has a distinct leading bit and no other stored vector
  has that bit set, so membership is a single reduction pass.
*/
class xor_basis
{
public:
  /*! \brief Reduces v against the basis; returns the residue */
  std::uint64_t reduce( std::uint64_t v ) const noexcept
  {
    for ( auto b : rows_ )
    {
      if ( v & leading( b ) )
      {
        v ^= b;
      }
    }
    return v;
  }

  bool contains( std::uint64_t v ) const noexcept { return reduce( v ) == 0; }

  /*! \brief Adds v; returns false if v was already in the span */
  bool insert( std::uint64_t v )
  {
    v = reduce( v );
    if ( v == 0 )
    {
      return false;
    }
    const auto lead = leading( v );
    for ( auto& b : rows_ )
    {
      if ( b & lead )
      {
        b ^= v;
      }
    }
    rows_.push_back( v );
    return true;
  }

  unsigned rank() const noexcept { return static_cast<unsigned>( rows_.size() ); }

  /* reduced rows, one per leading bit, in insertion order */
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }

private:
  static std::uint64_t leading( std::uint64_t v ) noexcept
  {
    return std::uint64_t{ 1 } << ( 63 - std::countl_zero( v ) );
  }

  std::vector<std::uint64_t> rows_;
};

/*! \brief Rank of a family of vectors */
template<typename Range>
unsigned gf2_rank( const Range& vectors )
{
  xor_basis basis;
  for ( auto v : vectors )
  {
    basis.insert( v );
  }
  return basis.rank();
}

/*! \brief Renders v as the bracketed tuple `[ v1, v2, ..., vk ]` */
inline std::string render_tuple( std::uint64_t v, unsigned k )
{
  std::string s = "[ ";
  for ( unsigned i = 0; i < k; ++i )
  {
    s += ( ( v >> i ) & 1 ) ? '1' : '0';
    s += ( i + 1 < k ) ? ", " : " ";
  }
  s += ']';
  return s;
}

/*! \brief Sort key that orders vectors like their tuples, first coordinate most significant */
inline std::uint64_t tuple_order_key( std::uint64_t v, unsigned k ) noexcept
{
  std::uint64_t r = 0;
  for ( unsigned i = 0; i < k; ++i )
  {
    r = ( r << 1 ) | ( ( v >> i ) & 1 );
  }
  return r;
}

} // namespace vbf
