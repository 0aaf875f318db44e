/*!
  \file random.hpp
  \brief SplitMix64, a portable 64-bit generator with per-index substreams
*/

#pragma once

#include <cstdint>

namespace vbf
{

/*! \brief SplitMix64 (Steele, Lea, Flood).  Output depends only on the seed. */
class splitmix64
{
public:
  using result_type = std::uint64_t;

  explicit splitmix64( std::uint64_t seed ) noexcept : state_( seed ) {}

  /*! \brief Independent stream for candidate `index` under `seed` */
  static splitmix64 substream( std::uint64_t seed, std::uint64_t index ) noexcept
  {
    splitmix64 root( seed ^ ( index * 0xd1342543de82ef95ull ) );
    return splitmix64( root() ^ index );
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{ 0 }; }

  result_type operator()() noexcept
  {
    std::uint64_t z = ( state_ += 0x9e3779b97f4a7c15ull );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    return z ^ ( z >> 31 );
  }

private:
  std::uint64_t state_;
};

/*! \brief Draws single bits from a 64-bit generator, low bit first */
template<typename Rng>
class bit_source
{
public:
  explicit bit_source( Rng& rng ) noexcept : rng_( rng ) {}

  bool next()
  {
    if ( left_ == 0 )
    {
      buffer_ = rng_();
      left_ = 64;
    }
    const bool b = buffer_ & 1;
    buffer_ >>= 1;
    --left_;
    return b;
  }

private:
  Rng& rng_;
  std::uint64_t buffer_ = 0;
  unsigned left_ = 0;
};

} // namespace vbf
