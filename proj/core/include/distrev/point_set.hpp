#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace distrev
{

// Subset of a finite universe {0, ..., n-1}, stored as a fixed-width bitset.
// Members are always iterated in increasing index order.
class PointSet
{
public:
    static constexpr std::size_t max_universe = 256;

    PointSet() = default;
    explicit PointSet( std::size_t universe_size );
    PointSet( std::size_t universe_size, std::initializer_list< std::size_t > members );
    PointSet( std::size_t universe_size, std::span< const std::size_t > members );

    static PointSet full( std::size_t universe_size );
    // Lowest `universe_size` bits of `mask`; universe_size <= 64.
    static PointSet from_mask( std::size_t universe_size, std::uint64_t mask );

    [[nodiscard]] std::size_t universe_size() const { return _n; }
    [[nodiscard]] bool contains( std::size_t i ) const { return i < _n && ( ( _words[ i / 64 ] >> ( i % 64 ) ) & 1U ); }
    void insert( std::size_t i );
    void erase( std::size_t i );

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool empty() const;
    [[nodiscard]] std::vector< std::size_t > members() const;
    [[nodiscard]] std::uint64_t low_word() const { return _words[ 0 ]; }

    template < class F >
    void for_each( F&& f ) const
    {
        for ( std::size_t k = 0; k < _words.size(); ++k )
        {
            std::uint64_t word = _words[ k ];
            while ( word != 0 )
            {
                const auto bit = static_cast< std::size_t >( std::countr_zero( word ) );
                f( k * 64 + bit );
                word &= word - 1;
            }
        }
    }

    [[nodiscard]] bool is_subset_of( const PointSet& other ) const;
    [[nodiscard]] bool intersects( const PointSet& other ) const;

    PointSet& operator|=( const PointSet& other );
    PointSet& operator&=( const PointSet& other );
    PointSet& operator-=( const PointSet& other );

    friend PointSet operator|( PointSet a, const PointSet& b ) { return a |= b; }
    friend PointSet operator&( PointSet a, const PointSet& b ) { return a &= b; }
    friend PointSet operator-( PointSet a, const PointSet& b ) { return a -= b; }

    friend bool operator==( const PointSet&, const PointSet& ) = default;
    // Deterministic total order: by universe size, then by cardinality, then
    // lexicographically on the sorted member list.
    friend std::strong_ordering operator<=>( const PointSet& a, const PointSet& b );

    [[nodiscard]] std::size_t hash() const;

private:
    std::uint16_t _n = 0;
    std::array< std::uint64_t, max_universe / 64 > _words{};
};

struct PointSetHash
{
    std::size_t operator()( const PointSet& s ) const { return s.hash(); }
};

struct PointSetPairHash
{
    std::size_t operator()( const std::pair< PointSet, PointSet >& p ) const
    {
        return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
    }
};

// Ordered list of point labels.
class Universe
{
public:
    Universe() = default;
    explicit Universe( std::vector< std::string > labels );

    [[nodiscard]] std::size_t size() const { return _labels.size(); }
    [[nodiscard]] const std::string& label( std::size_t i ) const { return _labels.at( i ); }
    [[nodiscard]] const std::vector< std::string >& labels() const { return _labels; }
    // Throws InputError for an unknown label.
    [[nodiscard]] std::size_t index_of( const std::string& label ) const;
    [[nodiscard]] bool has( const std::string& label ) const { return _index.contains( label ); }

    [[nodiscard]] std::string format( const PointSet& s ) const; // "{a b}"
    [[nodiscard]] PointSet set_of( std::span< const std::string > labels ) const;

    friend bool operator==( const Universe& a, const Universe& b ) { return a._labels == b._labels; }

private:
    std::vector< std::string > _labels;
    std::unordered_map< std::string, std::size_t > _index;
};

// Every subset of an n-point universe (n <= 20), in increasing mask order.
std::vector< PointSet > all_subsets( std::size_t n );
std::vector< PointSet > all_nonempty_subsets( std::size_t n );

} // namespace distrev
