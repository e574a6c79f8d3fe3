#include "distrev/point_set.hpp"

#include "distrev/error.hpp"

#include <stdexcept>

namespace distrev
{

PointSet::PointSet( std::size_t universe_size )
{
    if ( universe_size > max_universe )
        throw BoundExceeded( "universe of " + std::to_string( universe_size ) + " points exceeds the " +
                             std::to_string( max_universe ) + "-point limit" );
    _n = static_cast< std::uint16_t >( universe_size );
}

PointSet::PointSet( std::size_t universe_size, std::initializer_list< std::size_t > members )
        : PointSet( universe_size )
{
    for ( auto i : members )
        insert( i );
}

PointSet::PointSet( std::size_t universe_size, std::span< const std::size_t > members )
        : PointSet( universe_size )
{
    for ( auto i : members )
        insert( i );
}

PointSet PointSet::full( std::size_t universe_size )
{
    PointSet s( universe_size );
    for ( std::size_t i = 0; i < universe_size; ++i )
        s.insert( i );
    return s;
}

PointSet PointSet::from_mask( std::size_t universe_size, std::uint64_t mask )
{
    if ( universe_size > 64 )
        throw std::invalid_argument( "from_mask needs a universe of at most 64 points" );
    PointSet s( universe_size );
    s._words[ 0 ] = universe_size == 64 ? mask : mask & ( ( std::uint64_t{ 1 } << universe_size ) - 1 );
    return s;
}

void PointSet::insert( std::size_t i )
{
    if ( i >= _n )
        throw std::out_of_range( "point " + std::to_string( i ) + " outside universe of size " + std::to_string( _n ) );
    _words[ i / 64 ] |= std::uint64_t{ 1 } << ( i % 64 );
}

void PointSet::erase( std::size_t i )
{
    if ( i < _n )
        _words[ i / 64 ] &= ~( std::uint64_t{ 1 } << ( i % 64 ) );
}

std::size_t PointSet::size() const
{
    std::size_t total = 0;
    for ( auto w : _words )
        total += static_cast< std::size_t >( std::popcount( w ) );
    return total;
}

bool PointSet::empty() const
{
    for ( auto w : _words )
        if ( w != 0 )
            return false;
    return true;
}

std::vector< std::size_t > PointSet::members() const
{
    std::vector< std::size_t > out;
    out.reserve( size() );
    for_each( [ & ]( std::size_t i ) { out.push_back( i ); } );
    return out;
}

bool PointSet::is_subset_of( const PointSet& other ) const
{
    for ( std::size_t k = 0; k < _words.size(); ++k )
        if ( ( _words[ k ] & ~other._words[ k ] ) != 0 )
            return false;
    return true;
}

bool PointSet::intersects( const PointSet& other ) const
{
    for ( std::size_t k = 0; k < _words.size(); ++k )
        if ( ( _words[ k ] & other._words[ k ] ) != 0 )
            return true;
    return false;
}

PointSet& PointSet::operator|=( const PointSet& other )
{
    for ( std::size_t k = 0; k < _words.size(); ++k )
        _words[ k ] |= other._words[ k ];
    return *this;
}

PointSet& PointSet::operator&=( const PointSet& other )
{
    for ( std::size_t k = 0; k < _words.size(); ++k )
        _words[ k ] &= other._words[ k ];
    return *this;
}

PointSet& PointSet::operator-=( const PointSet& other )
{
    for ( std::size_t k = 0; k < _words.size(); ++k )
        _words[ k ] &= ~other._words[ k ];
    return *this;
}

std::strong_ordering operator<=>( const PointSet& a, const PointSet& b )
{
    if ( auto c = a._n <=> b._n; c != 0 )
        return c;
    if ( auto c = a.size() <=> b.size(); c != 0 )
        return c;
    // Same cardinality: compare the sorted member lists. The first differing
    // bit decides; the set holding the lower index comes first.
    for ( std::size_t k = 0; k < a._words.size(); ++k )
    {
        const auto diff = a._words[ k ] ^ b._words[ k ];
        if ( diff != 0 )
        {
            const auto bit = std::countr_zero( diff );
            return ( ( a._words[ k ] >> bit ) & 1U ) ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::size_t PointSet::hash() const
{
    std::uint64_t h = 0xcbf29ce484222325ULL ^ _n;
    for ( auto w : _words )
    {
        h ^= w + 0x9e3779b97f4a7c15ULL + ( h << 6 ) + ( h >> 2 );
    }
    return static_cast< std::size_t >( h );
}

Universe::Universe( std::vector< std::string > labels )
        : _labels{ std::move( labels ) }
{
    if ( _labels.size() > PointSet::max_universe )
        throw BoundExceeded( "universe of " + std::to_string( _labels.size() ) + " points exceeds the " +
                             std::to_string( PointSet::max_universe ) + "-point limit" );
    for ( std::size_t i = 0; i < _labels.size(); ++i )
    {
        if ( _labels[ i ].empty() )
            throw InputError( "empty point label" );
        if ( !_index.emplace( _labels[ i ], i ).second )
            throw InputError( "duplicate point label '" + _labels[ i ] + "'" );
    }
}

std::size_t Universe::index_of( const std::string& label ) const
{
    const auto it = _index.find( label );
    if ( it == _index.end() )
        throw InputError( "unknown point '" + label + "'" );
    return it->second;
}

std::string Universe::format( const PointSet& s ) const
{
    std::string out = "{";
    bool first = true;
    s.for_each( [ & ]( std::size_t i ) {
        if ( !first )
            out += ' ';
        out += _labels.at( i );
        first = false;
    } );
    return out + "}";
}

PointSet Universe::set_of( std::span< const std::string > labels ) const
{
    PointSet s( size() );
    for ( const auto& l : labels )
        s.insert( index_of( l ) );
    return s;
}

std::vector< PointSet > all_subsets( std::size_t n )
{
    if ( n > 20 )
        throw BoundExceeded( "refusing to enumerate subsets of a " + std::to_string( n ) + "-point universe" );
    std::vector< PointSet > out;
    out.reserve( std::size_t{ 1 } << n );
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << n ); ++mask )
        out.push_back( PointSet::from_mask( n, mask ) );
    return out;
}

std::vector< PointSet > all_nonempty_subsets( std::size_t n )
{
    auto out = all_subsets( n );
    out.erase( out.begin() );
    return out;
}

} // namespace distrev
