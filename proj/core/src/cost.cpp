#include "distrev/cost.hpp"

#include "distrev/error.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace distrev
{

namespace
{

__extension__ typedef __int128 wide;

std::int64_t narrow( wide value )
{
    if ( value > std::numeric_limits< std::int64_t >::max() || value < std::numeric_limits< std::int64_t >::min() )
        throw std::overflow_error( "cost arithmetic overflow" );
    return static_cast< std::int64_t >( value );
}

std::int64_t parse_int( std::string_view text, std::string_view whole )
{
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if ( first != last && *first == '+' )
        ++first;
    auto [ ptr, ec ] = std::from_chars( first, last, value );
    if ( ec != std::errc{} || ptr != last || first == last )
        throw InputError( "malformed cost '" + std::string( whole ) + "'" );
    return value;
}

} // namespace

Cost::Cost( std::int64_t numerator, std::int64_t denominator )
{
    if ( denominator == 0 )
        throw std::invalid_argument( "cost with zero denominator" );
    if ( denominator < 0 )
    {
        numerator = -numerator;
        denominator = -denominator;
    }
    const auto g = std::gcd( numerator, denominator );
    _num = numerator / g;
    _den = denominator / g;
}

Cost Cost::infinite()
{
    Cost c;
    c._infinite = true;
    c._num = 0;
    c._den = 1;
    return c;
}

Cost Cost::parse( std::string_view text )
{
    if ( text == "inf" || text == "|N|" )
        return infinite();
    if ( text.empty() )
        throw InputError( "empty cost" );

    if ( const auto slash = text.find( '/' ); slash != std::string_view::npos )
    {
        const auto num = parse_int( text.substr( 0, slash ), text );
        const auto den = parse_int( text.substr( slash + 1 ), text );
        if ( den <= 0 )
            throw InputError( "cost denominator must be positive in '" + std::string( text ) + "'" );
        return Cost{ num, den };
    }

    if ( const auto dot = text.find( '.' ); dot != std::string_view::npos )
    {
        const auto int_part = text.substr( 0, dot );
        const auto frac_part = text.substr( dot + 1 );
        if ( frac_part.empty() || frac_part.size() > 15 )
            throw InputError( "malformed cost '" + std::string( text ) + "'" );
        const bool negative = !int_part.empty() && int_part.front() == '-';
        const auto magnitude = int_part.empty() || int_part == "-" || int_part == "+"
                                       ? std::int64_t{ 0 }
                                       : std::llabs( parse_int( int_part, text ) );
        const auto frac = parse_int( frac_part, text );
        if ( frac < 0 || frac_part.front() == '+' || frac_part.front() == '-' )
            throw InputError( "malformed cost '" + std::string( text ) + "'" );
        std::int64_t scale = 1;
        for ( std::size_t i = 0; i < frac_part.size(); ++i )
            scale *= 10;
        const auto num = narrow( wide{ magnitude } * scale + frac );
        return Cost{ negative ? -num : num, scale };
    }

    return Cost{ parse_int( text, text ), 1 };
}

std::string Cost::to_string() const
{
    if ( _infinite )
        return "inf";
    if ( _den == 1 )
        return std::to_string( _num );

    // Terminating decimal iff den = 2^a 5^b.
    std::int64_t rest = _den;
    int twos = 0;
    int fives = 0;
    while ( rest % 2 == 0 )
    {
        rest /= 2;
        ++twos;
    }
    while ( rest % 5 == 0 )
    {
        rest /= 5;
        ++fives;
    }
    if ( rest != 1 || std::max( twos, fives ) > 15 )
        return std::to_string( _num ) + "/" + std::to_string( _den );

    const int digits = std::max( twos, fives );
    std::int64_t scale = 1;
    for ( int i = 0; i < digits; ++i )
        scale *= 10;
    const auto scaled = narrow( wide{ _num } * ( scale / _den ) );
    const auto magnitude = scaled < 0 ? -scaled : scaled;
    std::string frac = std::to_string( magnitude % scale );
    frac.insert( 0, static_cast< std::size_t >( digits ) - frac.size(), '0' );
    return ( scaled < 0 ? "-" : "" ) + std::to_string( magnitude / scale ) + "." + frac;
}

double Cost::approx() const
{
    if ( _infinite )
        return std::numeric_limits< double >::infinity();
    return static_cast< double >( _num ) / static_cast< double >( _den );
}

Ordering compare_costs( const Cost& a, const Cost& b, OrderMode mode )
{
    if ( a.is_infinite() || b.is_infinite() )
    {
        if ( mode == OrderMode::Real )
            throw ModeMismatch( "infinite cost is not admitted by the real order" );
        if ( a.is_infinite() && b.is_infinite() )
            return Ordering::Equal;
        return a.is_infinite() ? Ordering::Greater : Ordering::Less;
    }
    const wide lhs = wide{ a.numerator() } * b.denominator();
    const wide rhs = wide{ b.numerator() } * a.denominator();
    if ( lhs < rhs )
        return Ordering::Less;
    if ( lhs > rhs )
        return Ordering::Greater;
    return Ordering::Equal;
}

Cost add_costs( const Cost& a, const Cost& b )
{
    if ( a.is_infinite() || b.is_infinite() )
        return Cost::infinite();
    const wide num = wide{ a.numerator() } * b.denominator() + wide{ b.numerator() } * a.denominator();
    const wide den = wide{ a.denominator() } * b.denominator();
    // Reduce in wide precision before narrowing.
    wide x = num < 0 ? -num : num;
    wide y = den;
    while ( y != 0 )
    {
        const wide t = x % y;
        x = y;
        y = t;
    }
    const wide g = x == 0 ? 1 : x;
    return Cost{ narrow( num / g ), narrow( den / g ) };
}

const char* to_string( OrderMode mode )
{
    return mode == OrderMode::Real ? "real" : "liberal";
}

const char* to_string( Ordering ord )
{
    switch ( ord )
    {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        case Ordering::Greater: return "greater";
    }
    return "?";
}

} // namespace distrev
