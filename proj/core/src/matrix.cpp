#include "distrev/matrix.hpp"

#include "distrev/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace distrev
{

std::size_t arity( Connective c )
{
    switch ( c )
    {
        case Connective::True:
        case Connective::False: return 0;
        case Connective::Not: return 1;
        default: return 2;
    }
}

const char* connective_name( Connective c )
{
    switch ( c )
    {
        case Connective::Not: return "not";
        case Connective::And: return "and";
        case Connective::Or: return "or";
        case Connective::Implies: return "implies";
        case Connective::Iff: return "iff";
        case Connective::True: return "true";
        case Connective::False: return "false";
    }
    return "?";
}

Matrix::Matrix( std::vector< std::string > values, std::vector< TruthValue > designated,
                std::array< std::optional< Table >, 7 > tables )
        : _values{ std::move( values ) }, _tables{ std::move( tables ) }
{
    if ( _values.size() < 2 )
        throw InputError( "a matrix needs at least two truth values" );
    if ( _values.size() > 255 )
        throw InputError( "too many truth values" );
    for ( std::size_t i = 0; i < _values.size(); ++i )
        for ( std::size_t j = i + 1; j < _values.size(); ++j )
            if ( _values[ i ] == _values[ j ] )
                throw InputError( "duplicate truth value '" + _values[ i ] + "'" );

    _designated.assign( _values.size(), false );
    for ( auto d : designated )
    {
        if ( d >= _values.size() )
            throw InputError( "designated value out of range" );
        _designated[ d ] = true;
    }
    const auto count = std::count( _designated.begin(), _designated.end(), true );
    if ( count == 0 )
        throw InputError( "the designated set must be non-empty" );
    if ( static_cast< std::size_t >( count ) == _values.size() )
        throw InputError( "the designated set must be a proper subset of the truth values" );

    for ( auto c : all_connectives )
    {
        const auto& t = _tables[ index( c ) ];
        if ( !t )
            continue;
        std::size_t expected = 1;
        for ( std::size_t k = 0; k < arity( c ); ++k )
            expected *= _values.size();
        if ( t->size() != expected )
            throw InputError( std::string( "table for '" ) + connective_name( c ) + "' has " +
                              std::to_string( t->size() ) + " entries, expected " + std::to_string( expected ) );
        for ( auto v : *t )
            if ( v >= _values.size() )
                throw InputError( std::string( "table for '" ) + connective_name( c ) + "' has an out-of-range value" );
    }
}

const Matrix& Matrix::classical()
{
    static const Matrix m{
        { "0", "1" },
        { 1 },
        {
                Table{ 1, 0 },          // not
                Table{ 0, 0, 0, 1 },    // and
                Table{ 0, 1, 1, 1 },    // or
                Table{ 1, 1, 0, 1 },    // implies
                Table{ 1, 0, 0, 1 },    // iff
                Table{ 1 },             // true
                Table{ 0 },             // false
        },
    };
    return m;
}

bool Matrix::is_classical() const
{
    return *this == classical();
}

std::optional< TruthValue > Matrix::value_of( const std::string& label ) const
{
    for ( std::size_t i = 0; i < _values.size(); ++i )
        if ( _values[ i ] == label )
            return static_cast< TruthValue >( i );
    return std::nullopt;
}

TruthValue Matrix::apply( Connective c, std::span< const TruthValue > args ) const
{
    const auto& t = _tables[ index( c ) ];
    if ( !t )
        throw MissingConnective( std::string( "matrix does not interpret '" ) + connective_name( c ) + "'" );
    if ( args.size() != arity( c ) )
        throw std::invalid_argument( "wrong number of arguments for connective" );
    std::size_t offset = 0;
    for ( auto a : args )
        offset = offset * _values.size() + a;
    return ( *t )[ offset ];
}

TruthValue Matrix::apply( Connective c, TruthValue a ) const
{
    const std::array< TruthValue, 1 > args{ a };
    return apply( c, args );
}

TruthValue Matrix::apply( Connective c, TruthValue a, TruthValue b ) const
{
    const std::array< TruthValue, 2 > args{ a, b };
    return apply( c, args );
}

} // namespace distrev
