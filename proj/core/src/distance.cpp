#include "distrev/distance.hpp"

#include "distrev/error.hpp"

namespace distrev
{

PseudoDistance::PseudoDistance( Universe universe, OrderMode mode, std::vector< Cost > table )
        : _universe{ std::move( universe ) }, _mode{ mode }, _table{ std::move( table ) }
{
    if ( _table.size() != size() * size() )
        throw InputError( "cost table has " + std::to_string( _table.size() ) + " entries, expected " +
                          std::to_string( size() * size() ) );
    if ( _mode == OrderMode::Real )
        for ( std::size_t k = 0; k < _table.size(); ++k )
            if ( _table[ k ].is_infinite() )
                throw ModeMismatch( "infinite cost at (" + _universe.label( k / size() ) + ", " +
                                    _universe.label( k % size() ) + ") under the real order" );
}

PseudoDistance::PseudoDistance( Universe universe, OrderMode mode,
                                const std::function< Cost( std::size_t, std::size_t ) >& cost )
        : PseudoDistance(
                  universe, mode,
                  [ & ] {
                      std::vector< Cost > t;
                      t.reserve( universe.size() * universe.size() );
                      for ( std::size_t v = 0; v < universe.size(); ++v )
                          for ( std::size_t w = 0; w < universe.size(); ++w )
                              t.push_back( cost( v, w ) );
                      return t;
                  }() )
{
}

PseudoDistance PseudoDistance::with_cost( std::size_t v, std::size_t w, Cost c ) const
{
    auto table = _table;
    table.at( v * size() + w ) = c;
    return PseudoDistance{ _universe, _mode, std::move( table ) };
}

const char* to_string( DistanceProperty p )
{
    switch ( p )
    {
        case DistanceProperty::Symmetric: return "symmetric";
        case DistanceProperty::IR: return "ir";
        case DistanceProperty::Positive: return "positive";
        case DistanceProperty::TIR: return "tir";
        case DistanceProperty::LiberalIR: return "liberal-ir";
        case DistanceProperty::LiberalPositive: return "liberal-positive";
        case DistanceProperty::LiberalTIR: return "liberal-tir";
    }
    return "?";
}

namespace
{

bool needs_liberal( DistanceProperty p )
{
    return p == DistanceProperty::LiberalIR || p == DistanceProperty::LiberalPositive ||
           p == DistanceProperty::LiberalTIR;
}

std::string cost_note( const PseudoDistance& d, std::size_t a, std::size_t b )
{
    return "d(" + d.universe().label( a ) + "," + d.universe().label( b ) + ")=" + d( a, b ).to_string();
}

} // namespace

PropertyReport check_property( const PseudoDistance& d, DistanceProperty prop, std::size_t witness_cap )
{
    if ( prop != DistanceProperty::Symmetric )
    {
        const bool liberal = needs_liberal( prop );
        if ( liberal && d.mode() != OrderMode::Liberal )
            throw ModeMismatch( std::string( to_string( prop ) ) + " needs a liberal-order distance" );
        if ( !liberal && d.mode() != OrderMode::Real )
            throw ModeMismatch( std::string( to_string( prop ) ) + " needs a real-order distance" );
    }

    PropertyReport report;
    report.property = to_string( prop );
    report.witness_cap = witness_cap;
    const auto& u = d.universe();
    const std::size_t n = d.size();
    const Cost zero;

    switch ( prop )
    {
        case DistanceProperty::Symmetric:
            for ( std::size_t v = 0; v < n; ++v )
                for ( std::size_t w = v + 1; w < n; ++w )
                {
                    ++report.checked;
                    if ( !( d( v, w ) == d( w, v ) ) )
                        report.record( { { u.label( v ), u.label( w ) }, cost_note( d, v, w ) + " vs " + cost_note( d, w, v ) } );
                }
            break;

        case DistanceProperty::IR:
        case DistanceProperty::LiberalIR:
            for ( std::size_t v = 0; v < n; ++v )
                for ( std::size_t w = 0; w < n; ++w )
                {
                    ++report.checked;
                    const bool is_zero = d( v, w ) == zero;
                    if ( is_zero != ( v == w ) )
                        report.record( { { u.label( v ), u.label( w ) }, cost_note( d, v, w ) } );
                }
            break;

        case DistanceProperty::Positive:
        case DistanceProperty::LiberalPositive:
            for ( std::size_t v = 0; v < n; ++v )
                for ( std::size_t w = 0; w < n; ++w )
                {
                    ++report.checked;
                    if ( d.less( d( v, w ), zero ) )
                        report.record( { { u.label( v ), u.label( w ) }, cost_note( d, v, w ) } );
                }
            break;

        case DistanceProperty::TIR:
        case DistanceProperty::LiberalTIR:
            for ( std::size_t v = 0; v < n; ++v )
                for ( std::size_t w = 0; w < n; ++w )
                    for ( std::size_t x = 0; x < n; ++x )
                    {
                        ++report.checked;
                        const auto& vx = d( v, x );
                        const auto& vw = d( v, w );
                        const auto& wx = d( w, x );
                        bool ok = true;
                        if ( vx.is_finite() && vw.is_finite() && wx.is_finite() )
                            ok = !d.less( vw + wx, vx );
                        else if ( vx.is_infinite() )
                            ok = vw.is_infinite() || wx.is_infinite();
                        if ( !ok )
                            report.record( { { u.label( v ), u.label( w ), u.label( x ) },
                                             cost_note( d, v, x ) + " > " + cost_note( d, v, w ) + " + " +
                                                     cost_note( d, w, x ) } );
                    }
            break;
    }
    return report;
}

PropertyReport check_hir( const PseudoDistance& d, std::span< const Valuation > valuations, std::size_t witness_cap )
{
    const std::size_t n = d.size();
    if ( valuations.size() != n )
        throw InputError( "HIR check: " + std::to_string( n ) + " points but " + std::to_string( valuations.size() ) +
                          " valuations" );
    for ( const auto& v : valuations )
        if ( v.values.size() != valuations[ 0 ].values.size() )
            throw InputError( "HIR check: valuations over different signatures" );

    PropertyReport report;
    report.property = "hir";
    report.witness_cap = witness_cap;
    const auto& u = d.universe();

    std::vector< std::size_t > h( n * n );
    for ( std::size_t v = 0; v < n; ++v )
        for ( std::size_t w = 0; w < n; ++w )
            h[ v * n + w ] = hamming_distance( valuations[ v ], valuations[ w ] );

    for ( std::size_t v = 0; v < n; ++v )
        for ( std::size_t w = 0; w < n; ++w )
            for ( std::size_t x = 0; x < n; ++x )
            {
                if ( h[ v * n + w ] >= h[ v * n + x ] )
                    continue;
                ++report.checked;
                if ( !d.less( d( v, w ), d( v, x ) ) )
                    report.record( { { u.label( v ), u.label( w ), u.label( x ) },
                                     "|h|=" + std::to_string( h[ v * n + w ] ) + "<" + std::to_string( h[ v * n + x ] ) +
                                             " but " + cost_note( d, v, w ) + " >= " + cost_note( d, v, x ) } );
            }
    return report;
}

PseudoDistance hamming_pseudo_distance( const ValuationSpace& space )
{
    return PseudoDistance{ space.universe(), OrderMode::Real, [ & ]( std::size_t v, std::size_t w ) {
                              return Cost{ static_cast< std::int64_t >(
                                      hamming_distance( space.valuation( v ), space.valuation( w ) ) ) };
                          } };
}

} // namespace distrev
