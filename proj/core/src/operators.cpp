#include "distrev/operators.hpp"

#include "distrev/error.hpp"

#include <algorithm>

namespace distrev
{

PointSet apply( const PseudoDistance& d, const PointSet& v, const PointSet& w )
{
    PointSet out( w.universe_size() );
    if ( v.empty() || w.empty() )
        return out;

    const auto vs = v.members();
    const auto ws = w.members();
    const Cost* best = nullptr;
    for ( auto a : vs )
        for ( auto b : ws )
        {
            const auto& c = d( a, b );
            if ( best == nullptr || d.less( c, *best ) )
                best = &c;
        }
    for ( auto b : ws )
        for ( auto a : vs )
            if ( d.compare( d( a, b ), *best ) == Ordering::Equal )
            {
                out.insert( b );
                break;
            }
    return out;
}

OperatorTable::OperatorTable( Universe universe )
        : _universe{ std::move( universe ) }
{
}

OperatorTable::OperatorTable( PseudoDistance backing )
        : _universe{ backing.universe() }, _backing{ std::move( backing ) }
{
}

void OperatorTable::check_universe( const PointSet& s ) const
{
    if ( s.universe_size() != _universe.size() )
        throw std::invalid_argument( "point set over a different universe" );
}

void OperatorTable::add( const PointSet& v, const PointSet& w, const PointSet& x )
{
    check_universe( v );
    check_universe( w );
    check_universe( x );
    if ( !_index.emplace( std::pair{ v, w }, _entries.size() ).second )
        throw InputError( "duplicate operator entry for " + _universe.format( v ) + " | " + _universe.format( w ) );
    _entries.push_back( { v, w, x } );
}

void OperatorTable::set( const PointSet& v, const PointSet& w, const PointSet& x )
{
    check_universe( v );
    check_universe( w );
    check_universe( x );
    const auto [ it, inserted ] = _index.emplace( std::pair{ v, w }, _entries.size() );
    if ( inserted )
        _entries.push_back( { v, w, x } );
    else
        _entries[ it->second ].x = x;
}

std::optional< PointSet > OperatorTable::find( const PointSet& v, const PointSet& w ) const
{
    if ( _index.empty() )
        return std::nullopt;
    const auto it = _index.find( std::pair{ v, w } );
    if ( it == _index.end() )
        return std::nullopt;
    return _entries[ it->second ].x;
}

PointSet OperatorTable::lookup( const PointSet& v, const PointSet& w ) const
{
    if ( auto x = find( v, w ) )
        return *x;
    if ( _backing )
        return apply( *_backing, v, w );
    throw UndefinedPair( "operator undefined on " + _universe.format( v ) + " | " + _universe.format( w ) );
}

SetFamily::SetFamily( std::size_t universe_size, std::vector< PointSet > sets )
        : _n{ universe_size }, _sets{ std::move( sets ) }
{
    for ( const auto& s : _sets )
        if ( s.universe_size() != _n )
            throw FamilyError( "family member over a different universe" );
    std::sort( _sets.begin(), _sets.end() );
    _sets.erase( std::unique( _sets.begin(), _sets.end() ), _sets.end() );
}

SetFamily SetFamily::all_nonempty( std::size_t universe_size )
{
    return SetFamily{ universe_size, all_nonempty_subsets( universe_size ) };
}

bool SetFamily::contains( const PointSet& s ) const
{
    return std::binary_search( _sets.begin(), _sets.end(), s );
}

void SetFamily::validate_loop_closure() const
{
    for ( const auto& s : _sets )
        if ( s.empty() )
            throw FamilyError( "family contains the empty set" );
    // every nonempty set present: closed, skip the quadratic pass
    if ( _n < 64 && _sets.size() == ( std::size_t{ 1 } << _n ) - 1 )
        return;
    for ( std::size_t i = 0; i < _sets.size(); ++i )
        for ( std::size_t j = i + 1; j < _sets.size(); ++j )
        {
            if ( !contains( _sets[ i ] | _sets[ j ] ) )
                throw FamilyError( "family not closed under union" );
            const auto meet = _sets[ i ] & _sets[ j ];
            if ( !meet.empty() && !contains( meet ) )
                throw FamilyError( "family not closed under non-disjoint intersection" );
        }
}

PropertyReport check_inclusion( const OperatorTable& op, const SetFamily* family, std::size_t witness_cap )
{
    PropertyReport report;
    report.property = "inclusion";
    report.witness_cap = witness_cap;
    const auto& u = op.universe();
    auto probe = [ & ]( const PointSet& v, const PointSet& w, const PointSet& x ) {
        ++report.checked;
        if ( !x.is_subset_of( w ) )
            report.record( { { u.format( v ), u.format( w ), u.format( x ) }, "V|W not contained in W" } );
    };
    if ( family )
    {
        for ( const auto& v : family->sets() )
            for ( const auto& w : family->sets() )
                probe( v, w, op.lookup( v, w ) );
    }
    else
    {
        for ( const auto& e : op.entries() )
            probe( e.v, e.w, e.x );
    }
    return report;
}

} // namespace distrev
