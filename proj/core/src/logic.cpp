#include "distrev/logic.hpp"

#include "distrev/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace distrev
{

std::vector< Valuation > enumerate_valuations( const Signature& signature, const Matrix& matrix, std::size_t bound )
{
    const std::size_t base = matrix.size();
    std::size_t count = 1;
    for ( std::size_t i = 0; i < signature.size(); ++i )
    {
        if ( count > bound / base )
            throw BoundExceeded( "enumerating " + std::to_string( base ) + "^" + std::to_string( signature.size() ) +
                                 " valuations exceeds the bound of " + std::to_string( bound ) );
        count *= base;
    }
    if ( count > bound )
        throw BoundExceeded( "valuation count exceeds the bound of " + std::to_string( bound ) );

    std::vector< Valuation > out;
    out.reserve( count );
    Valuation current{ std::vector< TruthValue >( signature.size(), 0 ) };
    for ( std::size_t k = 0; k < count; ++k )
    {
        out.push_back( current );
        // Increment as a base-|T| number, last atom least significant.
        for ( std::size_t pos = signature.size(); pos-- > 0; )
        {
            if ( ++current.values[ pos ] < base )
                break;
            current.values[ pos ] = 0;
        }
    }
    return out;
}

TruthValue eval_formula( const Valuation& v, const Formula& f, const Matrix& m )
{
    using K = Formula::Kind;
    switch ( f.kind() )
    {
        case K::Atom:
            if ( f.atom_index() >= v.values.size() )
                throw std::out_of_range( "atom '" + f.atom_name() + "' outside the valuation's signature" );
            return v.values[ f.atom_index() ];
        case K::True: return m.apply( Connective::True );
        case K::False: return m.apply( Connective::False );
        case K::Not: return m.apply( Connective::Not, eval_formula( v, f.operand(), m ) );
        case K::And: return m.apply( Connective::And, eval_formula( v, f.lhs(), m ), eval_formula( v, f.rhs(), m ) );
        case K::Or: return m.apply( Connective::Or, eval_formula( v, f.lhs(), m ), eval_formula( v, f.rhs(), m ) );
        case K::Implies:
            return m.apply( Connective::Implies, eval_formula( v, f.lhs(), m ), eval_formula( v, f.rhs(), m ) );
        case K::Iff: return m.apply( Connective::Iff, eval_formula( v, f.lhs(), m ), eval_formula( v, f.rhs(), m ) );
    }
    throw std::logic_error( "unreachable formula kind" );
}

bool satisfies( const Valuation& v, const Formula& f, const Matrix& m )
{
    return m.is_designated( eval_formula( v, f, m ) );
}

std::vector< std::size_t > hamming_diff( const Valuation& v, const Valuation& w )
{
    if ( v.values.size() != w.values.size() )
        throw std::invalid_argument( "hamming_diff over different signatures" );
    std::vector< std::size_t > out;
    for ( std::size_t i = 0; i < v.values.size(); ++i )
        if ( v.values[ i ] != w.values[ i ] )
            out.push_back( i );
    return out;
}

std::size_t hamming_distance( const Valuation& v, const Valuation& w )
{
    if ( v.values.size() != w.values.size() )
        throw std::invalid_argument( "hamming_distance over different signatures" );
    std::size_t n = 0;
    for ( std::size_t i = 0; i < v.values.size(); ++i )
        n += v.values[ i ] != w.values[ i ];
    return n;
}

std::string valuation_label( const Valuation& v, const Matrix& m )
{
    const bool compact = std::all_of( m.labels().begin(), m.labels().end(),
                                      []( const std::string& l ) { return l.size() == 1; } );
    std::string out;
    for ( std::size_t i = 0; i < v.values.size(); ++i )
    {
        if ( !compact && i > 0 )
            out += ',';
        out += m.label( v.values[ i ] );
    }
    return out.empty() ? std::string( "()" ) : out;
}

namespace
{

Universe labels_for( const std::vector< Valuation >& vals, const Matrix& m )
{
    std::vector< std::string > labels;
    labels.reserve( vals.size() );
    for ( const auto& v : vals )
        labels.push_back( valuation_label( v, m ) );
    return Universe{ std::move( labels ) };
}

} // namespace

ValuationSpace::ValuationSpace( Signature signature, Matrix matrix )
        : _signature{ std::move( signature ) }, _matrix{ std::move( matrix ) },
          _valuations{ enumerate_valuations( _signature, _matrix, PointSet::max_universe ) },
          _universe{ labels_for( _valuations, _matrix ) }
{
}

SpacePtr ValuationSpace::classical( Signature signature )
{
    return std::make_shared< const ValuationSpace >( std::move( signature ), Matrix::classical() );
}

std::size_t ValuationSpace::index_of( const Valuation& v ) const
{
    if ( v.values.size() != _signature.size() )
        throw std::invalid_argument( "valuation over a different signature" );
    std::size_t idx = 0;
    for ( auto t : v.values )
    {
        if ( t >= _matrix.size() )
            throw std::invalid_argument( "truth value out of range" );
        idx = idx * _matrix.size() + t;
    }
    return idx;
}

ModelSet::ModelSet( SpacePtr space, PointSet members )
        : _space{ std::move( space ) }, _members{ members }
{
    if ( !_space )
        throw std::invalid_argument( "model set without a valuation space" );
    if ( _members.universe_size() != _space->size() )
        throw std::invalid_argument( "model set universe does not match its space" );
}

ModelSet ModelSet::none( SpacePtr space )
{
    const auto n = space->size();
    return ModelSet{ std::move( space ), PointSet( n ) };
}

ModelSet ModelSet::all( SpacePtr space )
{
    const auto n = space->size();
    return ModelSet{ std::move( space ), PointSet::full( n ) };
}

ModelSet ModelSet::unite( const ModelSet& other ) const
{
    return ModelSet{ _space, _members | other._members };
}

ModelSet ModelSet::intersect( const ModelSet& other ) const
{
    return ModelSet{ _space, _members & other._members };
}

bool ModelSet::is_subset_of( const ModelSet& other ) const
{
    return _members.is_subset_of( other._members );
}

std::string ModelSet::to_string() const
{
    return _space->universe().format( _members );
}

bool operator==( const ModelSet& a, const ModelSet& b )
{
    const bool same_space = a._space == b._space ||
                            ( a._space->signature() == b._space->signature() && a._space->matrix() == b._space->matrix() );
    return same_space && a._members == b._members;
}

ModelSet models( std::span< const Formula > gamma, const SpacePtr& space )
{
    PointSet out( space->size() );
    for ( std::size_t i = 0; i < space->size(); ++i )
    {
        const auto& v = space->valuation( i );
        const bool ok = std::all_of( gamma.begin(), gamma.end(),
                                     [ & ]( const Formula& f ) { return satisfies( v, f, space->matrix() ); } );
        if ( ok )
            out.insert( i );
    }
    return ModelSet{ space, out };
}

ModelSet models( const Formula& f, const SpacePtr& space )
{
    return models( std::span< const Formula >( &f, 1 ), space );
}

bool theory_entails( const ModelSet& v, const Formula& f )
{
    bool ok = true;
    v.members().for_each( [ & ]( std::size_t i ) {
        if ( ok && !satisfies( v.space()->valuation( i ), f, v.space()->matrix() ) )
            ok = false;
    } );
    return ok;
}

bool is_consistent( std::span< const Formula > gamma, const SpacePtr& space )
{
    return !models( gamma, space ).empty();
}

std::vector< Formula > disj_product( std::span< const Formula > gamma, std::span< const Formula > delta )
{
    std::vector< Formula > out;
    out.reserve( gamma.size() * delta.size() );
    for ( const auto& a : gamma )
        for ( const auto& b : delta )
            out.push_back( Formula::disjunction( a, b ) );
    return out;
}

namespace
{

void require_classical( const ValuationSpace& space, const char* what )
{
    if ( !space.matrix().is_classical() )
        throw std::invalid_argument( std::string( what ) + " needs the classical matrix" );
}

Formula minterm( const ValuationSpace& space, std::size_t idx )
{
    const auto& sig = space.signature();
    const auto& v = space.valuation( idx );
    std::vector< Formula > lits;
    lits.reserve( sig.size() );
    for ( std::size_t a = 0; a < sig.size(); ++a )
    {
        auto lit = Formula::atom( a, sig.atom( a ) );
        lits.push_back( v.values[ a ] == 1 ? lit : Formula::negation( lit ) );
    }
    return Formula::conjunction_of( lits );
}

} // namespace

Formula canonical_dnf( const ModelSet& v )
{
    require_classical( *v.space(), "canonical_dnf" );
    std::vector< Formula > terms;
    v.members().for_each( [ & ]( std::size_t i ) { terms.push_back( minterm( *v.space(), i ) ); } );
    return Formula::disjunction_of( terms );
}

std::vector< Formula > canonical_cnf_clauses( const ModelSet& v )
{
    require_classical( *v.space(), "canonical_cnf_clauses" );
    std::vector< Formula > clauses;
    for ( std::size_t i = 0; i < v.space()->size(); ++i )
        if ( !v.contains( i ) )
            clauses.push_back( Formula::negation( minterm( *v.space(), i ) ) );
    return clauses;
}

namespace
{

using TermFunction = std::vector< TruthValue >;

struct TermFunctionHash
{
    std::size_t operator()( const TermFunction& f ) const
    {
        std::size_t h = 1469598103934665603ULL;
        for ( auto t : f )
            h = ( h ^ t ) * 1099511628211ULL;
        return h;
    }
};

// All functions (space point -> truth value) expressible by some formula.
std::vector< TermFunction > term_functions( const ValuationSpace& space, std::size_t bound )
{
    const auto& m = space.matrix();
    const std::size_t n = space.size();
    std::unordered_set< TermFunction, TermFunctionHash > seen;
    std::vector< TermFunction > all;

    auto add = [ & ]( TermFunction f ) {
        if ( seen.insert( f ).second )
        {
            if ( all.size() >= bound )
                throw BoundExceeded( "term-function closure exceeds " + std::to_string( bound ) + " functions" );
            all.push_back( std::move( f ) );
        }
    };

    for ( std::size_t a = 0; a < space.signature().size(); ++a )
    {
        TermFunction f( n );
        for ( std::size_t i = 0; i < n; ++i )
            f[ i ] = space.valuation( i ).values[ a ];
        add( std::move( f ) );
    }
    for ( auto c : { Connective::True, Connective::False } )
        if ( m.has( c ) )
            add( TermFunction( n, m.apply( c ) ) );

    // Semi-naive closure: combine each new function with everything so far.
    std::size_t done = 0;
    while ( done < all.size() )
    {
        const std::size_t frontier_end = all.size();
        for ( std::size_t k = done; k < frontier_end; ++k )
        {
            if ( m.has( Connective::Not ) )
            {
                TermFunction g( n );
                for ( std::size_t i = 0; i < n; ++i )
                    g[ i ] = m.apply( Connective::Not, all[ k ][ i ] );
                add( std::move( g ) );
            }
            for ( auto c : { Connective::And, Connective::Or, Connective::Implies, Connective::Iff } )
            {
                if ( !m.has( c ) )
                    continue;
                for ( std::size_t j = 0; j <= k; ++j )
                {
                    TermFunction g( n );
                    TermFunction h( n );
                    for ( std::size_t i = 0; i < n; ++i )
                    {
                        g[ i ] = m.apply( c, all[ k ][ i ], all[ j ][ i ] );
                        h[ i ] = m.apply( c, all[ j ][ i ], all[ k ][ i ] );
                    }
                    add( std::move( g ) );
                    add( std::move( h ) );
                }
            }
        }
        done = frontier_end;
    }
    return all;
}

} // namespace

ModelSet mod_th_closure( const ModelSet& v, std::size_t function_bound )
{
    if ( v.space()->matrix().is_classical() )
        return v;
    return ModelSet{ v.space(), DefinableSets( v.space(), function_bound ).closure( v.members() ) };
}

bool is_definable( const ModelSet& v )
{
    return mod_th_closure( v ) == v;
}

DefinableSets::DefinableSets( SpacePtr space, std::size_t function_bound )
        : _space{ std::move( space ) }, _classical{ _space->matrix().is_classical() }
{
    if ( _classical )
        return;
    std::unordered_set< PointSet, PointSetHash > seen;
    for ( const auto& f : term_functions( *_space, function_bound ) )
    {
        PointSet mod( _space->size() );
        for ( std::size_t i = 0; i < _space->size(); ++i )
            if ( _space->matrix().is_designated( f[ i ] ) )
                mod.insert( i );
        if ( seen.insert( mod ).second )
            _sets.push_back( mod );
    }
}

PointSet DefinableSets::closure( const PointSet& v ) const
{
    if ( _classical )
        return v;
    // Th of the empty formula set is valid everywhere, so start from all.
    PointSet out = PointSet::full( _space->size() );
    for ( const auto& mod : _sets )
        if ( v.is_subset_of( mod ) )
            out &= mod;
    return out;
}

} // namespace distrev
