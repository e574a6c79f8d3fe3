#include "distrev/revision.hpp"

#include "distrev/error.hpp"

#include <random>
#include <utility>

namespace distrev
{

Theory::Theory( ModelSet models, std::vector< Formula > presentation )
        : _models{ std::move( models ) }, _presentation{ std::move( presentation ) }
{
}

Theory Theory::of( std::vector< Formula > formulas, const SpacePtr& space )
{
    auto m = distrev::models( formulas, space );
    return Theory( std::move( m ), std::move( formulas ) );
}

RevisionOperator RevisionOperator::from_distance( PseudoDistance d, SpacePtr space )
{
    if ( d.size() != space->size() )
        throw InputError( "distance over " + std::to_string( d.size() ) + " points, space has " +
                          std::to_string( space->size() ) + " valuations" );
    RevisionOperator op;
    op._space = std::move( space );
    op._distance = std::move( d );
    op._name = "distance";
    return op;
}

RevisionOperator RevisionOperator::from_function( SpacePtr space, Function f, std::string name )
{
    RevisionOperator op;
    op._space = std::move( space );
    op._fn = std::move( f );
    op._name = std::move( name );
    return op;
}

PointSet RevisionOperator::operator()( const PointSet& gamma, const PointSet& delta ) const
{
    if ( gamma.empty() || delta.empty() )
        throw InconsistentInput( "revision needs consistent theories on both sides" );
    return _distance ? apply( *_distance, gamma, delta ) : _fn( gamma, delta );
}

ModelSet RevisionOperator::revise( const ModelSet& gamma, const ModelSet& delta ) const
{
    return ModelSet{ _space, ( *this )( gamma.members(), delta.members() ) };
}

Theory revise( const RevisionOperator& op, const Theory& gamma, const Theory& delta )
{
    return Theory( op.revise( gamma.models(), delta.models() ) );
}

RevisionOperator from_operator_table( const OperatorTable& table, SpacePtr space )
{
    if ( table.universe().size() != space->size() )
        throw InputError( "operator universe and valuation space differ in size" );
    return RevisionOperator::from_function(
            std::move( space ), [ table ]( const PointSet& a, const PointSet& b ) { return table.lookup( a, b ); },
            "table" );
}

namespace
{

// Consistent theories of a space, as closed nonempty model sets.
class Domain
{
public:
    explicit Domain( const SpacePtr& space ) : _space{ space }, _closure{ space }
    {
        if ( space->size() > 16 )
            return;
        for ( std::uint64_t mask = 1; mask < ( std::uint64_t{ 1 } << space->size() ); ++mask )
        {
            const auto s = PointSet::from_mask( space->size(), mask );
            if ( _closure.definable( s ) )
                _sets.push_back( s );
        }
        _enumerable = true;
    }

    [[nodiscard]] const DefinableSets& closure() const { return _closure; }
    [[nodiscard]] const std::vector< PointSet >& sets() const { return _sets; }

    PointSet sample( std::mt19937_64& rng ) const
    {
        if ( _enumerable )
            return _sets[ std::uniform_int_distribution< std::size_t >( 0, _sets.size() - 1 )( rng ) ];
        std::bernoulli_distribution coin( 0.5 );
        while ( true )
        {
            PointSet s( _space->size() );
            for ( std::size_t i = 0; i < _space->size(); ++i )
                if ( coin( rng ) )
                    s.insert( i );
            if ( !s.empty() )
                return _closure.closure( s );
        }
    }

    // Calls f on every tuple of the given arity when there are few enough,
    // otherwise on scope.samples random tuples. Returns how many were visited.
    template < class F >
    std::size_t for_tuples( std::size_t arity, const RevisionScope& scope, F&& f ) const
    {
        std::vector< PointSet > tuple( arity );
        double total = 1;
        for ( std::size_t i = 0; i < arity; ++i )
            total *= static_cast< double >( _sets.size() );
        if ( _enumerable && total <= static_cast< double >( scope.exhaustive_limit ) )
        {
            std::vector< std::size_t > idx( arity, 0 );
            std::size_t count = 0;
            if ( _sets.empty() )
                return 0;
            while ( true )
            {
                for ( std::size_t i = 0; i < arity; ++i )
                    tuple[ i ] = _sets[ idx[ i ] ];
                f( std::as_const( tuple ) );
                ++count;
                std::size_t i = arity;
                while ( i > 0 && ++idx[ i - 1 ] == _sets.size() )
                    idx[ --i ] = 0;
                if ( i == 0 )
                    return count;
            }
        }
        std::mt19937_64 rng( scope.seed );
        for ( std::size_t s = 0; s < scope.samples; ++s )
        {
            for ( auto& t : tuple )
                t = sample( rng );
            f( std::as_const( tuple ) );
        }
        return scope.samples;
    }

private:
    SpacePtr _space;
    DefinableSets _closure;
    std::vector< PointSet > _sets;
    bool _enumerable = false;
};

std::string describe( const SpacePtr& space, const PointSet& s )
{
    const ModelSet m{ space, s };
    if ( space->matrix().is_classical() )
        return canonical_dnf( m ).to_string();
    return m.to_string();
}

} // namespace

std::vector< PropertyReport > check_agm( const RevisionOperator& op, const RevisionScope& scope )
{
    const auto& space = op.space();
    const Domain domain( space );
    std::vector< PropertyReport > out( 5 );
    for ( int i = 0; i < 5; ++i )
        out[ static_cast< std::size_t >( i ) ].property = "star" + std::to_string( i );
    auto& p0 = out[ 0 ];
    auto& p1 = out[ 1 ];
    auto& p2 = out[ 2 ];
    auto& p3 = out[ 3 ];
    auto& p4 = out[ 4 ];
    const auto show = [ & ]( const PointSet& s ) { return describe( space, s ); };
    const bool classical = space->matrix().is_classical();

    domain.for_tuples( 2, scope, [ & ]( const std::vector< PointSet >& t ) {
        const auto& g = t[ 0 ];
        const auto& d = t[ 1 ];
        const auto r = op( g, d );

        // (*0): the DNF and the clause presentations must give one answer
        if ( classical )
        {
            ++p0.checked;
            const auto dnf = [ & ]( const PointSet& s ) {
                return models( canonical_dnf( ModelSet{ space, s } ), space ).members();
            };
            const auto cnf = [ & ]( const PointSet& s ) {
                const auto clauses = canonical_cnf_clauses( ModelSet{ space, s } );
                return models( clauses, space ).members();
            };
            const auto a = op( dnf( g ), dnf( d ) );
            const auto b = op( cnf( g ), cnf( d ) );
            if ( a != b || a != r )
                p0.record( { { show( g ), show( d ), show( a ), show( b ) }, "presentations disagree" } );
        }

        ++p1.checked;
        if ( r.empty() )
            p1.record( { { show( g ), show( d ) }, "inconsistent result" } );

        ++p2.checked;
        if ( !r.is_subset_of( d ) )
            p2.record( { { show( g ), show( d ), show( r ) }, "result not within the new information" } );

        ++p3.checked;
        const auto both = g & d;
        if ( !both.empty() && r != both )
            p3.record( { { show( g ), show( d ), show( r ), show( both ) }, "overlap but result is not the intersection" } );
    } );

    domain.for_tuples( 3, scope, [ & ]( const std::vector< PointSet >& t ) {
        const auto& g = t[ 0 ];
        const auto& d = t[ 1 ];
        const auto& e = t[ 2 ];
        ++p4.checked;
        const auto r = op( g, d );
        const auto hit = r & e;
        if ( hit.empty() )
            return;
        const auto de = domain.closure().closure( d & e );
        if ( ( d & e ).empty() )
        {
            p4.record( { { show( g ), show( d ), show( e ), show( r ) }, "result meets D' outside D" } );
            return;
        }
        const auto lhs = op( g, de );
        if ( lhs != hit )
            p4.record( { { show( g ), show( d ), show( e ), show( lhs ), show( hit ) },
                         "revising by the conjunction differs from the restricted result" } );
    } );
    return out;
}

LoopVerdict check_star_loop( const RevisionOperator& op, int k_max, const LoopOptions& options,
                             const std::vector< PointSet >* pool )
{
    const Domain domain( op.space() );
    if ( domain.sets().empty() )
        throw BoundExceeded( "valuation space too large for chain enumeration" );
    if ( pool )
        for ( const auto& s : *pool )
            if ( s.empty() || !domain.closure().definable( s ) )
                throw InputError( "chain pool member is not a consistent theory" );
    auto lo = options;
    lo.k_max = k_max;
    const SetOperator fn = [ & ]( const PointSet& a, const PointSet& b ) {
        return op( a, domain.closure().closure( b ) );
    };
    return search_loop( fn, pool ? std::span< const PointSet >( *pool ) : domain.sets(), lo );
}

std::vector< PropertyReport > check_disjunction_iteration( const RevisionOperator& op, const RevisionScope& scope )
{
    const auto& space = op.space();
    const Domain domain( space );
    std::vector< PropertyReport > out( 2 );
    out[ 0 ].property = "disjunction-1";
    out[ 1 ].property = "disjunction-2";
    const auto& cl = domain.closure();
    const auto show = [ & ]( const PointSet& s ) { return describe( space, s ); };

    domain.for_tuples( 4, scope, [ & ]( const std::vector< PointSet >& t ) {
        const auto& g = t[ 0 ];
        const auto& a = t[ 1 ];
        const auto& b = t[ 2 ];
        const auto& d = t[ 3 ];
        const auto then = [ & ]( const PointSet& first ) { return op( cl.closure( op( g, first ) ), d ); };
        const auto ra = then( a );
        const auto rb = then( b );
        const auto rab = then( cl.closure( a | b ) );
        ++out[ 0 ].checked;
        ++out[ 1 ].checked;
        if ( !rab.is_subset_of( cl.closure( ra | rb ) ) )
            out[ 0 ].record( { { show( g ), show( a ), show( b ), show( d ), show( ra ), show( rb ), show( rab ) },
                               "common consequence lost after the disjunction" } );
        const auto cab = cl.closure( rab );
        if ( !ra.is_subset_of( cab ) && !rb.is_subset_of( cab ) )
            out[ 1 ].record( { { show( g ), show( a ), show( b ), show( d ), show( ra ), show( rb ), show( rab ) },
                               "consequence after the disjunction holds on neither branch" } );
    } );
    return out;
}

std::vector< PropertyReport > check_dp_cp( const RevisionOperator& op, const RevisionScope& scope )
{
    const auto& space = op.space();
    const Domain domain( space );
    std::vector< PropertyReport > out( 2 );
    out[ 0 ].property = "dp";
    out[ 1 ].property = "cp";
    const auto show = [ & ]( const PointSet& s ) { return ModelSet{ space, s }.to_string(); };
    domain.for_tuples( 2, scope, [ & ]( const std::vector< PointSet >& t ) {
        const auto r = op( t[ 0 ], t[ 1 ] );
        ++out[ 0 ].checked;
        ++out[ 1 ].checked;
        const auto c = domain.closure().closure( r );
        if ( c != r )
            out[ 0 ].record( { { show( t[ 0 ] ), show( t[ 1 ] ), show( r ), show( c ) }, "result is not definable" } );
        if ( r.empty() )
            out[ 1 ].record( { { show( t[ 0 ] ), show( t[ 1 ] ) }, "consistent arguments, inconsistent result" } );
    } );
    return out;
}

} // namespace distrev
