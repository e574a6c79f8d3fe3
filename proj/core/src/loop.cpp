#include "distrev/error.hpp"
#include "distrev/operators.hpp"

#include <random>

namespace distrev
{

namespace
{

struct BudgetExhausted
{
};

class LoopSearch
{
public:
    LoopSearch( const SetOperator& op, std::span< const PointSet > pool, const LoopOptions& options )
            : _op{ op }, _pool{ pool }, _options{ options }
    {
    }

    LoopVerdict run()
    {
        LoopVerdict verdict;
        try
        {
            for ( int k = 1; k <= _options.k_max; ++k )
            {
                if ( search_k( k ) )
                    return finish( verdict, k );
                verdict.k_reached = k;
            }
            verdict.evaluations = _evaluations;
            return verdict;
        }
        catch ( const BudgetExhausted& )
        {
        }

        verdict.exhaustive = false;
        std::mt19937_64 rng( _options.seed );
        std::uniform_int_distribution< int > pick_k( 1, _options.k_max );
        std::uniform_int_distribution< std::size_t > pick_set( 0, _pool.size() - 1 );
        for ( std::size_t s = 0; s < _options.samples; ++s )
        {
            const int k = pick_k( rng );
            std::vector< PointSet > chain;
            chain.reserve( static_cast< std::size_t >( k ) + 1 );
            for ( int i = 0; i <= k; ++i )
                chain.push_back( _pool[ pick_set( rng ) ] );
            _evaluations += static_cast< std::size_t >( k ) + 1;
            if ( is_loop_counterexample( _op, chain ) )
            {
                _chain = std::move( chain );
                return finish( verdict, k );
            }
        }
        verdict.evaluations = _evaluations;
        return verdict;
    }

private:
    LoopVerdict& finish( LoopVerdict& verdict, int k )
    {
        verdict.pass = false;
        verdict.chain = _chain;
        const auto& c = verdict.chain;
        verdict.conclusion = _op( c[ 0 ], c[ static_cast< std::size_t >( k ) ] | c[ 1 ] );
        verdict.evaluations = _evaluations;
        return verdict;
    }

    PointSet eval( const PointSet& a, const PointSet& b )
    {
        if ( ++_evaluations > _options.budget )
            throw BudgetExhausted{};
        return _op( a, b );
    }

    // (mid | (prev u next)) n prev != {}
    bool premise( const PointSet& prev, const PointSet& mid, const PointSet& next )
    {
        return eval( mid, prev | next ).intersects( prev );
    }

    bool search_k( int k )
    {
        const auto last = static_cast< std::size_t >( k );
        _chain.assign( last + 1, PointSet{} );
        for ( const auto& a0 : _pool )
            for ( const auto& a1 : _pool )
            {
                _chain[ 0 ] = a0;
                _chain[ 1 ] = a1;
                if ( k == 1 )
                {
                    if ( !eval( a0, a1 ).intersects( a1 ) && premise( a0, a1, a0 ) )
                        return true;
                    continue;
                }
                for ( const auto& ak : _pool )
                {
                    if ( eval( a0, ak | a1 ).intersects( a1 ) )
                        continue;
                    _chain[ last ] = ak;
                    if ( fill( 2, last ) )
                        return true;
                }
            }
        return false;
    }

    // Chooses _chain[j] for j in [2, last) so that premise j-1 holds, then
    // checks the two premises that touch _chain[last].
    bool fill( std::size_t j, std::size_t last )
    {
        if ( j == last )
            return premise( _chain[ last - 2 ], _chain[ last - 1 ], _chain[ last ] ) &&
                   premise( _chain[ last - 1 ], _chain[ last ], _chain[ 0 ] );
        for ( const auto& next : _pool )
        {
            _chain[ j ] = next;
            if ( premise( _chain[ j - 2 ], _chain[ j - 1 ], next ) && fill( j + 1, last ) )
                return true;
        }
        return false;
    }

    const SetOperator& _op;
    std::span< const PointSet > _pool;
    LoopOptions _options;
    std::size_t _evaluations = 0;
    std::vector< PointSet > _chain;
};

} // namespace

LoopVerdict search_loop( const SetOperator& op, std::span< const PointSet > pool, const LoopOptions& options )
{
    if ( options.k_max < 1 )
        throw std::invalid_argument( "loop search needs k_max >= 1" );
    if ( pool.empty() )
        return LoopVerdict{};
    return LoopSearch{ op, pool, options }.run();
}

LoopVerdict check_loop( const OperatorTable& op, const SetFamily& family, const LoopOptions& options,
                        const std::vector< PointSet >* chain_pool )
{
    if ( family.universe_size() != op.universe().size() )
        throw FamilyError( "family and operator over different universes" );
    family.validate_loop_closure();
    if ( chain_pool )
        for ( const auto& s : *chain_pool )
            if ( !family.contains( s ) )
                throw FamilyError( "chain set " + op.universe().format( s ) + " is not in the family" );
    const SetOperator fn = [ &op ]( const PointSet& a, const PointSet& b ) { return op.lookup( a, b ); };
    return search_loop( fn, chain_pool ? std::span< const PointSet >( *chain_pool ) : family.sets(), options );
}

bool is_loop_counterexample( const SetOperator& op, std::span< const PointSet > chain )
{
    if ( chain.size() < 2 )
        return false;
    const std::size_t k = chain.size() - 1;
    for ( std::size_t i = 1; i <= k; ++i )
    {
        const auto& prev = chain[ i - 1 ];
        const auto& next = chain[ ( i + 1 ) % ( k + 1 ) ];
        if ( !op( chain[ i ], prev | next ).intersects( prev ) )
            return false;
    }
    return !op( chain[ 0 ], chain[ k ] | chain[ 1 ] ).intersects( chain[ 1 ] );
}

} // namespace distrev
