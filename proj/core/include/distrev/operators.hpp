#pragma once

#include "distrev/distance.hpp"
#include "distrev/point_set.hpp"
#include "distrev/report_types.hpp"

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace distrev
{

// V |_D W: members of W attaining the global minimum of d over V x W.
// Empty when V or W is empty.
PointSet apply( const PseudoDistance& d, const PointSet& v, const PointSet& w );

// Binary operator on subsets of a universe given by explicit (V, W) -> X
// entries, optionally falling back to |_D of a backing distance.
class OperatorTable
{
public:
    struct Entry
    {
        PointSet v;
        PointSet w;
        PointSet x;
    };

    explicit OperatorTable( Universe universe );
    explicit OperatorTable( PseudoDistance backing );

    [[nodiscard]] const Universe& universe() const { return _universe; }
    [[nodiscard]] const std::optional< PseudoDistance >& backing() const { return _backing; }
    [[nodiscard]] bool total() const { return _backing.has_value(); }
    [[nodiscard]] const std::vector< Entry >& entries() const { return _entries; }

    // Throws InputError if (V, W) already has an entry.
    void add( const PointSet& v, const PointSet& w, const PointSet& x );
    // Inserts or replaces.
    void set( const PointSet& v, const PointSet& w, const PointSet& x );

    [[nodiscard]] std::optional< PointSet > find( const PointSet& v, const PointSet& w ) const;
    // Explicit entry wins; otherwise the backing distance. Throws UndefinedPair
    // on a partial table.
    [[nodiscard]] PointSet lookup( const PointSet& v, const PointSet& w ) const;
    [[nodiscard]] PointSet operator()( const PointSet& v, const PointSet& w ) const { return lookup( v, w ); }

private:
    void check_universe( const PointSet& s ) const;

    Universe _universe;
    std::optional< PseudoDistance > _backing;
    std::vector< Entry > _entries;
    std::unordered_map< std::pair< PointSet, PointSet >, std::size_t, PointSetPairHash > _index;
};

using SetOperator = std::function< PointSet( const PointSet&, const PointSet& ) >;

// Sets over one universe, deduplicated, in PointSet order.
class SetFamily
{
public:
    SetFamily( std::size_t universe_size, std::vector< PointSet > sets );
    static SetFamily all_nonempty( std::size_t universe_size );

    [[nodiscard]] std::size_t universe_size() const { return _n; }
    [[nodiscard]] const std::vector< PointSet >& sets() const { return _sets; }
    [[nodiscard]] std::size_t size() const { return _sets.size(); }
    [[nodiscard]] bool contains( const PointSet& s ) const;

    // Throws FamilyError unless the empty set is absent, the family is closed
    // under union, and closed under non-disjoint intersection.
    void validate_loop_closure() const;

private:
    std::size_t _n;
    std::vector< PointSet > _sets;
};

// V|W subset of W, over all table entries, or over all family pairs when a
// family is given.
PropertyReport check_inclusion( const OperatorTable& op, const SetFamily* family = nullptr,
                                std::size_t witness_cap = default_witness_cap );

struct LoopOptions
{
    int k_max = 3;
    // Exhaustive search is abandoned for sampling once this many operator
    // evaluations have been spent.
    std::size_t budget = 1'000'000;
    std::size_t samples = 10'000;
    std::uint64_t seed = 0;
};

struct LoopVerdict
{
    bool pass = true;
    bool exhaustive = true;
    int k_reached = 0;           // largest k fully covered
    std::size_t evaluations = 0; // operator applications spent
    // On failure: V_0..V_k, and the offending conclusion set V_0 | (V_k u V_1).
    std::vector< PointSet > chain;
    PointSet conclusion;
};

// Searches chains V_0..V_k (1 <= k <= k_max) drawn from `pool` for a failure of
// the loop condition: premises (V_i | (V_{i-1} u V_{i+1 mod k+1})) n V_{i-1} != {}
// for i = 1..k, conclusion (V_0 | (V_k u V_1)) n V_1 != {}. The first
// counterexample in (k, V_0, V_1, V_k, V_2, ..., V_{k-1}) pool-index order is
// returned. The search is exact (it only skips chains that provably cannot be
// counterexamples) until the evaluation budget runs out, then falls back to
// uniform sampling with a fixed seed.
LoopVerdict search_loop( const SetOperator& op, std::span< const PointSet > pool, const LoopOptions& options );

// search_loop over the family's sets, after validating the family's closure.
// `chain_pool`, when given, restricts which sets may appear in chains (each
// must belong to the family).
LoopVerdict check_loop( const OperatorTable& op, const SetFamily& family, const LoopOptions& options,
                        const std::vector< PointSet >* chain_pool = nullptr );

// Re-evaluates a failure witness: true iff all premises hold and the
// conclusion fails.
bool is_loop_counterexample( const SetOperator& op, std::span< const PointSet > chain );

} // namespace distrev
