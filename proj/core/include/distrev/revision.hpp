#pragma once

#include "distrev/distance.hpp"
#include "distrev/logic.hpp"
#include "distrev/operators.hpp"
#include "distrev/report_types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace distrev
{

// A theory is its model set; the formulas it was read from are kept only for
// reporting. Two theories are equal when their model sets are.
class Theory
{
public:
    explicit Theory( ModelSet models, std::vector< Formula > presentation = {} );
    static Theory of( std::vector< Formula > formulas, const SpacePtr& space );

    [[nodiscard]] const ModelSet& models() const { return _models; }
    [[nodiscard]] const std::vector< Formula >& presentation() const { return _presentation; }
    [[nodiscard]] bool consistent() const { return !_models.empty(); }

    friend bool operator==( const Theory& a, const Theory& b ) { return a._models == b._models; }

private:
    ModelSet _models;
    std::vector< Formula > _presentation;
};

// Revision on model sets of one valuation space: Mod(G) |_D Mod(D) for a
// distance, or any function for auditing the postulates.
class RevisionOperator
{
public:
    using Function = std::function< PointSet( const PointSet&, const PointSet& ) >;

    static RevisionOperator from_distance( PseudoDistance d, SpacePtr space );
    static RevisionOperator from_function( SpacePtr space, Function f, std::string name = "function" );

    [[nodiscard]] const SpacePtr& space() const { return _space; }
    [[nodiscard]] const std::optional< PseudoDistance >& distance() const { return _distance; }
    [[nodiscard]] const std::string& name() const { return _name; }

    // Throws InconsistentInput when either side is empty.
    [[nodiscard]] ModelSet revise( const ModelSet& gamma, const ModelSet& delta ) const;
    [[nodiscard]] PointSet operator()( const PointSet& gamma, const PointSet& delta ) const;

private:
    RevisionOperator() = default;

    SpacePtr _space;
    std::optional< PseudoDistance > _distance;
    Function _fn;
    std::string _name;
};

Theory revise( const RevisionOperator& op, const Theory& gamma, const Theory& delta );

// Pairs, triples, tuples of consistent model sets: all of them when there
// are at most `exhaustive_limit`, otherwise `samples` drawn with `seed`.
struct RevisionScope
{
    std::size_t exhaustive_limit = 100'000;
    std::size_t samples = 10'000;
    std::uint64_t seed = 0;
};

// (*0) to (*4), one report each, in that order.
std::vector< PropertyReport > check_agm( const RevisionOperator& op, const RevisionScope& scope = {} );

// (*loop) over chains of consistent theories; premises and conclusion are
// consistency of unions, i.e. nonempty intersections of model sets, and a
// disjunction of theories has the union of their model sets. `pool`, when
// given, restricts the chain members; each must be a consistent theory.
LoopVerdict check_star_loop( const RevisionOperator& op, int k_max, const LoopOptions& options = {},
                             const std::vector< PointSet >* pool = nullptr );

// Iterated revision by a disjunction, two reports:
//   1. entailed after (G * a) * D and after (G * b) * D => entailed after
//      (G * (a | b)) * D
//   2. entailed after (G * (a | b)) * D => entailed after one of the two
// With R_a, R_b, R_ab the closed result sets these become R_ab within the
// closure of R_a u R_b, and R_a or R_b within the closure of R_ab.
std::vector< PropertyReport > check_disjunction_iteration( const RevisionOperator& op,
                                                           const RevisionScope& scope = {} );

// DP: every result on definable arguments is definable. CP: results on
// consistent arguments are consistent. Two reports.
std::vector< PropertyReport > check_dp_cp( const RevisionOperator& op, const RevisionScope& scope = {} );

// An operator table over a universe the size of the space, read as a
// revision operator on model sets.
RevisionOperator from_operator_table( const OperatorTable& table, SpacePtr space );

} // namespace distrev
