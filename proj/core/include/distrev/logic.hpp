#pragma once

#include "distrev/formula.hpp"
#include "distrev/matrix.hpp"
#include "distrev/point_set.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace distrev
{

// Total assignment of truth values to the atoms of a signature, by atom index.
struct Valuation
{
    std::vector< TruthValue > values;

    friend bool operator==( const Valuation&, const Valuation& ) = default;
    friend auto operator<=>( const Valuation&, const Valuation& ) = default;
};

inline constexpr std::size_t default_valuation_bound = std::size_t{ 1 } << 16;

// All valuations in lexicographic order: the first atom is the most
// significant position, truth values ordered as in the matrix.
// Throws BoundExceeded when |T|^|signature| > bound.
std::vector< Valuation > enumerate_valuations( const Signature& signature, const Matrix& matrix,
                                               std::size_t bound = default_valuation_bound );

TruthValue eval_formula( const Valuation& v, const Formula& f, const Matrix& m );
bool satisfies( const Valuation& v, const Formula& f, const Matrix& m );

// Atom indices where the two valuations differ.
std::vector< std::size_t > hamming_diff( const Valuation& v, const Valuation& w );
std::size_t hamming_distance( const Valuation& v, const Valuation& w );

// "01" style label when every truth-value label is one character, otherwise
// comma-separated labels.
std::string valuation_label( const Valuation& v, const Matrix& m );

// Enumerated valuation universe of a signature under a matrix. Indices into
// this space are the points ModelSets and revision distances refer to.
class ValuationSpace
{
public:
    ValuationSpace( Signature signature, Matrix matrix );

    static std::shared_ptr< const ValuationSpace > classical( Signature signature );

    [[nodiscard]] const Signature& signature() const { return _signature; }
    [[nodiscard]] const Matrix& matrix() const { return _matrix; }
    [[nodiscard]] std::size_t size() const { return _valuations.size(); }
    [[nodiscard]] const Valuation& valuation( std::size_t i ) const { return _valuations.at( i ); }
    [[nodiscard]] const std::vector< Valuation >& valuations() const { return _valuations; }
    [[nodiscard]] std::size_t index_of( const Valuation& v ) const;
    [[nodiscard]] const Universe& universe() const { return _universe; }

private:
    Signature _signature;
    Matrix _matrix;
    std::vector< Valuation > _valuations;
    Universe _universe;
};

using SpacePtr = std::shared_ptr< const ValuationSpace >;

// Set of valuations of one space.
class ModelSet
{
public:
    ModelSet( SpacePtr space, PointSet members );
    static ModelSet none( SpacePtr space );
    static ModelSet all( SpacePtr space );

    [[nodiscard]] const SpacePtr& space() const { return _space; }
    [[nodiscard]] const PointSet& members() const { return _members; }
    [[nodiscard]] bool empty() const { return _members.empty(); }
    [[nodiscard]] std::size_t size() const { return _members.size(); }
    [[nodiscard]] bool contains( std::size_t i ) const { return _members.contains( i ); }

    [[nodiscard]] ModelSet unite( const ModelSet& other ) const;
    [[nodiscard]] ModelSet intersect( const ModelSet& other ) const;
    [[nodiscard]] bool is_subset_of( const ModelSet& other ) const;

    // "{00 01}" using valuation labels.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==( const ModelSet& a, const ModelSet& b );

private:
    SpacePtr _space;
    PointSet _members;
};

ModelSet models( std::span< const Formula > gamma, const SpacePtr& space );
ModelSet models( const Formula& f, const SpacePtr& space );

// True iff every member of V satisfies f.
bool theory_entails( const ModelSet& v, const Formula& f );
bool is_consistent( std::span< const Formula > gamma, const SpacePtr& space );

// { a | b : a in gamma, b in delta }
std::vector< Formula > disj_product( std::span< const Formula > gamma, std::span< const Formula > delta );

// Disjunction of full minterms, in valuation order; `false` for the empty set.
// Classical spaces only.
Formula canonical_dnf( const ModelSet& v );
// Conjunction-free presentation: one clause (negated minterm) per non-member.
std::vector< Formula > canonical_cnf_clauses( const ModelSet& v );

// Mod(Th(V)): intersection of all formula-definable sets containing V. For the
// classical matrix this is V itself; otherwise it is computed from the term
// functions the matrix connectives generate (small spaces only, BoundExceeded
// beyond `function_bound` distinct term functions).
ModelSet mod_th_closure( const ModelSet& v, std::size_t function_bound = 1U << 20 );
bool is_definable( const ModelSet& v );

// The distinct sets Mod(f) over all formulas f, computed once, for repeated
// closure queries on one space.
class DefinableSets
{
public:
    explicit DefinableSets( SpacePtr space, std::size_t function_bound = 1U << 20 );

    [[nodiscard]] const std::vector< PointSet >& formula_sets() const { return _sets; }
    [[nodiscard]] PointSet closure( const PointSet& v ) const;
    [[nodiscard]] bool definable( const PointSet& v ) const { return closure( v ) == v; }

private:
    SpacePtr _space;
    bool _classical;
    std::vector< PointSet > _sets;
};

} // namespace distrev
