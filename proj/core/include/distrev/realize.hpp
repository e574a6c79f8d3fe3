#pragma once

#include "distrev/error.hpp"
#include "distrev/operators.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace distrev
{

// One unknown cost per ordered point pair, or per unordered pair in symmetric
// mode. Diagonal pairs are variables too.
class PairIndex
{
public:
    PairIndex() = default;
    PairIndex( std::size_t universe_size, bool symmetric );

    [[nodiscard]] std::size_t universe_size() const { return _n; }
    [[nodiscard]] bool symmetric() const { return _symmetric; }
    [[nodiscard]] std::size_t size() const { return _symmetric ? _n * ( _n + 1 ) / 2 : _n * _n; }
    [[nodiscard]] std::size_t var( std::size_t v, std::size_t w ) const;
    // Smallest (v, w) mapped to the variable.
    [[nodiscard]] std::pair< std::size_t, std::size_t > pair( std::size_t var ) const;
    [[nodiscard]] std::string label( std::size_t var, const Universe& u ) const;

private:
    std::size_t _n = 0;
    bool _symmetric = false;
};

// d(left) <= d(right), or d(left) < d(right) when strict.
struct OrderAtom
{
    std::size_t left;
    std::size_t right;
    bool strict;

    friend bool operator==( const OrderAtom&, const OrderAtom& ) = default;
};

using Conjunction = std::vector< OrderAtom >;

// Disjunction of conjunctions; `provenance` is the index of the table entry
// that produced it.
struct Clause
{
    std::vector< Conjunction > disjuncts;
    std::size_t provenance;
};

struct ConstraintSystem
{
    Universe universe;
    PairIndex vars;
    std::vector< OperatorTable::Entry > entries;
    std::vector< Clause > clauses;
};

// The table cannot be a distance operator for a reason visible in one entry.
class Unrealizable : public std::runtime_error
{
public:
    Unrealizable( const std::string& message, std::size_t entry )
            : std::runtime_error( message ), _entry{ entry }
    {
    }

    [[nodiscard]] std::size_t entry() const { return _entry; }

private:
    std::size_t _entry;
};

// Tables backed by a distance are materialized over every pair of nonempty
// subsets (explicit entries first), which needs |U| <= 6.
inline constexpr std::size_t max_materialized_universe = 6;
std::vector< OperatorTable::Entry > table_entries( const OperatorTable& table );

// For w in X: OR_{v in V} AND_{(v',w') in V x W} d(v,w) <= d(v',w').
// For w in W \ X and each v in V: OR_{(v',w')} d(v',w') < d(v,w).
// Throws Unrealizable for X not within W, or X empty with V, W nonempty.
ConstraintSystem compile_constraints( const OperatorTable& table, bool symmetric );

enum class RealizeStatus
{
    Sat,
    Unsat,
    Unknown,
};

const char* to_string( RealizeStatus s );

struct RealizabilityVerdict
{
    RealizeStatus status = RealizeStatus::Unknown;
    // Sat: rank per variable; consecutive integers from 0.
    std::vector< std::size_t > ranks;
    // Unsat: entry indices whose clauses are jointly unsatisfiable (minimal
    // under deletion when the system is small enough).
    std::vector< std::size_t > conflict;
    std::size_t branches = 0;
};

struct SolveOptions
{
    std::size_t budget = 1'000'000; // branches
    std::size_t max_core_entries = 128;
};

RealizabilityVerdict solve( const ConstraintSystem& sys, const SolveOptions& options = {} );

// compile_constraints + solve; an Unrealizable entry becomes Unsat with that
// entry as the conflict.
RealizabilityVerdict realize( const OperatorTable& table, bool symmetric, const SolveOptions& options = {} );

inline constexpr std::size_t max_brute_force_vars = 6;

// Tries every weak order of the pair variables. Throws BoundExceeded beyond
// max_brute_force_vars variables.
RealizabilityVerdict brute_force_realizable( const OperatorTable& table, bool symmetric );

// Cost table with d(v,w) = rank of var(v,w).
PseudoDistance witness_distance( const std::vector< std::size_t >& ranks, const Universe& universe, bool symmetric );

// Rebuilds |_D from the ranks and compares it with every table entry.
bool verify_witness( const std::vector< std::size_t >& ranks, const OperatorTable& table, bool symmetric );

} // namespace distrev
