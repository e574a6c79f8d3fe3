#pragma once

#include "distrev/cost.hpp"
#include "distrev/logic.hpp"
#include "distrev/point_set.hpp"
#include "distrev/report_types.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace distrev
{

// <C, <, d> over a finite labelled universe, with C = Q (real order) or
// Q + {|N|} (liberal order).
class PseudoDistance
{
public:
    PseudoDistance() = default;
    // Row-major table, size |U|^2. Throws ModeMismatch for infinite entries
    // under the real order.
    PseudoDistance( Universe universe, OrderMode mode, std::vector< Cost > table );
    PseudoDistance( Universe universe, OrderMode mode, const std::function< Cost( std::size_t, std::size_t ) >& cost );

    [[nodiscard]] const Universe& universe() const { return _universe; }
    [[nodiscard]] std::size_t size() const { return _universe.size(); }
    [[nodiscard]] OrderMode mode() const { return _mode; }
    [[nodiscard]] const Cost& operator()( std::size_t v, std::size_t w ) const { return _table[ v * size() + w ]; }
    [[nodiscard]] const std::vector< Cost >& table() const { return _table; }

    [[nodiscard]] Ordering compare( const Cost& a, const Cost& b ) const { return compare_costs( a, b, _mode ); }
    [[nodiscard]] bool less( const Cost& a, const Cost& b ) const { return compare( a, b ) == Ordering::Less; }

    [[nodiscard]] PseudoDistance with_cost( std::size_t v, std::size_t w, Cost c ) const;

    friend bool operator==( const PseudoDistance&, const PseudoDistance& ) = default;

private:
    Universe _universe;
    OrderMode _mode = OrderMode::Real;
    std::vector< Cost > _table;
};

enum class DistanceProperty
{
    Symmetric,
    IR,
    Positive,
    TIR,
    LiberalIR,
    LiberalPositive,
    LiberalTIR,
};

const char* to_string( DistanceProperty p );

// Exhaustive check. IR/Positive/TIR need the real order, the liberal trio
// needs the liberal order (ModeMismatch otherwise); Symmetric accepts either.
PropertyReport check_property( const PseudoDistance& d, DistanceProperty prop,
                               std::size_t witness_cap = default_witness_cap );

// |h(v,w)| < |h(v,x)| implies d(v,w) < d(v,x), for all triples. `valuations`
// maps universe point i to a valuation; all on one signature.
PropertyReport check_hir( const PseudoDistance& d, std::span< const Valuation > valuations,
                          std::size_t witness_cap = default_witness_cap );

// d(v,w) = |h(v,w)|, real order.
PseudoDistance hamming_pseudo_distance( const ValuationSpace& space );

} // namespace distrev
