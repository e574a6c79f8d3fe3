#pragma once

#include "distrev/operators.hpp"
#include "distrev/realize.hpp"
#include "distrev/report_types.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace distrev
{

// Costs of the abstract wheel. The defaults are the construction's; other
// values exist to test how much the verification depends on them.
struct WheelCosts
{
    Cost off_wheel{ 1 };      // pair leaving the wheel
    Cost same_side{ 11, 10 }; // two v's or two w's
    Cost rung{ 7, 5 };        // v_i, w_i
    Cost adjacent{ 2 };       // v_i, w_j with |i-j| in {1, m-1}
    Cost chord{ 6, 5 };       // other v_i, w_j
    Cost patched_rung{ 13, 10 };
};

// Points v_1..v_m (indices 0..m-1), w_1..w_m (m..2m-1), then off-wheel
// extras x_1..x_e.
struct WheelParams
{
    int n = 1;
    int m = 4;
    int extras = 2;
    WheelCosts costs{};

    // m = n + 3. Throws InputError when m < 4.
    static WheelParams for_arity( int n, int extras = 2 );
    void validate() const;

    [[nodiscard]] std::size_t points() const { return static_cast< std::size_t >( 2 * m + extras ); }
    [[nodiscard]] std::size_t v( int i ) const { return static_cast< std::size_t >( i - 1 ); }
    [[nodiscard]] std::size_t w( int i ) const { return static_cast< std::size_t >( m + i - 1 ); }
    [[nodiscard]] std::size_t extra( int k ) const { return static_cast< std::size_t >( 2 * m + k - 1 ); }
    [[nodiscard]] PointSet set( std::initializer_list< std::size_t > members ) const
    {
        return PointSet( points(), members );
    }
    [[nodiscard]] PointSet wheel() const; // X
    // {v_i, v_{i+1}} and {w_i, w_{i+1}}, with i+1 taken mod m.
    [[nodiscard]] PointSet v_rung_pair( int i ) const;
    [[nodiscard]] PointSet w_rung_pair( int i ) const;
};

Universe wheel_universe( const WheelParams& p );

enum class WheelPair
{
    Same,
    OffWheel,
    SameSide,
    Rung,
    Adjacent,
    Chord,
};

WheelPair classify_pair( const WheelParams& p, std::size_t a, std::size_t b );

PseudoDistance build_wheel_distance( const WheelParams& p );

// |_D except ({v_m,v_1},{w_m,w_1}) -> {w_m} and the mirror -> {v_m}.
OperatorTable build_modified_operator( const PseudoDistance& d, const WheelParams& p );

using SetPair = std::pair< PointSet, PointSet >;

// Smallest r in [1, m-1] such that no pair equals {{v_r,v_{r+1}},{w_r,w_{r+1}}}
// as an unordered pair. Throws std::invalid_argument when none is free, which
// the precondition |pairs| <= m-2 rules out.
int find_fresh_rung( std::span< const SetPair > pairs, const WheelParams& p );

struct PatchedWheel
{
    OperatorTable op;
    PseudoDistance d;
};

// |' = | plus rung r -> {w_{r+1}} / {v_{r+1}}; d' = d with rungs r+1..m at
// the patched cost.
PatchedWheel build_patched( const OperatorTable& op, const PseudoDistance& d, const WheelParams& p, int r );

// The entries the non-realizability argument uses, valued by `op`: rung
// doubletons (i < m) with their two singleton probes, the wrap probes, and
// optionally the modified wrap entry itself.
OperatorTable build_proof_fragment( const SetOperator& op, const Universe& u, const WheelParams& p,
                                    bool with_modified_entry = true );

// Singletons and the rung doubletons of both sides, wrap included.
std::vector< PointSet > wheel_chain_pool( const WheelParams& p );

// The chain that walks once around the wheel from the modified entry:
// {v_m,v_1} {w_1} {v_1,v_2} {w_2} ... {v_{m-1},v_m} {w_m}, so k = 2m-1.
std::vector< PointSet > wheel_loop_chain( const WheelParams& p );

struct WheelGadget
{
    WheelParams params;
    PseudoDistance d;
    OperatorTable op;
    std::vector< SetPair > probes;
    int r = 1;
    OperatorTable patched;
    PseudoDistance patched_d;
};

// Probes stand in for the n test pairs of a characterization; r is chosen
// fresh for them.
WheelGadget build_wheel_gadget( const WheelParams& p, std::vector< SetPair > probes );

// n random probe pairs over the wheel, some of them rung pairs.
std::vector< SetPair > random_probes( const WheelParams& p, std::uint64_t seed );

struct WheelCheckOptions
{
    // Exhaustive equality sweep over all subset pairs up to this many points.
    std::size_t exhaustive_points = 10;
    std::size_t samples = 100'000;
    std::uint64_t seed = 0;
    int loop_k_max = -1; // -1: 2m
    std::size_t loop_budget = 50'000'000;
    // Above this m the search is skipped and only the walk-around chain is
    // rechecked. The search at m=5 does not finish inside the budget.
    int loop_search_max_m = 4;
    SolveOptions solve{};
    // Re-run the order-dependent claims under perturbed costs and note which
    // still pass.
    bool perturbations = true;
};

ClaimReport verify_wheel_claims( const WheelGadget& g, const WheelCheckOptions& options = {} );

// === Hamming wheel ===

struct HammingWheelGadget
{
    WheelParams params;
    Signature signature; // p1..pm, q1..qm
    std::shared_ptr< const Matrix > matrix;
    TruthValue zero = 0, one = 1;
    std::vector< Valuation > points;  // universe point -> valuation
    Universe universe;
    PseudoDistance d;
    std::vector< SetPair > probes;
    int r = 1;
    PseudoDistance patched_d;
    bool guarded = true; // false only for the mutation test

    [[nodiscard]] std::size_t h( std::size_t a, std::size_t b ) const { return _h[ a * points.size() + b ]; }
    // "for all v in V, w in W: {v,w} within X or |h(v,w)| >= 3"
    [[nodiscard]] bool guard( const PointSet& v, const PointSet& w ) const;
    [[nodiscard]] bool literal_guard( const PointSet& v, const PointSet& w ) const;
    [[nodiscard]] PointSet modified( const PointSet& v, const PointSet& w ) const;
    [[nodiscard]] PointSet patched( const PointSet& v, const PointSet& w ) const;
    [[nodiscard]] SetOperator modified_op() const;
    [[nodiscard]] SetOperator patched_op() const;

    std::vector< std::size_t > _h;
};

// Three default extras: all-zero (h = 1 from the wheel), p1 p2 q1 (h >= 2),
// p1..p4 (h >= 3). Extra valuations are over the gadget's signature.
HammingWheelGadget build_hamming_wheel( int n, const Matrix& matrix, std::vector< SetPair > probes = {},
                                        std::optional< std::vector< Valuation > > extras = std::nullopt );

// | (or |') as D plus explicit entries for every guarded input whose wheel
// part is a modified pair.
OperatorTable hamming_operator_table( const HammingWheelGadget& g, bool patched );

struct HammingCheckOptions
{
    // Every subset pair up to this many points; beyond, every wheel subset pair
    // (when the wheel has at most one point more) plus sampled pairs.
    std::size_t exhaustive_points = 11;
    std::size_t samples = 100'000;
    std::uint64_t seed = 0;
    SolveOptions solve{};
};

ClaimReport verify_hamming_claims( const HammingWheelGadget& g, const HammingCheckOptions& options = {} );

// The sandwich |h| <= d' <= d <= |h| + 1/2 over all pairs.
PropertyReport check_sandwich( const HammingWheelGadget& g );

} // namespace distrev
