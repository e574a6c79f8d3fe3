// distrev: batch front end over the core library. Every command writes one
// report; exit codes are 0 pass/SAT, 1 fail/UNSAT, 2 input error,
// 3 inconsistent input, 4 budget exhausted.

#include "distrev/error.hpp"
#include "distrev/io.hpp"
#include "distrev/realize.hpp"
#include "distrev/report.hpp"
#include "distrev/revision.hpp"
#include "distrev/wheel.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace distrev;

namespace
{

enum Exit
{
    exit_pass = 0,
    exit_fail = 1,
    exit_input = 2,
    exit_inconsistent = 3,
    exit_budget = 4,
};

struct Globals
{
    std::uint64_t seed = 0;
    std::size_t budget = 1'000'000;
    std::string out;
};

// Report header shared by all commands: command, seed, hashed inputs.
struct Run
{
    Report report;
    const Globals& globals;

    Run( const std::string& command, const Globals& g ) : globals{ g }
    {
        report.put( "command", command );
        report.put( "seed", std::to_string( g.seed ) );
    }

    std::string load( const std::string& path )
    {
        auto text = read_file( path );
        report.item( "inputs", path + " fnv1a64:" + hex64( fnv1a64( text ) ) );
        return text;
    }

    int finish( int code )
    {
        report.put( "exit", std::to_string( code ) );
        const auto text = report.render();
        if ( globals.out.empty() )
            std::cout << text;
        else
            write_file( globals.out, text );
        return code;
    }
};

std::vector< std::string > split_words( const std::string& s )
{
    std::istringstream in( s );
    std::vector< std::string > out;
    std::string w;
    while ( in >> w )
        out.push_back( w );
    return out;
}

std::vector< std::string > split_list( const std::string& s )
{
    std::vector< std::string > out;
    std::string cur;
    for ( char c : s )
    {
        if ( c == ',' || c == ' ' )
        {
            if ( !cur.empty() )
                out.push_back( cur );
            cur.clear();
        }
        else
            cur += c;
    }
    if ( !cur.empty() )
        out.push_back( cur );
    return out;
}

// === revise / agm ===

struct RevisionSetup
{
    SpacePtr space;
    RevisionOperator op;
};

RevisionSetup revision_setup( Run& run, const std::string& distance_arg, std::vector< std::string > atoms,
                              const std::string& matrix_path )
{
    Matrix matrix = Matrix::classical();
    if ( !matrix_path.empty() )
        matrix = parse_matrix( run.load( matrix_path ) );

    std::optional< DistanceFile > file;
    if ( distance_arg != "hamming" )
    {
        file = parse_distance( run.load( distance_arg ), matrix );
        if ( atoms.empty() && file->signature )
            atoms = file->signature->atoms();
    }
    auto space = std::make_shared< const ValuationSpace >( Signature( atoms ), matrix );
    if ( file )
        return { space, RevisionOperator::from_distance( distance_over_space( *file, *space ), space ) };
    return { space, RevisionOperator::from_distance( hamming_pseudo_distance( *space ), space ) };
}

std::vector< Formula > read_theory( const std::string& text, const Signature& sig )
{
    std::vector< Formula > out;
    for ( const auto& line : parse_theory_lines( text ) )
        out.push_back( parse_formula( line, sig ) );
    return out;
}

int cmd_revise( const Globals& g, const std::string& gamma_path, const std::string& delta_path,
                const std::string& distance_arg, const std::string& signature, const std::string& matrix_path )
{
    Run run( "revise", g );
    const auto gamma_text = run.load( gamma_path );
    const auto delta_text = run.load( delta_path );
    // signature: the flag, else the distance file, else the theories' atoms
    auto atoms = split_words( signature );
    if ( atoms.empty() && distance_arg != "hamming" )
        if ( const auto peek = parse_distance( read_file( distance_arg ) ); peek.signature )
            atoms = peek.signature->atoms();
    if ( atoms.empty() )
        for ( const auto* text : { &gamma_text, &delta_text } )
            for ( const auto& line : parse_theory_lines( *text ) )
                for ( const auto& a : scan_atoms( line ) )
                    if ( std::find( atoms.begin(), atoms.end(), a ) == atoms.end() )
                        atoms.push_back( a );
    auto setup = revision_setup( run, distance_arg, atoms, matrix_path );
    const auto& sig = setup.space->signature();
    const auto gamma = Theory::of( read_theory( gamma_text, sig ), setup.space );
    const auto delta = Theory::of( read_theory( delta_text, sig ), setup.space );
    run.report.put( "gamma", gamma.models().to_string() );
    run.report.put( "delta", delta.models().to_string() );
    if ( !gamma.consistent() || !delta.consistent() )
    {
        run.report.put( "error", std::string( !gamma.consistent() ? "gamma" : "delta" ) + " is inconsistent" );
        return run.finish( exit_inconsistent );
    }
    const auto result = revise( setup.op, gamma, delta );
    if ( setup.space->matrix().is_classical() )
        run.report.put( "result", canonical_dnf( result.models() ).to_string() );
    run.report.put( "models", result.models().to_string() );
    return run.finish( exit_pass );
}

int cmd_agm( const Globals& g, const std::string& distance_arg, const std::string& signature,
             const std::string& matrix_path, std::size_t samples, int k_max )
{
    Run run( "agm", g );
    auto atoms = split_words( signature );
    if ( atoms.empty() && distance_arg != "hamming" )
    {
        const auto peek = parse_distance( read_file( distance_arg ) );
        if ( peek.signature )
            atoms = peek.signature->atoms();
    }
    if ( atoms.empty() )
        throw InputError( "agm needs a signature (--signature or a signature line)" );
    auto setup = revision_setup( run, distance_arg, atoms, matrix_path );
    RevisionScope scope;
    scope.samples = samples;
    scope.seed = g.seed;
    bool pass = true;
    auto& props = run.report.section( "postulates" );
    for ( const auto& r : check_agm( setup.op, scope ) )
    {
        add_property( props, r );
        pass = pass && r.pass();
    }
    for ( const auto& r : check_disjunction_iteration( setup.op, scope ) )
    {
        add_property( props, r );
        pass = pass && r.pass();
    }
    for ( const auto& r : check_dp_cp( setup.op, scope ) )
    {
        add_property( props, r );
        pass = pass && r.pass();
    }
    LoopOptions lo;
    lo.budget = g.budget;
    lo.seed = g.seed;
    const auto loop = check_star_loop( setup.op, k_max, lo );
    add_loop( run.report.section( "star-loop" ), loop, setup.space->universe() );
    pass = pass && loop.pass;
    run.report.put( "result", pass ? "pass" : "fail" );
    return run.finish( pass ? exit_pass : exit_fail );
}

// === check ===

int cmd_check( const Globals& g, const std::string& path, const std::string& props )
{
    Run run( "check", g );
    const auto file = parse_distance( run.load( path ) );
    bool pass = true;
    for ( const auto& name : split_list( props ) )
    {
        PropertyReport r;
        if ( name == "hir" )
        {
            if ( file.valuations.empty() )
                throw InputError( "hir needs valuation lines in the distance file" );
            r = check_hir( file.distance, file.valuations );
        }
        else
        {
            static const std::map< std::string, DistanceProperty > names{
                { "sym", DistanceProperty::Symmetric },
                { "symmetric", DistanceProperty::Symmetric },
                { "ir", DistanceProperty::IR },
                { "pos", DistanceProperty::Positive },
                { "positive", DistanceProperty::Positive },
                { "tir", DistanceProperty::TIR },
                { "liberal-ir", DistanceProperty::LiberalIR },
                { "liberal-pos", DistanceProperty::LiberalPositive },
                { "liberal-positive", DistanceProperty::LiberalPositive },
                { "liberal-tir", DistanceProperty::LiberalTIR },
            };
            const auto it = names.find( name );
            if ( it == names.end() )
                throw InputError( "unknown property '" + name + "'" );
            r = check_property( file.distance, it->second );
        }
        add_property( run.report, r );
        pass = pass && r.pass();
    }
    run.report.put( "result", pass ? "pass" : "fail" );
    return run.finish( pass ? exit_pass : exit_fail );
}

// === realize ===

OperatorTable load_operator( Run& run, const std::string& path )
{
    const auto text = run.load( path );
    return parse_operator( text, fs::path( path ).parent_path() );
}

int cmd_realize( const Globals& g, const std::string& path, bool symmetric, bool brute )
{
    Run run( "realize", g );
    const auto table = load_operator( run, path );
    const auto& u = table.universe();
    RealizabilityVerdict v;
    std::optional< ConstraintSystem > sys;
    if ( brute )
        v = brute_force_realizable( table, symmetric );
    else
    {
        SolveOptions so;
        so.budget = g.budget;
        try
        {
            sys = compile_constraints( table, symmetric );
            v = solve( *sys, so );
        }
        catch ( const Unrealizable& e )
        {
            v.status = RealizeStatus::Unsat;
            v.conflict = { e.entry() };
            run.report.put( "reason", e.what() );
        }
    }
    run.report.put( "method", brute ? "brute-force" : "search" );
    add_verdict( run.report, v, sys ? &*sys : nullptr, u, symmetric );
    if ( v.status == RealizeStatus::Sat )
        run.report.put( "witness-verified", verify_witness( v.ranks, table, symmetric ) );
    switch ( v.status )
    {
        case RealizeStatus::Sat: return run.finish( exit_pass );
        case RealizeStatus::Unsat: return run.finish( exit_fail );
        case RealizeStatus::Unknown: break;
    }
    return run.finish( exit_budget );
}

// === loop ===

int cmd_loop( const Globals& g, const std::string& path, int k, const std::string& family_path,
              const std::string& pool_path, std::size_t samples )
{
    Run run( "loop", g );
    const auto table = load_operator( run, path );
    const auto& u = table.universe();
    const auto family = family_path.empty() ? SetFamily::all_nonempty( u.size() )
                                            : parse_family( run.load( family_path ), u );
    std::optional< std::vector< PointSet > > pool;
    if ( !pool_path.empty() )
        pool = parse_family( run.load( pool_path ), u ).sets();
    LoopOptions lo;
    lo.k_max = k;
    lo.budget = g.budget;
    lo.samples = samples;
    lo.seed = g.seed;
    const auto v = check_loop( table, family, lo, pool ? &*pool : nullptr );
    run.report.put( "k-max", std::to_string( k ) );
    run.report.put( "family", family.size() );
    add_loop( run.report, v, u );
    return run.finish( v.pass ? exit_pass : exit_fail );
}

// === wheel ===

std::string family_text( const Universe& u, std::span< const PointSet > sets )
{
    std::string out;
    for ( const auto& s : sets )
        out += u.format( s ) + "\n";
    return out;
}

int cmd_wheel( const Globals& g, const std::string& variant, int n, int extras, const std::string& export_dir,
               const std::string& matrix_path, std::size_t samples )
{
    Run run( "wheel", g );
    run.report.put( "variant", variant );
    run.report.put( "n", std::to_string( n ) );
    if ( variant == "abstract" )
    {
        auto p = WheelParams::for_arity( n, extras < 0 ? 2 : extras );
        const auto gadget = build_wheel_gadget( p, random_probes( p, g.seed ) );
        run.report.put( "m", std::to_string( p.m ) );
        run.report.put( "points", p.points() );
        run.report.put( "r", std::to_string( gadget.r ) );
        WheelCheckOptions wo;
        wo.seed = g.seed;
        wo.samples = samples;
        wo.loop_budget = std::max< std::size_t >( g.budget, wo.loop_budget );
        const auto claims = verify_wheel_claims( gadget, wo );
        add_claims( run.report, claims );
        if ( !export_dir.empty() )
        {
            const fs::path dir( export_dir );
            const auto& u = gadget.d.universe();
            write_file( dir / "wheel.dist", format_distance( gadget.d ) );
            write_file( dir / "patched.dist", format_distance( gadget.patched_d ) );
            write_file( dir / "wheel.op", format_operator( gadget.op, "wheel.dist" ) );
            write_file( dir / "patched.op", format_operator( gadget.patched, "wheel.dist" ) );
            write_file( dir / "fragment.op",
                        format_operator( build_proof_fragment( gadget.op, u, p ) ) );
            write_file( dir / "pool.family", family_text( u, wheel_chain_pool( p ) ) );
            for ( const auto* f : { "wheel.dist", "patched.dist", "wheel.op", "patched.op", "fragment.op", "pool.family" } )
                run.report.item( "artifacts", ( dir / f ).string() );
        }
        run.report.put( "result", claims.pass() ? "pass" : "fail" );
        return run.finish( claims.pass() ? exit_pass : exit_fail );
    }
    if ( variant == "hamming" )
    {
        Matrix matrix = Matrix::classical();
        if ( !matrix_path.empty() )
            matrix = parse_matrix( run.load( matrix_path ) );
        auto probe_params = WheelParams::for_arity( n, 3 );
        const auto gadget = build_hamming_wheel( n, matrix, random_probes( probe_params, g.seed ) );
        run.report.put( "m", std::to_string( gadget.params.m ) );
        run.report.put( "points", gadget.params.points() );
        run.report.put( "r", std::to_string( gadget.r ) );
        for ( std::size_t i = 0; i < gadget.points.size(); ++i )
            run.report.item( "valuations",
                             gadget.universe.label( i ) + " " + valuation_label( gadget.points[ i ], matrix ) );
        HammingCheckOptions ho;
        ho.seed = g.seed;
        ho.samples = samples;
        const auto claims = verify_hamming_claims( gadget, ho );
        add_claims( run.report, claims );
        if ( !export_dir.empty() )
        {
            const fs::path dir( export_dir );
            write_file( dir / "hamming.dist", format_distance( gadget.d, gadget.signature, gadget.points, matrix ) );
            write_file( dir / "hamming-patched.dist",
                        format_distance( gadget.patched_d, gadget.signature, gadget.points, matrix ) );
            write_file( dir / "hamming.op", format_operator( hamming_operator_table( gadget, false ), "hamming.dist" ) );
            write_file( dir / "hamming-patched.op",
                        format_operator( hamming_operator_table( gadget, true ), "hamming.dist" ) );
            write_file( dir / "fragment.op",
                        format_operator( build_proof_fragment( gadget.modified_op(), gadget.universe, gadget.params ) ) );
            for ( const auto* f : { "hamming.dist", "hamming-patched.dist", "hamming.op", "hamming-patched.op", "fragment.op" } )
                run.report.item( "artifacts", ( dir / f ).string() );
        }
        run.report.put( "result", claims.pass() ? "pass" : "fail" );
        return run.finish( claims.pass() ? exit_pass : exit_fail );
    }
    throw InputError( "unknown variant '" + variant + "' (abstract or hamming)" );
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Distance operators, revision postulates and wheel counterexamples" };
    app.require_subcommand( 1 );
    app.fallthrough();
    Globals g;
    app.add_option( "--seed", g.seed, "Seed for every randomized step" );
    app.add_option( "--budget", g.budget, "Search budget (solver branches, loop evaluations)" );
    app.add_option( "--out", g.out, "Write the report here instead of stdout" );

    std::function< int() > action;

    auto* revise = app.add_subcommand( "revise", "Revise a theory by another" );
    std::string gamma, delta, distance, signature, matrix;
    revise->add_option( "gamma", gamma, "Theory file" )->required();
    revise->add_option( "delta", delta, "Theory file" )->required();
    revise->add_option( "distance", distance, "Distance file, or 'hamming'" )->required();
    revise->add_option( "--signature", signature, "Atoms, space separated" );
    revise->add_option( "--matrix", matrix, "Matrix file (default classical)" );
    revise->callback( [ & ] { action = [ & ] { return cmd_revise( g, gamma, delta, distance, signature, matrix ); }; } );

    auto* check = app.add_subcommand( "check", "Check distance properties" );
    std::string check_path, props = "sym,ir,pos,tir";
    check->add_option( "distance", check_path, "Distance file" )->required();
    check->add_option( "--props", props, "sym,ir,pos,tir,liberal-ir,liberal-pos,liberal-tir,hir" );
    check->callback( [ & ] { action = [ & ] { return cmd_check( g, check_path, props ); }; } );

    auto* realize_cmd = app.add_subcommand( "realize", "Decide whether an operator table is a distance operator" );
    std::string op_path;
    bool symmetric = false, brute = false;
    realize_cmd->add_option( "operator", op_path, "Operator file" )->required();
    realize_cmd->add_flag( "--symmetric", symmetric, "Require a symmetric distance" );
    realize_cmd->add_flag( "--brute-force", brute, "Enumerate weak orders instead of searching" );
    realize_cmd->callback( [ & ] { action = [ & ] { return cmd_realize( g, op_path, symmetric, brute ); }; } );

    auto* wheel = app.add_subcommand( "wheel", "Build and verify a wheel counterexample" );
    std::string variant = "abstract", export_dir, wheel_matrix;
    int n = 1, extras = -1;
    std::size_t samples = 100'000;
    wheel->add_option( "--variant", variant, "abstract or hamming" );
    wheel->add_option( "--n", n, "Arity to defeat; m = n + 3" );
    wheel->add_option( "--extras", extras, "Off-wheel points (abstract variant)" );
    wheel->add_option( "--export", export_dir, "Directory for gadget files" );
    wheel->add_option( "--matrix", wheel_matrix, "Matrix file (hamming variant)" );
    wheel->add_option( "--samples", samples, "Sampled pairs when a sweep cannot be exhaustive" );
    wheel->callback( [ & ] {
        action = [ & ] { return cmd_wheel( g, variant, n, extras, export_dir, wheel_matrix, samples ); };
    } );

    auto* loop = app.add_subcommand( "loop", "Search for a loop-condition counterexample" );
    std::string loop_op, family, pool;
    int k = 3;
    std::size_t loop_samples = 10'000;
    loop->add_option( "operator", loop_op, "Operator file" )->required();
    loop->add_option( "--k", k, "Largest chain length" );
    loop->add_option( "--family-file", family, "Family file (default every nonempty set)" );
    loop->add_option( "--pool", pool, "Sets allowed in chains (default the family)" );
    loop->add_option( "--samples", loop_samples, "Chains sampled once the budget is spent" );
    loop->callback( [ & ] {
        action = [ & ] { return cmd_loop( g, loop_op, k, family, pool, loop_samples ); };
    } );

    auto* agm = app.add_subcommand( "agm", "Sweep the revision postulates" );
    std::string agm_distance, agm_signature, agm_matrix;
    std::size_t agm_samples = 10'000;
    int agm_k = 3;
    agm->add_option( "distance", agm_distance, "Distance file, or 'hamming'" )->required();
    agm->add_option( "--signature", agm_signature, "Atoms, space separated" );
    agm->add_option( "--matrix", agm_matrix, "Matrix file (default classical)" );
    agm->add_option( "--samples", agm_samples, "Sampled tuples beyond the exhaustive limit" );
    agm->add_option( "--k", agm_k, "Largest chain length for the loop postulate" );
    agm->callback( [ & ] {
        action = [ & ] { return cmd_agm( g, agm_distance, agm_signature, agm_matrix, agm_samples, agm_k ); };
    } );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e );
        return code == 0 ? exit_pass : exit_input;
    }

    try
    {
        return action();
    }
    catch ( const InconsistentInput& e )
    {
        std::cerr << "distrev: " << e.what() << "\n";
        return exit_inconsistent;
    }
    catch ( const InputError& e )
    {
        std::cerr << "distrev: " << e.what() << "\n";
        return exit_input;
    }
    catch ( const BoundExceeded& e )
    {
        std::cerr << "distrev: " << e.what() << "\n";
        return exit_input;
    }
    catch ( const UndefinedPair& e )
    {
        std::cerr << "distrev: " << e.what() << "\n";
        return exit_input;
    }
    catch ( const std::exception& e )
    {
        std::cerr << "distrev: " << e.what() << "\n";
        return exit_input;
    }
}
