// Drives the built command-line tool and checks exit codes and report lines.

#include <distrev/io.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace
{

const fs::path& scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "distrev-cli-tests";
        fs::remove_all( d );
        fs::create_directories( d );
        return d;
    }();
    return dir;
}

fs::path put( const std::string& name, const std::string& text )
{
    const auto p = scratch() / name;
    distrev::write_file( p, text );
    return p;
}

struct Outcome
{
    int code;
    std::string out;
};

Outcome run( const std::string& args )
{
    const auto out = scratch() / "out.txt";
    const std::string cmd = std::string( DISTREV_BIN ) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system( cmd.c_str() );
    return { WIFEXITED( status ) ? WEXITSTATUS( status ) : -1, distrev::read_file( out ) };
}

bool has( const Outcome& o, const std::string& needle ) { return o.out.find( needle ) != std::string::npos; }

const char* asymmetric = "points: a b\norder: real\nrow: 0 1\nrow: 2 0\n";
const char* symmetric3 = "points: a b c\norder: real\nrow: 0 1 2\nrow: 1 0 1.5\nrow: 2 1.5 0\n";

} // namespace

TEST_SUITE( "cli" )
{
    TEST_CASE( "revise" )
    {
        const auto g = put( "g.th", "p & q\n" );
        const auto d = put( "d.th", "!p\n" );
        const auto r = run( "revise " + g.string() + " " + d.string() + " hamming" );
        CHECK( r.code == 0 );
        CHECK( has( r, "result: !p & q" ) );
        CHECK( has( r, "seed: 0" ) );
        CHECK( has( r, "fnv1a64:" ) );

        const auto one = put( "one.th", "p\nq\n" );
        CHECK( has( run( "revise " + d.string() + " " + one.string() + " hamming" ), "result: p & q" ) );

        const auto bad = put( "bad.th", "p &\n" );
        CHECK( run( "revise " + bad.string() + " " + d.string() + " hamming" ).code == 2 );
        const auto no = put( "no.th", "p\n!p\n" );
        CHECK( run( "revise " + no.string() + " " + d.string() + " hamming" ).code == 3 );
        CHECK( run( "revise " + g.string() + " " + ( scratch() / "missing.th" ).string() + " hamming" ).code == 2 );
    }

    TEST_CASE( "check" )
    {
        const auto a = put( "asym.dist", asymmetric );
        const auto r = run( "check " + a.string() + " --props sym" );
        CHECK( r.code == 1 );
        CHECK( has( r, "- a ; b" ) );
        CHECK( run( "check " + a.string() + " --props liberal-tir" ).code == 2 );
        const auto s = put( "sym.dist", symmetric3 );
        CHECK( run( "check " + s.string() + " --props sym,ir,pos,tir" ).code == 0 );
        CHECK( run( "check " + s.string() + " --props nonsense" ).code == 2 );
    }

    TEST_CASE( "wheel exports and reruns" )
    {
        const auto dir = scratch() / "wheel";
        const auto w = run( "wheel --variant abstract --n 2 --export " + dir.string() );
        CHECK( w.code == 0 );
        CHECK( has( w, "result: pass" ) );
        CHECK( fs::exists( dir / "fragment.op" ) );

        const auto frag = run( "realize " + ( dir / "fragment.op" ).string() );
        CHECK( frag.code == 1 );
        CHECK( has( frag, "status: UNSAT" ) );
        CHECK( run( "check " + ( dir / "patched.dist" ).string() + " --props sym,ir,pos,tir" ).code == 0 );

        CHECK( run( "wheel --n 0" ).code == 2 );
    }

    TEST_CASE( "realize" )
    {
        const auto s = put( "sym.dist", symmetric3 );
        const auto backed = put( "backed.op", "points: a b c\nbacking: sym.dist\n" );
        CHECK( run( "realize " + backed.string() + " --symmetric" ).code == 0 );
        const auto tiny = put( "tiny.op", "points: a b\nentry: {a} {a b} {b}\nentry: {b} {a b} {a}\nentry: {a b} {a b} {a}\n" );
        const auto fast = run( "realize " + tiny.string() + " --symmetric" );
        const auto brute = run( "realize " + tiny.string() + " --symmetric --brute-force" );
        CHECK( fast.code == brute.code );
        CHECK( fast.code == 1 );
        // the fragment dies in propagation, so a zero budget never bites there
        CHECK( run( "--budget 0 realize " + ( scratch() / "wheel" / "fragment.op" ).string() ).code == 1 );
        CHECK( run( "--budget 0 realize " + tiny.string() ).code == 4 );
        (void)s;
    }

    TEST_CASE( "loop" )
    {
        const auto s = put( "sym.dist", symmetric3 );
        const auto backed = put( "loop.op", "points: a b c\nbacking: sym.dist\n" );
        CHECK( run( "loop " + backed.string() + " --k 3" ).code == 0 );
        const auto fam = put( "empty.family", "{}\n{a}\n" );
        CHECK( run( "loop " + backed.string() + " --family-file " + fam.string() ).code == 2 );
        const auto a = put( "asym.dist", "points: a b\norder: real\nrow: 5 1\nrow: 2 5\n" );
        const auto asym = put( "asym.op", "points: a b\nbacking: asym.dist\n" );
        const auto r = run( "loop " + asym.string() + " --k 3" );
        CHECK( r.code == 1 );
        CHECK( has( r, "chain:" ) );
        (void)s;
        (void)a;
    }

    TEST_CASE( "agm" )
    {
        const auto r = run( "agm hamming --signature \"p q\"" );
        CHECK( r.code == 0 );
        CHECK( has( r, "star4" ) );
    }

    TEST_CASE( "out file and determinism" )
    {
        const auto o1 = scratch() / "r1.txt";
        const auto o2 = scratch() / "r2.txt";
        CHECK( run( "--seed 5 --out " + o1.string() + " wheel --variant hamming --n 1 --samples 1000" ).code == 0 );
        CHECK( run( "--seed 5 --out " + o2.string() + " wheel --variant hamming --n 1 --samples 1000" ).code == 0 );
        const auto a = distrev::read_file( o1 );
        CHECK( a == distrev::read_file( o2 ) );
        CHECK( a.find( "seed: 5" ) != std::string::npos );
        CHECK( run( "--bogus" ).code == 2 );
    }
}
