#include <doctest.h>

#include <jetgeom/checks.hpp>
#include <jetgeom/error.hpp>
#include <jetgeom/parser.hpp>
#include <jetgeom/structfile.hpp>

#include "test_util.hpp"

using namespace jetgeom;

TEST_CASE("structure files roundtrip canonically through every kind") {
    auto ch = Chart::make({"x", "y", "psi"}, {"psi"});
    std::vector<StructObject> objs;

    Multivector pi(ch, 2);
    pi.add({0, 1}, parse("x*sin(psi) + 1/2", ch));
    objs.push_back({"pi", "bivector", ch, pi});

    DiffForm w(ch, 2);
    w.add({0, 2}, parse("y^2 - i", ch));
    objs.push_back({"omega", "form", ch, w});

    Multivector e(ch, 1);
    e.add({2}, parse("cos(psi)", ch));
    objs.push_back({"pair", "multiderivation", ch, MultiDerivation::make(pi, e)});

    Tensor11 t = Tensor11::identity(ch);
    t.m[0][1] = parse("x*y", ch);
    objs.push_back({"t", "tensor11", ch, t});

    DiffForm g1(ch, 1);
    g1.add({1}, parse("3", ch));
    objs.push_back({"phi", "endo-dl", ch,
                    EndoDL::make(t, unit_vector(ch, 0), g1, parse("x - 2", ch))});

    objs.push_back({"block", "genblock", ch, GenBlockTangent::make(t, pi, w)});

    auto ch2 = Chart::make({"x", "y"});
    Multivector lin(ch2, 2);
    lin.add({0, 1}, parse("x", ch2));
    objs.push_back({"cot", "algebroid", ch2, cotangent_algebroid(lin)});

    std::string text = write_structfile(objs);
    std::vector<StructObject> back = read_structfile(text);
    REQUIRE(back.size() == objs.size());
    CHECK(write_structfile(back) == text);  // canonical: fixed point of read/write

    // spot-check reconstructed values
    CHECK(std::get<Multivector>(back[0].value).equals(pi));
    CHECK(std::get<DiffForm>(back[1].value).equals(w));
    CHECK(std::get<MultiDerivation>(back[2].value).equals(
        std::get<MultiDerivation>(objs[2].value)));
    CHECK(std::get<Tensor11>(back[3].value).equals(t));
    CHECK(std::get<EndoDL>(back[4].value).equals(std::get<EndoDL>(objs[4].value)));
    CHECK(std::get<AlgebroidData>(back[6].value).equals(cotangent_algebroid(lin)));
}

TEST_CASE("structure-file parse errors carry byte offsets") {
    CHECK_THROWS_AS(read_structfile("[broken\nkind = bivector\n"), ParseError);
    CHECK_THROWS_AS(read_structfile("key = 1\n"), ParseError);  // before any section
    CHECK_THROWS_AS(read_structfile("[a]\nchart = x y\n0,1 = x\n"), ParseError);  // no kind
    CHECK_THROWS_AS(read_structfile("[a]\nkind = bivector\nchart = x y\n0,7 = x\n"),
                    ParseError);  // index out of range
    CHECK_THROWS_AS(read_structfile("[a]\nkind = nosuch\nchart = x y\n"), ParseError);
    CHECK_THROWS_AS(
        read_structfile("[a]\nkind = bivector\nchart = x y\nkind = form\n"),
        ParseError);  // duplicate setting
    // expression errors surface from the expression parser
    CHECK_THROWS_AS(read_structfile("[a]\nkind = bivector\nchart = x y\n0,1 = x +\n"),
                    ParseError);
    CHECK_THROWS_AS(read_structfile("[a]\nkind = bivector\nchart = x y\n0,1 = z\n"),
                    ParseError);  // unknown coordinate
    try {
        read_structfile("[broken\n");
    } catch (const ParseError& e) {
        CHECK(e.offset == 0);
    }
}

TEST_CASE("registered checks run against parsed objects") {
    CHECK_THROWS_AS(run_check("no-such-check", {}), StructureError);
    CHECK_THROWS_AS(run_check("is-poisson", {}), StructureError);  // no bivector given
    CHECK_FALSE(check_names().empty());
    for (const std::string& n : check_names()) CHECK_FALSE(check_description(n).empty());

    std::vector<StructObject> good = read_structfile(
        "[pi]\nkind = bivector\nchart = x y z\n0,1 = x\n");
    CHECK(run_check("is-poisson", good).ok);

    std::vector<StructObject> bad = read_structfile(
        "[pi]\nkind = bivector\nchart = x y z\n0,1 = z\n1,2 = y\n");
    Report r = run_check("is-poisson", bad);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes.front().find("component") != std::string::npos);
}

TEST_CASE("fixture gallery is deterministic and self-consistent") {
    auto gallery = example_gallery();
    auto again = example_gallery();
    REQUIRE(gallery.size() == again.size());
    for (std::size_t k = 0; k < gallery.size(); ++k) {
        CHECK(gallery[k].first == again[k].first);
        CHECK(gallery[k].second == again[k].second);
    }

    std::map<std::string, std::vector<StructObject>> parsed;
    for (const auto& [name, text] : gallery) parsed[name] = read_structfile(text);

    CHECK(run_check("is-jacobi", parsed["contact_r3.toml"]).ok);
    CHECK(run_check("is-contact", parsed["contact_r3.toml"]).ok);

    Report nj = run_check("is-jacobi", parsed["nonjacobi_r3.toml"]);
    CHECK_FALSE(nj.ok);
    REQUIRE_FALSE(nj.notes.empty());
    CHECK(nj.notes.front().find("lambda") != std::string::npos);

    CHECK(run_check("hP-equivalences", parsed["zero_pi.toml"]).ok);
    CHECK(run_check("homogeneous-holomorphic-poisson", parsed["sl2_lie_poisson.toml"]).ok);
    CHECK(run_check("homogeneous-holomorphic-poisson",
                    parsed["heisenberg_lie_poisson.toml"]).ok);
    CHECK(run_check("is-jacobi", parsed["darboux_n1.toml"]).ok);
    CHECK(run_check("hJ-equivalences", parsed["darboux_n1.toml"]).ok);
}
