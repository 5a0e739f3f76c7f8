#include "monpow/parse.hpp"

#include "monpow/report.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace monpow;
using test::ev;
using test::make_ideal;

TEST_CASE("indexed-variable grammar") {
    ParsedIdeal p = parse_ideal("x1*x2, x2*x3");
    CHECK(p.ideal == make_ideal(3, {{1, 1, 0}, {0, 1, 1}}));
    CHECK(p.var_names == std::vector<std::string>{"x1", "x2", "x3"});

    ParsedIdeal q = parse_ideal("x1^4, x1^3*x2, x1^2*x2^2*x3, x1*x2^3, x2^4");
    CHECK(q.ideal == test::example_ideal());

    ParsedIdeal r = parse_ideal("x1^2, x1");
    CHECK(r.ideal == make_ideal(1, {{1}}));

    ParsedIdeal s = parse_ideal("  x2 ^ 3  *  x2 ");
    CHECK(s.ideal == make_ideal(2, {{0, 4}})); // repeated factors multiply
}

TEST_CASE("single-letter grammar maps by first appearance") {
    ParsedIdeal p = parse_ideal("X*Y, Y*Z");
    CHECK(p.ideal == make_ideal(3, {{1, 1, 0}, {0, 1, 1}}));
    CHECK(p.var_names == std::vector<std::string>{"X", "Y", "Z"});

    ParsedIdeal q = parse_ideal("b*a");
    CHECK(q.var_names == std::vector<std::string>{"b", "a"});
    CHECK(q.ideal == make_ideal(2, {{1, 1}}));
}

TEST_CASE("variable count overrides") {
    ParsedIdeal p = parse_ideal("x1*x2", 4);
    CHECK(p.ideal.var_count() == 4);
    CHECK(p.var_names.size() == 4);

    ParsedIdeal q = parse_ideal("y", 2);
    CHECK(q.var_names == std::vector<std::string>{"y", "x2"});

    CHECK_THROWS_AS(parse_ideal("x1*x3", 2), ParseError);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_ideal(""), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1*"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1,,x2"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1^"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1 x2"), ParseError);
    CHECK_THROWS_AS(parse_ideal("3*x1"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1*y"), ParseError); // mixed styles
    CHECK_THROWS_AS(parse_ideal("y2"), ParseError);   // indexed form must use x
    CHECK_THROWS_AS(parse_ideal("x0"), ParseError);

    try {
        parse_ideal("x1^0");
        FAIL("zero exponent accepted");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("formatting monomials and supports") {
    std::vector<std::string> names{"x", "y", "z"};
    CHECK(format_monomial(ev({1, 0, 2}), names) == "x*z^2");
    CHECK(format_monomial(ev({0, 0, 0}), names) == "1");
    CHECK(format_ideal(make_ideal(3, {{1, 1, 0}, {0, 1, 1}}), names) == "(x*y, y*z)");
    CHECK(format_support(test::ps({1, 3}), names) == "(x,z)");
}

TEST_CASE("text and json reports carry the same numbers") {
    ParsedIdeal p = parse_ideal("x1*x2, x2*x3");

    SequenceReport seq = make_sequence_report(p.ideal, p.var_names, 4);
    std::string text = to_text(seq);
    nlohmann::json js = to_json(seq);
    CHECK(js["stability"]["value"] == "1");
    CHECK(text.find("stability: 1") != std::string::npos);
    CHECK(js["sequence"].size() == 4);
    // the json sequence entries reproduce the profile exactly
    for (unsigned n = 1; n <= 4; ++n) {
        const AssSet& s = seq.profile.at_power(n);
        const nlohmann::json& entry = js["sequence"][n - 1];
        REQUIRE(entry["ass"].size() == s.primes().size());
        for (std::size_t i = 0; i < s.primes().size(); ++i) {
            const auto& members = s.primes()[i].members();
            REQUIRE(entry["ass"][i].size() == members.size());
            for (std::size_t j = 0; j < members.size(); ++j) {
                CHECK(entry["ass"][i][j] == std::to_string(members[j]));
            }
        }
    }

    BoundsReportOut bounds{p.var_names, bound_report(p.ideal)};
    std::string btext = to_text(bounds);
    nlohmann::json bjs = to_json(bounds);
    // round-trip: the decimal strings parse back to the exact values
    CHECK(Integer(bjs["sigma1_reduced"]["squared"].get<std::string>()) ==
          bounds.report.sigma1_reduced.squared);
    CHECK(Integer(bjs["sigma2_raw"]["ceiling"].get<std::string>()) ==
          bounds.report.sigma2_raw.ceiling);
    CHECK(bjs["stats"]["d"] == bounds.report.stats.max_degree.str());
    CHECK(btext.find("squared=" + bounds.report.sigma1_reduced.squared.str()) !=
          std::string::npos);
    CHECK(btext.find("ceiling=" + bounds.report.sigma2_raw.ceiling.str()) !=
          std::string::npos);
    CHECK(btext.find("d_red=1") != std::string::npos);
    CHECK(bjs["stats"]["d_red"] == "1");

    AssReport ar = make_ass_report(p.ideal, p.var_names, 2);
    std::string atext = to_text(ar);
    nlohmann::json ajs = to_json(ar);
    CHECK(ajs["ass"].size() == ar.primes.size());
    CHECK(atext.find("(x2)") != std::string::npos);
}
