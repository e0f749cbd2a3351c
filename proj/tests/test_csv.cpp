#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "wmml/csv.hpp"

using namespace wmml;

TEST_CASE("dataset parsing") {
    std::istringstream in(
        "# any comment\n"
        "#censor_time=2.5\n"
        "y,delta\n"
        "0.7,1\n"
        "2.5,0\n"
        "  1.25 , 1 \n");
    const DatasetFile f = read_dataset(in);
    REQUIRE(f.y.size() == 3);
    CHECK(f.y[0] == doctest::Approx(0.7));
    CHECK(f.y[2] == doctest::Approx(1.25));
    CHECK(f.delta == std::vector<int>{1, 0, 1});
    REQUIRE(f.censor_time.has_value());
    CHECK(*f.censor_time == doctest::Approx(2.5));
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            (void)read_dataset(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_error("time,status\n1.0,1\n", 1);          // wrong header
    expect_error("y,delta\n1.0,2\n", 2);              // bad delta
    expect_error("y,delta\n-1.0,1\n", 2);             // nonpositive y
    expect_error("y,delta\nabc,1\n", 2);              // bad number
    expect_error("y,delta\n1.0\n", 2);                // missing column
    expect_error("y,delta\n", 1);                     // no data rows
    expect_error("#censor_time=-1\ny,delta\n1,1\n", 1);
}

TEST_CASE("round trip through write_dataset") {
    Sample s;
    s.y = {0.123456789012345, 2.0, 2.0};
    s.delta = {1, 0, 0};
    s.scheme = CensorScheme::type1(2.0);
    std::ostringstream out;
    write_dataset(out, s);
    std::istringstream in(out.str());
    const DatasetFile f = read_dataset(in);
    const Sample back = to_sample(f);
    CHECK(back.scheme.kind == CensorKind::TypeI);
    CHECK(back.scheme.censor_time == s.scheme.censor_time);
    CHECK(back.y == s.y);  // precision 17 preserves doubles exactly
    CHECK(back.delta == s.delta);
}

TEST_CASE("scheme inference") {
    DatasetFile complete;
    complete.y = {1.0, 2.0};
    complete.delta = {1, 1};
    CHECK(to_sample(complete).scheme.kind == CensorKind::Complete);

    DatasetFile random;
    random.y = {1.0, 2.0};
    random.delta = {1, 0};
    CHECK(to_sample(random).scheme.kind == CensorKind::RandomWeibull);

    DatasetFile t1;
    t1.y = {1.0, 3.0};
    t1.delta = {1, 0};
    t1.censor_time = 3.0;
    CHECK(to_sample(t1).scheme.kind == CensorKind::TypeI);

    // explicit scheme wins; censor time filled from the file when omitted
    const Sample forced = to_sample(t1, CensorScheme::type1(0.0));
    CHECK(forced.scheme.censor_time == doctest::Approx(3.0));

    // inference + validation rejects inconsistent type I rows
    DatasetFile bad = t1;
    bad.y[1] = 2.9;  // censored row not at c
    CHECK_THROWS_AS((void)to_sample(bad), std::invalid_argument);
}
