#include <doctest.h>

#include "cli_util.hpp"

using namespace qfourier;

TEST_SUITE("cli") {

TEST_CASE("complex arguments") {
    CHECK(cli::parse_complex("4") == cplx(4, 0));
    CHECK(cli::parse_complex("-0.5") == cplx(-0.5, 0));
    CHECK(cli::parse_complex("1+2i") == cplx(1, 2));
    CHECK(cli::parse_complex("1-2.5i") == cplx(1, -2.5));
    CHECK(cli::parse_complex("3i") == cplx(0, 3));
    CHECK(cli::parse_complex("-i") == cplx(0, -1));
    CHECK(cli::parse_complex("i") == cplx(0, 1));
    CHECK(cli::parse_complex("1e-3+2e+2i") == cplx(1e-3, 2e2));
    CHECK(cli::parse_complex("+2-i") == cplx(2, -1));
    CHECK_THROWS_AS(cli::parse_complex("abc"), UsageError);
    CHECK_THROWS_AS(cli::parse_complex(""), UsageError);
    CHECK_THROWS_AS(cli::parse_complex("1+2j"), UsageError);
}

TEST_CASE("windows") {
    CHECK(cli::parse_window("-24:48") == Window(-24, 48));
    CHECK_THROWS_AS(cli::parse_window("5:1"), WindowError);
    CHECK_THROWS_AS(cli::parse_window("5"), UsageError);
    CHECK_THROWS_AS(cli::parse_window("a:b"), UsageError);
}

TEST_CASE("number formatting") {
    CHECK(cli::num(0.1) == "0.10000000000000001");
    CHECK(cli::num(1.0) == "1");
    CHECK(cli::json_num(1.0 / 0.0) == "\"inf\"");
    CHECK(cli::csv_field("a,b") == "\"a,b\"");
    CHECK(cli::csv_field("say \"x\", y") == "\"say \"\"x\"\", y\"");
    CHECK(cli::csv_field("plain") == "plain");
    CHECK(cli::json_str("a\"b") == "\"a\\\"b\"");
}

} // TEST_SUITE
