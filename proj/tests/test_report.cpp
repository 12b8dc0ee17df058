#include <doctest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "slce/gf2poly.hpp"
#include "slce/report.hpp"
#include "slce/sequence.hpp"

TEST_SUITE("report")
{
    TEST_CASE("q = 25: every k, all criteria false, all match")
    {
        auto const rep = slce::verify(5, 2, {});
        CHECK(rep.direct);
        CHECK(rep.all_match());
        CHECK(rep.modulus == "x^2+x+1");
        CHECK(*rep.linear_complexity == 20);
        CHECK(*rep.gcd_factorization == "(x+1)^4");
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].k == 3);
        CHECK(rep.rows[0].regime == "pure");
        for (auto const & ideal : rep.rows[0].ideals) {
            CHECK_FALSE(ideal.criterion);
            CHECK(ideal.direct == false);
        }
        CHECK(rep.rows[0].match == true);
    }

    TEST_CASE("q = 3^6, k = 7: both ideals divide")
    {
        slce::VerifyOptions o;
        o.only_k = 7;
        auto const rep = slce::verify(3, 6, o);
        REQUIRE(rep.rows.size() == 1);
        REQUIRE(rep.rows[0].ideals.size() == 2);
        for (auto const & ideal : rep.rows[0].ideals) {
            CHECK(ideal.criterion);
            CHECK(ideal.direct == true);
        }
        CHECK(rep.rows[0].direct_full == true);
        CHECK(rep.all_match());
    }

    TEST_CASE("bound and predict-only")
    {
        slce::VerifyOptions o;
        o.only_k = 23;
        CHECK_THROWS_AS(slce::verify(13, 11, o), std::invalid_argument);
        o.predict_only = true;
        auto const rep = slce::verify(13, 11, o);
        CHECK_FALSE(rep.direct);
        CHECK(rep.skipped == "q = 13^11 infeasible");
        REQUIRE(rep.rows.size() == 1);
        REQUIRE(rep.rows[0].prediction);
        CHECK(rep.rows[0].prediction->verdict == slce::Verdict::divides);
        CHECK_FALSE(rep.rows[0].match);
        CHECK(rep.all_match());
        auto const j = slce::to_json(rep);
        CHECK(j["direct"] == "skipped: q = 13^11 infeasible");
    }

    TEST_CASE("invalid parameters")
    {
        CHECK_THROWS_AS(slce::verify(9, 2, {}), std::invalid_argument);
        CHECK_THROWS_AS(slce::verify(5, 0, {}), std::invalid_argument);
        slce::VerifyOptions o;
        o.only_k = 5;
        CHECK_THROWS_AS(slce::verify(5, 2, o), std::invalid_argument);
    }

    TEST_CASE("prediction JSON")
    {
        auto const j = slce::to_json(slce::predict_index2(13, 11, 23, 1));
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it)
            keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"p", "m", "k", "regime", "target", "params", "divides",
                                               "branches", "condition_trace"});
        CHECK(j["divides"] == true);
        CHECK(j["params"]["h"] == 3);
        CHECK(j["params"]["a"] == 74);
        CHECK(j["branches"]["b_plus"] == true);
        auto const ind = slce::to_json(slce::predict_index2(11, 3, 7, 1));
        CHECK(ind["divides"] == "indeterminate");
    }

    TEST_CASE("report output is byte-stable without timings")
    {
        auto const a = slce::to_json(slce::verify(3, 4, {})).dump();
        auto const b = slce::to_json(slce::verify(3, 4, {})).dump();
        CHECK(a == b);
        CHECK(a.find("timings") == std::string::npos);
        CHECK(slce::to_text(slce::verify(3, 4, {})) == slce::to_text(slce::verify(3, 4, {})));
        slce::VerifyOptions o;
        o.timings = true;
        CHECK(slce::to_json(slce::verify(3, 4, o)).contains("timings"));
    }

    TEST_CASE("grid over q <= 200 matches everywhere")
    {
        slce::VerifyOptions o;
        o.with_gcd = false;
        auto const reps = slce::grid(200, o);
        CHECK(reps.size() == slce::odd_prime_powers(200).size());
        CHECK(reps.front().p == 3);
        for (auto const & r : reps) {
            CAPTURE(r.p);
            CAPTURE(r.m);
            CHECK(r.all_match());
        }
        auto const csv = slce::grid_csv(reps);
        CHECK(csv.rfind("q,p,m,k,factor,criterion,direct,predicted,match\n", 0) == 0);
        CHECK(csv.find("25,5,2,3,x^2+x+1,false,false,not_divides,true\n") != std::string::npos);
    }

    TEST_CASE("gcd factorizations match the computed fixture")
    {
        std::ifstream in(SLCE_FIXTURE_DIR "/gcd_computed.txt");
        REQUIRE(in);
        std::string line;
        int cases = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            std::istringstream ls(line);
            std::uint32_t p = 0;
            unsigned m = 0;
            ls >> p >> m;
            std::string form;
            std::getline(ls >> std::ws, form);
            auto const seq = slce::generate(slce::build_field(p, m));
            auto const g = slce::gcd(slce::Gf2Poly::x_pow_plus_one(seq.period()), slce::poly_from_seq(seq));
            CAPTURE(line);
            CHECK(slce::format_factors(slce::factor(g)) == form);
            ++cases;
        }
        CHECK(cases == 7);
    }
}
