#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <degcond/degcond.hpp>

using namespace degcond;

static degree_sequence seq(const std::string& s) { return degree_sequence::parse(s); }

TEST_CASE("murphy f-trace") {
    auto tr = murphy_f_trace(seq("1^5 4^2 6^2 7^3"));
    CHECK(tr.finite == std::vector<int>{1, 1, 1, 4, 7});
    CHECK(tr.str() == "(1, 1, 1, 4, 7, inf)");
    CHECK(murphy_f_trace(seq("0")).finite == std::vector<int>{0});
    CHECK(murphy_f_trace(seq("2^6")).finite == std::vector<int>{2, 2});
}

TEST_CASE("murphy alpha lower bound") {
    CHECK(murphy_alpha(seq("1^5 4^2 6^2 7^3")).rounded == 5);
    CHECK(murphy_alpha(seq("0,0,0")).rounded == 3);
    // 1^1 2^2 3^3 4^4 guarantees alpha >= 4
    CHECK(murphy_alpha(seq("1^1 2^2 3^3 4^4")).rounded == 4);
}

TEST_CASE("caro-wei sum") {
    auto r = caro_wei(seq("1^5 4^2 6^2 7^3"));
    // 5/2 + 2/5 + 2/7 + 3/8, exact
    CHECK(r.exact == rational(997, 280));
    CHECK(r.rounded == 4);
    CHECK(caro_wei(seq("0,0,0")).exact == rational(3));
    CHECK(caro_wei(seq("4^5")).exact == rational(1));
    CHECK(caro_wei(seq("4^5")).rounded == 1);
}

TEST_CASE("clique/chromatic lower bound via the complement") {
    CHECK(clique_chromatic_lower(seq("3^6")).rounded == 2);
    CHECK(clique_chromatic_lower(seq("3^4")).rounded == 4);
    CHECK(clique_chromatic_lower(seq("0,0")).rounded == 1);
}

TEST_CASE("welsh-powell and arboricity upper bounds") {
    CHECK(welsh_powell_chi_upper(seq("2,2,2")).rounded == 3);
    CHECK(welsh_powell_chi_upper(seq("0,0,0,0")).rounded == 1);
    // max-min scan gives 5; cross-checked against the chi-le sweep elsewhere
    CHECK(welsh_powell_chi_upper(seq("1^5 4^2 6^2 7^3")).rounded == 5);

    CHECK(chi_upper_trivial(seq("1^5 4^2 6^2 7^3")).rounded == 8);
    CHECK(arboricity_upper_trivial(seq("1^5 4^2 6^2 7^3")).rounded == 4);
    CHECK(arboricity_upper(seq("2,2,2")).rounded == 2);
    CHECK(arboricity_upper(seq("0,0,0,0")).rounded == 1);
}

TEST_CASE("bounds are sound against every realization, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : enumerate_graphical(n)) {
            long long murphy = murphy_alpha(pi).rounded;
            long long cw = caro_wei(pi).rounded;
            long long wp = welsh_powell_chi_upper(pi).rounded;
            long long wp_triv = chi_upper_trivial(pi).rounded;
            long long arb = arboricity_upper(pi).rounded;
            long long arb_triv = arboricity_upper_trivial(pi).rounded;
            long long omega_lower = clique_chromatic_lower(pi).rounded;
            for (const auto& g : all_realizations(pi)) {
                int alpha = independence_number(g);
                CHECK(alpha >= murphy);
                CHECK(alpha >= cw);
                int chi = chromatic_number(g);
                CHECK(chi <= wp);
                CHECK(chi <= wp_triv);
                int a = vertex_arboricity(g);
                CHECK(a <= arb);
                CHECK(a <= arb_triv);
                CHECK(clique_number(g) >= omega_lower);
                CHECK(chi >= omega_lower);
            }
        }
}

TEST_CASE("piecewise binding-to-toughness bound") {
    CHECK(binding_toughness_bound(rational(2)) == rational(3, 2));
    CHECK(binding_toughness_bound(rational(9, 4)) == rational(2));
    CHECK(binding_toughness_bound(rational(7, 3)) == rational(2));    // 2 + 1/3, m = 2
    CHECK(binding_toughness_bound(rational(11, 5)) == rational(2));   // 2 + 1/5, m = 3
    CHECK(binding_toughness_bound(rational(8, 3)) == rational(5, 2)); // 2 + 2/3, m = 2
    CHECK(binding_toughness_bound(rational(12, 5)) == rational(7, 3)); // 2 + 2/5, m = 3
    CHECK(binding_toughness_bound(rational(3)) == rational(3));       // 1/(2m-1) needs m >= 2
    CHECK(binding_toughness_bound(rational(5, 2)) == rational(5, 2));
    CHECK_THROWS_AS(binding_toughness_bound(rational(3, 2)), param_out_of_domain);
}

TEST_CASE("bounds demand graphical input") {
    degree_sequence bad({1, 3, 3, 3});
    CHECK_THROWS_AS(caro_wei(bad), not_graphical);
    CHECK_THROWS_AS(murphy_alpha(bad), not_graphical);
    CHECK_THROWS_AS(welsh_powell_chi_upper(bad), not_graphical);
}
