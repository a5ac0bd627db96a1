#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gintail/errors.hpp"
#include "gintail/log_space.hpp"
#include "gintail/specfun.hpp"

using namespace gintail;
namespace sf = gintail::specfun;

namespace {

// independent long-double oracle for log sum_{k=0}^n z^k / k!
double trunc_exp_log_oracle(long n, double z) {
    long double term = 1.0L, sum = 1.0L;
    for (long k = 1; k <= n; ++k) {
        term *= static_cast<long double>(z) / k;
        sum += term;
        if (term < sum * 1e-25L && k > z) break;
    }
    return static_cast<double>(std::log(sum));
}

}  // namespace

TEST_CASE("log-space primitives") {
    CHECK(log_add_exp(std::log(2.0), std::log(3.0)) == doctest::Approx(std::log(5.0)));
    CHECK(log_add_exp(neg_inf, -1.0) == -1.0);
    CHECK(log_sub_exp(std::log(5.0), std::log(3.0)) == doctest::Approx(std::log(2.0)));
    CHECK(log1m_exp(-1e-18) == doctest::Approx(std::log(1e-18)).epsilon(1e-12));
    CHECK(log1m_exp(-40.0) == doctest::Approx(-std::exp(-40.0)).epsilon(1e-12));

    std::vector<double> terms = {std::log(1.0), std::log(2.0), std::log(4.0)};
    CHECK(log_sum_exp(terms) == doctest::Approx(std::log(7.0)));

    auto a = LogValue::from_value(-3.0);
    auto b = LogValue::from_value(5.0);
    CHECK((a + b).value() == doctest::Approx(2.0));
    CHECK((a * b).value() == doctest::Approx(-15.0));
    CHECK((a + LogValue::from_value(3.0)).is_zero());
}

TEST_CASE("incomplete gamma closed forms") {
    // Q(1,x) = e^{-x}
    for (double x : {0.1, 1.0, 5.0, 50.0, 700.0})
        CHECK(sf::gamma_pq_log(1.0, x).log_q == doctest::Approx(-x).epsilon(1e-13));
    // Q(2,x) = (1+x) e^{-x}
    CHECK(sf::gamma_pq_log(2.0, 2.0).log_q ==
          doctest::Approx(std::log(3.0) - 2.0).epsilon(1e-13));
    // half-integer shape: Q(1/2, x) = erfc(sqrt(x))
    CHECK(sf::gamma_pq_log(0.5, 2.25).log_q ==
          doctest::Approx(std::log(std::erfc(1.5))).epsilon(1e-12));
    CHECK(sf::reg_gamma_q(3.0, 0.0) == 1.0);
    CHECK(sf::reg_gamma_p(3.0, 0.0) == 0.0);
}

TEST_CASE("P and Q complement in log space") {
    for (double k : {1.0, 4.0, 17.5, 300.0}) {
        for (double x : {0.3, 3.0, 17.0, 290.0, 400.0}) {
            auto pq = sf::gamma_pq_log(k, x);
            double p = std::exp(pq.log_p), q = std::exp(pq.log_q);
            CHECK(p + q == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("bridge identity: e^{-z} e_{n-1}(z) = Q(n, z)") {
    for (long n : {1L, 2L, 5L, 20L, 100L, 500L, 2000L}) {
        for (double frac : {0.01, 0.5, 1.0, 1.5, 4.0}) {
            double z = frac * n;
            double lhs = sf::trunc_exp_log(n - 1, z).log_abs - z;
            double rhs = sf::gamma_pq_log(static_cast<double>(n), z).log_q;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
        }
    }
}

TEST_CASE("truncated exponential against long-double oracle") {
    for (long n : {0L, 1L, 7L, 40L, 1000L}) {
        for (double z : {0.0, 0.5, 7.3, 35.0, 900.0}) {
            double got = sf::trunc_exp_log(n, z).log_abs;
            double want = trunc_exp_log_oracle(n, z);
            CHECK(got == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("batch Q: parallel vs serial recurrence") {
    for (double x : {0.5, 30.0, 180.0, 220.0}) {
        auto par = sf::batch_log_q(200, x);
        auto ser = sf::batch_log_q_serial(200, x);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i)
            CHECK(par[i] == doctest::Approx(ser[i]).epsilon(1e-10));
    }
}

TEST_CASE("Q recurrence: Q(k+1,x) - Q(k,x) = x^k e^{-x} / k!") {
    double x = 12.0;
    auto lq = sf::batch_log_q(40, x);
    for (int k = 1; k < 40; ++k) {
        double diff = log_sub_exp(lq[k], lq[k - 1]);
        double term = k * std::log(x) - x - std::lgamma(k + 1.0);
        CHECK(diff == doctest::Approx(term).epsilon(1e-9));
    }
}

TEST_CASE("erfcx") {
    CHECK(sf::erfcx(0.0) == doctest::Approx(1.0));
    // continued fraction region against the exp(x^2) erfc composition at the
    // switch point
    CHECK(sf::erfcx(4.0) ==
          doctest::Approx(std::exp(16.0 + std::log(std::erfc(4.0)))).epsilon(1e-10));
    // two-sided bound 2/(x + sqrt(x^2+2)) <= sqrt(pi) erfcx(x) <= 2/(x + sqrt(x^2+4/pi))
    const double spi = std::sqrt(M_PI);
    for (double x : {0.2, 1.0, 3.9, 4.1, 25.0, 1e4}) {
        double v = spi * sf::erfcx(x);
        CHECK(v >= 2.0 / (x + std::sqrt(x * x + 2.0)) * (1 - 1e-12));
        CHECK(v <= 2.0 / (x + std::sqrt(x * x + 4.0 / M_PI)) * (1 + 1e-12));
    }
    // monotone decreasing
    CHECK(sf::erfcx(2.0) > sf::erfcx(2.5));
}

TEST_CASE("uniform asymptotics of the truncated exponential") {
    CHECK(sf::mu(1.0) == 0.0);
    CHECK(sf::mu(2.0) == doctest::Approx(std::sqrt(2.0 - 1.0 - std::log(2.0))));

    // guard band around t = 1 refuses to evaluate
    CHECK_THROWS_AS(sf::trunc_exp_asymptotic(100, 1.05), regime_error);
    CHECK_THROWS_AS(sf::trunc_exp_asymptotic(100, 0.95), regime_error);

    // away from the edge the approximation tracks the exact log closely and
    // improves with n
    double err_small = std::fabs(sf::trunc_exp_asymptotic(400, 1.5).log_abs -
                                 (sf::trunc_exp_log(400, 400 * 1.5).log_abs - 400 * 1.5));
    double err_large = std::fabs(sf::trunc_exp_asymptotic(6400, 1.5).log_abs -
                                 (sf::trunc_exp_log(6400, 6400 * 1.5).log_abs - 6400 * 1.5));
    CHECK(err_small < 0.05);
    CHECK(err_large < err_small);

    // t < 1 branch: value is exponentially close to 1 from below
    auto low = sf::trunc_exp_asymptotic(400, 0.5);
    CHECK(low.log_abs < 0.0);
    CHECK(low.log_abs > -1e-10);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(sf::gamma_pq_log(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sf::gamma_pq_log(1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(sf::trunc_exp_log(-1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sf::erfcx(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(sf::mu(0.0), std::invalid_argument);
}
