#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "oracles.hpp"
#include "starris/channel.hpp"
#include "starris/errors.hpp"
#include "starris/units.hpp"

using namespace starris;

TEST_CASE("pathloss LoS substitution") {
    PathLossParams p{3.0, 5.0, 5.0, true};
    const double expected = 10.0 - 28.0 - 20.0 * std::log10(3.0) - 44.0;
    CHECK(pathloss_db(100.0, p) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(pathloss_db(100.0, p) == doctest::Approx(-71.542).epsilon(1e-5));

    PathLossParams p2{1.0, 0.0, 0.0, true};
    CHECK(pathloss_db(10.0, p2) == doctest::Approx(-50.0).epsilon(1e-14));
}

TEST_CASE("pathloss NLoS against high-precision reference") {
    PathLossParams p{3.0, 5.0, 0.0, false};
    CHECK(oracle::rel_err(pathloss_db(80.0, p), -99.948555145315553) < 1e-14);
}

TEST_CASE("pathloss rejects distances below the model floor") {
    PathLossParams p{3.0, 0.0, 0.0, true};
    CHECK_THROWS_AS(pathloss_db(9.999, p), model_error);
    CHECK_THROWS_AS(pathloss_db(0.0, p), model_error);
    CHECK_NOTHROW(pathloss_db(10.0, p));
}

TEST_CASE("pathloss is strictly decreasing in distance") {
    for (bool los : {true, false}) {
        PathLossParams p{3.0, 5.0, 0.0, los};
        double prev = pathloss_db(10.0, p);
        for (double d = 11.0; d < 500.0; d += 7.3) {
            const double cur = pathloss_db(d, p);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("noise power") {
    CHECK(noise_power_dbm({10e6, 10.0}) == doctest::Approx(-94.0).epsilon(1e-14));
    CHECK(noise_power_dbm({1.0, 0.0}) == doctest::Approx(-174.0).epsilon(1e-14));
    CHECK(oracle::rel_err(noise_power_dbm({20e6, 7.0}), -93.989700043360188) < 1e-14);
    CHECK_THROWS_AS(noise_power_dbm({0.0, 0.0}), model_error);
}

TEST_CASE("unit conversions") {
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(dbm_to_watt(30.0) == 1.0);
    CHECK(oracle::rel_err(dbm_to_watt(-94.0), 3.9810717055349725e-13) < 1e-13);
    // round trip identity
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-160.0, 60.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        CHECK(oracle::rel_err(linear_to_db(db_to_linear(x)), x) < 1e-12);
    }
}

TEST_CASE("resolve_gains rejects degenerate geometry and names the link") {
    Geometry g;
    g.d_sr = 100.0;
    g.d_sd_r = 100.0;
    g.d_sd_t = 100.0;
    g.d_v = 0.0;
    try {
        resolve_gains(g, RadioParams{}, NoiseParams{}, -130.0);
        FAIL("expected model_error");
    } catch (const model_error& e) {
        CHECK(std::string(e.what()).find("surface->destination") != std::string::npos);
    }
}

TEST_CASE("resolve_gains distances follow the planar layout") {
    RadioParams radio;
    NoiseParams noise;

    // surface and destination 10 m apart when the axial coordinates match
    Geometry fig3a;
    const ChannelGains g1 = resolve_gains(fig3a, radio, noise, -130.0);
    const double rd10 = db_to_linear(
        pathloss_db(10.0, {radio.carrier_frequency_ghz, radio.gain_surface_dbi,
                           radio.gain_destination_dbi, radio.los.rd}));
    CHECK(g1.beta_rd_ref == rd10);

    Geometry g8;
    g8.d_sr = 80.0;
    g8.d_sd_r = g8.d_sd_t = 100.0;
    const ChannelGains g2 = resolve_gains(g8, radio, noise, -130.0);
    const double sd = db_to_linear(
        pathloss_db(std::hypot(100.0, 10.0), {radio.carrier_frequency_ghz, radio.gain_source_dbi,
                                              radio.gain_destination_dbi, radio.los.sd}));
    const double rd = db_to_linear(
        pathloss_db(std::hypot(20.0, 10.0), {radio.carrier_frequency_ghz, radio.gain_surface_dbi,
                                             radio.gain_destination_dbi, radio.los.rd}));
    CHECK(g2.beta_sd_ref == sd);
    CHECK(g2.beta_rd_ref == rd);
    CHECK(std::hypot(100.0, 10.0) == doctest::Approx(100.499).epsilon(1e-4));
    CHECK(std::hypot(20.0, 10.0) == doctest::Approx(22.361).epsilon(1e-4));
}

TEST_CASE("symmetric zones give identical direct gains") {
    Geometry g;
    g.d_sd_r = g.d_sd_t = 87.5;
    const ChannelGains gains = resolve_gains(g, RadioParams{}, NoiseParams{}, -130.0);
    CHECK(gains.beta_sd_ref == gains.beta_sd_tra);
    CHECK(gains.beta_rd_ref == gains.beta_rd_tra);
}

TEST_CASE("resolve_gains is deterministic") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const Scenario s = oracle::random_scenario(rng);
        const ChannelGains a = s.resolve();
        const ChannelGains b = s.resolve();
        CHECK(std::memcmp(&a, &b, sizeof(ChannelGains)) == 0);
    }
}

TEST_CASE("beta_li comes from its configured value, not geometry") {
    Geometry g;
    const ChannelGains gains = resolve_gains(g, RadioParams{}, NoiseParams{}, -130.0);
    CHECK(gains.beta_li == db_to_linear(-130.0));
    CHECK(gains.sigma2 == dbm_to_watt(noise_power_dbm(NoiseParams{})));
}

TEST_CASE("gain validation") {
    ChannelGains g;
    g.sigma2 = 1e-13;
    CHECK_NOTHROW(g.validate());
    g.beta_li = 1.5;
    CHECK_THROWS_AS(g.validate(), model_error);
    g.beta_li = 0.0;
    g.sigma2 = 0.0;
    CHECK_THROWS_AS(g.validate(), model_error);
}
