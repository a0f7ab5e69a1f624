#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "starris/errors.hpp"
#include "starris/power.hpp"
#include "starris/secrecy.hpp"
#include "starris/units.hpp"

using namespace starris;

namespace {

Scenario fig8_scenario(double d_sd = 100.0, double d_sr = 80.0) {
    Scenario s;
    s.geometry.d_sr = d_sr;
    s.geometry.d_sd_r = s.geometry.d_sd_t = d_sd;
    s.geometry.d_se_r = 110.0;
    s.geometry.d_se_t = 120.0;
    s.surface.zeta = 0.5;
    return s;
}

}  // namespace

TEST_CASE("siso secrecy basics") {
    const double s2 = 3.981071705534969e-13;
    CHECK(secrecy_siso(0.1, 1e-10, 1e-10, s2) == 0.0);
    CHECK(secrecy_siso(0.1, 1e-10, 0.0, s2) == rate_siso(0.1, 1e-10, s2));
    CHECK(secrecy_siso(0.1, 1e-11, 5e-10, s2) == 0.0);  // clamped
    // clamp antisymmetry: swapping the channels sends positives to zero
    CHECK(secrecy_siso(0.1, 5e-10, 1e-11, s2) > 0.0);
}

TEST_CASE("hd secrecy") {
    SUBCASE("no leakage equals the achievable rate") {
        ChannelGains g = fig8_scenario().resolve();
        g.beta_se = g.beta_se_ref = g.beta_se_tra = 0.0;
        g.beta_re_ref = g.beta_re_tra = 0.0;
        CHECK(secrecy_hd_df(0.1, g) == rate_hd_df(0.1, g));
    }
    SUBCASE("fig9a value at d_sd = 80, p = 0 dBm") {
        const Scenario sc = fig8_scenario(80.0);
        const ChannelGains g = sc.resolve();
        CHECK(oracle::rel_err(secrecy_hd_df(dbm_to_watt(0.0), g), 1.8437424096889628) < 1e-12);
    }
    SUBCASE("eavesdropper co-located with the destination hears exactly the relay rate") {
        Scenario sc = fig8_scenario();
        sc.geometry.d_se_r = sc.geometry.d_sd_r;
        sc.geometry.d_v_e = sc.geometry.d_v;
        ChannelGains g = sc.resolve();
        // give the eavesdropper the destination's link model wholesale
        g.beta_se = g.beta_se_ref = g.beta_sd_ref;
        g.beta_re_ref = g.beta_rd_ref;
        const double p = dbm_to_watt(10.0);
        CHECK(secrecy_hd_df(p, g) == 0.0);
        const PowerSplit split = hd_power_split(p, g);
        const double rate_e =
            0.5 * log2_1p((split.p1 * g.beta_se_ref + split.p2 * g.beta_re_ref) / g.sigma2);
        CHECK(oracle::rel_err(rate_e, rate_hd_df(p, g)) < 1e-12);
    }
    SUBCASE("strongest-phase model never reports less secrecy than the informed sum") {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 30; ++i) {
            const Scenario sc = oracle::random_scenario(rng);
            const ChannelGains g = sc.resolve();
            try {
                const double sum = secrecy_hd_df(sc.p_watt(), g, Zone::reflection,
                                                 HdEavesdropperModel::informed_sum);
                const double strongest = secrecy_hd_df(sc.p_watt(), g, Zone::reflection,
                                                       HdEavesdropperModel::strongest_phase);
                CHECK(strongest >= sum);
            } catch (const relay_not_beneficial&) {
            }
        }
    }
}

TEST_CASE("fd secrecy") {
    SUBCASE("no leakage equals the optimal rate") {
        ChannelGains g = fig8_scenario().resolve();
        g.beta_se = g.beta_se_ref = g.beta_se_tra = 0.0;
        g.beta_re_ref = g.beta_re_tra = 0.0;
        CHECK(secrecy_fd_df(0.1, g) == rate_fd_df_opt(0.1, g));
    }
    SUBCASE("fig8a value at p = 10 dBm") {
        const ChannelGains g = fig8_scenario().resolve();
        CHECK(oracle::rel_err(secrecy_fd_df(dbm_to_watt(10.0), g), 0.88430099652007702) < 1e-12);
    }
    SUBCASE("zero power leaks nothing and carries nothing") {
        const ChannelGains g = fig8_scenario().resolve();
        CHECK(secrecy_fd_df(0.0, g) == 0.0);
    }
}

TEST_CASE("ris secrecy") {
    SUBCASE("no elements collapses to siso secrecy") {
        const ChannelGains g = fig8_scenario().resolve();
        SurfaceConfig surf;
        surf.n_ref = 0.0;
        CHECK(oracle::rel_err(secrecy_ris(0.1, surf, g),
                              secrecy_siso(0.1, g.beta_sd_ref, g.beta_se_ref, g.sigma2)) < 1e-12);
    }
    SUBCASE("fig12b value: 500 elements, p = 5 dBm") {
        const ChannelGains g = fig8_scenario(100.0, 90.0).resolve();
        SurfaceConfig surf;
        surf.n_ref = 500.0;
        CHECK(oracle::rel_err(secrecy_ris(dbm_to_watt(5.0), surf, g), 8.268254165523192) < 1e-12);
    }
    SUBCASE("monotone in the element count") {
        const ChannelGains g = fig8_scenario().resolve();
        SurfaceConfig surf;
        double prev = -1.0;
        for (double n = 0.0; n <= 3000.0; n += 50.0) {
            surf.n_ref = n;
            const double s = secrecy_ris(0.01, surf, g);
            CHECK(s >= prev);
            prev = s;
        }
    }
}

TEST_CASE("star secrecy") {
    const ChannelGains g = fig8_scenario().resolve();
    SUBCASE("zeta = 1 starves the transmission zone down to siso") {
        SurfaceConfig surf;
        surf.zeta = 1.0;
        surf.n_ref = 400.0;
        CHECK(oracle::rel_err(secrecy_star(Zone::transmission, 0.1, surf, g),
                              secrecy_siso(0.1, g.beta_sd_tra, g.beta_se_tra, g.sigma2)) < 1e-12);
    }
    SUBCASE("matched gains and the balanced split are symmetric") {
        ChannelGains sym = g;
        sym.beta_sd_tra = sym.beta_sd_ref;
        sym.beta_rd_tra = sym.beta_rd_ref;
        sym.beta_se_tra = sym.beta_se_ref;
        sym.beta_re_tra = sym.beta_re_ref;
        SurfaceConfig surf;
        surf.zeta = 1.0 / std::sqrt(2.0);
        surf.split_k = 0.5;
        surf.n_ref = 600.0;
        CHECK(oracle::rel_err(secrecy_star(Zone::reflection, 0.1, surf, sym),
                              secrecy_star(Zone::transmission, 0.1, surf, sym)) < 1e-12);
    }
    SUBCASE("collapses to ris secrecy at zeta = 1, K = 1") {
        SurfaceConfig surf;
        surf.zeta = 1.0;
        surf.split_k = 1.0;
        surf.n_ref = 350.0;
        surf.alpha_r = surf.alpha;
        CHECK(secrecy_star(Zone::reflection, 0.1, surf, g) == secrecy_ris(0.1, surf, g));
    }
}

TEST_CASE("secrecy never exceeds the achievable rate") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 200; ++i) {
        const Scenario sc = oracle::random_scenario(rng);
        const ChannelGains g = sc.resolve();
        const double p = sc.p_watt();
        const auto sandwich = [&](double secrecy, double rate) {
            CHECK(secrecy >= 0.0);
            CHECK(secrecy <= rate * (1.0 + 1e-12));
        };
        sandwich(secrecy_siso(p, g.beta_sd_ref, g.beta_se_ref, g.sigma2),
                 rate_siso(p, g.beta_sd_ref, g.sigma2));
        sandwich(secrecy_fd_df(p, g), rate_fd_df_opt(p, g));
        sandwich(secrecy_ris(p, sc.surface, g), rate_ris(p, sc.surface, g));
        sandwich(secrecy_star(Zone::reflection, p, sc.surface, g),
                 rate_star_ref(p, sc.surface, g));
        sandwich(secrecy_star(Zone::transmission, p, sc.surface, g),
                 rate_star_tra(p, sc.surface, g));
        try {
            sandwich(secrecy_hd_df(p, g), rate_hd_df(p, g));
        } catch (const relay_not_beneficial&) {
        }
    }
}
