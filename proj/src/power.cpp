#include "starris/power.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "starris/errors.hpp"
#include "starris/units.hpp"

namespace starris {

RelayPower optimal_p2_fd(double p, const ChannelGains& gains, Zone relay_zone) {
    if (!(p > 0.0)) throw model_error("optimal_p2_fd: p must be positive");
    const double b_sr = gains.beta_sr;
    const double b_rd = gains.rd(relay_zone);
    const double b_sd = gains.sd(relay_zone);
    const double b_li = gains.beta_li;
    const double s2 = gains.sigma2;

    // Hop balance p1*b_sr*(p1*b_sd + s2) = p2*b_rd*(p2*b_li + s2) with
    // p1 = 2p - p2 is the quadratic a2*p2^2 + b2*p2 + c2 = 0:
    const double a2 = b_rd * b_li - b_sr * b_sd;
    const double b2 = s2 * (b_rd + b_sr) + 4.0 * p * b_sr * b_sd;
    const double c2 = -(4.0 * b_sr * b_sd * p * p + 2.0 * b_sr * s2 * p);
    const double disc = b2 * b2 - 4.0 * a2 * c2;
    // Nonnegative for nonnegative gains: disc = b2^2 - 4*a2*c2 and a2*c2
    // expands to terms that can only cancel against part of b2^2.
    assert(disc >= 0.0);
    // b2 > 0 always, so the root c2/q is cancellation-free. It is also the
    // one inside [0, 2p] for either sign of a2, and it degrades gracefully
    // to the linear solution -c2/b2 as a2 -> 0, which covers the
    // b_rd*b_li == b_sr*b_sd denominator of the textbook form.
    const double q = -(b2 + std::sqrt(disc)) / 2.0;
    double p2 = c2 / q;

    RelayPower out;
    out.clamped = p2 < 0.0 || p2 > 2.0 * p;
    out.p2 = std::clamp(p2, 0.0, 2.0 * p);
    return out;
}

PowerSplit hd_power_split(double p, const ChannelGains& gains, Zone relay_zone) {
    const double b_sr = gains.beta_sr;
    const double b_rd = gains.rd(relay_zone);
    const double b_sd = gains.sd(relay_zone);
    const double den = b_sr + b_rd - b_sd;
    if (!(b_sr >= b_sd) || !(den > 0.0)) {
        std::ostringstream os;
        os << "HD-DF relaying not beneficial: beta_sr = " << b_sr << ", beta_sd = " << b_sd
           << ", beta_sr + beta_rd - beta_sd = " << den;
        throw relay_not_beneficial(os.str());
    }
    PowerSplit split;
    split.p1 = 2.0 * p * b_rd / den;
    split.p2 = 2.0 * p * (b_sr - b_sd) / den;
    split.p_avg = p;
    return split;
}

double required_power_fd(double target_rate, const ChannelGains& gains, Zone relay_zone) {
    if (!(target_rate > 0.0)) throw model_error("required_power_fd: target rate must be positive");
    const double b_sr = gains.beta_sr;
    const double b_rd = gains.rd(relay_zone);
    const double b_sd = gains.sd(relay_zone);
    const double b_li = gains.beta_li;
    const double s2 = gains.sigma2;
    const double g = std::exp2(target_rate) - 1.0;

    const double c1 = (s2 * (b_rd + b_sr)) * (s2 * (b_rd + b_sr));
    const double c2 = 16.0 * b_sr * b_sd * b_rd * b_li;
    const double c3 = 8.0 * b_sr * b_rd * s2 * (b_sd + b_li);
    const double c4 = s2 * (b_rd + b_sr);
    const double c5 = 4.0 * b_sr * b_sd;
    const double c6 = 2.0 * (b_rd * b_li - b_sr * b_sd);
    const double c7 = g * b_sd + b_rd;
    const double c8 = 2.0 * g * b_sd;
    const double c9 = g * s2;

    const double u = c6 * c8 + c5 * c7;
    const double v = c6 * c9 + c4 * c7;
    const double a = u * u - c7 * c7 * c2;
    const double b = 2.0 * u * v - c7 * c7 * c3;
    const double c = v * v - c7 * c7 * c1;

    // a vanishes identically when b_sd = 0; treat anything far below the
    // scale of its two constituents as the linear case.
    const double a_scale = std::max(u * u, std::abs(c7 * c7 * c2));
    if (a_scale == 0.0 || std::abs(a) < 1e-12 * a_scale) {
        if (b == 0.0) throw model_error("required_power_fd: degenerate coefficients");
        const double lin = -c / b;
        if (!(lin > 0.0)) throw model_error("required_power_fd: target rate infeasible");
        return lin;
    }

    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        std::ostringstream os;
        os << "required_power_fd: target rate " << target_rate << " bit/s/Hz is infeasible";
        throw model_error(os.str());
    }
    // Cancellation-free evaluation of the (-b + sqrt(disc)) / (2a) root.
    const double q = -(b + std::copysign(std::sqrt(disc), b)) / 2.0;
    const double root = b >= 0.0 ? c / q : q / a;
    if (!(root > 0.0)) {
        std::ostringstream os;
        os << "required_power_fd: no positive power reaches " << target_rate << " bit/s/Hz";
        throw model_error(os.str());
    }
    return root;
}

}  // namespace starris
