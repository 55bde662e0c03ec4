#include "maserpairs/fock.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "maserpairs/detail/accum.hpp"
#include "maserpairs/errors.hpp"

namespace maserpairs::fock {

namespace {

// Scaled significand m * 2^e, m in [0.5, 1) or exactly 0. Running products of
// the steady-state factors can leave the double range in either direction for
// large pump rates; tracking the base-2 exponent keeps every multiplication
// at full double precision.
struct Scaled {
    double m = 0.0;
    long e = 0;

    static Scaled one() { return {0.5, 1}; }

    void mul(double f) {
        if (f == 0.0 || m == 0.0) {
            m = 0.0;
            e = 0;
            return;
        }
        int de = 0;
        m = std::frexp(m * f, &de);
        e += de;
    }

    void add(const Scaled& other) {
        if (other.m == 0.0) return;
        if (m == 0.0) {
            *this = other;
            return;
        }
        int de = 0;
        if (e >= other.e) {
            m = std::frexp(m + std::ldexp(other.m, static_cast<int>(
                                    std::max<long>(other.e - e, -2000))), &de);
            e += de;
        } else {
            m = std::frexp(other.m + std::ldexp(m, static_cast<int>(
                                    std::max<long>(e - other.e, -2000))), &de);
            e = other.e + de;
        }
    }

    // this / other as a plain double; under/overflow saturates to 0 / inf.
    double ratio(const Scaled& other) const {
        if (m == 0.0) return 0.0;
        const long de = e - other.e;
        if (de < -2000) return 0.0;
        if (de > 2000) return std::numeric_limits<double>::infinity();
        return std::ldexp(m / other.m, static_cast<int>(de));
    }
};

PhotonDistribution thermal_distribution(double nu, const TruncationPolicy& trunc) {
    PhotonDistribution out;
    if (nu == 0.0) {
        out.probs = {1.0};
        out.tail_bound = 0.0;
        return out;
    }
    const double ratio = nu / (nu + 1.0);
    std::vector<double> w{1.0};
    double tail = ratio; // remaining geometric mass relative to sum so far is < ratio^{n+1}
    while (tail > trunc.tail_eps) {
        if (w.size() > trunc.n_cap)
            throw TruncationOverflow("thermal distribution: n_cap=" + std::to_string(trunc.n_cap) +
                                     " reached before tail_eps=" + std::to_string(trunc.tail_eps));
        w.push_back(w.back() * ratio);
        tail *= ratio;
    }
    detail::NeumaierSum z;
    for (double x : w) z.add(x);
    const double norm = z.value();
    out.probs.reserve(w.size());
    for (double x : w) out.probs.push_back(x / norm);
    out.tail_bound = tail;
    return out;
}

} // namespace

void MaserParams::require_valid() const {
    if (!(std::isfinite(nex) && nex >= 0.0))
        throw std::invalid_argument("MaserParams: nex must be finite and >= 0");
    if (!(std::isfinite(nu) && nu >= 0.0))
        throw std::invalid_argument("MaserParams: nu must be finite and >= 0");
    if (!(std::isfinite(phi) && phi >= 0.0))
        throw std::invalid_argument("MaserParams: phi must be finite and >= 0");
}

void TruncationPolicy::require_valid() const {
    if (!(tail_eps > 0.0 && tail_eps < 1.0))
        throw std::invalid_argument("TruncationPolicy: tail_eps must be in (0,1)");
    if (n_cap < 1)
        throw std::invalid_argument("TruncationPolicy: n_cap must be >= 1");
}

RabiCoefficients rabi_coefficients(std::size_t n, double phi) {
    const double angle = phi * std::sqrt(static_cast<double>(n) + 1.0);
    return {std::cos(angle), std::sin(angle)};
}

PhotonDistribution steady_state(const MaserParams& params, const TruncationPolicy& trunc) {
    params.require_valid();
    trunc.require_valid();

    // phi = 0 is the analytic thermal limit; the product loop would hit
    // sin^2(0)/n = 0/0-free but pointless factors, so take the closed form.
    if (params.phi == 0.0) return thermal_distribution(params.nu, trunc);

    const double nu = params.nu;
    const double nex = params.nex;
    const double phi = params.phi;

    std::vector<Scaled> weights{Scaled::one()};
    Scaled total = Scaled::one();
    double rel_tail = 1.0; // bound on omitted mass relative to the kept mass

    Scaled w = Scaled::one();
    for (std::size_t n = 1;; ++n) {
        if (n > trunc.n_cap)
            throw TruncationOverflow("steady_state: n_cap=" + std::to_string(trunc.n_cap) +
                                     " reached before tail bound (nex=" + std::to_string(nex) +
                                     ", nu=" + std::to_string(nu) + ", phi=" + std::to_string(phi) + ")");
        const double sn = std::sin(phi * std::sqrt(static_cast<double>(n)));
        const double factor = (nu + nex * sn * sn / static_cast<double>(n)) / (nu + 1.0);
        w.mul(factor);
        if (w.m == 0.0) {
            // Exact zero factor: every later weight contains it, so the
            // ladder is cut here with no omitted mass (trapping cut-off).
            rel_tail = 0.0;
            break;
        }
        weights.push_back(w);
        total.add(w);

        // Every factor beyond n is bounded by r; the remaining mass is then
        // below w * r / (1 - r) whenever r < 1.
        const double r = (nu + nex / static_cast<double>(n + 1)) / (nu + 1.0);
        if (r < 1.0) {
            const double bound = w.ratio(total) * r / (1.0 - r);
            if (bound <= trunc.tail_eps) {
                rel_tail = bound;
                break;
            }
        }
    }

    // Normalize in units of the largest weight to avoid range trouble.
    long emax = weights.front().e;
    for (const auto& x : weights) emax = std::max(emax, x.e);
    detail::NeumaierSum z;
    std::vector<double> raw(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const long de = weights[i].e - emax;
        raw[i] = (de < -2000) ? 0.0 : std::ldexp(weights[i].m, static_cast<int>(de));
        z.add(raw[i]);
    }
    const double norm = z.value();

    PhotonDistribution out;
    out.probs.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out.probs[i] = raw[i] / norm;
    out.tail_bound = rel_tail;
    return out;
}

PhotonDistribution apply_atom_passage(const PhotonDistribution& dist, double phi) {
    PhotonDistribution out;
    out.tail_bound = dist.tail_bound;
    out.probs.resize(dist.probs.size() + 1, 0.0);
    for (std::size_t n = 0; n < out.probs.size(); ++n) {
        double acc = 0.0;
        if (n < dist.probs.size()) {
            const double c = std::cos(phi * std::sqrt(static_cast<double>(n) + 1.0));
            acc += c * c * dist.probs[n];
        }
        if (n >= 1) {
            const double s = std::sin(phi * std::sqrt(static_cast<double>(n)));
            acc += s * s * dist.probs[n - 1];
        }
        out.probs[n] = acc;
    }
    while (out.probs.size() > 1 && out.probs.back() == 0.0) out.probs.pop_back();
    return out;
}

double mean_photon(const PhotonDistribution& dist) {
    detail::NeumaierSum acc;
    for (std::size_t n = 1; n < dist.probs.size(); ++n)
        acc.add(static_cast<double>(n) * dist.probs[n]);
    return acc.value();
}

} // namespace maserpairs::fock
