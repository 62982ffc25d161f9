#pragma once

// Pair-state model for two Rydberg atoms near an electric-field-tuned
// Forster resonance: the Stark-tuned pair-state defect, the dipolar
// coupling between |dd> and the symmetric |pf~>, and the 4-level
// rotating-frame Hamiltonian of the two-photon excitation ladder
// gg -> dg~ -> dd.
//
// Unit conventions, used throughout the library:
//   energies stored as E/h in MHz, time in us, distance in um,
//   field in mV/cm, C3 in MHz*um^3.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>

namespace forster {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Physics knobs of the two-atom model.
struct PhysicalParams {
    double c3 = 2540.0;      ///< dipolar coupling constant, MHz*um^3
    double delta0 = 8.5;     ///< zero-field pair-state defect, MHz
    double f_res = 32.0;     ///< resonance field, mV/cm
    int stark_exponent = 4;  ///< exponent of the defect model, >= 2

    void validate() const {
        if (!(c3 > 0.0))
            throw std::domain_error("PhysicalParams: c3 must be > 0");
        if (!(f_res > 0.0))
            throw std::domain_error("PhysicalParams: f_res must be > 0");
        if (stark_exponent < 2)
            throw std::domain_error("PhysicalParams: stark_exponent must be >= 2");
    }

    bool operator==(const PhysicalParams&) const = default;
};

/// Interatomic geometry. The model targets distances of 5-20 um; the
/// measurements it mirrors explore roughly 8-15 um.
struct Geometry {
    double r = 8.1;  ///< interatomic distance, um

    static constexpr double kRangeMin = 5.0;   // um, documented model range
    static constexpr double kRangeMax = 20.0;

    void validate() const {
        if (!(r > 0.0))
            throw std::domain_error("Geometry: r must be > 0");
    }

    bool operator==(const Geometry&) const = default;
};

/// Fixed basis ordering used everywhere (matrix indices, output columns):
/// |gg>, |dg~> = (|dg>+|gd>)/sqrt2, |dd>, |pf~> = (|pf>+|fp>)/sqrt2.
enum PairBasis : int { GG = 0, DG_SYM = 1, DD = 2, PF_SYM = 3 };

inline constexpr int kBasisSize = 4;

/// Pair Hamiltonian as energies over h, MHz. Real symmetric under the
/// phase conventions below (all couplings real and positive).
using HamiltonianMatrix = Eigen::Matrix4d;

/// Stark-tuned pair-state defect Delta(F) = Delta0 * (1 - (F/F_res)^p).
/// Evaluates to delta0 at F = 0 and vanishes exactly at F = f_res.
inline double forster_defect(double f, const PhysicalParams& params) {
    if (f < 0.0)
        throw std::domain_error("forster_defect: field must be >= 0, got " + std::to_string(f));
    return params.delta0 * (1.0 - std::pow(f / params.f_res, params.stark_exponent));
}

/// Dipolar coupling V = sqrt2 * C3 / R^3 between |dd> and |pf~>, MHz.
inline double dipole_coupling(double r, const PhysicalParams& params) {
    if (!(r > 0.0))
        throw std::domain_error("dipole_coupling: distance must be > 0, got " + std::to_string(r));
    return kSqrt2 * params.c3 / (r * r * r);
}

/// Rotating-frame Hamiltonian of the driven pair.
///
/// delta is the two-atom laser detuning (laser offset from the |dd>
/// position), omega the single-atom effective Rabi frequency; both MHz.
/// In basis order [GG, DG_SYM, DD, PF_SYM]:
///   diag = [0, -delta/2, -delta, -delta + Delta(F)]
///   <GG|H|DG_SYM> = <DG_SYM|H|DD> = sqrt2 * omega / 2 (collective factor)
///   <DD|H|PF_SYM> = V(r)
inline HamiltonianMatrix build_hamiltonian(double delta, double omega, double f, double r,
                                           const PhysicalParams& params) {
    if (omega < 0.0)
        throw std::domain_error("build_hamiltonian: omega must be >= 0");
    const double defect = forster_defect(f, params);
    const double v = dipole_coupling(r, params);
    const double g = kSqrt2 * omega / 2.0;
    HamiltonianMatrix h;
    h << 0.0, g, 0.0, 0.0,
         g, -delta / 2.0, g, 0.0,
         0.0, g, -delta, v,
         0.0, 0.0, v, -delta + defect;
    return h;
}

/// Eigenstructure of the undriven {DD, PF_SYM} block at a given field.
struct EigenSplitting {
    std::array<double, 2> eigenvalues;  ///< ascending, MHz, relative to unperturbed |dd>
    double splitting;                   ///< Delta E = sqrt(Delta^2 + 4 V^2), MHz
    double mixing_angle;                ///< rad, in [0, pi/4]; pi/4 at resonance
};

/// Diagonalizes the interacting 2x2 block [[0, V], [V, Delta(F)]].
/// At F = f_res the splitting is the avoided-crossing minimum 2*sqrt2*C3/R^3.
inline EigenSplitting pair_eigensplitting(double f, double r, const PhysicalParams& params) {
    const double d = forster_defect(f, params);
    const double v = dipole_coupling(r, params);
    const double s = std::sqrt(d * d + 4.0 * v * v);
    EigenSplitting out;
    out.eigenvalues = {0.5 * (d - s), 0.5 * (d + s)};
    out.splitting = s;
    out.mixing_angle = 0.5 * std::atan2(2.0 * std::abs(v), std::abs(d));
    return out;
}

enum class VdwMode { Perturbative, Exact };

/// Energy shift of the dd-like branch relative to unperturbed |dd>, MHz.
/// Perturbative: -V^2/Delta (the R^-6 van der Waals limit). Exact: the
/// corresponding eigenvalue of the 2x2 block, valid at any detuning.
inline double vdw_shift(double f, double r, const PhysicalParams& params, VdwMode mode) {
    const double d = forster_defect(f, params);
    const double v = dipole_coupling(r, params);
    if (mode == VdwMode::Perturbative) {
        if (d == 0.0)
            throw std::domain_error(
                "vdw_shift: defect vanishes at this field; use VdwMode::Exact");
        if (!(std::abs(v) < std::abs(d)))
            std::cerr << "vdw_shift: warning: |V| >= |Delta|, perturbative result unreliable\n";
        return -v * v / d;
    }
    const double sgn = d < 0.0 ? -1.0 : 1.0;  // branch continuous from Delta -> 0+
    return 0.5 * d - sgn * std::sqrt(0.25 * d * d + v * v);
}

/// Root of Delta(F) = 0 on [0, 4*f_res] by bisection, |Delta| < 1e-9 MHz.
inline double find_resonance_field(const PhysicalParams& params) {
    constexpr double kTol = 1e-9;  // MHz
    double lo = 0.0;
    double hi = 4.0 * params.f_res;
    double d_lo = forster_defect(lo, params);
    double d_hi = forster_defect(hi, params);
    if (std::abs(d_lo) < kTol) return lo;
    if (std::abs(d_hi) < kTol) return hi;
    if (d_lo * d_hi > 0.0)
        throw std::runtime_error("find_resonance_field: no sign change of the defect on [0, 4*f_res]");
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double d_mid = forster_defect(mid, params);
        if (std::abs(d_mid) < kTol) return mid;
        if ((d_mid < 0.0) == (d_lo < 0.0)) {
            lo = mid;
            d_lo = d_mid;
        } else {
            hi = mid;
        }
    }
    return mid;
}

}  // namespace forster
