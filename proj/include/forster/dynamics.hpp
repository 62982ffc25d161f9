#pragma once

// Unitary time evolution of the 4-state pair through piecewise-constant
// control segments. Propagation is by exact eigendecomposition of the
// (real symmetric) Hamiltonian, so there is no time-stepping error and
// the norm is preserved to machine precision.

#include "forster/pair_model.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <vector>

namespace forster {

/// Four complex amplitudes over the pair basis, normalized.
struct StateVector {
    Eigen::Vector4cd amp = Eigen::Vector4cd::Zero();

    double norm() const { return amp.norm(); }
    double probability(PairBasis b) const { return std::norm(amp[static_cast<int>(b)]); }
    std::array<double, 4> probabilities() const {
        return {std::norm(amp[0]), std::norm(amp[1]), std::norm(amp[2]), std::norm(amp[3])};
    }
};

inline StateVector basis_state(PairBasis b) {
    StateVector s;
    s.amp[static_cast<int>(b)] = 1.0;
    return s;
}

inline StateVector ground_state() { return basis_state(GG); }

/// One piece of piecewise-constant control.
struct PulseSegment {
    double omega = 0.0;     ///< single-atom Rabi frequency, MHz
    double delta = 0.0;     ///< two-atom laser detuning, MHz
    double field = 0.0;     ///< electric field, mV/cm
    double duration = 0.0;  ///< us

    void validate() const {
        if (duration < 0.0)
            throw std::domain_error("PulseSegment: duration must be >= 0");
        if (omega < 0.0)
            throw std::domain_error("PulseSegment: omega must be >= 0");
    }
};

using Sequence = std::vector<PulseSegment>;

/// Eigendecomposition of one segment Hamiltonian, reusable for any duration.
class SegmentPropagator {
public:
    SegmentPropagator(const PulseSegment& seg, double r, const PhysicalParams& params) {
        seg.validate();
        Eigen::SelfAdjointEigenSolver<HamiltonianMatrix> es(
            build_hamiltonian(seg.delta, seg.omega, seg.field, r, params));
        evecs_ = es.eigenvectors();
        evals_ = es.eigenvalues();
    }

    StateVector apply(const StateVector& state, double duration) const {
        Eigen::Vector4cd phased = evecs_.transpose() * state.amp;
        for (int k = 0; k < kBasisSize; ++k)
            phased[k] *= std::polar(1.0, -kTwoPi * evals_[k] * duration);
        StateVector out;
        out.amp = evecs_ * phased;
        return out;
    }

private:
    Eigen::Matrix4d evecs_;
    Eigen::Vector4d evals_;
};

/// Exact propagation exp(-i 2*pi H t)|state>. The input must be normalized
/// to within 1e-6 or a contract error is thrown.
inline StateVector propagate_segment(const StateVector& state, const PulseSegment& seg, double r,
                                     const PhysicalParams& params) {
    if (std::abs(state.norm() - 1.0) > 1e-6)
        throw std::invalid_argument("propagate_segment: input state is not normalized");
    return SegmentPropagator(seg, r, params).apply(state, seg.duration);
}

struct SequenceResult {
    StateVector final_state;
    std::vector<StateVector> trajectory;  ///< state after each segment
};

/// Left-fold of propagate_segment over the sequence.
inline SequenceResult run_sequence(const Sequence& seq, double r, const PhysicalParams& params,
                                   const StateVector& initial) {
    if (seq.empty())
        throw std::invalid_argument("run_sequence: sequence must be non-empty");
    SequenceResult res;
    res.trajectory.reserve(seq.size());
    StateVector s = initial;
    for (const auto& seg : seq) {
        s = propagate_segment(s, seg, r, params);
        res.trajectory.push_back(s);
    }
    res.final_state = s;
    return res;
}

/// Single-atom pi time for Rabi frequency omega (ordinary frequency): 1/(2 omega).
inline double pi_pulse_duration(double omega) {
    if (!(omega > 0.0))
        throw std::domain_error("pi_pulse_duration: omega must be > 0");
    return 1.0 / (2.0 * omega);
}

inline constexpr double kDefaultPrepField = 64.0;  // mV/cm, excitation in the vdW regime

/// Pump-probe sequence: pi pulse at f_prep, free evolution (omega = 0) at
/// the resonance field for t_interact, deexcitation pi pulse at f_prep.
/// Returns the ground-pair probability P_gg. field_offset shifts every
/// segment field (shot-to-shot field noise), clamped to >= 0.
inline double pump_probe_pgg(double t_interact, double r, const PhysicalParams& params,
                             double omega, double f_prep = kDefaultPrepField,
                             double field_offset = 0.0) {
    if (t_interact < 0.0)
        throw std::domain_error("pump_probe_pgg: interaction time must be >= 0");
    const double t_pi = pi_pulse_duration(omega);
    const double f_pulse = std::max(0.0, f_prep + field_offset);
    const double f_free = std::max(0.0, params.f_res + field_offset);
    const Sequence seq{{omega, 0.0, f_pulse, t_pi},
                       {0.0, 0.0, f_free, t_interact},
                       {omega, 0.0, f_pulse, t_pi}};
    return run_sequence(seq, r, params, ground_state()).final_state.probability(GG);
}

struct SpectrumPoint {
    double p_gg;     ///< both atoms back in the ground state
    double p_one_r;  ///< exactly one Rydberg excitation
    double p_rr;     ///< both atoms Rydberg-excited (|dd> or |pf~>)
};

/// One spectroscopy point: from |gg>, a single excitation pulse of one pi
/// duration at (delta, f), then projective populations.
inline SpectrumPoint spectrum_point(double delta, double f, double r,
                                    const PhysicalParams& params, double omega) {
    const PulseSegment pulse{omega, delta, f, pi_pulse_duration(omega)};
    const StateVector s = propagate_segment(ground_state(), pulse, r, params);
    const auto p = s.probabilities();
    return {p[GG], p[DG_SYM], p[DD] + p[PF_SYM]};
}

/// Piecewise-constant approximation of a linear field ramp (risetime in us),
/// for studying the diabaticity of fast field switches.
inline Sequence make_field_ramp(double omega, double delta, double f_start, double f_end,
                                double risetime, int steps = 16) {
    if (risetime < 0.0)
        throw std::domain_error("make_field_ramp: risetime must be >= 0");
    if (steps < 1)
        throw std::domain_error("make_field_ramp: steps must be >= 1");
    Sequence seq;
    if (risetime == 0.0) return seq;
    seq.reserve(steps);
    const double dt = risetime / steps;
    for (int i = 0; i < steps; ++i) {
        const double frac = (i + 0.5) / steps;  // midpoint field of each slice
        seq.push_back({omega, delta, f_start + frac * (f_end - f_start), dt});
    }
    return seq;
}

}  // namespace forster
