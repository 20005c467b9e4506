#ifndef QCORR_COMMON_BATH_HPP
#define QCORR_COMMON_BATH_HPP

#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/reservoir.hpp"
#include "qcorr/xstate.hpp"

namespace qcorr {

/// Ladder system coupled to a damped pseudomode. The master equation is
///   drho/dt = -i [H, rho] + lambda (2 A rho A+ - A+A rho - rho A+A),
/// so the pseudomode amplitude decays at rate lambda (the Lorentzian width).
/// H = sum_j c_j (|j+1><j| (x) A + h.c.) in the resonant frame; for the
/// two-qubit common bath the ladder is {|00>, |+>, |11>} with both couplings
/// equal to sqrt(2) Omega0, Omega0 = sqrt(gamma0 lambda / 2).
struct PseudomodeSystem {
    int levels = 0;   ///< ladder dimension
    int fock_dim = 0; ///< pseudomode Fock-space dimension (cutoff + 1)
    int dim = 0;      ///< levels * fock_dim; index = fock_dim * L + n
    double lambda = 0.0;
    ComplexMatrix hamiltonian;
    ComplexMatrix lowering;       ///< I (x) A
    ComplexMatrix number_op;      ///< A+A
    ComplexMatrix total_excitation; ///< N_ladder (x) I + I (x) N_pseudomode

    int index(int level, int n) const { return fock_dim * level + n; }
};

/// Three-level ladder + pseudomode generator for the common reservoir.
/// fock_dim = 3 (two excitations) is exact for Bell-like initial states: the
/// Hamiltonian conserves total excitation and the dissipator only lowers it.
/// Larger cutoffs are accepted for the tests that demonstrate this.
PseudomodeSystem build_common_generator(const ReservoirParams& r, int fock_dim = 3);

/// Two-level + pseudomode variant used to calibrate the coupling convention
/// against the closed-form amplitude q(t). omega0_scale multiplies the
/// coupling and exists so the calibration suite can prove its own sensitivity.
PseudomodeSystem build_single_qubit_generator(const ReservoirParams& r, double omega0_scale = 1.0,
                                              int fock_dim = 2);

/// Right-hand side and classical 4th-order stepper for the master equation.
/// Work buffers live in the object; one instance per trajectory.
class MasterEquationIntegrator {
public:
    explicit MasterEquationIntegrator(const PseudomodeSystem& sys);

    /// out = -i[H, rho] + lambda (2 A rho A+ - {A+A, rho})
    void derivative(const ComplexMatrix& rho, ComplexMatrix& out);
    /// One fixed RK4 step in place.
    void step(ComplexMatrix& rho, double dt);

private:
    const PseudomodeSystem& sys_;
    ComplexMatrix t1_, t2_, t3_, k1_, k2_, k3_, k4_, stage_;
};

/// Density operator of the ladder (x) pseudomode space plus the population of
/// the decoupled |-> two-qubit state (constant under the dynamics; zero for
/// Bell-like initial states).
struct LadderState {
    ComplexMatrix rho;
    double p_minus = 0.0;

    /// Hermiticity / trace (Tr rho + p_minus = 1) / positivity checks.
    void validate(const Tolerances& tol = {1e-9, 1e-8, 1e-8}) const;
};

LadderState make_initial_ladder(const BellLikeInitial& init, const PseudomodeSystem& sys);

struct IntegratorConfig {
    double dt = 0.01;
    double t_max = 50.0;
    int record_every = 1;

    /// dt must stay below 0.02 min(1/lambda, 1/Omega0, 1/gamma0).
    void validate(const ReservoirParams& r) const;
    static double max_dt(const ReservoirParams& r);
};

/// One recorded point of a common-reservoir trajectory, with the integrator
/// health figures the invariants are checked against.
struct LadderRecord {
    double t = 0.0;
    XState x;
    double trace_defect = 0.0;   ///< |Tr rho + p_minus - 1|
    double min_eigenvalue = 0.0;
    double excitation = 0.0;     ///< <N_ladder + N_pseudomode>
    double im_coherence = 0.0;   ///< |Im <g| sigma |e>| (must stay ~0 on resonance)
};

/// Exact trajectory of the Bell-like state under the common reservoir.
/// Records every cfg.record_every steps (t = 0 included). Throws
/// integration_error when an invariant drifts beyond tolerance:
/// trace 1e-8, positivity -1e-8, Hermiticity 1e-9, excitation monotone,
/// |Im w| <= 1e-8.
std::vector<LadderRecord> propagate_common(const BellLikeInitial& init, const ReservoirParams& r,
                                           const IntegratorConfig& cfg);

/// Reduces a ladder state to the two-qubit X form: trace out the pseudomode,
/// then a = <g|s|g>, d = <e|s|e>, b = (<m|s|m> + p_minus)/2,
/// z = (<m|s|m> - p_minus)/2, w = Re <g|s|e>.
XState reduce_to_xstate(const LadderState& state, const PseudomodeSystem& sys,
                        double* im_coherence = nullptr);

/// Single-qubit pseudomode run sampled every dt: returns 2 Re <g,0|rho|e,0>
/// for the initial state (|g> + |e>)/sqrt(2) (x) |0>, which equals q(t) when
/// the coupling convention is right. The calibration oracle for Omega0.
std::vector<double> single_qubit_q_series(const ReservoirParams& r, double dt, double t_max,
                                          double omega0_scale = 1.0);

} // namespace qcorr

#endif
