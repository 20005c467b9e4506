#include "qcorr/common_bath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcorr {

namespace {

PseudomodeSystem build_ladder(int levels, const std::vector<double>& couplings, double lambda,
                              int fock_dim) {
    PseudomodeSystem sys;
    sys.levels = levels;
    sys.fock_dim = fock_dim;
    sys.dim = levels * fock_dim;
    sys.lambda = lambda;
    sys.hamiltonian = ComplexMatrix(sys.dim);
    sys.lowering = ComplexMatrix(sys.dim);
    sys.number_op = ComplexMatrix(sys.dim);
    sys.total_excitation = ComplexMatrix(sys.dim);

    for (int L = 0; L < levels; ++L) {
        for (int n = 0; n < fock_dim; ++n) {
            const int row = sys.index(L, n);
            sys.number_op(row, row) = n;
            sys.total_excitation(row, row) = L + n;
            if (n + 1 < fock_dim) sys.lowering(row, sys.index(L, n + 1)) = std::sqrt(n + 1.0);
        }
    }
    // |j+1><j| (x) A raises the ladder while absorbing a pseudomode excitation
    for (int j = 0; j + 1 < levels; ++j) {
        const double c = couplings[static_cast<size_t>(j)];
        for (int n = 1; n < fock_dim; ++n) {
            const int row = sys.index(j + 1, n - 1);
            const int col = sys.index(j, n);
            sys.hamiltonian(row, col) += c * std::sqrt(static_cast<double>(n));
            sys.hamiltonian(col, row) += c * std::sqrt(static_cast<double>(n));
        }
    }
    return sys;
}

} // namespace

PseudomodeSystem build_common_generator(const ReservoirParams& r, int fock_dim) {
    r.validate();
    if (fock_dim < 3) throw dimension_error("build_common_generator: need at least 2 excitations");
    const double omega0 = std::sqrt(0.5 * r.gamma0 * r.lambda);
    const double c = std::sqrt(2.0) * omega0;
    return build_ladder(3, {c, c}, r.lambda, fock_dim);
}

PseudomodeSystem build_single_qubit_generator(const ReservoirParams& r, double omega0_scale,
                                              int fock_dim) {
    r.validate();
    if (fock_dim < 2) throw dimension_error("build_single_qubit_generator: need the 1-excitation sector");
    const double omega0 = omega0_scale * std::sqrt(0.5 * r.gamma0 * r.lambda);
    return build_ladder(2, {omega0}, r.lambda, fock_dim);
}

MasterEquationIntegrator::MasterEquationIntegrator(const PseudomodeSystem& sys)
    : sys_(sys),
      t1_(sys.dim), t2_(sys.dim), t3_(sys.lowering.adjoint()),
      k1_(sys.dim), k2_(sys.dim), k3_(sys.dim), k4_(sys.dim), stage_(sys.dim) {}

void MasterEquationIntegrator::derivative(const ComplexMatrix& rho, ComplexMatrix& out) {
    const complexd mi(0.0, -1.0);
    out.set_zero();
    t1_.assign_product(sys_.hamiltonian, rho);
    out.add_scaled(t1_, mi);
    t1_.assign_product(rho, sys_.hamiltonian);
    out.add_scaled(t1_, -mi);

    t2_.assign_product(sys_.lowering, rho);      // A rho
    t1_.assign_product(t2_, t3_);                // A rho A+ (t3_ caches A+)
    out.add_scaled(t1_, 2.0 * sys_.lambda);
    t1_.assign_product(sys_.number_op, rho);     // A+A rho
    out.add_scaled(t1_, -sys_.lambda);
    t1_.assign_product(rho, sys_.number_op);     // rho A+A
    out.add_scaled(t1_, -sys_.lambda);
}

void MasterEquationIntegrator::step(ComplexMatrix& rho, double dt) {
    derivative(rho, k1_);
    stage_ = rho;
    stage_.add_scaled(k1_, 0.5 * dt);
    derivative(stage_, k2_);
    stage_ = rho;
    stage_.add_scaled(k2_, 0.5 * dt);
    derivative(stage_, k3_);
    stage_ = rho;
    stage_.add_scaled(k3_, dt);
    derivative(stage_, k4_);
    rho.add_scaled(k1_, dt / 6.0);
    rho.add_scaled(k2_, dt / 3.0);
    rho.add_scaled(k3_, dt / 3.0);
    rho.add_scaled(k4_, dt / 6.0);
}

void LadderState::validate(const Tolerances& tol) const {
    const double hdef = rho.hermiticity_defect();
    if (hdef > tol.hermiticity)
        throw invalid_state_error("LadderState: Hermiticity defect " + std::to_string(hdef));
    const double tdef = std::abs(rho.trace() + complexd(p_minus) - complexd(1.0));
    if (tdef > tol.trace)
        throw invalid_state_error("LadderState: trace defect " + std::to_string(tdef));
    const auto eig = hermitian_eigenvalues(rho, tol.hermiticity);
    if (eig.front() < -tol.positivity)
        throw invalid_state_error("LadderState: negative eigenvalue " + std::to_string(eig.front()));
}

LadderState make_initial_ladder(const BellLikeInitial& init, const PseudomodeSystem& sys) {
    init.validate();
    if (sys.levels != 3) throw dimension_error("make_initial_ladder: three-level system expected");
    // (alpha |g> + sqrt(1 - alpha^2) |e>) (x) |0>
    std::vector<complexd> psi(static_cast<size_t>(sys.dim), complexd(0.0));
    psi[static_cast<size_t>(sys.index(0, 0))] = std::sqrt(init.alpha2);
    psi[static_cast<size_t>(sys.index(2, 0))] = std::sqrt(1.0 - init.alpha2);
    LadderState st;
    st.rho = ComplexMatrix(sys.dim);
    for (int i = 0; i < sys.dim; ++i)
        for (int j = 0; j < sys.dim; ++j)
            st.rho(i, j) = psi[static_cast<size_t>(i)] * std::conj(psi[static_cast<size_t>(j)]);
    st.p_minus = 0.0;
    return st;
}

double IntegratorConfig::max_dt(const ReservoirParams& r) {
    const double omega0 = std::sqrt(0.5 * r.gamma0 * r.lambda);
    return 0.02 * std::min({1.0 / r.lambda, 1.0 / omega0, 1.0 / r.gamma0});
}

void IntegratorConfig::validate(const ReservoirParams& r) const {
    if (!(dt > 0.0)) throw std::domain_error("IntegratorConfig: dt must be positive");
    if (!(t_max > 0.0)) throw std::domain_error("IntegratorConfig: t_max must be positive");
    if (record_every < 1) throw std::domain_error("IntegratorConfig: record_every must be >= 1");
    const double bound = max_dt(r);
    if (dt > bound * (1.0 + 1e-12))
        throw std::domain_error("IntegratorConfig: dt = " + std::to_string(dt) +
                                " exceeds the stability bound " + std::to_string(bound));
}

XState reduce_to_xstate(const LadderState& state, const PseudomodeSystem& sys,
                        double* im_coherence) {
    // sigma = Tr_pseudomode rho (3x3 on the ladder)
    complexd s_gg = 0.0, s_mm = 0.0, s_ee = 0.0, s_ge = 0.0;
    for (int n = 0; n < sys.fock_dim; ++n) {
        s_gg += state.rho(sys.index(0, n), sys.index(0, n));
        s_mm += state.rho(sys.index(1, n), sys.index(1, n));
        s_ee += state.rho(sys.index(2, n), sys.index(2, n));
        s_ge += state.rho(sys.index(0, n), sys.index(2, n));
    }
    if (im_coherence) *im_coherence = std::abs(s_ge.imag());
    XState x;
    x.a = s_gg.real();
    x.d = s_ee.real();
    x.b = 0.5 * (s_mm.real() + state.p_minus);
    x.z = 0.5 * (s_mm.real() - state.p_minus);
    x.w = s_ge.real();
    return x;
}

std::vector<LadderRecord> propagate_common(const BellLikeInitial& init, const ReservoirParams& r,
                                           const IntegratorConfig& cfg) {
    cfg.validate(r);
    const PseudomodeSystem sys = build_common_generator(r);
    LadderState state = make_initial_ladder(init, sys);
    MasterEquationIntegrator integrator(sys);

    const long n_steps = std::lround(cfg.t_max / cfg.dt);
    std::vector<LadderRecord> records;
    records.reserve(static_cast<size_t>(n_steps / cfg.record_every) + 2);

    double prev_excitation = 2.0 + 1e-10;
    for (long k = 0; k <= n_steps; ++k) {
        const double t = static_cast<double>(k) * cfg.dt;
        if (k % cfg.record_every == 0) {
            LadderRecord rec;
            rec.t = t;
            rec.trace_defect = std::abs(state.rho.trace() + complexd(state.p_minus) - complexd(1.0));
            if (rec.trace_defect > 1e-8)
                throw integration_error("propagate_common: trace drift " +
                                            std::to_string(rec.trace_defect), t);
            if (state.rho.hermiticity_defect() > 1e-9)
                throw integration_error("propagate_common: Hermiticity lost", t);
            rec.min_eigenvalue = hermitian_eigenvalues(state.rho, 1e-9).front();
            if (rec.min_eigenvalue < -1e-8)
                throw integration_error("propagate_common: negative eigenvalue " +
                                            std::to_string(rec.min_eigenvalue), t);
            complexd ex = 0.0;
            for (int i = 0; i < sys.dim; ++i)
                ex += state.rho(i, i) * sys.total_excitation(i, i);
            rec.excitation = ex.real();
            if (rec.excitation > prev_excitation + 1e-10)
                throw integration_error("propagate_common: total excitation increased", t);
            prev_excitation = rec.excitation;
            rec.x = reduce_to_xstate(state, sys, &rec.im_coherence);
            if (rec.im_coherence > 1e-8)
                throw integration_error("propagate_common: complex |00><11| coherence", t);
            rec.x.validate();
            records.push_back(rec);
        }
        if (k < n_steps) integrator.step(state.rho, cfg.dt);
    }
    return records;
}

std::vector<double> single_qubit_q_series(const ReservoirParams& r, double dt, double t_max,
                                          double omega0_scale) {
    const PseudomodeSystem sys = build_single_qubit_generator(r, omega0_scale);
    ComplexMatrix rho(sys.dim);
    // (|g> + |e>)/sqrt(2) (x) |0>
    const int g0 = sys.index(0, 0);
    const int e0 = sys.index(1, 0);
    rho(g0, g0) = 0.5;
    rho(e0, e0) = 0.5;
    rho(g0, e0) = 0.5;
    rho(e0, g0) = 0.5;

    MasterEquationIntegrator integrator(sys);
    const long n_steps = std::lround(t_max / dt);
    std::vector<double> q;
    q.reserve(static_cast<size_t>(n_steps) + 1);
    for (long k = 0; k <= n_steps; ++k) {
        q.push_back(2.0 * rho(g0, e0).real());
        if (k < n_steps) integrator.step(rho, dt);
    }
    return q;
}

} // namespace qcorr
