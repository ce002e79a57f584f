#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "fieldroad/mesh.hpp"

namespace fieldroad {

/// Diffusion coefficients (field d, road D), exchange rates (mu, nu) and
/// time step. All strictly positive.
struct Params {
    double d = 1.0;
    double D = 1.0;
    double mu = 1.0;
    double nu = 1.0;
    double dt = 0.1;

    void validate() const {
        if (!(d > 0.0 && D > 0.0 && mu > 0.0 && nu > 0.0 && dt > 0.0))
            throw std::invalid_argument("params: d, D, mu, nu, dt must all be positive");
    }
};

/// Discrete unknowns at one time level: v per field cell, the road trace of v
/// and u per road cell. The trace carries no mass; at step 0 it is the
/// diagnostic value obtained from the interface relation applied to (v0, u0).
struct State {
    std::vector<double> v;
    std::vector<double> v_trace;
    std::vector<double> u;
    double time = 0.0;
    long step = 0;
};

// Piecewise-constant initial data: axis-aligned boxes in the field and
// intervals on the road. Cell averages of this form are computed exactly
// from overlap measures.
struct Box {
    double x0, x1, y0, y1;
    double value;
};

struct Interval {
    double x0, x1;
    double value;
};

struct Painter {
    std::vector<Box> field;
    std::vector<Interval> road;

    double total_mass() const;
};

/// Exact cell averaging of painter data. Rejects negative painter values and
/// zero total mass.
State discretize_initial(const Painter& initial, const CoupledMesh& mesh,
                         const Params& params);

/// Cell averaging of general nonnegative functions by 4x4 midpoint
/// subsampling per field cell (4 points per road cell).
State discretize_initial(const std::function<double(double, double)>& v0,
                         const std::function<double(double)>& u0,
                         const CoupledMesh& mesh, const Params& params);

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The backward Euler system for one time step, assembled and factored once
/// per (mesh, params) and reused for every step. Unknown layout: field block,
/// trace block, road block. Immutable and cheap to copy (shared internals).
class SystemOperator {
  public:
    SystemOperator(const CoupledMesh& mesh, const Params& params);

    /// Solves the linear system whose right-hand side is built from `state`,
    /// returning the state at the next time level. The residual satisfies
    /// ||A x - b||_inf <= 1e-12 ||b||_inf.
    State step(const State& state) const;

    std::size_t size() const;
    std::size_t n_field() const;
    std::size_t n_road() const;
    const Params& params() const;

    /// Row-major dense copy of the matrix (small systems; used by tests).
    std::vector<double> dense_matrix() const;
    /// Right-hand side generated by a state, in the operator's layout.
    std::vector<double> rhs(const State& state) const;
    /// Matrix-vector product in the operator's layout.
    std::vector<double> apply(const std::vector<double>& x) const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

inline SystemOperator assemble(const CoupledMesh& mesh, const Params& params) {
    return SystemOperator(mesh, params);
}

inline State step(const SystemOperator& op, const State& state) {
    return op.step(state);
}

/// Reference solver: independent dense assembly of the same equations and
/// Gaussian elimination with partial pivoting. Capped at 2000 unknowns.
State dense_oracle_step(const CoupledMesh& mesh, const Params& params,
                        const State& state);

/// Total mass carried by a state: sum m_K v_K + sum m_K* u_K*. The trace
/// holds no mass.
double total_mass(const State& state, const CoupledMesh& mesh);

} // namespace fieldroad
