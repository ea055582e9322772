#include "acsa/steady.hpp"

#include "acsa/error.hpp"

namespace acsa {
namespace {

constexpr double kNullSpaceTolerance = 1e-10;
constexpr double kMaxCondition = 1e14;

}  // namespace

std::string_view to_string(SolveMethod method) {
    switch (method) {
    case SolveMethod::trace_row_replacement: return "trace_row_replacement";
    }
    return "unknown";
}

SteadyStateResult steady_state(const Superoperator& liouvillian) {
    Eigen::JacobiSVD<Superoperator> l_svd(liouvillian);
    const auto& sigma = l_svd.singularValues();  // descending
    if (sigma(0) == 0.0 || sigma(7) <= kNullSpaceTolerance * sigma(0))
        throw Error(ErrorCode::NonUniqueSteadyState, "Liouvillian null space has dimension > 1");

    Superoperator bordered = liouvillian;
    Vector9 rhs = Vector9::Zero();
    bordered.row(0).setZero();
    for (int k = 0; k < 3; ++k) bordered(0, k + 3 * k) = 1.0;
    rhs(0) = 1.0;

    const Eigen::FullPivLU<Superoperator> lu(bordered);
    if (!lu.isInvertible() || lu.rcond() < 1.0 / kMaxCondition)
        throw Error(ErrorCode::SolverFailure, "trace-constrained system is ill-conditioned");

    const Vector9 solution = lu.solve(rhs);
    Matrix3 rho = unvectorize(solution);
    rho = 0.5 * (rho + rho.adjoint()).eval();

    return {rho, residual(liouvillian, rho), SolveMethod::trace_row_replacement};
}

Complex coherence(const Matrix3& rho, CoherencePair pair) {
    switch (pair) {
    case CoherencePair::ab: return rho(index(Level::b), index(Level::a));
    case CoherencePair::ac: return rho(index(Level::c), index(Level::a));
    case CoherencePair::bc: return rho(index(Level::c), index(Level::b));
    }
    return {};
}

double residual(const Superoperator& liouvillian, const Matrix3& rho) {
    return (liouvillian * vectorize(rho)).norm();
}

}  // namespace acsa
