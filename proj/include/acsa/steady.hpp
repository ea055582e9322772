#pragma once

#include <string_view>

#include "acsa/types.hpp"

namespace acsa {

enum class SolveMethod { trace_row_replacement };

std::string_view to_string(SolveMethod method);

struct SteadyStateResult {
    Matrix3 rho;
    double residual = 0.0;  // ||L vec(rho)||_2
    SolveMethod method = SolveMethod::trace_row_replacement;
};

/// Unique stationary state of the Liouvillian with unit trace.
///
/// One trace-redundant row of L (the d rho_cc / dt row) is replaced by the trace
/// constraint and the 9x9 system is solved directly. Throws
/// NonUniqueSteadyState when L has more than one null direction (second-smallest
/// singular value <= 1e-10 relative to the largest) and SolverFailure when the
/// bordered system has an estimated condition number > 1e14.
SteadyStateResult steady_state(const Superoperator& liouvillian);

/// Off-diagonal element selector. rho_xy denotes <y|rho|x>, which carries the
/// field phase factors e^{i dphi} (ab), e^{i phi_p} (ac), e^{i phi_l} (bc).
enum class CoherencePair { ab, ac, bc };

Complex coherence(const Matrix3& rho, CoherencePair pair);

double residual(const Superoperator& liouvillian, const Matrix3& rho);

}  // namespace acsa
