#pragma once

#include <functional>

#include "nonrigid/numerics/quadrature.hpp"
#include "nonrigid/parameter.hpp"

namespace nonrigid::numerics {

/// Right-hand side dy/dx = F(x, y) of a scalar complex ODE.
using ComplexField = std::function<Complex(Complex x, Complex y)>;

/// Integrates dy/dx = F(x, y) along `path` starting from y(path.start()) = y0
/// with an embedded Dormand-Prince 5(4) pair applied to the pulled-back
/// system dy/du = F(z(u), y) z'(u) on each segment.
///
/// Step control uses cfg.abs_tol and cfg.rel_tol; the step budget is
/// 50 * cfg.max_subdivisions per segment. Throws StepFailure when the step
/// size underflows or the budget is exhausted.
Complex integrate_along_path(const ComplexField& field, Complex y0, const Path& path,
                             const QuadratureConfig& cfg = {});

/// Analytic continuation of the leaf through (start_x, start_y) of
/// x^3 y' = y - x^2/(i pi) - alpha x^3/(i sqrt(2 pi)) along `path`.
/// An empty path returns start_y unchanged. The path must start at start_x
/// and must not touch x = 0.
Complex ode_transport(const FoliationParameter& alpha, Complex start_x, Complex start_y,
                      const Path& path, const QuadratureConfig& cfg = {});

/// The foliation's slope field F_alpha(x, y).
Complex foliation_field(const FoliationParameter& alpha, Complex x, Complex y) noexcept;

}  // namespace nonrigid::numerics
