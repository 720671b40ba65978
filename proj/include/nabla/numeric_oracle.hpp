#pragma once

#include "nabla/fields.hpp"

#include <Eigen/Core>

#include <functional>
#include <span>
#include <variant>

namespace nabla {

using Point = Eigen::Vector3d;

/// A scalar or vector sample at one point.
using Sample = std::variant<double, Eigen::Vector3d>;

/// A black-box field. `evaluate` must be deterministic and safe to call concurrently.
struct SampledField {
    Sort sort;
    std::function<Sample(const Point&)> evaluate;

    static SampledField scalar(std::function<double(const Point&)> fn);
    static SampledField vector(std::function<Eigen::Vector3d(const Point&)> fn);
};

/// Double-precision sampling of an exact polynomial field.
SampledField sample(const FieldValue& fv);

struct FdConfig {
    double step = 1e-3;
    double rel_tol = 1e-6;
    double abs_floor = 1e-9;

    /// Throws std::invalid_argument unless all are positive and step < 1.
    void validate() const;
};

/// Central difference (f(p + h eₐ) − f(p − h eₐ)) / 2h. Throws SortMismatch
/// for vector fields and NumericalFailure for non-finite samples.
double fd_partial(const SampledField& field, Axis axis, const Point& p, const FdConfig& cfg = {});

/// grad, curl or div with every partial replaced by a central difference.
Sample fd_first_order(Operator op, const SampledField& field, const Point& p,
                      const FdConfig& cfg = {});

/// The chain applied through nested differences, as a new black-box field.
SampledField fd_chain(const Chain& chain, const SampledField& field, const FdConfig& cfg = {});

/// True when |approx − exact| <= max(rel_tol·|exact|, abs_floor) componentwise.
bool within_tolerance(const Sample& approx, const Sample& exact, double rel_tol, double abs_floor);

/// Step for single-level checks against polynomial fields. Balances the
/// h²·∂³f truncation term against ε·|f|/h cancellation for fields of
/// moderate size on [−2, 2]³.
inline constexpr double kFirstOrderStep = 5e-6;

inline constexpr std::size_t kMaxOracleDepth = 2;
/// Relative tolerance used for depth-2 chains in place of cfg.rel_tol.
inline constexpr double kDepth2RelTol = 1e-3;

struct CrossCheckReport {
    std::size_t points = 0;
    std::size_t failures = 0;
    double max_abs_deviation = 0.0;
    double max_rel_deviation = 0.0;

    bool passed() const noexcept { return failures == 0; }
};

/// Compares the exact chain value against nested finite differences of the
/// sampled input at each point. Chains longer than two throw DepthUnsupported.
CrossCheckReport cross_check(const Chain& chain, const FieldValue& poly_input,
                             std::span<const Point> points, const FdConfig& cfg = {});

}  // namespace nabla
