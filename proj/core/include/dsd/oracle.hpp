#pragma once

#include "dsd/driver.hpp"
#include "dsd/factor_state.hpp"
#include "dsd/result.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace dsd::oracle {

/// Product of up to four factors moving on straight lines from `start` to
/// `end`.
struct ToyIdentity {
    std::vector<double> start;
    std::vector<double> end;
};

inline constexpr std::size_t kMaxToyFactors = 4;

/// Exact line-integral contribution of each factor: the integral over
/// t in [0, 1] of d(prod x_j)/dx_i along the path, times the change of x_i.
/// Throws DomainError for more than four factors or mismatched sizes.
std::vector<double> analytic_line_integral(const ToyIdentity& toy);

/// Embed a toy into factor states: factor i drives e, p, g, s in that order,
/// unused scalars stay at one, and a single active use has k = w = 1.
std::pair<FactorState, FactorState> embed_toy(const ToyIdentity& toy);

/// The scalar driver carrying toy factor i.
DriverId toy_driver(std::size_t i);

/// Fine-step oracles run at least this many times the engine's segments.
inline constexpr std::size_t kReferenceFactor = 64;

/// The Euler recursion written out in reduced scalar form with compensated
/// summation, for use at large segment counts.
DecompositionResult fine_step_reference(const FactorState& start, const FactorState& end, std::size_t segments,
                                        SlackScheme slack = SlackScheme::Uniform);

/// Logarithmic mean; L(a, a) = a.
double logarithmic_mean(double a, double b);

/// Additive LMDI-I on c_u = e * w_u * k_u * p * g * s per active use, summed
/// over uses. The w_u terms land in the share_shift columns. Throws
/// DomainError if a factor of an active use is not strictly positive.
DriverVector lmdi_decompose(const FactorState& start, const FactorState& end);

}  // namespace dsd::oracle
