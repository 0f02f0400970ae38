#pragma once

#include <cstddef>
#include <span>

// Batch arithmetic kernels for the enumeration inner loops. Every operation
// has a scalar reference implementation and may have SIMD variants; the
// active backend is selected at runtime from CPU features and can be forced
// for testing. All variants are equivalence-tested against the scalar
// reference.
namespace ocbinom::kernels {

enum class Backend { kScalar, kAvx2 };

const char* backend_name(Backend b);

// Backend currently used by the batch operations.
Backend active_backend();

// True if the backend is compiled in and supported by this CPU.
bool backend_available(Backend b);

// Force a specific backend. Throws std::invalid_argument if unavailable.
void set_backend(Backend b);

// Revert to the best available backend.
void reset_backend();

// out[i] = exp(x[i]). Handles the full double range: overflow to +inf,
// gradual underflow to 0, and +-inf / NaN inputs.
void vexp(std::span<const double> x, std::span<double> out);

// out[i] = log(x[i]). 0 maps to -inf, negative inputs to NaN, +inf to +inf.
// Subnormal inputs are handled.
void vlog(std::span<const double> x, std::span<double> out);

// out[i] = base[i] + wa[i]*log(theta[i]) + wb[i]*log(omt[i]).
// theta and omt must be strictly positive; omt carries 1-theta computed
// exactly by the caller so no accuracy is lost near theta = 1.
void weighted_log_terms(std::span<const double> base, std::span<const double> wa,
                        std::span<const double> theta, std::span<const double> wb,
                        std::span<const double> omt, std::span<double> out);

}  // namespace ocbinom::kernels
