#pragma once

#include <complex>

namespace cesaro {

using Cplx = std::complex<double>;

// Principal-branch log Gamma, Lanczos approximation with reflection for
// Re z < 1/2. Accurate to ~1e-14 relative (in exp) for |Im z| up to a few
// thousand; the imaginary part is continuous on each half plane but carries
// the usual 2*pi*i ambiguity after reflection, which is irrelevant once
// exponentiated.
Cplx log_gamma(Cplx z);

// Gamma(z). Throws std::domain_error at the poles (non-positive integers);
// callers that need a value there want reciprocal_gamma instead.
Cplx complex_gamma(Cplx z);

// 1/Gamma(z), entire: exactly 0 at non-positive integers.
Cplx reciprocal_gamma(Cplx z);

// log sin(pi z) without overflow for large |Im z| (principal up to 2*pi*i).
Cplx log_sin_pi(Cplx z);

}  // namespace cesaro
