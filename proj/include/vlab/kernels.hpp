#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace vlab::kernels {

enum class Isa { Scalar, Avx2, Neon };

// ISA selected at startup from CPU capabilities (override with set_isa).
Isa active_isa();
std::string isa_name(Isa);
bool isa_supported(Isa);
void set_isa(Isa); // throws RangeError if unsupported on this host

// In-place subset-sum (zeta) transform over the 2^bits mask lattice:
// after the call f[S] = sum of the original f over all submasks of S.
void subset_zeta_i64(std::int64_t* f, int bits);

// out[i] = dx[i]^2 + dy[i]^2 + dz[i]^2
void norm_sq_batch(const double* dx, const double* dy, const double* dz,
                   double* out, std::size_t count);

// Reference implementations; the dispatched versions above are
// equivalence-tested against these.
void subset_zeta_i64_scalar(std::int64_t* f, int bits);
void norm_sq_batch_scalar(const double* dx, const double* dy, const double* dz,
                          double* out, std::size_t count);

} // namespace vlab::kernels
