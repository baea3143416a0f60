#pragma once

#include <cstddef>

// Low-level contiguous-double kernels with runtime ISA selection.
// The dispatched entry points (fcg::kernels::dot/axpy/scale) pick the best
// supported variant once at startup; force_isa() pins a specific one for
// equivalence testing.

namespace fcg::kernels {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa best_isa();
Isa active_isa();
void force_isa(Isa isa);  // InvalidValueError if unsupported on this host
void reset_isa();         // back to best_isa()

double dot(const double* a, const double* b, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);  // y += a·x
void scale(double* x, double a, std::size_t n);                  // x *= a

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);
void scale(double* x, double a, std::size_t n);
}  // namespace scalar

#if defined(FCG_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);
void scale(double* x, double a, std::size_t n);
}  // namespace avx2
#endif

#if defined(FCG_HAVE_NEON)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);
void scale(double* x, double a, std::size_t n);
}  // namespace neon
#endif

}  // namespace fcg::kernels
