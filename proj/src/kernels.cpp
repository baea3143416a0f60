#include "fcg/kernels.hpp"

#include <string>

#include "fcg/errors.hpp"

namespace fcg::kernels {

namespace {

struct Table {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double*, double, const double*, std::size_t);
  void (*scale)(double*, double, std::size_t);
};

Table table_for(Isa isa) {
  switch (isa) {
#if defined(FCG_HAVE_AVX2)
    case Isa::avx2:
      return {&avx2::dot, &avx2::axpy, &avx2::scale};
#endif
#if defined(FCG_HAVE_NEON)
    case Isa::neon:
      return {&neon::dot, &neon::axpy, &neon::scale};
#endif
    default:
      return {&scalar::dot, &scalar::axpy, &scalar::scale};
  }
}

bool cpu_has_avx2_fma() {
#if defined(FCG_HAVE_AVX2) && defined(__x86_64__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct State {
  Isa best;
  Isa active;
  Table table;
  State() {
    best = Isa::scalar;
    if (cpu_has_avx2_fma()) best = Isa::avx2;
#if defined(FCG_HAVE_NEON)
    best = Isa::neon;
#endif
    active = best;
    table = table_for(active);
  }
};

State& state() {
  static State s;
  return s;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2_fma();
    case Isa::neon:
#if defined(FCG_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return state().best; }
Isa active_isa() { return state().active; }

void force_isa(Isa isa) {
  if (!isa_supported(isa))
    throw InvalidValueError(std::string(isa_name(isa)) + " kernels not supported on this host");
  state().active = isa;
  state().table = table_for(isa);
}

void reset_isa() { force_isa(best_isa()); }

double dot(const double* a, const double* b, std::size_t n) {
  return state().table.dot(a, b, n);
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  state().table.axpy(y, a, x, n);
}

void scale(double* x, double a, std::size_t n) {
  state().table.scale(x, a, n);
}

}  // namespace fcg::kernels
