#include "fropt/kernels.hpp"

#include <atomic>

namespace fropt::kernels {

namespace {

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#else
bool avx2_available() { return false; }
#endif

struct Table {
  void (*cis_quad)(std::complex<double>*, std::size_t, double, double, double);
  std::complex<double> (*chirp_accum)(const double*, const double*, std::size_t,
                                      double, double, double);
  std::complex<double> (*rs_accum)(const double*, const double*, std::size_t,
                                   double, double, double, double);
  const char* name;
};

constexpr Table kScalar{detail::cis_quad_scalar, detail::chirp_accum_scalar,
                        detail::rs_accum_scalar, "scalar"};
#if defined(__x86_64__) || defined(_M_X64)
constexpr Table kAvx2{detail::cis_quad_avx2, detail::chirp_accum_avx2,
                      detail::rs_accum_avx2, "avx2"};
#endif

const Table* pick(Isa isa) {
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::avx2 && avx2_available()) return &kAvx2;
  if (isa == Isa::automatic && avx2_available()) return &kAvx2;
#endif
  (void)isa;
  return &kScalar;
}

std::atomic<const Table*> g_active{nullptr};

const Table* active() {
  const Table* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = pick(Isa::automatic);
    g_active.store(t, std::memory_order_release);
  }
  return t;
}

}  // namespace

void force_isa(Isa isa) { g_active.store(pick(isa), std::memory_order_release); }

const char* active_isa() { return active()->name; }

void cis_quad(std::complex<double>* out, std::size_t n, double a, double b, double c) {
  active()->cis_quad(out, n, a, b, c);
}

std::complex<double> chirp_accum(const double* re, const double* im, std::size_t n,
                                 double a, double b, double c) {
  return active()->chirp_accum(re, im, n, a, b, c);
}

std::complex<double> rs_accum(const double* re, const double* im, std::size_t n,
                              double d0, double dx, double z, double k) {
  return active()->rs_accum(re, im, n, d0, dx, z, k);
}

}  // namespace fropt::kernels
