// Benchmark comparing the OpenMP kernels against the serial reference
// implementations for exact rref and matmul.
#include "skewlab/matrix.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace skewlab;

namespace {

Matrix random_matrix(const Field &f, int rows, int cols, std::mt19937_64 &rng) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (f.is_finite()) {
        std::uniform_int_distribution<long> d(0, f.p() - 1);
        m.at(i, j) = f.from_long(d(rng));
      } else {
        std::uniform_int_distribution<long> d(-4, 4);
        m.at(i, j) = f.from_long(d(rng));
      }
    }
  return m;
}

template <typename F> double time_ms(F &&fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_field(const Field &f, const char *name, int n) {
  std::mt19937_64 rng(42);
  Matrix a = random_matrix(f, n, n, rng);
  Matrix b = random_matrix(f, n, n, rng);

  Matrix c_par(f, 0, 0), c_ser(f, 0, 0);
  double mm_par = time_ms([&] { c_par = matmul(a, b); });
  double mm_ser = time_ms([&] { c_ser = matmul_serial(a, b); });
  bool mm_ok = c_par == c_ser;

  RrefResult r_par = rref(a), r_ser = rref_serial(a);
  double rr_par = time_ms([&] { r_par = rref(a); });
  double rr_ser = time_ms([&] { r_ser = rref_serial(a); });
  bool rr_ok = r_par.mat == r_ser.mat && r_par.rank == r_ser.rank;

  std::printf("%-6s n=%-4d matmul omp %8.2f ms  serial %8.2f ms  agree %s\n",
              name, n, mm_par, mm_ser, mm_ok ? "yes" : "NO");
  std::printf("%-6s n=%-4d rref   omp %8.2f ms  serial %8.2f ms  agree %s\n",
              name, n, rr_par, rr_ser, rr_ok ? "yes" : "NO");
}

} // namespace

int main(int argc, char **argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 160;
  bench_field(Field::rationals(), "Q", n);
  bench_field(Field::prime(1000003), "F_p", n);
  return 0;
}
