// Times the OpenMP kernels against the serial reference on the same
// structures and checks they report identically. Sizes are desk scale; the
// interesting column is the ratio.

#include <omp.h>

#include <cstdio>
#include <string>

#include "invcat/esn.hpp"
#include "invcat/generators.hpp"
#include "invcat/kernels.hpp"

namespace {

template <typename Fn>
double time_of(Fn&& fn) {
  double t0 = omp_get_wtime();
  fn();
  return omp_get_wtime() - t0;
}

template <typename Par, typename Ref>
void row(const char* name, Par&& par_fn, Ref&& ref_fn) {
  bool agree = false;
  double tp = 0, tr = 0;
  {
    auto pr = par_fn();
    auto rr = ref_fn();
    agree = pr.violations == rr.violations;
  }
  tp = time_of([&] { (void)par_fn(); });
  tr = time_of([&] { (void)ref_fn(); });
  std::printf("%-38s %10.3f ms %10.3f ms %7.2fx  %s\n", name, tr * 1e3, tp * 1e3,
              tp > 0 ? tr / tp : 0.0, agree ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 4;
  if (n < 1 || n > 5) {
    std::fprintf(stderr, "usage: %s [n in 1..5]\n", argv[0]);
    return 1;
  }
  std::printf("threads: %d\n", omp_get_max_threads());

  invcat::InverseCert x = invcat::symmetric_inverse_monoid(n);
  std::printf("I_%d: %d arrows\n", n, x.cat().arrow_count());
  std::printf("%-38s %13s %13s %8s\n", "kernel", "serial", "openmp", "ratio");

  row("category laws (triple sweep)",
      [&] { return invcat::par::category_laws(x.cat(), true); },
      [&] { return invcat::ref::category_laws(x.cat(), true); });
  row("restriction axioms R.1-R.4",
      [&] { return invcat::par::restriction_axioms(x.rd); },
      [&] { return invcat::ref::restriction_axioms(x.rd); });
  row("derived identities (i)-(vii)",
      [&] { return invcat::par::derived_identities(x.rd); },
      [&] { return invcat::ref::derived_identities(x.rd); });
  row("natural order partial-order laws",
      [&] { return invcat::par::leq_partial_order(x.rd); },
      [&] { return invcat::ref::leq_partial_order(x.rd); });
  row("order compatibility (pair x pair)",
      [&] { return invcat::par::order_compatibility(x.rd); },
      [&] { return invcat::ref::order_compatibility(x.rd); });

  int gn = n <= 4 ? n : 4;  // the groupoid sweeps are cubic; cap the build
  invcat::InverseCert gx_src = invcat::symmetric_inverse_monoid(gn);
  invcat::GImage img = invcat::g_of_inverse_category(gx_src);
  std::printf("G(I_%d): %d objects, %d arrows\n", gn, img.groupoid.cat().object_count(),
              img.groupoid.cat().arrow_count());

  row("groupoid order laws + axioms",
      [&] { return invcat::par::groupoid_order_laws(img.groupoid); },
      [&] { return invcat::ref::groupoid_order_laws(img.groupoid); });
  row("tensor associativity (triples)",
      [&] { return invcat::par::tensor_associativity(img.groupoid); },
      [&] { return invcat::ref::tensor_associativity(img.groupoid); });
  return 0;
}
