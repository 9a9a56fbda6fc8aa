// Regenerates fixtures/calibration.json: the measured constants that the
// verification suites reproduce on rerun.  Slow (the operator-norm budgets
// sweep full standard grids); run only when the constants are meant to move.

#include <cstdio>
#include <cstring>
#include <string>

#include "hyperlap/quadrature.hpp"
#include "hyperlap/verification.hpp"

int main(int argc, char** argv) {
  bool include_opnorm = true;
  std::string path = hyperlap::default_fixture_path();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-opnorm") == 0)
      include_opnorm = false;
    else if (std::strcmp(argv[i], "--output") == 0 && i + 1 < argc)
      path = argv[++i];
    else {
      std::fprintf(stderr,
                   "usage: hyperlap_calibrate [--skip-opnorm] [--output FILE]\n");
      return 1;
    }
  }

  hyperlap::QuadratureSpec spec;
  const hyperlap::Calibration c =
      hyperlap::compute_calibration(spec, 20240817, include_opnorm);
  hyperlap::save_calibration(path, c);

  std::printf("wrote %s\n", path.c_str());
  std::printf("  c_o                  %.17g\n", c.c_o);
  std::printf("  c_fit                %.17g\n", c.c_fit);
  std::printf("  volume_sandwich_max  %.17g\n", c.volume_sandwich_max);
  std::printf("  local_constant       %.17g\n", c.local_constant);
  std::printf("  slice_constant_n4    %.17g\n", c.slice_constant_n4);
  std::printf("  slice_constant_n8    %.17g\n", c.slice_constant_n8);
  std::printf("  tail_prefactor_hc    %.17g\n", c.tail_prefactor_hc);
  std::printf("  opnorm_budget_n2     %.17g\n", c.opnorm_budget_n2);
  std::printf("  opnorm_budget_n3     %.17g\n", c.opnorm_budget_n3);
  return 0;
}
