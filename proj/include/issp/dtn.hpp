// SPDX-License-Identifier: Apache-2.0

#ifndef ISSP_DTN_HPP
#define ISSP_DTN_HPP

#include <vector>

#include "issp/forward.hpp"
#include "issp/geometry.hpp"
#include "issp/types.hpp"

namespace issp::dtn {

// Modal coefficients of a boundary trace. d = 2 stores hat{u}_n for
// n in [-N, N] at index n + N; d = 3 stores hat{u}_n^m at
// specfun::sph_index(n, m), with the orthonormal-harmonic convention
// u = sum hat{u}_n^m Y_n^m.
struct SpectralTrace {
  int dimension = 2;
  int truncation = 0;
  double radius = 0.0;
  double kappa = 0.0;
  std::vector<Complex> coeff;
};

// Default series truncation: modes beyond kappa R decay super-exponentially,
// and the +32 buffer puts the transparent-BC residual at the quadrature
// floor for all tested kappa R <= 40.
int default_truncation(double kappa, double R);

SpectralTrace analyze(const geometry::BoundaryGrid& grid,
                      const std::vector<Complex>& values, int truncation);

std::vector<Complex> synthesize(const geometry::BoundaryGrid& grid,
                                const SpectralTrace& trace);

// The DtN operator: multiplies mode n by kappa H_n'(kappa R)/H_n(kappa R)
// (spherical Hankel ratios in 3-d) and resamples on the grid. Applying it
// after truncation at N is also the noise regularization for Neumann
// synthesis: the ratio grows like -n/R in the evanescent band, so
// untruncated noisy traces would blow up.
std::vector<Complex> apply_dtn(const geometry::BoundaryGrid& grid,
                               const std::vector<Complex>& values, double kappa,
                               int truncation);

// Fills the Neumann trace of Dirichlet-only data via the transparent
// boundary condition. Metadata (kappa, grid) is preserved.
forward::BoundaryData neumann_from_dirichlet(const forward::BoundaryData& data,
                                             int truncation);

// Grid L^2(boundary) norm of a sampled trace (for Parseval checks).
double grid_l2_sq(const geometry::BoundaryGrid& grid, const std::vector<Complex>& values);

}  // namespace issp::dtn

#endif  // ISSP_DTN_HPP
