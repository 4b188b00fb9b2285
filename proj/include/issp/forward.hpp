// SPDX-License-Identifier: Apache-2.0

#ifndef ISSP_FORWARD_HPP
#define ISSP_FORWARD_HPP

#include <memory>
#include <vector>

#include "issp/geometry.hpp"
#include "issp/sources.hpp"
#include "issp/types.hpp"

namespace issp::forward {

// Dirichlet and Neumann traces of the radiating field on the boundary grid
// at one wavenumber. An empty neumann vector means the trace has not been
// measured or synthesized yet.
struct BoundaryData {
  double kappa = 0.0;
  std::shared_ptr<const geometry::BoundaryGrid> grid;
  std::vector<Complex> dirichlet;
  std::vector<Complex> neumann;

  bool has_neumann() const { return !neumann.empty(); }
};

// Boundary traces for a whole frequency band.
struct FrequencyDataset {
  int dimension = 2;
  std::shared_ptr<const geometry::BoundaryGrid> grid;
  geometry::FreqGrid freqs;
  std::vector<BoundaryData> per_freq;
};

// Outgoing fundamental solution: (i/4) H_0^{(1)}(kappa |x-y|) in 2-d,
// e^{i kappa |x-y|} / (4 pi |x-y|) in 3-d.
Complex green_kernel(int dimension, double kappa, const Point& x, const Point& y);

// grad_x Phi . normal via the radial chain rule.
Complex green_kernel_normal_deriv(int dimension, double kappa, const Point& x,
                                  const Point& normal, const Point& y);

// Radiating solution of  Delta u + kappa^2 u = f  by direct quadrature of
// u = -Phi * f; returns both traces. Observation points stay a distance
// >= R - r from the source support, so no singular quadrature is involved.
BoundaryData solve_forward(const sources::SourceField& source, double kappa,
                           std::shared_ptr<const geometry::BoundaryGrid> boundary,
                           const geometry::BallGrid& ball);

// Forward sweep over a frequency grid. `jobs` > 1 distributes frequencies
// over a thread pool; results are identical for any job count.
FrequencyDataset solve_forward_band(const sources::SourceField& source,
                                    std::shared_ptr<const geometry::BoundaryGrid> boundary,
                                    const geometry::BallGrid& ball,
                                    const geometry::FreqGrid& freqs, int jobs = 1);

}  // namespace issp::forward

#endif  // ISSP_FORWARD_HPP
