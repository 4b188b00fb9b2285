// SPDX-License-Identifier: Apache-2.0

#ifndef ISSP_SPECTRAL_HPP
#define ISSP_SPECTRAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "issp/forward.hpp"
#include "issp/geometry.hpp"
#include "issp/sources.hpp"
#include "issp/types.hpp"

namespace issp::spectral {

// Samples of fhat on the polar grid {kappa_i * dir_l : kappa_i <= K}. The
// weights carry the full polar measure freq_weight * kappa^{d-1} * ang_weight,
// so sums against them approximate integrals over the ball |xi| <= K.
struct FourierSamples {
  int dimension = 2;
  double K = 0.0;
  std::vector<Point> nodes;
  std::vector<double> weights;
  std::vector<Complex> values;

  std::size_t size() const { return nodes.size(); }
};

struct ReconstructionMeta {
  int n_freq = 0;
  int n_dir = 0;
  std::uint64_t noise_seed = 0;
};

// The low-pass approximation f_K sampled on a ball grid.
struct Reconstruction {
  std::shared_ptr<const geometry::BallGrid> grid;
  std::vector<Complex> values;
  double K_used = 0.0;
  ReconstructionMeta meta;
};

// Boundary identity behind the inversion:
//   fhat(xi) = sum_j w_j e^{-i xi . x_j} (neumann_j + i (xi . nu_j) dirichlet_j)
// for |xi| = kappa. Requires both traces; synthesize Neumann data first via
// dtn::neumann_from_dirichlet if only Dirichlet was measured.
std::vector<Complex> fourier_data_from_boundary(const forward::BoundaryData& data,
                                                const std::vector<Point>& directions);

FourierSamples assemble_fourier_samples(const std::vector<std::vector<Complex>>& per_freq,
                                        const geometry::FreqGrid& freqs,
                                        const geometry::DirectionSet& dirs);

// Truncated inverse transform f_K(y) = (2 pi)^{-d} sum w fhat e^{i xi . y}.
// Frequency truncation is the only regularization applied.
Reconstruction reconstruct(const FourierSamples& samples,
                           std::shared_ptr<const geometry::BallGrid> target,
                           bool real_projection = false);

// Same sum exploiting the uniform kappa spacing of a FreqGrid (running-phase
// recurrence per direction); bitwise deterministic for any job count.
Reconstruction reconstruct_band(const std::vector<std::vector<Complex>>& per_freq,
                                const geometry::FreqGrid& freqs,
                                const geometry::DirectionSet& dirs,
                                std::shared_ptr<const geometry::BallGrid> target,
                                int jobs = 1, bool real_projection = false);

// || f - f_K ||_L2 from the closed-form spectral tail, by 1-d radial
// quadrature. K = 0 returns ||f||_L2. Gaussian-sum sources only (the other
// families have no analytic transform).
double lowpass_oracle(const sources::SourceField& source, double K, int oversample = 1);

// Direction-count policy: 2 ceil(K r) + 16 on the circle; per-axis
// ceil(K r) + 8 for the product rule on the sphere.
int default_direction_count(int dimension, double K, double r);
geometry::DirectionSet make_directions(int dimension, double K, double r);

void save_fourier_samples(const std::string& path, const FourierSamples& samples);
FourierSamples load_fourier_samples(const std::string& path);

}  // namespace issp::spectral

#endif  // ISSP_SPECTRAL_HPP
