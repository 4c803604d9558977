#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "distcomm/cooccur.hpp"
#include "distcomm/error.hpp"
#include "distcomm/sparse_table.hpp"

namespace distcomm {

/// Shannon entropy in bits of a probability vector; 0·log 0 is taken as 0.
inline double shannon_entropy(std::span<const double> probs) {
  long double h = 0.0L;
  for (double p : probs) {
    if (p > 0.0) h -= static_cast<long double>(p) * std::log2(static_cast<long double>(p));
  }
  return static_cast<double>(h);
}

inline double shannon_entropy(const ProbDist& dist) {
  long double h = 0.0L;
  for (const auto& c : dist.cells()) {
    if (c.value > 0.0) {
      const auto p = static_cast<long double>(c.value);
      h -= p * std::log2(p);
    }
  }
  return static_cast<double>(h);
}

struct GroupEntropy {
  std::string label;
  double weight = 0.0;   // share of all co-occurrence events
  double entropy = 0.0;  // bits, of the group's own normalized (x, y) matrix

  friend bool operator==(const GroupEntropy&, const GroupEntropy&) = default;
};

/// Between-group / within-group split of the cube entropy:
/// h_total = h0 + sum_g weight_g * h_g.
struct EntropyDecomposition {
  double h_total = 0.0;
  std::vector<GroupEntropy> groups;
  double sigma_h = 0.0;
  double h0 = 0.0;
  double pct_h0 = 0.0;

  friend bool operator==(const EntropyDecomposition&, const EntropyDecomposition&) = default;
};

inline EntropyDecomposition decompose(const CoocCube& cube) {
  const auto total = cube.total();
  if (total == 0) throw DegenerateError("decompose: cube has zero total");
  if (cube.z_labels.empty()) throw InputError("decompose: cube has no groups");

  EntropyDecomposition out;
  out.h_total = shannon_entropy(to_distribution(cube));

  const std::size_t nz = cube.z_labels.size();
  std::vector<std::vector<std::uint64_t>> per_group(nz);
  std::vector<std::uint64_t> mass(nz, 0);
  for (const auto& c : cube.counts.cells()) {
    per_group[c.index[2]].push_back(c.value);
    mass[c.index[2]] += c.value;
  }

  long double sigma = 0.0L;
  std::vector<double> probs;
  for (std::size_t g = 0; g < nz; ++g) {
    GroupEntropy ge{cube.z_labels[g], 0.0, 0.0};
    if (mass[g] > 0) {
      ge.weight = static_cast<double>(mass[g]) / static_cast<double>(total);
      probs.clear();
      for (auto count : per_group[g]) {
        probs.push_back(static_cast<double>(count) / static_cast<double>(mass[g]));
      }
      ge.entropy = shannon_entropy(probs);
      sigma += static_cast<long double>(ge.weight) * ge.entropy;
    }
    out.groups.push_back(std::move(ge));
  }
  out.sigma_h = static_cast<double>(sigma);
  out.h0 = out.h_total - out.sigma_h;
  out.pct_h0 = out.h_total > 0.0 ? 100.0 * out.h0 / out.h_total : 0.0;
  return out;
}

/// Marginal and joint entropies of the cube with the pairwise mutual
/// informations and the three-way total correlation.
struct TransmissionReport {
  double h_x = 0.0, h_y = 0.0, h_z = 0.0;
  double h_xy = 0.0, h_xz = 0.0, h_yz = 0.0, h_xyz = 0.0;
  double t_xy = 0.0, t_xz = 0.0, t_yz = 0.0, t_xyz = 0.0;

  friend bool operator==(const TransmissionReport&, const TransmissionReport&) = default;
};

/// Applies the transmission identities to already-computed entropies.
inline TransmissionReport transmissions_from_entropies(double h_x, double h_y, double h_z,
                                                       double h_xy, double h_xz, double h_yz,
                                                       double h_xyz) {
  TransmissionReport r{h_x, h_y, h_z, h_xy, h_xz, h_yz, h_xyz};
  r.t_xy = h_x + h_y - h_xy;
  r.t_xz = h_x + h_z - h_xz;
  r.t_yz = h_y + h_z - h_yz;
  r.t_xyz = h_x + h_y + h_z - h_xyz;
  return r;
}

inline TransmissionReport transmissions(const CoocCube& cube) {
  if (cube.total() == 0) throw DegenerateError("transmissions: cube has zero total");
  const auto dist = to_distribution(cube);
  auto h = [&](std::vector<Axis> keep) { return shannon_entropy(marginal(dist, std::move(keep))); };
  return transmissions_from_entropies(h({Axis::kX}), h({Axis::kY}), h({Axis::kZ}),
                                      h({Axis::kX, Axis::kY}), h({Axis::kX, Axis::kZ}),
                                      h({Axis::kY, Axis::kZ}), shannon_entropy(dist));
}

}  // namespace distcomm
