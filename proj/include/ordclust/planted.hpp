#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ordclust/distributions.hpp"
#include "ordclust/types.hpp"

namespace ordclust {

/// Latent pairwise similarities w_ij of a planted instance. Symmetric with an
/// undefined diagonal (stored as 0, never read by consumers).
struct LatentSimilarities {
    Eigen::MatrixXd values;

    int n() const { return static_cast<int>(values.rows()); }
};

/// Full description of one synthetic instance.
struct PlantedConfig {
    int n = 0;
    std::vector<int> cluster_sizes;
    DistributionSpec f_in;
    DistributionSpec f_out;
    double epsilon = 1.0;
    SamplingSpec sampling;
    std::uint64_t seed = 0;
};

/// Number of triplet queries (pivot + unordered pair): n * C(n-1, 2).
std::uint64_t triplet_universe_size(int n);
/// Number of quadruplet queries (unordered pair of distinct item pairs):
/// C(C(n,2), 2).
std::uint64_t quadruplet_universe_size(int n);

/// Assigns the first sizes[0] items to cluster 0, the next sizes[1] to
/// cluster 1, and so on, then applies a seed-determined permutation of the
/// item indices.
Partition generate_partition(int n, const std::vector<int>& cluster_sizes,
                             std::uint64_t seed);

/// Draws w_ij ~ f_in for within-cluster pairs and w_ij ~ f_out otherwise,
/// mutually independent, stored symmetrically.
LatentSimilarities sample_similarities(const Partition& partition,
                                       const DistributionSpec& f_in,
                                       const DistributionSpec& f_out,
                                       std::uint64_t seed);

/// Samples triplet queries from the universe (Rate: each query independently,
/// Count: exactly m distinct queries) and answers each one from w with flip
/// probability (1-epsilon)/2. Every query appears at most once.
std::vector<TripletRecord> sample_triplets(const LatentSimilarities& w,
                                           const SamplingSpec& sampling,
                                           double epsilon, std::uint64_t seed);

std::vector<QuadrupletRecord> sample_quadruplets(const LatentSimilarities& w,
                                                 const SamplingSpec& sampling,
                                                 double epsilon,
                                                 std::uint64_t seed);

}  // namespace ordclust
