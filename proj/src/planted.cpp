#include "ordclust/planted.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace ordclust {

namespace {

constexpr std::uint64_t kTagPartition = 0x01;
constexpr std::uint64_t kTagLatent = 0x02;
constexpr std::uint64_t kTagSelect = 0x03;
constexpr std::uint64_t kTagFlip = 0x04;

std::uint64_t choose2(std::uint64_t m) { return m * (m - 1) / 2; }

// Largest b with C(b,2) <= t (colex decoding).
std::uint64_t colex_row(std::uint64_t t) {
    auto b = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(t))) / 2.0);
    while (b >= 1 && choose2(b) > t) --b;
    while (choose2(b + 1) <= t) ++b;
    return b;
}

/// Draws the selected query indices, ascending. Rate mode walks the index
/// space with geometric gaps; Count mode uses Floyd's sampling.
std::vector<std::uint64_t> select_queries(std::uint64_t universe,
                                          const SamplingSpec& sampling, Rng rng) {
    std::vector<std::uint64_t> picked;
    if (sampling.mode == SamplingSpec::Mode::Rate) {
        const double p = sampling.rate;
        if (!(p > 0.0 && p <= 1.0))
            throw std::invalid_argument("sampling rate must lie in (0,1]");
        if (p == 1.0) {
            picked.resize(universe);
            std::iota(picked.begin(), picked.end(), std::uint64_t{0});
            return picked;
        }
        const double log_q = std::log1p(-p);
        double pos = -1.0;
        for (;;) {
            const double gap = std::floor(std::log(rng.next_open()) / log_q);
            pos += 1.0 + gap;
            if (pos >= static_cast<double>(universe)) break;
            picked.push_back(static_cast<std::uint64_t>(pos));
        }
        return picked;
    }
    const std::uint64_t m = sampling.count;
    if (m > universe)
        throw std::invalid_argument("requested comparison count exceeds the query universe");
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (std::uint64_t j = universe - m; j < universe; ++j) {
        const std::uint64_t t = rng.next_below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    picked.assign(chosen.begin(), chosen.end());
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace

SamplingSpec SamplingSpec::with_rate(double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("sampling rate must lie in (0,1]");
    SamplingSpec s;
    s.mode = Mode::Rate;
    s.rate = p;
    return s;
}

SamplingSpec SamplingSpec::with_count(std::uint64_t m) {
    SamplingSpec s;
    s.mode = Mode::Count;
    s.count = m;
    return s;
}

std::vector<int> Partition::cluster_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int label : labels) ++sizes[static_cast<std::size_t>(label)];
    return sizes;
}

int Partition::min_cluster_size() const {
    const auto sizes = cluster_sizes();
    return *std::min_element(sizes.begin(), sizes.end());
}

std::uint64_t triplet_universe_size(int n) {
    return static_cast<std::uint64_t>(n) * choose2(static_cast<std::uint64_t>(n) - 1);
}

std::uint64_t quadruplet_universe_size(int n) {
    return choose2(choose2(static_cast<std::uint64_t>(n)));
}

Partition generate_partition(int n, const std::vector<int>& cluster_sizes,
                             std::uint64_t seed) {
    if (cluster_sizes.empty()) throw std::invalid_argument("cluster_sizes must be nonempty");
    long long total = 0;
    for (int s : cluster_sizes) {
        if (s < 1) throw std::invalid_argument("every cluster must have at least one member");
        total += s;
    }
    if (total != n) throw std::invalid_argument("cluster sizes must sum to n");

    Partition part;
    part.k = static_cast<int>(cluster_sizes.size());
    part.labels.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < part.k; ++c)
        part.labels.insert(part.labels.end(), static_cast<std::size_t>(cluster_sizes[static_cast<std::size_t>(c)]), c);

    Rng rng = substream(seed, kTagPartition);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(part.labels[static_cast<std::size_t>(i)], part.labels[static_cast<std::size_t>(j)]);
    }
    return part;
}

LatentSimilarities sample_similarities(const Partition& partition,
                                       const DistributionSpec& f_in,
                                       const DistributionSpec& f_out,
                                       std::uint64_t seed) {
    const int n = partition.n();
    LatentSimilarities w;
    w.values = Eigen::MatrixXd::Zero(n, n);
    Rng rng = substream(seed, kTagLatent);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool within = partition.labels[static_cast<std::size_t>(i)] ==
                                partition.labels[static_cast<std::size_t>(j)];
            const double v = (within ? f_in : f_out).sample(rng);
            w.values(i, j) = v;
            w.values(j, i) = v;
        }
    }
    return w;
}

std::vector<TripletRecord> sample_triplets(const LatentSimilarities& w,
                                           const SamplingSpec& sampling,
                                           double epsilon, std::uint64_t seed) {
    const int n = w.n();
    if (n < 3) throw std::invalid_argument("triplets require n >= 3");
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in (0,1]");

    const std::uint64_t per_pivot = choose2(static_cast<std::uint64_t>(n) - 1);
    const std::uint64_t universe = triplet_universe_size(n);
    const auto picked = select_queries(universe, sampling, substream(seed, kTagSelect));

    Rng flip_rng = substream(seed, kTagFlip);
    const double flip_prob = 0.5 * (1.0 - epsilon);
    std::vector<TripletRecord> out;
    out.reserve(picked.size());
    for (const std::uint64_t q : picked) {
        const int pivot = static_cast<int>(q / per_pivot);
        const std::uint64_t t = q % per_pivot;
        const std::uint64_t b = colex_row(t);
        const std::uint64_t a = t - choose2(b);
        // Map pair indices from [0, n-1) (pivot removed) back to item ids.
        const int j = static_cast<int>(a) + (static_cast<int>(a) >= pivot ? 1 : 0);
        const int r = static_cast<int>(b) + (static_cast<int>(b) >= pivot ? 1 : 0);
        bool j_wins = w.values(pivot, j) > w.values(pivot, r);
        if (flip_rng.next_double() < flip_prob) j_wins = !j_wins;
        out.push_back(j_wins ? TripletRecord{pivot, j, r} : TripletRecord{pivot, r, j});
    }
    return out;
}

std::vector<QuadrupletRecord> sample_quadruplets(const LatentSimilarities& w,
                                                 const SamplingSpec& sampling,
                                                 double epsilon,
                                                 std::uint64_t seed) {
    const int n = w.n();
    if (n < 4) throw std::invalid_argument("quadruplets require n >= 4");
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in (0,1]");

    const std::uint64_t universe = quadruplet_universe_size(n);
    const auto picked = select_queries(universe, sampling, substream(seed, kTagSelect));

    const auto decode_pair = [](std::uint64_t p, int& lo, int& hi) {
        const std::uint64_t row = colex_row(p);
        hi = static_cast<int>(row);
        lo = static_cast<int>(p - choose2(row));
    };

    Rng flip_rng = substream(seed, kTagFlip);
    const double flip_prob = 0.5 * (1.0 - epsilon);
    std::vector<QuadrupletRecord> out;
    out.reserve(picked.size());
    for (const std::uint64_t q : picked) {
        const std::uint64_t pb = colex_row(q);
        const std::uint64_t pa = q - choose2(pb);
        int i, j, r, s;
        decode_pair(pa, i, j);
        decode_pair(pb, r, s);
        bool first_wins = w.values(i, j) > w.values(r, s);
        if (flip_rng.next_double() < flip_prob) first_wins = !first_wins;
        out.push_back(first_wins ? QuadrupletRecord{i, j, r, s}
                                 : QuadrupletRecord{r, s, i, j});
    }
    return out;
}

}  // namespace ordclust
