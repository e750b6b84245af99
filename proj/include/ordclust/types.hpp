#pragma once

#include <cstdint>
#include <vector>

namespace ordclust {

/// Assignment of n items to k clusters. Labels are cluster indices in [0, k)
/// and every cluster is nonempty.
struct Partition {
    std::vector<int> labels;
    int k = 0;

    int n() const { return static_cast<int>(labels.size()); }
    std::vector<int> cluster_sizes() const;
    int min_cluster_size() const;
};

/// "Item i is more similar to j than to r" (pivot i).
struct TripletRecord {
    int i = 0, j = 0, r = 0;
    bool operator==(const TripletRecord&) const = default;
};

/// "Pair (i,j) is more similar than pair (r,s)"; stored with i<j and r<s.
/// The pair order is semantic (first pair wins) and is never swapped.
struct QuadrupletRecord {
    int i = 0, j = 0, r = 0, s = 0;
    bool operator==(const QuadrupletRecord&) const = default;
};

/// How many comparison queries to draw from the query universe: either each
/// query independently with probability `rate`, or exactly `count` distinct
/// queries uniformly without replacement.
struct SamplingSpec {
    enum class Mode { Rate, Count };
    Mode mode = Mode::Rate;
    double rate = 1.0;
    std::uint64_t count = 0;

    static SamplingSpec with_rate(double p);
    static SamplingSpec with_count(std::uint64_t m);
};

}  // namespace ordclust
