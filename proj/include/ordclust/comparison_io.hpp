#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "ordclust/types.hpp"

namespace ordclust {

/// On-disk comparison formats. A file is one header line
///   # kind=<triplet|quadruplet> n=<n>
/// followed by one record per line, fields separated by single spaces.
struct ComparisonHeader {
    enum class Kind { Triplet, Quadruplet };
    Kind kind = Kind::Triplet;
    int n = 0;
    long long count = -1;  // -1 when unknown/streamed
};

void write_triplets(const std::string& path, int n,
                    const std::vector<TripletRecord>& records);
void write_quadruplets(const std::string& path, int n,
                       const std::vector<QuadrupletRecord>& records);

/// Streaming reader; memory use is independent of the record count. Records
/// are validated as they are read and quadruplet pairs are canonicalized to
/// (min, max) without touching the semantic pair order.
class ComparisonReader {
 public:
    explicit ComparisonReader(const std::string& path);

    const ComparisonHeader& header() const { return header_; }

    /// Reads the next record; returns false at end of file. Throws if the
    /// file is of the other kind or a line is malformed.
    bool next(TripletRecord& out);
    bool next(QuadrupletRecord& out);

 private:
    bool next_line();
    [[noreturn]] void fail(const std::string& message) const;

    std::ifstream in_;
    std::string path_;
    std::string line_;
    long long line_number_ = 1;
    ComparisonHeader header_;
};

/// Convenience eager loaders for desk-scale files.
std::vector<TripletRecord> read_all_triplets(const std::string& path, int& n_out);
std::vector<QuadrupletRecord> read_all_quadruplets(const std::string& path, int& n_out);

/// Reads just the header of a comparison file.
ComparisonHeader peek_comparison_header(const std::string& path);

}  // namespace ordclust
