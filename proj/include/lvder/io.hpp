#pragma once

#include "lvder/derivation.hpp"
#include "lvder/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace lvder {

/// Largest dimension accepted from files (support sets are 64-bit masks).
inline constexpr std::size_t kMaxFileDimension = 64;

enum class InputFormat { Auto, Matrix, Graph };

/// Reads an algebra. Blank lines and lines starting with '#' are skipped.
/// The first remaining line is n. A matrix file continues with n rows of n
/// rationals; a graph file continues with "i j w" records (1-based,
/// α_ij = w) where unlisted pairs are solid. In Auto mode a file whose data
/// rows have n tokens is a matrix unless n = 3 and the first token is an
/// integer (a diagonal entry must be 1/2). Errors are ParseError with
/// "source:line:" prefixes, or ValidationError for a parsed matrix that is
/// not an LV structure matrix.
LVAlgebra read_algebra(std::istream& in, const std::string& source, InputFormat format = InputFormat::Auto);
LVAlgebra load_algebra(const std::filesystem::path& path, InputFormat format = InputFormat::Auto);

/// n, then n rows of n rationals; entry (t, k) is the e_t-coordinate of the
/// image of e_k.
LinearMap read_linear_map(std::istream& in, const std::string& source);
LinearMap load_linear_map(const std::filesystem::path& path);

void write_linear_map(std::ostream& out, const LinearMap& d);
void write_matrix(std::ostream& out, const RatMatrix& m);
/// Graph file listing only the dashed pairs.
void write_graph(std::ostream& out, const WeightedGraph& g);

}  // namespace lvder
