#pragma once

#include <optional>
#include <vector>

#include "obstruct/gram.hpp"

/// Changemaker vectors and embeddings into their orthogonal complements.
namespace obstruct::lattice {

using Vector = std::vector<i64>;

/// Nonnegative, nondecreasing, and sigma_i <= sigma_0 + ... + sigma_{i-1} + 1.
bool is_changemaker(const Vector& entries);

/// All changemakers of the given length with sum of squares `norm`, in
/// lexicographic order.
std::vector<Vector> enumerate_changemakers(int length, i64 norm);

/// (sum sigma_i^2 - sum sigma_i) / 2.
i64 genus_from_changemaker(const Vector& sigma);

struct Embedding {
  Vector sigma;
  std::vector<Vector> vectors; // vectors[i] is the image of the i-th basis element
};

struct SearchOptions {
  // Quotient by coordinate permutations inside equal-sigma blocks and by sign
  // changes on sigma_i = 0 coordinates.  Off only for cross-checking.
  bool symmetry_pruning = true;
};

/// Checks an embedding against G under the pairing <x,y> = -sum x_i y_i:
/// Gram reproduction, orthogonality to sigma, and full rank with sigma.
bool verify_embedding(const GramMatrix& g, const Embedding& e);

/// Exhaustive search for an embedding of G into sigma-perp in -Z^{n+1}.
std::optional<Embedding> embed_in_complement(const GramMatrix& g, const Vector& sigma,
                                             const SearchOptions& options = {});

struct ObstructionResult {
  bool obstructed = true;
  std::vector<Embedding> witnesses; // enumeration order
  std::size_t changemakers_tested = 0;
};

/// Runs embed_in_complement over every changemaker of length n+1 and norm p.
/// Stops at the first witness unless `all` is set.
ObstructionResult changemaker_obstruction(const GramMatrix& g, i64 p, bool all = false,
                                          const SearchOptions& options = {});

} // namespace obstruct::lattice
