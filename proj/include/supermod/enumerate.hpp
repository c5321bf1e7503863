#pragma once

// Extreme rays of the ℓ-standardized supermodular cone K_ℓ(N) for small n.
//
// Coordinates: an ℓ-standardized function vanishes on ∅ and singletons, so it
// is a vector indexed by the subsets with |S| >= 2 (increasing mask order).
// The facets are the elementary imsets, in canonical triplet order.

#include <cstddef>
#include <string>
#include <vector>

#include "supermod/set_function.hpp"

namespace supermod {

struct Orbit {
  std::size_t representative;           // index into generators; lexicographically minimal
  std::vector<std::size_t> members;     // sorted indices into generators
};

struct RayCatalogue {
  int n = 0;
  std::vector<SetFunction> generators;  // sorted by value vector
  std::vector<Orbit> orbits;            // sorted by representative
};

struct EnumerationOptions {
  /// Allow n = 5 (long-running; memory hungry).
  bool allow_large = false;
  /// Worker threads; 0 means SMK_THREADS or hardware concurrency.
  unsigned threads = 0;
};

/// Production enumerator: incremental double description over exact integers.
/// Throws std::domain_error unless 2 <= n <= 4 (5 with allow_large).
RayCatalogue enumerate_extreme_rays(int n, const EnumerationOptions& options = {});

/// Independent oracle: every rank-(d-1) subset of facets, kernel ray kept
/// when it lies in the cone. 2 <= n <= 4.
RayCatalogue enumerate_bruteforce(int n, const EnumerationOptions& options = {});

/// Fills in orbits under all n! permutations.
RayCatalogue classify_orbits(RayCatalogue catalogue);

struct CatalogueCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;  // offending generators and details
};

struct CatalogueReport {
  std::vector<CatalogueCheck> checks;
  [[nodiscard]] bool passed() const;
};

/// Re-checks each generator (extremality, brute-force supermodularity,
/// ℓ-standardization, integrality, m(N) > 0) and closure under reflection,
/// permutations, lifting, modular extensions and replications.
CatalogueReport verify_catalogue(const RayCatalogue& catalogue);

/// Subsets with |S| >= 2 in increasing mask order (the S_ℓ coordinates).
std::vector<SubsetMask> lower_coordinates(int n);

/// Worker count: SMK_THREADS if set and positive, else hardware concurrency.
unsigned default_thread_count();

}  // namespace supermod
