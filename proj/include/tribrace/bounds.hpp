#pragma once

namespace tribrace {

// Search and size limits used across the library. Defaults are tuned for
// desk-scale exact computation; every limit can be raised or lowered through
// a TRIFACT_BOUND_* environment variable (see from_env) or per call.
struct Bounds {
  int full_assoc_check = 512;     // exhaustive n^3 associativity scan up to this order
  int assoc_samples = 1000;       // sampled triples above it (fixed seed 0)
  int dense_table = 2048;         // materialize Cayley tables up to this order
  int automorphism_search = 120;  // automorphisms()
  int isomorphism_search = 256;   // constrained_isomorphism()
  int normal_subgroup_search = 128;
  int subgroup_search = 256;      // all_subgroups(), subbrace_bijection()
  int brace_enumeration = 8;      // enumerate_braces()
  int eager_decomposition = 4096; // trifactorised decomposition cache

  // Defaults overridden by TRIFACT_BOUND_{ASSOC,DENSE,AUT,ISO,NORMAL,
  // SUBGROUP,ENUM,DECOMP} when set to a positive integer.
  static Bounds from_env();

  // from_env() evaluated once per process.
  static const Bounds& active();
};

}  // namespace tribrace
