#pragma once

#include <set>
#include <string>
#include <vector>

#include "pdc/words.hpp"

namespace pdc {

// Coprime lens parameters with their derived quantities: q_norm = min(q, p-q)
// and the unique q_prime in [1, p/2] with q_norm * q_prime = +-1 (mod p).
struct LensParams {
  int p;
  int q;
  int q_norm;
  int q_prime;

  friend bool operator==(const LensParams&, const LensParams&) = default;
};

LensParams make_params(int p, int q);

// Rejects params whose fields do not match make_params(params.p, params.q).
// Guards hand-built aggregates; every function taking a LensParams calls it.
void validate_params(const LensParams& params);

// w_j of the (p,q)-sequence: position i in 1..p carries the first generator
// iff i is congruent to one of 1, 1+q, ..., 1+(j-1)q modulo p (raw q, not
// q_norm). w_0 = y^p, w_p = z^p.
Word word_j(const LensParams& params, int j);

// The four indices {1, q', p-q', p-1} whose sequence words are primitive
// (the set collapses when the values coincide).
std::set<int> four_primitive_indices(const LensParams& params);

struct PqSequence {
  LensParams params;
  std::vector<Word> words;  // w_0 .. w_p
  std::set<int> primitive_indices;

  friend bool operator==(const PqSequence&, const PqSequence&) = default;
};

inline constexpr int kDefaultVerifyThreshold = 64;

// Builds w_0..w_p and the primitive index set. For p up to verify_threshold
// every index is cross-checked against the Whitehead descent; a mismatch
// would be a logic error in one of the two routes and throws.
PqSequence make_sequence(const LensParams& params,
                         int verify_threshold = kDefaultVerifyThreshold);

// cyclic(w_{p-j}) == cyclic(reverse(swap(w_j))) for every j.
bool check_symmetry(const PqSequence& seq);

std::string sequence_to_text(const PqSequence& seq);
std::string sequence_to_record(const PqSequence& seq);
PqSequence sequence_from_record(const std::string& record);

}  // namespace pdc
