#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdc/words.hpp"

namespace pdc {

enum class Verdict { Primitive, NotPrimitive };

struct WhiteheadStep {
  std::string automorphism;  // e.g. "z->zY"
  CyclicWord word;
  int length;

  friend bool operator==(const WhiteheadStep&, const WhiteheadStep&) = default;
};

// Greedy cyclic-length descent over the rank-2 Whitehead moves. Lengths
// decrease strictly along steps; the verdict is Primitive exactly when the
// final cyclic length is 1. The identity is declared NotPrimitive.
struct WhiteheadTrace {
  CyclicWord initial;
  std::vector<WhiteheadStep> steps;
  Verdict verdict;

  friend bool operator==(const WhiteheadTrace&, const WhiteheadTrace&) = default;
};

// Membership of w in some free basis, decided by the descent above.
bool is_primitive(const Word& w);
WhiteheadTrace whitehead_trace(const Word& w);

// w(m,n): the canonical positive primitive containing m letters of the first
// generator and n of the second, for 1 <= m <= n. Position k (1-based, read
// along an arithmetic progression with step m modulo m+n) carries the first
// generator iff its residue lies in 1..m.
Word canonical_primitive(int m, int n);

// Primitivity of a positive word by the closed form: coprime letter counts
// and cyclic equality with w(m,n), after swapping generator roles when the
// first generator is the more frequent one. Rejects words with inverses.
bool positive_primitive_check(const Word& w);

// True when w equals u^k for some primitive u and k >= 1, so every primitive
// word qualifies with k = 1. Decided on the cyclic class: the canonical
// cyclic word is split at its smallest period and the root is handed to the
// descent.
bool is_power_of_primitive(const Word& w);

enum class ObstructionKind { MixedSignPair, GapPair };

// A certificate that w is neither primitive nor a positive power of a
// primitive. Writing x for the first generator and y for the second:
// MixedSignPair records occurrences of both xy and xy^-1; GapPair(n) records
// occurrences of both x y^n x and y^{n+2}. Positions index the canonical
// cyclic word; flip_g1/flip_g2 say which orientation re-assignment
// (independent negation of each generator) exposed the patterns. Detection
// is sound, not complete.
struct Obstruction {
  ObstructionKind kind;
  int gap;  // n for GapPair; -1 for MixedSignPair
  int first_pos;
  int second_pos;
  bool flip_g1;
  bool flip_g2;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

// Scans all four orientation re-assignments in a fixed order and returns the
// first obstruction found, if any.
std::optional<Obstruction> detect_obstruction(const Word& w);

// Exponent sums per generator.
std::pair<int, int> abelianization(const Word& w);

std::string trace_to_text(const WhiteheadTrace& trace);
std::string trace_to_record(const WhiteheadTrace& trace);

}  // namespace pdc
