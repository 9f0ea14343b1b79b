#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pdc/pqseq.hpp"
#include "pdc/words.hpp"

namespace pdc {

// (x y^q)^m x y^n with q >= 1, m >= 0, n >= 0.
struct PowerForm {
  int block_exponent;  // q
  int block_count;     // m
  int tail_exponent;   // n

  friend bool operator==(const PowerForm&, const PowerForm&) = default;
};

// The positive word the form denotes, over {x,y}; its length is
// m*(q+1) + 1 + n.
Word expand(const PowerForm& form);

// Compact rendering: "x", "xy^7", "(xy^5)^2xy^2".
std::string to_string(const PowerForm& form);

// Farey fraction a/b with a, b >= 0, not both zero; 1/0 is the point at
// infinity. Mediants of Farey neighbours stay in lowest terms.
struct FareyLabel {
  int num;
  int den;

  friend bool operator==(const FareyLabel&, const FareyLabel&) = default;
};

FareyLabel make_label(int num, int den);
FareyLabel mediant(const FareyLabel& a, const FareyLabel& b);
std::string to_string(const FareyLabel& label);
FareyLabel parse_label(const std::string& text);

struct DiskDescriptor {
  PowerForm form;
  FareyLabel label;

  friend bool operator==(const DiskDescriptor&, const DiskDescriptor&) = default;
};

enum class Side { L, R };

// The created disk carries (q, m1+m2+1, n1+n2-q) and the mediant label.
// R keeps the first parent: (first, created); L keeps the second:
// (created, second). Throws NegativeTail when n1+n2 < q.
struct ReplaceResult {
  DiskDescriptor created;
  DiskDescriptor first;
  DiskDescriptor second;
};

ReplaceResult replace(const DiskDescriptor& first, const DiskDescriptor& second,
                      Side side);

// Plain Euclidean expansion of s/(t+1) for coprime s >= t+1 >= 1: quotients
// are >= 1 and the last is >= 2 whenever there are at least two.
std::vector<int> continued_fraction(int s, int t_plus_1);

struct StripVertex {
  int id;  // -1, 0, 1, ... in creation order
  FareyLabel label;
  PowerForm form;
  bool primitive;

  friend bool operator==(const StripVertex&, const StripVertex&) = default;
};

// The triangulated strip grown by L/R-replacements: one triangle per
// replacement, edges record disjointness of the incident disks.
struct StripGraph {
  LensParams params;
  int remainder;        // r with p = q_norm*m + r, 2 <= r <= q_norm-2
  int s;
  int t;                // s*r - t*q_norm = q_norm + 1, t minimal
  std::vector<int> cf;  // continued fraction of s/(t+1)
  std::vector<StripVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;

  friend bool operator==(const StripGraph&, const StripGraph&) = default;
};

// Builds the witness strip for non-contractible parameters: seeds
// D_-1 = (q,0,0) at 0/1 and D_0 = (q,m-1,q+r) at 1/0, then cf[0]
// R-replacements (the first of them creating D_1), cf[1] L-replacements, and
// so on alternating. The final vertex has label s/(t+1), tail q+1, and is
// primitive; D_0 and D_1 are not. Throws ContractibleInput when
// p mod q_norm is 1 or q_norm-1 (always the case for q_norm <= 3).
StripGraph witness(const LensParams& params);

// True when removing every non-primitive vertex leaves the first vertex
// (id -1) and the last one in different components.
bool separation_check(const StripGraph& strip);

std::string strip_to_record(const StripGraph& strip);
StripGraph strip_from_record(const std::string& record);
std::string strip_to_dot(const StripGraph& strip);

}  // namespace pdc
