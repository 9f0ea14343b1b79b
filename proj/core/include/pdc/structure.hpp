#pragma once

#include <string>
#include <vector>

#include "pdc/pqseq.hpp"

namespace pdc {

// Connectivity of the primitive disk complex P(V).
enum class Connectivity { Connected, InfinitelyManyTreeComponents };

// Shape of each connected component.
enum class ComponentShape { Tree, TwoDimensional };

// An edge is of type-k when the primitive pair at its ends has exactly k
// common dual disks (k = 0: none, k = 1: unique, k = 2: a disjoint pair).
enum class EdgeType { T0, T1, T2 };

// A 2-simplex is of type-1 when exactly one of its three pairs has a common
// dual disk, and of type-3 when all three do.
enum class SimplexType { S1, S3 };

// How common dual disks are distributed over primitive pairs.
enum class CommonDualRule { AllPairsTwoDuals, AllPairsUniqueDual, SomePairsUniqueDual };

// How primitive triples contain primitive pairs.
enum class TripleRule {
  NoTriples,
  EveryPairInUniqueTriple,
  DualPairUniqueOthersTwo,
  DualPairUniqueOrNoneOthersUnique,
};

struct EdgeTypeNote {
  EdgeType type;
  std::string note;

  bool operator==(const EdgeTypeNote&) const = default;
};

// Full classification of P(V) for one lens space.
struct StructureReport {
  LensParams params;
  bool contractible = false;
  int dimension = 1;
  Connectivity connectivity = Connectivity::Connected;
  ComponentShape component_shape = ComponentShape::Tree;
  std::vector<EdgeTypeNote> edge_types;
  std::vector<SimplexType> simplex_types;
  std::string edge_simplex_incidence;
  CommonDualRule common_dual_rule = CommonDualRule::SomePairsUniqueDual;
  TripleRule triple_rule = TripleRule::NoTriples;
  std::string case_id;
  std::string clause;
};

// True iff P(V) is contractible: q_norm <= 3, or p mod q_norm is 1 or
// q_norm - 1.
bool classify(const LensParams& params);

// The unique classification row matching the parameters.
StructureReport report(const LensParams& params);

// Field-by-field equality ignoring params; used to compare reports of
// homeomorphic lens spaces.
bool report_content_equal(const StructureReport& a, const StructureReport& b);

// The disk sequence E_0, ..., E_p with boundary words written over {x, y}.
// Intersection counts are modeled by the closed form |j - i| - 1, not
// computed from curve geometry.
struct DiskSequenceModel {
  LensParams params;
  std::vector<Word> boundary_words;
  std::vector<int> primitive_indices;

  int modeled_intersections(int i, int j) const;
  bool is_primitive_index(int j) const;
  bool is_semiprimitive_index(int j) const;
};

DiskSequenceModel disk_sequence_model(const LensParams& params);

// Checks that classify and report agree across {q, p-q, q', p-q'} (q' the
// inverse of q mod p) for every q coprime to p.
bool homeomorphism_invariance_check(int p);

std::string report_to_text(const StructureReport& rep);
std::string report_to_record(const StructureReport& rep);
StructureReport report_from_record(const std::string& text);

}  // namespace pdc
