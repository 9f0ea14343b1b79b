#include "pdc/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "modular.hpp"
#include "pdc/errors.hpp"

namespace pdc {

namespace {

constexpr int kLabelWidth = 18;

std::string connectivity_id(Connectivity c) {
  return c == Connectivity::Connected ? "connected" : "infinitely-many-tree-components";
}

Connectivity connectivity_from_id(const std::string& id) {
  if (id == "connected") return Connectivity::Connected;
  if (id == "infinitely-many-tree-components") return Connectivity::InfinitelyManyTreeComponents;
  throw ValidationError("unknown connectivity value: " + id);
}

std::string shape_id(ComponentShape s) {
  return s == ComponentShape::Tree ? "tree" : "two-dimensional";
}

ComponentShape shape_from_id(const std::string& id) {
  if (id == "tree") return ComponentShape::Tree;
  if (id == "two-dimensional") return ComponentShape::TwoDimensional;
  throw ValidationError("unknown component shape value: " + id);
}

std::string edge_type_id(EdgeType t) {
  switch (t) {
    case EdgeType::T0: return "type-0";
    case EdgeType::T1: return "type-1";
    case EdgeType::T2: return "type-2";
  }
  throw std::logic_error("unhandled edge type");
}

EdgeType edge_type_from_id(const std::string& id) {
  if (id == "type-0") return EdgeType::T0;
  if (id == "type-1") return EdgeType::T1;
  if (id == "type-2") return EdgeType::T2;
  throw ValidationError("unknown edge type value: " + id);
}

std::string simplex_type_id(SimplexType t) {
  return t == SimplexType::S1 ? "type-1" : "type-3";
}

SimplexType simplex_type_from_id(const std::string& id) {
  if (id == "type-1") return SimplexType::S1;
  if (id == "type-3") return SimplexType::S3;
  throw ValidationError("unknown 2-simplex type value: " + id);
}

std::string dual_rule_id(CommonDualRule r) {
  switch (r) {
    case CommonDualRule::AllPairsTwoDuals: return "all-pairs-two-duals";
    case CommonDualRule::AllPairsUniqueDual: return "all-pairs-unique-dual";
    case CommonDualRule::SomePairsUniqueDual: return "some-pairs-unique-dual";
  }
  throw std::logic_error("unhandled common dual rule");
}

CommonDualRule dual_rule_from_id(const std::string& id) {
  if (id == "all-pairs-two-duals") return CommonDualRule::AllPairsTwoDuals;
  if (id == "all-pairs-unique-dual") return CommonDualRule::AllPairsUniqueDual;
  if (id == "some-pairs-unique-dual") return CommonDualRule::SomePairsUniqueDual;
  throw ValidationError("unknown common dual rule value: " + id);
}

std::string dual_rule_text(CommonDualRule r) {
  switch (r) {
    case CommonDualRule::AllPairsTwoDuals:
      return "every pair has exactly two disjoint common dual disks";
    case CommonDualRule::AllPairsUniqueDual:
      return "every pair has a unique common dual disk";
    case CommonDualRule::SomePairsUniqueDual:
      return "some pairs have a common dual disk; when one exists it is unique";
  }
  throw std::logic_error("unhandled common dual rule");
}

std::string triple_rule_id(TripleRule r) {
  switch (r) {
    case TripleRule::NoTriples: return "no-triples";
    case TripleRule::EveryPairInUniqueTriple: return "every-pair-in-unique-triple";
    case TripleRule::DualPairUniqueOthersTwo: return "dual-pair-unique-others-two";
    case TripleRule::DualPairUniqueOrNoneOthersUnique:
      return "dual-pair-unique-or-none-others-unique";
  }
  throw std::logic_error("unhandled triple rule");
}

TripleRule triple_rule_from_id(const std::string& id) {
  if (id == "no-triples") return TripleRule::NoTriples;
  if (id == "every-pair-in-unique-triple") return TripleRule::EveryPairInUniqueTriple;
  if (id == "dual-pair-unique-others-two") return TripleRule::DualPairUniqueOthersTwo;
  if (id == "dual-pair-unique-or-none-others-unique") {
    return TripleRule::DualPairUniqueOrNoneOthersUnique;
  }
  throw ValidationError("unknown triple rule value: " + id);
}

std::string triple_rule_text(TripleRule r) {
  switch (r) {
    case TripleRule::NoTriples:
      return "no primitive triples";
    case TripleRule::EveryPairInUniqueTriple:
      return "every pair lies in a unique triple";
    case TripleRule::DualPairUniqueOthersTwo:
      return "pairs with a common dual lie in a unique triple; pairs without lie in exactly two";
    case TripleRule::DualPairUniqueOrNoneOthersUnique:
      return "pairs with a common dual lie in at most one triple; pairs without lie in a unique triple";
  }
  throw std::logic_error("unhandled triple rule");
}

}  // namespace

bool classify(const LensParams& params) {
  validate_params(params);
  if (params.q_norm <= 3) return true;
  const int r = params.p % params.q_norm;
  return r == 1 || r == params.q_norm - 1;
}

StructureReport report(const LensParams& params) {
  validate_params(params);
  StructureReport rep;
  rep.params = params;
  rep.contractible = classify(params);
  const int p = params.p;
  const int q = params.q_norm;
  const bool two_dim = q == 2 || p == 2 * q + 1;
  if (two_dim && !rep.contractible) {
    throw std::logic_error("two-dimensional complexes must be contractible");
  }
  rep.dimension = two_dim ? 2 : 1;
  rep.connectivity =
      rep.contractible ? Connectivity::Connected : Connectivity::InfinitelyManyTreeComponents;
  rep.component_shape = two_dim ? ComponentShape::TwoDimensional : ComponentShape::Tree;
  if (p == 2) {
    rep.common_dual_rule = CommonDualRule::AllPairsTwoDuals;
  } else if (q == 1) {
    rep.common_dual_rule = CommonDualRule::AllPairsUniqueDual;
  } else {
    rep.common_dual_rule = CommonDualRule::SomePairsUniqueDual;
  }
  if (!two_dim) {
    rep.triple_rule = TripleRule::NoTriples;
  } else if (p == 3) {
    rep.triple_rule = TripleRule::EveryPairInUniqueTriple;
  } else if (p == 5) {
    rep.triple_rule = TripleRule::DualPairUniqueOthersTwo;
  } else {
    rep.triple_rule = TripleRule::DualPairUniqueOrNoneOthersUnique;
  }
  if (!rep.contractible) {
    rep.case_id = "nc";
    rep.edge_types = {{EdgeType::T0, "infinitely many meet each vertex"},
                      {EdgeType::T1, "infinitely many meet each vertex"}};
    rep.edge_simplex_incidence = "none";
    rep.clause =
        "The complex has infinitely many connected components, all trees isomorphic to "
        "each other; every vertex has infinite valency and meets infinitely many edges "
        "of type-0 and of type-1.";
  } else if (two_dim) {
    if (p == 3) {
      rep.case_id = "2a";
      rep.edge_types = {{EdgeType::T1, "every edge; each lies in a unique 2-simplex"}};
      rep.simplex_types = {SimplexType::S3};
      rep.edge_simplex_incidence = "t1:unique";
      rep.clause =
          "The complex is two-dimensional and every vertex meets infinitely many "
          "2-simplices; every edge is of type-1, every 2-simplex is of type-3, and "
          "every edge lies in a unique 2-simplex.";
    } else if (p == 5) {
      rep.case_id = "2b";
      rep.edge_types = {{EdgeType::T0, "each lies in exactly two 2-simplices"},
                        {EdgeType::T1, "each lies in a unique 2-simplex"}};
      rep.simplex_types = {SimplexType::S1};
      rep.edge_simplex_incidence = "t0:two t1:unique";
      rep.clause =
          "The complex is two-dimensional and every vertex meets infinitely many "
          "2-simplices; every edge is of type-0 or type-1 and every 2-simplex is of "
          "type-1, with each type-0 edge in exactly two 2-simplices and each type-1 "
          "edge in a unique 2-simplex.";
    } else {
      rep.case_id = "2c";
      rep.edge_types = {{EdgeType::T0, "each lies in a unique 2-simplex"},
                        {EdgeType::T1, "each lies in a unique 2-simplex or in none"}};
      rep.simplex_types = {SimplexType::S1};
      rep.edge_simplex_incidence = "t0:unique t1:unique-or-none";
      rep.clause =
          "The complex is two-dimensional and every vertex meets infinitely many "
          "2-simplices; every edge is of type-0 or type-1 and every 2-simplex is of "
          "type-1, with each type-0 edge in a unique 2-simplex and each type-1 edge in "
          "a unique 2-simplex or in none.";
    }
  } else if (p == 2) {
    rep.case_id = "1a";
    rep.edge_types = {{EdgeType::T2, "every edge"}};
    rep.edge_simplex_incidence = "none";
    rep.clause =
        "The complex is a tree with infinite valency at every vertex, and every edge "
        "is of type-2.";
  } else if (q == 1) {
    rep.case_id = "1b";
    rep.edge_types = {{EdgeType::T1, "every edge"}};
    rep.edge_simplex_incidence = "none";
    rep.clause =
        "The complex is a tree with infinite valency at every vertex, and every edge "
        "is of type-1.";
  } else {
    rep.case_id = "1c";
    rep.edge_types = {{EdgeType::T0, "infinitely many meet each vertex"},
                      {EdgeType::T1, "infinitely many meet each vertex"}};
    rep.edge_simplex_incidence = "none";
    rep.clause =
        "The complex is a tree with infinite valency at every vertex; every edge is of "
        "type-0 or type-1, and infinitely many edges of each type meet at every vertex.";
  }
  return rep;
}

bool report_content_equal(const StructureReport& a, const StructureReport& b) {
  return a.contractible == b.contractible && a.dimension == b.dimension &&
         a.connectivity == b.connectivity && a.component_shape == b.component_shape &&
         a.edge_types == b.edge_types && a.simplex_types == b.simplex_types &&
         a.edge_simplex_incidence == b.edge_simplex_incidence &&
         a.common_dual_rule == b.common_dual_rule && a.triple_rule == b.triple_rule &&
         a.case_id == b.case_id && a.clause == b.clause;
}

int DiskSequenceModel::modeled_intersections(int i, int j) const {
  if (i < 0 || j < 0 || i > params.p || j > params.p || i == j) {
    throw ValidationError("intersection indices must be distinct and within 0.." +
                          std::to_string(params.p) + " (got i=" + std::to_string(i) +
                          ", j=" + std::to_string(j) + ")");
  }
  return std::abs(j - i) - 1;
}

bool DiskSequenceModel::is_primitive_index(int j) const {
  return std::binary_search(primitive_indices.begin(), primitive_indices.end(), j);
}

bool DiskSequenceModel::is_semiprimitive_index(int j) const { return j == 0 || j == params.p; }

DiskSequenceModel disk_sequence_model(const LensParams& params) {
  validate_params(params);
  const PqSequence seq = make_sequence(params);
  DiskSequenceModel model;
  model.params = params;
  model.boundary_words.reserve(seq.words.size());
  for (const Word& w : seq.words) model.boundary_words.push_back(substitute_z_to_xy(w));
  model.primitive_indices.assign(seq.primitive_indices.begin(), seq.primitive_indices.end());
  return model;
}

bool homeomorphism_invariance_check(int p) {
  if (p < 2) {
    throw ValidationError("p must be at least 2 (got p=" + std::to_string(p) + ")");
  }
  for (int q = 1; q < p; ++q) {
    if (std::gcd(p, q) != 1) continue;
    const int inv = detail::mod_inverse(q, p);
    const StructureReport base = report(make_params(p, q));
    for (int other : {p - q, inv, p - inv}) {
      const LensParams params = make_params(p, other);
      if (classify(params) != base.contractible) return false;
      if (!report_content_equal(base, report(params))) return false;
    }
  }
  return true;
}

std::string report_to_text(const StructureReport& rep) {
  std::ostringstream out;
  auto line = [&out](const std::string& label, const std::string& value) {
    out << label;
    for (std::size_t i = label.size(); i < kLabelWidth; ++i) out << ' ';
    out << value << '\n';
  };
  out << "L(" << rep.params.p << "," << rep.params.q << ")  q_norm=" << rep.params.q_norm
      << "  q_prime=" << rep.params.q_prime << '\n';
  line("contractible", rep.contractible ? "yes" : "no");
  line("dimension", std::to_string(rep.dimension));
  line("connectivity", rep.connectivity == Connectivity::Connected
                           ? "connected"
                           : "infinitely many tree components");
  line("component shape", rep.component_shape == ComponentShape::Tree ? "tree" : "two-dimensional");
  line("case", rep.case_id);
  line("common dual rule", dual_rule_text(rep.common_dual_rule));
  line("triple rule", triple_rule_text(rep.triple_rule));
  out << "edge types\n";
  for (const EdgeTypeNote& note : rep.edge_types) {
    line("  " + edge_type_id(note.type), note.note);
  }
  if (rep.simplex_types.empty()) {
    line("2-simplex types", "none");
  } else {
    std::string joined;
    for (const SimplexType t : rep.simplex_types) {
      if (!joined.empty()) joined += ", ";
      joined += simplex_type_id(t);
    }
    line("2-simplex types", joined);
  }
  line("incidence", rep.edge_simplex_incidence);
  line("clause", rep.clause);
  line("notes", "type-k edge: its end pair has exactly k common dual disks");
  line("", "type-1 2-simplex: exactly one of its three pairs has a common dual disk");
  line("", "type-3 2-simplex: all three pairs have common dual disks");
  return out.str();
}

std::string report_to_record(const StructureReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = "pdc.report.v1";
  j["p"] = rep.params.p;
  j["q"] = rep.params.q;
  j["q_norm"] = rep.params.q_norm;
  j["q_prime"] = rep.params.q_prime;
  j["contractible"] = rep.contractible;
  j["dimension"] = rep.dimension;
  j["connectivity"] = connectivity_id(rep.connectivity);
  j["component_shape"] = shape_id(rep.component_shape);
  j["case_id"] = rep.case_id;
  j["common_dual_rule"] = dual_rule_id(rep.common_dual_rule);
  j["triple_rule"] = triple_rule_id(rep.triple_rule);
  j["edge_types"] = nlohmann::ordered_json::array();
  for (const EdgeTypeNote& note : rep.edge_types) {
    j["edge_types"].push_back({{"type", edge_type_id(note.type)}, {"note", note.note}});
  }
  j["simplex_types"] = nlohmann::ordered_json::array();
  for (const SimplexType t : rep.simplex_types) j["simplex_types"].push_back(simplex_type_id(t));
  j["edge_simplex_incidence"] = rep.edge_simplex_incidence;
  j["clause"] = rep.clause;
  return j.dump(2) + "\n";
}

StructureReport report_from_record(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed report record: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "pdc.report.v1") {
      throw ValidationError("unexpected schema in report record");
    }
    StructureReport rep;
    rep.params = make_params(j.at("p").get<int>(), j.at("q").get<int>());
    if (j.at("q_norm").get<int>() != rep.params.q_norm ||
        j.at("q_prime").get<int>() != rep.params.q_prime) {
      throw ValidationError("report record has inconsistent derived parameters");
    }
    rep.contractible = j.at("contractible").get<bool>();
    rep.dimension = j.at("dimension").get<int>();
    rep.connectivity = connectivity_from_id(j.at("connectivity").get<std::string>());
    rep.component_shape = shape_from_id(j.at("component_shape").get<std::string>());
    rep.case_id = j.at("case_id").get<std::string>();
    rep.common_dual_rule = dual_rule_from_id(j.at("common_dual_rule").get<std::string>());
    rep.triple_rule = triple_rule_from_id(j.at("triple_rule").get<std::string>());
    for (const auto& entry : j.at("edge_types")) {
      rep.edge_types.push_back({edge_type_from_id(entry.at("type").get<std::string>()),
                                entry.at("note").get<std::string>()});
    }
    for (const auto& entry : j.at("simplex_types")) {
      rep.simplex_types.push_back(simplex_type_from_id(entry.get<std::string>()));
    }
    rep.edge_simplex_incidence = j.at("edge_simplex_incidence").get<std::string>();
    rep.clause = j.at("clause").get<std::string>();
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report record: ") + e.what());
  }
}

}  // namespace pdc
