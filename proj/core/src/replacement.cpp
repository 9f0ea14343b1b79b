#include "pdc/replacement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"
#include "modular.hpp"
#include "pdc/primitivity.hpp"

namespace pdc {

Word expand(const PowerForm& form) {
  if (form.block_exponent < 1 || form.block_count < 0 || form.tail_exponent < 0) {
    throw ValidationError("power form needs q >= 1, m >= 0, n >= 0 (got q=" +
                          std::to_string(form.block_exponent) + ", m=" +
                          std::to_string(form.block_count) + ", n=" +
                          std::to_string(form.tail_exponent) + ")");
  }
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(form.block_count) *
                  (static_cast<std::size_t>(form.block_exponent) + 1) +
              1 + static_cast<std::size_t>(form.tail_exponent));
  for (int b = 0; b < form.block_count; ++b) {
    out.push_back({Gen::One, 1});
    for (int i = 0; i < form.block_exponent; ++i) out.push_back({Gen::Two, 1});
  }
  out.push_back({Gen::One, 1});
  for (int i = 0; i < form.tail_exponent; ++i) out.push_back({Gen::Two, 1});
  return Word(std::move(out), kAlphabetXY);
}

std::string to_string(const PowerForm& form) {
  std::string s;
  if (form.block_count == 1) {
    s += "xy^" + std::to_string(form.block_exponent);
  } else if (form.block_count > 1) {
    s += "(xy^" + std::to_string(form.block_exponent) + ")^" +
         std::to_string(form.block_count);
  }
  s += "x";
  if (form.tail_exponent == 1) {
    s += "y";
  } else if (form.tail_exponent > 1) {
    s += "y^" + std::to_string(form.tail_exponent);
  }
  return s;
}

FareyLabel make_label(int num, int den) {
  if (num < 0 || den < 0 || (num == 0 && den == 0)) {
    throw ValidationError("Farey label needs a, b >= 0, not both zero (got " +
                          std::to_string(num) + "/" + std::to_string(den) + ")");
  }
  const int g = std::gcd(num, den);
  return {num / g, den / g};
}

FareyLabel mediant(const FareyLabel& a, const FareyLabel& b) {
  return {a.num + b.num, a.den + b.den};
}

std::string to_string(const FareyLabel& label) {
  return std::to_string(label.num) + "/" + std::to_string(label.den);
}

FareyLabel parse_label(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw ValidationError("Farey label must look like a/b (got '" + text + "')");
  }
  try {
    const int num = std::stoi(text.substr(0, slash));
    const int den = std::stoi(text.substr(slash + 1));
    return make_label(num, den);
  } catch (const std::logic_error&) {
    throw ValidationError("Farey label must look like a/b (got '" + text + "')");
  }
}

ReplaceResult replace(const DiskDescriptor& first, const DiskDescriptor& second,
                      Side side) {
  if (first.form.block_exponent != second.form.block_exponent) {
    throw ValidationError("replacement needs matching block exponents (got " +
                          std::to_string(first.form.block_exponent) + " and " +
                          std::to_string(second.form.block_exponent) + ")");
  }
  const int q = first.form.block_exponent;
  const int tails = first.form.tail_exponent + second.form.tail_exponent;
  if (tails < q) {
    throw NegativeTail("tail exponent n1+n2-q would be negative (n1=" +
                       std::to_string(first.form.tail_exponent) + ", n2=" +
                       std::to_string(second.form.tail_exponent) + ", q=" +
                       std::to_string(q) + ")");
  }
  const DiskDescriptor created{
      {q, first.form.block_count + second.form.block_count + 1, tails - q},
      mediant(first.label, second.label)};
  if (side == Side::R) return {created, first, created};
  return {created, created, second};
}

std::vector<int> continued_fraction(int s, int t_plus_1) {
  if (s < 1 || t_plus_1 < 1) {
    throw ValidationError("continued fraction arguments must be positive (got " +
                          std::to_string(s) + "/" + std::to_string(t_plus_1) + ")");
  }
  if (s < t_plus_1) {
    throw ValidationError("continued fraction needs s >= t+1 (got " +
                          std::to_string(s) + "/" + std::to_string(t_plus_1) + ")");
  }
  if (std::gcd(s, t_plus_1) != 1) {
    throw ValidationError("continued fraction arguments must be coprime (got " +
                          std::to_string(s) + "/" + std::to_string(t_plus_1) + ")");
  }
  std::vector<int> cf;
  int a = s, b = t_plus_1;
  while (b > 0) {
    cf.push_back(a / b);
    const int r = a % b;
    a = b;
    b = r;
  }
  return cf;
}

namespace {

void check_built_strip(const StripGraph& g) {
  const int q = g.params.q_norm;
  const int m = g.params.p / q;
  for (const StripVertex& v : g.vertices) {
    // Both exponents are affine in the label: the tail identity
    // n = a*r - (b-1)*q, and m = a*m0 + b - 1 with m0 = p/q.
    const long long a = v.label.num, b = v.label.den;
    if (v.form.tail_exponent != a * g.remainder - (b - 1) * q ||
        v.form.block_count != a * m + b - 1) {
      throw std::logic_error("witness vertex violates the label identities");
    }
  }
  const StripVertex& final_vertex = g.vertices.back();
  if (final_vertex.form.tail_exponent != q + 1 || !final_vertex.primitive ||
      !(final_vertex.label == FareyLabel{g.s, g.t + 1})) {
    throw std::logic_error("witness endpoint is not the primitive s/(t+1) disk");
  }
  if (g.vertices[1].primitive || g.vertices[2].primitive) {
    throw std::logic_error("witness interior seeds must be non-primitive");
  }
}

}  // namespace

StripGraph witness(const LensParams& params) {
  validate_params(params);
  const int p = params.p;
  const int q = params.q_norm;
  const int r = p % q;
  if (r < 2 || r > q - 2) {
    throw ContractibleInput("P(V) is contractible; no witness exists");
  }
  const int m = p / q;
  // Minimal t >= 0 with s*r - t*q = q+1: t+1 is the least positive residue
  // of -q^{-1} mod r, which lies in [1, r-1] since the inverse is nonzero.
  const int t_plus_1 = r - detail::mod_inverse(q % r, r);
  const int s = (q * t_plus_1 + 1) / r;

  StripGraph g;
  g.params = params;
  g.remainder = r;
  g.s = s;
  g.t = t_plus_1 - 1;
  g.cf = continued_fraction(s, t_plus_1);

  auto add_vertex = [&g](int id, FareyLabel label, PowerForm form) {
    g.vertices.push_back({id, label, form, is_primitive(expand(form))});
  };
  DiskDescriptor first{{q, m - 1, q + r}, {1, 0}};   // D_0
  DiskDescriptor second{{q, 0, 0}, {0, 1}};          // D_-1
  int first_id = 0, second_id = -1;
  add_vertex(second_id, second.label, second.form);
  add_vertex(first_id, first.label, first.form);
  g.edges.emplace_back(second_id, first_id);

  int next_id = 1;
  for (std::size_t block = 0; block < g.cf.size(); ++block) {
    const Side side = block % 2 == 0 ? Side::R : Side::L;
    for (int c = 0; c < g.cf[block]; ++c) {
      const ReplaceResult res = replace(first, second, side);
      add_vertex(next_id, res.created.label, res.created.form);
      g.edges.emplace_back(first_id, next_id);
      g.edges.emplace_back(second_id, next_id);
      std::array<int, 3> tri{first_id, second_id, next_id};
      std::sort(tri.begin(), tri.end());
      g.triangles.push_back(tri);
      first = res.first;
      second = res.second;
      if (side == Side::R) {
        second_id = next_id;
      } else {
        first_id = next_id;
      }
      ++next_id;
    }
  }
  check_built_strip(g);
  return g;
}

bool separation_check(const StripGraph& strip) {
  if (strip.vertices.empty()) return false;
  std::map<int, bool> primitive;
  int last = strip.vertices.front().id;
  for (const StripVertex& v : strip.vertices) {
    primitive[v.id] = v.primitive;
    last = std::max(last, v.id);
  }
  if (!primitive.at(-1) || !primitive.at(last)) return true;
  std::map<int, std::vector<int>> adj;
  for (const auto& [u, v] : strip.edges) {
    if (primitive.at(u) && primitive.at(v)) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  std::set<int> seen{-1};
  std::queue<int> frontier;
  frontier.push(-1);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    if (u == last) return false;
    for (int v : adj[u]) {
      if (seen.insert(v).second) frontier.push(v);
    }
  }
  return true;
}

std::string strip_to_record(const StripGraph& strip) {
  nlohmann::ordered_json j;
  j["schema"] = "pdc.strip.v1";
  j["p"] = strip.params.p;
  j["q"] = strip.params.q;
  j["q_norm"] = strip.params.q_norm;
  j["q_prime"] = strip.params.q_prime;
  j["remainder"] = strip.remainder;
  j["s"] = strip.s;
  j["t"] = strip.t;
  j["continued_fraction"] = strip.cf;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const StripVertex& v : strip.vertices) {
    j["vertices"].push_back({{"id", v.id},
                             {"label", to_string(v.label)},
                             {"q", v.form.block_exponent},
                             {"m", v.form.block_count},
                             {"n", v.form.tail_exponent},
                             {"word", to_string(v.form)},
                             {"primitive", v.primitive}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : strip.edges) j["edges"].push_back({u, v});
  j["triangles"] = strip.triangles;
  return j.dump(2) + "\n";
}

StripGraph strip_from_record(const std::string& record) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(record);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed strip record: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "pdc.strip.v1") {
      throw ValidationError("unexpected schema in strip record");
    }
    StripGraph g;
    g.params = make_params(j.at("p").get<int>(), j.at("q").get<int>());
    g.remainder = j.at("remainder").get<int>();
    g.s = j.at("s").get<int>();
    g.t = j.at("t").get<int>();
    g.cf = j.at("continued_fraction").get<std::vector<int>>();
    for (const auto& v : j.at("vertices")) {
      g.vertices.push_back({v.at("id").get<int>(),
                            parse_label(v.at("label").get<std::string>()),
                            {v.at("q").get<int>(), v.at("m").get<int>(),
                             v.at("n").get<int>()},
                            v.at("primitive").get<bool>()});
    }
    for (const auto& e : j.at("edges")) {
      g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    for (const auto& t : j.at("triangles")) {
      g.triangles.push_back(
          {t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed strip record: ") + e.what());
  }
}

std::string strip_to_dot(const StripGraph& strip) {
  std::ostringstream os;
  os << "graph strip {\n";
  os << "  node [shape=circle];\n";
  for (const StripVertex& v : strip.vertices) {
    os << "  \"D" << v.id << "\" [label=\"D" << v.id << "\\n"
       << to_string(v.label) << "\\n" << to_string(v.form) << "\"";
    if (v.primitive) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& [u, v] : strip.edges) {
    os << "  \"D" << u << "\" -- \"D" << v << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pdc
