#include "pdc/pqseq.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "modular.hpp"
#include "pdc/primitivity.hpp"

namespace pdc {

LensParams make_params(int p, int q) {
  if (p < 2) {
    throw ValidationError("p must be at least 2 (got p=" + std::to_string(p) +
                          ")");
  }
  if (q <= 0 || q >= p) {
    throw ValidationError("q must satisfy 0 < q < p (got p=" +
                          std::to_string(p) + ", q=" + std::to_string(q) + ")");
  }
  if (std::gcd(p, q) != 1) {
    throw ValidationError("gcd(p,q) must be 1 (got gcd(" + std::to_string(p) +
                          "," + std::to_string(q) +
                          ")=" + std::to_string(std::gcd(p, q)) + ")");
  }
  const int q_norm = std::min(q, p - q);
  const int inv = detail::mod_inverse(q_norm, p);
  const int q_prime = inv <= p / 2 ? inv : p - inv;
  return {p, q, q_norm, q_prime};
}

void validate_params(const LensParams& params) {
  const LensParams derived = make_params(params.p, params.q);
  if (params != derived) {
    throw ValidationError(
        "params must come from make_params: p=" + std::to_string(params.p) +
        ", q=" + std::to_string(params.q) + " derives q_norm=" +
        std::to_string(derived.q_norm) + ", q_prime=" +
        std::to_string(derived.q_prime) + " (got q_norm=" +
        std::to_string(params.q_norm) + ", q_prime=" +
        std::to_string(params.q_prime) + ")");
  }
}

Word word_j(const LensParams& params, int j) {
  validate_params(params);
  if (j < 0 || j > params.p) {
    throw ValidationError("sequence index must lie in [0, p] (got j=" +
                          std::to_string(j) + ", p=" +
                          std::to_string(params.p) + ")");
  }
  std::vector<char> marked(static_cast<std::size_t>(params.p) + 1, 0);
  for (int k = 0; k < j; ++k) {
    int pos = static_cast<int>(
        (1LL + static_cast<long long>(k) * params.q) % params.p);
    if (pos == 0) pos = params.p;
    marked[static_cast<std::size_t>(pos)] = 1;
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(params.p));
  for (int i = 1; i <= params.p; ++i) {
    letters.push_back({marked[static_cast<std::size_t>(i)] ? Gen::One : Gen::Two, 1});
  }
  return Word(std::move(letters), kAlphabetZY);
}

std::set<int> four_primitive_indices(const LensParams& params) {
  validate_params(params);
  return {1, params.q_prime, params.p - params.q_prime, params.p - 1};
}

PqSequence make_sequence(const LensParams& params, int verify_threshold) {
  validate_params(params);
  PqSequence seq{params, {}, four_primitive_indices(params)};
  seq.words.reserve(static_cast<std::size_t>(params.p) + 1);
  for (int j = 0; j <= params.p; ++j) {
    seq.words.push_back(word_j(params, j));
  }
  if (params.p <= verify_threshold) {
    for (int j = 0; j <= params.p; ++j) {
      const bool expected = seq.primitive_indices.count(j) > 0;
      if (is_primitive(seq.words[static_cast<std::size_t>(j)]) != expected) {
        throw std::logic_error(
            "primitive index formula disagrees with the descent at j=" +
            std::to_string(j) + " for p=" + std::to_string(params.p) +
            ", q=" + std::to_string(params.q));
      }
    }
  }
  return seq;
}

bool check_symmetry(const PqSequence& seq) {
  const int p = seq.params.p;
  for (int j = 0; j <= p; ++j) {
    const CyclicWord lhs = cyclic_reduce(seq.words[static_cast<std::size_t>(p - j)]);
    const CyclicWord rhs =
        cyclic_reduce(reverse(swap_generators(seq.words[static_cast<std::size_t>(j)])));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

namespace {

std::string indices_to_text(const std::set<int>& indices) {
  std::string out = "{";
  bool first = true;
  for (int j : indices) {
    if (!first) out += ", ";
    out += std::to_string(j);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace

std::string sequence_to_text(const PqSequence& seq) {
  std::ostringstream os;
  os << "(" << seq.params.p << "," << seq.params.q << ")-sequence"
     << "  q_norm=" << seq.params.q_norm << "  q_prime=" << seq.params.q_prime
     << "  primitive j: " << indices_to_text(seq.primitive_indices) << "\n";
  const int width = static_cast<int>(std::to_string(seq.params.p).size());
  for (int j = 0; j <= seq.params.p; ++j) {
    os << "  " << std::setw(width) << j << "  "
       << to_string(seq.words[static_cast<std::size_t>(j)]);
    if (seq.primitive_indices.count(j) > 0) os << "  *";
    os << "\n";
  }
  return os.str();
}

std::string sequence_to_record(const PqSequence& seq) {
  nlohmann::ordered_json j;
  j["schema"] = "pdc.sequence.v1";
  j["p"] = seq.params.p;
  j["q"] = seq.params.q;
  j["q_norm"] = seq.params.q_norm;
  j["q_prime"] = seq.params.q_prime;
  j["primitive_indices"] = seq.primitive_indices;
  j["words"] = nlohmann::ordered_json::array();
  for (const Word& w : seq.words) j["words"].push_back(to_string(w));
  return j.dump(2) + "\n";
}

PqSequence sequence_from_record(const std::string& record) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(record);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed sequence record: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "pdc.sequence.v1") {
      throw ValidationError("unexpected schema in sequence record");
    }
    PqSequence seq;
    seq.params = make_params(j.at("p").get<int>(), j.at("q").get<int>());
    for (int idx : j.at("primitive_indices")) seq.primitive_indices.insert(idx);
    for (const auto& w : j.at("words")) {
      seq.words.push_back(parse_word(w.get<std::string>(), kAlphabetZY));
    }
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed sequence record: ") + e.what());
  }
}

}  // namespace pdc
