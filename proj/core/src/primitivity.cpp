#include "pdc/primitivity.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace pdc {

namespace {

// The multiplier moves x -> xa, x -> a^-1 x for each choice of multiplied
// generator x and factor a in {other, other^-1}. Conjugation variants never
// change cyclic length and permutations never change length at all, so these
// eight decide the descent.
struct WhiteheadMove {
  Gen target;
  Letter factor;
  bool left;  // factor^-1 on the left instead of factor on the right
};

constexpr WhiteheadMove kMoves[8] = {
    {Gen::One, {Gen::Two, +1}, false},  // z -> zy
    {Gen::One, {Gen::Two, -1}, false},  // z -> zY
    {Gen::One, {Gen::Two, +1}, true},   // z -> Yz
    {Gen::One, {Gen::Two, -1}, true},   // z -> yz
    {Gen::Two, {Gen::One, +1}, false},  // y -> yz
    {Gen::Two, {Gen::One, -1}, false},  // y -> yZ
    {Gen::Two, {Gen::One, +1}, true},   // y -> Zy
    {Gen::Two, {Gen::One, -1}, true},   // y -> zy
};

Word apply_move(const Word& w, const WhiteheadMove& m) {
  std::vector<Letter> out;
  out.reserve(2 * w.size());
  const Letter pos{m.target, 1};
  const Letter first = m.left ? inverse(m.factor) : pos;
  const Letter second = m.left ? pos : m.factor;
  for (Letter l : w.letters()) {
    if (l.gen != m.target) {
      out.push_back(l);
    } else if (l.sign > 0) {
      out.push_back(first);
      out.push_back(second);
    } else {
      out.push_back(inverse(second));
      out.push_back(inverse(first));
    }
  }
  return Word(std::move(out), w.alphabet());
}

std::string move_descriptor(const WhiteheadMove& m, Alphabet alpha) {
  auto render = [&](Letter l) {
    char c = l.gen == Gen::One ? alpha.g1 : alpha.g2;
    if (l.sign < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return c;
  };
  const char target = render({m.target, 1});
  std::string s;
  s += target;
  s += "->";
  if (m.left) {
    s += render(inverse(m.factor));
    s += target;
  } else {
    s += target;
    s += render(m.factor);
  }
  return s;
}

// Shared descent. When trace is non-null every step is canonicalized and
// recorded; the fast path skips canonical rotations entirely.
Verdict descend(Word current, WhiteheadTrace* trace) {
  if (current.empty()) return Verdict::NotPrimitive;
  while (current.size() > 1) {
    bool reduced = false;
    for (const WhiteheadMove& m : kMoves) {
      Word image = cyclic_strip(apply_move(current, m));
      if (image.size() < current.size()) {
        if (trace) {
          trace->steps.push_back({move_descriptor(m, current.alphabet()),
                                  cyclic_reduce(image),
                                  static_cast<int>(image.size())});
        }
        current = std::move(image);
        reduced = true;
        break;
      }
    }
    if (!reduced) return Verdict::NotPrimitive;
  }
  return Verdict::Primitive;
}

}  // namespace

bool is_primitive(const Word& w) {
  return descend(cyclic_strip(w), nullptr) == Verdict::Primitive;
}

WhiteheadTrace whitehead_trace(const Word& w) {
  WhiteheadTrace trace;
  trace.initial = cyclic_reduce(w);
  trace.verdict = descend(cyclic_strip(w), &trace);
  return trace;
}

Word canonical_primitive(int m, int n) {
  if (m < 1 || n < m) {
    throw ValidationError("canonical_primitive needs 1 <= m <= n (got m=" +
                          std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  const int period = m + n;
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(period));
  for (int k = 0; k < period; ++k) {
    int residue = static_cast<int>((1LL + static_cast<long long>(k) * m) % period);
    if (residue == 0) residue = period;
    out.push_back({residue <= m ? Gen::One : Gen::Two, 1});
  }
  return Word(std::move(out), kAlphabetZY);
}

bool positive_primitive_check(const Word& w) {
  for (Letter l : w.letters()) {
    if (l.sign < 0) {
      throw ValidationError("positive_primitive_check expects a positive word");
    }
  }
  const auto [count1, count2] = abelianization(w);
  if (count1 == 0 || count2 == 0) return w.size() == 1;

  const Word probe = count1 <= count2 ? w : swap_generators(w);
  const int m = std::min(count1, count2);
  const int n = std::max(count1, count2);
  if (std::gcd(m, n) != 1) return false;
  // Alphabet tags may differ between probe and the {z,y} reference word, so
  // compare canonical letter sequences.
  return cyclic_reduce(probe).canonical().letters() ==
         cyclic_reduce(canonical_primitive(m, n)).canonical().letters();
}

bool is_power_of_primitive(const Word& w) {
  const Word canonical = cyclic_reduce(w).canonical();
  const std::size_t length = canonical.size();
  if (length == 0) return false;
  const std::vector<Letter>& letters = canonical.letters();
  for (std::size_t d = 1; d <= length; ++d) {
    if (length % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < length && periodic; ++i) {
      periodic = letters[i] == letters[i - d];
    }
    if (!periodic) continue;
    // d is the smallest period, so this root is not itself a proper power.
    return is_primitive(
        Word(std::vector<Letter>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(d)),
             canonical.alphabet()));
  }
  return false;
}

namespace {

struct SignedView {
  const std::vector<Letter>* letters;
  bool flip_g1;
  bool flip_g2;

  int size() const { return static_cast<int>(letters->size()); }
  Letter at(int i) const {
    const int n = size();
    Letter l = (*letters)[static_cast<std::size_t>(((i % n) + n) % n)];
    const bool flip = l.gen == Gen::One ? flip_g1 : flip_g2;
    if (flip) l.sign = static_cast<std::int8_t>(-l.sign);
    return l;
  }
};

constexpr Letter kPosX{Gen::One, 1};
constexpr Letter kPosY{Gen::Two, 1};
constexpr Letter kNegY{Gen::Two, -1};

std::optional<Obstruction> scan_mixed(const SignedView& v) {
  const int n = v.size();
  int pos_xy = -1, pos_xinv = -1;
  for (int i = 0; i < n; ++i) {
    if (!(v.at(i) == kPosX)) continue;
    const Letter next = v.at(i + 1);
    if (next == kPosY && pos_xy < 0) pos_xy = i;
    if (next == kNegY && pos_xinv < 0) pos_xinv = i;
  }
  if (pos_xy >= 0 && pos_xinv >= 0) {
    return Obstruction{ObstructionKind::MixedSignPair, -1, pos_xy, pos_xinv,
                       v.flip_g1, v.flip_g2};
  }
  return std::nullopt;
}

std::optional<Obstruction> scan_gap(const SignedView& v) {
  const int n = v.size();
  for (int i = 0; i < n; ++i) {
    if (!(v.at(i) == kPosX)) continue;
    // Walk the y-run after position i; a bounding x closes the pattern
    // x y^gap x. Cyclic occurrences may not exceed the word length.
    int gap = 0;
    while (gap < n - 1 && v.at(i + 1 + gap) == kPosY) ++gap;
    if (gap > n - 2 || !(v.at(i + 1 + gap) == kPosX)) continue;
    const int need = gap + 2;
    if (need > n) continue;
    for (int s = 0; s < n; ++s) {
      bool run = true;
      for (int k = 0; k < need; ++k) {
        if (!(v.at(s + k) == kPosY)) {
          run = false;
          break;
        }
      }
      if (run) {
        return Obstruction{ObstructionKind::GapPair, gap, i, s,
                           v.flip_g1, v.flip_g2};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Obstruction> detect_obstruction(const Word& w) {
  const CyclicWord cyclic = cyclic_reduce(w);
  const std::vector<Letter>& letters = cyclic.canonical().letters();
  if (letters.size() < 2) return std::nullopt;
  constexpr std::pair<bool, bool> kAssignments[4] = {
      {false, false}, {false, true}, {true, false}, {true, true}};
  for (auto [flip_g1, flip_g2] : kAssignments) {
    const SignedView view{&letters, flip_g1, flip_g2};
    if (auto hit = scan_mixed(view)) return hit;
    if (auto hit = scan_gap(view)) return hit;
  }
  return std::nullopt;
}

std::pair<int, int> abelianization(const Word& w) {
  int a = 0, b = 0;
  for (Letter l : w.letters()) {
    (l.gen == Gen::One ? a : b) += l.sign;
  }
  return {a, b};
}

std::string trace_to_text(const WhiteheadTrace& trace) {
  std::ostringstream os;
  os << "start    " << to_string(trace.initial) << "  (length "
     << trace.initial.size() << ")\n";
  int i = 1;
  for (const WhiteheadStep& step : trace.steps) {
    os << "step " << i++ << "   " << step.automorphism << "  "
       << to_string(step.word) << "  (length " << step.length << ")\n";
  }
  os << "verdict  "
     << (trace.verdict == Verdict::Primitive ? "primitive" : "not primitive")
     << "\n";
  return os.str();
}

std::string trace_to_record(const WhiteheadTrace& trace) {
  nlohmann::ordered_json j;
  j["schema"] = "pdc.trace.v1";
  j["word"] = to_string(trace.initial);
  j["length"] = trace.initial.size();
  j["steps"] = nlohmann::ordered_json::array();
  for (const WhiteheadStep& step : trace.steps) {
    j["steps"].push_back({{"automorphism", step.automorphism},
                          {"word", to_string(step.word)},
                          {"length", step.length}});
  }
  j["verdict"] =
      trace.verdict == Verdict::Primitive ? "primitive" : "not-primitive";
  return j.dump(2) + "\n";
}

}  // namespace pdc
