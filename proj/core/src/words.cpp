#include "pdc/words.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace pdc {

namespace {

std::vector<Letter> reduce_letters(std::vector<Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// Lexicographic comparison of rotations i and j of v under letter_key.
bool rotation_less(const std::vector<Letter>& v, std::size_t i, std::size_t j) {
  const std::size_t n = v.size();
  for (std::size_t k = 0; k < n; ++k) {
    int a = letter_key(v[(i + k) % n]);
    int b = letter_key(v[(j + k) % n]);
    if (a != b) return a < b;
  }
  return false;
}

}  // namespace

Word::Word(std::vector<Letter> raw, Alphabet alphabet)
    : letters_(reduce_letters(std::move(raw))), alphabet_(alphabet) {}

Word reduce(std::vector<Letter> raw, Alphabet alphabet) {
  return Word(std::move(raw), alphabet);
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l = inverse(l);
  return Word(std::move(out), w.alphabet());
}

Word reverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out), w.alphabet());
}

Word swap_generators(const Word& w) {
  std::vector<Letter> out = w.letters();
  for (Letter& l : out) l.gen = l.gen == Gen::One ? Gen::Two : Gen::One;
  return Word(std::move(out), w.alphabet());
}

Word concat(const Word& a, const Word& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw ValidationError("cannot compose words over different alphabets");
  }
  std::vector<Letter> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out), a.alphabet());
}

Word cyclic_strip(const Word& w) {
  const std::vector<Letter>& v = w.letters();
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == inverse(v[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(v.begin() + lo, v.begin() + hi),
              w.alphabet());
}

CyclicWord cyclic_reduce(const Word& w) {
  Word stripped = cyclic_strip(w);
  const std::vector<Letter>& v = stripped.letters();
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (rotation_less(v, i, best)) best = i;
  }
  std::vector<Letter> rot(v.begin() + best, v.end());
  rot.insert(rot.end(), v.begin(), v.begin() + best);
  return CyclicWord(Word(std::move(rot), w.alphabet()));
}

Word substitute_z_to_xy(const Word& w) {
  if (!(w.alphabet() == kAlphabetZY)) {
    throw ValidationError("substitute_z_to_xy expects a word over {z,y}");
  }
  std::vector<Letter> out;
  out.reserve(2 * w.size());
  for (Letter l : w.letters()) {
    if (l.gen == Gen::Two) {
      out.push_back(l);
    } else if (l.sign > 0) {
      out.push_back({Gen::One, 1});
      out.push_back({Gen::Two, 1});
    } else {
      out.push_back({Gen::Two, -1});
      out.push_back({Gen::One, -1});
    }
  }
  return Word(std::move(out), kAlphabetXY);
}

Word parse_word(std::string_view text, std::optional<Alphabet> alphabet) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }

  Alphabet a = kAlphabetZY;
  if (alphabet) {
    a = *alphabet;
  } else {
    bool has_z = compact.find_first_of("zZ") != std::string::npos;
    bool has_x = compact.find_first_of("xX") != std::string::npos;
    if (has_z && has_x) {
      throw ValidationError("word mixes the {z,y} and {x,y} alphabets");
    }
    if (has_x) a = kAlphabetXY;
  }

  if (compact == "1" || compact.empty()) return Word(a);

  std::vector<Letter> letters;
  letters.reserve(compact.size());
  for (char c : compact) {
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    Gen g;
    if (low == a.g1) {
      g = Gen::One;
    } else if (low == a.g2) {
      g = Gen::Two;
    } else {
      throw ValidationError(std::string("unexpected letter '") + c +
                            "' (alphabet is {" + a.g1 + "," + a.g2 + "})");
    }
    bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    letters.push_back({g, static_cast<std::int8_t>(upper ? -1 : 1)});
  }
  return Word(std::move(letters), a);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    char c = l.gen == Gen::One ? w.alphabet().g1 : w.alphabet().g2;
    if (l.sign < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out.push_back(c);
  }
  return out;
}

std::string to_string(const CyclicWord& w) { return to_string(w.canonical()); }

}  // namespace pdc
