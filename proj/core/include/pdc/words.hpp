#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdc/errors.hpp"

namespace pdc {

// Letters of the rank-2 free group.
enum class Gen : std::uint8_t { One = 0, Two = 1 };

struct Letter {
  Gen gen;
  std::int8_t sign;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

constexpr Letter inverse(Letter l) {
  return {l.gen, static_cast<std::int8_t>(-l.sign)};
}

// Sort key realizing the fixed letter order One+ < One- < Two+ < Two-.
// Canonical rotations depend on this order.
constexpr int letter_key(Letter l) {
  return (static_cast<int>(l.gen) << 1) | (l.sign < 0 ? 1 : 0);
}

// Which two characters render the generators. Lowercase is the positive
// letter, uppercase its inverse. Presentation only: words over {z,y} and
// {x,y} carry the same algebra.
struct Alphabet {
  char g1;
  char g2;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

inline constexpr Alphabet kAlphabetZY{'z', 'y'};
inline constexpr Alphabet kAlphabetXY{'x', 'y'};

// A freely reduced word. Construction reduces, so adjacent mutually inverse
// letters never survive in a Word.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(std::vector<Letter> raw, Alphabet alphabet);

  const std::vector<Letter>& letters() const { return letters_; }
  Alphabet alphabet() const { return alphabet_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_ = kAlphabetZY;
};

// Free reduction of a raw letter sequence (same thing the Word constructor
// does, exposed for callers holding plain letter vectors).
Word reduce(std::vector<Letter> raw, Alphabet alphabet);

Word invert(const Word& w);
Word reverse(const Word& w);
Word swap_generators(const Word& w);

// Concatenation followed by free reduction. Operands must share an alphabet.
Word concat(const Word& a, const Word& b);

// Strips mutually inverse first/last letters until none remain. The result
// is cyclically reduced but kept in the rotation it happens to land in.
Word cyclic_strip(const Word& w);

// Conjugacy class representative: cyclically reduced, rotated to the least
// rotation under letter_key order. Equal for conjugate words.
class CyclicWord {
 public:
  CyclicWord() = default;

  const Word& canonical() const { return canonical_; }
  bool empty() const { return canonical_.empty(); }
  std::size_t size() const { return canonical_.size(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(Word canonical) : canonical_(std::move(canonical)) {}
  friend CyclicWord cyclic_reduce(const Word&);

  Word canonical_;
};

CyclicWord cyclic_reduce(const Word& w);

// z -> xy, y -> y: the substitution induced by renaming the first generator
// to xy. Input must be over {z,y}; the image is over {x,y}. Preserves
// primitivity in both directions.
Word substitute_z_to_xy(const Word& w);

// Text form: lowercase letters are positive, uppercase are inverses, the
// identity prints as "1". Whitespace is ignored on parse. Without an
// explicit alphabet one is inferred: any z/Z selects {z,y}, any x/X selects
// {x,y}, neither defaults to {z,y}; words mixing z and x are rejected.
Word parse_word(std::string_view text,
                std::optional<Alphabet> alphabet = std::nullopt);
std::string to_string(const Word& w);
std::string to_string(const CyclicWord& w);

}  // namespace pdc
