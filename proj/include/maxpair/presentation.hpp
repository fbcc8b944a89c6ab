#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxpair {

/// A word in the pc generators: ordered (generator, exponent) factors.
/// Generator indices are 0-based internally and rendered 1-based.  The
/// empty word is the identity.
struct Word {
  std::vector<std::pair<int, int>> factors;

  bool empty() const noexcept { return factors.empty(); }
  bool operator==(const Word&) const = default;
};

/// A refined polycyclic presentation: prime relative orders, power relations
/// g_i^{p_i} and conjugate relations g_j^{g_i} = g_i^-1 g_j g_i for j > i.
/// Relation words are in normal form with support strictly above i.
struct PcPresentation {
  std::string name;
  std::vector<int> rel_orders;
  std::vector<Word> power;                       // one per generator
  std::map<std::pair<int, int>, Word> conj;      // key (j, i), j > i

  std::size_t generator_count() const noexcept { return rel_orders.size(); }
  std::size_t order() const;

  /// g_j^{g_i}; the generator g_j itself when no relation is stored.
  Word conjugate(int j, int i) const;

  bool operator==(const PcPresentation&) const = default;
};

/// Parses the line-oriented presentation format and validates every
/// invariant of PcPresentation.  Throws ParseError.
PcPresentation parse_presentation(std::string_view text);

/// Canonical rendering; parse_presentation(render_presentation(p)) == p.
std::string render_presentation(const PcPresentation& pres);

/// Renders a word as "g1^2 g3^1", or "1" for the identity.
std::string render_word(const Word& w);

/// Exponent vector of a normal-form word.
using ExponentVector = std::vector<int>;

/// Collection from the left against a fixed presentation.
class Collector {
 public:
  explicit Collector(const PcPresentation& pres);

  /// v <- v * g_i, with v an exponent vector in normal form.
  void multiply_generator(ExponentVector& v, int i) const;

  /// v <- v * w for a normal-form relation word w (positive exponents).
  void multiply_word(ExponentVector& v, const Word& w) const;

  /// Exponent vector of an arbitrary word; exponents may be any integer.
  ExponentVector collect(const Word& w) const;

  const PcPresentation& presentation() const noexcept { return pres_; }

 private:
  const PcPresentation& pres_;
  std::vector<std::vector<Word>> conj_table_;  // [j][i]
  std::vector<int> generator_orders_;          // element order of each g_i
};

/// The unique normal-form word equal to w in the presented group.
Word normal_form(const PcPresentation& pres, const Word& w);

Word word_from_exponents(const ExponentVector& v);

}  // namespace maxpair
