#ifndef DIAGROUP_PRESENTATION_HPP
#define DIAGROUP_PRESENTATION_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "diagroup/word.hpp"

namespace diagroup {

/// Error while reading the presentation file format; carries the 1-based
/// source position.
struct ParseError : std::runtime_error {
  ParseError(int line, int column, std::string const& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Totally ordered alphabet. A letter's rank is its declaration index; the
/// rank order induces the ShortLex order on words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  std::string const& symbol(Letter l) const { return symbols_.at(l); }
  std::optional<Letter> find(std::string const& symbol) const;
  std::vector<std::string> const& symbols() const { return symbols_; }

  friend bool operator==(Alphabet const& a, Alphabet const& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Letter> index_;
};

/// One ordered rewriting rule left -> right. Relations never have equal
/// sides, and a presentation never contains both u=v and v=u.
struct Relation {
  Word left;
  Word right;
};

class Presentation {
 public:
  Presentation(Alphabet alphabet, std::vector<Relation> relations);

  Alphabet const& alphabet() const { return alphabet_; }
  std::vector<Relation> const& relations() const { return relations_; }
  Relation const& relation(std::size_t i) const { return relations_.at(i); }
  std::size_t num_relations() const { return relations_.size(); }

  /// Words rendered as space-separated symbol tokens.
  std::string word_to_string(Letters const& w) const;
  std::string word_to_string(Word const& w) const { return word_to_string(w.letters()); }
  Word parse_word(std::string const& text) const;

  friend bool operator==(Presentation const& a, Presentation const& b) {
    return a.alphabet_ == b.alphabet_ && a.same_relations(b);
  }

 private:
  bool same_relations(Presentation const& other) const;

  Alphabet alphabet_;
  std::vector<Relation> relations_;
};

using PresentationPtr = std::shared_ptr<Presentation const>;

inline PresentationPtr make_presentation(Alphabet alphabet,
                                         std::vector<Relation> relations) {
  return std::make_shared<Presentation const>(std::move(alphabet),
                                              std::move(relations));
}

enum class Ordering { Less, Equal, Greater };

/// ShortLex: shorter first, ties broken lexicographically by letter rank.
Ordering shortlex_compare(Letters const& u, Letters const& v);
inline Ordering shortlex_compare(Word const& u, Word const& v) {
  return shortlex_compare(u.letters(), v.letters());
}
inline bool shortlex_less(Letters const& u, Letters const& v) {
  return shortlex_compare(u, v) == Ordering::Less;
}

/// Reads the line-oriented presentation file format:
///   letters <tok> <tok> ...
///   rule <word> = <word>
/// with '#' starting a comment. Declaration order defines ShortLex rank.
PresentationPtr parse_presentation(std::string const& text);

/// Serialises back to the file format, one rule per line.
std::string to_file_format(Presentation const& p);

}  // namespace diagroup

#endif
