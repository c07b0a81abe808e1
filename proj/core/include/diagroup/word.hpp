#ifndef DIAGROUP_WORD_HPP
#define DIAGROUP_WORD_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diagroup {

/// A letter is its rank in the alphabet's declaration order.
using Letter = std::uint32_t;

/// Possibly-empty letter sequence, used for contexts and intermediate
/// buffers. Semigroup words proper are wrapped in Word below.
using Letters = std::vector<Letter>;

/// Positive (non-empty) word over some alphabet. The empty word is rejected
/// at construction: the theory here is strictly semigroup-side.
class Word {
 public:
  explicit Word(Letters letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
      throw std::invalid_argument("Word: empty words are not allowed");
    }
  }
  Word(std::initializer_list<Letter> ls) : Word(Letters(ls)) {}

  Letters const& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(Word const& a, Word const& b) = default;

  friend Word operator+(Word const& a, Word const& b) {
    Letters ls = a.letters_;
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(ls));
  }

 private:
  Letters letters_;
};

inline Letters concat(std::span<Letter const> a, std::span<Letter const> b) {
  Letters out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

struct LettersHash {
  std::size_t operator()(Letters const& ls) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : ls) {
      h ^= l + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct WordHash {
  std::size_t operator()(Word const& w) const {
    return LettersHash{}(w.letters());
  }
};

}  // namespace diagroup

#endif
