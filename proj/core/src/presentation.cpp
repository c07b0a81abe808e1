#include "diagroup/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace diagroup {

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) {
      throw std::invalid_argument("Alphabet: empty symbol");
    }
    auto [it, inserted] = index_.emplace(symbols_[i], Letter(i));
    if (!inserted) {
      throw std::invalid_argument("Alphabet: duplicate symbol '" +
                                  symbols_[i] + "'");
    }
  }
}

std::optional<Letter> Alphabet::find(std::string const& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Presentation::Presentation(Alphabet alphabet, std::vector<Relation> relations)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
  for (auto const& rel : relations_) {
    for (Letter l : rel.left) {
      if (l >= alphabet_.size()) {
        throw std::invalid_argument("Presentation: relation uses letter "
                                    "outside the alphabet");
      }
    }
    for (Letter l : rel.right) {
      if (l >= alphabet_.size()) {
        throw std::invalid_argument("Presentation: relation uses letter "
                                    "outside the alphabet");
      }
    }
    if (rel.left == rel.right) {
      throw std::invalid_argument("Presentation: relation u = u is not "
                                  "allowed");
    }
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    for (std::size_t j = i + 1; j < relations_.size(); ++j) {
      if (relations_[i].left == relations_[j].right &&
          relations_[i].right == relations_[j].left) {
        throw std::invalid_argument("Presentation: both u = v and v = u are "
                                    "present");
      }
      if (relations_[i].left == relations_[j].left &&
          relations_[i].right == relations_[j].right) {
        throw std::invalid_argument("Presentation: duplicate relation");
      }
    }
  }
}

bool Presentation::same_relations(Presentation const& other) const {
  if (relations_.size() != other.relations_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (!(relations_[i].left == other.relations_[i].left) ||
        !(relations_[i].right == other.relations_[i].right)) {
      return false;
    }
  }
  return true;
}

std::string Presentation::word_to_string(Letters const& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += alphabet_.symbol(w[i]);
  }
  return out;
}

Word Presentation::parse_word(std::string const& text) const {
  std::istringstream in(text);
  Letters ls;
  std::string tok;
  while (in >> tok) {
    auto l = alphabet_.find(tok);
    if (!l) {
      throw std::invalid_argument("unknown letter '" + tok + "'");
    }
    ls.push_back(*l);
  }
  if (ls.empty()) {
    throw std::invalid_argument("empty word");
  }
  return Word(std::move(ls));
}

Ordering shortlex_compare(Letters const& u, Letters const& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size() ? Ordering::Less : Ordering::Greater;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) {
      return u[i] < v[i] ? Ordering::Less : Ordering::Greater;
    }
  }
  return Ordering::Equal;
}

namespace {

std::vector<std::string> split_tokens(std::string const& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

int column_of(std::string const& line, std::string const& token,
              std::size_t occurrence) {
  std::size_t pos = 0;
  for (std::size_t k = 0; k <= occurrence; ++k) {
    pos = line.find(token, pos);
    if (pos == std::string::npos) {
      return 1;
    }
    if (k < occurrence) {
      pos += token.size();
    }
  }
  return static_cast<int>(pos) + 1;
}

}  // namespace

PresentationPtr parse_presentation(std::string const& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_letters = false;
  std::vector<std::string> symbols;
  struct PendingRule {
    Letters left, right;
  };
  std::vector<Relation> relations;
  Alphabet alphabet;

  auto parse_side = [&](std::vector<std::string> const& toks, std::size_t from,
                        std::size_t to, std::string const& line,
                        int lineno) -> Letters {
    Letters out;
    for (std::size_t i = from; i < to; ++i) {
      auto l = alphabet.find(toks[i]);
      if (!l) {
        throw ParseError(lineno, column_of(line, toks[i], 0),
                         "unknown letter '" + toks[i] + "'");
      }
      out.push_back(*l);
    }
    return out;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto toks = split_tokens(line);
    if (toks.empty()) {
      continue;
    }
    if (toks[0] == "letters") {
      if (have_letters) {
        throw ParseError(lineno, 1, "duplicate 'letters' line");
      }
      if (toks.size() == 1) {
        throw ParseError(lineno, 1, "'letters' line declares no letters");
      }
      symbols.assign(toks.begin() + 1, toks.end());
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        for (std::size_t j = i + 1; j < symbols.size(); ++j) {
          if (symbols[i] == symbols[j]) {
            throw ParseError(lineno, column_of(line, symbols[j], 1),
                             "duplicate letter '" + symbols[j] + "'");
          }
        }
      }
      alphabet = Alphabet(symbols);
      have_letters = true;
    } else if (toks[0] == "rule") {
      if (!have_letters) {
        throw ParseError(lineno, 1, "'rule' before 'letters'");
      }
      auto eq = std::find(toks.begin(), toks.end(), "=");
      if (eq == toks.end()) {
        throw ParseError(lineno, 1, "rule has no '='");
      }
      std::size_t eq_at = static_cast<std::size_t>(eq - toks.begin());
      Letters left = parse_side(toks, 1, eq_at, line, lineno);
      Letters right = parse_side(toks, eq_at + 1, toks.size(), line, lineno);
      if (left.empty() || right.empty()) {
        throw ParseError(lineno, 1, "empty word in a rule");
      }
      if (left == right) {
        throw ParseError(lineno, 1, "rule u = u is not allowed");
      }
      for (auto const& rel : relations) {
        if (rel.left.letters() == right && rel.right.letters() == left) {
          throw ParseError(lineno, 1,
                           "mirror of an earlier rule is not allowed");
        }
        if (rel.left.letters() == left && rel.right.letters() == right) {
          throw ParseError(lineno, 1, "duplicate rule");
        }
      }
      relations.push_back({Word(std::move(left)), Word(std::move(right))});
    } else {
      throw ParseError(lineno, 1, "unrecognised directive '" + toks[0] + "'");
    }
  }
  if (!have_letters) {
    throw ParseError(lineno ? lineno : 1, 1, "missing 'letters' line");
  }
  return make_presentation(std::move(alphabet), std::move(relations));
}

std::string to_file_format(Presentation const& p) {
  std::string out = "letters";
  for (auto const& s : p.alphabet().symbols()) {
    out += ' ';
    out += s;
  }
  out += '\n';
  for (auto const& rel : p.relations()) {
    out += "rule " + p.word_to_string(rel.left) + " = " +
           p.word_to_string(rel.right) + "\n";
  }
  return out;
}

}  // namespace diagroup
