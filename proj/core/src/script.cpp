#include "diagroup/script.hpp"

#include <cctype>
#include <optional>

namespace diagroup {

namespace {

struct Token {
  std::string text;
  bool special;
};

std::vector<Token> tokenize(std::string const& text) {
  static std::string const specials = "[]|>~*;+()";
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (specials.find(c) != std::string::npos) {
      out.push_back({std::string(1, c), true});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j])) &&
           specials.find(text[j]) == std::string::npos) {
      ++j;
    }
    out.push_back({text.substr(i, j - i), false});
    i = j;
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, PresentationPtr p)
      : tokens_(std::move(tokens)), p_(std::move(p)) {}

  Diagram parse() {
    Diagram d = composition();
    if (pos_ != tokens_.size()) {
      fail("trailing input '" + tokens_[pos_].text + "'");
    }
    return d;
  }

 private:
  [[noreturn]] void fail(std::string const& msg) {
    throw std::invalid_argument("diagram script: " + msg);
  }

  bool at(std::string const& s) const {
    return pos_ < tokens_.size() && tokens_[pos_].special &&
           tokens_[pos_].text == s;
  }

  void expect(std::string const& s) {
    if (!at(s)) {
      fail("expected '" + s + "'");
    }
    ++pos_;
  }

  Diagram composition() {
    Diagram d = summand();
    while (at("*") || at(";")) {
      ++pos_;
      d = d.concat(summand());
    }
    return d;
  }

  Diagram summand() {
    Diagram d = factor();
    while (at("+")) {
      ++pos_;
      d = d.sum(factor());
    }
    return d;
  }

  Diagram factor() {
    Diagram d = atom();
    while (at("~")) {
      ++pos_;
      d = d.inverse();
    }
    return d;
  }

  Diagram atom() {
    if (at("(")) {
      ++pos_;
      Diagram d = composition();
      expect(")");
      return d;
    }
    expect("[");
    std::vector<std::vector<std::string>> parts(1);
    std::optional<std::size_t> arrow_in;  // which part holds '>'
    std::vector<std::string> current;
    while (!at("]")) {
      if (pos_ >= tokens_.size()) {
        fail("unterminated '['");
      }
      if (at("|")) {
        ++pos_;
        parts.push_back({});
      } else if (at(">")) {
        ++pos_;
        arrow_in = parts.size() - 1;
        parts.back().push_back(">");
      } else if (tokens_[pos_].special) {
        fail("unexpected '" + tokens_[pos_].text + "' inside brackets");
      } else {
        parts.back().push_back(tokens_[pos_].text);
        ++pos_;
      }
    }
    ++pos_;  // ']'

    auto to_letters = [&](std::vector<std::string> const& toks) -> Letters {
      Letters out;
      for (auto const& t : toks) {
        if (t == "-") {
          continue;
        }
        auto l = p_->alphabet().find(t);
        if (!l) {
          fail("unknown letter '" + t + "'");
        }
        out.push_back(*l);
      }
      return out;
    };

    if (parts.size() == 1) {
      Letters w = to_letters(parts[0]);
      if (w.empty()) {
        fail("identity diagram needs a non-empty word");
      }
      return Diagram::identity(p_, Word(std::move(w)));
    }
    if (parts.size() != 3 || !arrow_in || *arrow_in != 1) {
      fail("cell atom must be [ a | u > v | b ]");
    }
    auto& mid = parts[1];
    auto arrow = std::find(mid.begin(), mid.end(), ">");
    std::vector<std::string> utoks(mid.begin(), arrow);
    std::vector<std::string> vtoks(arrow + 1, mid.end());
    Letters u = to_letters(utoks);
    Letters v = to_letters(vtoks);
    if (u.empty() || v.empty()) {
      fail("cell sides must be non-empty");
    }
    for (std::size_t r = 0; r < p_->num_relations(); ++r) {
      auto const& rel = p_->relation(r);
      if (rel.left.letters() == u && rel.right.letters() == v) {
        return Diagram::atomic(p_, to_letters(parts[0]), r, true,
                               to_letters(parts[2]));
      }
      if (rel.left.letters() == v && rel.right.letters() == u) {
        return Diagram::atomic(p_, to_letters(parts[0]), r, false,
                               to_letters(parts[2]));
      }
    }
    fail("no relation matches '" + p_->word_to_string(u) + " > " +
         p_->word_to_string(v) + "'");
  }

  std::vector<Token> tokens_;
  PresentationPtr p_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_diagram_script(std::string const& text, PresentationPtr p) {
  auto tokens = tokenize(text);
  if (tokens.empty()) {
    throw std::invalid_argument("diagram script: empty input");
  }
  return Parser(std::move(tokens), std::move(p)).parse();
}

std::string to_script(Diagram const& d) {
  auto const& p = *d.presentation();
  if (d.is_identity()) {
    return "[ " + p.word_to_string(d.top()) + " ]";
  }
  auto words = d.replay_words();
  std::string out;
  for (std::size_t i = 0; i < d.cells().size(); ++i) {
    auto const& c = d.cells()[i];
    auto const& rel = p.relation(c.relation);
    Letters const& pat = c.forward ? rel.left.letters() : rel.right.letters();
    Letters const& rep = c.forward ? rel.right.letters() : rel.left.letters();
    Letters a(words[i].begin(), words[i].begin() + c.offset);
    Letters b(words[i].begin() + c.offset + pat.size(), words[i].end());
    if (i) {
      out += " ; ";
    }
    out += "[ " + (a.empty() ? "-" : p.word_to_string(a)) + " | " +
           p.word_to_string(pat) + " > " + p.word_to_string(rep) + " | " +
           (b.empty() ? "-" : p.word_to_string(b)) + " ]";
  }
  return out;
}

}  // namespace diagroup
