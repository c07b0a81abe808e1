#include "diagroup/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace diagroup {

namespace {

struct Builder {
  std::vector<std::string> symbols;
  std::vector<std::pair<Letters, Letters>> rules;

  Letter add_fresh(std::string name) {
    while (std::find(symbols.begin(), symbols.end(), name) != symbols.end()) {
      name += '\'';
    }
    symbols.push_back(name);
    return static_cast<Letter>(symbols.size() - 1);
  }

  /// Splices another presentation in, renaming colliding symbols; returns
  /// the letter translation.
  std::vector<Letter> absorb(Presentation const& p) {
    std::vector<Letter> map(p.alphabet().size());
    for (std::size_t i = 0; i < p.alphabet().size(); ++i) {
      map[i] = add_fresh(p.alphabet().symbol(static_cast<Letter>(i)));
    }
    for (auto const& rel : p.relations()) {
      rules.push_back({translate(rel.left.letters(), map),
                       translate(rel.right.letters(), map)});
    }
    return map;
  }

  static Letters translate(Letters const& w, std::vector<Letter> const& map) {
    Letters out;
    out.reserve(w.size());
    for (Letter l : w) {
      out.push_back(map[l]);
    }
    return out;
  }

  BasedPresentation finish(Letters baseword, Letters boundary = {}) const {
    std::vector<Relation> rels;
    rels.reserve(rules.size());
    for (auto const& [l, r] : rules) {
      rels.push_back({Word(l), Word(r)});
    }
    return {make_presentation(Alphabet(symbols), std::move(rels)),
            Word(std::move(baseword)), std::move(boundary)};
  }
};

}  // namespace

BasedPresentation free_product(std::vector<BasedPresentation> const& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("free_product: no parts");
  }
  Builder b;
  Letter o = b.add_fresh("o");
  for (auto const& part : parts) {
    auto map = b.absorb(*part.presentation);
    b.rules.push_back(
        {{o}, Builder::translate(part.baseword.letters(), map)});
  }
  return b.finish({o});
}

BasedPresentation direct_sum(std::vector<BasedPresentation> const& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("direct_sum: no parts");
  }
  Builder b;
  Letters base;
  for (auto const& part : parts) {
    auto map = b.absorb(*part.presentation);
    auto w = Builder::translate(part.baseword.letters(), map);
    base.insert(base.end(), w.begin(), w.end());
  }
  return b.finish(std::move(base));
}

BasedPresentation countable_sum(std::vector<BasedPresentation> const& parts,
                                std::size_t N) {
  if (N < 1) {
    throw std::invalid_argument("countable_sum: truncation must be >= 1");
  }
  if (parts.empty()) {
    throw std::invalid_argument("countable_sum: no parts");
  }
  if (parts.size() != 1 && parts.size() < N) {
    throw std::invalid_argument(
        "countable_sum: need one reusable part or at least N parts");
  }
  Builder b;
  Letter x = b.add_fresh("x");
  std::vector<Letters> basewords;
  if (parts.size() == 1) {
    auto map = b.absorb(*parts[0].presentation);
    auto w = Builder::translate(parts[0].baseword.letters(), map);
    basewords.assign(N, w);
  } else {
    for (std::size_t i = 0; i < N; ++i) {
      auto map = b.absorb(*parts[i].presentation);
      basewords.push_back(Builder::translate(parts[i].baseword.letters(), map));
    }
  }
  Letters prefix;
  for (std::size_t n = 0; n < N; ++n) {
    Letters left = prefix;
    left.push_back(x);
    prefix.insert(prefix.end(), basewords[n].begin(), basewords[n].end());
    Letters right = prefix;
    right.push_back(x);
    b.rules.push_back({std::move(left), std::move(right)});
  }
  return b.finish({x});
}

namespace {

// Whether some relation side occurs in w.w straddling the junction.
bool junction_overlap(Presentation const& p, Letters const& w) {
  Letters ww = w;
  ww.insert(ww.end(), w.begin(), w.end());
  for (auto const& rel : p.relations()) {
    for (auto const* side : {&rel.left, &rel.right}) {
      auto const& s = side->letters();
      if (s.size() < 2 || s.size() > ww.size()) {
        continue;
      }
      for (std::size_t pos = 0; pos + s.size() <= ww.size(); ++pos) {
        if (pos < w.size() && pos + s.size() > w.size() &&
            std::equal(s.begin(), s.end(), ww.begin() + pos)) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

BasedPresentation wreath_with_z(BasedPresentation const& part) {
  bool need_separator =
      junction_overlap(*part.presentation, part.baseword.letters());
  Builder b;
  Letter a = b.add_fresh("a");
  Letter bb = b.add_fresh("b");
  Letter s = 0;
  if (need_separator) {
    s = b.add_fresh("s");
  }
  auto map = b.absorb(*part.presentation);
  Letters w = Builder::translate(part.baseword.letters(), map);
  Letters sws;
  if (need_separator) {
    sws.push_back(s);
  }
  sws.insert(sws.end(), w.begin(), w.end());
  if (need_separator) {
    sws.push_back(s);
  }
  Letters asws{a};
  asws.insert(asws.end(), sws.begin(), sws.end());
  Letters swsb = sws;
  swsb.push_back(bb);
  b.rules.push_back({{a}, std::move(asws)});
  b.rules.push_back({{bb}, std::move(swsb)});
  return b.finish({a, bb});
}

BasedPresentation bullet_product(BasedPresentation const& x,
                                 BasedPresentation const& y) {
  Builder b;
  auto mx = b.absorb(*x.presentation);
  auto my = b.absorb(*y.presentation);
  Letter p = b.add_fresh("p");
  Letters w1 = Builder::translate(x.baseword.letters(), mx);
  Letters w2 = Builder::translate(y.baseword.letters(), my);
  Letters w1p = w1;
  w1p.push_back(p);
  Letters pw2{p};
  pw2.insert(pw2.end(), w2.begin(), w2.end());
  b.rules.push_back({w1, std::move(w1p)});
  b.rules.push_back({w2, std::move(pw2)});
  Letters base = w1;
  base.insert(base.end(), w2.begin(), w2.end());
  return b.finish(std::move(base));
}

BasedPresentation square_product(BasedPresentation const& a,
                                 BasedPresentation const& b_) {
  Builder b;
  auto ma = b.absorb(*a.presentation);
  auto mb = b.absorb(*b_.presentation);
  Letter x = b.add_fresh("x");
  Letter y = b.add_fresh("y");
  Letters w1 = Builder::translate(a.baseword.letters(), ma);
  Letters w2 = Builder::translate(b_.baseword.letters(), mb);
  Letters w1x = w1;
  w1x.push_back(x);
  Letters w1y = w1;
  w1y.push_back(y);
  Letters xw2{x};
  xw2.insert(xw2.end(), w2.begin(), w2.end());
  Letters yw2{y};
  yw2.insert(yw2.end(), w2.begin(), w2.end());
  b.rules.push_back({std::move(w1x), std::move(w1y)});
  b.rules.push_back({std::move(xw2), std::move(yw2)});
  Letters base = w1;
  base.push_back(x);
  base.insert(base.end(), w2.begin(), w2.end());
  return b.finish(std::move(base));
}

BasedPresentation interval_raag(
    std::vector<std::pair<std::size_t, std::size_t>> const& intervals,
    std::size_t n) {
  Builder b;
  std::vector<Letter> xs;
  for (std::size_t i = 1; i <= n; ++i) {
    xs.push_back(b.add_fresh("x" + std::to_string(i)));
  }
  for (auto const& [lo, hi] : intervals) {
    if (lo < 1 || hi > n || lo > hi) {
      throw std::invalid_argument("interval_raag: interval out of range");
    }
    std::string tag = std::to_string(lo) +
                      (lo == hi ? "" : "-" + std::to_string(hi));
    Letter ai = b.add_fresh("a" + tag);
    Letter bi = b.add_fresh("b" + tag);
    Letter ci = b.add_fresh("c" + tag);
    Letters xI;
    for (std::size_t i = lo; i <= hi; ++i) {
      xI.push_back(xs[i - 1]);
    }
    b.rules.push_back({xI, {ai}});
    b.rules.push_back({{ai}, {bi}});
    b.rules.push_back({{bi}, {ci}});
    b.rules.push_back({{ci}, {ai}});
  }
  Letters base(xs.begin(), xs.end());
  return b.finish(std::move(base));
}

BasedPresentation builtin_z() {
  Builder b;
  Letter a = b.add_fresh("a");
  Letter bb = b.add_fresh("b");
  Letter c = b.add_fresh("c");
  b.rules.push_back({{a}, {bb}});
  b.rules.push_back({{bb}, {c}});
  b.rules.push_back({{c}, {a}});
  return b.finish({a});
}

BasedPresentation builtin_trivial() {
  Builder b;
  Letter t = b.add_fresh("t");
  return b.finish({t});
}

BasedPresentation builtin_thompson() { return builtin_thompson_n(2); }

BasedPresentation builtin_thompson_n(std::size_t k) {
  if (k < 2) {
    throw std::invalid_argument("thompson_n: need k >= 2");
  }
  Builder b;
  Letter x = b.add_fresh("x");
  b.rules.push_back({{x}, Letters(k, x)});
  return b.finish({x});
}

BasedPresentation builtin_thompson_commutator(std::size_t truncation) {
  if (truncation < 2) {
    throw std::invalid_argument("thompson_commutator: need truncation >= 2");
  }
  Builder b;
  Letter x = b.add_fresh("x");
  std::vector<Letter> as, bs;
  for (std::size_t i = 1; i <= truncation; ++i) {
    as.push_back(b.add_fresh("a" + std::to_string(i)));
  }
  for (std::size_t i = 1; i <= truncation; ++i) {
    bs.push_back(b.add_fresh("b" + std::to_string(i)));
  }
  b.rules.push_back({{x}, {x, x}});
  for (std::size_t i = 0; i + 1 < truncation; ++i) {
    b.rules.push_back({{as[i]}, {as[i + 1], x}});
  }
  for (std::size_t i = 0; i + 1 < truncation; ++i) {
    b.rules.push_back({{bs[i]}, {x, bs[i + 1]}});
  }
  return b.finish({as[0], bs[0]}, {as.back(), bs.back()});
}

BasedPresentation builtin_planar_braid(std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("planar_braid: need n >= 1");
  }
  return builtin_colored_braid(std::vector<std::size_t>(n, 1));
}

BasedPresentation builtin_colored_braid(std::vector<std::size_t> const& r) {
  if (r.empty()) {
    throw std::invalid_argument("colored_braid: need at least one colour");
  }
  Builder b;
  std::vector<Letter> xs;
  for (std::size_t i = 1; i <= r.size(); ++i) {
    xs.push_back(b.add_fresh("x" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      b.rules.push_back({{xs[i], xs[j]}, {xs[j], xs[i]}});
    }
  }
  Letters base;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 1) {
      throw std::invalid_argument("colored_braid: colour counts must be >= 1");
    }
    base.insert(base.end(), r[i], xs[i]);
  }
  return b.finish(std::move(base));
}

BasedPresentation canonical_renaming(BasedPresentation const& bp) {
  auto const& p = *bp.presentation;
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < p.alphabet().size(); ++i) {
    symbols.push_back("g" + std::to_string(i));
  }
  std::vector<Relation> rels = p.relations();
  return {make_presentation(Alphabet(std::move(symbols)), std::move(rels)),
          bp.baseword, bp.truncation_boundary};
}

std::string to_file_format(BasedPresentation const& bp) {
  return to_file_format(*bp.presentation) + "# base " +
         bp.presentation->word_to_string(bp.baseword) + "\n";
}

namespace {

struct ConstructionParser {
  std::string text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '-')) {
      ++pos;
    }
    if (start == pos) {
      throw std::invalid_argument("construct: expected a name at position " +
                                  std::to_string(pos));
    }
    return text.substr(start, pos - start);
  }

  BasedPresentation expr() {
    std::string name = ident();
    std::vector<std::string> raw_args;
    std::vector<BasedPresentation> sub;
    std::vector<std::size_t> arg_marks;  // positions of sub-expressions
    if (eat('(')) {
      if (!eat(')')) {
        do {
          skip_ws();
          if (pos < text.size() &&
              (std::isdigit(static_cast<unsigned char>(text[pos])))) {
            raw_args.push_back(ident());
          } else {
            arg_marks.push_back(raw_args.size());
            raw_args.push_back("");
            sub.push_back(expr());
          }
        } while (eat(','));
        if (!eat(')')) {
          throw std::invalid_argument("construct: expected ')'");
        }
      }
    }
    return build(name, raw_args, sub, arg_marks);
  }

  static std::size_t to_count(std::string const& s) {
    if (s.empty() ||
        !std::all_of(s.begin(), s.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw std::invalid_argument("construct: expected a number, got '" + s +
                                  "'");
    }
    return static_cast<std::size_t>(std::stoull(s));
  }

  static std::pair<std::size_t, std::size_t> to_interval(std::string const& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos) {
      std::size_t v = to_count(s);
      return {v, v};
    }
    return {to_count(s.substr(0, dash)), to_count(s.substr(dash + 1))};
  }

  BasedPresentation build(std::string const& name,
                          std::vector<std::string> const& raw,
                          std::vector<BasedPresentation> const& sub,
                          std::vector<std::size_t> const& marks) {
    auto need_subs = [&](std::size_t n) {
      if (sub.size() != n || raw.size() != n) {
        throw std::invalid_argument("construct: " + name + " takes " +
                                    std::to_string(n) + " presentation ar" +
                                    "gument(s)");
      }
    };
    if (name == "z") {
      need_subs(0);
      return builtin_z();
    }
    if (name == "trivial") {
      need_subs(0);
      return builtin_trivial();
    }
    if (name == "thompson") {
      need_subs(0);
      return builtin_thompson();
    }
    if (name == "thompson_n") {
      return builtin_thompson_n(to_count(raw.at(0)));
    }
    if (name == "thompson_commutator") {
      return builtin_thompson_commutator(to_count(raw.at(0)));
    }
    if (name == "planar_braid") {
      return builtin_planar_braid(to_count(raw.at(0)));
    }
    if (name == "colored_braid") {
      std::vector<std::size_t> r;
      for (auto const& s : raw) {
        r.push_back(to_count(s));
      }
      return builtin_colored_braid(r);
    }
    if (name == "free") {
      if (sub.empty()) {
        throw std::invalid_argument("construct: free needs parts");
      }
      return free_product(sub);
    }
    if (name == "sum") {
      if (sub.empty()) {
        throw std::invalid_argument("construct: sum needs parts");
      }
      return direct_sum(sub);
    }
    if (name == "csum") {
      if (raw.empty() || sub.empty()) {
        throw std::invalid_argument("construct: csum(N, parts...)");
      }
      return countable_sum(sub, to_count(raw.at(0)));
    }
    if (name == "wreath") {
      need_subs(1);
      return wreath_with_z(sub[0]);
    }
    if (name == "bullet") {
      need_subs(2);
      return bullet_product(sub[0], sub[1]);
    }
    if (name == "square") {
      need_subs(2);
      return square_product(sub[0], sub[1]);
    }
    if (name == "raag") {
      if (raw.empty()) {
        throw std::invalid_argument("construct: raag(n, intervals...)");
      }
      std::size_t n = to_count(raw[0]);
      std::vector<std::pair<std::size_t, std::size_t>> intervals;
      for (std::size_t i = 1; i < raw.size(); ++i) {
        intervals.push_back(to_interval(raw[i]));
      }
      return interval_raag(intervals, n);
    }
    throw std::invalid_argument("construct: unknown name '" + name + "'");
  }
};

}  // namespace

BasedPresentation parse_construction(std::string const& text) {
  ConstructionParser parser{text};
  auto out = parser.expr();
  parser.skip_ws();
  if (parser.pos != text.size()) {
    throw std::invalid_argument("construct: trailing input");
  }
  return out;
}

}  // namespace diagroup
