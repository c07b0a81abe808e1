#include "diagroup/hyperplane.hpp"

#include <algorithm>
#include <set>

namespace diagroup {

namespace {

Letters side_letters(Presentation const& p, std::size_t relation,
                     bool forward) {
  auto const& rel = p.relation(relation);
  return forward ? rel.left.letters() : rel.right.letters();
}

Letters join(std::initializer_list<Letters const*> parts) {
  Letters out;
  for (auto const* part : parts) {
    out.insert(out.end(), part->begin(), part->end());
  }
  return out;
}

// All words of the alphabet with 1 <= length <= max_len, ShortLex order.
std::vector<Letters> short_words(Presentation const& p, std::size_t max_len) {
  std::vector<Letters> out;
  std::vector<Letters> layer;
  for (Letter c = 0; c < p.alphabet().size(); ++c) {
    layer.push_back({c});
  }
  for (std::size_t len = 1; len <= max_len; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Letters> next;
    for (auto const& w : layer) {
      for (Letter c = 0; c < p.alphabet().size(); ++c) {
        Letters e = w;
        e.push_back(c);
        next.push_back(std::move(e));
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<SignedHyperplane> hyperplane_word(Diagram const& d,
                                              ClassResolver& resolver) {
  std::vector<SignedHyperplane> out;
  auto words = d.replay_words();
  auto const& p = *d.presentation();
  for (std::size_t i = 0; i < d.cells().size(); ++i) {
    auto const& c = d.cells()[i];
    std::size_t pat_len = side_letters(p, c.relation, c.forward).size();
    Letters left(words[i].begin(), words[i].begin() + c.offset);
    Letters right(words[i].begin() + c.offset + pat_len, words[i].end());
    out.push_back({{resolver.element(left), c.relation,
                    resolver.element(right)},
                   c.forward});
  }
  return out;
}

std::vector<HyperplaneLabel> component_hyperplanes(Word const& w,
                                                   ClassResolver& resolver) {
  auto const& p = resolver.presentation();
  auto const& cls = resolver.word_class(w.letters());
  std::set<HyperplaneLabel> labels;
  for (auto const& m : cls.words) {
    for (std::size_t r = 0; r < p.num_relations(); ++r) {
      auto const& l = p.relation(r).left.letters();
      for (std::size_t pos = 0; pos + l.size() <= m.size(); ++pos) {
        if (!std::equal(l.begin(), l.end(), m.begin() + pos)) {
          continue;
        }
        Letters a(m.begin(), m.begin() + pos);
        Letters b(m.begin() + pos + l.size(), m.end());
        labels.insert(
            {resolver.element(a), r, resolver.element(b)});
      }
    }
  }
  return {labels.begin(), labels.end()};
}

TransversalityResult hyperplanes_transverse(HyperplaneLabel const& h1,
                                            HyperplaneLabel const& h2,
                                            ClassResolver& resolver,
                                            std::size_t max_witness_len) {
  if (h1 == h2) {
    return {Transversality::No, std::nullopt};
  }
  auto const& p = resolver.presentation();
  Letters const u = side_letters(p, h1.relation, true);
  Letters const pp = side_letters(p, h2.relation, true);
  Letters const& a = h1.left.rep;
  Letters const& b = h1.right.rep;
  Letters const& c = h2.left.rep;
  Letters const& d = h2.right.rep;

  // Branch 1 needs c = auy and b = ypd; both die structurally when the
  // corresponding coordinate is the adjoined identity.
  bool branch1 = !c.empty() && !b.empty();
  bool branch2 = !d.empty() && !a.empty();
  if (!branch1 && !branch2) {
    return {Transversality::No, std::nullopt};
  }

  bool inconclusive = false;
  for (auto const& y : short_words(p, max_witness_len)) {
    if (branch1) {
      auto e1 = resolver.equal(c, join({&a, &u, &y}));
      if (e1 == EqualityResult::Equal) {
        auto e2 = resolver.equal(b, join({&y, &pp, &d}));
        if (e2 == EqualityResult::Equal) {
          return {Transversality::Yes, Word(y)};
        }
        if (e2 == EqualityResult::Unknown) {
          inconclusive = true;
        }
      } else if (e1 == EqualityResult::Unknown) {
        inconclusive = true;
      }
    }
    if (branch2) {
      auto e1 = resolver.equal(d, join({&y, &u, &b}));
      if (e1 == EqualityResult::Equal) {
        auto e2 = resolver.equal(a, join({&c, &pp, &y}));
        if (e2 == EqualityResult::Equal) {
          return {Transversality::Yes, Word(y)};
        }
        if (e2 == EqualityResult::Unknown) {
          inconclusive = true;
        }
      } else if (e1 == EqualityResult::Unknown) {
        inconclusive = true;
      }
    }
  }
  if (inconclusive) {
    return {Transversality::Unknown, std::nullopt};
  }
  // The witness length is bounded by the class sizes when those are fully
  // known; otherwise the exhausted search is only evidence.
  auto bounded = [&](Letters const& target, std::size_t fixed_len) {
    if (target.empty()) {
      return true;
    }
    auto const& cls = resolver.word_class(target);
    if (!cls.closed) {
      return false;
    }
    std::size_t longest = 0;
    for (auto const& m : cls.words) {
      longest = std::max(longest, m.size());
    }
    return longest <= fixed_len + max_witness_len;
  };
  bool decided = true;
  if (branch1) {
    decided = decided && bounded(c, a.size() + u.size()) &&
              bounded(b, pp.size() + d.size());
  }
  if (branch2) {
    decided = decided && bounded(d, u.size() + b.size()) &&
              bounded(a, c.size() + pp.size());
  }
  return {decided ? Transversality::No : Transversality::Unknown,
          std::nullopt};
}

namespace {

Rational evaluate(std::vector<Rational> const& phi, Letters const& w) {
  Rational out(0);
  for (Letter l : w) {
    out += phi[l];
  }
  return out;
}

}  // namespace

ConspicialityReport check_conspicial(Word const& w, ClassResolver& resolver,
                                     std::size_t max_piece_len) {
  auto const& p = resolver.presentation();
  ConspicialityReport report;

  if (resolver.word_class(w.letters()).closed) {
    report.value = Conspiciality::Conspicial;
    report.reason = "finite class";
    return report;
  }

  auto excluded = resolver.positively_weighted_letters();
  auto in_free_support = [&](Letters const& word) {
    return std::none_of(word.begin(), word.end(),
                        [&](Letter l) { return excluded.count(l) > 0; });
  };

  auto candidates = short_words(p, max_piece_len);

  // Condition 1: w = ab, a = ap, b = pb with [p] nontrivial. Any such p has
  // phi(p) = 0 for every nonnegative invariant phi, so only candidates over
  // the unweighted letters can work at all.
  for (auto const& candidate_p : candidates) {
    if (!in_free_support(candidate_p) ||
        resolver.class_is_trivial(candidate_p)) {
      continue;
    }
    for (auto const& a : candidates) {
      if (resolver.equal(a, join({&a, &candidate_p})) !=
          EqualityResult::Equal) {
        continue;
      }
      for (auto const& b : candidates) {
        if (resolver.equal(b, join({&candidate_p, &b})) ==
                EqualityResult::Equal &&
            resolver.equal(w.letters(), join({&a, &b})) ==
                EqualityResult::Equal) {
          report.value = Conspiciality::NotConspicial;
          report.reason = "witness";
          report.absorbing_witness = {Word(a), Word(b), Word(candidate_p)};
          return report;
        }
      }
    }
  }
  // Condition 1 is vacuous iff no relation side lies over the unweighted
  // letters (then every candidate p over them has a trivial class).
  bool cond1_excluded = true;
  for (auto const& rel : p.relations()) {
    for (auto const* side : {&rel.left, &rel.right}) {
      if (in_free_support(side->letters())) {
        cond1_excluded = false;
      }
    }
  }

  // Condition 2: w = a u v w' b with relation sides uv and vw', a u = a u
  // (v xi), w' b = (xi v) w' b. The absorbed piece v xi forces v and xi
  // over the unweighted letters.
  std::vector<std::tuple<Letters, Letters, Letters>> shapes;  // (u, v, w')
  for (auto const& rel1 : p.relations()) {
    for (auto const* s1 : {&rel1.left, &rel1.right}) {
      auto const& uv = s1->letters();
      for (std::size_t cut = 1; cut < uv.size(); ++cut) {
        Letters u(uv.begin(), uv.begin() + cut);
        Letters v(uv.begin() + cut, uv.end());
        if (!in_free_support(v)) {
          continue;
        }
        for (auto const& rel2 : p.relations()) {
          for (auto const* s2 : {&rel2.left, &rel2.right}) {
            auto const& vw = s2->letters();
            if (vw.size() <= v.size() ||
                !std::equal(v.begin(), v.end(), vw.begin())) {
              continue;
            }
            Letters wp(vw.begin() + v.size(), vw.end());
            shapes.emplace_back(u, v, wp);
          }
        }
      }
    }
  }

  bool cond2_excluded = true;
  for (auto const& [u, v, wp] : shapes) {
    // Witness search over small a, b, xi.
    for (auto const& a : candidates) {
      Letters auvwp = join({&a, &u, &v, &wp});
      for (auto const& b : candidates) {
        if (resolver.equal(w.letters(), join({&auvwp, &b})) !=
            EqualityResult::Equal) {
          continue;
        }
        Letters au = join({&a, &u});
        Letters wpb = join({&wp, &b});
        for (auto const& xi : candidates) {
          if (!in_free_support(xi)) {
            continue;
          }
          Letters vxi = join({&v, &xi});
          Letters xiv = join({&xi, &v});
          if (resolver.equal(au, join({&au, &vxi})) == EqualityResult::Equal &&
              resolver.equal(wpb, join({&xiv, &wpb})) ==
                  EqualityResult::Equal) {
            report.value = Conspiciality::NotConspicial;
            report.reason = "witness";
            report.osculation_witness = {Word(a), Word(u),  Word(v),
                                         Word(wp), Word(b), Word(xi)};
            return report;
          }
        }
      }
    }
    // Exclusion: a and b may only use letters that are either unweighted or
    // have surplus under every positive invariant; then the first/last
    // letter closures must refute them.
    Letters uvwp = join({&u, &v, &wp});
    bool refuted = false;
    std::set<Letter> allowed;
    for (Letter c = 0; c < p.alphabet().size(); ++c) {
      if (!excluded.count(c)) {
        allowed.insert(c);
        continue;
      }
      auto const& phi = resolver.positive_invariant(c);
      Rational delta = evaluate(*phi, w.letters()) - evaluate(*phi, uvwp);
      if (delta.is_negative()) {
        refuted = true;
        break;
      }
      if (delta.is_positive()) {
        allowed.insert(c);
      }
    }
    if (!refuted) {
      auto firsts = resolver.first_letter_closure(w.letters());
      auto lasts = resolver.last_letter_closure(w.letters());
      bool first_possible =
          std::any_of(allowed.begin(), allowed.end(),
                      [&](Letter l) { return firsts.count(l) > 0; });
      bool last_possible =
          std::any_of(allowed.begin(), allowed.end(),
                      [&](Letter l) { return lasts.count(l) > 0; });
      refuted = !first_possible || !last_possible;
    }
    if (!refuted) {
      cond2_excluded = false;
    }
  }

  if (cond1_excluded && cond2_excluded) {
    report.value = Conspiciality::Conspicial;
    report.reason = "invariant exclusion";
    return report;
  }
  report.value = Conspiciality::Unknown;
  return report;
}

}  // namespace diagroup
