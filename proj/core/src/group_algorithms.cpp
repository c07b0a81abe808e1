#include "diagroup/group_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace diagroup {

bool is_trivial(Diagram const& d) {
  if (!d.spherical()) {
    throw std::invalid_argument("is_trivial: diagram is not spherical");
  }
  return d.is_identity();
}

bool diagrams_equal(Diagram const& a, Diagram const& b) {
  if (!(a.top() == b.top())) {
    throw std::invalid_argument("diagrams_equal: baseword mismatch");
  }
  return a == b;
}

bool diagrams_commute(Diagram const& a, Diagram const& b) {
  return a.concat(b) == b.concat(a);
}

std::vector<Diagram> cyclic_shifts(Diagram const& d, std::size_t max_ideals) {
  if (!d.spherical()) {
    throw std::invalid_argument("cyclic_shifts: diagram is not spherical");
  }
  std::vector<Diagram> out;
  std::unordered_set<Diagram, DiagramHash> seen;
  for (auto const& f : ideal_factorisations(d, max_ideals)) {
    Diagram shifted = f.second.concat(f.first);
    if (seen.insert(shifted).second) {
      out.push_back(std::move(shifted));
    }
  }
  return out;
}

ShiftClosure shift_closure(Diagram const& d, Budget const& budget) {
  ShiftClosure out;
  std::unordered_set<Diagram, DiagramHash> seen{d};
  out.elements.push_back(d);
  out.conjugators.push_back(Diagram::identity(d.presentation(), d.top()));
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    Diagram const current = out.elements[head];
    Diagram const via = out.conjugators[head];
    std::vector<Factorisation> factorisations;
    try {
      factorisations = ideal_factorisations(current, budget.max_frontier);
    } catch (BudgetExceeded const&) {
      out.complete = false;
      continue;
    }
    for (auto const& f : factorisations) {
      Diagram shifted = f.second.concat(f.first);
      if (seen.count(shifted)) {
        continue;
      }
      if (out.elements.size() >= budget.max_frontier) {
        out.complete = false;
        return out;
      }
      seen.insert(shifted);
      out.elements.push_back(std::move(shifted));
      out.conjugators.push_back(via.concat(f.first));
    }
  }
  return out;
}

bool is_absolutely_reduced(Diagram const& d) {
  if (!d.spherical()) {
    throw std::invalid_argument(
        "is_absolutely_reduced: diagram is not spherical");
  }
  if (d.is_identity()) {
    return true;
  }
  return d.concat(d).num_cells() == 2 * d.num_cells();
}

AbsolutelyReducedForm absolutely_reduced_form(Diagram const& d,
                                              Budget const& budget) {
  if (!d.spherical()) {
    throw std::invalid_argument(
        "absolutely_reduced_form: diagram is not spherical");
  }
  Diagram const id = Diagram::identity(d.presentation(), d.top());
  if (d.is_identity()) {
    return {id, d};
  }
  // Search the iterated shift closure, smallest cores first, for a normal
  // absolutely reduced conjugate. Shifts can shrink the cell count when the
  // rotated factors cancel.
  struct Entry {
    Diagram core;
    Diagram conjugator;
  };
  std::vector<Entry> entries{{d, id}};
  std::unordered_set<Diagram, DiagramHash> seen{d};
  std::vector<std::size_t> queue{0};  // indices, processed smallest first
  std::size_t processed = 0;
  while (processed < queue.size()) {
    // Pick the unprocessed entry with the fewest cells (stable on ties).
    std::size_t pick = processed;
    for (std::size_t i = processed; i < queue.size(); ++i) {
      if (entries[queue[i]].core.num_cells() <
          entries[queue[pick]].core.num_cells()) {
        pick = i;
      }
    }
    std::swap(queue[processed], queue[pick]);
    Entry const current = entries[queue[processed]];
    ++processed;

    if (is_absolutely_reduced(current.core) && is_normal(current.core)) {
      return {current.conjugator, current.core};
    }
    if (entries.size() >= budget.max_frontier) {
      continue;  // stop expanding, but test whatever is already queued
    }
    for (auto const& f :
         ideal_factorisations(current.core, budget.max_frontier)) {
      Diagram shifted = f.second.concat(f.first);
      if (seen.insert(shifted).second) {
        entries.push_back({shifted, current.conjugator.concat(f.first)});
        queue.push_back(entries.size() - 1);
      }
    }
  }
  throw BudgetExceeded("absolutely_reduced_form: no normal absolutely "
                       "reduced conjugate found within budget");
}

namespace {

// Set equality of two complete shift closures.
bool same_closure(ShiftClosure const& a, ShiftClosure const& b) {
  if (a.elements.size() != b.elements.size()) {
    return false;
  }
  std::unordered_set<Diagram, DiagramHash> sa(a.elements.begin(),
                                              a.elements.end());
  for (auto const& e : b.elements) {
    if (!sa.count(e)) {
      return false;
    }
  }
  return true;
}

}  // namespace

ConjugacyResult conjugate(Diagram const& a, Diagram const& b,
                          Budget const& budget) {
  if (!a.spherical() || !b.spherical() || !(a.top() == b.top())) {
    throw std::invalid_argument(
        "conjugate: need spherical diagrams over one baseword");
  }
  if (a.is_identity() || b.is_identity()) {
    if (a.is_identity() && b.is_identity()) {
      return {ConjugacyOutcome::Conjugate,
              Diagram::identity(a.presentation(), a.top())};
    }
    return {ConjugacyOutcome::NotConjugate, std::nullopt};
  }

  std::optional<AbsolutelyReducedForm> fa, fb;
  try {
    fa = absolutely_reduced_form(a, budget);
    fb = absolutely_reduced_form(b, budget);
  } catch (BudgetExceeded const&) {
    return {ConjugacyOutcome::Unknown, std::nullopt};
  }
  auto da = sum_decompose(fa->core);
  auto db = sum_decompose(fb->core);
  if (da.components.size() != db.components.size()) {
    return {ConjugacyOutcome::NotConjugate, std::nullopt};
  }

  std::vector<Diagram> piece_witnesses;
  for (std::size_t i = 0; i < da.components.size(); ++i) {
    Diagram const& ca = da.components[i];
    Diagram const& cb = db.components[i];
    if (ca.is_identity() != cb.is_identity()) {
      return {ConjugacyOutcome::NotConjugate, std::nullopt};
    }
    if (ca.is_identity()) {
      // Trivial components are conjugate through any diagram between their
      // basewords.
      if (ca.top() == cb.top()) {
        piece_witnesses.push_back(
            Diagram::identity(ca.presentation(), ca.top()));
        continue;
      }
      auto link = connecting_diagram(ca.top(), cb.top(), ca.presentation(),
                                     budget);
      if (!link) {
        auto check = words_equal_mod(ca.top(), cb.top(),
                                     *ca.presentation(), budget);
        return {check == EqualityResult::Distinct
                    ? ConjugacyOutcome::NotConjugate
                    : ConjugacyOutcome::Unknown,
                std::nullopt};
      }
      piece_witnesses.push_back(std::move(*link));
      continue;
    }
    auto sa = shift_closure(ca, budget);
    auto sb = shift_closure(cb, budget);
    if (!sa.complete || !sb.complete) {
      return {ConjugacyOutcome::Unknown, std::nullopt};
    }
    if (!same_closure(sa, sb)) {
      return {ConjugacyOutcome::NotConjugate, std::nullopt};
    }
    // cb lies in the closure of ca: ca = W o cb o W^-1 with W its witness.
    std::size_t at = sa.elements.size();
    for (std::size_t j = 0; j < sa.elements.size(); ++j) {
      if (sa.elements[j] == cb) {
        at = j;
        break;
      }
    }
    piece_witnesses.push_back(sa.conjugators[at]);
  }

  Diagram middle = piece_witnesses.front();
  for (std::size_t i = 1; i < piece_witnesses.size(); ++i) {
    middle = middle.sum(piece_witnesses[i]);
  }
  Diagram witness =
      fa->conjugator.concat(middle).concat(fb->conjugator.inverse());
  if (!(witness.concat(b).concat(witness.inverse()) == a)) {
    // The componentwise witnesses did not assemble; report honestly.
    return {ConjugacyOutcome::Unknown, std::nullopt};
  }
  return {ConjugacyOutcome::Conjugate, std::move(witness)};
}

bool AlphaVector::is_zero() const { return entries.empty(); }

void AlphaVector::add(Letters const& l, std::size_t rel, Letters const& r,
                      std::int64_t k) {
  auto key = std::make_tuple(l, rel, r);
  auto it = entries.find(key);
  if (it == entries.end()) {
    entries.emplace(std::move(key), k);
  } else {
    it->second += k;
    if (it->second == 0) {
      entries.erase(it);
    }
  }
}

AlphaVector operator+(AlphaVector const& x, AlphaVector const& y) {
  AlphaVector out = x;
  out.canonical = x.canonical && y.canonical;
  for (auto const& [key, value] : y.entries) {
    auto const& [l, rel, r] = key;
    out.add(l, rel, r, value);
  }
  return out;
}

AlphaVector AlphaVector::operator-() const {
  AlphaVector out;
  out.canonical = canonical;
  for (auto const& [key, value] : entries) {
    out.entries.emplace(key, -value);
  }
  return out;
}

AlphaVector alpha(Diagram const& d, ClassResolver& resolver) {
  if (!d.spherical()) {
    throw std::invalid_argument("alpha: diagram is not spherical");
  }
  AlphaVector out;
  auto words = d.replay_words();
  auto const& p = *d.presentation();
  for (std::size_t i = 0; i < d.cells().size(); ++i) {
    auto const& c = d.cells()[i];
    auto const& rel = p.relation(c.relation);
    std::size_t pat_len =
        (c.forward ? rel.left : rel.right).size();
    auto left = resolver.element(
        Letters(words[i].begin(), words[i].begin() + c.offset));
    auto right = resolver.element(
        Letters(words[i].begin() + c.offset + pat_len, words[i].end()));
    out.canonical = out.canonical && left.canonical && right.canonical;
    out.add(left.rep, c.relation, right.rep, c.forward ? 1 : -1);
  }
  return out;
}

Membership in_commutator_subgroup(Diagram const& d, ClassResolver& resolver) {
  AlphaVector v = alpha(d, resolver);
  if (v.is_zero()) {
    return Membership::Yes;
  }
  return v.canonical ? Membership::No : Membership::Unknown;
}

std::size_t root_bound(Diagram const& d, Budget const& budget) {
  return absolutely_reduced_form(d, budget).core.num_cells() / 2;
}

std::vector<Root> find_roots(Diagram const& d, Budget const& budget,
                             bool* exhausted) {
  if (exhausted) {
    *exhausted = false;
  }
  std::vector<Root> out;
  if (!d.spherical() || d.is_identity()) {
    return out;
  }
  std::optional<AbsolutelyReducedForm> form;
  try {
    form = absolutely_reduced_form(d, budget);
  } catch (BudgetExceeded const&) {
    if (exhausted) {
      *exhausted = true;
    }
    return out;
  }
  std::size_t cells = form->core.num_cells();
  std::vector<Factorisation> factorisations;
  try {
    factorisations = ideal_factorisations(form->core, budget.max_frontier);
  } catch (BudgetExceeded const&) {
    if (exhausted) {
      *exhausted = true;
    }
    return out;
  }
  std::unordered_set<Diagram, DiagramHash> reported;
  for (std::size_t k = 2; k <= cells / 2; ++k) {
    if (cells % k != 0) {
      continue;
    }
    std::size_t piece = cells / k;
    for (auto const& f : factorisations) {
      if (f.first.num_cells() != piece || !f.first.spherical()) {
        continue;
      }
      if (!(f.first.power(static_cast<int>(k)) == form->core)) {
        continue;
      }
      Diagram root = form->conjugator.concat(f.first)
                         .concat(form->conjugator.inverse());
      if (reported.insert(root).second) {
        out.push_back({std::move(root), static_cast<int>(k)});
      }
    }
  }
  return out;
}

PowerSumForm power_sum_form(Diagram const& d, Budget const& budget) {
  if (!d.spherical()) {
    throw std::invalid_argument("power_sum_form: diagram is not spherical");
  }
  PowerSumForm out{Diagram::identity(d.presentation(), d.top()), {}};
  if (d.is_identity()) {
    return out;
  }
  auto form = absolutely_reduced_form(d, budget);
  out.conjugator = form.conjugator;
  for (auto const& comp : sum_decompose(form.core).components) {
    if (comp.is_identity()) {
      out.factors.push_back({comp, 1});
      continue;
    }
    // Largest proper-power structure found within budget.
    auto roots = find_roots(comp, budget);
    Diagram base = comp;
    int exponent = 1;
    for (auto const& r : roots) {
      if (r.exponent > exponent) {
        base = r.root;
        exponent = r.exponent;
      }
    }
    out.factors.push_back({std::move(base), exponent});
  }
  return out;
}

Diagram reassemble(PowerSumForm const& form) {
  if (form.factors.empty()) {
    return form.conjugator.concat(form.conjugator.inverse());
  }
  Diagram middle = form.factors[0].base.power(form.factors[0].exponent);
  for (std::size_t i = 1; i < form.factors.size(); ++i) {
    middle = middle.sum(form.factors[i].base.power(form.factors[i].exponent));
  }
  return form.conjugator.concat(middle).concat(form.conjugator.inverse());
}

std::optional<Diagram> connecting_diagram(Word const& top, Word const& bottom,
                                          PresentationPtr p,
                                          Budget const& budget) {
  if (top == bottom) {
    return Diagram::identity(p, top);
  }
  struct Step {
    std::size_t parent;
    Cell cell;
  };
  std::vector<Letters> words{top.letters()};
  std::vector<Step> steps{{0, {}}};
  std::unordered_map<Letters, std::size_t, LettersHash> seen;
  seen.emplace(top.letters(), 0);
  std::size_t count = 0;
  for (std::size_t head = 0; head < words.size(); ++head) {
    for (auto const& app : rewrite_step(words[head], *p, Direction::Both)) {
      if (++count > budget.max_steps || words.size() >= budget.max_words) {
        return std::nullopt;
      }
      if (seen.count(app.result)) {
        continue;
      }
      std::size_t idx = words.size();
      seen.emplace(app.result, idx);
      words.push_back(app.result);
      steps.push_back({head, Cell{static_cast<std::uint32_t>(app.position),
                                  static_cast<std::uint32_t>(app.relation),
                                  app.forward}});
      if (app.result == bottom.letters()) {
        std::vector<Cell> cells;
        for (std::size_t at = idx; at != 0; at = steps[at].parent) {
          cells.push_back(steps[at].cell);
        }
        std::reverse(cells.begin(), cells.end());
        return Diagram::make(p, top, std::move(cells));
      }
    }
  }
  return std::nullopt;
}

}  // namespace diagroup
