#ifndef DIAGROUP_GROUP_ALGORITHMS_HPP
#define DIAGROUP_GROUP_ALGORITHMS_HPP

#include <map>

#include "diagroup/diagram.hpp"
#include "diagroup/semigroup.hpp"

namespace diagroup {

// Word problem on canonical spherical diagrams.
bool is_trivial(Diagram const& d);
bool diagrams_equal(Diagram const& a, Diagram const& b);
bool diagrams_commute(Diagram const& a, Diagram const& b);

/// One-step cyclic shifts: canonical(d2 o d1) over all on-the-nose
/// factorisations d = d1 o d2 along order ideals.
std::vector<Diagram> cyclic_shifts(Diagram const& d,
                                   std::size_t max_ideals = 1u << 16);

/// Closure of {d} under cyclic shifts, with a conjugator witness per
/// element: elements[i] = conjugators[i]^-1 o d o conjugators[i].
struct ShiftClosure {
  std::vector<Diagram> elements;
  std::vector<Diagram> conjugators;
  bool complete = true;
};

ShiftClosure shift_closure(Diagram const& d, Budget const& budget = {});

/// Whether d o d is dipole-free. The paper's absolute reducedness asks this
/// of every power; the square test is the adopted finite criterion.
bool is_absolutely_reduced(Diagram const& d);

/// d = conjugator o core o conjugator^-1 with the core normal and
/// absolutely reduced. Throws BudgetExceeded if the shift search is
/// exhausted (not expected at sane sizes).
struct AbsolutelyReducedForm {
  Diagram conjugator;
  Diagram core;
};

AbsolutelyReducedForm absolutely_reduced_form(Diagram const& d,
                                              Budget const& budget = {});

enum class ConjugacyOutcome { Conjugate, NotConjugate, Unknown };

struct ConjugacyResult {
  ConjugacyOutcome outcome;
  /// Verified witness: a = witness o b o witness^-1.
  std::optional<Diagram> witness;
};

ConjugacyResult conjugate(Diagram const& a, Diagram const& b,
                          Budget const& budget = {});

/// Element of the free abelian group on (semigroup element, relation,
/// semigroup element) triples.
struct AlphaVector {
  std::map<std::tuple<Letters, std::size_t, Letters>, std::int64_t> entries;
  /// All coordinate representatives were canonical (complete or fully
  /// enumerated classes).
  bool canonical = true;

  bool is_zero() const;
  void add(Letters const& l, std::size_t rel, Letters const& r,
           std::int64_t k);
  friend AlphaVector operator+(AlphaVector const& x, AlphaVector const& y);
  AlphaVector operator-() const;
  friend bool operator==(AlphaVector const& x, AlphaVector const& y) {
    return x.entries == y.entries;
  }
};

AlphaVector alpha(Diagram const& d, ClassResolver& resolver);

enum class Membership { Yes, No, Unknown };

/// Commutator-subgroup membership: alpha(d) = 0. A nonzero value computed
/// from non-canonical representatives is reported Unknown.
Membership in_commutator_subgroup(Diagram const& d, ClassResolver& resolver);

/// Upper bound on root exponents: half the number of cells of the
/// absolutely reduced core.
std::size_t root_bound(Diagram const& d, Budget const& budget = {});

struct Root {
  Diagram root;
  int exponent;
};

/// Proper roots found by exponent and order-ideal prefix search on the
/// core; `exhausted` reports whether any search hit its budget.
std::vector<Root> find_roots(Diagram const& d, Budget const& budget = {},
                             bool* exhausted = nullptr);

/// d = conjugator o (sum of base^exponent) o conjugator^-1 with each
/// nontrivial base simple and absolutely reduced, exponents maximal found.
struct PowerSumFactor {
  Diagram base;
  int exponent;  // 1 for trivial slots
};

struct PowerSumForm {
  Diagram conjugator;
  std::vector<PowerSumFactor> factors;
};

PowerSumForm power_sum_form(Diagram const& d, Budget const& budget = {});

Diagram reassemble(PowerSumForm const& form);

/// A diagram with the given top and bottom labels, if one is found within
/// the budget; used as a conjugacy witness between trivial components and
/// as a cell replacement in retractions.
std::optional<Diagram> connecting_diagram(Word const& top, Word const& bottom,
                                          PresentationPtr p,
                                          Budget const& budget = {});

}  // namespace diagroup

#endif
