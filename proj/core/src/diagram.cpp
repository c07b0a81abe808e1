#include "diagroup/diagram.hpp"

#include <algorithm>
#include <unordered_set>

#include "diagroup/rewrite.hpp"

namespace diagroup {

namespace {

Letters const& pattern_of(Presentation const& p, Cell const& c) {
  auto const& rel = p.relation(c.relation);
  return c.forward ? rel.left.letters() : rel.right.letters();
}

Letters const& replacement_of(Presentation const& p, Cell const& c) {
  auto const& rel = p.relation(c.relation);
  return c.forward ? rel.right.letters() : rel.left.letters();
}

bool apply_cell(Presentation const& p, Cell const& c, Letters& w) {
  auto const& pat = pattern_of(p, c);
  if (c.offset + pat.size() > w.size() ||
      !std::equal(pat.begin(), pat.end(), w.begin() + c.offset)) {
    return false;
  }
  auto const& rep = replacement_of(p, c);
  Letters out;
  out.reserve(w.size() - pat.size() + rep.size());
  out.insert(out.end(), w.begin(), w.begin() + c.offset);
  out.insert(out.end(), rep.begin(), rep.end());
  out.insert(out.end(), w.begin() + c.offset + pat.size(), w.end());
  w = std::move(out);
  return true;
}

// Whether adjacent cells a-then-b have disjoint supports (boundary contact
// allowed), and if so the swapped pair b'-then-a'.
bool try_swap(Presentation const& p, Cell const& a, Cell const& b, Cell& b_out,
              Cell& a_out) {
  std::int64_t pa = static_cast<std::int64_t>(pattern_of(p, a).size());
  std::int64_t qa = static_cast<std::int64_t>(replacement_of(p, a).size());
  std::int64_t pb = static_cast<std::int64_t>(pattern_of(p, b).size());
  std::int64_t qb = static_cast<std::int64_t>(replacement_of(p, b).size());
  if (static_cast<std::int64_t>(b.offset) + pb <=
      static_cast<std::int64_t>(a.offset)) {
    // b entirely left of a's replaced block
    b_out = b;
    a_out = a;
    a_out.offset = static_cast<std::uint32_t>(a.offset + (qb - pb));
    return true;
  }
  if (static_cast<std::int64_t>(b.offset) >=
      static_cast<std::int64_t>(a.offset) + qa) {
    b_out = b;
    b_out.offset = static_cast<std::uint32_t>(b.offset - (qa - pa));
    a_out = a;
    return true;
  }
  return false;
}

// Bubble cells[j] to position i by adjacent swaps; returns false (sequence
// untouched) when blocked.
bool bubble_to(Presentation const& p, std::vector<Cell>& cells, std::size_t j,
               std::size_t i) {
  std::vector<Cell> saved(cells.begin() + i, cells.begin() + j + 1);
  for (std::size_t k = j; k > i; --k) {
    Cell b_out, a_out;
    if (!try_swap(p, cells[k - 1], cells[k], b_out, a_out)) {
      std::copy(saved.begin(), saved.end(), cells.begin() + i);
      return false;
    }
    cells[k - 1] = b_out;
    cells[k] = a_out;
  }
  return true;
}

struct CellKey {
  std::uint32_t offset;
  std::uint32_t relation;
  bool backward;

  friend auto operator<=>(CellKey const&, CellKey const&) = default;
};

CellKey key_of(Cell const& c) { return {c.offset, c.relation, !c.forward}; }

// Deterministic canonical order: repeatedly move, among the cells that can
// be commuted to the current front, the one with the least
// (offset, relation, sign).
void canonical_sort(Presentation const& p, std::vector<Cell>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::size_t best = cells.size();
    CellKey best_key{};
    for (std::size_t j = i; j < cells.size(); ++j) {
      auto probe = cells;
      if (!bubble_to(p, probe, j, i)) {
        continue;
      }
      CellKey key = key_of(probe[i]);
      if (best == cells.size() || key < best_key) {
        best = j;
        best_key = key;
      }
    }
    bubble_to(p, cells, best, i);
  }
}

// Remove one cancellable pair if any: cells i < j with the same relation,
// opposite signs, and j commutable down to i+1 where the interfaces match
// exactly. With `rng` the pair is chosen at random among the candidates.
bool cancel_one_dipole(Presentation const& p, std::vector<Cell>& cells,
                       std::mt19937_64* rng) {
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (cells[i].relation != cells[j].relation ||
          cells[i].forward == cells[j].forward) {
        continue;
      }
      auto probe = cells;
      if (!bubble_to(p, probe, j, i + 1)) {
        continue;
      }
      if (probe[i].offset == probe[i + 1].offset) {
        if (!rng) {
          probe.erase(probe.begin() + i, probe.begin() + i + 2);
          cells = std::move(probe);
          return true;
        }
        candidates.emplace_back(i, j);
      }
    }
  }
  if (candidates.empty()) {
    return false;
  }
  auto [i, j] = candidates[(*rng)() % candidates.size()];
  bubble_to(p, cells, j, i + 1);
  cells.erase(cells.begin() + i, cells.begin() + i + 2);
  return true;
}

void reduce_and_sort(Presentation const& p, std::vector<Cell>& cells,
                     std::mt19937_64* rng) {
  if (rng) {
    // Random legal transpositions: a different representative of the trace.
    for (std::size_t round = 0; round < 4 * cells.size() + 8; ++round) {
      if (cells.size() < 2) {
        break;
      }
      std::size_t k = (*rng)() % (cells.size() - 1);
      Cell b_out, a_out;
      if (try_swap(p, cells[k], cells[k + 1], b_out, a_out)) {
        cells[k] = b_out;
        cells[k + 1] = a_out;
      }
    }
  }
  while (cancel_one_dipole(p, cells, rng)) {
  }
  canonical_sort(p, cells);
}

Letters replay_all(Presentation const& p, Word const& top,
                   std::vector<Cell> const& cells) {
  Letters w = top.letters();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!apply_cell(p, cells[i], w)) {
      throw std::invalid_argument("Diagram: replay fails at cell " +
                                  std::to_string(i));
    }
  }
  return w;
}

}  // namespace

Diagram::Diagram(PresentationPtr p, Word top, std::vector<Cell> cells,
                 Word bottom)
    : p_(std::move(p)),
      top_(std::move(top)),
      cells_(std::move(cells)),
      bottom_(std::move(bottom)) {}

Diagram Diagram::make(PresentationPtr p, Word top, std::vector<Cell> cells) {
  replay_all(*p, top, cells);  // validate the raw sequence
  reduce_and_sort(*p, cells, nullptr);
  Word bottom{replay_all(*p, top, cells)};
  return Diagram(std::move(p), std::move(top), std::move(cells),
                 std::move(bottom));
}

Diagram canonicalize_with_strategy(PresentationPtr p, Word top,
                                   std::vector<Cell> cells,
                                   std::mt19937_64& rng) {
  replay_all(*p, top, cells);
  reduce_and_sort(*p, cells, &rng);
  // No second normalisation pass: strategies must land on the canonical
  // form by themselves, that is the point of having them.
  Word bottom{replay_all(*p, top, cells)};
  return Diagram(std::move(p), std::move(top), std::move(cells),
                 std::move(bottom));
}

Diagram Diagram::identity(PresentationPtr p, Word w) {
  Word bottom = w;
  return Diagram(std::move(p), std::move(w), {}, std::move(bottom));
}

Diagram Diagram::atomic(PresentationPtr p, Letters const& a,
                        std::size_t relation, bool forward, Letters const& b) {
  if (relation >= p->num_relations()) {
    throw std::invalid_argument("Diagram::atomic: no such relation");
  }
  auto const& rel = p->relation(relation);
  Letters const& pat = forward ? rel.left.letters() : rel.right.letters();
  Letters top = a;
  top.insert(top.end(), pat.begin(), pat.end());
  top.insert(top.end(), b.begin(), b.end());
  Cell c{static_cast<std::uint32_t>(a.size()),
         static_cast<std::uint32_t>(relation), forward};
  return make(std::move(p), Word(std::move(top)), {c});
}

std::vector<Letters> Diagram::replay_words() const {
  std::vector<Letters> out;
  out.reserve(cells_.size() + 1);
  Letters w = top_.letters();
  out.push_back(w);
  for (auto const& c : cells_) {
    apply_cell(*p_, c, w);
    out.push_back(w);
  }
  return out;
}

namespace {

void require_same_presentation(Diagram const& a, Diagram const& b) {
  if (a.presentation() != b.presentation() &&
      !(*a.presentation() == *b.presentation())) {
    throw std::invalid_argument("diagrams over different presentations");
  }
}

}  // namespace

Diagram Diagram::concat(Diagram const& other) const {
  require_same_presentation(*this, other);
  if (!(bottom_ == other.top_)) {
    throw std::invalid_argument(
        "concat: bottom and top labels do not match (" +
        p_->word_to_string(bottom_) + " vs " +
        p_->word_to_string(other.top_) + ")");
  }
  std::vector<Cell> cells = cells_;
  cells.insert(cells.end(), other.cells_.begin(), other.cells_.end());
  return make(p_, top_, std::move(cells));
}

Diagram Diagram::sum(Diagram const& other) const {
  require_same_presentation(*this, other);
  // Left cells first with unchanged offsets (the right segment sits past
  // them throughout), then the right cells shifted by the left bottom
  // length.
  std::vector<Cell> cells = cells_;
  std::uint32_t shift = static_cast<std::uint32_t>(bottom_.size());
  for (Cell c : other.cells_) {
    c.offset += shift;
    cells.push_back(c);
  }
  return make(p_, top_ + other.top_, std::move(cells));
}

Diagram Diagram::inverse() const {
  std::vector<Cell> cells(cells_.rbegin(), cells_.rend());
  for (auto& c : cells) {
    c.forward = !c.forward;
  }
  return make(p_, bottom_, std::move(cells));
}

Diagram Diagram::power(int n) const {
  if (n == 0) {
    return identity(p_, top_);
  }
  if (n == 1) {
    return *this;
  }
  if (n == -1) {
    return inverse();
  }
  Diagram base = n > 0 ? *this : inverse();
  if (!base.spherical()) {
    throw std::invalid_argument("power: diagram is not spherical");
  }
  Diagram out = base;
  for (int k = 1; k < std::abs(n); ++k) {
    out = out.concat(base);
  }
  return out;
}

bool operator==(Diagram const& a, Diagram const& b) {
  return a.top_ == b.top_ && a.cells_ == b.cells_ &&
         (a.p_ == b.p_ || *a.p_ == *b.p_);
}

std::size_t Diagram::hash() const {
  std::size_t h = LettersHash{}(top_.letters());
  for (auto const& c : cells_) {
    h ^= (static_cast<std::size_t>(c.offset) * 0x9e3779b97f4a7c15ull) +
         (static_cast<std::size_t>(c.relation) << 17) + (c.forward ? 3 : 7) +
         (h << 6) + (h >> 2);
  }
  return h;
}

SumDecomposition sum_decompose(Diagram const& d) {
  auto const& p = *d.presentation();
  // A seam is an interior position of the evolving word, tracked from top()
  // to bottom(); it survives iff no cell support covers it strictly.
  struct Seam {
    std::size_t top_pos;
    std::size_t cur_pos;
    bool alive = true;
  };
  std::vector<Seam> seams;
  for (std::size_t i = 1; i < d.top().size(); ++i) {
    seams.push_back({i, i, true});
  }
  for (auto const& c : d.cells()) {
    std::size_t lo = c.offset;
    std::size_t hi = c.offset + pattern_of(p, c).size();
    std::int64_t delta =
        static_cast<std::int64_t>(replacement_of(p, c).size()) -
        static_cast<std::int64_t>(hi - lo);
    for (auto& s : seams) {
      if (!s.alive) {
        continue;
      }
      if (s.cur_pos > lo && s.cur_pos < hi) {
        s.alive = false;
      } else if (s.cur_pos >= hi) {
        s.cur_pos = static_cast<std::size_t>(
            static_cast<std::int64_t>(s.cur_pos) + delta);
      }
    }
  }

  SumDecomposition out;
  std::vector<std::size_t> live_top{0};
  for (auto const& s : seams) {
    if (s.alive) {
      out.top_cuts.push_back(s.top_pos);
      out.bottom_cuts.push_back(s.cur_pos);
      live_top.push_back(s.top_pos);
    }
  }
  live_top.push_back(d.top().size());

  // Assign cells to segments: replay again, tracking live seam positions.
  std::size_t k = out.top_cuts.size() + 1;  // number of components
  std::vector<std::vector<Cell>> comp_cells(k);
  std::vector<std::size_t> seam_cur;
  for (auto const& s : seams) {
    if (s.alive) {
      seam_cur.push_back(s.top_pos);
    }
  }
  for (auto const& c : d.cells()) {
    std::size_t lo = c.offset;
    std::size_t hi = lo + pattern_of(p, c).size();
    std::int64_t delta =
        static_cast<std::int64_t>(replacement_of(p, c).size()) -
        static_cast<std::int64_t>(hi - lo);
    std::size_t comp = 0;
    std::size_t left_boundary = 0;
    for (std::size_t s = 0; s < seam_cur.size(); ++s) {
      if (seam_cur[s] <= lo) {
        comp = s + 1;
        left_boundary = seam_cur[s];
      }
    }
    Cell rebased = c;
    rebased.offset = static_cast<std::uint32_t>(lo - left_boundary);
    comp_cells[comp].push_back(rebased);
    for (auto& pos : seam_cur) {
      if (pos >= hi) {
        pos = static_cast<std::size_t>(static_cast<std::int64_t>(pos) + delta);
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    Letters seg(d.top().letters().begin() + live_top[i],
                d.top().letters().begin() + live_top[i + 1]);
    out.components.push_back(
        Diagram::make(d.presentation(), Word(std::move(seg)),
                      std::move(comp_cells[i])));
  }
  return out;
}

bool is_simple(Diagram const& d) {
  return sum_decompose(d).components.size() == 1;
}

bool is_normal(Diagram const& d) {
  if (!d.spherical()) {
    return false;
  }
  for (auto const& c : sum_decompose(d).components) {
    if (!c.spherical()) {
      return false;
    }
  }
  return true;
}

std::vector<FrontMove> front_moves(Diagram const& d) {
  auto const& p = *d.presentation();
  std::vector<FrontMove> out;
  auto const& cells = d.cells();
  for (std::size_t j = 0; j < cells.size(); ++j) {
    auto probe = cells;
    if (bubble_to(p, probe, j, 0)) {
      out.push_back({probe[0].offset, probe[0].relation, probe[0].forward, j});
    }
  }
  return out;
}

bool is_prefix(Diagram const& phi, Diagram const& psi) {
  if (!(phi.top() == psi.top())) {
    throw std::invalid_argument("is_prefix: top labels differ");
  }
  Diagram rest = phi.inverse().concat(psi);
  return rest.num_cells() == psi.num_cells() - phi.num_cells();
}

Diagram greatest_common_prefix(Diagram const& phi, Diagram const& psi) {
  if (!(phi.top() == psi.top())) {
    throw std::invalid_argument("greatest_common_prefix: top labels differ");
  }
  auto const& pres = *phi.presentation();
  Letters cur = phi.top().letters();
  std::vector<Cell> a = phi.cells();
  std::vector<Cell> b = psi.cells();
  std::vector<Cell> prefix;

  while (true) {
    // Front moves of both remainders; any common one belongs to the maximal
    // common prefix, so take the canonically least.
    std::optional<Cell> chosen;
    std::size_t at_a = 0, at_b = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      auto pa = a;
      if (!bubble_to(pres, pa, j, 0)) {
        continue;
      }
      for (std::size_t k = 0; k < b.size(); ++k) {
        auto pb = b;
        if (!bubble_to(pres, pb, k, 0)) {
          continue;
        }
        if (pa[0] == pb[0]) {
          if (!chosen || key_of(pa[0]) < key_of(*chosen)) {
            chosen = pa[0];
            at_a = j;
            at_b = k;
          }
        }
      }
    }
    if (!chosen) {
      break;
    }
    bubble_to(pres, a, at_a, 0);
    bubble_to(pres, b, at_b, 0);
    a.erase(a.begin());
    b.erase(b.begin());
    prefix.push_back(*chosen);
    apply_cell(pres, *chosen, cur);
  }
  return Diagram::make(phi.presentation(), phi.top(), std::move(prefix));
}

std::vector<Factorisation> ideal_factorisations(Diagram const& d,
                                                std::size_t max_count) {
  auto const& p = *d.presentation();
  auto const& cells = d.cells();
  std::size_t n = cells.size();
  if (n > 62) {
    throw BudgetExceeded("ideal_factorisations: too many cells");
  }
  // BFS over ideals as bitmasks of canonical-sequence indices; for each we
  // keep one arrangement with the ideal's cells in front.
  struct State {
    std::vector<Cell> arranged;
    std::size_t prefix_len;
    std::vector<std::size_t> origin;  // arranged position -> original index
  };
  std::vector<std::uint64_t> order;
  std::unordered_set<std::uint64_t> seen;
  std::vector<State> states;
  std::vector<std::size_t> state_of;

  std::vector<std::size_t> origin0(n);
  for (std::size_t i = 0; i < n; ++i) {
    origin0[i] = i;
  }
  order.push_back(0);
  seen.insert(0);
  states.push_back({cells, 0, origin0});

  std::vector<Factorisation> out;
  for (std::size_t head = 0; head < order.size(); ++head) {
    State const st = states[head];
    // Emit the factorisation for this ideal.
    std::vector<Cell> first(st.arranged.begin(),
                            st.arranged.begin() + st.prefix_len);
    std::vector<Cell> second(st.arranged.begin() + st.prefix_len,
                             st.arranged.end());
    Diagram top_part = Diagram::make(d.presentation(), d.top(), first);
    Diagram bottom_part =
        Diagram::make(d.presentation(), top_part.bottom(), second);
    out.push_back({std::move(top_part), std::move(bottom_part)});
    if (out.size() > max_count) {
      throw BudgetExceeded("ideal_factorisations: more than " +
                           std::to_string(max_count) + " ideals");
    }
    // Extend the ideal by each front-ready cell of the remainder.
    for (std::size_t j = st.prefix_len; j < st.arranged.size(); ++j) {
      auto probe = st.arranged;
      if (!bubble_to(p, probe, j, st.prefix_len)) {
        continue;
      }
      std::uint64_t mask = order[head] | (1ull << st.origin[j]);
      if (!seen.insert(mask).second) {
        continue;
      }
      auto origin = st.origin;
      std::size_t moved = origin[j];
      origin.erase(origin.begin() + j);
      origin.insert(origin.begin() + st.prefix_len, moved);
      order.push_back(mask);
      states.push_back({std::move(probe), st.prefix_len + 1,
                        std::move(origin)});
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> dependency_edges(
    Diagram const& d) {
  auto const& p = *d.presentation();
  auto const& cells = d.cells();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      // i is a predecessor of j when j cannot bubble past i with everything
      // in between removed-independent; approximate by direct blocking:
      // bubble j down to i+1 succeeds but the adjacent swap with i fails.
      auto probe = cells;
      if (!bubble_to(p, probe, j, i + 1)) {
        continue;
      }
      Cell b_out, a_out;
      if (!try_swap(p, probe[i], probe[i + 1], b_out, a_out)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

}  // namespace diagroup
