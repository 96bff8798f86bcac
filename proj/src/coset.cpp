#include "genus2/coset.hpp"

#include <deque>
#include <stdexcept>

namespace genus2 {

namespace {

// column layout: 2*gen for g, 2*gen+1 for g^-1
int column(Letter l) { return 2 * l.gen + (l.sign > 0 ? 0 : 1); }
int inverse_column(int col) { return col ^ 1; }

std::vector<int> columns_of(const Word& w) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(w.size()));
  for (Letter l : w.letters()) out.push_back(column(l));
  return out;
}

}  // namespace

class TcWorker {
 public:
  TcWorker(const Presentation& p, const std::vector<Word>& subgroup_words, int max_cosets)
      : ncols_(2 * p.alphabet().size()), max_cosets_(max_cosets) {
    for (int i = 0; i < p.relator_count(); ++i) relators_.push_back(columns_of(p.relator_word(i)));
    for (const Word& w : subgroup_words) subgroup_.push_back(columns_of(remap(w, p.alphabet())));
    table_.push_back({});             // row 0 unused; cosets are 1-based
    parent_.push_back(0);
    new_row();                        // coset 1 = subgroup
  }

  bool run(TcStrategy strategy) {
    for (const auto& w : subgroup_) {
      if (!scan_and_fill(1, w)) return false;
      process_coincidences();
    }
    return strategy == TcStrategy::Hlt ? run_hlt() : run_felsch();
  }

  int live_count() const {
    int n = 0;
    for (int c = 1; c < static_cast<int>(table_.size()); ++c)
      if (alive(c)) ++n;
    return n;
  }

  // breadth-first renumbering of the live cosets
  CosetTable standardized() const {
    CosetTable out;
    out.ngens_ = ncols_ / 2;
    std::vector<int> number(table_.size(), 0);
    std::vector<int> order;
    number[1] = 1;
    order.push_back(1);
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int c = order[qi];
      for (int x = 0; x < ncols_; ++x) {
        int d = rep_const(table_[static_cast<size_t>(c)][static_cast<size_t>(x)]);
        if (d > 0 && number[static_cast<size_t>(d)] == 0) {
          number[static_cast<size_t>(d)] = static_cast<int>(order.size()) + 1;
          order.push_back(d);
        }
      }
    }
    for (int c : order) {
      std::vector<int> row(static_cast<size_t>(ncols_), 0);
      for (int x = 0; x < ncols_; ++x)
        row[static_cast<size_t>(x)] =
            number[static_cast<size_t>(rep_const(table_[static_cast<size_t>(c)][static_cast<size_t>(x)]))];
      out.rows_.push_back(std::move(row));
    }
    return out;
  }

 private:
  int ncols_;
  int max_cosets_;
  long defined_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_;
  std::vector<std::vector<int>> table_;  // 0 = undefined
  std::vector<int> parent_;              // union-find; parent_[c] == c iff alive
  std::deque<int> dead_queue_;

  bool alive(int c) const { return parent_[static_cast<size_t>(c)] == c; }

  int rep_const(int c) const {
    while (c > 0 && parent_[static_cast<size_t>(c)] != c) c = parent_[static_cast<size_t>(c)];
    return c;
  }

  int rep(int c) {
    while (parent_[static_cast<size_t>(c)] != c) {
      parent_[static_cast<size_t>(c)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(c)])];
      c = parent_[static_cast<size_t>(c)];
    }
    return c;
  }

  int& at(int c, int x) { return table_[static_cast<size_t>(c)][static_cast<size_t>(x)]; }

  // Read with lazy compression: stored targets may be stale aliases of dead
  // cosets after coincidence processing; collapse them to representatives.
  int get(int c, int x) {
    int e = at(c, x);
    if (e == 0) return 0;
    int r = rep(e);
    if (r != e) at(c, x) = r;
    return r;
  }

  int new_row() {
    if (defined_ >= max_cosets_) return 0;
    ++defined_;
    table_.emplace_back(static_cast<size_t>(ncols_), 0);
    parent_.push_back(static_cast<int>(table_.size()) - 1);
    return static_cast<int>(table_.size()) - 1;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    dead_queue_.push_back(b);
  }

  void process_coincidences() {
    while (!dead_queue_.empty()) {
      int dead = dead_queue_.front();
      dead_queue_.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        int d = at(dead, x);
        if (d == 0) continue;
        at(dead, x) = 0;
        if (at(d, inverse_column(x)) == dead) at(d, inverse_column(x)) = 0;
        int mu = rep(dead), nu = rep(d);
        // transfer the edge mu --x--> nu; existing entries on either side are
        // coincidences, and both sides must end up mirror-consistent
        int e = get(mu, x);
        int f = get(nu, inverse_column(x));
        if (e != 0) merge(nu, e);
        if (f != 0) merge(mu, f);
        int m2 = rep(mu), n2 = rep(nu);
        if (at(m2, x) == 0) at(m2, x) = n2;
        if (at(n2, inverse_column(x)) == 0) at(n2, inverse_column(x)) = m2;
      }
    }
  }

  // Scan word at coset c, defining new cosets to fill gaps (HLT style).
  // Returns false when the coset limit is reached.
  bool scan_and_fill(int c, const std::vector<int>& word) {
    for (;;) {
      int start = rep(c);
      int f = start;
      size_t i = 0;
      while (i < word.size() && get(f, word[i]) != 0) f = get(f, word[i++]);
      if (i == word.size()) {
        if (f != start) {
          merge(f, start);
          process_coincidences();
        }
        return true;
      }
      int b = start;
      size_t j = word.size();
      while (j > i && get(b, inverse_column(word[j - 1])) != 0) b = get(b, inverse_column(word[--j]));
      if (j == i) {  // untraced portion closed up: coincidence
        merge(f, b);
        process_coincidences();
        return true;
      }
      if (j == i + 1) {  // exactly one gap: deduction
        at(f, word[i]) = b;
        at(b, inverse_column(word[i])) = f;
        return true;
      }
      int fresh = new_row();
      if (fresh == 0) return false;
      at(f, word[i]) = fresh;
      at(fresh, inverse_column(word[i])) = f;
    }
  }

  // Scan without filling; applies a deduction or coincidence when possible.
  // Returns true when the table changed.
  bool scan(int c, const std::vector<int>& word) {
    int f = c;
    size_t i = 0;
    while (i < word.size() && get(f, word[i]) != 0) f = get(f, word[i++]);
    if (i == word.size()) {
      if (f != c) {
        merge(f, c);
        process_coincidences();
        return true;
      }
      return false;
    }
    int b = c;
    size_t j = word.size();
    while (j > i && get(b, inverse_column(word[j - 1])) != 0) b = get(b, inverse_column(word[--j]));
    if (j == i) {
      merge(f, b);
      process_coincidences();
      return true;
    }
    if (j == i + 1) {
      at(f, word[i]) = b;
      at(b, inverse_column(word[i])) = f;
      return true;
    }
    return false;
  }

  bool run_hlt() {
    // Coincidence processing can reopen rows scanned earlier, so iterate the
    // whole pass until the table really is complete.
    for (;;) {
      for (int c = 1; c < static_cast<int>(table_.size()); ++c) {
        if (!alive(c)) continue;
        for (const auto& rel : relators_) {
          if (!scan_and_fill(c, rel)) return false;
          if (!alive(c)) break;
        }
        // complete the row so generators missing from the relators still act
        for (int x = 0; alive(c) && x < ncols_; ++x) {
          if (at(c, x) != 0) continue;
          int fresh = new_row();
          if (fresh == 0) return false;
          at(c, x) = fresh;
          at(fresh, inverse_column(x)) = c;
        }
      }
      bool complete = true;
      for (int c = 1; complete && c < static_cast<int>(table_.size()); ++c) {
        if (!alive(c)) continue;
        for (int x = 0; x < ncols_; ++x)
          if (at(c, x) == 0) {
            complete = false;
            break;
          }
      }
      if (complete) return true;
    }
  }

  bool run_felsch() {
    for (;;) {
      // deduction closure: rescan everything until stable
      bool changed = true;
      while (changed) {
        changed = false;
        for (int c = 1; c < static_cast<int>(table_.size()); ++c) {
          if (!alive(c)) continue;
          for (const auto& rel : relators_)
            if (alive(c) && scan(c, rel)) changed = true;
        }
      }
      // define the first undefined entry, row-major over live cosets
      int dc = 0, dx = 0;
      for (int c = 1; c < static_cast<int>(table_.size()) && dc == 0; ++c) {
        if (!alive(c)) continue;
        for (int x = 0; x < ncols_; ++x)
          if (at(c, x) == 0) {
            dc = c;
            dx = x;
            break;
          }
      }
      if (dc == 0) return true;  // table complete
      int fresh = new_row();
      if (fresh == 0) return false;
      at(dc, dx) = fresh;
      at(fresh, inverse_column(dx)) = dc;
    }
  }
};

bool CosetTable::validate(const Presentation& p, const std::vector<Word>& subgroup_words,
                          std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  int n = index();
  if (2 * p.alphabet().size() != ngens_ * 2) return fail("generator count mismatch");
  for (int c = 1; c <= n; ++c)
    for (int g = 0; g < ngens_; ++g)
      for (int s : {1, -1}) {
        int d = entry(c, g, s);
        if (d < 1 || d > n) return fail("entry out of range");
        if (entry(d, g, -s) != c) return fail("inverse consistency violated");
      }
  auto trace = [&](int c, const Word& w) {
    for (Letter l : w.letters()) c = entry(c, l.gen, l.sign);
    return c;
  };
  for (int c = 1; c <= n; ++c)
    for (int i = 0; i < p.relator_count(); ++i)
      if (trace(c, p.relator_word(i)) != c) return fail("relator not closed at coset " + std::to_string(c));
  for (const Word& w : subgroup_words)
    if (trace(1, remap(w, p.alphabet())) != 1) return fail("subgroup word does not fix coset 1");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 0;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    ++reached;
    for (int g = 0; g < ngens_; ++g)
      for (int s : {1, -1}) {
        int d = entry(c, g, s);
        if (!seen[static_cast<size_t>(d)]) {
          seen[static_cast<size_t>(d)] = true;
          stack.push_back(d);
        }
      }
  }
  if (reached != n) return fail("action not transitive");
  return true;
}

EnumerationResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                               int max_cosets, TcStrategy strategy, CosetTable* table_out) {
  if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  TcWorker worker(p, subgroup_words, max_cosets);
  if (!worker.run(strategy)) return {EnumerationResult::Kind::Exhausted, 0, max_cosets};
  EnumerationResult out{EnumerationResult::Kind::Index, worker.live_count(), 0};
  if (table_out) *table_out = worker.standardized();
  return out;
}

}  // namespace genus2
