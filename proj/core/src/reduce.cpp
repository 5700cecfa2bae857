#include "flowcat/reduce.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowcat/chain.hpp"
#include "int_util.hpp"

namespace flowcat {

namespace {

using detail::centered_quotient;

Int smallest_prime_factor(const Int& d) {
  if (d % 2 == 0) return 2;
  for (Int p = 3; p * p <= d; p += 2)
    if (d % p == 0) return p;
  return d;
}

bool is_prime_power(const Int& d) {
  Int rest = d;
  Int p = smallest_prime_factor(rest);
  while (rest % p == 0) rest /= p;
  return rest == 1;
}

unsigned long to_count(const Int& k) {
  Int a = abs(k);
  if (a > 1000000)
    throw std::logic_error("reduction requested an implausibly large multiple: " +
                           a.get_str());
  return a.get_ui();
}

// Drives a category by emitted moves while mirroring its chain complex.
//
// Chain dictionary for a slide of x over y at grading q (both directions of
// one determinant-one basis change):
//   sigma=+ :  c_x += c_y   and   r_y -= r_x
//   sigma=- :  c_x -= c_y   and   r_y += r_x
// where c_* are columns of the step matrix at q and r_* rows of the step
// matrix at q+1.
//
// Safety of row operations at grading q against the step matrix at q (its
// columns): once that matrix is diagonal, d.d = 0 forces the column of any
// object whose row at q+1 is nonzero to vanish, so the column-side effect
// adds and targets zero columns only. Stages therefore sweep upward.
struct Reducer {
  FlowCategory cat;
  MoveLog log;
  ChainComplex cc;

  explicit Reducer(const FlowCategory& start) : cat(start) { refresh(); }

  void refresh() { cc = chain_complex(cat); }

  void apply(const Move& move) { cat = apply_logged(cat, move, log); }

  // Cancels the lexicographically first +/- pair of the first mixed-sign
  // moduli space until every 0-dimensional moduli space is single-signed.
  void purify() {
    for (;;) {
      std::string upper, lower, pos, neg;
      for (const auto& [key, m] : cat.zero_moduli()) {
        const SignedPoint* first_plus = nullptr;
        const SignedPoint* first_minus = nullptr;
        for (const SignedPoint& p : m.points) {
          if (p.sign > 0 && !first_plus) first_plus = &p;
          if (p.sign < 0 && !first_minus) first_minus = &p;
        }
        if (first_plus && first_minus) {
          upper = key.upper;
          lower = key.lower;
          pos = first_plus->id;
          neg = first_minus->id;
          break;
        }
      }
      if (pos.empty()) return;
      apply(WhitneyMove{upper, lower, pos, neg});
    }
  }

  void slide(const std::string& x, const std::string& y, int sigma) {
    apply(SlideMove{x, y, sigma});
    purify();
    refresh();
  }

  Int entry(int g, const std::string& row, const std::string& col) const {
    auto it = cc.step.find(g);
    if (it == cc.step.end()) return 0;
    const auto& rows = cc.basis.at(g - 1);
    const auto& cols = cc.basis.at(g);
    auto rit = std::lower_bound(rows.begin(), rows.end(), row);
    auto cit = std::lower_bound(cols.begin(), cols.end(), col);
    if (rit == rows.end() || *rit != row || cit == cols.end() || *cit != col)
      return 0;
    return it->second.at(static_cast<std::size_t>(rit - rows.begin()),
                         static_cast<std::size_t>(cit - cols.begin()));
  }

  // r_target += k * r_source, one slide per unit.
  void row_add(const std::string& target, const std::string& source, const Int& k) {
    const int sigma = k > 0 ? -1 : +1;
    for (unsigned long i = 0, n = to_count(k); i < n; ++i)
      slide(source, target, sigma);
  }

  // c_target += k * c_source, one slide per unit.
  void col_add(const std::string& target, const std::string& source, const Int& k) {
    const int sigma = k > 0 ? +1 : -1;
    for (unsigned long i = 0, n = to_count(k); i < n; ++i)
      slide(target, source, sigma);
  }

  // (r_P, r_Q) -> (r_Q, -r_P): three unit additions.
  void swap3_rows(const std::string& P, const std::string& Q) {
    row_add(P, Q, 1);
    row_add(Q, P, -1);
    row_add(P, Q, 1);
  }

  // (r_P, r_Q) -> (-r_P, -r_Q): the determinant-one sign flip.
  void rotate_rows(const std::string& P, const std::string& Q) {
    swap3_rows(P, Q);
    swap3_rows(P, Q);
  }

  void swap3_cols(const std::string& P, const std::string& Q) {
    col_add(P, Q, 1);
    col_add(Q, P, -1);
    col_add(P, Q, 1);
  }

  void rotate_cols(const std::string& P, const std::string& Q) {
    swap3_cols(P, Q);
    swap3_cols(P, Q);
  }

  bool column_below_is_zero(int g, const std::string& obj) const {
    auto it = cc.step.find(g);
    if (it == cc.step.end()) return true;
    for (const std::string& r : cc.basis.at(g - 1))
      if (entry(g, r, obj) != 0) return false;
    return true;
  }

  // Puts the step matrix at g into permuted-diagonal Smith form by slides.
  void snf_stage(int g) {
    if (!cc.step.count(g)) return;
    std::set<std::string> used_rows, used_cols;
    std::vector<std::pair<std::string, std::string>> pivots;  // (row, col)
    long guard = 0;
    auto bump = [&guard] {
      if (++guard > 200000)
        throw std::logic_error("snf_stage failed to converge");
    };

    for (;;) {
      // Pivot loop: pick the smallest-|value| entry outside finished rows and
      // columns (lexicographically first on ties) and clear around it.
      for (;;) {
        bump();
        const std::vector<std::string> rows = cc.basis.at(g - 1);
        const std::vector<std::string> cols = cc.basis.at(g);
        std::string pr, pc;
        Int best = 0;
        for (const std::string& r : rows) {
          if (used_rows.count(r)) continue;
          for (const std::string& c : cols) {
            if (used_cols.count(c)) continue;
            Int e = entry(g, r, c);
            if (e != 0 && (best == 0 || abs(e) < abs(best))) {
              pr = r;
              pc = c;
              best = e;
            }
          }
        }
        if (best == 0) break;

        bool clean = true;
        for (const std::string& r2 : rows) {
          if (r2 == pr || used_rows.count(r2)) continue;
          Int e = entry(g, r2, pc);
          if (e == 0) continue;
          Int q = centered_quotient(e, entry(g, pr, pc));
          if (q != 0) row_add(r2, pr, -q);
          if (entry(g, r2, pc) != 0) clean = false;  // smaller remainder left
        }
        for (const std::string& c2 : cols) {
          if (c2 == pc || used_cols.count(c2)) continue;
          Int e = entry(g, pr, c2);
          if (e == 0) continue;
          Int q = centered_quotient(e, entry(g, pr, pc));
          if (q != 0) col_add(c2, pc, -q);
          if (entry(g, pr, c2) != 0) clean = false;
        }
        if (clean) {
          used_rows.insert(pr);
          used_cols.insert(pc);
          pivots.emplace_back(pr, pc);
        }
      }

      // Divisibility chain over pivots sorted by |value|: fold the offending
      // pivot's column into the smaller one's and re-reduce the pair.
      auto sorted = pivots;
      std::sort(sorted.begin(), sorted.end(),
                [this, g](const auto& a, const auto& b) {
                  Int va = abs(entry(g, a.first, a.second));
                  Int vb = abs(entry(g, b.first, b.second));
                  if (va != vb) return va < vb;
                  return a.second < b.second;
                });
      bool folded = false;
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        Int di = abs(entry(g, sorted[i].first, sorted[i].second));
        Int dj = abs(entry(g, sorted[i + 1].first, sorted[i + 1].second));
        if (dj % di != 0) {
          col_add(sorted[i].second, sorted[i + 1].second, 1);
          for (std::size_t k : {i, i + 1}) {
            used_rows.erase(sorted[k].first);
            used_cols.erase(sorted[k].second);
            pivots.erase(std::find(pivots.begin(), pivots.end(), sorted[k]));
          }
          folded = true;
          break;
        }
      }
      if (!folded) break;
    }

    // Sign normalization by determinant-one rotations: negatives pair up; a
    // lone negative uses a spare zero column (A row rotation would disturb
    // the finished matrix below, a zero-column rotation only touches the
    // unprocessed one above), then a row that is zero in both neighbouring
    // matrices; otherwise it stays.
    std::vector<std::pair<std::string, std::string>> negs;
    for (const auto& p : pivots)
      if (entry(g, p.first, p.second) < 0) negs.push_back(p);
    std::sort(negs.begin(), negs.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::size_t i = 0;
    for (; i + 1 < negs.size(); i += 2) rotate_rows(negs[i].first, negs[i + 1].first);
    if (i < negs.size()) {
      const auto lone = negs[i];
      std::string spare_col;
      for (const std::string& c : cc.basis.at(g))
        if (!used_cols.count(c)) {
          spare_col = c;
          break;
        }
      if (!spare_col.empty()) {
        rotate_cols(lone.second, spare_col);
      } else {
        std::string spare_row;
        for (const std::string& r : cc.basis.at(g - 1))
          if (!used_rows.count(r) && column_below_is_zero(g - 1, r)) {
            spare_row = r;
            break;
          }
        if (!spare_row.empty()) rotate_rows(lone.first, spare_row);
        // else: accepted negative entry.
      }
    }
  }

  void run_snf_stages() {
    if (cc.empty()) return;
    for (int g = cc.min_grading + 1; g <= cc.max_grading; ++g) snf_stage(g);
  }

  // --- primary refinement -------------------------------------------------

  // Births a helper pair whose +1 sits in the same step matrix, flips the
  // negative pivot against it, and cancels the helper at its resulting -1.
  void fix_sign(int g, const std::string& r, const std::string& /*c*/) {
    std::string hu = cat.fresh_object_id("aux_u");
    std::string hl = cat.fresh_object_id("aux_l");
    apply(BirthMove{hu, hl, g - 1});
    refresh();
    rotate_rows(r, hl);
    apply(CancelMove{hu, hl});
    purify();
    refresh();
  }

  // Splits a composite positive pivot d = a*b (a the smallest prime-power
  // factor, gcd(a,b) = 1) into separate diagonal entries a and b using a
  // birthed helper pair: with s*a + t*b = 1,
  //   diag(d, 1) --[c1 += a*c2; r1 -= b*r2; c2 -= s*c1; r2 += t*r1]-->
  //   [[0, -b], [a, 0]] --row swap--> diag(a, b).
  void split(int g, const std::string& r, const std::string& c, const Int& d) {
    Int p = smallest_prime_factor(d);
    Int a = 1, rest = d;
    while (rest % p == 0) {
      a *= p;
      rest /= p;
    }
    Int b = d / a;
    Int gg, s, t;
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());

    std::string hu = cat.fresh_object_id("aux_u");
    std::string hl = cat.fresh_object_id("aux_l");
    apply(BirthMove{hu, hl, g - 1});
    refresh();
    col_add(c, hu, a);
    row_add(r, hl, -b);
    col_add(hu, c, -s);
    row_add(hl, r, t);
    swap3_rows(r, hl);
  }

  // One primary action on the step matrix at g; true if something was done.
  bool primary_step(int g) {
    if (!cc.step.count(g)) return false;
    const std::vector<std::string> cols = cc.basis.at(g);
    const std::vector<std::string> rows = cc.basis.at(g - 1);
    for (const std::string& c : cols) {
      for (const std::string& r : rows) {
        Int d = entry(g, r, c);
        if (d == 0) continue;
        if (d < 0) {
          fix_sign(g, r, c);
          return true;
        }
        if (d == 1) {
          apply(CancelMove{c, r});
          purify();
          refresh();
          return true;
        }
        if (!is_prime_power(d)) {
          split(g, r, c, d);
          return true;
        }
      }
    }
    return false;
  }

  void run_primary_stages() {
    if (cc.empty()) return;
    int g = cc.min_grading + 1;
    while (!cc.empty() && g <= cc.max_grading) {
      if (g < cc.min_grading + 1) g = cc.min_grading + 1;
      if (!primary_step(g)) ++g;
    }
  }
};

}  // namespace

ReduceResult purify_signs(const FlowCategory& cat) {
  Reducer R(cat);
  R.purify();
  return {std::move(R.cat), std::move(R.log)};
}

ReduceResult snf_reduce(const FlowCategory& cat) {
  Reducer R(cat);
  R.purify();
  R.refresh();
  R.run_snf_stages();
  return {std::move(R.cat), std::move(R.log)};
}

ReduceResult primary_snf_reduce(const FlowCategory& cat) {
  Reducer R(cat);
  R.purify();
  R.refresh();
  R.run_snf_stages();
  R.run_primary_stages();
  R.purify();
  return {std::move(R.cat), std::move(R.log)};
}

}  // namespace flowcat
