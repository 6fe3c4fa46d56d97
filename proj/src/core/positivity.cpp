#include "positivity.hpp"

#include <cassert>

namespace fanmat::la {

namespace {

// one inequality a*c >= b, carrying its multipliers over the original system
struct Constraint {
  std::vector<Rat> a;
  Rat b;
  std::vector<Rat> lambda;
};

// scale by the positive rational that makes entries integer and coprime
void normalize(Constraint& c) {
  Int l = 1;
  for (const Rat& x : c.a) l = lcm(l, x.get_den());
  l = lcm(l, c.b.get_den());
  for (const Rat& x : c.lambda) l = lcm(l, x.get_den());
  Int g = 0;
  auto fold = [&](const Rat& x) { g = gcd(g, Int(x.get_num() * (l / x.get_den()))); };
  for (const Rat& x : c.a) fold(x);
  fold(c.b);
  for (const Rat& x : c.lambda) fold(x);
  if (g == 0) return;
  Rat f(l, g);
  f.canonicalize();
  if (f == 1) return;
  for (Rat& x : c.a) x *= f;
  c.b *= f;
  for (Rat& x : c.lambda) x *= f;
}

Constraint combine(const Constraint& p, const Constraint& n, std::size_t var) {
  Rat alpha = p.a[var], beta = -n.a[var];  // both positive
  Constraint c;
  c.a.resize(p.a.size());
  for (std::size_t k = 0; k < p.a.size(); ++k) c.a[k] = beta * p.a[k] + alpha * n.a[k];
  c.a[var] = 0;
  c.b = beta * p.b + alpha * n.b;
  c.lambda.resize(p.lambda.size());
  for (std::size_t k = 0; k < p.lambda.size(); ++k)
    c.lambda[k] = beta * p.lambda[k] + alpha * n.lambda[k];
  normalize(c);
  return c;
}

}  // namespace

PositivityDecision strictly_positive_in_rowspace(const IntMatrix& A) {
  const std::size_t r = A.rows(), m = A.cols();
  PositivityDecision dec;

  std::vector<Constraint> cur(m);
  for (std::size_t j = 0; j < m; ++j) {
    cur[j].a.resize(r);
    for (std::size_t i = 0; i < r; ++i) cur[j].a[i] = Rat(A(i, j));
    cur[j].b = 1;
    cur[j].lambda.assign(m, Rat(0));
    cur[j].lambda[j] = 1;
  }

  // levels[i] keeps the pre-elimination bounds on variable i for back-substitution
  struct Level {
    std::vector<Constraint> pos, neg;
  };
  std::vector<Level> levels(r);

  for (std::size_t var = 0; var < r; ++var) {
    std::vector<Constraint> zero;
    for (Constraint& c : cur) {
      if (c.a[var] > 0)
        levels[var].pos.push_back(std::move(c));
      else if (c.a[var] < 0)
        levels[var].neg.push_back(std::move(c));
      else
        zero.push_back(std::move(c));
    }
    cur = std::move(zero);
    for (const Constraint& p : levels[var].pos)
      for (const Constraint& n : levels[var].neg) cur.push_back(combine(p, n, var));
  }

  for (const Constraint& c : cur) {
    if (c.b > 0) {
      dec.feasible = false;
      dec.refutation = c.lambda;
      return dec;
    }
  }

  dec.feasible = true;
  std::vector<Rat> sol(r, Rat(0));
  for (std::size_t vi = r; vi-- > 0;) {
    const Level& lv = levels[vi];
    auto rest = [&](const Constraint& c) {
      Rat s = c.b;
      for (std::size_t k = vi + 1; k < r; ++k) s -= c.a[k] * sol[k];
      return s;  // c.a[vi] * x >= s
    };
    bool have = false;
    Rat val;
    if (!lv.pos.empty()) {
      for (const Constraint& c : lv.pos) {
        Rat bound = rest(c) / c.a[vi];
        if (!have || bound > val) {
          val = bound;
          have = true;
        }
      }
    } else if (!lv.neg.empty()) {
      for (const Constraint& c : lv.neg) {
        Rat bound = rest(c) / c.a[vi];  // negative divisor flips to an upper bound
        if (!have || bound < val) {
          val = bound;
          have = true;
        }
      }
    }
    sol[vi] = have ? val : Rat(0);
  }

  Int den = 1;
  for (const Rat& x : sol) den = lcm(den, x.get_den());
  dec.coefficients.resize(r);
  for (std::size_t i = 0; i < r; ++i) dec.coefficients[i] = Int(sol[i].get_num() * (den / sol[i].get_den()));
  dec.witness.assign(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < r; ++i) dec.witness[j] += dec.coefficients[i] * A(i, j);
    assert(dec.witness[j] >= den && den >= 1);
  }
  return dec;
}

}  // namespace fanmat::la
