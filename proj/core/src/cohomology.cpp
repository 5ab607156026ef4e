#include "minorbit/cohomology.hpp"

#include <future>
#include <stdexcept>

#include "minorbit/linalg.hpp"

namespace minorbit {

bool RingElement::is_zero() const {
  if (!c0.is_zero()) return false;
  for (const Poly& p : c)
    if (!p.is_zero()) return false;
  return true;
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement r = *this;
  r.c0 += o.c0;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement r = *this;
  r.c0 -= o.c0;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

RingElement RingElement::scaled(const Poly& p) const {
  RingElement r;
  r.c0 = c0 * p;
  r.c.reserve(c.size());
  for (const Poly& q : c) r.c.push_back(q * p);
  return r;
}

RingElement ring_element_zero(int n, const Vars& vars) {
  RingElement r;
  r.c0 = Poly::zero(vars);
  r.c.assign(n, Poly::zero(vars));
  return r;
}

const RingElement& MultiplicationTable::entry(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = entries.find({i, j});
  if (it == entries.end()) throw std::out_of_range("table entry missing");
  return it->second;
}

void MultiplicationTable::set(int i, int j, RingElement e) {
  if (i > j) std::swap(i, j);
  entries[{i, j}] = std::move(e);
}

RingElement table_mul(const MultiplicationTable& t, const RingElement& a,
                      const RingElement& b) {
  RingElement out = ring_element_zero(t.n, t.vars);
  out = out + b.scaled(a.c0);
  for (int i = 0; i < t.n; ++i) {
    if (a.c[i].is_zero()) continue;
    out.c[i] += a.c[i] * b.c0;
    for (int j = 0; j < t.n; ++j) {
      if (b.c[j].is_zero()) continue;
      out = out + t.entry(i, j).scaled(a.c[i] * b.c[j]);
    }
  }
  return out;
}

bool table_commutative(const MultiplicationTable& t) {
  // symmetric by construction of the entry map; nothing else to check
  return static_cast<long>(t.entries.size()) ==
         static_cast<long>(t.n) * (t.n + 1) / 2;
}

bool table_associative(const MultiplicationTable& t) {
  auto basis = [&](int i) {
    RingElement e = ring_element_zero(t.n, t.vars);
    e.c[i] = Poly::constant(t.vars, Rat(1));
    return e;
  };
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k) {
        RingElement lhs = table_mul(t, t.entry(i, j), basis(k));
        RingElement rhs = table_mul(t, basis(i), t.entry(j, k));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

FixedPointData an_fixed_point_data(int n) {
  if (n < 1) throw std::invalid_argument("an_fixed_point_data: n >= 1");
  FixedPointData d;
  d.n = n;
  d.vars = make_vars({"t1", "t2"});
  auto t1 = Poly::variable(d.vars, 0);
  auto t2 = Poly::variable(d.vars, 1);
  for (int k = 0; k <= n; ++k) {
    Poly w1 = t1.scaled(frac(n + 1 - k)) - t2.scaled(frac(k));
    Poly w2 = t2.scaled(frac(k + 1)) - t1.scaled(frac(n - k));
    d.tangent_euler.push_back(w1 * w2);
  }
  d.restrictions.assign(n + 1, std::vector<Poly>(n, Poly::zero(d.vars)));
  for (int j = 1; j <= n; ++j) {
    d.restrictions[j - 1][j - 1] =
        t1.scaled(frac(n - j + 2)) - t2.scaled(frac(j - 1));
    d.restrictions[j][j - 1] = t2.scaled(frac(j + 1)) - t1.scaled(frac(n - j));
  }
  return d;
}

Poly restrict_class(const FixedPointData& d, const RingElement& a, int k) {
  Poly r = a.c0;
  for (int j = 0; j < d.n; ++j) r += a.c[j] * d.restrictions[k][j];
  return r;
}

RatFunc an_pairing(const FixedPointData& d, const RingElement& a,
                   const RingElement& b) {
  RatFunc sum = RatFunc::zero(d.vars);
  for (int k = 0; k <= d.n; ++k) {
    Poly num = restrict_class(d, a, k) * restrict_class(d, b, k);
    sum = sum + RatFunc(std::move(num), d.tangent_euler[k]);
  }
  return sum;
}

namespace {

RingElement solve_pair(const FixedPointData& d, int i, int j) {
  const int n = d.n;
  std::vector<std::vector<Poly>> m(n + 1, std::vector<Poly>(n + 1));
  std::vector<Poly> b(n + 1, Poly::zero(d.vars));
  for (int k = 0; k <= n; ++k) {
    m[k][0] = Poly::constant(d.vars, Rat(1));
    for (int l = 0; l < n; ++l) m[k][l + 1] = d.restrictions[k][l];
    b[k] = d.restrictions[k][i] * d.restrictions[k][j];
  }
  std::vector<Poly> x = solve_cramer_poly(m, b);  // throws if non-polynomial
  RingElement e;
  e.c0 = x[0];
  e.c.assign(x.begin() + 1, x.end());
  return e;
}

}  // namespace

MultiplicationTable an_cup_table(int n, int threads) {
  FixedPointData d = an_fixed_point_data(n);
  MultiplicationTable t;
  t.type = LieType::make(Family::A, n);
  t.n = n;
  t.vars = d.vars;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.push_back({i, j});
  std::vector<RingElement> results(pairs.size());
  if (threads <= 1) {
    for (size_t p = 0; p < pairs.size(); ++p)
      results[p] = solve_pair(d, pairs[p].first, pairs[p].second);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (int w = 0; w < threads; ++w)
      futs.push_back(std::async(std::launch::async, [&] {
        for (size_t p = next.fetch_add(1); p < pairs.size();
             p = next.fetch_add(1))
          results[p] = solve_pair(d, pairs[p].first, pairs[p].second);
      }));
    for (auto& f : futs) f.get();
  }
  for (size_t p = 0; p < pairs.size(); ++p)
    t.set(pairs[p].first, pairs[p].second, std::move(results[p]));
  return t;
}

MultiplicationTable an_closed_form_table(int n) {
  MultiplicationTable t;
  t.type = LieType::make(Family::A, n);
  t.n = n;
  t.vars = make_vars({"t1", "t2"});
  auto t1 = Poly::variable(t.vars, 0);
  auto t2 = Poly::variable(t.vars, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      RingElement e = ring_element_zero(n, t.vars);
      if (i == j) {
        for (int m = 1; m < j; ++m) e.c[m - 1] = t2.scaled(frac(2 * m));
        e.c[j - 1] = t1.scaled(frac(n + 2 - j)) + t2.scaled(frac(j + 1));
        for (int m = j + 1; m <= n; ++m)
          e.c[m - 1] = t1.scaled(frac(2 * (n + 1 - m)));
        e.c0 = (t1 * t2).scaled(frac(-2 * (n + 1)));
      } else if (j == i + 1) {
        for (int m = 1; m <= i; ++m) e.c[m - 1] = t2.scaled(frac(-m));
        for (int m = i + 1; m <= n; ++m)
          e.c[m - 1] = t1.scaled(frac(-(n + 1 - m)));
        e.c0 = (t1 * t2).scaled(frac(n + 1));
      }
      t.set(i - 1, j - 1, std::move(e));
    }
  }
  return t;
}

MultiplicationTable bg_cup_table(const RootSystem& rs, long gamma_order) {
  const int n = rs.rank();
  MultiplicationTable t;
  t.type = rs.type();
  t.n = n;
  t.vars = make_vars({"t"});
  Poly tv = Poly::variable(t.vars, 0);
  Poly t2 = tv * tv;
  for (int i = 0; i < n; ++i) {
    Weight ei = rs.simple_root(i);
    for (int j = i; j < n; ++j) {
      Weight ej = rs.simple_root(j);
      RingElement e = ring_element_zero(n, t.vars);
      e.c0 = t2.scaled(frac(-gamma_order * rs.inner(ei, ej)));
      for (const Weight& a : rs.positive_roots()) {
        long coeff = rs.inner(ei, a) * rs.inner(ej, a);
        if (coeff == 0) continue;
        for (int l = 0; l < n; ++l)
          if (a[l] != 0) e.c[l] += tv.scaled(frac(coeff * a[l]));
      }
      t.set(i, j, std::move(e));
    }
  }
  return t;
}

long group_order(LieType t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::D: return 4L * (t.rank - 2);
    case Family::E: return t.rank == 6 ? 24 : t.rank == 7 ? 48 : 120;
  }
  return 0;
}

}  // namespace minorbit
