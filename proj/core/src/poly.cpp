#include "minorbit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace minorbit {

Poly Poly::constant(Vars vars, const Rat& c) {
  Poly p(std::move(vars));
  if (!minorbit::is_zero(c)) p.terms_[Expo(p.vars_->size(), 0)] = c;
  return p;
}

Poly Poly::variable(Vars vars, int index, int exp, const Rat& c) {
  Poly p(std::move(vars));
  if (index < 0 || index >= static_cast<int>(p.vars_->size()))
    throw std::invalid_argument("Poly::variable: index out of range");
  if (!minorbit::is_zero(c)) {
    Expo e(p.vars_->size(), 0);
    e[index] = exp;
    p.terms_[e] = c;
  }
  return p;
}

Poly Poly::variable(Vars vars, const std::string& name, int exp, const Rat& c) {
  int idx = vars->index_of(name);
  if (idx < 0) throw std::invalid_argument("Poly::variable: unknown variable " + name);
  return variable(std::move(vars), idx, exp, c);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expo& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("Poly::constant_value on non-constant");
  return terms_.begin()->second;
}

long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const Expo& e = terms_.rbegin()->first;
  long d = 0;
  for (int x : e) d += x;
  return d;
}

void Poly::check_same_ring(const Poly& o) const {
  if (!(*vars_ == *o.vars_))
    throw std::invalid_argument("Poly: mixed variable universes");
}

void Poly::add_term(const Expo& e, const Rat& c) {
  if (minorbit::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (minorbit::is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_ring(o);
  Poly r(vars_);
  const size_t nv = vars_->size();
  Expo e(nv, 0);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (size_t i = 0; i < nv; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(vars_);
  if (minorbit::is_zero(c)) return r;
  for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
  return r;
}

Poly Poly::pow(int k) const {
  Poly r = Poly::constant(vars_, Rat(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != vars_->size())
    throw std::invalid_argument("Poly::substitute: image count mismatch");
  Vars target = images.empty() ? vars_ : images[0].vars();
  for (const auto& im : images)
    if (!(*im.vars() == *target))
      throw std::invalid_argument("Poly::substitute: images in mixed rings");
  // power tables per variable
  std::vector<std::vector<Poly>> pows(images.size());
  for (size_t i = 0; i < images.size(); ++i)
    pows[i].push_back(Poly::constant(target, Rat(1)));
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (size_t i = 0; i < images.size(); ++i) {
      while (static_cast<int>(pows[i].size()) <= e[i])
        pows[i].push_back(pows[i].back() * images[i]);
      if (e[i] > 0) term = term * pows[i][e[i]];
    }
    out += term;
  }
  return out;
}

const std::pair<const Expo, Rat>& Poly::leading() const {
  if (terms_.empty()) throw std::logic_error("Poly::leading on zero");
  return *terms_.rbegin();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rat ac = abs(c);
    std::string mono;
    for (size_t i = 0; i < vars_->size(); ++i) {
      int e = it->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_->name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

std::optional<Poly> Poly::exact_div(const Poly& d) const {
  check_same_ring(d);
  if (d.is_zero()) throw std::invalid_argument("Poly::exact_div by zero");
  Poly rem = *this;
  Poly q(vars_);
  const size_t nv = vars_->size();
  const auto& dl = d.leading();
  while (!rem.is_zero()) {
    const auto& rl = rem.leading();
    Expo qe(nv, 0);
    for (size_t i = 0; i < nv; ++i) {
      qe[i] = rl.first[i] - dl.first[i];
      if (qe[i] < 0) return std::nullopt;
    }
    Rat qc = rl.second / dl.second;
    Poly qt(vars_);
    qt.terms_[qe] = qc;
    q += qt;
    rem -= qt * d;
  }
  return q;
}

Rat Poly::strip_content() {
  if (terms_.empty()) return Rat(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_class n = abs(c.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat factor(num_gcd, den_lcm);
  factor.canonicalize();
  if (sgn(terms_.rbegin()->second) < 0) factor = -factor;
  Rat inv = 1 / factor;
  for (auto& [e, c] : terms_) c *= inv;
  return factor;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / leading().second);
}

namespace {

// Univariate view in one main variable, coefficients in the same ring with the
// main exponent zeroed out.
std::map<int, Poly> split_main(const Poly& p, int main_var) {
  std::map<int, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Expo r = e;
    int d = r[main_var];
    r[main_var] = 0;
    auto it = out.find(d);
    if (it == out.end()) {
      Poly q(p.vars());
      q.add_term(r, c);
      out.emplace(d, std::move(q));
    } else {
      it->second.add_term(r, c);
    }
  }
  return out;
}

Poly join_main(const std::map<int, Poly>& coeffs, Vars vars, int main_var) {
  Poly out(vars);
  for (const auto& [d, c] : coeffs) {
    out += c * Poly::variable(vars, main_var, d);
  }
  return out;
}

int main_degree(const std::map<int, Poly>& c) {
  return c.empty() ? -1 : c.rbegin()->first;
}

// pseudo-remainder of a by b in the main variable (both split views)
std::map<int, Poly> pseudo_rem(std::map<int, Poly> a, const std::map<int, Poly>& b,
                               Vars vars, int main_var) {
  int db = main_degree(b);
  const Poly& lb = b.rbegin()->second;
  while (main_degree(a) >= db && !a.empty()) {
    int da = main_degree(a);
    Poly la = a.rbegin()->second;
    // a = lb*a - la*x^(da-db)*b
    std::map<int, Poly> next;
    for (const auto& [d, c] : a) {
      Poly v = c * lb;
      if (!v.is_zero()) next[d] = std::move(v);
    }
    for (const auto& [d, c] : b) {
      int nd = d + da - db;
      Poly v = c * la;
      auto it = next.find(nd);
      if (it == next.end()) {
        if (!v.is_zero()) next[nd] = -v;
      } else {
        it->second -= v;
        if (it->second.is_zero()) next.erase(it);
      }
    }
    a = std::move(next);
  }
  return a;
}

int pick_main_var(const Poly& a, const Poly& b) {
  const size_t nv = a.vars()->size();
  for (int i = static_cast<int>(nv) - 1; i >= 0; --i) {
    for (const auto& [e, c] : a.terms())
      if (e[i] > 0) return i;
    for (const auto& [e, c] : b.terms())
      if (e[i] > 0) return i;
  }
  return -1;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  int mv = pick_main_var(a, b);
  if (mv < 0) return Poly::constant(a.vars(), Rat(1));

  auto sa = split_main(a, mv);
  auto sb = split_main(b, mv);

  // contents w.r.t. the main variable
  auto content = [&](const std::map<int, Poly>& s) {
    Poly g = Poly::zero(a.vars());
    for (const auto& [d, c] : s) g = Poly::gcd(g, c);
    return g;
  };
  Poly ca = content(sa), cb = content(sb);
  Poly cg = Poly::gcd(ca, cb);

  auto primitive = [&](std::map<int, Poly>& s, const Poly& cont) {
    for (auto& [d, c] : s) {
      auto q = c.exact_div(cont);
      if (!q) throw std::logic_error("gcd: content division failed");
      c = *q;
    }
  };
  // rational content must go as well or the PRS coefficients blow up
  auto strip_rational = [&](std::map<int, Poly>& s) {
    Poly joined = join_main(s, a.vars(), mv);
    joined.strip_content();
    s = split_main(joined, mv);
  };
  primitive(sa, ca);
  primitive(sb, cb);
  strip_rational(sa);
  strip_rational(sb);

  // primitive PRS
  if (main_degree(sa) < main_degree(sb)) std::swap(sa, sb);
  while (!sb.empty()) {
    auto r = pseudo_rem(sa, sb, a.vars(), mv);
    sa = std::move(sb);
    sb = std::move(r);
    if (!sb.empty()) {
      strip_rational(sb);
      Poly c = content(sb);
      primitive(sb, c);
    }
  }
  Poly gp = join_main(sa, a.vars(), mv);
  return (cg * gp).monic();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.vars(), Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_constant() || g.constant_value() != 1) {
    num_ = *num_.exact_div(g);
    den_ = *den_.exact_div(g);
  }
  Rat lead = den_.leading().second;
  if (lead != 1) {
    Rat inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace minorbit
