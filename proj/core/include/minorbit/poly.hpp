#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorbit/rational.hpp"

namespace minorbit {

/// Ordered set of variable names. Each polynomial ring instance fixes its
/// universe up front; mixing universes in arithmetic is a hard error.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  int index_of(const std::string& v) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == v) return static_cast<int>(i);
    return -1;
  }
  bool operator==(const VarSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using Vars = std::shared_ptr<const VarSet>;

inline Vars make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

using Expo = std::vector<int>;

// Graded lexicographic: total degree first, then lex on exponents.
struct GradedLexLess {
  bool operator()(const Expo& a, const Expo& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial over Q with a fixed variable universe.
/// Terms are kept in canonical graded-lex order; zero coefficients are never
/// stored, so equality is representation equality.
class Poly {
 public:
  using TermMap = std::map<Expo, Rat, GradedLexLess>;

  Poly() : vars_(make_vars({})) {}
  explicit Poly(Vars vars) : vars_(std::move(vars)) {}

  static Poly zero(Vars vars) { return Poly(std::move(vars)); }
  static Poly constant(Vars vars, const Rat& c);
  static Poly variable(Vars vars, int index, int exp = 1, const Rat& c = Rat(1));
  static Poly variable(Vars vars, const std::string& name, int exp = 1,
                       const Rat& c = Rat(1));

  const Vars& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  long total_degree() const;   // -1 for zero

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const {
    return *vars_ == *o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Rat& c) const;
  Poly pow(int k) const;

  void add_term(const Expo& e, const Rat& c);

  /// Ring homomorphism: image[i] is the image of variable i; all images must
  /// live in one common target ring.
  Poly substitute(const std::vector<Poly>& images) const;

  /// Leading term under graded-lex.
  const std::pair<const Expo, Rat>& leading() const;

  /// Canonical text rendering: graded-lex descending, signs folded into
  /// coefficients. Stable across runs; used by the CLI and JSON output.
  std::string str() const;

  /// Exact division; nullopt when the divisor does not divide exactly.
  std::optional<Poly> exact_div(const Poly& d) const;

  /// Primitive gcd, normalized so the graded-lex leading coefficient is 1.
  static Poly gcd(const Poly& a, const Poly& b);

  /// Divides every coefficient so they become coprime integers with positive
  /// leading sign; returns the stripped factor.
  Rat strip_content();

  Poly monic() const;

 private:
  void check_same_ring(const Poly& o) const;
  Vars vars_;
  TermMap terms_;
};

/// Element of the fraction field of a Poly ring, stored fully reduced with a
/// monic denominator. Construction normalizes, so equal values have equal
/// representations.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.vars(), Rat(1))) {}
  RatFunc(Poly num, Poly den);

  static RatFunc zero(Vars vars) { return RatFunc(Poly::zero(vars)); }
  static RatFunc constant(Vars vars, const Rat& c) {
    return RatFunc(Poly::constant(std::move(vars), c));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace minorbit
