#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Free noncommutative Laurent-coefficient polynomials: finite sums of
// c * t^k * g_{i1} g_{i2} ... g_{im}.  t is central and invertible;
// generators do not commute.  Canonical form: terms sorted by
// (t-exponent, word length, word), like terms merged, zeros dropped.

namespace legsat {

enum class Ring : uint8_t {
  ZT,   // Z[t, t^-1]
  Z2T,  // Z/2[t, t^-1]
  Z2,   // Z/2, t = 1
};

using Word = std::vector<int>;

struct TermKey {
  int tpow = 0;
  Word word;
  bool operator==(const TermKey&) const = default;
  bool operator<(const TermKey& o) const {
    if (tpow != o.tpow) return tpow < o.tpow;
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    return word < o.word;
  }
};

class NcPoly {
 public:
  using Terms = std::map<TermKey, long long>;

  explicit NcPoly(Ring ring = Ring::ZT) : ring_(ring) {}

  static NcPoly zero(Ring r) { return NcPoly(r); }
  static NcPoly constant(Ring r, long long c, int tpow = 0);
  static NcPoly gen(Ring r, int id);
  static NcPoly word(Ring r, long long c, int tpow, Word w);

  Ring ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;
  NcPoly operator-() const;
  bool operator==(const NcPoly& o) const {
    return ring_ == ring_ && terms_ == o.terms_;
  }

  NcPoly times_t(int k) const;          // multiply by t^k
  NcPoly scaled(long long c) const;

  // replaces every occurrence of generator id by p (noncommutative expansion)
  NcPoly subst(int id, const NcPoly& p) const;

  bool mentions(int id) const;

  // single-generator polynomials +-t^k g decompose as (coeff, tpow, id)
  struct UnitGen {
    long long coeff;
    int tpow;
    int id;
  };
  std::optional<UnitGen> as_unit_times_gen() const;

  NcPoly to_ring(Ring r) const;  // e.g. mod-2 reduction, t = 1 collapse

  std::string str(const std::vector<std::string>& names) const;

  void add_term(long long c, int tpow, const Word& w);

 private:
  void normalize_term(long long& c, int& tpow) const;
  Ring ring_;
  Terms terms_;
};

}  // namespace legsat
