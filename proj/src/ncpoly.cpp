#include "legsat/ncpoly.hpp"

#include <optional>
#include <sstream>

namespace legsat {

void NcPoly::normalize_term(long long& c, int& tpow) const {
  switch (ring_) {
    case Ring::ZT:
      break;
    case Ring::Z2T:
      c = ((c % 2) + 2) % 2;
      break;
    case Ring::Z2:
      c = ((c % 2) + 2) % 2;
      tpow = 0;
      break;
  }
}

void NcPoly::add_term(long long c, int tpow, const Word& w) {
  normalize_term(c, tpow);
  if (c == 0) return;
  TermKey key{tpow, w};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  long long nc = it->second + c;
  int nt = tpow;
  normalize_term(nc, nt);
  if (nc == 0)
    terms_.erase(it);
  else
    it->second = nc;
}

NcPoly NcPoly::constant(Ring r, long long c, int tpow) {
  NcPoly p(r);
  p.add_term(c, tpow, {});
  return p;
}

NcPoly NcPoly::gen(Ring r, int id) {
  NcPoly p(r);
  p.add_term(1, 0, {id});
  return p;
}

NcPoly NcPoly::word(Ring r, long long c, int tpow, Word w) {
  NcPoly p(r);
  p.add_term(c, tpow, w);
  return p;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k.tpow, k.word);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(-c, k.tpow, k.word);
  return *this;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r = *this;
  r += o;
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly r = *this;
  r -= o;
  return r;
}

NcPoly NcPoly::operator-() const {
  NcPoly r(ring_);
  for (const auto& [k, c] : terms_) r.add_term(-c, k.tpow, k.word);
  return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  NcPoly r(ring_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      Word w = ka.word;
      w.insert(w.end(), kb.word.begin(), kb.word.end());
      r.add_term(ca * cb, ka.tpow + kb.tpow, w);
    }
  return r;
}

NcPoly NcPoly::times_t(int k) const {
  NcPoly r(ring_);
  for (const auto& [key, c] : terms_) r.add_term(c, key.tpow + k, key.word);
  return r;
}

NcPoly NcPoly::scaled(long long s) const {
  NcPoly r(ring_);
  for (const auto& [key, c] : terms_) r.add_term(c * s, key.tpow, key.word);
  return r;
}

bool NcPoly::mentions(int id) const {
  for (const auto& [key, c] : terms_) {
    (void)c;
    for (int g : key.word)
      if (g == id) return true;
  }
  return false;
}

NcPoly NcPoly::subst(int id, const NcPoly& p) const {
  NcPoly out(ring_);
  for (const auto& [key, c] : terms_) {
    NcPoly acc = NcPoly::constant(ring_, c, key.tpow);
    for (int g : key.word) {
      if (g == id)
        acc = acc * p;
      else
        acc = acc * NcPoly::gen(ring_, g);
    }
    out += acc;
  }
  return out;
}

std::optional<NcPoly::UnitGen> NcPoly::as_unit_times_gen() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, c] = *terms_.begin();
  if (key.word.size() != 1) return std::nullopt;
  if (c != 1 && c != -1) return std::nullopt;
  return UnitGen{c, key.tpow, key.word[0]};
}

NcPoly NcPoly::to_ring(Ring r) const {
  NcPoly out(r);
  for (const auto& [key, c] : terms_) out.add_term(c, key.tpow, key.word);
  return out;
}

std::string NcPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    long long coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool printed = false;
    if (coeff != 1 || (key.tpow == 0 && key.word.empty())) {
      out << coeff;
      printed = true;
    }
    if (key.tpow != 0) {
      if (printed) out << " ";
      if (key.tpow == 1)
        out << "t";
      else
        out << "t^" << key.tpow;
      printed = true;
    }
    for (int g : key.word) {
      if (printed) out << " ";
      out << names.at(g);
      printed = true;
    }
  }
  return out.str();
}

}  // namespace legsat
