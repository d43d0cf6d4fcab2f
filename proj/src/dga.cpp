#include "legsat/dga.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace legsat {

int GradedDga::intern(const std::string& name, int degree) {
  if (ids.count(name)) throw DgaError("generator name collision: " + name);
  int id = (int)names.size();
  names.push_back(name);
  degrees.push_back(degree);
  ids[name] = id;
  diff.push_back(NcPoly::zero(ring));
  return id;
}

int GradedDga::id_of(const std::string& name) const {
  auto it = ids.find(name);
  if (it == ids.end()) throw DgaError("unknown generator: " + name);
  return it->second;
}

int GradedDga::word_degree(const Word& w) const {
  int d = 0;
  for (int g : w) d += degrees.at(g);
  return d;
}

std::optional<int> GradedDga::poly_degree(const NcPoly& p) const {
  std::optional<int> deg;
  for (const auto& [key, c] : p.terms()) {
    (void)c;
    int d = word_degree(key.word);
    if (!deg) {
      deg = d;
    } else if (!degrees_equal(*deg, d)) {
      return std::nullopt;
    }
  }
  return deg;
}

bool GradedDga::degrees_equal(int a, int b) const {
  if (grading_modulus == 0) return a == b;
  return ((a - b) % grading_modulus) == 0;
}

NcPoly GradedDga::derive(const NcPoly& p) const {
  NcPoly out(ring);
  for (const auto& [key, c] : p.terms()) {
    int sign = 1;
    for (size_t j = 0; j < key.word.size(); ++j) {
      int g = key.word[j];
      Word prefix(key.word.begin(), key.word.begin() + j);
      Word suffix(key.word.begin() + j + 1, key.word.end());
      NcPoly term = NcPoly::word(ring, c * sign, key.tpow, prefix);
      term = term * diff.at(g);
      term = term * NcPoly::word(ring, 1, 0, suffix);
      out += term;
      if (degrees.at(g) % 2 != 0) sign = -sign;
    }
  }
  return out;
}

bool GradedDga::d_squared_is_zero(std::string* witness) const {
  for (int g = 0; g < n_generators(); ++g) {
    NcPoly dd = derive(diff[g]);
    if (!dd.is_zero()) {
      if (witness)
        *witness = "d^2(" + names[g] + ") = " + dd.str(names);
      return false;
    }
  }
  return true;
}

bool GradedDga::d_lowers_degree_by_one(std::string* witness) const {
  for (int g = 0; g < n_generators(); ++g) {
    for (const auto& [key, c] : diff[g].terms()) {
      (void)c;
      if (!degrees_equal(word_degree(key.word), degrees[g] - 1)) {
        if (witness)
          *witness = "term of d(" + names[g] + ") has degree " +
                     std::to_string(word_degree(key.word)) + ", expected " +
                     std::to_string(degrees[g] - 1);
        return false;
      }
    }
  }
  return true;
}

GradedDga GradedDga::to_ring(Ring r) const {
  GradedDga out = *this;
  out.ring = r;
  for (auto& p : out.diff) p = p.to_ring(r);
  return out;
}

GradedDga elementary_automorphism(const GradedDga& A, int target, int unit_sign,
                                  int unit_tpow, const NcPoly& addend) {
  if (unit_sign != 1 && unit_sign != -1)
    throw DgaError("automorphism unit must be +-t^k");
  if (addend.mentions(target))
    throw DgaError("automorphism addend mentions the target generator");
  if (!addend.is_zero()) {
    auto deg = A.poly_degree(addend);
    if (!deg || !A.degrees_equal(*deg, A.degrees.at(target)))
      throw DgaError("automorphism addend degree mismatch");
  }
  // phi(g) = u g + p ; phi^-1(g) = u^-1 (g - p)
  NcPoly phi_g = NcPoly::gen(A.ring, target).times_t(unit_tpow).scaled(unit_sign) ;
  phi_g += addend;
  NcPoly phi_inv_g =
      (NcPoly::gen(A.ring, target) - addend).times_t(-unit_tpow).scaled(unit_sign);
  GradedDga out = A;
  for (int g = 0; g < A.n_generators(); ++g) {
    NcPoly dg = g == target ? A.derive(phi_g) : A.diff[g];
    out.diff[g] = dg.subst(target, phi_inv_g);
  }
  return out;
}

GradedDga stabilize_dga(const GradedDga& A, int degree, const std::string& e1,
                        const std::string& e2) {
  GradedDga out = A;
  int i1 = out.intern(e1, degree);
  int i2 = out.intern(e2, degree - 1);
  out.diff[i1] = NcPoly::gen(out.ring, i2);
  out.diff[i2] = NcPoly::zero(out.ring);
  return out;
}

GradedDga destabilize_dga(const GradedDga& A, int e1, int e2) {
  if (!(A.diff.at(e1) == NcPoly::gen(A.ring, e2)))
    throw DgaError("destabilization: d(" + A.names.at(e1) +
                   ") != " + A.names.at(e2) + " (got " +
                   A.diff.at(e1).str(A.names) + ")");
  if (!A.diff.at(e2).is_zero())
    throw DgaError("destabilization: d(" + A.names.at(e2) + ") != 0");
  for (int g = 0; g < A.n_generators(); ++g) {
    if (g == e1 || g == e2) continue;
    if (A.diff[g].mentions(e1) || A.diff[g].mentions(e2))
      throw DgaError("destabilization: " + A.names.at(g) +
                     " still mentions the pair: d = " + A.diff[g].str(A.names));
  }
  GradedDga out;
  out.ring = A.ring;
  out.grading_modulus = A.grading_modulus;
  std::vector<int> remap(A.n_generators(), -1);
  for (int g = 0; g < A.n_generators(); ++g) {
    if (g == e1 || g == e2) continue;
    remap[g] = out.intern(A.names[g], A.degrees[g]);
  }
  for (int g = 0; g < A.n_generators(); ++g) {
    if (remap[g] < 0) continue;
    NcPoly p(out.ring);
    for (const auto& [key, c] : A.diff[g].terms()) {
      Word w;
      for (int x : key.word) {
        assert(remap[x] >= 0);
        w.push_back(remap[x]);
      }
      p.add_term(c, key.tpow, w);
    }
    out.diff[remap[g]] = p;
  }
  return out;
}

namespace {

// signature used to prune the renaming search
std::string gen_signature(const GradedDga& A, int g) {
  std::ostringstream s;
  s << A.degrees[g] << "|";
  for (const auto& [key, c] : A.diff[g].terms())
    s << c << "," << key.tpow << "," << key.word.size() << ";";
  return s.str();
}

bool match_search(const GradedDga& A, const GradedDga& B, std::vector<int>& a2b,
                  std::vector<char>& used, int next) {
  int n = A.n_generators();
  if (next == n) {
    for (int g = 0; g < n; ++g) {
      NcPoly mapped(B.ring);
      for (const auto& [key, c] : A.diff[g].terms()) {
        Word w;
        for (int x : key.word) w.push_back(a2b[x]);
        mapped.add_term(c, key.tpow, w);
      }
      if (!(mapped == B.diff[a2b[g]])) return false;
    }
    return true;
  }
  std::string sig = gen_signature(A, next);
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (!A.degrees_equal(A.degrees[next], B.degrees[cand])) continue;
    if (A.grading_modulus == 0 && A.degrees[next] != B.degrees[cand]) continue;
    if (gen_signature(B, cand) != sig) continue;
    a2b[next] = cand;
    used[cand] = 1;
    if (match_search(A, B, a2b, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::map<std::string, std::string>> dga_equal_upto_renaming(
    const GradedDga& A, const GradedDga& B) {
  if (A.n_generators() != B.n_generators()) return std::nullopt;
  if (A.ring != B.ring) return std::nullopt;
  std::vector<int> a2b(A.n_generators(), -1);
  std::vector<char> used(A.n_generators(), 0);
  if (!match_search(A, B, a2b, used, 0)) return std::nullopt;
  std::map<std::string, std::string> out;
  for (int g = 0; g < A.n_generators(); ++g) out[A.names[g]] = B.names[a2b[g]];
  return out;
}

std::vector<Augmentation> augmentations(const GradedDga& A, int max_degree_zero) {
  std::vector<int> zero_gens;
  for (int g = 0; g < A.n_generators(); ++g)
    if (A.degrees_equal(A.degrees[g], 0)) zero_gens.push_back(g);
  if ((int)zero_gens.size() > max_degree_zero)
    throw DgaError("augmentation search refused: " +
                   std::to_string(zero_gens.size()) + " degree-0 generators");
  std::vector<Augmentation> out;
  for (uint64_t mask = 0; mask < (1ull << zero_gens.size()); ++mask) {
    std::vector<int> value(A.n_generators(), 0);
    for (size_t i = 0; i < zero_gens.size(); ++i)
      value[zero_gens[i]] = (mask >> i) & 1;
    bool ok = true;
    for (int g = 0; g < A.n_generators() && ok; ++g) {
      // evaluate eps(d g) over Z/2 with eps(t) = 1
      int acc = 0;
      for (const auto& [key, c] : A.diff[g].terms()) {
        int prod = ((c % 2) + 2) % 2;
        for (int x : key.word) prod *= value[x];
        acc ^= prod & 1;
      }
      if (acc) ok = false;
    }
    if (ok) {
      Augmentation eps;
      for (int z : zero_gens) eps.values[z] = value[z];
      out.push_back(eps);
    }
  }
  return out;
}

namespace {

// GF(2) rank
int gf2_rank(std::vector<std::vector<char>> m) {
  int rank = 0;
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && !m[pivot][c]) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c])
        for (size_t j = c; j < cols; ++j) m[i][j] ^= m[r][j];
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

std::map<int, int> poincare_polynomial(const GradedDga& A, const Augmentation& eps) {
  // verify eps
  {
    auto all = [&](int g) {
      auto it = eps.values.find(g);
      return it == eps.values.end() ? 0 : it->second;
    };
    for (int g = 0; g < A.n_generators(); ++g) {
      int acc = 0;
      for (const auto& [key, c] : A.diff[g].terms()) {
        int prod = ((c % 2) + 2) % 2;
        for (int x : key.word) prod *= all(x);
        acc ^= prod & 1;
      }
      if (acc) throw DgaError("invalid augmentation");
    }
  }
  auto norm_deg = [&](int d) {
    if (A.grading_modulus == 0) return d;
    int m = A.grading_modulus;
    return ((d % m) + m) % m;
  };
  // linearized differential over Z/2: keep words of length 1 after
  // substituting g -> g + eps(g)
  int n = A.n_generators();
  std::vector<std::map<int, int>> lin(n);  // g -> (target -> coeff mod 2)
  for (int g = 0; g < n; ++g) {
    for (const auto& [key, c] : A.diff[g].terms()) {
      int base = ((c % 2) + 2) % 2;
      if (base == 0) continue;
      for (size_t j = 0; j < key.word.size(); ++j) {
        int prod = base;
        for (size_t i = 0; i < key.word.size(); ++i) {
          if (i == j) continue;
          auto it = eps.values.find(key.word[i]);
          prod *= it == eps.values.end() ? 0 : it->second;
        }
        if (prod & 1) lin[g][key.word[j]] ^= 1;
      }
    }
  }
  // group generators by degree
  std::map<int, std::vector<int>> by_deg;
  for (int g = 0; g < n; ++g) by_deg[norm_deg(A.degrees[g])].push_back(g);
  std::map<int, int> result;
  for (const auto& [d, gens] : by_deg) {
    // d_d : C_d -> C_{d-1}; rank/nullity over GF(2)
    auto rows_for = [&](int dd) -> const std::vector<int>* {
      auto it = by_deg.find(norm_deg(dd));
      return it == by_deg.end() ? nullptr : &it->second;
    };
    const std::vector<int>* below = rows_for(d - 1);
    const std::vector<int>* above = rows_for(d + 1);
    if (A.grading_modulus == 0) {
      below = by_deg.count(d - 1) ? &by_deg.at(d - 1) : nullptr;
      above = by_deg.count(d + 1) ? &by_deg.at(d + 1) : nullptr;
    }
    auto matrix = [&](const std::vector<int>& from,
                      const std::vector<int>& to) {
      std::vector<std::vector<char>> m(from.size(),
                                       std::vector<char>(to.size(), 0));
      for (size_t i = 0; i < from.size(); ++i)
        for (size_t j = 0; j < to.size(); ++j) {
          auto it = lin[from[i]].find(to[j]);
          m[i][j] = it != lin[from[i]].end() && (it->second & 1);
        }
      return m;
    };
    int rank_out = 0, rank_in = 0;
    if (below) rank_out = gf2_rank(matrix(gens, *below));
    if (above) rank_in = gf2_rank(matrix(*above, gens));
    int dim = (int)gens.size() - rank_out - rank_in;
    if (dim != 0) result[d] = dim;
  }
  return result;
}

std::string poincare_string(const std::map<int, int>& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [d, c] : p) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << c << " ";
    out << "L^" << d;
  }
  return out.str();
}

CharPresentation characteristic_algebra(const GradedDga& A) {
  CharPresentation pres;
  pres.dga = &A;
  std::vector<char> alive(A.n_generators(), 1);
  std::vector<NcPoly> rels;
  for (int g = 0; g < A.n_generators(); ++g)
    if (!A.diff[g].is_zero()) rels.push_back(A.diff[g]);
  // normalization: a relation of the form unit*g + rest with g not in rest
  // eliminates g
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < rels.size() && !changed; ++i) {
      for (const auto& [key, c] : rels[i].terms()) {
        if (key.word.size() != 1) continue;
        if (c != 1 && c != -1) continue;
        int g = key.word[0];
        if (!alive[g]) continue;
        NcPoly rest = rels[i] - NcPoly::word(A.ring, c, key.tpow, key.word);
        if (rest.mentions(g)) continue;
        // g = -(c t^k)^-1 rest
        NcPoly repl = rest.scaled(-c).times_t(-key.tpow);
        alive[g] = 0;
        std::vector<NcPoly> next;
        for (size_t j = 0; j < rels.size(); ++j) {
          if (j == i) continue;
          NcPoly s = rels[j].subst(g, repl);
          if (!s.is_zero()) next.push_back(s);
        }
        rels = std::move(next);
        changed = true;
        break;
      }
    }
  }
  for (int g = 0; g < A.n_generators(); ++g)
    if (alive[g]) pres.generators.push_back(A.names[g]);
  for (const auto& r : rels) {
    pres.relations.push_back(r);
    if (r.terms().size() == 1 && r.terms().begin()->first.word.empty())
      pres.unit_relation = true;
  }
  return pres;
}

// ---------------- DSL ----------------

namespace {

struct Tokenizer {
  std::vector<std::string> toks;
  explicit Tokenizer(const std::string& s) {
    std::string cur;
    auto flush = [&]() {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
    };
    for (size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (isspace((unsigned char)c) || c == '*') {
        flush();
      } else if (c == '+' || c == '(' || c == ')') {
        flush();
        toks.push_back(std::string(1, c));
      } else if (c == '-') {
        // '-' may begin a negative exponent after '^'
        if (!cur.empty() && cur.back() == '^') {
          cur += c;
        } else {
          flush();
          toks.push_back("-");
        }
      } else {
        cur += c;
      }
    }
    flush();
  }
};

}  // namespace

NcPoly parse_poly(const GradedDga& A, const std::string& text,
                  const std::map<std::string, NcPoly>* lets) {
  Tokenizer tz(text);
  const auto& toks = tz.toks;
  size_t pos = 0;

  // grammar: poly := term (('+'|'-') term)* ; term := factor+
  // factor := integer | t | t^K | name | '(' poly ')'
  std::function<NcPoly()> parse_sum;
  std::function<NcPoly()> parse_term = [&]() -> NcPoly {
    NcPoly acc = NcPoly::constant(A.ring, 1);
    bool any = false;
    while (pos < toks.size()) {
      const std::string& t = toks[pos];
      if (t == "+" || t == "-" || t == ")") break;
      if (t == "(") {
        ++pos;
        NcPoly inner = parse_sum();
        if (pos >= toks.size() || toks[pos] != ")")
          throw DgaError("expected ')' in polynomial");
        ++pos;
        acc = acc * inner;
        any = true;
        continue;
      }
      ++pos;
      any = true;
      if (t == "t") {
        acc = acc.times_t(1);
      } else if (t.rfind("t^", 0) == 0) {
        acc = acc.times_t(std::stoi(t.substr(2)));
      } else if (isdigit((unsigned char)t[0]) ||
                 (t[0] == '-' && t.size() > 1 && isdigit((unsigned char)t[1]))) {
        acc = acc.scaled(std::stoll(t));
      } else {
        if (lets) {
          auto it = lets->find(t);
          if (it != lets->end()) {
            acc = acc * it->second;
            continue;
          }
        }
        acc = acc * NcPoly::gen(A.ring, A.id_of(t));
      }
    }
    if (!any) throw DgaError("empty term in polynomial: " + text);
    return acc;
  };
  parse_sum = [&]() -> NcPoly {
    NcPoly total = NcPoly::zero(A.ring);
    int sign = 1;
    bool expect_term = true;
    while (pos < toks.size() && toks[pos] != ")") {
      if (toks[pos] == "+") {
        ++pos;
        continue;
      }
      if (toks[pos] == "-") {
        sign = -sign;
        ++pos;
        continue;
      }
      NcPoly term = parse_term();
      total += sign < 0 ? -term : term;
      sign = 1;
      expect_term = false;
    }
    (void)expect_term;
    return total;
  };
  NcPoly out = parse_sum();
  if (pos != toks.size()) throw DgaError("trailing tokens in polynomial: " + text);
  return out;
}

GradedDga parse_dga(const std::string& text) {
  GradedDga A;
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> pending_diffs;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "ring") {
      std::string r;
      ls >> r;
      if (r == "zt")
        A.ring = Ring::ZT;
      else if (r == "z2t")
        A.ring = Ring::Z2T;
      else if (r == "z2")
        A.ring = Ring::Z2;
      else
        throw DgaError("unknown ring: " + r);
    } else if (tok == "modulus") {
      ls >> A.grading_modulus;
    } else if (tok == "gen") {
      std::string name;
      int deg;
      if (!(ls >> name >> deg)) throw DgaError("bad gen line");
      A.intern(name, deg);
    } else if (tok == "d") {
      std::string name, eq;
      if (!(ls >> name >> eq) || eq != "=") throw DgaError("bad d line");
      std::string rest;
      std::getline(ls, rest);
      pending_diffs.push_back({name, rest});
    } else {
      throw DgaError("unknown DGA directive: " + tok);
    }
  }
  for (auto& [name, poly] : pending_diffs)
    A.set_d(A.id_of(name), parse_poly(A, poly));
  return A;
}

std::string serialize_dga(const GradedDga& A) {
  std::ostringstream out;
  out << "ring " << (A.ring == Ring::ZT ? "zt" : A.ring == Ring::Z2T ? "z2t" : "z2")
      << "\n";
  if (A.grading_modulus) out << "modulus " << A.grading_modulus << "\n";
  for (int g = 0; g < A.n_generators(); ++g)
    out << "gen " << A.names[g] << " " << A.degrees[g] << "\n";
  for (int g = 0; g < A.n_generators(); ++g)
    if (!A.diff[g].is_zero())
      out << "d " << A.names[g] << " = " << A.diff[g].str(A.names) << "\n";
  return out.str();
}

}  // namespace legsat
