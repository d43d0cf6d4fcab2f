#include "legsat/script.hpp"

#include <sstream>

namespace legsat {

namespace {

struct UnitSpec {
  int sign = 1;
  int tpow = 0;
};

// accepts 1, -1, t, -t, t^k, -t^k
std::optional<UnitSpec> parse_unit(const std::string& s) {
  UnitSpec u;
  std::string body = s;
  if (!body.empty() && body[0] == '-') {
    u.sign = -1;
    body = body.substr(1);
  }
  if (body == "1") return u;
  if (body == "t") {
    u.tpow = 1;
    return u;
  }
  if (body.rfind("t^", 0) == 0) {
    u.tpow = std::stoi(body.substr(2));
    return u;
  }
  return std::nullopt;
}

}  // namespace

ScriptResult run_script(const GradedDga& A, const std::string& script,
                        const GradedDga* final_dga, bool stop_on_failure) {
  ScriptResult res;
  res.dga = A;
  // let-bindings are kept as text and re-parsed against the current DGA so
  // they survive (de)stabilization renumbering
  std::vector<std::pair<std::string, std::string>> let_defs;
  auto materialize_lets = [&]() {
    std::map<std::string, NcPoly> out;
    for (const auto& [n, t] : let_defs) out[n] = parse_poly(res.dga, t, &out);
    return out;
  };
  std::istringstream in(script);
  std::string line;
  int step = 0;

  auto fail = [&](const std::string& msg) {
    res.ok = false;
    res.failed_step = step;
    res.failure = msg;
    res.log.push_back("step " + std::to_string(step) + " FAILED: " + msg);
    if (stop_on_failure) throw ScriptError(msg, step);
  };

  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    ++step;
    if (!res.ok) break;

    if (tok == "let") {
      std::string name, eq, rest;
      if (!(ls >> name >> eq) || eq != "=")
        throw ScriptError("bad let syntax", step);
      std::getline(ls, rest);
      let_defs.push_back({name, rest});
      auto lets = materialize_lets();
      res.log.push_back("let " + name + " = " + lets[name].str(res.dga.names));
    } else if (tok == "assert") {
      std::string what;
      ls >> what;
      if (what == "d") {
        std::string name, eq, rest;
        if (!(ls >> name >> eq) || eq != "=")
          throw ScriptError("bad assert d syntax", step);
        std::getline(ls, rest);
        auto lets = materialize_lets();
        NcPoly subject = lets.count(name)
                             ? lets[name]
                             : NcPoly::gen(res.dga.ring, res.dga.id_of(name));
        NcPoly got = res.dga.derive(subject);
        NcPoly want = parse_poly(res.dga, rest, &lets);
        if (!(got == want)) {
          fail("assert d " + name + ": got " + got.str(res.dga.names) +
               ", want " + want.str(res.dga.names));
          continue;
        }
        res.log.push_back("assert d " + name + " = " + want.str(res.dga.names) +
                          "  ok");
      } else if (what == "equal") {
        std::string target;
        ls >> target;
        if (target != "final")
          throw ScriptError("assert equal expects 'final'", step);
        if (!final_dga) throw ScriptError("no final DGA supplied", step);
        auto match = dga_equal_upto_renaming(res.dga, *final_dga);
        if (!match) {
          fail("assert equal final: no degree-preserving renaming matches");
          continue;
        }
        std::ostringstream os;
        os << "assert equal final  ok (";
        int shown = 0;
        for (const auto& [a, b] : *match) {
          if (a != b && shown < 6) {
            os << a << "->" << b << " ";
            ++shown;
          }
        }
        os << ")";
        res.log.push_back(os.str());
      } else if (what == "d2zero") {
        std::string witness;
        if (!res.dga.d_squared_is_zero(&witness)) {
          fail("assert d2zero: " + witness);
          continue;
        }
        res.log.push_back("assert d2zero  ok");
      } else {
        throw ScriptError("unknown assert kind: " + what, step);
      }
    } else if (tok == "auto") {
      // auto g -> unit g + poly      (poly may be empty)
      std::string g, arrow;
      if (!(ls >> g >> arrow) || arrow != "->")
        throw ScriptError("bad auto syntax", step);
      std::string rest;
      std::getline(ls, rest);
      // split "unit g" prefix from "+ poly" tail
      std::istringstream rs(rest);
      std::string first, second;
      rs >> first;
      UnitSpec unit;
      std::string gen_tok;
      if (auto u = parse_unit(first)) {
        unit = *u;
        rs >> gen_tok;
      } else {
        gen_tok = first;
      }
      if (gen_tok != g)
        throw ScriptError("auto must map " + g + " to unit*" + g + " + poly",
                          step);
      std::string tail;
      std::getline(rs, tail);
      NcPoly addend = NcPoly::zero(res.dga.ring);
      // tail looks like "+ poly" or "- poly" or empty
      std::string trimmed;
      for (char c : tail)
        if (!isspace((unsigned char)c) || !trimmed.empty()) trimmed += c;
      while (!trimmed.empty() && isspace((unsigned char)trimmed.back()))
        trimmed.pop_back();
      auto lets = materialize_lets();
      if (!trimmed.empty()) addend = parse_poly(res.dga, trimmed, &lets);
      res.dga = elementary_automorphism(res.dga, res.dga.id_of(g), unit.sign,
                                        unit.tpow, addend);
      res.log.push_back("auto " + g + " -> " + rest + "   now d " + g + " = " +
                        res.dga.d(res.dga.id_of(g)).str(res.dga.names));
    } else if (tok == "stab") {
      int deg;
      std::string e1, e2;
      if (!(ls >> deg >> e1 >> e2)) throw ScriptError("bad stab syntax", step);
      res.dga = stabilize_dga(res.dga, deg, e1, e2);
      res.log.push_back("stab " + e1 + "(" + std::to_string(deg) + ") " + e2);
    } else if (tok == "destab") {
      std::string e1, e2;
      if (!(ls >> e1 >> e2)) throw ScriptError("bad destab syntax", step);
      try {
        res.dga = destabilize_dga(res.dga, res.dga.id_of(e1), res.dga.id_of(e2));
      } catch (const DgaError& e) {
        fail(std::string("destab: ") + e.what());
        continue;
      }
      res.log.push_back("destab " + e1 + " " + e2);
    } else {
      throw ScriptError("unknown script directive: " + tok, step);
    }
  }
  return res;
}

}  // namespace legsat
