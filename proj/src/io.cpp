#include "contlog/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "contlog/parse.hpp"

namespace contlog {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("expected a number for " + what + ", found '" + s + "'");
  }
}

// table entries are stored raw (no [0,1] clamp) so validation can report
// out-of-range values instead of the loader refusing them
Rational parse_rational_raw(const std::string& tok) {
  auto slash = tok.find('/');
  Rational v;
  if (slash == std::string::npos) {
    v = Rational(Nat(tok));
  } else {
    Nat den(tok.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator: " + tok);
    v = Rational(Nat(tok.substr(0, slash)), den);
  }
  v.canonicalize();
  return v;
}

Modulus parse_modulus(const std::vector<std::string>& toks, std::size_t from,
                      const std::string& line) {
  if (from >= toks.size()) throw std::runtime_error("missing modulus: " + line);
  const std::string& kind = toks[from];
  if (kind == "id") {
    if (from + 1 != toks.size()) throw std::runtime_error("trailing tokens after modulus: " + line);
    return Modulus::identity();
  }
  if (kind == "shift") {
    if (from + 2 != toks.size()) throw std::runtime_error("modulus shift takes one argument: " + line);
    return Modulus::shifted(parse_u64(toks[from + 1], "modulus shift"));
  }
  if (kind == "table") {
    std::vector<std::uint64_t> values;
    std::size_t i = from + 1;
    while (i < toks.size() && toks[i] != "tail") values.push_back(parse_u64(toks[i++], "modulus table"));
    if (i + 2 != toks.size() || toks[i] != "tail")
      throw std::runtime_error("modulus table needs a 'tail J' rule: " + line);
    return Modulus::tabled(std::move(values), parse_u64(toks[i + 1], "modulus tail"));
  }
  throw std::runtime_error("unknown modulus '" + kind + "': " + line);
}

} // namespace

Signature load_signature(std::istream& in) {
  Signature sig;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    auto toks = split_ws(line);
    if (toks[0] == "pred") {
      if (toks.size() < 4) throw std::runtime_error("bad pred line: " + line);
      unsigned arity = static_cast<unsigned>(parse_u64(toks[2], "arity"));
      Modulus m = parse_modulus(toks, 3, line);
      if (toks[1] == "d") {
        if (arity != 2 || m.kind != Modulus::Kind::Identity)
          throw std::runtime_error("d must be declared with arity 2 and modulus id");
        continue; // built in
      }
      sig.add_predicate(toks[1], arity, std::move(m));
    } else if (toks[0] == "fun") {
      if (toks.size() < 4) throw std::runtime_error("bad fun line: " + line);
      unsigned arity = static_cast<unsigned>(parse_u64(toks[2], "arity"));
      sig.add_function(toks[1], arity, parse_modulus(toks, 3, line));
    } else if (toks[0] == "const") {
      if (toks.size() != 2) throw std::runtime_error("bad const line: " + line);
      sig.add_constant(toks[1]);
    } else {
      throw std::runtime_error("unknown signature directive: " + line);
    }
  }
  return sig;
}

FiniteStructure load_structure(std::istream& in, const Signature& sig) {
  std::vector<std::string> elems;
  std::vector<std::vector<std::string>> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    auto toks = split_ws(line);
    if (toks[0] == "elem") {
      if (toks.size() != 2) throw std::runtime_error("bad elem line: " + line);
      elems.push_back(toks[1]);
    } else {
      entries.push_back(std::move(toks));
    }
  }
  FiniteStructure m(sig, elems);
  auto elem_id = [&](const std::string& name) {
    unsigned id;
    if (!m.find_element(name, id)) throw std::runtime_error("unknown element: " + name);
    return id;
  };
  for (const auto& toks : entries) {
    if (toks[0] == "dist") {
      if (toks.size() != 4) throw std::runtime_error("bad dist line");
      m.set_distance(elem_id(toks[1]), elem_id(toks[2]), parse_rational_raw(toks[3]));
    } else if (toks[0] == "predval") {
      unsigned p;
      if (!sig.find_predicate(toks[1], p)) throw std::runtime_error("unknown predicate: " + toks[1]);
      unsigned arity = sig.predicate(p).arity;
      if (toks.size() != 3 + arity) throw std::runtime_error("bad predval arity: " + toks[1]);
      std::vector<unsigned> tuple;
      for (unsigned i = 0; i < arity; ++i) tuple.push_back(elem_id(toks[2 + i]));
      m.set_pred(p, tuple, parse_rational_raw(toks.back()));
    } else if (toks[0] == "funval") {
      unsigned f;
      if (!sig.find_function(toks[1], f)) throw std::runtime_error("unknown function: " + toks[1]);
      unsigned arity = sig.function(f).arity;
      if (toks.size() != 3 + arity) throw std::runtime_error("bad funval arity: " + toks[1]);
      std::vector<unsigned> tuple;
      for (unsigned i = 0; i < arity; ++i) tuple.push_back(elem_id(toks[2 + i]));
      m.set_fun(f, tuple, elem_id(toks.back()));
    } else if (toks[0] == "constval") {
      unsigned c;
      if (!sig.find_constant(toks[1], c)) throw std::runtime_error("unknown constant: " + toks[1]);
      if (toks.size() != 3) throw std::runtime_error("bad constval line");
      m.set_const(c, elem_id(toks[2]));
    } else {
      throw std::runtime_error("unknown structure directive: " + toks[0]);
    }
  }
  // symmetric defaulting for distances specified in one direction only
  for (unsigned a = 0; a < m.size(); ++a)
    for (unsigned b = 0; b < m.size(); ++b)
      if (m.distance_set(a, b) && !m.distance_set(b, a)) {
        Rational v = m.distance(a, b);
        m.set_distance(b, a, v);
      }
  return m;
}

std::vector<Nat> load_name_stream(std::istream& in) {
  std::vector<Nat> out;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    auto toks = split_ws(line);
    for (const auto& t : toks) out.emplace_back(t);
  }
  return out;
}

void save_name_prefix(std::ostream& out, TheoryName& name, std::uint64_t count) {
  name.rewind();
  for (std::uint64_t i = 0; i < count; ++i) out << name.next().get_str() << "\n";
}

void save_completion_state(std::ostream& out, const CompletionState& st,
                           const std::string& enumeration_name) {
  out << "contlog-completion-state 1\n";
  out << "enumeration " << enumeration_name << "\n";
  out << "stage " << st.stage << "\n";
  for (const Nat& c : st.codes) out << "phi " << c.get_str() << "\n";
  for (const TraceEntry& t : st.trace) {
    out << "trace " << t.stage << " " << t.pair_index.get_str() << " "
        << t.phi_index.get_str() << " " << t.psi_index.get_str() << " "
        << t.added_code.get_str() << " " << t.sentence_code.get_str() << " "
        << t.q.get_num().get_str() << "/" << t.q.get_den().get_str() << " "
        << t.pairs_examined << "\n";
  }
}

CompletionState load_completion_state(std::istream& in, std::string& enumeration_name) {
  CompletionState st;
  std::string line;
  if (!std::getline(in, line) || split_ws(line) != std::vector<std::string>{"contlog-completion-state", "1"})
    throw std::runtime_error("not a completion state file");
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    auto toks = split_ws(line);
    if (toks[0] == "enumeration" && toks.size() == 2) {
      enumeration_name = toks[1];
    } else if (toks[0] == "stage" && toks.size() == 2) {
      st.stage = parse_u64(toks[1], "stage");
    } else if (toks[0] == "phi" && toks.size() == 2) {
      st.codes.emplace_back(toks[1]);
    } else if (toks[0] == "trace" && toks.size() == 9) {
      TraceEntry t;
      t.stage = parse_u64(toks[1], "trace stage");
      t.pair_index = Nat(toks[2]);
      t.phi_index = Nat(toks[3]);
      t.psi_index = Nat(toks[4]);
      t.added_code = Nat(toks[5]);
      t.sentence_code = Nat(toks[6]);
      auto slash = toks[7].find('/');
      if (slash == std::string::npos) throw std::runtime_error("bad trace q: " + toks[7]);
      t.q = Rational(Nat(toks[7].substr(0, slash)), Nat(toks[7].substr(slash + 1)));
      t.q.canonicalize();
      t.pairs_examined = parse_u64(toks[8], "trace examined");
      st.trace.push_back(std::move(t));
    } else {
      throw std::runtime_error("unknown state line: " + line);
    }
  }
  return st;
}

// ---- proof files ----

namespace {

// splits a line into bare tokens and balanced parenthesized groups
std::vector<std::string> proof_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '(') {
      int depth = 0;
      std::size_t start = i;
      do {
        if (line[i] == '(') ++depth;
        if (line[i] == ')') --depth;
        ++i;
        if (i > line.size()) break;
      } while (depth > 0 && i < line.size());
      if (depth != 0) throw std::runtime_error("unbalanced parenthesis in proof line: " + line);
      out.push_back(line.substr(start, i - start));
    } else {
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '(')
        ++i;
      out.push_back(line.substr(start, i - start));
    }
  }
  return out;
}

SchemaInstance parse_axiom_witness(const std::vector<std::string>& toks, std::size_t& i,
                                   const Signature& sig) {
  auto id = schema_from_name(toks.at(i++));
  if (!id) throw std::runtime_error("unknown schema id: " + toks[i - 1]);
  SchemaInstance inst;
  inst.id = *id;
  auto wff_arg = [&] { inst.wffs.push_back(parse_wff(toks.at(i++), sig, true)); };
  auto term_arg = [&] { inst.terms.push_back(parse_term(toks.at(i++), sig, true)); };
  auto var_arg = [&] { inst.vars.push_back(parse_u64(toks.at(i++), "schema variable")); };
  switch (*id) {
    case SchemaId::I:
    case SchemaId::III:
    case SchemaId::IV:
    case SchemaId::IVPrime:
      wff_arg(); wff_arg();
      break;
    case SchemaId::II:
      wff_arg(); wff_arg(); wff_arg();
      break;
    case SchemaId::V:
      var_arg(); wff_arg(); wff_arg();
      break;
    case SchemaId::VI:
      var_arg(); term_arg(); wff_arg();
      break;
    case SchemaId::VII:
    case SchemaId::VIII:
      var_arg(); wff_arg();
      break;
    case SchemaId::IX:
    case SchemaId::X:
      wff_arg();
      break;
    case SchemaId::XI:
      var_arg();
      break;
    case SchemaId::XII:
      var_arg(); var_arg();
      break;
    case SchemaId::XIII:
      var_arg(); var_arg(); var_arg();
      break;
    case SchemaId::XIV:
    case SchemaId::XV: {
      const std::string& name = toks.at(i++);
      unsigned sym;
      bool found = inst.id == SchemaId::XIV ? sig.find_function(name, sym)
                                            : sig.find_predicate(name, sym);
      if (!found) throw std::runtime_error("unknown symbol in schema witness: " + name);
      inst.symbol = sym;
      inst.n = parse_u64(toks.at(i++), "schema precision");
      inst.split = static_cast<unsigned>(parse_u64(toks.at(i++), "schema split"));
      var_arg(); var_arg();
      unsigned arity = inst.id == SchemaId::XIV ? sig.function(sym).arity
                                                : sig.predicate(sym).arity;
      for (unsigned j = 0; j + 1 < arity; ++j) term_arg();
      break;
    }
  }
  return inst;
}

} // namespace

ProofFile load_proof(std::istream& in, const Signature& sig) {
  ProofFile pf;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto toks = proof_tokens(line);
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("proof line " + std::to_string(lineno) + ": " + msg);
    };
    if (toks.empty()) continue;
    if (toks[0] == "assume") {
      if (toks.size() != 2) fail("assume takes one wff");
      pf.premises.push_back(parse_wff(toks[1], sig, true));
      continue;
    }
    ProofLine ln;
    if (toks[0] == "premise") {
      if (toks.size() != 3) fail("premise K (wff)");
      ln.kind = ProofLine::Kind::Premise;
      ln.premise = parse_u64(toks[1], "premise index");
      ln.wff = parse_wff(toks[2], sig, true);
    } else if (toks[0] == "axiom") {
      std::size_t i = 1;
      ln.kind = ProofLine::Kind::Axiom;
      ln.axiom = parse_axiom_witness(toks, i, sig);
      if (i + 1 != toks.size()) fail("axiom line needs the restated wff last");
      ln.wff = parse_wff(toks[i], sig, true);
    } else if (toks[0] == "mp") {
      if (toks.size() != 4) fail("mp I J (wff)");
      ln.kind = ProofLine::Kind::ModusPonens;
      ln.from_i = parse_u64(toks[1], "mp line");
      ln.from_j = parse_u64(toks[2], "mp line");
      ln.wff = parse_wff(toks[3], sig, true);
    } else if (toks[0] == "gen") {
      if (toks.size() != 4) fail("gen I N (wff)");
      ln.kind = ProofLine::Kind::Generalization;
      ln.from_i = parse_u64(toks[1], "gen line");
      ln.gen_var = parse_u64(toks[2], "gen variable");
      ln.wff = parse_wff(toks[3], sig, true);
    } else {
      fail("unknown proof directive: " + toks[0]);
    }
    pf.lines.push_back(std::move(ln));
  }
  return pf;
}

} // namespace contlog
