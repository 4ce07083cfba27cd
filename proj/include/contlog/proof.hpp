#ifndef CONTLOG_PROOF_HPP
#define CONTLOG_PROOF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contlog/syntax.hpp"

namespace contlog {

/// Axiom schemata. IV is the fourth schema exactly as listed; IVPrime is the
/// classical contraposition form, recognized under its own id (see the
/// matcher notes: IV instances do not generally evaluate to 0).
enum class SchemaId {
  I, II, III, IV, IVPrime, V, VI, VII, VIII, IX, X, XI, XII, XIII, XIV, XV,
};

std::string schema_name(SchemaId id);
std::optional<SchemaId> schema_from_name(const std::string& name);

/// Instantiation witness. Fields are read positionally per schema:
///   I/III/IV/IV': wffs = {φ, ψ}   II: wffs = {φ, ψ, θ}
///   V: vars = {x}, wffs = {φ, ψ}  VI: vars = {x}, terms = {t}, wffs = {φ}
///   VII/VIII: vars = {x}, wffs = {φ}   IX/X: wffs = {φ}
///   XI: vars = {x}  XII: vars = {x,y}  XIII: vars = {x,y,z}
///   XIV/XV: symbol = f or P, n, split = |t0|, vars = {x,y},
///           terms = t0 ++ t1 (arity-1 terms in order)
struct SchemaInstance {
  SchemaId id = SchemaId::I;
  std::vector<Wff> wffs;
  std::vector<std::uint64_t> vars;
  std::vector<Term> terms;
  unsigned symbol = 0;
  std::uint64_t n = 0;
  unsigned split = 0;
};

/// Builds the core wff the witness denotes. Side conditions (VI substitution
/// correctness, VII freeness) are enforced.
Wff instantiate_schema(const Signature& sig, const SchemaInstance& inst);

/// Every schema the (core, expanded) wff instantiates, with witnesses, in
/// schema order. Deterministic.
std::vector<SchemaInstance> match_axiom(const Signature& sig, const Wff& w);

struct ProofLine {
  enum class Kind { Axiom, Premise, ModusPonens, Generalization };
  Kind kind = Kind::Premise;
  Wff wff;                 // the stated conclusion of this line
  SchemaInstance axiom;    // Axiom
  std::size_t premise = 0; // Premise
  std::size_t from_i = 0;  // MP: φ line; Gen: φ line
  std::size_t from_j = 0;  // MP: ψ∸φ line
  std::uint64_t gen_var = 0;
};

struct ProofVerdict {
  bool accepted = true;
  std::size_t bad_line = 0; // 0-based, meaningful when !accepted
  std::string reason;
};

/// Hilbert-style checking under modus ponens and generalization. Accepts iff
/// every line is justified; comparisons are on expanded core syntax.
ProofVerdict check_proof(const Signature& sig, const std::vector<Wff>& premises,
                         const std::vector<ProofLine>& lines);

} // namespace contlog

#endif
