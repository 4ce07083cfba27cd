#ifndef CONTLOG_IO_HPP
#define CONTLOG_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "contlog/completion.hpp"
#include "contlog/proof.hpp"
#include "contlog/structure.hpp"

namespace contlog {

/// Line-oriented signature file: `pred NAME ARITY MODULUS`,
/// `fun NAME ARITY MODULUS`, `const NAME`; MODULUS is `id`, `shift J`, or
/// `table v0 ... vk tail J`. The metric d is built in.
Signature load_signature(std::istream& in);

/// Structure file: `elem NAME`, `dist A B N/D`, `predval P A... N/D`,
/// `funval F A... B`, `constval C A`. Distances default symmetric; the
/// diagonal defaults to 0; anything else missing is an error at validation.
FiniteStructure load_structure(std::istream& in, const Signature& sig);

std::vector<Nat> load_name_stream(std::istream& in);
void save_name_prefix(std::ostream& out, TheoryName& name, std::uint64_t count);

void save_completion_state(std::ostream& out, const CompletionState& st,
                           const std::string& enumeration_name);
CompletionState load_completion_state(std::istream& in, std::string& enumeration_name);

/// Proof file: one line per step, the restated wff last:
///   premise K (wff)
///   axiom ID <witness> (wff)
///   mp I J (wff)
///   gen I N (wff)
struct ProofFile {
  std::vector<Wff> premises;
  std::vector<ProofLine> lines;
};
ProofFile load_proof(std::istream& in, const Signature& sig);

} // namespace contlog

#endif
