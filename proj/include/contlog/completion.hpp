#ifndef CONTLOG_COMPLETION_HPP
#define CONTLOG_COMPLETION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "contlog/names.hpp"

namespace contlog {

/// Left-nested join of the enumerated wffs at the given codes, in increasing
/// code order; the empty join is 0̲ (the right identity of ∸).
Wff join_indexed(const WffEnumeration& en, const std::vector<Nat>& codes);

/// Replaces the witness constants of w by fresh variables (lowest indices not
/// occurring in w, first-occurrence order), then sup-binds those variables
/// and finally the original free variables, each group in increasing index
/// order (outermost binder smallest). The result is a base-signature sentence.
Wff close_to_sentence(const Wff& w);

struct TraceEntry {
  std::uint64_t stage = 0;     // the stage s+1 this entry concluded
  Nat pair_index;              // position in the pair enumeration
  Nat phi_index, psi_index;    // enumeration indices of the selected pair
  Nat added_code;              // enumeration code of φ∸ψ
  Nat sentence_code;           // base-level code of the closed sentence
  Rational q;                  // the rational compared against 2^{-(s+1)}
  std::uint64_t pairs_examined = 0;
};

struct CompletionState {
  std::uint64_t stage = 0;
  std::vector<Nat> codes;      // Φ in stage order; |codes| == stage
  std::vector<TraceEntry> trace;

  bool operator==(const CompletionState& o) const;
};

struct CompletionBudgets {
  std::uint64_t pairs_per_stage = 1u << 20;
  std::uint64_t name_scan = 1u << 20;
};

/// The staged completion: at stage s+1, scan pairs (φ,ψ) in the pair
/// enumeration for the first one whose ∸-combination is new and whose
/// approximated degree clears 2^{-(s+1)}, and add its code.
class CompletionEngine {
public:
  CompletionEngine(const Signature& base_sig, TheoryName& name,
                   const WffEnumeration& henkin_enum, CompletionBudgets budgets = {});

  const CompletionState& state() const { return state_; }
  const WffEnumeration& enumeration() const { return *enum_; }
  const Signature& base_signature() const { return *sig_; }
  TheoryName& name() { return *name_; }

  void advance_one_stage();
  void run_to_stage(std::uint64_t stage);

  /// Membership in Φ_{stage_bound} (the set after стage_bound stages).
  bool in_phi(const Nat& code, std::uint64_t stage_bound) const;

  /// q_{φ,ψ,X,s+1} for the current stage s, together with the closed
  /// sentence and its base-level code.
  struct QResult {
    Wff closed;
    Nat sentence_code;
    Rational q;
  };
  QResult compute_q(const Wff& phi, const Wff& psi) const;

  /// Adopts a previously serialized state (codes and trace are trusted).
  void restore(CompletionState st);

private:
  const Signature* sig_;
  TheoryName* name_;
  const WffEnumeration* enum_;
  CompletionBudgets budgets_;
  WffCoder base_coder_;
  CompletionState state_;
  std::map<Nat, std::uint64_t> added_at_; // code -> stage it entered

  // per-stage caches
  Wff join_core_;
  std::vector<HenkinConstantPtr> join_henkins_;
  std::vector<std::uint64_t> join_occurring_;
  std::unordered_map<std::uint64_t, std::pair<Wff, Wff>> pair_cache_;
  std::unordered_map<std::uint64_t, Nat> pair_code_cache_;

  void rebuild_join();
  Wff close_with_cached_join(const Wff& pair_part) const;
};

} // namespace contlog

#endif
