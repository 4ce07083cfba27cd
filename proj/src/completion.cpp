#include "contlog/completion.hpp"

#include <algorithm>
#include <stdexcept>

namespace contlog {

Wff join_indexed(const WffEnumeration& en, const std::vector<Nat>& codes) {
  if (codes.empty()) return wff_zero();
  std::vector<Nat> sorted = codes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Wff acc = en.decode(sorted.front());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    acc = wff_or(acc, en.decode(sorted[i]));
  return acc;
}

namespace {

std::vector<std::uint64_t> fresh_vars(const std::vector<std::uint64_t>& taken_sorted,
                                      std::size_t count) {
  std::vector<std::uint64_t> out;
  std::uint64_t next = 0;
  for (std::size_t i = 0; i < count; ++i) {
    while (std::binary_search(taken_sorted.begin(), taken_sorted.end(), next)) ++next;
    out.push_back(next++);
  }
  return out;
}

Wff bind_groups(Wff body, const std::vector<std::uint64_t>& inner_group,
                const std::vector<std::uint64_t>& outer_group) {
  for (auto it = inner_group.rbegin(); it != inner_group.rend(); ++it)
    body = wff_sup(*it, body);
  for (auto it = outer_group.rbegin(); it != outer_group.rend(); ++it)
    body = wff_sup(*it, body);
  return body;
}

} // namespace

Wff close_to_sentence(const Wff& input) {
  Wff w = expand_shorthand(input);
  std::vector<HenkinConstantPtr> witnesses = collect_henkin_constants(w);
  std::vector<std::uint64_t> original_free = w.free_vars();
  std::vector<std::uint64_t> taken = occurring_vars(w);
  std::vector<std::uint64_t> zs = fresh_vars(taken, witnesses.size());
  Wff out = w;
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    out = replace_henkin_constant(out, witnesses[i], term_var(zs[i]));
  out = bind_groups(out, zs, original_free);
  if (!out.is_sentence() || out.has_henkin())
    throw std::logic_error("close_to_sentence did not produce a base sentence");
  return out;
}

bool CompletionState::operator==(const CompletionState& o) const {
  if (stage != o.stage || codes != o.codes || trace.size() != o.trace.size()) return false;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceEntry& a = trace[i];
    const TraceEntry& b = o.trace[i];
    if (a.stage != b.stage || a.pair_index != b.pair_index || a.phi_index != b.phi_index ||
        a.psi_index != b.psi_index || a.added_code != b.added_code ||
        a.sentence_code != b.sentence_code || a.q != b.q ||
        a.pairs_examined != b.pairs_examined)
      return false;
  }
  return true;
}

CompletionEngine::CompletionEngine(const Signature& base_sig, TheoryName& name,
                                   const WffEnumeration& henkin_enum, CompletionBudgets budgets)
    : sig_(&base_sig),
      name_(&name),
      enum_(&henkin_enum),
      budgets_(budgets),
      base_coder_(base_sig, CodingLevel::Base) {
  rebuild_join();
}

void CompletionEngine::rebuild_join() {
  join_core_ = expand_shorthand(join_indexed(*enum_, state_.codes));
  join_henkins_ = collect_henkin_constants(join_core_);
  join_occurring_ = occurring_vars(join_core_);
}

Wff CompletionEngine::close_with_cached_join(const Wff& pair_part) const {
  // equivalent to close_to_sentence(pair_part ∸ join), with the join's walks
  // precomputed once per stage
  Wff body = wff_truncsub(pair_part, join_core_);

  std::vector<HenkinConstantPtr> witnesses = collect_henkin_constants(pair_part);
  for (const auto& c : join_henkins_) {
    bool seen = false;
    for (const auto& have : witnesses)
      if (henkin_equal(*have, *c)) {
        seen = true;
        break;
      }
    if (!seen) witnesses.push_back(c);
  }

  std::vector<std::uint64_t> taken = occurring_vars(pair_part);
  taken.insert(taken.end(), join_occurring_.begin(), join_occurring_.end());
  std::sort(taken.begin(), taken.end());
  taken.erase(std::unique(taken.begin(), taken.end()), taken.end());

  std::vector<std::uint64_t> original_free = body.free_vars();
  std::vector<std::uint64_t> zs = fresh_vars(taken, witnesses.size());
  Wff out = body;
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    out = replace_henkin_constant(out, witnesses[i], term_var(zs[i]));
  out = bind_groups(out, zs, original_free);
  if (!out.is_sentence() || out.has_henkin())
    throw std::logic_error("closing the examined pair did not produce a base sentence");
  return out;
}

CompletionEngine::QResult CompletionEngine::compute_q(const Wff& phi, const Wff& psi) const {
  Wff pair_part = wff_truncsub(expand_shorthand(psi), expand_shorthand(phi));
  Wff closed = close_with_cached_join(pair_part);
  Nat n = base_coder_.encode(closed);
  Nat k(static_cast<unsigned long>(state_.stage + 2));
  Rational q = name_lookup(*name_, n, k, budgets_.name_scan);
  return {closed, n, q};
}

bool CompletionEngine::in_phi(const Nat& code, std::uint64_t stage_bound) const {
  auto it = added_at_.find(code);
  return it != added_at_.end() && it->second <= stage_bound;
}

void CompletionEngine::advance_one_stage() {
  std::uint64_t next_stage = state_.stage + 1;
  Rational threshold = pow2_neg(next_stage);
  for (std::uint64_t t = 0; t < budgets_.pairs_per_stage; ++t) {
    auto pit = pair_cache_.find(t);
    if (pit == pair_cache_.end()) {
      auto [i, j] = cantor_unpair(Nat(static_cast<unsigned long>(t)));
      pit = pair_cache_.emplace(t, std::make_pair(enum_->decode(i), enum_->decode(j))).first;
      pair_code_cache_.emplace(
          t, enum_->encode(wff_truncsub(pit->second.first, pit->second.second)));
    }
    const Wff& phi = pit->second.first;
    const Wff& psi = pit->second.second;
    const Nat& cand_code = pair_code_cache_.at(t);
    if (added_at_.count(cand_code)) continue;
    QResult qr = compute_q(phi, psi);
    if (qr.q >= threshold) {
      auto [i, j] = cantor_unpair(Nat(static_cast<unsigned long>(t)));
      state_.codes.push_back(cand_code);
      added_at_[cand_code] = next_stage;
      TraceEntry entry;
      entry.stage = next_stage;
      entry.pair_index = Nat(static_cast<unsigned long>(t));
      entry.phi_index = i;
      entry.psi_index = j;
      entry.added_code = cand_code;
      entry.sentence_code = qr.sentence_code;
      entry.q = qr.q;
      entry.pairs_examined = t + 1;
      state_.trace.push_back(std::move(entry));
      state_.stage = next_stage;
      rebuild_join();
      return;
    }
  }
  throw BudgetExhausted("pair scan budget exhausted at stage " + std::to_string(next_stage) +
                        " (non-name input or hostile enumeration)");
}

void CompletionEngine::run_to_stage(std::uint64_t stage) {
  while (state_.stage < stage) advance_one_stage();
}

void CompletionEngine::restore(CompletionState st) {
  if (st.codes.size() != st.stage)
    throw std::invalid_argument("corrupt completion state: code count != stage");
  state_ = std::move(st);
  added_at_.clear();
  for (std::size_t i = 0; i < state_.codes.size(); ++i)
    added_at_[state_.codes[i]] = i + 1;
  if (added_at_.size() != state_.codes.size())
    throw std::invalid_argument("corrupt completion state: duplicate codes");
  pair_cache_.clear();
  pair_code_cache_.clear();
  rebuild_join();
}

} // namespace contlog
