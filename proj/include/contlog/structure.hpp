#ifndef CONTLOG_STRUCTURE_HPP
#define CONTLOG_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "contlog/syntax.hpp"

namespace contlog {

/// Read counters for the reducibility audit: every access to a structure
/// table bumps these, and name implementations mark their own computations
/// so a query engine can prove it never touched the ground truth directly.
struct EvalInstrumentation {
  static thread_local std::uint64_t structure_reads;
  static thread_local std::uint64_t reads_inside_name;
  static thread_local bool inside_name;
};

class NameComputationScope {
public:
  NameComputationScope() : prev_(EvalInstrumentation::inside_name) {
    EvalInstrumentation::inside_name = true;
  }
  ~NameComputationScope() { EvalInstrumentation::inside_name = prev_; }

private:
  bool prev_;
};

/// A finite continuous pre-structure: exact tables for every symbol.
/// Entries are stored as raw rationals so that validation can report
/// out-of-range values instead of refusing to represent them.
class FiniteStructure {
public:
  FiniteStructure(const Signature& sig, std::vector<std::string> element_names);

  const Signature& signature() const { return *sig_; }
  unsigned size() const { return static_cast<unsigned>(names_.size()); }
  const std::string& element_name(unsigned e) const { return names_[e]; }
  bool find_element(const std::string& name, unsigned& id) const;

  void set_distance(unsigned a, unsigned b, const Rational& r);
  void set_pred(unsigned pred, const std::vector<unsigned>& tuple, const Rational& v);
  void set_fun(unsigned fun, const std::vector<unsigned>& tuple, unsigned out);
  void set_const(unsigned cid, unsigned elem);

  bool distance_set(unsigned a, unsigned b) const;
  const Rational& distance(unsigned a, unsigned b) const;
  const Rational& pred_entry(unsigned pred, const std::vector<unsigned>& tuple) const;
  unsigned fun_entry(unsigned fun, const std::vector<unsigned>& tuple) const;
  unsigned const_entry(unsigned cid) const;

  /// Every table slot the signature requires but the structure lacks.
  std::vector<std::string> missing_entries() const;

  std::size_t tuple_index(unsigned arity, const std::vector<unsigned>& tuple) const;

private:
  const Signature* sig_;
  std::vector<std::string> names_;
  std::vector<Rational> dist_;
  std::vector<bool> dist_set_;
  std::vector<std::vector<Rational>> pred_;
  std::vector<std::vector<bool>> pred_set_;
  std::vector<std::vector<unsigned>> fun_;
  std::vector<std::vector<bool>> fun_set_;
  std::vector<std::optional<unsigned>> consts_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the pseudometric axioms and every modulus instance up to the bound
/// where the hypothesis becomes vacuous (plus the zero-distance congruence).
ValidationReport validate_structure(const FiniteStructure& m);

/// Finitely supported variable assignment over a default element.
class Assignment {
public:
  explicit Assignment(unsigned default_elem = 0) : default_(default_elem) {}

  unsigned get(std::uint64_t var) const {
    auto it = map_.find(var);
    return it == map_.end() ? default_ : it->second;
  }

  Assignment with(std::uint64_t var, unsigned elem) const {
    Assignment out = *this;
    out.map_[var] = elem;
    return out;
  }

private:
  unsigned default_;
  std::unordered_map<std::uint64_t, unsigned> map_;
};

/// Interpretation of Henkin constants by elements, for evaluating L⁺-wffs
/// against expansions of a finite structure.
class HenkinValuation {
public:
  void set(const HenkinConstantPtr& c, unsigned elem);
  std::optional<unsigned> get(const HenkinConstant& c) const;

private:
  std::vector<std::pair<HenkinConstantPtr, unsigned>> entries_;
};

unsigned eval_term(const FiniteStructure& m, const Assignment& sigma, const Term& t,
                   const HenkinValuation* hv = nullptr);
Value eval_wff(const FiniteStructure& m, const Assignment& sigma, const Wff& w,
               const HenkinValuation* hv = nullptr);
/// Rejects non-sentences; checks assignment independence when asked.
Value sentence_value(const FiniteStructure& m, const Wff& sentence,
                     const HenkinValuation* hv = nullptr);

/// Memoizing evaluator for repeated evaluation of large shared formula trees.
/// Decoded trees are interned so that structurally equal subtrees share
/// nodes, and per-(node, relevant-assignment) values are cached.
class Evaluator {
public:
  explicit Evaluator(const FiniteStructure& m) : m_(&m) {}

  Wff intern(const Wff& w);
  Value eval(const Wff& interned_core, const Assignment& sigma);

private:
  struct CacheKey {
    const void* node;
    std::vector<unsigned> vals;
    bool operator==(const CacheKey& o) const {
      return node == o.node && vals == o.vals;
    }
  };
  struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const;
  };

  const FiniteStructure* m_;
  std::unordered_multimap<std::size_t, Wff> interned_;
  std::unordered_map<CacheKey, Value, CacheKeyHash> cache_;

  Value eval_impl(const Wff& w, const Assignment& sigma);
};

} // namespace contlog

#endif
