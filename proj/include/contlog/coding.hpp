#ifndef CONTLOG_CODING_HPP
#define CONTLOG_CODING_HPP

#include <map>
#include <memory>
#include <vector>

#include "contlog/syntax.hpp"

namespace contlog {

// Wffs and naturals are matched bijectively through a bit-tape reading of the
// number: the tape is the binary expansion, least significant bit first, with
// the all-zero tail shared by every number. A preorder grammar walk reads the
// tape; constructor tags use canonical complete binary codes, unbounded
// payloads use a self-delimiting code, and the structurally last payload of
// the walk absorbs the remaining tape. Trees code in O(size) bits, so deep
// formulas (the completion's growing joins) stay representable.

/// Bijection ℕ ↔ dyadic numerals (ℓ,k), ℓ ≤ 2^k, ordered by exponent.
Nat dyad_to_index(const Dyad& d);
Dyad dyad_from_index(const Nat& i);

/// The Henkin extended signature L⁺: the base signature together with the
/// stratified witness constants. Supplies the (φ,x,p,q) ↔ ℕ constant coding
/// and the joint enumeration of all L⁺ constants.
class HenkinSignature {
public:
  explicit HenkinSignature(const Signature& base) : base_(&base) {}

  const Signature& base() const { return *base_; }

  /// ℕ ↔ Henkin constants (the witness constants only).
  Nat henkin_code(const HenkinConstant& c) const;
  HenkinConstantPtr henkin_from_code(const Nat& code) const;

  /// ℕ ↔ all constants of L⁺: base constants first, then witnesses.
  Nat constant_code(const Term& constant_term) const;
  Term constant_from_code(const Nat& code) const;

private:
  const Signature* base_;
};

HenkinSignature henkin_extend(const Signature& sig);

enum class CodingLevel { Base, Henkin };

/// The canonical effective numbering of wffs (and terms) at one level.
class WffCoder {
public:
  WffCoder(const Signature& sig, CodingLevel level) : sig_(&sig), level_(level) {}

  Wff decode(const Nat& code) const;
  Nat encode(const Wff& w) const; // shorthand is expanded before coding

  Term decode_term(const Nat& code) const;
  Nat encode_term(const Term& t) const;

  const Signature& signature() const { return *sig_; }
  CodingLevel level() const { return level_; }

private:
  const Signature* sig_;
  CodingLevel level_;
};

/// Enumeration seam: everything that walks (θ_n) takes one of these, so tests
/// can put the wffs they care about at low indices.
class WffEnumeration {
public:
  virtual ~WffEnumeration() = default;
  virtual Wff decode(const Nat& n) const = 0;
  virtual Nat encode(const Wff& w) const = 0;
  virtual std::string name() const = 0;
};

class CanonicalEnumeration final : public WffEnumeration {
public:
  explicit CanonicalEnumeration(WffCoder coder) : coder_(coder) {}
  Wff decode(const Nat& n) const override { return coder_.decode(n); }
  Nat encode(const Wff& w) const override { return coder_.encode(w); }
  std::string name() const override { return "canonical"; }

private:
  WffCoder coder_;
};

/// Canonical numbering composed with the finite permutation that moves the
/// given wffs to indices 0..m-1 (displaced codes fill the freed slots in
/// sorted order). Still a total bijection.
class TableEnumeration final : public WffEnumeration {
public:
  TableEnumeration(WffCoder coder, const std::vector<Wff>& table, std::string label);
  Wff decode(const Nat& n) const override;
  Nat encode(const Wff& w) const override;
  std::string name() const override { return label_; }

private:
  WffCoder coder_;
  std::map<Nat, Nat> fwd_;
  std::map<Nat, Nat> inv_;
  std::string label_;
};

/// The wff table behind `--enumeration test`: the small dyadic numerals, then
/// the closed atoms over the first unary predicate and first two constants
/// (including one witness-constant atom), so the comparisons desk-scale
/// queries need sit at low indices.
std::vector<Wff> test_enumeration_table(const Signature& sig);

std::unique_ptr<WffEnumeration> make_enumeration(const std::string& which, const Signature& sig,
                                                 CodingLevel level);

} // namespace contlog

#endif
