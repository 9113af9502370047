#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pavelka/checker.hpp"
#include "pavelka/theorems.hpp"

namespace pavelka {

/// One premise/conclusion pair a rule is exercised on at registration time.
struct ProbeCase {
  std::vector<Formula> premises;
  Formula conclusion;
};

/// A derived rule is an emitter: given the premise line indices and the
/// stated conclusion (which carries any rational parameters not determined
/// by the premises), it appends a kernel derivation of that conclusion and
/// returns its line index.  Emitters throw ValueError on shape mismatch.
struct DerivedRule {
  std::string name;
  std::function<int(ProofBuilder&, const std::vector<int>&, const Formula&)>
      emit;
  /// Instances the registration check runs; rational parameters range over
  /// denominators <= 4.
  std::function<std::vector<ProbeCase>()> probes;
};

class DerivedRegistry : public DerivedValidator {
 public:
  /// Kernel-checks every probe case of the rule (premises as hypotheses,
  /// conclusion compared after definitional expansion); throws ValueError
  /// naming the failing instance on any miss.
  void register_rule(DerivedRule rule);

  bool has(const std::string& name) const { return rules_.count(name) > 0; }

  std::optional<std::string> validate(
      const std::string& rule, const std::vector<Formula>& premises,
      const Formula& conclusion) const override;

  /// Re-emits the proof with every Derived line replaced by its kernel
  /// derivation; other lines are restated with remapped references.
  Proof expand_to_kernel(const Proof& p) const;

  /// Appends the rule's derivation to a builder (used by the translators).
  int emit(const std::string& rule, ProofBuilder& b,
           const std::vector<int>& refs, const Formula& conclusion) const;

 private:
  std::map<std::string, DerivedRule> rules_;
};

/// Registry holding the standard library: identity, transitivity-chain,
/// exchange, gmp-sim, lift-sim, book-swap.  Built (and probe-checked) on
/// first use.
const DerivedRegistry& standard_rules();

}  // namespace pavelka
