#pragma once

#include "opca/workspace.hpp"

namespace opca {

struct CommandResult {
  std::string text;
  std::vector<Certificate> certificates;
  bool pass = true;
};

struct CommandOptions {
  uint64_t limit = 64;  // enumerate / downset listing cap
  Budget budget;
};

// Dispatches one CLI command (args[0] is the command name). Throws
// UnknownCommand / UnknownName / ParseError; operational failures are
// reported through verdicts and `pass`.
CommandResult run_command(Workspace& ws, const std::vector<std::string>& args,
                          const CommandOptions& opts = {});

const std::vector<std::string>& command_names();

// Re-checks the stored witnesses of a certificate against its embedded
// subjects, without repeating any witness search, and returns the verdict
// that the re-check produces.
std::string reverify_certificate(const Certificate& c);

// --------------------------------------------------------------------------
// Certificate builders (shared by the CLI and the acceptance suite)

Certificate cert_opca_valid(const OpcaRef& a);
Certificate cert_combinators(const OpcaRef& a);
Certificate cert_combinator_laws(const OpcaRef& a);
Certificate cert_combcomp(const OpcaRef& a, int depth, int n_vars);
Certificate cert_eval(const OpcaRef& a, const std::string& term);
Certificate cert_compile(const OpcaRef& a, const std::string& term);

Certificate cert_morphism(const OpcaMorphism& f);
Certificate cert_ineq(const OpcaMorphism& f, const OpcaMorphism& g);
Certificate cert_cd(const OpcaMorphism& f);
Certificate cert_cdm(const OpcaMorphism& f);
Certificate cert_cd_cdm_agreement(const OpcaRef& a, const OpcaRef& b,
                                  const Budget& budget = {});
Certificate cert_discrete(const OpcaMorphism& f, const Budget& budget = {});
Certificate cert_zero(const OpcaMorphism& f, const Budget& budget = {});
Certificate cert_trivial(const OpcaRef& a);
Certificate cert_adjunction(const OpcaMorphism& l, const OpcaMorphism& r);

Certificate cert_product(const OpcaRef& a0, const OpcaRef& a1);
Certificate cert_two_product_law(const OpcaRef& a0, const OpcaRef& a1,
                                 const Budget& budget = {});
Certificate cert_coproduct(const OpcaMorphism& f0, const OpcaMorphism& f1);
Certificate cert_coproduct_realizers(const OpcaRef& a0, const OpcaRef& a1,
                                     const OpcaRef& b,
                                     const Budget& budget = {});
Certificate cert_biproduct(const OpcaRef& a0, const OpcaRef& a1,
                           const Budget& budget = {});
Certificate cert_disjointness(const OpcaRef& a0, const OpcaRef& a1,
                              const OpcaRef& b, const Budget& budget = {});

Certificate cert_downset_opca(const OpcaRef& a, const Budget& budget = {});
Certificate cert_downsets(const PosetRef& p, uint64_t limit);
Certificate cert_monad_laws(const OpcaRef& a, const Budget& budget = {});
Certificate cert_projective(const ApplicativeMorphism& f,
                            const Budget& budget = {});
Certificate cert_right_adjoint(const OpcaMorphism& f);
Certificate cert_radj_roundtrip(const OpcaRef& a, const OpcaRef& b,
                                const Budget& budget = {});
Certificate cert_pca_coproduct(const ApplicativeMorphism& f0,
                               const ApplicativeMorphism& f1);
Certificate cert_pca_coproduct_sweep(const OpcaRef& a0, const OpcaRef& a1,
                                     const OpcaRef& b,
                                     const Budget& budget = {});
Certificate cert_hmaps(const OpcaRef& a0, const OpcaRef& a1,
                       const Budget& budget = {});
Certificate cert_mediator(const ApplicativeMorphism& f0,
                          const ApplicativeMorphism& f1);
Certificate cert_noprod(const PosetRef& p0, const PosetRef& p1);
Certificate cert_enumerate(const PosetRef& p, uint64_t limit,
                           const Budget& budget = {});

Certificate cert_assembly(const AssemblyRef& x);
Certificate cert_assembly_laws(const OpcaRef& a, const Budget& budget = {});

// Deterministic term corpus: every Lam-free term of height <= depth over
// variables x, y, z (first n_vars) and the constants k, s of `a`.
std::vector<TermPtr> term_corpus(const Opca& a, int depth, int n_vars);

}  // namespace opca
