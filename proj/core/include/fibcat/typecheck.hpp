// Bidirectional typechecking, judgmental equality, normalization.

#ifndef FIBCAT_TYPECHECK_HPP
#define FIBCAT_TYPECHECK_HPP

#include <map>
#include <optional>
#include <set>

#include "fibcat/term.hpp"

namespace fibcat {

struct theory_config {
  unsigned n_universes = 1;
  bool funext = false;
  std::set<unsigned> ua_levels;
  std::optional<int> trunc_n; // -1, 0 or 1
  bool eta_sigma = true;
  std::uint64_t numeral_limit = 1000000;
  std::optional<unsigned> nat_small_level;

  static theory_config plain(unsigned universes = 1);
  // trunc(0), funext, one univalent universe
  static theory_config mode_trunc0();
  // trunc(1), funext, two nested univalent universes, Nat small in U1
  static theory_config mode_trunc1();
};

// telescope of types, each well-formed over its prefix
struct context {
  std::vector<term> tys;
  std::size_t size() const { return tys.size(); }
  context extend(const term& ty) const;
  // type of de Bruijn variable i, shifted into the full context
  term lookup(std::uint32_t i) const;
};

struct fuel_error : std::runtime_error {
  explicit fuel_error(const std::string& m) : std::runtime_error(m) {}
};

class checker {
 public:
  explicit checker(theory_config th) : th_(std::move(th)) {}

  const theory_config& theory() const { return th_; }

  // axiom constants with stored closed types (ua, trunc); funext is a schema
  void declare_axiom(axk a, std::uint32_t lvl, term type);
  std::optional<term> axiom_type(axk a, std::uint32_t lvl) const;

  term whnf(const term& t) const;
  term normalize(const context& ctx, const term& t) const;

  term infer(const context& ctx, const term& t) const;
  void check(const context& ctx, const term& t, const term& ty) const;
  void check_type(const context& ctx, const term& t) const;
  bool conv(const context& ctx, const term& a, const term& b,
            const term& ty) const;
  bool conv_type(const context& ctx, const term& a, const term& b) const;

 private:
  theory_config th_;
  std::map<std::pair<int, std::uint32_t>, term> axioms_;
  mutable std::uint64_t fuel_ = 0;

  void burn() const;
  term whnf_(const term& t) const;
  term normalize_(const term& t) const;
  bool conv_(const context& ctx, const term& a, const term& b,
             const term& ty) const;
  bool conv_type_(const context& ctx, const term& a, const term& b) const;
  // typed comparison of neutral spines; returns the common type on success
  std::optional<term> conv_neutral(const context& ctx, const term& a,
                                   const term& b) const;
  term infer_(const context& ctx, const term& t) const;
  void check_(const context& ctx, const term& t, const term& ty) const;
  void check_type_(const context& ctx, const term& t) const;
};

// instantiate a body under n binders; args outermost-first
term inst_n(const term& body, const std::vector<term>& args);

} // namespace fibcat

#endif
