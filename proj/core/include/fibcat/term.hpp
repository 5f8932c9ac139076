// Abstract syntax of the object theory: de Bruijn terms, Tarski universes.

#ifndef FIBCAT_TERM_HPP
#define FIBCAT_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibcat {

enum class tg : std::uint8_t {
  var,     // de Bruijn index in `idx`
  unit_ty, // Unit
  tt,      // the element of Unit
  pi,      // kids: dom, cod (cod binds var 0)
  lam,     // kids: dom annotation, body (body binds var 0)
  app,     // kids: fn, arg
  sigma,   // kids: fst_ty, snd_ty (snd_ty binds var 0)
  pr,      // kids: a, b
  fst_,    // kids: p
  snd_,    // kids: p
  id,      // kids: ty, lhs, rhs
  refl,    // kids: a
  jelim,   // kids: motive (binds x=2,y=1,p=0), base (binds x=0), lhs, rhs, path
  nat,     // Nat
  zero,
  succ,    // kids: n
  natind,  // kids: motive (binds n=0), z, s (binds n=1, ih=0), n
  univ,    // universe, level in `idx`
  el,      // kids: code
  cunit,   // level in `idx`
  csigma,  // level in `idx`; kids: A, B  (B a term of type El A -> U_level)
  cpi,     // level in `idx`; kids: A, B
  cid,     // level in `idx`; kids: A, x, y
  cnat,    // level in `idx`
  up,      // level of the argument in `idx`; kids: code
  axm,     // axiom constant; `ax` + level in `idx`; kids: instantiation spine
};

enum class axk : std::uint8_t { none, funext, ua, trunc };

struct term_node;
using term = std::shared_ptr<const term_node>;

struct term_node {
  tg k;
  std::uint32_t idx = 0; // var index or universe level
  axk ax = axk::none;
  std::vector<term> kids;
  std::size_t hash = 0;
};

term mk(tg k, std::vector<term> kids = {}, std::uint32_t idx = 0,
        axk ax = axk::none);

// constructors
term t_var(std::uint32_t i);
term t_unit();
term t_tt();
term t_pi(term dom, term cod);
term t_lam(term dom, term body);
term t_app(term f, term a);
term t_sigma(term a, term b);
term t_pair(term a, term b);
term t_fst(term p);
term t_snd(term p);
term t_id(term ty, term l, term r);
term t_refl(term a);
term t_j(term motive, term base, term l, term r, term p);
term t_nat();
term t_zero();
term t_succ(term n);
term t_natind(term motive, term z, term s, term n);
term t_univ(std::uint32_t l);
term t_el(term c);
term t_cunit(std::uint32_t l);
term t_csigma(std::uint32_t l, term a, term b);
term t_cpi(std::uint32_t l, term a, term b);
term t_cid(std::uint32_t l, term a, term x, term y);
term t_cnat(std::uint32_t l);
term t_up(std::uint32_t l, term c);
term t_axiom(axk a, std::uint32_t lvl, std::vector<term> inst);

bool term_eq(const term& a, const term& b);
std::size_t term_hash(const term& t);

// shift free indices >= cutoff by d
term shift(const term& t, int d, std::uint32_t cutoff = 0);
// substitute s for var j (capture-avoiding; frees above j drop by one)
term subst(const term& t, std::uint32_t j, const term& s);
// instantiate the outermost binder of `body` with `a`
term inst1(const term& body, const term& a);

term numeral(std::uint64_t n, std::uint64_t limit = 1000000);
// Succ-depth if the term is literally Succ^n(Zero)
std::optional<std::uint64_t> numeral_depth(const term& t);

// maximum ambient context length the term's free variables require
std::uint32_t free_bound(const term& t);

std::string show(const term& t);

struct type_error : std::runtime_error {
  explicit type_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace fibcat

#endif
