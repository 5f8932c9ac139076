// Derived homotopy library: path algebra, equivalence machinery, the
// funext-dependent tier, axiom types.

#ifndef FIBCAT_PRELUDE_HPP
#define FIBCAT_PRELUDE_HPP

#include "fibcat/parser.hpp"
#include "fibcat/typecheck.hpp"

namespace fibcat {
namespace lib {

// -- type-level macros ------------------------------------------------------
// All builders take argument terms valid in the ambient context and return a
// term in the same context. Family arguments are one-variable binders.

term arrow(const term& a, const term& b); // non-dependent Pi
term prod(const term& a, const term& b);  // non-dependent Sigma

term inv(const term& A, const term& x, const term& y, const term& p);
term concat(const term& A, const term& x, const term& y, const term& z,
            const term& p, const term& q);
// transport in the family C (binder over A) along p : x ~> y
term transport(const term& A, const term& C, const term& x, const term& y,
               const term& p, const term& b);
// the transported term without the final application (the coercion function)
term transport_fn(const term& A, const term& C, const term& x, const term& y,
                  const term& p);
term ap(const term& A, const term& B, const term& f, const term& x,
        const term& y, const term& p);
// happly f g p : Pi (a:A), Id(B a, f a, g a); B a one-variable binder
term happly(const term& A, const term& B, const term& f, const term& g,
            const term& p);

term iscontr_T(const term& X);
term isprop_T(const term& X);
// isequiv per eq. hiso: homotopy section and homotopy retraction
term isequiv_T(const term& X, const term& Y, const term& f);
term hequiv_T(const term& X, const term& Y, const term& f);
term equiv_T(const term& X, const term& Y);
term istrunc_T(int n, const term& X); // n in {-1, 0, 1}
term fib_T(const term& X, const term& Y, const term& f, const term& y);

term idfun(const term& X);
term idequiv(const term& X); // : equiv_T(X, X)
// ptoe at universe level l, as a closed function term
term ptoe(unsigned l);
term ua_type(unsigned l);
term trunc_type(int n, unsigned top_level);

// funext axiom instance (requires theory.funext): Id(Pi(A,B), f, g)
term fe(const term& A, const term& B, const term& f, const term& g,
        const term& H);

// -- declarations -----------------------------------------------------------

// the funext-free core library at level 0 (contents of share/prelude_core.tt)
std::string prelude_core_text();

// full prelude for a theory: core file (per available level) plus the
// funext-dependent tier; everything typechecks or a defect is thrown
std::vector<decl> prelude_decls(const theory_config& th);

// build ua/trunc axiom types and register them with the checker
void install_axioms(checker& ck);

} // namespace lib
} // namespace fibcat

#endif
