#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcat/typecheck.hpp"

using namespace fibcat;

static checker mk_checker(unsigned universes = 1) {
  return checker(theory_config::plain(universes));
}

TEST_CASE("numerals and normalization basics") {
  checker ck = mk_checker();
  context ctx;
  CHECK(term_eq(ck.infer(ctx, t_zero()), t_nat()));
  CHECK(term_eq(ck.infer(ctx, t_refl(t_zero())),
                t_id(t_nat(), t_zero(), t_zero())));

  term idfun = t_lam(t_nat(), t_var(0));
  term app = t_app(idfun, t_zero());
  CHECK(term_eq(ck.normalize(ctx, app), t_zero()));
}

TEST_CASE("NatInd addition 2+2 normalizes to 4") {
  checker ck = mk_checker();
  context ctx;
  // add m n := natind (_ : Nat => Nat) n (_ ih => succ ih) m
  term add2 = t_natind(t_nat(), numeral(2), t_succ(t_var(0)), numeral(2));
  ck.check(ctx, add2, t_nat());
  CHECK(term_eq(ck.normalize(ctx, add2), numeral(4)));
  CHECK(ck.conv(ctx, add2, numeral(4), t_nat()));
}

TEST_CASE("conv: succ zero vs natind-constant-zero motive example") {
  checker ck = mk_checker();
  context ctx;
  // natind (_.Nat) (succ zero) (_._.zero) zero  ==  succ zero
  term e = t_natind(t_nat(), t_succ(t_zero()), t_zero(), t_zero());
  CHECK(ck.conv(ctx, t_succ(t_zero()), e, t_nat()));
}

TEST_CASE("J on refl computes") {
  checker ck = mk_checker();
  context ctx;
  // J (x y p => Nat) (x => x) zero zero (refl zero)  ==  zero
  term j = t_j(t_nat(), t_var(0), t_zero(), t_zero(), t_refl(t_zero()));
  ck.check(ctx, j, t_nat());
  CHECK(ck.conv(ctx, j, t_zero(), t_nat()));
}

TEST_CASE("check examples from the surface contract") {
  checker ck = mk_checker();
  context ctx;
  ck.check(ctx, t_lam(t_nat(), t_var(0)), t_pi(t_nat(), t_nat()));
  ck.check(ctx, t_pair(t_zero(), t_tt()), t_sigma(t_nat(), t_unit()));
  CHECK_THROWS_AS(ck.check(ctx, t_tt(), t_nat()), type_error);
}

TEST_CASE("eta rules") {
  checker ck = mk_checker();
  context ctx;
  context cf = ctx.extend(t_pi(t_nat(), t_nat()));
  // f == fun x => f x
  term f = t_var(0);
  term eta = t_lam(t_nat(), t_app(t_var(1), t_var(0)));
  CHECK(ck.conv(cf, f, eta, t_pi(t_nat(), t_nat())));

  context cp = ctx.extend(t_sigma(t_nat(), t_nat()));
  term p = t_var(0);
  term peta = t_pair(t_fst(t_var(0)), t_snd(t_var(0)));
  CHECK(ck.conv(cp, p, peta, t_sigma(t_nat(), t_nat())));

  context cu = ctx.extend(t_unit());
  CHECK(ck.conv(cu, t_var(0), t_tt(), t_unit()));
}

TEST_CASE("universe codes: El coercion identities") {
  checker ck = mk_checker(2);
  context ctx;
  // El (csigma 0 A B) == Sig (x : El A), El (B x) in a context with codes
  context c = ctx.extend(t_univ(0))
                  .extend(t_pi(t_el(t_var(0)), t_univ(0)));
  term A = t_var(1), B = t_var(0);
  term lhs = t_el(t_csigma(0, A, B));
  term rhs = t_sigma(t_el(A), t_el(t_app(shift(B, 1), t_var(0))));
  CHECK(ck.conv_type(c, lhs, rhs));
  CHECK(ck.conv_type(c, t_el(t_cunit(0)), t_unit()));

  // up commutation: El (up c) == El c
  CHECK(ck.conv_type(c, t_el(t_up(0, A)), t_el(A)));
  // up(csigma) == csigma(up, up .)
  term upS = t_up(0, t_csigma(0, A, B));
  term pushed = t_csigma(1, t_up(0, A),
                         t_lam(t_el(t_up(0, A)),
                               t_up(0, t_app(shift(B, 1), t_var(0)))));
  CHECK(ck.conv(c, upS, pushed, t_univ(1)));
}

TEST_CASE("CodeNat smallness per theory") {
  checker plain = mk_checker(1);
  context ctx;
  CHECK_THROWS_AS(plain.infer(ctx, t_cnat(0)), type_error);

  checker t1(theory_config::mode_trunc1());
  CHECK(term_eq(t1.infer(ctx, t_cnat(1)), t_univ(1)));
  CHECK_THROWS_AS(t1.infer(ctx, t_cnat(0)), type_error);
}

TEST_CASE("axioms are conversion-inert neutrals") {
  checker ck(theory_config::mode_trunc0());
  context ctx;
  // funext applied to a trivially pointwise-equal pair of functions on Unit
  term A = t_unit();
  term B = t_unit();
  term f = t_lam(t_unit(), t_tt());
  term g = t_lam(t_unit(), t_var(0));
  term H = t_lam(t_unit(), t_refl(t_tt()));
  term ax = t_axiom(axk::funext, 0, {A, B, f, g, H});
  term ty = ck.infer(ctx, ax);
  CHECK(term_eq(ty, t_id(t_pi(A, B), f, g)));
  // neutral: normalize leaves the axiom head
  term n = ck.normalize(ctx, ax);
  CHECK(n->k == tg::axm);
  CHECK(ck.conv(ctx, ax, ax, ty));
}

TEST_CASE("fuel exhaustion reported distinctly") {
  theory_config tc = theory_config::plain(1);
  tc.numeral_limit = 10;
  checker ck(tc);
  context ctx;
  term big = t_natind(t_nat(), t_zero(), t_succ(t_var(0)), numeral(50));
  CHECK_THROWS_AS(ck.normalize(ctx, big), fuel_error);
}

TEST_CASE("subject reduction on a few handwritten redexes") {
  checker ck = mk_checker();
  context ctx;
  term t = t_app(t_lam(t_nat(), t_succ(t_var(0))), numeral(3));
  term ty = ck.infer(ctx, t);
  term t2 = ck.whnf(t);
  ck.check(ctx, t2, ty);
  CHECK(term_eq(t2, numeral(4)));
}
