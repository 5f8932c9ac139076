#include "fibcat/typecheck.hpp"

#include <sstream>

namespace fibcat {

theory_config theory_config::plain(unsigned universes) {
  theory_config t;
  t.n_universes = universes;
  return t;
}

theory_config theory_config::mode_trunc0() {
  theory_config t;
  t.n_universes = 1;
  t.funext = true;
  t.ua_levels = {0};
  t.trunc_n = 0;
  return t;
}

theory_config theory_config::mode_trunc1() {
  theory_config t;
  t.n_universes = 2;
  t.funext = true;
  t.ua_levels = {0, 1};
  t.trunc_n = 1;
  t.nat_small_level = 1;
  return t;
}

context context::extend(const term& ty) const {
  context c = *this;
  c.tys.push_back(ty);
  return c;
}

term context::lookup(std::uint32_t i) const {
  if (i >= tys.size()) throw type_error("unbound variable " + std::to_string(i));
  return shift(tys[tys.size() - 1 - i], static_cast<int>(i) + 1);
}

term inst_n(const term& body, const std::vector<term>& args) {
  term t = body;
  for (std::size_t i = args.size(); i-- > 0;)
    t = subst(t, 0, shift(args[i], static_cast<int>(i)));
  return t;
}

void checker::declare_axiom(axk a, std::uint32_t lvl, term type) {
  axioms_[{static_cast<int>(a), lvl}] = std::move(type);
}

std::optional<term> checker::axiom_type(axk a, std::uint32_t lvl) const {
  auto it = axioms_.find({static_cast<int>(a), lvl});
  if (it == axioms_.end()) return std::nullopt;
  return it->second;
}

void checker::burn() const {
  if (fuel_ == 0)
    throw fuel_error("step budget exhausted (numeral-limit " +
                     std::to_string(th_.numeral_limit) + ")");
  --fuel_;
}

term checker::whnf(const term& t) const {
  fuel_ = th_.numeral_limit;
  return whnf_(t);
}

term checker::whnf_(const term& t) const {
  term cur = t;
  for (;;) {
    switch (cur->k) {
      case tg::app: {
        term f = whnf_(cur->kids[0]);
        if (f->k == tg::lam) {
          burn();
          cur = inst1(f->kids[1], cur->kids[1]);
          continue;
        }
        if (f.get() != cur->kids[0].get()) cur = t_app(f, cur->kids[1]);
        return cur;
      }
      case tg::fst_: {
        term p = whnf_(cur->kids[0]);
        if (p->k == tg::pr) {
          burn();
          cur = p->kids[0];
          continue;
        }
        if (p.get() != cur->kids[0].get()) cur = t_fst(p);
        return cur;
      }
      case tg::snd_: {
        term p = whnf_(cur->kids[0]);
        if (p->k == tg::pr) {
          burn();
          cur = p->kids[1];
          continue;
        }
        if (p.get() != cur->kids[0].get()) cur = t_snd(p);
        return cur;
      }
      case tg::jelim: {
        term p = whnf_(cur->kids[4]);
        if (p->k == tg::refl) {
          burn();
          cur = inst1(cur->kids[1], p->kids[0]);
          continue;
        }
        if (p.get() != cur->kids[4].get())
          cur = t_j(cur->kids[0], cur->kids[1], cur->kids[2], cur->kids[3], p);
        return cur;
      }
      case tg::natind: {
        term n = whnf_(cur->kids[3]);
        if (n->k == tg::zero) {
          burn();
          cur = cur->kids[1];
          continue;
        }
        if (n->k == tg::succ) {
          burn();
          term m = n->kids[0];
          term rec = t_natind(cur->kids[0], cur->kids[1], cur->kids[2], m);
          cur = inst_n(cur->kids[2], {m, rec});
          continue;
        }
        if (n.get() != cur->kids[3].get())
          cur = t_natind(cur->kids[0], cur->kids[1], cur->kids[2], n);
        return cur;
      }
      case tg::el: {
        term c = whnf_(cur->kids[0]);
        switch (c->k) {
          case tg::cunit:
            burn();
            cur = t_unit();
            continue;
          case tg::csigma:
            burn();
            cur = t_sigma(t_el(c->kids[0]),
                          t_el(t_app(shift(c->kids[1], 1), t_var(0))));
            continue;
          case tg::cpi:
            burn();
            cur = t_pi(t_el(c->kids[0]),
                       t_el(t_app(shift(c->kids[1], 1), t_var(0))));
            continue;
          case tg::cid:
            burn();
            cur = t_id(t_el(c->kids[0]), c->kids[1], c->kids[2]);
            continue;
          case tg::cnat:
            burn();
            cur = t_nat();
            continue;
          case tg::up:
            burn();
            cur = t_el(c->kids[0]);
            continue;
          default:
            if (c.get() != cur->kids[0].get()) cur = t_el(c);
            return cur;
        }
      }
      case tg::up: {
        term c = whnf_(cur->kids[0]);
        std::uint32_t l = cur->idx;
        switch (c->k) {
          case tg::cunit:
            burn();
            cur = t_cunit(l + 1);
            continue;
          case tg::cnat:
            burn();
            cur = t_cnat(l + 1);
            continue;
          case tg::csigma:
          case tg::cpi: {
            burn();
            term a2 = t_up(l, c->kids[0]);
            term b2 = t_lam(t_el(a2),
                            t_up(l, t_app(shift(c->kids[1], 1), t_var(0))));
            cur = c->k == tg::csigma ? t_csigma(l + 1, a2, b2)
                                     : t_cpi(l + 1, a2, b2);
            continue;
          }
          case tg::cid:
            burn();
            cur = t_cid(l + 1, t_up(l, c->kids[0]), c->kids[1], c->kids[2]);
            continue;
          default:
            if (c.get() != cur->kids[0].get()) cur = t_up(l, c);
            return cur;
        }
      }
      default:
        return cur;
    }
  }
}

term checker::normalize(const context& ctx, const term& t) const {
  (void)ctx;
  fuel_ = th_.numeral_limit;
  return normalize_(t);
}

term checker::normalize_(const term& t) const {
  term w = whnf_(t);
  if (w->kids.empty()) return w;
  std::vector<term> ks;
  ks.reserve(w->kids.size());
  bool changed = false;
  for (auto& k : w->kids) {
    term n = normalize_(k);
    changed = changed || n.get() != k.get();
    ks.push_back(std::move(n));
  }
  if (!changed) return w;
  return mk(w->k, std::move(ks), w->idx, w->ax);
}

term checker::infer(const context& ctx, const term& t) const {
  fuel_ = th_.numeral_limit;
  return infer_(ctx, t);
}

void checker::check(const context& ctx, const term& t, const term& ty) const {
  fuel_ = th_.numeral_limit;
  check_(ctx, t, ty);
}

void checker::check_type(const context& ctx, const term& t) const {
  fuel_ = th_.numeral_limit;
  check_type_(ctx, t);
}

bool checker::conv(const context& ctx, const term& a, const term& b,
                   const term& ty) const {
  fuel_ = th_.numeral_limit;
  return conv_(ctx, a, b, ty);
}

bool checker::conv_type(const context& ctx, const term& a,
                        const term& b) const {
  fuel_ = th_.numeral_limit;
  return conv_type_(ctx, a, b);
}

static bool is_type_tag(tg k) {
  switch (k) {
    case tg::unit_ty:
    case tg::pi:
    case tg::sigma:
    case tg::id:
    case tg::nat:
    case tg::univ:
    case tg::el:
      return true;
    default:
      return false;
  }
}

bool checker::conv_type_(const context& ctx, const term& a,
                         const term& b) const {
  term wa = whnf_(a), wb = whnf_(b);
  if (wa->k != wb->k) {
    if (wa->k == tg::el && wb->k != tg::el) return false;
    if (wb->k == tg::el && wa->k != tg::el) return false;
    return false;
  }
  switch (wa->k) {
    case tg::unit_ty:
    case tg::nat:
      return true;
    case tg::univ:
      return wa->idx == wb->idx;
    case tg::pi:
    case tg::sigma:
      return conv_type_(ctx, wa->kids[0], wb->kids[0]) &&
             conv_type_(ctx.extend(wa->kids[0]), wa->kids[1], wb->kids[1]);
    case tg::id:
      return conv_type_(ctx, wa->kids[0], wb->kids[0]) &&
             conv_(ctx, wa->kids[1], wb->kids[1], wa->kids[0]) &&
             conv_(ctx, wa->kids[2], wb->kids[2], wa->kids[0]);
    case tg::el: {
      // neutral codes (whnf pushed all el-reductions already)
      term ca = wa->kids[0], cb = wb->kids[0];
      if (term_eq(ca, cb)) return true;
      try {
        term cu = whnf_(infer_(ctx, ca));
        if (cu->k != tg::univ) return false;
        return conv_(ctx, ca, cb, cu);
      } catch (const type_error&) {
        return false;
      }
    }
    default:
      return false;
  }
}

bool checker::conv_(const context& ctx, const term& a, const term& b,
                    const term& ty) const {
  term w = whnf_(ty);
  switch (w->k) {
    case tg::unit_ty:
      return true;
    case tg::pi: {
      context c2 = ctx.extend(w->kids[0]);
      term fa = t_app(shift(a, 1), t_var(0));
      term fb = t_app(shift(b, 1), t_var(0));
      return conv_(c2, fa, fb, w->kids[1]);
    }
    case tg::sigma: {
      if (!th_.eta_sigma) break;
      term a1 = t_fst(a), b1 = t_fst(b);
      if (!conv_(ctx, a1, b1, w->kids[0])) return false;
      term sty = inst1(w->kids[1], a1);
      return conv_(ctx, t_snd(a), t_snd(b), sty);
    }
    case tg::univ: {
      term wa = whnf_(a), wb = whnf_(b);
      if (wa->k != wb->k) {
        return conv_neutral(ctx, wa, wb).has_value();
      }
      switch (wa->k) {
        case tg::cunit:
        case tg::cnat:
          return wa->idx == wb->idx;
        case tg::csigma:
        case tg::cpi: {
          if (wa->idx != wb->idx) return false;
          term ul = t_univ(wa->idx);
          if (!conv_(ctx, wa->kids[0], wb->kids[0], ul)) return false;
          term fam = t_pi(t_el(wa->kids[0]), shift(ul, 1));
          return conv_(ctx, wa->kids[1], wb->kids[1], fam);
        }
        case tg::cid: {
          if (wa->idx != wb->idx) return false;
          term ul = t_univ(wa->idx);
          if (!conv_(ctx, wa->kids[0], wb->kids[0], ul)) return false;
          term ela = t_el(wa->kids[0]);
          return conv_(ctx, wa->kids[1], wb->kids[1], ela) &&
                 conv_(ctx, wa->kids[2], wb->kids[2], ela);
        }
        default:
          return conv_neutral(ctx, wa, wb).has_value();
      }
    }
    default:
      break;
  }
  // structural comparison at base / neutral types
  term wa = whnf_(a), wb = whnf_(b);
  if (wa->k != wb->k) return conv_neutral(ctx, wa, wb).has_value();
  switch (wa->k) {
    case tg::zero:
    case tg::tt:
      return true;
    case tg::succ:
      return conv_(ctx, wa->kids[0], wb->kids[0], t_nat());
    case tg::refl: {
      term wt = whnf_(ty);
      term base = wt->k == tg::id ? wt->kids[0] : infer_(ctx, wa->kids[0]);
      return conv_(ctx, wa->kids[0], wb->kids[0], base);
    }
    case tg::pr: {
      // only reachable with eta_sigma off
      term pty = whnf_(ty);
      if (pty->k != tg::sigma) return false;
      return conv_(ctx, wa->kids[0], wb->kids[0], pty->kids[0]) &&
             conv_(ctx, wa->kids[1], wb->kids[1],
                   inst1(pty->kids[1], wa->kids[0]));
    }
    case tg::lam: {
      context c2 = ctx.extend(wa->kids[0]);
      term bty = infer_(c2, wa->kids[1]);
      return conv_type_(ctx, wa->kids[0], wb->kids[0]) &&
             conv_(c2, wa->kids[1], wb->kids[1], bty);
    }
    default:
      return conv_neutral(ctx, wa, wb).has_value();
  }
}

std::optional<term> checker::conv_neutral(const context& ctx, const term& a,
                                          const term& b) const {
  if (a->k != b->k) return std::nullopt;
  switch (a->k) {
    case tg::var: {
      if (a->idx != b->idx) return std::nullopt;
      return ctx.lookup(a->idx);
    }
    case tg::app: {
      auto fty = conv_neutral(ctx, whnf_(a->kids[0]), whnf_(b->kids[0]));
      if (!fty) return std::nullopt;
      term w = whnf_(*fty);
      if (w->k != tg::pi) return std::nullopt;
      if (!conv_(ctx, a->kids[1], b->kids[1], w->kids[0])) return std::nullopt;
      return inst1(w->kids[1], a->kids[1]);
    }
    case tg::fst_: {
      auto pty = conv_neutral(ctx, whnf_(a->kids[0]), whnf_(b->kids[0]));
      if (!pty) return std::nullopt;
      term w = whnf_(*pty);
      if (w->k != tg::sigma) return std::nullopt;
      return w->kids[0];
    }
    case tg::snd_: {
      auto pty = conv_neutral(ctx, whnf_(a->kids[0]), whnf_(b->kids[0]));
      if (!pty) return std::nullopt;
      term w = whnf_(*pty);
      if (w->k != tg::sigma) return std::nullopt;
      return inst1(w->kids[1], t_fst(a->kids[0]));
    }
    case tg::natind: {
      context cn = ctx.extend(t_nat());
      if (!conv_type_(cn, a->kids[0], b->kids[0])) return std::nullopt;
      if (!conv_(ctx, a->kids[1], b->kids[1], inst1(a->kids[0], t_zero())))
        return std::nullopt;
      context cs = cn.extend(a->kids[0]);
      term sty = inst1(shift(a->kids[0], 2, 1), t_succ(t_var(1)));
      if (!conv_(cs, a->kids[2], b->kids[2], sty)) return std::nullopt;
      if (!conv_(ctx, a->kids[3], b->kids[3], t_nat())) return std::nullopt;
      return inst1(a->kids[0], a->kids[3]);
    }
    case tg::jelim: {
      term aty = infer_(ctx, a->kids[2]);
      context c1 = ctx.extend(aty);
      context c2 = c1.extend(shift(aty, 1));
      context c3 = c2.extend(t_id(shift(aty, 2), t_var(1), t_var(0)));
      if (!conv_type_(c3, a->kids[0], b->kids[0])) return std::nullopt;
      term dty =
          subst(subst(a->kids[0], 0, t_refl(t_var(0))), 0, t_var(0));
      if (!conv_(c1, a->kids[1], b->kids[1], dty)) return std::nullopt;
      if (!conv_(ctx, a->kids[2], b->kids[2], aty)) return std::nullopt;
      if (!conv_(ctx, a->kids[3], b->kids[3], aty)) return std::nullopt;
      term pty = t_id(aty, a->kids[2], a->kids[3]);
      if (!conv_(ctx, a->kids[4], b->kids[4], pty)) return std::nullopt;
      return inst_n(a->kids[0], {a->kids[2], a->kids[3], a->kids[4]});
    }
    case tg::axm: {
      if (a->ax != b->ax || a->idx != b->idx) return std::nullopt;
      if (a->kids.size() != b->kids.size()) return std::nullopt;
      // compare instantiation against the axiom's telescope
      term ty = infer_(ctx, a);
      term tyb = infer_(ctx, b);
      // spine equality, typed along a's telescope
      if (a->ax == axk::funext) {
        if (!conv_type_(ctx, a->kids[0], b->kids[0])) return std::nullopt;
        context cA = ctx.extend(a->kids[0]);
        if (!conv_type_(cA, a->kids[1], b->kids[1])) return std::nullopt;
        term fty = t_pi(a->kids[0], a->kids[1]);
        if (!conv_(ctx, a->kids[2], b->kids[2], fty)) return std::nullopt;
        if (!conv_(ctx, a->kids[3], b->kids[3], fty)) return std::nullopt;
        term hty = t_pi(a->kids[0],
                        t_id(a->kids[1], t_app(shift(a->kids[2], 1), t_var(0)),
                             t_app(shift(a->kids[3], 1), t_var(0))));
        if (!conv_(ctx, a->kids[4], b->kids[4], hty)) return std::nullopt;
        return ty;
      }
      if (!term_eq(a, b) && !conv_type_(ctx, ty, tyb)) return std::nullopt;
      for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!term_eq(a->kids[i], b->kids[i])) return std::nullopt;
      return ty;
    }
    case tg::up: {
      // up stuck on a neutral code
      if (a->idx != b->idx) return std::nullopt;
      if (!conv_(ctx, a->kids[0], b->kids[0], t_univ(a->idx)))
        return std::nullopt;
      return t_univ(a->idx + 1);
    }
    default:
      return std::nullopt;
  }
}

void checker::check_type_(const context& ctx, const term& t) const {
  switch (t->k) {
    case tg::unit_ty:
    case tg::nat:
      return;
    case tg::univ:
      if (t->idx >= th_.n_universes)
        throw type_error("universe level " + std::to_string(t->idx) +
                         " out of range");
      return;
    case tg::pi:
    case tg::sigma:
      check_type_(ctx, t->kids[0]);
      check_type_(ctx.extend(t->kids[0]), t->kids[1]);
      return;
    case tg::id:
      check_type_(ctx, t->kids[0]);
      check_(ctx, t->kids[1], t->kids[0]);
      check_(ctx, t->kids[2], t->kids[0]);
      return;
    case tg::el: {
      term cty = whnf_(infer_(ctx, t->kids[0]));
      if (cty->k != tg::univ)
        throw type_error("El applied to non-code: " + show(t->kids[0]));
      return;
    }
    default:
      throw type_error("not a type: " + show(t));
  }
}

term checker::infer_(const context& ctx, const term& t) const {
  switch (t->k) {
    case tg::var:
      return ctx.lookup(t->idx);
    case tg::tt:
      return t_unit();
    case tg::lam: {
      check_type_(ctx, t->kids[0]);
      term bty = infer_(ctx.extend(t->kids[0]), t->kids[1]);
      return t_pi(t->kids[0], bty);
    }
    case tg::app: {
      term fty = whnf_(infer_(ctx, t->kids[0]));
      if (fty->k != tg::pi)
        throw type_error("non-function applied: " + show(t->kids[0]) +
                         " : " + show(fty));
      check_(ctx, t->kids[1], fty->kids[0]);
      return inst1(fty->kids[1], t->kids[1]);
    }
    case tg::pr:
      throw type_error("pair needs a type ascription");
    case tg::fst_: {
      term pty = whnf_(infer_(ctx, t->kids[0]));
      if (pty->k != tg::sigma)
        throw type_error("fst of non-pair type " + show(pty));
      return pty->kids[0];
    }
    case tg::snd_: {
      term pty = whnf_(infer_(ctx, t->kids[0]));
      if (pty->k != tg::sigma)
        throw type_error("snd of non-pair type " + show(pty));
      return inst1(pty->kids[1], t_fst(t->kids[0]));
    }
    case tg::refl: {
      term aty = infer_(ctx, t->kids[0]);
      return t_id(aty, t->kids[0], t->kids[0]);
    }
    case tg::jelim: {
      term aty = infer_(ctx, t->kids[2]);
      check_(ctx, t->kids[3], aty);
      check_(ctx, t->kids[4], t_id(aty, t->kids[2], t->kids[3]));
      context c1 = ctx.extend(aty);
      context c2 = c1.extend(shift(aty, 1));
      context c3 = c2.extend(t_id(shift(aty, 2), t_var(1), t_var(0)));
      check_type_(c3, t->kids[0]);
      term dty =
          subst(subst(t->kids[0], 0, t_refl(t_var(0))), 0, t_var(0));
      check_(c1, t->kids[1], dty);
      return inst_n(t->kids[0], {t->kids[2], t->kids[3], t->kids[4]});
    }
    case tg::zero:
      return t_nat();
    case tg::succ:
      check_(ctx, t->kids[0], t_nat());
      return t_nat();
    case tg::natind: {
      check_(ctx, t->kids[3], t_nat());
      context cn = ctx.extend(t_nat());
      check_type_(cn, t->kids[0]);
      check_(ctx, t->kids[1], inst1(t->kids[0], t_zero()));
      context cs = cn.extend(t->kids[0]);
      term sty = inst1(shift(t->kids[0], 2, 1), t_succ(t_var(1)));
      check_(cs, t->kids[2], sty);
      return inst1(t->kids[0], t->kids[3]);
    }
    case tg::cunit:
    case tg::cnat:
      if (t->idx >= th_.n_universes) throw type_error("universe out of range");
      if (t->k == tg::cnat &&
          (!th_.nat_small_level || *th_.nat_small_level != t->idx))
        throw type_error("Nat is not declared small in U" +
                         std::to_string(t->idx));
      return t_univ(t->idx);
    case tg::csigma:
    case tg::cpi: {
      if (t->idx >= th_.n_universes) throw type_error("universe out of range");
      term ul = t_univ(t->idx);
      check_(ctx, t->kids[0], ul);
      check_(ctx, t->kids[1], t_pi(t_el(t->kids[0]), shift(ul, 1)));
      return ul;
    }
    case tg::cid: {
      if (t->idx >= th_.n_universes) throw type_error("universe out of range");
      check_(ctx, t->kids[0], t_univ(t->idx));
      term ela = t_el(t->kids[0]);
      check_(ctx, t->kids[1], ela);
      check_(ctx, t->kids[2], ela);
      return t_univ(t->idx);
    }
    case tg::up: {
      check_(ctx, t->kids[0], t_univ(t->idx));
      if (t->idx + 1 >= th_.n_universes)
        throw type_error("up lands outside the universe hierarchy");
      return t_univ(t->idx + 1);
    }
    case tg::axm: {
      switch (t->ax) {
        case axk::funext: {
          if (!th_.funext) throw type_error("funext axiom not enabled");
          if (t->kids.size() != 5)
            throw type_error("funext expects A B f g H");
          const term &A = t->kids[0], &B = t->kids[1], &f = t->kids[2],
                     &g = t->kids[3], &H = t->kids[4];
          check_type_(ctx, A);
          check_type_(ctx.extend(A), B);
          term fty = t_pi(A, B);
          check_(ctx, f, fty);
          check_(ctx, g, fty);
          term hty = t_pi(A, t_id(B, t_app(shift(f, 1), t_var(0)),
                                  t_app(shift(g, 1), t_var(0))));
          check_(ctx, H, hty);
          return t_id(fty, f, g);
        }
        case axk::ua: {
          if (!th_.ua_levels.count(t->idx))
            throw type_error("ua" + std::to_string(t->idx) + " not enabled");
          auto ty = axiom_type(axk::ua, t->idx);
          if (!ty) throw type_error("ua axiom type not declared (load prelude)");
          if (!t->kids.empty()) throw type_error("ua takes no instantiation");
          return shift(*ty, static_cast<int>(ctx.size()));
        }
        case axk::trunc: {
          if (!th_.trunc_n || *th_.trunc_n != static_cast<int>(t->idx))
            throw type_error("trunc" + std::to_string(t->idx) + " not enabled");
          auto ty = axiom_type(axk::trunc, t->idx);
          if (!ty)
            throw type_error("trunc axiom type not declared (load prelude)");
          if (!t->kids.empty()) throw type_error("trunc takes no instantiation");
          return shift(*ty, static_cast<int>(ctx.size()));
        }
        default:
          throw type_error("unknown axiom");
      }
    }
    default:
      if (is_type_tag(t->k))
        throw type_error("expected a term, found type " + show(t));
      throw type_error("cannot infer " + show(t));
  }
}

void checker::check_(const context& ctx, const term& t, const term& ty) const {
  term w = whnf_(ty);
  switch (t->k) {
    case tg::lam: {
      if (w->k != tg::pi)
        throw type_error("lambda against non-Pi type " + show(w));
      check_type_(ctx, t->kids[0]);
      if (!conv_type_(ctx, t->kids[0], w->kids[0]))
        throw type_error("lambda annotation mismatch: " + show(t->kids[0]) +
                         " vs " + show(w->kids[0]));
      check_(ctx.extend(w->kids[0]), t->kids[1], w->kids[1]);
      return;
    }
    case tg::pr: {
      if (w->k != tg::sigma)
        throw type_error("pair against non-Sigma type " + show(w));
      check_(ctx, t->kids[0], w->kids[0]);
      check_(ctx, t->kids[1], inst1(w->kids[1], t->kids[0]));
      return;
    }
    case tg::refl: {
      if (w->k != tg::id)
        throw type_error("refl against non-Id type " + show(w));
      check_(ctx, t->kids[0], w->kids[0]);
      if (!conv_(ctx, t->kids[0], w->kids[1], w->kids[0]) ||
          !conv_(ctx, t->kids[0], w->kids[2], w->kids[0]))
        throw type_error("refl endpoints mismatch: refl " + show(t->kids[0]) +
                         " at " + show(w));
      return;
    }
    default: {
      term ity = infer_(ctx, t);
      if (!conv_type_(ctx, ity, w)) {
        std::ostringstream o;
        o << "type mismatch:\n  term     " << show(t) << "\n  has type "
          << show(normalize_(ity)) << "\n  expected " << show(normalize_(w));
        throw type_error(o.str());
      }
      return;
    }
  }
}

} // namespace fibcat
