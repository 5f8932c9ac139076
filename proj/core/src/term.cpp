#include "fibcat/term.hpp"

#include <functional>
#include <sstream>

namespace fibcat {

static std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

term mk(tg k, std::vector<term> kids, std::uint32_t idx, axk ax) {
  auto n = std::make_shared<term_node>();
  n->k = k;
  n->idx = idx;
  n->ax = ax;
  n->kids = std::move(kids);
  std::size_t h = mix(static_cast<std::size_t>(k) * 131,
                      static_cast<std::size_t>(idx) * 2654435761u);
  h = mix(h, static_cast<std::size_t>(ax));
  for (auto& c : n->kids) h = mix(h, c->hash);
  n->hash = h;
  return n;
}

term t_var(std::uint32_t i) { return mk(tg::var, {}, i); }
term t_unit() { return mk(tg::unit_ty); }
term t_tt() { return mk(tg::tt); }
term t_pi(term dom, term cod) { return mk(tg::pi, {dom, cod}); }
term t_lam(term dom, term body) { return mk(tg::lam, {dom, body}); }
term t_app(term f, term a) { return mk(tg::app, {f, a}); }
term t_sigma(term a, term b) { return mk(tg::sigma, {a, b}); }
term t_pair(term a, term b) { return mk(tg::pr, {a, b}); }
term t_fst(term p) { return mk(tg::fst_, {p}); }
term t_snd(term p) { return mk(tg::snd_, {p}); }
term t_id(term ty, term l, term r) { return mk(tg::id, {ty, l, r}); }
term t_refl(term a) { return mk(tg::refl, {a}); }
term t_j(term motive, term base, term l, term r, term p) {
  return mk(tg::jelim, {motive, base, l, r, p});
}
term t_nat() { return mk(tg::nat); }
term t_zero() { return mk(tg::zero); }
term t_succ(term n) { return mk(tg::succ, {n}); }
term t_natind(term motive, term z, term s, term n) {
  return mk(tg::natind, {motive, z, s, n});
}
term t_univ(std::uint32_t l) { return mk(tg::univ, {}, l); }
term t_el(term c) { return mk(tg::el, {c}); }
term t_cunit(std::uint32_t l) { return mk(tg::cunit, {}, l); }
term t_csigma(std::uint32_t l, term a, term b) {
  return mk(tg::csigma, {a, b}, l);
}
term t_cpi(std::uint32_t l, term a, term b) { return mk(tg::cpi, {a, b}, l); }
term t_cid(std::uint32_t l, term a, term x, term y) {
  return mk(tg::cid, {a, x, y}, l);
}
term t_cnat(std::uint32_t l) { return mk(tg::cnat, {}, l); }
term t_up(std::uint32_t l, term c) { return mk(tg::up, {c}, l); }
term t_axiom(axk a, std::uint32_t lvl, std::vector<term> inst) {
  return mk(tg::axm, std::move(inst), lvl, a);
}

bool term_eq(const term& a, const term& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash) return false;
  if (a->k != b->k || a->idx != b->idx || a->ax != b->ax) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!term_eq(a->kids[i], b->kids[i])) return false;
  return true;
}

std::size_t term_hash(const term& t) { return t->hash; }

// number of binders each kid of a node lives under
static int binder_depth(tg k, std::size_t kid) {
  switch (k) {
    case tg::pi:
    case tg::sigma:
    case tg::lam:
      return kid == 1 ? 1 : 0;
    case tg::jelim:
      if (kid == 0) return 3;
      if (kid == 1) return 1;
      return 0;
    case tg::natind:
      if (kid == 0) return 1;
      if (kid == 2) return 2;
      return 0;
    default:
      return 0;
  }
}

term shift(const term& t, int d, std::uint32_t cutoff) {
  if (d == 0) return t;
  switch (t->k) {
    case tg::var:
      if (t->idx >= cutoff) {
        if (d < 0 && t->idx < cutoff + static_cast<std::uint32_t>(-d))
          throw std::logic_error("shift: negative index");
        return t_var(t->idx + d);
      }
      return t;
    default: {
      if (t->kids.empty()) return t;
      bool changed = false;
      std::vector<term> ks;
      ks.reserve(t->kids.size());
      for (std::size_t i = 0; i < t->kids.size(); ++i) {
        term c = shift(t->kids[i], d, cutoff + binder_depth(t->k, i));
        changed = changed || c.get() != t->kids[i].get();
        ks.push_back(std::move(c));
      }
      if (!changed) return t;
      return mk(t->k, std::move(ks), t->idx, t->ax);
    }
  }
}

term subst(const term& t, std::uint32_t j, const term& s) {
  switch (t->k) {
    case tg::var:
      if (t->idx == j) return shift(s, static_cast<int>(j));
      if (t->idx > j) return t_var(t->idx - 1);
      return t;
    default: {
      if (t->kids.empty()) return t;
      bool changed = false;
      std::vector<term> ks;
      ks.reserve(t->kids.size());
      for (std::size_t i = 0; i < t->kids.size(); ++i) {
        term c = subst(t->kids[i], j + binder_depth(t->k, i), s);
        changed = changed || c.get() != t->kids[i].get();
        ks.push_back(std::move(c));
      }
      if (!changed) return t;
      return mk(t->k, std::move(ks), t->idx, t->ax);
    }
  }
}

term inst1(const term& body, const term& a) { return subst(body, 0, a); }

term numeral(std::uint64_t n, std::uint64_t limit) {
  if (n > limit) throw std::runtime_error("numeral: limit exceeded");
  term t = t_zero();
  for (std::uint64_t i = 0; i < n; ++i) t = t_succ(t);
  return t;
}

std::optional<std::uint64_t> numeral_depth(const term& t) {
  std::uint64_t n = 0;
  const term_node* p = t.get();
  while (p->k == tg::succ) {
    ++n;
    p = p->kids[0].get();
  }
  if (p->k == tg::zero) return n;
  return std::nullopt;
}

static void free_bound_rec(const term& t, std::uint32_t depth,
                           std::uint32_t& best) {
  if (t->k == tg::var) {
    if (t->idx >= depth) {
      std::uint32_t need = t->idx - depth + 1;
      if (need > best) best = need;
    }
    return;
  }
  for (std::size_t i = 0; i < t->kids.size(); ++i)
    free_bound_rec(t->kids[i], depth + binder_depth(t->k, i), best);
}

std::uint32_t free_bound(const term& t) {
  std::uint32_t best = 0;
  free_bound_rec(t, 0, best);
  return best;
}

static const char* ax_name(axk a, std::uint32_t lvl) {
  static thread_local std::string buf;
  switch (a) {
    case axk::funext: return "funext";
    case axk::ua: buf = "ua" + std::to_string(lvl); return buf.c_str();
    case axk::trunc: buf = "trunc" + std::to_string(lvl); return buf.c_str();
    default: return "?";
  }
}

static void show_rec(const term& t, std::ostringstream& o, unsigned depth);

static void show_atom(const term& t, std::ostringstream& o, unsigned depth) {
  switch (t->k) {
    case tg::var:
    case tg::unit_ty:
    case tg::tt:
    case tg::nat:
    case tg::zero:
    case tg::univ:
      show_rec(t, o, depth);
      break;
    case tg::axm:
      if (t->kids.empty()) {
        show_rec(t, o, depth);
        break;
      }
      [[fallthrough]];
    default:
      o << "(";
      show_rec(t, o, depth);
      o << ")";
  }
}

static std::string vn(unsigned depth, std::uint32_t idx) {
  // variables named outward: x0 is the outermost binder
  long level = static_cast<long>(depth) - 1 - static_cast<long>(idx);
  if (level < 0) return "!" + std::to_string(idx - depth);
  return "x" + std::to_string(level);
}

static void show_rec(const term& t, std::ostringstream& o, unsigned d) {
  switch (t->k) {
    case tg::var: o << vn(d, t->idx); break;
    case tg::unit_ty: o << "Unit"; break;
    case tg::tt: o << "tt"; break;
    case tg::pi:
      o << "Pi (" << vn(d + 1, 0) << " : ";
      show_rec(t->kids[0], o, d);
      o << "), ";
      show_rec(t->kids[1], o, d + 1);
      break;
    case tg::sigma:
      o << "Sig (" << vn(d + 1, 0) << " : ";
      show_rec(t->kids[0], o, d);
      o << "), ";
      show_rec(t->kids[1], o, d + 1);
      break;
    case tg::lam:
      o << "fun (" << vn(d + 1, 0) << " : ";
      show_rec(t->kids[0], o, d);
      o << ") => ";
      show_rec(t->kids[1], o, d + 1);
      break;
    case tg::app:
      if (t->kids[0]->k == tg::app || t->kids[0]->k == tg::var) {
        show_rec(t->kids[0], o, d);
      } else {
        show_atom(t->kids[0], o, d);
      }
      o << " ";
      show_atom(t->kids[1], o, d);
      break;
    case tg::pr:
      o << "pair ";
      show_atom(t->kids[0], o, d);
      o << " ";
      show_atom(t->kids[1], o, d);
      break;
    case tg::fst_:
      o << "fst ";
      show_atom(t->kids[0], o, d);
      break;
    case tg::snd_:
      o << "snd ";
      show_atom(t->kids[0], o, d);
      break;
    case tg::id:
      o << "Id ";
      show_atom(t->kids[0], o, d);
      o << " ";
      show_atom(t->kids[1], o, d);
      o << " ";
      show_atom(t->kids[2], o, d);
      break;
    case tg::refl:
      o << "refl ";
      show_atom(t->kids[0], o, d);
      break;
    case tg::jelim: {
      o << "J (fun (" << vn(d + 3, 2) << " " << vn(d + 3, 1) << " "
        << vn(d + 3, 0) << ") => ";
      show_rec(t->kids[0], o, d + 3);
      o << ") (fun (" << vn(d + 1, 0) << ") => ";
      show_rec(t->kids[1], o, d + 1);
      o << ") ";
      show_atom(t->kids[2], o, d);
      o << " ";
      show_atom(t->kids[3], o, d);
      o << " ";
      show_atom(t->kids[4], o, d);
      break;
    }
    case tg::nat: o << "Nat"; break;
    case tg::zero: o << "zero"; break;
    case tg::succ:
      o << "succ ";
      show_atom(t->kids[0], o, d);
      break;
    case tg::natind:
      o << "natind (fun (" << vn(d + 1, 0) << ") => ";
      show_rec(t->kids[0], o, d + 1);
      o << ") ";
      show_atom(t->kids[1], o, d);
      o << " (fun (" << vn(d + 2, 1) << " " << vn(d + 2, 0) << ") => ";
      show_rec(t->kids[2], o, d + 2);
      o << ") ";
      show_atom(t->kids[3], o, d);
      break;
    case tg::univ: o << "U" << t->idx; break;
    case tg::el:
      o << "El ";
      show_atom(t->kids[0], o, d);
      break;
    case tg::cunit: o << "cunit " << t->idx; break;
    case tg::csigma:
      o << "csigma " << t->idx << " ";
      show_atom(t->kids[0], o, d);
      o << " ";
      show_atom(t->kids[1], o, d);
      break;
    case tg::cpi:
      o << "cpi " << t->idx << " ";
      show_atom(t->kids[0], o, d);
      o << " ";
      show_atom(t->kids[1], o, d);
      break;
    case tg::cid:
      o << "cid " << t->idx << " ";
      show_atom(t->kids[0], o, d);
      o << " ";
      show_atom(t->kids[1], o, d);
      o << " ";
      show_atom(t->kids[2], o, d);
      break;
    case tg::cnat: o << "cnat " << t->idx; break;
    case tg::up:
      o << "up " << t->idx << " ";
      show_atom(t->kids[0], o, d);
      break;
    case tg::axm:
      o << ax_name(t->ax, t->idx);
      if (t->ax == axk::funext && t->kids.size() == 5) {
        o << " ";
        show_atom(t->kids[0], o, d);
        o << " (fun (" << vn(d + 1, 0) << ") => ";
        show_rec(t->kids[1], o, d + 1);
        o << ")";
        for (std::size_t i = 2; i < 5; ++i) {
          o << " ";
          show_atom(t->kids[i], o, d);
        }
        break;
      }
      for (auto& k : t->kids) {
        o << " ";
        show_atom(k, o, d);
      }
      break;
  }
}

std::string show(const term& t) {
  std::ostringstream o;
  show_rec(t, o, 0);
  return o.str();
}

} // namespace fibcat
