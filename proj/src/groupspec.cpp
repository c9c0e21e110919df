#include "ibislin/groupspec.hpp"

#include <sstream>

namespace ibislin {

bool GroupSpec::operator==(const GroupSpec& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::gamma_metacyclic:
      return p == o.p && e == o.e && n == o.n && h_exp == o.h_exp && b_dlog == o.b_dlog;
    case Kind::singer:
      return p == o.p && e == o.e && n == o.n;
    case Kind::explicit_permutation:
      return omega == o.omega && gens == o.gens;
    case Kind::prop16:
      return r == o.r && variant == o.variant && c_sel == o.c_sel;
    case Kind::wreath_prop17:
      return p == o.p && e == o.e && k_exp == o.k_exp;
    case Kind::affine:
      return inner && o.inner && *inner == *o.inner;
  }
  return false;
}

std::string GroupSpec::print() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::gamma_metacyclic:
      os << "gamma{p=" << p << ",e=" << e << ",n=" << n << ",h=" << h_exp << ",b=" << b_dlog << "}";
      break;
    case Kind::singer:
      os << "singer{p=" << p << ",e=" << e << ",n=" << n << "}";
      break;
    case Kind::explicit_permutation:
      os << "perm{omega=" << omega;
      for (const Perm& g : gens) os << ';' << perm_to_string(g);
      os << "}";
      break;
    case Kind::prop16:
      os << "prop16{r=" << r << ",variant=" << (variant == Prop16Variant::P1 ? "P1" : "P2")
         << ",c=" << c_sel << "}";
      break;
    case Kind::wreath_prop17:
      os << "prop17{p=" << p << ",e=" << e << ",k=" << k_exp << "}";
      break;
    case Kind::affine:
      os << "affine{" << (inner ? inner->print() : "?") << "}";
      break;
  }
  return os.str();
}

namespace {

// key=value pairs split on commas; values have no braces.
bool parse_kv(const std::string& body, std::vector<std::pair<std::string, std::string>>& out) {
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) return false;
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return true;
}

std::optional<u64> get_u64(const std::vector<std::pair<std::string, std::string>>& kv,
                           const std::string& key) {
  for (const auto& [k, v] : kv)
    if (k == key) {
      try {
        std::size_t pos = 0;
        u64 x = std::stoull(v, &pos);
        if (pos != v.size()) return std::nullopt;
        return x;
      } catch (...) {
        return std::nullopt;
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<GroupSpec> GroupSpec::parse(const std::string& text) {
  auto l = text.find('{');
  if (l == std::string::npos || text.back() != '}') return std::nullopt;
  std::string head = text.substr(0, l);
  std::string body = text.substr(l + 1, text.size() - l - 2);
  GroupSpec s;
  std::vector<std::pair<std::string, std::string>> kv;
  if (head == "gamma") {
    s.kind = Kind::gamma_metacyclic;
    if (!parse_kv(body, kv)) return std::nullopt;
    auto p = get_u64(kv, "p"), e = get_u64(kv, "e"), n = get_u64(kv, "n"), h = get_u64(kv, "h"),
         b = get_u64(kv, "b");
    if (!p || !e || !n || !h || !b) return std::nullopt;
    s.p = *p; s.e = *e; s.n = *n; s.h_exp = *h; s.b_dlog = *b;
  } else if (head == "singer") {
    s.kind = Kind::singer;
    if (!parse_kv(body, kv)) return std::nullopt;
    auto p = get_u64(kv, "p"), e = get_u64(kv, "e"), n = get_u64(kv, "n");
    if (!p || !e || !n) return std::nullopt;
    s.p = *p; s.e = *e; s.n = *n;
  } else if (head == "perm") {
    s.kind = Kind::explicit_permutation;
    std::istringstream is(body);
    std::string part;
    bool first = true;
    s.gens.clear();
    while (std::getline(is, part, ';')) {
      if (first) {
        std::vector<std::pair<std::string, std::string>> kv2;
        if (!parse_kv(part, kv2)) return std::nullopt;
        auto om = get_u64(kv2, "omega");
        if (!om || *om == 0) return std::nullopt;
        s.omega = static_cast<int>(*om);
        first = false;
      } else {
        auto g = perm_from_string(part);
        if (!g || static_cast<int>(g->size()) != s.omega) return std::nullopt;
        s.gens.push_back(std::move(*g));
      }
    }
    if (first) return std::nullopt;
  } else if (head == "prop16") {
    s.kind = Kind::prop16;
    if (!parse_kv(body, kv)) return std::nullopt;
    auto r = get_u64(kv, "r"), c = get_u64(kv, "c");
    std::string var;
    for (const auto& [k, v] : kv)
      if (k == "variant") var = v;
    if (!r || !c || (var != "P1" && var != "P2")) return std::nullopt;
    s.r = *r;
    s.c_sel = static_cast<unsigned>(*c);
    s.variant = (var == "P1") ? Prop16Variant::P1 : Prop16Variant::P2;
  } else if (head == "prop17") {
    s.kind = Kind::wreath_prop17;
    if (!parse_kv(body, kv)) return std::nullopt;
    auto p = get_u64(kv, "p"), e = get_u64(kv, "e"), k = get_u64(kv, "k");
    if (!p || !e || !k) return std::nullopt;
    s.p = *p; s.e = *e; s.k_exp = *k;
  } else if (head == "affine") {
    s.kind = Kind::affine;
    auto in = parse(body);
    if (!in) return std::nullopt;
    s.inner = std::make_shared<GroupSpec>(std::move(*in));
  } else {
    return std::nullopt;
  }
  return s;
}

namespace {

ActionGroup singer_action(const FieldTower& t) {
  const u64 M = t.group_order();
  if (M > 4096) throw BudgetExceeded("singer: field too large for explicit action");
  Perm shift(M);
  for (u64 k = 0; k < M; ++k) shift[k] = static_cast<int>((k + 1) % M);
  return closure(static_cast<int>(M), {shift});
}

}  // namespace

BuiltGroup build_group(const GroupSpec& spec, u64 closure_budget) {
  BuiltGroup out;
  switch (spec.kind) {
    case GroupSpec::Kind::gamma_metacyclic: {
      FieldTower t = FieldTower::make(spec.p, static_cast<unsigned>(spec.e),
                                      static_cast<unsigned>(spec.n));
      out.meta = make_metacyclic(t, spec.h_exp, spec.b_dlog);
      try {
        out.action = as_action_group(*out.meta, closure_budget);
      } catch (const BudgetExceeded&) {
      }
      break;
    }
    case GroupSpec::Kind::singer: {
      FieldTower t = FieldTower::make(spec.p, static_cast<unsigned>(spec.e),
                                      static_cast<unsigned>(spec.n));
      out.action = singer_action(t);
      break;
    }
    case GroupSpec::Kind::explicit_permutation:
      out.action = closure(spec.omega, spec.gens, closure_budget);
      break;
    case GroupSpec::Kind::prop16: {
      out.meta = build_prop16(spec.r, spec.variant, spec.c_sel);
      out.action = as_action_group(*out.meta, closure_budget);
      break;
    }
    case GroupSpec::Kind::wreath_prop17: {
      FieldTower t = FieldTower::make(spec.p, static_cast<unsigned>(spec.e), 1);
      out.wreath = build_prop17(t, spec.k_exp, {}, closure_budget);
      out.action = out.wreath->group;
      break;
    }
    case GroupSpec::Kind::affine: {
      if (!spec.inner) throw Error("affine: missing inner spec");
      if (spec.inner->kind != GroupSpec::Kind::gamma_metacyclic &&
          spec.inner->kind != GroupSpec::Kind::singer)
        throw Error("affine: inner spec must be gamma or singer (field structure required)");
      FieldTower t = FieldTower::make(spec.inner->p, static_cast<unsigned>(spec.inner->e),
                                      static_cast<unsigned>(spec.inner->n));
      BuiltGroup in = build_group(*spec.inner, closure_budget);
      if (!in.action) throw BudgetExceeded("affine: inner action over budget");
      out.action = affine_wrap(*in.action, additive_table(t), closure_budget);
      break;
    }
  }
  return out;
}

}  // namespace ibislin
