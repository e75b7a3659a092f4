#include "qsheaf/expr.hpp"

#include <algorithm>
#include <numeric>

#include "qsheaf/bott.hpp"

namespace qsheaf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join_generators(const std::vector<Generator>& gens) {
  if (gens.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) s += " + ";
    s += gens[k].to_string();
  }
  return s;
}

}  // namespace

SheafExpr::SheafExpr(Quadric q, Node n)
    : quadric_(std::make_shared<const Quadric>(q)), node_(std::make_shared<const Node>(std::move(n))) {}

SheafExpr SheafExpr::atom(Quadric q, std::vector<Generator> generators) {
  for (const auto& g : generators) {
    if (g.kind == GeneratorKind::Spinor && !q.valid_label(g.label)) {
      throw StructuralError("spinor label " + qsheaf::to_string(g.label) + " is invalid on Q" +
                            std::to_string(q.n()));
    }
    if (g.kind == GeneratorKind::Skyscraper && g.length < 1) {
      throw StructuralError("skyscraper length must be >= 1");
    }
  }
  std::sort(generators.begin(), generators.end());
  return SheafExpr(q, node::Atom{std::move(generators)});
}

SheafExpr SheafExpr::sum(std::vector<SheafExpr> terms) {
  if (terms.empty()) throw StructuralError("empty sum");
  const Quadric q = terms.front().quadric();
  for (const auto& t : terms) {
    if (t.quadric() != q) throw StructuralError("sum mixes quadric dimensions");
  }
  if (terms.size() == 1) return terms.front();
  return SheafExpr(q, node::Sum{std::move(terms)});
}

SheafExpr SheafExpr::twist(SheafExpr child, int k) {
  const Quadric q = child.quadric();
  return SheafExpr(q, node::Twist{std::move(child), k});
}

SheafExpr SheafExpr::quotient(SheafExpr sub, SheafExpr mid) {
  if (sub.quadric() != mid.quadric()) throw StructuralError("quotient mixes quadric dimensions");
  if (sub.rank() > mid.rank()) {
    throw StructuralError("quotient of rank " + std::to_string(mid.rank()) + " by rank " +
                          std::to_string(sub.rank()) + " is not a cokernel of an injection");
  }
  const Quadric q = mid.quadric();
  return SheafExpr(q, node::Quotient{std::move(sub), std::move(mid)});
}

SheafExpr SheafExpr::restrict_to_hyperplane(SheafExpr child) {
  const int n = child.quadric().n();
  if (n <= 2) throw StructuralError("no hyperplane section of Q2 in scope");
  return SheafExpr(Quadric(n - 1), node::Restrict{std::move(child)});
}

bool SheafExpr::is_atom() const noexcept { return std::holds_alternative<node::Atom>(*node_); }

const node::Atom* SheafExpr::as_atom() const noexcept { return std::get_if<node::Atom>(node_.get()); }

Dim SheafExpr::rank() const {
  const Quadric& q = quadric();
  return std::visit(
      overloaded{
          [&](const node::Atom& a) {
            Dim r = 0;
            for (const auto& g : a.generators) r += g.rank(q);
            return r;
          },
          [](const node::Sum& s) {
            Dim r = 0;
            for (const auto& t : s.terms) r += t.rank();
            return r;
          },
          [](const node::Twist& t) { return t.child.rank(); },
          [](const node::Quotient& x) { return x.mid.rank() - x.sub.rank(); },
          [](const node::Restrict& r) { return r.child.rank(); },
      },
      node());
}

int SheafExpr::depth() const {
  return std::visit(overloaded{
                        [](const node::Atom&) { return 0; },
                        [](const node::Sum& s) {
                          int d = 0;
                          for (const auto& t : s.terms) d = std::max(d, t.depth());
                          return 1 + d;
                        },
                        [](const node::Twist& t) { return 1 + t.child.depth(); },
                        [](const node::Quotient& x) {
                          return 1 + std::max(x.sub.depth(), x.mid.depth());
                        },
                        [](const node::Restrict& r) { return 1 + r.child.depth(); },
                    },
                    node());
}

int SheafExpr::max_abs_twist() const {
  return std::visit(overloaded{
                        [](const node::Atom& a) {
                          int m = 0;
                          for (const auto& g : a.generators) m = std::max(m, std::abs(g.twist));
                          return m;
                        },
                        [](const node::Sum& s) {
                          int m = 0;
                          for (const auto& t : s.terms) m = std::max(m, t.max_abs_twist());
                          return m;
                        },
                        [](const node::Twist& t) { return t.child.max_abs_twist() + std::abs(t.k); },
                        [](const node::Quotient& x) {
                          return std::max(x.sub.max_abs_twist(), x.mid.max_abs_twist());
                        },
                        [](const node::Restrict& r) { return r.child.max_abs_twist(); },
                    },
                    node());
}

bool SheafExpr::finite_support() const {
  return std::visit(overloaded{
                        [](const node::Atom& a) {
                          return std::all_of(a.generators.begin(), a.generators.end(), [](const Generator& g) {
                            return g.kind == GeneratorKind::Skyscraper;
                          });
                        },
                        [](const node::Sum& s) {
                          return std::all_of(s.terms.begin(), s.terms.end(),
                                             [](const SheafExpr& t) { return t.finite_support(); });
                        },
                        [](const node::Twist& t) { return t.child.finite_support(); },
                        [](const node::Quotient& x) { return x.mid.finite_support(); },
                        [](const node::Restrict& r) { return r.child.finite_support(); },
                    },
                    node());
}

bool SheafExpr::is_split() const {
  return std::visit(overloaded{
                        [](const node::Atom&) { return true; },
                        [](const node::Sum& s) {
                          return std::all_of(s.terms.begin(), s.terms.end(),
                                             [](const SheafExpr& t) { return t.is_split(); });
                        },
                        [](const node::Twist& t) { return t.child.is_split(); },
                        [](const node::Quotient&) { return false; },
                        [](const node::Restrict&) { return false; },
                    },
                    node());
}

std::vector<Generator> SheafExpr::split_generators() const {
  std::vector<Generator> out;
  std::visit(overloaded{
                 [&](const node::Atom& a) { out = a.generators; },
                 [&](const node::Sum& s) {
                   for (const auto& t : s.terms) {
                     auto g = t.split_generators();
                     out.insert(out.end(), g.begin(), g.end());
                   }
                 },
                 [&](const node::Twist& t) {
                   for (const auto& g : t.child.split_generators()) out.push_back(g.twisted(t.k));
                 },
                 [&](const node::Quotient&) { throw StructuralError("quotient is not a split expression"); },
                 [&](const node::Restrict&) { throw StructuralError("restriction is not a split expression"); },
             },
             node());
  std::sort(out.begin(), out.end());
  return out;
}

std::string SheafExpr::body() const {
  return std::visit(overloaded{
                        [](const node::Atom& a) { return join_generators(a.generators); },
                        [](const node::Sum& s) {
                          std::string r;
                          for (std::size_t k = 0; k < s.terms.size(); ++k) {
                            if (k) r += " + ";
                            r += s.terms[k].body();
                          }
                          return r;
                        },
                        [](const node::Twist& t) {
                          return "(" + t.child.body() + ")(" + std::to_string(t.k) + ")";
                        },
                        [](const node::Quotient& x) {
                          return "quot(" + x.sub.body() + ", " + x.mid.body() + ")";
                        },
                        [](const node::Restrict& r) { return "res(" + r.child.body() + ")"; },
                    },
                    node());
}

std::string SheafExpr::to_string() const { return "Q" + std::to_string(quadric().n()) + ": " + body(); }

namespace {

SheafExpr normalize_twisted(const SheafExpr& e, int k) {
  const Quadric& q = e.quadric();
  return std::visit(
      overloaded{
          [&](const node::Atom& a) {
            std::vector<Generator> g;
            g.reserve(a.generators.size());
            for (const auto& x : a.generators) g.push_back(x.twisted(k));
            return SheafExpr::atom(q, std::move(g));
          },
          [&](const node::Sum& s) {
            std::vector<Generator> atoms;
            std::vector<SheafExpr> rest;
            auto absorb = [&](const SheafExpr& t, auto& self) -> void {
              if (const auto* a = t.as_atom()) {
                atoms.insert(atoms.end(), a->generators.begin(), a->generators.end());
              } else if (const auto* inner = std::get_if<node::Sum>(&t.node())) {
                for (const auto& u : inner->terms) self(u, self);
              } else {
                rest.push_back(t);
              }
            };
            for (const auto& t : s.terms) absorb(normalize_twisted(t, k), absorb);
            std::sort(rest.begin(), rest.end(),
                      [](const SheafExpr& a, const SheafExpr& b) { return a.body() < b.body(); });
            std::vector<SheafExpr> terms;
            if (!atoms.empty() || rest.empty()) terms.push_back(SheafExpr::atom(q, std::move(atoms)));
            terms.insert(terms.end(), rest.begin(), rest.end());
            return SheafExpr::sum(std::move(terms));
          },
          [&](const node::Twist& t) { return normalize_twisted(t.child, k + t.k); },
          [&](const node::Quotient& x) {
            return SheafExpr::quotient(normalize_twisted(x.sub, k), normalize_twisted(x.mid, k));
          },
          [&](const node::Restrict& r) {
            return SheafExpr::restrict_to_hyperplane(normalize_twisted(r.child, k));
          },
      },
      e.node());
}

SheafExpr restrict_pushed(const SheafExpr& e) {
  const Quadric& q = e.quadric();
  return std::visit(
      overloaded{
          [&](const node::Atom& a) {
            std::vector<Generator> g;
            for (const auto& x : a.generators) {
              auto r = restrict_generator(q, x);
              g.insert(g.end(), r.begin(), r.end());
            }
            return SheafExpr::atom(Quadric(q.n() - 1), std::move(g));
          },
          [&](const node::Sum& s) {
            std::vector<SheafExpr> t;
            for (const auto& x : s.terms) t.push_back(restrict_pushed(x));
            return SheafExpr::sum(std::move(t));
          },
          [&](const node::Twist& t) { return SheafExpr::twist(restrict_pushed(t.child), t.k); },
          [&](const node::Quotient& x) {
            return SheafExpr::quotient(restrict_pushed(x.sub), restrict_pushed(x.mid));
          },
          [&](const node::Restrict& r) { return restrict_pushed(push_restrictions(r.child)); },
      },
      e.node());
}

SheafExpr push_impl(const SheafExpr& e) {
  return std::visit(
      overloaded{
          [&](const node::Atom&) { return e; },
          [&](const node::Sum& s) {
            std::vector<SheafExpr> t;
            for (const auto& x : s.terms) t.push_back(push_impl(x));
            return SheafExpr::sum(std::move(t));
          },
          [&](const node::Twist& t) { return SheafExpr::twist(push_impl(t.child), t.k); },
          [&](const node::Quotient& x) { return SheafExpr::quotient(push_impl(x.sub), push_impl(x.mid)); },
          [&](const node::Restrict& r) { return restrict_pushed(push_impl(r.child)); },
      },
      e.node());
}

}  // namespace

SheafExpr normalize(const SheafExpr& e) { return normalize_twisted(e, 0); }

SheafExpr push_restrictions(const SheafExpr& e) { return normalize(push_impl(e)); }

SheafExpr split_dual(const SheafExpr& e) {
  const auto rule = bott::duality_rule(e.quadric().n());
  std::vector<Generator> out;
  for (const auto& g : e.split_generators()) out.push_back(rule.dual(g));
  return SheafExpr::atom(e.quadric(), std::move(out));
}

std::vector<Generator> restrict_generator(const Quadric& q, const Generator& g) {
  if (q.n() <= 2) throw StructuralError("no hyperplane section of Q2 in scope");
  switch (g.kind) {
    case GeneratorKind::Line: return {g};
    case GeneratorKind::Skyscraper: return {};
    case GeneratorKind::Spinor:
      if (q.even()) return {Generator::spinor(SpinorLabel::Single, g.twist)};
      return {Generator::spinor(SpinorLabel::First, g.twist), Generator::spinor(SpinorLabel::Second, g.twist)};
  }
  return {};
}

Dim first_chern(const SheafExpr& e) {
  const Quadric& q = e.quadric();
  return std::visit(
      overloaded{
          [&](const node::Atom& a) {
            Dim c = 0;
            for (const auto& g : a.generators) {
              if (g.kind == GeneratorKind::Line) {
                c += g.twist;
              } else if (g.kind == GeneratorKind::Spinor) {
                const Dim r = q.spinor_rank();
                if (r % 2 != 0) throw StructuralError("first Chern class of a Q2 spinor is not a multiple of H");
                c += r * g.twist + r / 2;
              }
            }
            return c;
          },
          [](const node::Sum& s) {
            Dim c = 0;
            for (const auto& t : s.terms) c += first_chern(t);
            return c;
          },
          [](const node::Twist& t) { return first_chern(t.child) + t.child.rank() * t.k; },
          [](const node::Quotient& x) { return first_chern(x.mid) - first_chern(x.sub); },
          [](const node::Restrict& r) { return first_chern(r.child); },
      },
      e.node());
}

}  // namespace qsheaf
